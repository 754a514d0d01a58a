//! A built-in catalog of worked counterexamples and checkpoints.
//!
//! Each entry carries its own universe, input text, and expected verdicts,
//! and [`verify_catalog`] reproduces the expectations with the engine. The
//! entries pin down the boundary of the symmetry-implies-distinction
//! heuristic: conjugate self-duality does not force distinction, not even
//! together with rigidity or imprimitivity.

use crate::basechange::{bc_class, BcTag};
use crate::distinction::{induced_distinction, is_ladder, ladder_distinction, DistinctionTag};
use crate::dsl::{parse_multisegment, parse_rep};
use crate::model::{LineSpec, Sign, Universe};

/// What a catalog entry feeds to the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogInput {
    MultiSegment(&'static str),
    Rep(&'static str),
}

/// One expected verdict of a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpectedCheck {
    /// The (concatenated) multisegment is conjugate self-dual, or not.
    ConjSelfDual(bool),
    IsLadder(bool),
    /// Exact base-change class tag.
    BcTag(BcTag),
    /// The class is exactly one of the two single images.
    BcExactlyOneImage,
    /// Exact ladder verdict.
    LadderVerdict(DistinctionTag),
    /// Induced-product verdict under the given twist.
    Induced {
        twist: bool,
        distinguished: bool,
    },
    /// Ladder verdict of one factor of a product (0-based index, twist 0).
    FactorVerdict {
        index: usize,
        tag: DistinctionTag,
    },
}

/// A self-contained catalog entry.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub universe: Universe,
    pub input: CatalogInput,
    pub expected: Vec<ExpectedCheck>,
    /// What the entry demonstrates, including facts recorded from the
    /// literature rather than recomputed here.
    pub provenance: &'static str,
}

/// The four shipped entries.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            id: "gl3-trivial-times-twisted-cuspidal",
            universe: Universe::new(vec![
                LineSpec::self_dual("one", 1, Sign::Plus, 0),
                LineSpec::self_dual("rho2", 2, Sign::Plus, 0),
            ])
            .expect("catalog universe"),
            input: CatalogInput::Rep("([0]@one)*([0]@rho2!chi)"),
            expected: vec![
                ExpectedCheck::ConjSelfDual(true),
                ExpectedCheck::Induced {
                    twist: false,
                    distinguished: false,
                },
                ExpectedCheck::Induced {
                    twist: true,
                    distinguished: false,
                },
            ],
            provenance: "GL(3) product of the trivial character with a chi-twisted \
                         distinguished cuspidal of GL(2). Conjugate self-dual with \
                         trivial central character on F*, yet neither it nor its \
                         chi-twist is H-distinguished: the symmetry condition alone \
                         does not imply distinction outside the rigid case.",
        },
        CatalogEntry {
            id: "unstable-image-not-distinguished-ladder",
            universe: Universe::new(vec![LineSpec::self_dual("sigma", 2, Sign::Plus, 0)])
                .expect("catalog universe"),
            input: CatalogInput::MultiSegment("[-1,0]@sigma+[0,1]@sigma"),
            expected: vec![
                ExpectedCheck::ConjSelfDual(true),
                ExpectedCheck::IsLadder(true),
                ExpectedCheck::LadderVerdict(DistinctionTag::OnlyExponent(1)),
                ExpectedCheck::BcTag(BcTag::Both),
            ],
            provenance: "Two-segment proper ladder on a conjugate self-dual cuspidal \
                         line with distinction exponent 0. It lies in the image of the \
                         unstable base-change map but is not H-distinguished; its \
                         chi-twist is. Base-change membership alone does not pick the \
                         right twist.",
        },
        CatalogEntry {
            id: "simplest-non-distinguished-product",
            universe: Universe::new(vec![LineSpec::self_dual("one", 1, Sign::Plus, 0)])
                .expect("catalog universe"),
            input: CatalogInput::Rep("([-1/2]@one+[1/2]@one)*([-1/2,1/2]@one)"),
            expected: vec![
                ExpectedCheck::ConjSelfDual(true),
                ExpectedCheck::Induced {
                    twist: false,
                    distinguished: false,
                },
                ExpectedCheck::Induced {
                    twist: true,
                    distinguished: false,
                },
                ExpectedCheck::FactorVerdict {
                    index: 0,
                    tag: DistinctionTag::OnlyExponent(0),
                },
                ExpectedCheck::FactorVerdict {
                    index: 1,
                    tag: DistinctionTag::OnlyExponent(1),
                },
            ],
            provenance: "The simplest conjugate self-dual product of mutually unlinked \
                         proper ladders that is distinguished for neither twist: the \
                         two factors demand opposite exponents, so no single twist \
                         works for both.",
        },
        CatalogEntry {
            id: "imprimitive-five-segment",
            universe: Universe::new(vec![LineSpec::self_dual("sigma", 2, Sign::Plus, 0)])
                .expect("catalog universe"),
            input: CatalogInput::MultiSegment(
                "[1/2,3/2]@sigma+[-1/2,7/2]@sigma+[-3/2,-1/2]@sigma+[-5/2,5/2]@sigma+[-7/2,1/2]@sigma",
            ),
            expected: vec![
                ExpectedCheck::ConjSelfDual(true),
                ExpectedCheck::IsLadder(false),
                ExpectedCheck::BcExactlyOneImage,
            ],
            provenance: "Five-segment conjugate self-dual multisegment on a degree-2 \
                         self-dual line, lying in exactly one base-change image. \
                         Recorded facts, not recomputed here: the representation is \
                         imprimitive (every way of splitting off one or two segments \
                         induces reducibly), and it is neither H- nor (H,omega)-\
                         distinguished. Imprimitivity does not rescue the symmetry \
                         heuristic.",
        },
    ]
}

/// Result of replaying one expected check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub got: String,
}

/// Result of verifying one entry.
#[derive(Debug, Clone)]
pub struct EntryResult {
    pub id: &'static str,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

/// Replays every entry against the engine.
pub fn verify_catalog() -> Vec<EntryResult> {
    catalog().iter().map(verify_entry).collect()
}

fn verify_entry(entry: &CatalogEntry) -> EntryResult {
    let mut checks = Vec::new();
    let u = &entry.universe;

    let (mseg, rep) = match entry.input {
        CatalogInput::MultiSegment(text) => {
            let m = parse_multisegment(text, u).expect("catalog input parses");
            (m, None)
        }
        CatalogInput::Rep(text) => {
            let r = parse_rep(text, u).expect("catalog input parses");
            (r.concatenation(), Some(r))
        }
    };

    for check in &entry.expected {
        let result = match check {
            ExpectedCheck::ConjSelfDual(expected) => {
                let got = mseg.is_conj_self_dual(u).expect("resolvable lines");
                CheckResult {
                    name: "conj-self-dual".to_string(),
                    pass: got == *expected,
                    expected: expected.to_string(),
                    got: got.to_string(),
                }
            }
            ExpectedCheck::IsLadder(expected) => {
                let got = is_ladder(&mseg);
                CheckResult {
                    name: "is-ladder".to_string(),
                    pass: got == *expected,
                    expected: expected.to_string(),
                    got: got.to_string(),
                }
            }
            ExpectedCheck::BcTag(expected) => {
                let got = bc_class(&mseg, u).expect("classifiable").tag;
                CheckResult {
                    name: "bc-class".to_string(),
                    pass: got == *expected,
                    expected: expected.to_string(),
                    got: got.to_string(),
                }
            }
            ExpectedCheck::BcExactlyOneImage => {
                let got = bc_class(&mseg, u).expect("classifiable").tag;
                let pass = matches!(got, BcTag::StableOnly | BcTag::UnstableOnly);
                CheckResult {
                    name: "bc-exactly-one-image".to_string(),
                    pass,
                    expected: "StableOnly or UnstableOnly".to_string(),
                    got: got.to_string(),
                }
            }
            ExpectedCheck::LadderVerdict(expected) => {
                let got = ladder_distinction(&mseg, u).expect("ladder").tag;
                CheckResult {
                    name: "ladder-distinction".to_string(),
                    pass: got == *expected,
                    expected: expected.to_string(),
                    got: got.to_string(),
                }
            }
            ExpectedCheck::Induced {
                twist,
                distinguished,
            } => {
                let rep = rep.as_ref().expect("rep input");
                let got = induced_distinction(rep, u, *twist)
                    .expect("hypotheses hold")
                    .is_distinguished();
                CheckResult {
                    name: format!("induced-distinction(twist={})", u8::from(*twist)),
                    pass: got == *distinguished,
                    expected: distinguished.to_string(),
                    got: got.to_string(),
                }
            }
            ExpectedCheck::FactorVerdict { index, tag } => {
                let rep = rep.as_ref().expect("rep input");
                let got = ladder_distinction(&rep.factors()[*index], u)
                    .expect("factor is a ladder")
                    .tag;
                CheckResult {
                    name: format!("factor[{index}]-distinction"),
                    pass: got == *tag,
                    expected: tag.to_string(),
                    got: got.to_string(),
                }
            }
        };
        checks.push(result);
    }

    EntryResult {
        id: entry.id,
        pass: checks.iter().all(|c| c.pass),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_verifies() {
        for entry in verify_catalog() {
            assert!(entry.pass, "entry {} failed: {:#?}", entry.id, entry.checks);
        }
    }

    #[test]
    fn there_are_exactly_four_entries() {
        assert_eq!(catalog().len(), 4);
    }

    #[test]
    fn five_segment_entry_is_stable_only_with_positive_eta() {
        // The exactly-one-image check is the contract; with the shipped
        // eta0 = +1 the single image is specifically the stable one.
        let entries = catalog();
        let theta = entries
            .iter()
            .find(|e| e.id == "imprimitive-five-segment")
            .unwrap();
        let CatalogInput::MultiSegment(text) = theta.input else {
            panic!("theta is a multisegment entry");
        };
        let m = parse_multisegment(text, &theta.universe).unwrap();
        assert_eq!(
            bc_class(&m, &theta.universe).unwrap().tag,
            BcTag::StableOnly
        );
    }

    #[test]
    fn catalog_inputs_round_trip_through_the_dsl() {
        for entry in catalog() {
            match entry.input {
                CatalogInput::MultiSegment(text) => {
                    let m = parse_multisegment(text, &entry.universe).unwrap();
                    let again =
                        parse_multisegment(&crate::dsl::format_multisegment(&m), &entry.universe)
                            .unwrap();
                    assert_eq!(m, again);
                }
                CatalogInput::Rep(text) => {
                    let r = parse_rep(text, &entry.universe).unwrap();
                    let again = parse_rep(&crate::dsl::format_rep(&r), &entry.universe).unwrap();
                    assert_eq!(r, again);
                }
            }
        }
    }
}
