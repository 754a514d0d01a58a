//! Distinction verdicts: whether a representation carries an `H`-invariant
//! functional (`H = GL_n(F)`), possibly twisted by the quadratic character
//! `ω` attached to `E/F`.
//!
//! Three layers are decided here:
//!
//! * `γ` of a rigid multisegment on a self-dual line, built from the line's
//!   distinction exponent and the lattice the multisegment lives on.
//! * Ladder multisegments: a conjugate self-dual ladder with `k` proper
//!   ladder factors and `t` segments is distinguished for both exponents
//!   when `k` is even, and exactly for the exponent `γ + t + 1 (mod 2)` when
//!   `k` is odd. [`rf_case`] cross-checks the verdict against the
//!   base-change classification.
//! * Products of mutually unlinked proper ladders: distinguished iff the
//!   factors admit an involution pairing each factor with its conjugate
//!   dual, every fixed factor being `H`-distinguished itself.
//!
//! `(H, ω)`-distinction of `π` is decided as `H`-distinction of `χ₋₁π`,
//! which is why the twist enters as a flag rather than a separate code path.

use std::fmt;

use thiserror::Error;

use crate::basechange::{bc_class, BaseChangeClass, BcTag};
use crate::model::{Lattice, ModelError, MultiSegment, RepSpec, Universe};

/// Errors from the distinction classifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistinctionError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("multisegment is not a ladder")]
    NotALadder,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(Hypothesis),
    #[error("internal consistency violation: {0}")]
    ConsistencyViolation(String),
}

/// Which hypothesis of the induced-product criterion failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    NotProperLadder { index: usize },
    NotMutuallyUnlinked { i: usize, j: usize },
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::NotProperLadder { index } => {
                write!(f, "factor {index} is not a proper ladder")
            }
            Hypothesis::NotMutuallyUnlinked { i, j } => {
                write!(f, "factors {i} and {j} are not mutually unlinked")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Gamma
// ---------------------------------------------------------------------------

/// The `{0,1}`-valued invariant of the effective line a rigid multisegment
/// lives on: the line's distinction exponent on the integer lattice, its
/// flip on the half lattice (where the normalized self-dual point sits at
/// the half-shift of the multisegment's lattice).
pub fn gamma_of(m: &MultiSegment, universe: &Universe) -> Result<u8, ModelError> {
    let Some((line, lattice)) = m.rigid_line() else {
        return Err(ModelError::NotRigid);
    };
    let spec = universe.line(&line)?;
    let Some(a) = spec.dist_a() else {
        return Err(ModelError::NotSelfDualLine(line));
    };
    Ok(match lattice {
        Lattice::Integral => a,
        Lattice::Half => 1 - a,
    })
}

// ---------------------------------------------------------------------------
// Ladders
// ---------------------------------------------------------------------------

/// A ladder: rigid, with strictly decreasing beginnings and strictly
/// decreasing ends in canonical order. The empty multisegment counts.
pub fn is_ladder(m: &MultiSegment) -> bool {
    if !m.is_rigid() {
        return false;
    }
    m.segments()
        .windows(2)
        .all(|w| w[0].begin() > w[1].begin() && w[0].end() > w[1].end())
}

/// A proper ladder: a ladder in which each segment precedes the one before
/// it, so consecutive segments are linked.
pub fn is_proper_ladder(m: &MultiSegment) -> bool {
    is_ladder(m) && m.segments().windows(2).all(|w| w[1].precedes(&w[0]))
}

/// Splits a ladder into its proper ladder factors: the maximal runs of
/// consecutive linked segments. The decomposition is unique.
pub fn proper_ladder_factors(m: &MultiSegment) -> Result<Vec<MultiSegment>, DistinctionError> {
    if !is_ladder(m) {
        return Err(DistinctionError::NotALadder);
    }
    let mut factors = Vec::new();
    let mut current: Vec<_> = Vec::new();
    for seg in m.segments() {
        if let Some(prev) = current.last() {
            if !seg.precedes(prev) {
                factors.push(MultiSegment::new(std::mem::take(&mut current)));
            }
        }
        current.push(seg.clone());
    }
    if !current.is_empty() {
        factors.push(MultiSegment::new(current));
    }
    Ok(factors)
}

// ---------------------------------------------------------------------------
// Ladder distinction
// ---------------------------------------------------------------------------

/// Which distinction exponents a representation admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistinctionTag {
    /// Not conjugate self-dual, hence distinguished for neither exponent.
    NotConjSelfDual,
    /// Distinguished for both exponents (`H` and `(H,ω)`).
    BothExponents,
    /// Distinguished exactly for `ω^e`, `e ∈ {0,1}`.
    OnlyExponent(u8),
}

impl DistinctionTag {
    /// Whether the verdict admits the exponent `e`.
    pub fn admits_exponent(self, e: u8) -> bool {
        match self {
            DistinctionTag::NotConjSelfDual => false,
            DistinctionTag::BothExponents => true,
            DistinctionTag::OnlyExponent(x) => x == e,
        }
    }
}

impl fmt::Display for DistinctionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistinctionTag::NotConjSelfDual => write!(f, "NotConjSelfDual"),
            DistinctionTag::BothExponents => write!(f, "BothExponents"),
            DistinctionTag::OnlyExponent(e) => write!(f, "OnlyExponent({e})"),
        }
    }
}

/// A ladder verdict with the quantities that determined it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctionVerdict {
    pub tag: DistinctionTag,
    /// Number of proper ladder factors.
    pub k: usize,
    /// Number of segments.
    pub t: usize,
    /// `γ` of the effective line, when defined (nonempty, rigid, self-dual).
    pub gamma: Option<u8>,
}

/// Decides distinction for a ladder multisegment.
///
/// The empty ladder (`k = 0`, the trivial representation) is distinguished
/// for both exponents.
pub fn ladder_distinction(
    m: &MultiSegment,
    universe: &Universe,
) -> Result<DistinctionVerdict, DistinctionError> {
    if !is_ladder(m) {
        return Err(DistinctionError::NotALadder);
    }
    let k = proper_ladder_factors(m)?.len();
    let t = m.len();
    let gamma = gamma_of(m, universe).ok();
    if m.is_empty() {
        return Ok(DistinctionVerdict {
            tag: DistinctionTag::BothExponents,
            k,
            t,
            gamma,
        });
    }
    if !m.is_conj_self_dual(universe)? {
        return Ok(DistinctionVerdict {
            tag: DistinctionTag::NotConjSelfDual,
            k,
            t,
            gamma,
        });
    }
    // Conjugate self-dual and nonempty: the line is self-dual and rigid, so
    // gamma is defined.
    let gamma_val = match gamma {
        Some(g) => g,
        None => return Err(ModelError::NotRigid.into()),
    };
    let tag = if k % 2 == 0 {
        DistinctionTag::BothExponents
    } else {
        DistinctionTag::OnlyExponent(((gamma_val as usize + t + 1) % 2) as u8)
    };
    Ok(DistinctionVerdict { tag, k, t, gamma })
}

/// A ladder verdict cross-checked against the base-change classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RfCase {
    pub k: usize,
    pub t: usize,
    pub verdict: DistinctionVerdict,
    pub bc: BaseChangeClass,
}

/// Runs both classifiers on a nonempty ladder and asserts that they cohere:
///
/// * not conjugate self-dual on one side iff on the other;
/// * `k` even: distinguished for both exponents and in both images;
/// * `k` odd, `t` even: exponent `γ + 1` and in both images;
/// * `k` odd, `t` odd: exponent `γ` and in exactly one image.
///
/// A [`DistinctionError::ConsistencyViolation`] indicates a bug, never a
/// valid output.
pub fn rf_case(m: &MultiSegment, universe: &Universe) -> Result<RfCase, DistinctionError> {
    let verdict = ladder_distinction(m, universe)?;
    let bc = bc_class(m, universe)?;
    let fail = |msg: String| Err(DistinctionError::ConsistencyViolation(msg));
    match verdict.tag {
        DistinctionTag::NotConjSelfDual => {
            if bc.tag != BcTag::NotConjSelfDual {
                return fail(format!("verdict NotConjSelfDual but class {}", bc.tag));
            }
        }
        DistinctionTag::BothExponents => {
            if bc.tag != BcTag::Both {
                return fail(format!("k even but class {}", bc.tag));
            }
        }
        DistinctionTag::OnlyExponent(e) => {
            let gamma = verdict
                .gamma
                .expect("gamma is defined for conjugate self-dual ladders");
            if verdict.t % 2 == 0 {
                if e != (gamma + 1) % 2 {
                    return fail(format!("t even: exponent {e} but gamma {gamma}"));
                }
                if bc.tag != BcTag::Both {
                    return fail(format!("k odd, t even but class {}", bc.tag));
                }
            } else {
                if e != gamma {
                    return fail(format!("t odd: exponent {e} but gamma {gamma}"));
                }
                if bc.tag != BcTag::StableOnly && bc.tag != BcTag::UnstableOnly {
                    return fail(format!("k odd, t odd but class {}", bc.tag));
                }
            }
        }
    }
    Ok(RfCase {
        k: verdict.k,
        t: verdict.t,
        verdict,
        bc,
    })
}

// ---------------------------------------------------------------------------
// Products of proper ladders
// ---------------------------------------------------------------------------

/// True iff no segment of one factor is linked with a segment of another.
pub fn mutually_unlinked(factors: &[MultiSegment]) -> bool {
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i + 1..] {
            if pair_linked(a, b) {
                return false;
            }
        }
    }
    true
}

fn pair_linked(a: &MultiSegment, b: &MultiSegment) -> bool {
    a.segments()
        .iter()
        .any(|sa| b.segments().iter().any(|sb| sa.is_linked(sb)))
}

/// Why an induced product is not distinguished.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// Some factor isomorphism class does not occur with the same
    /// multiplicity as its conjugate-dual class, so the product is not
    /// conjugate self-dual.
    NotConjSelfDual { factor: usize },
    /// A factor is forced to be a fixed point of every candidate pairing but
    /// is not `H`-distinguished itself.
    UnpairedFixedFactorNotHDistinguished {
        factor: usize,
        verdict: DistinctionVerdict,
    },
}

impl Obstruction {
    pub fn code(&self) -> &'static str {
        match self {
            Obstruction::NotConjSelfDual { .. } => "NotConjSelfDual",
            Obstruction::UnpairedFixedFactorNotHDistinguished { .. } => {
                "UnpairedFixedFactorNotHDistinguished"
            }
        }
    }
}

/// Outcome for a product of mutually unlinked proper ladders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InducedVerdict {
    /// Distinguished, witnessed by an involution `w` on factor indices
    /// (0-based) pairing each factor with its conjugate dual.
    Distinguished {
        witness: Vec<usize>,
    },
    NotDistinguished {
        obstruction: Obstruction,
    },
}

impl InducedVerdict {
    pub fn is_distinguished(&self) -> bool {
        matches!(self, InducedVerdict::Distinguished { .. })
    }
}

/// Decides `H`-distinction (`twist = false`) or `(H,ω)`-distinction
/// (`twist = true`) for `π = π₁ × ⋯ × π_k` with mutually unlinked proper
/// ladder factors.
///
/// The hypotheses are enforced, not assumed: the criterion is false outside
/// them. The witness pairs lowest available indices first, so the reported
/// involution is canonical.
pub fn induced_distinction(
    rep: &RepSpec,
    universe: &Universe,
    twist: bool,
) -> Result<InducedVerdict, DistinctionError> {
    for (index, factor) in rep.factors().iter().enumerate() {
        if factor.is_empty() || !is_proper_ladder(factor) {
            return Err(DistinctionError::HypothesisViolated(
                Hypothesis::NotProperLadder { index },
            ));
        }
    }
    for i in 0..rep.factors().len() {
        for j in i + 1..rep.factors().len() {
            if pair_linked(&rep.factors()[i], &rep.factors()[j]) {
                return Err(DistinctionError::HypothesisViolated(
                    Hypothesis::NotMutuallyUnlinked { i, j },
                ));
            }
        }
    }

    // (H,ω)-distinction of π is H-distinction of χ₋₁π.
    let factors: Vec<MultiSegment> = if twist {
        rep.factors().iter().map(MultiSegment::chi_twist).collect()
    } else {
        rep.factors().to_vec()
    };
    let duals = factors
        .iter()
        .map(|f| f.conj_dual(universe))
        .collect::<Result<Vec<_>, _>>()?;

    let k = factors.len();
    let mut witness: Vec<Option<usize>> = vec![None; k];
    for i in 0..k {
        if witness[i].is_some() {
            continue;
        }
        let partner = (i + 1..k).find(|&j| witness[j].is_none() && factors[j] == duals[i]);
        match partner {
            Some(j) => {
                witness[i] = Some(j);
                witness[j] = Some(i);
            }
            None if duals[i] == factors[i] => {
                // Forced fixed point: the factor must be H-distinguished.
                let verdict = ladder_distinction(&factors[i], universe)?;
                if !verdict.tag.admits_exponent(0) {
                    return Ok(InducedVerdict::NotDistinguished {
                        obstruction: Obstruction::UnpairedFixedFactorNotHDistinguished {
                            factor: i,
                            verdict,
                        },
                    });
                }
                witness[i] = Some(i);
            }
            None => {
                return Ok(InducedVerdict::NotDistinguished {
                    obstruction: Obstruction::NotConjSelfDual { factor: i },
                });
            }
        }
    }

    let witness: Vec<usize> = witness.into_iter().map(|w| w.expect("total")).collect();
    debug_assert!((0..k).all(|i| witness[witness[i]] == i));
    debug_assert!((0..k).all(|i| factors[witness[i]] == duals[i]));
    Ok(InducedVerdict::Distinguished { witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{make_segment, HalfInt, LineId, LineSpec, Sign};

    fn one() -> Universe {
        Universe::single_self_line("one", 1, Sign::Plus, 0)
    }

    fn mseg(u: &Universe, parts: &[(&str, i32, i32)]) -> MultiSegment {
        parts
            .iter()
            .map(|&(l, b, e)| {
                make_segment(
                    u,
                    LineId::from_symbol(l).unwrap(),
                    HalfInt::from_doubled(b),
                    HalfInt::from_doubled(e),
                )
                .unwrap()
            })
            .collect()
    }

    #[test]
    fn gamma_depends_on_lattice_and_twist() {
        let u = one();
        assert_eq!(gamma_of(&mseg(&u, &[("one", 0, 0)]), &u).unwrap(), 0);
        assert_eq!(gamma_of(&mseg(&u, &[("one", -1, 1)]), &u).unwrap(), 1);
        assert_eq!(gamma_of(&mseg(&u, &[("one!chi", 0, 0)]), &u).unwrap(), 1);

        let not_rigid = mseg(&u, &[("one", 0, 0), ("one", -1, 1)]);
        assert!(matches!(
            gamma_of(&not_rigid, &u),
            Err(ModelError::NotRigid)
        ));

        let paired = Universe::new(vec![
            LineSpec::partnered("p", 1, "q"),
            LineSpec::partnered("q", 1, "p"),
        ])
        .unwrap();
        let mp = mseg(&paired, &[("p", 0, 0)]);
        assert!(matches!(
            gamma_of(&mp, &paired),
            Err(ModelError::NotSelfDualLine(_))
        ));
    }

    #[test]
    fn ladder_predicates() {
        let u = Universe::single_self_line("s", 2, Sign::Plus, 0);
        let theta = mseg(
            &u,
            &[
                ("s", 1, 3),
                ("s", -1, 7),
                ("s", -3, -1),
                ("s", -5, 5),
                ("s", -7, 1),
            ],
        );
        assert!(!is_ladder(&theta));
        assert!(matches!(
            proper_ladder_factors(&theta),
            Err(DistinctionError::NotALadder)
        ));

        let one_u = one();
        let points = mseg(&one_u, &[("one", -1, -1), ("one", 1, 1)]);
        assert!(is_proper_ladder(&points));
        assert_eq!(proper_ladder_factors(&points).unwrap().len(), 1);

        let pair = mseg(&u, &[("s", -2, 0), ("s", 0, 2)]);
        assert!(is_proper_ladder(&pair));
        assert_eq!(proper_ladder_factors(&pair).unwrap().len(), 1);
        assert_eq!(pair.len(), 2);

        let gapped = mseg(&one_u, &[("one", 4, 4), ("one", 0, 0)]);
        assert!(is_ladder(&gapped));
        assert!(!is_proper_ladder(&gapped));
        let factors = proper_ladder_factors(&gapped).unwrap();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0], mseg(&one_u, &[("one", 4, 4)]));
        assert_eq!(factors[1], mseg(&one_u, &[("one", 0, 0)]));

        assert!(is_ladder(&MultiSegment::empty()));
        assert!(is_proper_ladder(&MultiSegment::empty()));
        assert!(proper_ladder_factors(&MultiSegment::empty())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn ladder_verdicts() {
        let u = one();

        // Two half-lattice points: gamma 1, k 1, t 2, exponent 0.
        let points = mseg(&u, &[("one", -1, -1), ("one", 1, 1)]);
        let v = ladder_distinction(&points, &u).unwrap();
        assert_eq!(v.tag, DistinctionTag::OnlyExponent(0));
        assert_eq!((v.k, v.t, v.gamma), (1, 2, Some(1)));

        // One length-two segment: gamma 1, k 1, t 1, exponent 1.
        let steinberg = mseg(&u, &[("one", -1, 1)]);
        let v = ladder_distinction(&steinberg, &u).unwrap();
        assert_eq!(v.tag, DistinctionTag::OnlyExponent(1));
        assert_eq!((v.k, v.t, v.gamma), (1, 1, Some(1)));

        // Integer-lattice pair on a degree-2 line: gamma 0, k 1, t 2.
        let u2 = Universe::single_self_line("s", 2, Sign::Plus, 0);
        let pair = mseg(&u2, &[("s", -2, 0), ("s", 0, 2)]);
        let v = ladder_distinction(&pair, &u2).unwrap();
        assert_eq!(v.tag, DistinctionTag::OnlyExponent(1));
        assert_eq!((v.k, v.t, v.gamma), (1, 2, Some(0)));

        // Not conjugate self-dual.
        let v = ladder_distinction(&mseg(&u, &[("one", 0, 2)]), &u).unwrap();
        assert_eq!(v.tag, DistinctionTag::NotConjSelfDual);

        // Non-ladder input is an error.
        assert!(matches!(
            ladder_distinction(&mseg(&u, &[("one", 0, 0), ("one", 0, 0)]), &u),
            Err(DistinctionError::NotALadder)
        ));
    }

    #[test]
    fn rf_cross_checks() {
        let u = one();
        let case = rf_case(&mseg(&u, &[("one", -1, -1), ("one", 1, 1)]), &u).unwrap();
        assert_eq!(case.k % 2, 1);
        assert_eq!(case.t % 2, 0);
        assert_eq!(case.verdict.tag, DistinctionTag::OnlyExponent(0));
        assert_eq!(case.bc.tag, BcTag::Both);

        let case = rf_case(&mseg(&u, &[("one", -1, 1)]), &u).unwrap();
        assert_eq!((case.k % 2, case.t % 2), (1, 1));
        assert_eq!(case.verdict.tag, DistinctionTag::OnlyExponent(1));
        assert_eq!(case.bc.tag, BcTag::StableOnly);

        let u2 = Universe::single_self_line("s", 2, Sign::Plus, 0);
        let case = rf_case(&mseg(&u2, &[("s", -2, 0), ("s", 0, 2)]), &u2).unwrap();
        assert_eq!((case.k % 2, case.t % 2), (1, 0));
        assert_eq!(case.verdict.tag, DistinctionTag::OnlyExponent(1));
        assert_eq!(case.bc.tag, BcTag::Both);
    }

    #[test]
    fn mutual_unlinking() {
        let u = one();
        let a = mseg(&u, &[("one", -1, -1), ("one", 1, 1)]);
        let b = mseg(&u, &[("one", -1, 1)]);
        assert!(mutually_unlinked(&[a, b]));

        let u2 = Universe::new(vec![
            LineSpec::self_dual("one", 1, Sign::Plus, 0),
            LineSpec::self_dual("rho2", 2, Sign::Plus, 0),
        ])
        .unwrap();
        let p = mseg(&u2, &[("one", 0, 0)]);
        let q = mseg(&u2, &[("rho2!chi", 0, 0)]);
        assert!(mutually_unlinked(&[p, q]));

        let c = mseg(&u, &[("one", 0, 2)]);
        let d = mseg(&u, &[("one", 2, 4)]);
        assert!(!mutually_unlinked(&[c, d]));
    }

    #[test]
    fn simplest_non_distinguished_product() {
        let u = one();
        let rep = RepSpec::new(vec![
            mseg(&u, &[("one", -1, -1), ("one", 1, 1)]),
            mseg(&u, &[("one", -1, 1)]),
        ])
        .unwrap();

        let v = induced_distinction(&rep, &u, false).unwrap();
        match v {
            InducedVerdict::NotDistinguished {
                obstruction: Obstruction::UnpairedFixedFactorNotHDistinguished { factor, verdict },
            } => {
                assert_eq!(factor, 1);
                assert_eq!(verdict.tag, DistinctionTag::OnlyExponent(1));
            }
            other => panic!("unexpected verdict {other:?}"),
        }

        let v = induced_distinction(&rep, &u, true).unwrap();
        match v {
            InducedVerdict::NotDistinguished {
                obstruction: Obstruction::UnpairedFixedFactorNotHDistinguished { factor, verdict },
            } => {
                assert_eq!(factor, 0);
                assert_eq!(verdict.tag, DistinctionTag::OnlyExponent(1));
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn gl3_product_fails_for_both_twists() {
        let u = Universe::new(vec![
            LineSpec::self_dual("one", 1, Sign::Plus, 0),
            LineSpec::self_dual("rho2", 2, Sign::Plus, 0),
        ])
        .unwrap();
        let rep = RepSpec::new(vec![
            mseg(&u, &[("one", 0, 0)]),
            mseg(&u, &[("rho2!chi", 0, 0)]),
        ])
        .unwrap();
        assert!(rep.concatenation().is_conj_self_dual(&u).unwrap());
        for twist in [false, true] {
            let v = induced_distinction(&rep, &u, twist).unwrap();
            assert!(!v.is_distinguished(), "twist {twist}");
        }
    }

    #[test]
    fn paired_factors_are_distinguished() {
        // The pair must sit far enough from its mirror image to stay
        // unlinked, or the hypotheses reject it.
        let u = one();
        let m = mseg(&u, &[("one", 2, 4)]);
        let dual = m.conj_dual(&u).unwrap();
        let rep = RepSpec::new(vec![m, dual]).unwrap();
        let v = induced_distinction(&rep, &u, false).unwrap();
        assert_eq!(
            v,
            InducedVerdict::Distinguished {
                witness: vec![1, 0]
            }
        );

        // A pair that touches its dual is linked, hence out of scope.
        let close = mseg(&u, &[("one", 0, 2)]);
        let close_dual = close.conj_dual(&u).unwrap();
        let rep = RepSpec::new(vec![close, close_dual]).unwrap();
        assert!(matches!(
            induced_distinction(&rep, &u, false),
            Err(DistinctionError::HypothesisViolated(
                Hypothesis::NotMutuallyUnlinked { .. }
            ))
        ));
    }

    #[test]
    fn single_self_dual_factor_reduces_to_ladder_verdict() {
        let u = one();
        let rep = RepSpec::new(vec![mseg(&u, &[("one", -1, -1), ("one", 1, 1)])]).unwrap();
        let v = induced_distinction(&rep, &u, false).unwrap();
        assert_eq!(v, InducedVerdict::Distinguished { witness: vec![0] });
    }

    #[test]
    fn verdicts_ignore_line_names() {
        let make = |line_one: &str, line_rho: &str, u: &Universe| {
            RepSpec::new(vec![
                mseg(u, &[(line_one, -1, -1), (line_one, 1, 1)]),
                mseg(u, &[(&format!("{line_rho}!chi"), 0, 0)]),
                mseg(u, &[(line_rho, 0, 0)]),
            ])
            .unwrap()
        };
        let u = Universe::new(vec![
            LineSpec::self_dual("one", 1, Sign::Plus, 0),
            LineSpec::self_dual("rho2", 2, Sign::Plus, 0),
        ])
        .unwrap();
        let renamed_u = Universe::new(vec![
            LineSpec::self_dual("alpha", 1, Sign::Plus, 0),
            LineSpec::self_dual("beta", 2, Sign::Plus, 0),
        ])
        .unwrap();
        for twist in [false, true] {
            let v = induced_distinction(&make("one", "rho2", &u), &u, twist).unwrap();
            let w =
                induced_distinction(&make("alpha", "beta", &renamed_u), &renamed_u, twist).unwrap();
            assert_eq!(v, w, "twist {twist}");
        }
    }

    #[test]
    fn hypotheses_are_enforced() {
        let u = one();
        // A non-proper ladder factor.
        let gapped = mseg(&u, &[("one", 4, 4), ("one", 0, 0)]);
        let rep = RepSpec::new(vec![gapped]).unwrap();
        assert!(matches!(
            induced_distinction(&rep, &u, false),
            Err(DistinctionError::HypothesisViolated(
                Hypothesis::NotProperLadder { index: 0 }
            ))
        ));

        // Linked factors.
        let rep =
            RepSpec::new(vec![mseg(&u, &[("one", 0, 2)]), mseg(&u, &[("one", 2, 4)])]).unwrap();
        assert!(matches!(
            induced_distinction(&rep, &u, false),
            Err(DistinctionError::HypothesisViolated(
                Hypothesis::NotMutuallyUnlinked { i: 0, j: 1 }
            ))
        ));
    }
}
