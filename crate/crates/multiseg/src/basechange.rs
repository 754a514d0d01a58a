//! Weil–Deligne shadows and membership in the stable/unstable base-change
//! images.
//!
//! A multisegment `𝔪` has a combinatorial shadow of its Langlands parameter:
//! one factor `(line, center, Sp(m))` per segment, where the center is the
//! midpoint exponent and `Sp(m)` records the segment length. The parameter
//! is conjugate self-dual exactly when `𝔪` is, and in that case this module
//! classifies which base-change images it lies in:
//!
//! * A conjugate self-dual factor (self-dual line, center `0`) of twist size
//!   `m` has parity `η₀ · (−1)^(m−1)`.
//! * The parameter has parity `η` iff every conjugate self-dual factor type
//!   occurring with odd multiplicity has parity `η`; it has both parities iff
//!   there is no such type.
//! * The stable (resp. unstable) image consists of the conjugate self-dual
//!   parameters of parity `(−1)^(n−1)` (resp. `(−1)^n`), where `n` is the
//!   total `GL_n` size.
//!
//! No lift is constructed: only image membership is decided.

use std::collections::BTreeSet;
use std::fmt;

use crate::model::{HalfInt, LineId, LineSpec, ModelError, MultiSegment, Sign, Universe};

/// One summand of the parameter shadow, with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamFactor {
    pub line: LineId,
    /// The exponent `c` of the factor's cuspidal twist.
    pub center: HalfInt,
    /// Dimension of the attached `Sp` factor, i.e. the segment length.
    pub sp: u32,
    pub mult: u32,
}

impl fmt::Display for ParamFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(nu^{} {})⊗Sp({})", self.center, self.line, self.sp)?;
        if self.mult > 1 {
            write!(f, "^{}", self.mult)?;
        }
        Ok(())
    }
}

/// The factor list of the parameter shadow, in canonical segment order with
/// identical factors merged into multiplicities.
pub fn param_factors(m: &MultiSegment) -> Vec<ParamFactor> {
    let mut out: Vec<ParamFactor> = Vec::new();
    for seg in m.segments() {
        let center = seg.center();
        let sp = seg.len();
        match out.last_mut() {
            Some(last) if last.line == *seg.line() && last.center == center && last.sp == sp => {
                last.mult += 1;
            }
            _ => out.push(ParamFactor {
                line: seg.line().clone(),
                center,
                sp,
                mult: 1,
            }),
        }
    }
    out
}

/// The `n` of `GL_n(E)`: sum over segments of line degree times length.
pub fn total_degree(m: &MultiSegment, universe: &Universe) -> Result<u64, ModelError> {
    if m.is_empty() {
        return Err(ModelError::EmptyInput);
    }
    let mut n = 0u64;
    for seg in m.segments() {
        let deg = universe.line(seg.line())?.deg as u64;
        n += deg * seg.len() as u64;
    }
    Ok(n)
}

/// Parity of the conjugate self-dual factor `(line, 0, Sp(sp))`:
/// `η₀ · (−1)^(sp−1)`.
pub fn factor_parity(line: &LineSpec, sp: u32) -> Result<Sign, ModelError> {
    let Some(eta0) = line.eta0() else {
        return Err(ModelError::NotSelfDualLine(line.id.clone()));
    };
    Ok(eta0 * Sign::neg_one_pow(sp as u64 - 1))
}

/// Which base-change images contain the parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BcTag {
    /// Not conjugate self-dual: in neither image.
    NotConjSelfDual,
    /// In the stable image only.
    StableOnly,
    /// In the unstable image only.
    UnstableOnly,
    /// In both images (the parameter admits both parities).
    Both,
    /// Conjugate self-dual but with no parity at all. Impossible for rigid
    /// multisegments; kept as an honest output for non-rigid ones.
    ConjSelfDualNoParity,
}

impl fmt::Display for BcTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BcTag::NotConjSelfDual => "NotConjSelfDual",
            BcTag::StableOnly => "StableOnly",
            BcTag::UnstableOnly => "UnstableOnly",
            BcTag::Both => "Both",
            BcTag::ConjSelfDualNoParity => "ConjSelfDualNoParity",
        };
        write!(f, "{s}")
    }
}

/// Base-change classification with its witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseChangeClass {
    pub tag: BcTag,
    /// Total `GL_n` size.
    pub n: u64,
    /// Parities of the odd-multiplicity conjugate self-dual factor types.
    pub parity_set: BTreeSet<Sign>,
    /// Number of such factor types.
    pub s: usize,
}

/// Classifies membership in the union of the two base-change images.
pub fn bc_class(m: &MultiSegment, universe: &Universe) -> Result<BaseChangeClass, ModelError> {
    if m.is_empty() {
        return Err(ModelError::EmptyInput);
    }
    let n = total_degree(m, universe)?;
    if !m.is_conj_self_dual(universe)? {
        return Ok(BaseChangeClass {
            tag: BcTag::NotConjSelfDual,
            n,
            parity_set: BTreeSet::new(),
            s: 0,
        });
    }

    let mut parity_set = BTreeSet::new();
    let mut s = 0usize;
    for factor in param_factors(m) {
        if factor.mult % 2 == 0 || factor.center != HalfInt::ZERO {
            continue;
        }
        let spec = universe.line(&factor.line)?;
        if !spec.is_self_dual() {
            continue;
        }
        s += 1;
        parity_set.insert(factor_parity(&spec, factor.sp)?);
    }

    let tag = match parity_set.len() {
        0 => BcTag::Both,
        1 => {
            let eta = *parity_set.iter().next().expect("singleton");
            if eta == Sign::neg_one_pow(n - 1) {
                BcTag::StableOnly
            } else {
                BcTag::UnstableOnly
            }
        }
        _ => BcTag::ConjSelfDualNoParity,
    };
    Ok(BaseChangeClass {
        tag,
        n,
        parity_set,
        s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{make_segment, LineSpec};

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

    fn one() -> Universe {
        Universe::single_self_line("one", 1, Sign::Plus, 0)
    }

    fn sigma2() -> Universe {
        Universe::single_self_line("s", 2, Sign::Plus, 0)
    }

    fn theta(u: &Universe) -> MultiSegment {
        mseg(
            u,
            &[
                ("s", 1, 3),
                ("s", -1, 7),
                ("s", -3, -1),
                ("s", -5, 5),
                ("s", -7, 1),
            ],
        )
    }

    #[test]
    fn factors_follow_the_midpoint_formula() {
        let u = one();
        let m = mseg(&u, &[("one", -1, 1)]);
        let fs = param_factors(&m);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].center, HalfInt::ZERO);
        assert_eq!(fs[0].sp, 2);
        assert_eq!(fs[0].mult, 1);
    }

    #[test]
    fn five_segment_factor_table() {
        let u = sigma2();
        let fs = param_factors(&theta(&u));
        let centers: Vec<i32> = fs.iter().map(|f| f.center.doubled()).collect();
        let sps: Vec<u32> = fs.iter().map(|f| f.sp).collect();
        assert_eq!(centers, vec![2, 3, -2, 0, -3]);
        assert_eq!(sps, vec![2, 5, 2, 6, 5]);
        assert!(fs.iter().all(|f| f.mult == 1));
    }

    #[test]
    fn repeated_segments_merge() {
        let u = one();
        let m = mseg(&u, &[("one", 0, 0), ("one", 0, 0)]);
        let fs = param_factors(&m);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].mult, 2);
        assert_eq!(fs[0].sp, 1);
    }

    #[test]
    fn total_degree_sums_over_lines() {
        let u = one();
        assert_eq!(total_degree(&mseg(&u, &[("one", -1, 1)]), &u).unwrap(), 2);

        let u2 = sigma2();
        assert_eq!(total_degree(&theta(&u2), &u2).unwrap(), 40);

        let mixed = Universe::new(vec![
            LineSpec::self_dual("one", 1, Sign::Plus, 0),
            LineSpec::self_dual("rho2", 2, Sign::Plus, 0),
        ])
        .unwrap();
        let m = mseg(&mixed, &[("one", 0, 0), ("rho2", 0, 0)]);
        assert_eq!(total_degree(&m, &mixed).unwrap(), 3);

        assert!(matches!(
            total_degree(&MultiSegment::empty(), &u),
            Err(ModelError::EmptyInput)
        ));
    }

    #[test]
    fn parity_alternates_with_sp() {
        let u = one();
        let spec = u.line(&LineId::new("one")).unwrap();
        assert_eq!(factor_parity(&spec, 2).unwrap(), Sign::Minus);
        assert_eq!(factor_parity(&spec, 1).unwrap(), Sign::Plus);

        let u2 = sigma2();
        let spec2 = u2.line(&LineId::new("s")).unwrap();
        assert_eq!(factor_parity(&spec2, 6).unwrap(), Sign::Minus);

        let paired = Universe::new(vec![
            LineSpec::partnered("p", 1, "q"),
            LineSpec::partnered("q", 1, "p"),
        ])
        .unwrap();
        let pspec = paired.line(&LineId::new("p")).unwrap();
        assert!(matches!(
            factor_parity(&pspec, 1),
            Err(ModelError::NotSelfDualLine(_))
        ));
    }

    #[test]
    fn two_points_lie_in_both_images() {
        let u = one();
        let m = mseg(&u, &[("one", -1, -1), ("one", 1, 1)]);
        let class = bc_class(&m, &u).unwrap();
        assert_eq!(class.tag, BcTag::Both);
        assert_eq!(class.n, 2);
        assert_eq!(class.s, 0);
    }

    #[test]
    fn length_two_segment_is_stable_only() {
        let u = one();
        let m = mseg(&u, &[("one", -1, 1)]);
        let class = bc_class(&m, &u).unwrap();
        assert_eq!(class.tag, BcTag::StableOnly);
        assert_eq!(class.n, 2);
        assert_eq!(class.s, 1);
        assert_eq!(class.parity_set, BTreeSet::from([Sign::Minus]));
    }

    #[test]
    fn symmetric_ladder_pair_is_in_both_images() {
        let u = sigma2();
        let m = mseg(&u, &[("s", -2, 0), ("s", 0, 2)]);
        let class = bc_class(&m, &u).unwrap();
        assert_eq!(class.tag, BcTag::Both);
        assert_eq!(class.s, 0);
    }

    #[test]
    fn five_segment_example_is_in_exactly_one_image() {
        let u = sigma2();
        let class = bc_class(&theta(&u), &u).unwrap();
        assert_eq!(class.tag, BcTag::StableOnly);
        assert_eq!(class.n, 40);
        assert_eq!(class.s, 1);
    }

    #[test]
    fn non_csd_input() {
        let u = one();
        let class = bc_class(&mseg(&u, &[("one", 0, 2)]), &u).unwrap();
        assert_eq!(class.tag, BcTag::NotConjSelfDual);
    }

    #[test]
    fn mixed_lattices_can_lack_parity() {
        let u = one();
        // [0] on the integer lattice and [-1/2,1/2] on the half lattice are
        // both conjugate self-dual factors, with opposite parities.
        let m = mseg(&u, &[("one", 0, 0), ("one", -1, 1)]);
        let class = bc_class(&m, &u).unwrap();
        assert_eq!(class.tag, BcTag::ConjSelfDualNoParity);
        assert_eq!(class.s, 2);
        assert_eq!(class.parity_set.len(), 2);
    }
}
