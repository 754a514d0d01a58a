//! Property suites over exhaustive enumerations.
//!
//! Each suite streams the cases of an [`EnumSpec`] (or, for the hereditary
//! suite, a seeded random construction) through one family of checks and
//! reports failures as data. Reports are deterministic: cases are processed
//! in a fixed order, failures are sorted by case key, and sharded runs merge
//! to the same result regardless of the number of workers.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::basechange::{bc_class, BcTag};
use crate::distinction::{
    induced_distinction, is_ladder, is_proper_ladder, ladder_distinction, mutually_unlinked,
    rf_case, DistinctionError, DistinctionTag, InducedVerdict,
};
use crate::enumerate::{enumerate_multisegments, EnumError, EnumSpec};
use crate::involution::zelevinsky_dual;
use crate::model::{
    Duality, HalfInt, LineId, LineSpec, MultiSegment, RepSpec, Segment, Sign, Universe,
};

/// Fixed seed for the randomized hereditary construction.
pub const HEREDITARY_SEED: u64 = 0x5eed_cafe_f00d_0001;

/// Number of constructed cases in the hereditary suite.
pub const HEREDITARY_CASES: u64 = 1000;

/// Sample cap for the round-trip suite.
pub const ROUNDTRIP_SAMPLE_CAP: u128 = 100_000;

/// The available property suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    /// `(𝔪^t)^t = 𝔪`, point multiplicities are preserved, and the dual
    /// commutes with conjugate duality and the `χ₋₁` twist.
    Involution,
    /// The commutation checks alone, for targeted runs.
    Commutation,
    /// Rigid conjugate self-dual cases always have a parity; non-self-dual
    /// cases classify as such; the dual preserves self-duality and any
    /// single-image class.
    Parity,
    /// The `χ₋₁` twist swaps the two single-image classes, fixes the rest,
    /// and flips ladder distinction exponents.
    ChiSwap,
    /// A conjugate self-dual ladder is in both images iff `t` is even.
    TEven,
    /// Ladder verdicts and base-change classes cohere for every attribute
    /// combination of the self-dual lines.
    RfCases,
    /// Constructed paired products are distinguished with a valid witness,
    /// independently of factor order.
    InducedHereditary,
    /// `parse ∘ format` is the identity.
    Roundtrip,
}

impl SuiteName {
    pub const ALL: [SuiteName; 8] = [
        SuiteName::Involution,
        SuiteName::Commutation,
        SuiteName::Parity,
        SuiteName::ChiSwap,
        SuiteName::TEven,
        SuiteName::RfCases,
        SuiteName::InducedHereditary,
        SuiteName::Roundtrip,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Involution => "involution",
            SuiteName::Commutation => "commutation",
            SuiteName::Parity => "parity",
            SuiteName::ChiSwap => "chi-swap",
            SuiteName::TEven => "t-even",
            SuiteName::RfCases => "rf-cases",
            SuiteName::InducedHereditary => "induced-hereditary",
            SuiteName::Roundtrip => "roundtrip",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<_> = SuiteName::ALL.iter().map(|n| n.as_str()).collect();
                format!(
                    "unknown suite `{s}` (expected one of: {})",
                    names.join(", ")
                )
            })
    }
}

/// A failing case with a human-readable explanation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    /// Canonical text of the failing input.
    pub case: String,
    pub detail: String,
}

/// Outcome of a suite run. Two runs over the same spec produce identical
/// reports except for `wall_ms`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub cases: u64,
    /// Lexicographically smallest failures, capped at 50 entries.
    pub failures: Vec<Failure>,
    /// Total number of failing cases.
    pub failures_total: u64,
    pub wall_ms: u128,
    /// Seed of the randomized construction, for the hereditary suite.
    pub seed: Option<u64>,
}

const REPORTED_FAILURES: usize = 50;

/// Runs one suite over the spec, fanning cases out to `jobs` workers.
pub fn run_suite(name: SuiteName, spec: &EnumSpec, jobs: usize) -> Result<SuiteReport, EnumError> {
    let jobs = jobs.max(1);
    let start = Instant::now();
    let (cases, mut failures) = match name {
        SuiteName::InducedHereditary => run_hereditary(jobs)?,
        _ => run_enumerated(name, spec, jobs)?,
    };
    failures.sort();
    let failures_total = failures.len() as u64;
    failures.truncate(REPORTED_FAILURES);
    Ok(SuiteReport {
        suite: name,
        cases,
        failures,
        failures_total,
        wall_ms: start.elapsed().as_millis(),
        seed: (name == SuiteName::InducedHereditary).then_some(HEREDITARY_SEED),
    })
}

fn run_enumerated(
    name: SuiteName,
    spec: &EnumSpec,
    jobs: usize,
) -> Result<(u64, Vec<Failure>), EnumError> {
    let count = spec.case_count();
    if count > spec.case_bound as u128 {
        return Err(EnumError::BoundExceeded {
            count,
            bound: spec.case_bound,
        });
    }
    let stride = if name == SuiteName::Roundtrip {
        count.div_ceil(ROUNDTRIP_SAMPLE_CAP).max(1) as u64
    } else {
        1
    };
    let variants = (name == SuiteName::RfCases).then(|| universe_variants(&spec.universe));
    let variants = variants.as_deref();

    let worker = |worker_id: usize| -> Result<(u64, Vec<Failure>), EnumError> {
        let mut cases = 0u64;
        let mut failures = Vec::new();
        for (idx, m) in enumerate_multisegments(spec)?.enumerate() {
            let idx = idx as u64;
            if !idx.is_multiple_of(stride) {
                continue;
            }
            let sampled = idx / stride;
            if sampled % jobs as u64 != worker_id as u64 {
                continue;
            }
            cases += 1;
            if let Err(detail) = check_case(name, &m, spec, variants) {
                failures.push(Failure {
                    case: m.to_string(),
                    detail,
                });
            }
        }
        Ok((cases, failures))
    };

    if jobs == 1 {
        return worker(0);
    }
    let results: Vec<Result<(u64, Vec<Failure>), EnumError>> = std::thread::scope(|scope| {
        let worker = &worker;
        let handles: Vec<_> = (0..jobs)
            .map(|id| scope.spawn(move || worker(id)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite worker panicked"))
            .collect()
    });
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for result in results {
        let (c, f) = result?;
        cases += c;
        failures.extend(f);
    }
    Ok((cases, failures))
}

fn check_case(
    name: SuiteName,
    m: &MultiSegment,
    spec: &EnumSpec,
    variants: Option<&[Universe]>,
) -> Result<(), String> {
    let u = &spec.universe;
    match name {
        SuiteName::Involution => {
            let dual = check_involution(&zelevinsky_dual, m)?;
            check_commutation_with(&dual, m, u)
        }
        SuiteName::Commutation => {
            let dual = zelevinsky_dual(m);
            check_commutation_with(&dual, m, u)
        }
        SuiteName::Parity => check_parity(m, u),
        SuiteName::ChiSwap => check_chi_swap(m, u),
        SuiteName::TEven => check_t_even(m, u),
        SuiteName::RfCases => check_rf_cases(m, variants.expect("variants prepared")),
        SuiteName::Roundtrip => check_roundtrip(m, u),
        SuiteName::InducedHereditary => unreachable!("handled separately"),
    }
}

/// The involution checks, parameterized over the dual function so tests can
/// demonstrate that a corrupted tie-break is caught. Returns the dual for
/// reuse by further checks.
fn check_involution(
    dual: &dyn Fn(&MultiSegment) -> MultiSegment,
    m: &MultiSegment,
) -> Result<MultiSegment, String> {
    let d = dual(m);
    let dd = dual(&d);
    if dd != *m {
        return Err(format!("double dual is {dd}, expected the input"));
    }
    if point_multiset(&d) != point_multiset(m) {
        return Err(format!("dual {d} changes point multiplicities"));
    }
    Ok(d)
}

/// Covered points with multiplicity: the distinct lines in canonical order
/// plus (line index, exponent) pairs sorted as integers. Cheaper in the hot
/// loop than the map-based [`MultiSegment::support_multiplicities`].
fn point_multiset(m: &MultiSegment) -> (Vec<LineId>, Vec<(usize, i32)>) {
    let mut lines: Vec<LineId> = Vec::new();
    let mut points = Vec::with_capacity(m.total_length() as usize);
    for seg in m.segments() {
        let idx = match lines.iter().position(|l| l == seg.line()) {
            Some(i) => i,
            None => {
                lines.push(seg.line().clone());
                lines.len() - 1
            }
        };
        for p in seg.points() {
            points.push((idx, p.doubled()));
        }
    }
    points.sort_unstable();
    (lines, points)
}

fn check_commutation_with(
    dual: &MultiSegment,
    m: &MultiSegment,
    u: &Universe,
) -> Result<(), String> {
    let conj = m.conj_dual(u).map_err(|e| e.to_string())?;
    let left = zelevinsky_dual(&conj);
    let right = dual.conj_dual(u).map_err(|e| e.to_string())?;
    if left != right {
        return Err(format!(
            "dual of conjugate {left} differs from conjugate of dual {right}"
        ));
    }
    let left = zelevinsky_dual(&m.chi_twist());
    let right = dual.chi_twist();
    if left != right {
        return Err(format!(
            "dual of twist {left} differs from twist of dual {right}"
        ));
    }
    Ok(())
}

fn check_parity(m: &MultiSegment, u: &Universe) -> Result<(), String> {
    if m.is_empty() {
        return Ok(());
    }
    let csd = m.is_conj_self_dual(u).map_err(|e| e.to_string())?;
    let class = bc_class(m, u).map_err(|e| e.to_string())?;
    if !csd {
        if class.tag != BcTag::NotConjSelfDual {
            return Err(format!("not self-dual but classified {}", class.tag));
        }
        return Ok(());
    }
    if !m.is_rigid() {
        return Ok(());
    }
    match class.tag {
        BcTag::Both | BcTag::StableOnly | BcTag::UnstableOnly => {}
        other => return Err(format!("rigid self-dual case classified {other}")),
    }
    // The dual of a rigid self-dual case stays self-dual, and stays inside
    // any single image it came from. It may gain the other image (a length-2
    // segment is stable-only while its dual pair of points is in both), but
    // it never jumps to the opposite single image.
    let dual = zelevinsky_dual(m);
    let dual_class = bc_class(&dual, u).map_err(|e| e.to_string())?;
    if dual_class.tag == BcTag::NotConjSelfDual {
        return Err(format!("dual {dual} lost conjugate self-duality"));
    }
    if matches!(class.tag, BcTag::StableOnly | BcTag::UnstableOnly)
        && dual_class.tag != class.tag
        && dual_class.tag != BcTag::Both
    {
        return Err(format!(
            "dual {dual} moved from {} to {}",
            class.tag, dual_class.tag
        ));
    }
    Ok(())
}

fn check_chi_swap(m: &MultiSegment, u: &Universe) -> Result<(), String> {
    if m.is_empty() {
        return Ok(());
    }
    let class = bc_class(m, u).map_err(|e| e.to_string())?;
    let twisted_class = bc_class(&m.chi_twist(), u).map_err(|e| e.to_string())?;
    let expected = match class.tag {
        BcTag::StableOnly => BcTag::UnstableOnly,
        BcTag::UnstableOnly => BcTag::StableOnly,
        fixed => fixed,
    };
    if twisted_class.tag != expected {
        return Err(format!(
            "twist moved class {} to {}, expected {}",
            class.tag, twisted_class.tag, expected
        ));
    }
    // Distinction exponents flip under the twist on conjugate self-dual
    // ladders; the two-exponent verdict is stable.
    if is_ladder(m) {
        let v = ladder_distinction(m, u).map_err(|e| e.to_string())?;
        let vt = ladder_distinction(&m.chi_twist(), u).map_err(|e| e.to_string())?;
        let expected = match v.tag {
            DistinctionTag::OnlyExponent(e) => DistinctionTag::OnlyExponent(1 - e),
            fixed => fixed,
        };
        if vt.tag != expected {
            return Err(format!(
                "twist moved verdict {} to {}, expected {}",
                v.tag, vt.tag, expected
            ));
        }
    }
    Ok(())
}

fn check_t_even(m: &MultiSegment, u: &Universe) -> Result<(), String> {
    if m.is_empty() || !is_ladder(m) {
        return Ok(());
    }
    if !m.is_conj_self_dual(u).map_err(|e| e.to_string())? {
        return Ok(());
    }
    let class = bc_class(m, u).map_err(|e| e.to_string())?;
    let both = class.tag == BcTag::Both;
    let even = m.len().is_multiple_of(2);
    if both != even {
        return Err(format!(
            "t = {} but class is {} (expected Both iff t even)",
            m.len(),
            class.tag
        ));
    }
    Ok(())
}

fn check_rf_cases(m: &MultiSegment, variants: &[Universe]) -> Result<(), String> {
    if m.is_empty() || !is_ladder(m) {
        return Ok(());
    }
    for (i, u) in variants.iter().enumerate() {
        match rf_case(m, u) {
            Ok(_) => {}
            Err(DistinctionError::ConsistencyViolation(msg)) => {
                return Err(format!("variant {i}: consistency violation: {msg}"));
            }
            Err(other) => return Err(format!("variant {i}: {other}")),
        }
    }
    Ok(())
}

fn check_roundtrip(m: &MultiSegment, u: &Universe) -> Result<(), String> {
    let text = crate::dsl::format_multisegment(m);
    match crate::dsl::parse_multisegment(&text, u) {
        Ok(back) if back == *m => Ok(()),
        Ok(back) => Err(format!("`{text}` parsed back as `{back}`")),
        Err(err) => Err(format!("`{text}` failed to parse: {err}")),
    }
}

/// The four (η₀, a) attribute combinations applied to every self-dual line.
fn universe_variants(u: &Universe) -> Vec<Universe> {
    let combos = [
        (Sign::Plus, 0),
        (Sign::Plus, 1),
        (Sign::Minus, 0),
        (Sign::Minus, 1),
    ];
    combos
        .iter()
        .map(|&(eta0, dist_a)| {
            let lines = u
                .declared()
                .map(|spec| LineSpec {
                    id: spec.id.clone(),
                    deg: spec.deg,
                    duality: match &spec.duality {
                        Duality::SelfDual { .. } => Duality::SelfDual { eta0, dist_a },
                        partner => partner.clone(),
                    },
                })
                .collect();
            Universe::new(lines).expect("variant of a valid universe is valid")
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Hereditary construction
// ---------------------------------------------------------------------------

/// SplitMix64: tiny deterministic generator, identical on every platform.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n.max(1)
    }

    fn coin(&mut self) -> bool {
        self.next().is_multiple_of(2)
    }

    fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

fn hereditary_universe() -> Universe {
    Universe::new(vec![
        LineSpec::self_dual("ha", 1, Sign::Plus, 0),
        LineSpec::self_dual("hb", 1, Sign::Plus, 1),
        LineSpec::self_dual("hc", 2, Sign::Minus, 0),
        LineSpec::self_dual("hd", 3, Sign::Minus, 1),
        LineSpec::partnered("pa", 1, "pab"),
        LineSpec::partnered("pab", 1, "pa"),
        LineSpec::partnered("pb", 2, "pbb"),
        LineSpec::partnered("pbb", 2, "pb"),
    ])
    .expect("hereditary universe is consistent")
}

/// A symmetric staircase `{[−d+i, d+i]}` over `t` offsets: a conjugate
/// self-dual proper ladder whose lattice is chosen so the whole thing is
/// `H`-distinguished on a line with distinction exponent `a`.
fn distinguished_fixed_factor(line: &str, a: u8, rng: &mut Rng) -> MultiSegment {
    let t = 1 + rng.below(3) as i32;
    // Exponent (gamma + t + 1) mod 2 must be 0; solve for the lattice.
    let integral = (a as i32 + t + 1) % 2 == 0;
    // The offsets are integers for odd t and half-odd for even t, so the
    // half-width d compensates to land the endpoints on the target lattice.
    let d_parity = if t % 2 == 1 {
        i32::from(!integral)
    } else {
        i32::from(integral)
    };
    let d_doubled = 2 * rng.below(3) as i32 + d_parity;
    let line = LineId::new(line);
    (0..t)
        .map(|j| {
            let offset = -(t - 1) + 2 * j;
            Segment::new(
                line.clone(),
                HalfInt::from_doubled(-d_doubled + offset),
                HalfInt::from_doubled(d_doubled + offset),
            )
            .expect("staircase endpoints are ordered")
        })
        .collect()
}

/// A random proper ladder. When `positive`, all exponents are at least 1,
/// which keeps the ladder unlinked from its conjugate dual on the same line.
fn random_proper_ladder(line: &str, positive: bool, rng: &mut Rng) -> MultiSegment {
    let t = 1 + rng.below(3) as usize;
    let lattice_offset = if rng.coin() { 0 } else { 1 };
    let mut b = rng.below(8) as i32 * 2 - 6 + lattice_offset;
    let mut e = b + 2 * rng.below(4) as i32;
    let mut segs = vec![(b, e)];
    for _ in 1..t {
        let nb = b - 2 * (1 + rng.below(2) as i32);
        // Keep the new segment linked with the previous one: its end must
        // reach at least one step below the previous beginning.
        let lo = nb.max(b - 2);
        let hi = e - 2;
        let ne = lo + 2 * rng.below(((hi - lo) / 2 + 1).max(1) as u64) as i32;
        segs.push((nb, ne));
        b = nb;
        e = ne;
    }
    if positive {
        let min_b = segs.iter().map(|&(b, _)| b).min().unwrap();
        if min_b < 2 {
            let shift = 2 - min_b + ((2 - min_b) % 2);
            for (b, e) in &mut segs {
                *b += shift;
                *e += shift;
            }
        }
    }
    let line = LineId::new(line);
    segs.into_iter()
        .map(|(b, e)| {
            Segment::new(
                line.clone(),
                HalfInt::from_doubled(b),
                HalfInt::from_doubled(e),
            )
            .expect("generated endpoints are ordered")
        })
        .collect()
}

/// Builds one hereditary case: factor pairs `(m, conj_dual(m))` on dedicated
/// lines plus distinguished fixed factors, shuffled, so the product must
/// come out distinguished.
fn hereditary_case(u: &Universe, rng: &mut Rng) -> (RepSpec, bool) {
    // (line, dist_a) for self-dual slots; partner slots carry the left line.
    let mut slots: Vec<(&str, Option<u8>)> = vec![
        ("ha", Some(0)),
        ("hb", Some(1)),
        ("hc", Some(0)),
        ("hd", Some(1)),
        ("pa", None),
        ("pb", None),
    ];
    rng.shuffle(&mut slots);
    let used = 1 + rng.below(4) as usize;
    let mut factors: Vec<MultiSegment> = Vec::new();
    let mut has_fixed = false;
    for &(line, dist_a) in slots.iter().take(used) {
        match dist_a {
            Some(a) if rng.coin() => {
                factors.push(distinguished_fixed_factor(line, a, rng));
                has_fixed = true;
            }
            Some(_) => {
                let m = random_proper_ladder(line, true, rng);
                let dual = m.conj_dual(u).expect("line is declared");
                factors.push(m);
                factors.push(dual);
            }
            None => {
                let m = random_proper_ladder(line, false, rng);
                let dual = m.conj_dual(u).expect("line is declared");
                factors.push(m);
                factors.push(dual);
            }
        }
    }
    rng.shuffle(&mut factors);
    (
        RepSpec::new(factors).expect("constructed factors are nonempty"),
        has_fixed,
    )
}

fn hereditary_check(u: &Universe, rep: &RepSpec, pairs_only: bool) -> Result<(), String> {
    if !mutually_unlinked(rep.factors()) {
        return Err("construction produced linked factors".to_string());
    }
    if let Some(i) = rep.factors().iter().position(|f| !is_proper_ladder(f)) {
        return Err(format!("construction produced a non-proper factor {i}"));
    }
    let verdict = induced_distinction(rep, u, false).map_err(|e| e.to_string())?;
    let InducedVerdict::Distinguished { witness } = verdict else {
        return Err(format!("expected distinguished, got {verdict:?}"));
    };
    validate_witness(u, rep.factors(), &witness)?;
    // A distinguished product is conjugate self-dual as a whole.
    if !rep
        .concatenation()
        .is_conj_self_dual(u)
        .map_err(|e| e.to_string())?
    {
        return Err("distinguished product is not conjugate self-dual".to_string());
    }

    // Verdicts are invariant under factor permutation: reversing the
    // factors is an arbitrary nontrivial reorder.
    let reversed =
        RepSpec::new(rep.factors().iter().rev().cloned().collect()).expect("factors stay nonempty");
    let again = induced_distinction(&reversed, u, false).map_err(|e| e.to_string())?;
    if !again.is_distinguished() {
        return Err("verdict changed under factor permutation".to_string());
    }

    // With no fixed factors the pairing survives the twist as well.
    if pairs_only {
        let twisted = induced_distinction(rep, u, true).map_err(|e| e.to_string())?;
        if !twisted.is_distinguished() {
            return Err("pairs-only case lost distinction under twist".to_string());
        }
    }
    Ok(())
}

fn validate_witness(u: &Universe, factors: &[MultiSegment], w: &[usize]) -> Result<(), String> {
    if w.len() != factors.len() {
        return Err("witness length mismatch".to_string());
    }
    for i in 0..w.len() {
        if w[w[i]] != i {
            return Err(format!("witness is not an involution at {i}"));
        }
        let dual = factors[i].conj_dual(u).map_err(|e| e.to_string())?;
        if factors[w[i]] != dual {
            return Err(format!("witness pairs {i} with a non-dual factor"));
        }
        if w[i] == i {
            let v = ladder_distinction(&factors[i], u).map_err(|e| e.to_string())?;
            if !v.tag.admits_exponent(0) {
                return Err(format!("fixed factor {i} is not H-distinguished"));
            }
        }
    }
    Ok(())
}

fn run_hereditary(jobs: usize) -> Result<(u64, Vec<Failure>), EnumError> {
    let u = hereditary_universe();
    let worker = |worker_id: usize| {
        let mut failures = Vec::new();
        let mut cases = 0u64;
        for i in 0..HEREDITARY_CASES {
            if i % jobs as u64 != worker_id as u64 {
                continue;
            }
            cases += 1;
            let mut rng = Rng(HEREDITARY_SEED.wrapping_add(i.wrapping_mul(0x9e37_79b9)));
            let (rep, has_fixed) = hereditary_case(&u, &mut rng);
            if let Err(detail) = hereditary_check(&u, &rep, !has_fixed) {
                failures.push(Failure {
                    case: format!("case {i}: {rep}"),
                    detail,
                });
            }
        }
        (cases, failures)
    };
    if jobs == 1 {
        return Ok(worker(0));
    }
    let results: Vec<(u64, Vec<Failure>)> = std::thread::scope(|scope| {
        let worker = &worker;
        let handles: Vec<_> = (0..jobs)
            .map(|id| scope.spawn(move || worker(id)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("hereditary worker panicked"))
            .collect()
    });
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for (c, f) in results {
        cases += c;
        failures.extend(f);
    }
    Ok((cases, failures))
}
