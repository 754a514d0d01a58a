//! Core data model: cuspidal lines, segments, and multisegments.
//!
//! A *cuspidal line* is the set of twists `ν^x σ` of a cuspidal representation
//! `σ` by half-integer powers of the norm character. The model is purely
//! combinatorial: a line is a symbol carrying the attributes the classifiers
//! need (degree, conjugate-duality structure, the parity `η₀` of its
//! normalized conjugate self-dual point, and the distinction exponent
//! `a` of that point). A segment `[b, e]` on a line stands for the set
//! `{ν^b σ, …, ν^e σ}`, and a multisegment is a finite multiset of segments.
//!
//! Conventions baked into the model:
//!
//! * Exponents are exact half-integers ([`HalfInt`], stored doubled). No
//!   floating point anywhere.
//! * On a conjugate self-dual ("Self") line the exponent origin `0` is the
//!   normalized conjugate self-dual point, so users supply already-normalized
//!   exponents.
//! * The *effective* cuspidal line of a segment is the pair (line id,
//!   exponent lattice): the integer and half-odd lattices of one declared
//!   line are distinct cuspidal lines (`σ^ℤ` vs `(ν^(1/2) σ)^ℤ`).
//! * Multisegments are kept in a canonical order (line id ascending, then
//!   beginning descending, then end descending), which is also a standard
//!   order in the linking sense.
//!
//! All values here are immutable after construction and every operation is a
//! pure function, so everything is freely shareable across threads.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

/// Errors produced by the core model operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("empty segment: beginning {b} exceeds end {e}")]
    EmptySegment { b: HalfInt, e: HalfInt },
    #[error("segment endpoints {b} and {e} lie on different lattices")]
    LatticeMismatch { b: HalfInt, e: HalfInt },
    #[error("unknown line `{0}`")]
    UnknownLine(LineId),
    #[error("empty input")]
    EmptyInput,
    #[error("line `{0}` is not conjugate self-dual")]
    NotSelfDualLine(LineId),
    #[error("multisegment is not rigid (single line and single lattice required)")]
    NotRigid,
    #[error("representation factor {index} is empty")]
    EmptyFactor { index: usize },
}

/// Errors detected while validating a [`Universe`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniverseError {
    #[error("duplicate line id `{0}`")]
    DuplicateId(String),
    #[error("line id `{0}` uses the reserved character `!`")]
    ReservedId(String),
    #[error("line `{0}` must have positive degree")]
    ZeroDegree(String),
    #[error("line `{line}` names unknown partner `{partner}`")]
    UnknownPartner { line: String, partner: String },
    #[error("line `{0}` cannot be its own partner")]
    SelfPartner(String),
    #[error("partner relation between `{a}` and `{b}` is not symmetric")]
    InconsistentPartners { a: String, b: String },
    #[error("partners `{a}` and `{b}` have different degrees")]
    PartnerDegMismatch { a: String, b: String },
}

// ---------------------------------------------------------------------------
// Half-integers
// ---------------------------------------------------------------------------

/// An exact half-integer, stored as its doubled value.
///
/// `HalfInt::from_doubled(3)` is `3/2`; `HalfInt::whole(2)` is `2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    /// Builds a half-integer from its doubled value.
    pub const fn from_doubled(doubled: i32) -> Self {
        HalfInt(doubled)
    }

    /// Builds a whole number.
    pub const fn whole(n: i32) -> Self {
        HalfInt(2 * n)
    }

    /// The doubled value (`3/2` returns `3`).
    pub const fn doubled(self) -> i32 {
        self.0
    }

    /// True iff the value is an integer.
    pub const fn is_integral(self) -> bool {
        self.0.rem_euclid(2) == 0
    }

    /// The lattice this value lives on.
    pub const fn lattice(self) -> Lattice {
        if self.is_integral() {
            Lattice::Integral
        } else {
            Lattice::Half
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Error parsing a [`HalfInt`] from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid half-integer `{input}`: {reason}")]
pub struct ParseHalfIntError {
    pub input: String,
    pub reason: String,
}

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts `"2"`, `"-3"`, `"1/2"`, `"-7/2"`. Only denominator 2 is allowed.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseHalfIntError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (num, halved) = match s.split_once('/') {
            Some((n, d)) => {
                if d != "2" {
                    return Err(err("denominator must be 2"));
                }
                (n, true)
            }
            None => (s, false),
        };
        let value: i64 = num
            .parse()
            .map_err(|_| err("expected an integer numerator"))?;
        let doubled = if halved { value } else { value * 2 };
        let doubled = i32::try_from(doubled).map_err(|_| err("out of range"))?;
        Ok(HalfInt(doubled))
    }
}

/// The exponent lattice of a segment: integer or half-odd-integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Lattice {
    Integral,
    Half,
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lattice::Integral => write!(f, "int"),
            Lattice::Half => write!(f, "half"),
        }
    }
}

// ---------------------------------------------------------------------------
// Signs
// ---------------------------------------------------------------------------

/// A sign `±1`, used for parities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub const fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub const fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    /// `(-1)^k`.
    pub const fn neg_one_pow(k: u64) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

// ---------------------------------------------------------------------------
// Lines
// ---------------------------------------------------------------------------

/// Identifier of a cuspidal line.
///
/// A line id is a declared base symbol plus a twist flag; the flag marks the
/// derived line obtained by twisting with the fixed character `χ₋₁`. The
/// twisted id prints as `base!chi`, and twisting is an involution by
/// construction.
#[derive(Clone, Eq)]
pub struct LineId {
    base: Arc<str>,
    twisted: bool,
}

impl PartialEq for LineId {
    fn eq(&self, other: &Self) -> bool {
        self.twisted == other.twisted
            && (Arc::ptr_eq(&self.base, &other.base) || self.base == other.base)
    }
}

impl std::hash::Hash for LineId {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // Content hash, consistent with the pointer-shortcut equality.
        self.base.hash(state);
        self.twisted.hash(state);
    }
}

impl Ord for LineId {
    fn cmp(&self, other: &Self) -> Ordering {
        // Ids are cloned from the universe, so most comparisons see the
        // same allocation.
        let base = if Arc::ptr_eq(&self.base, &other.base) {
            Ordering::Equal
        } else {
            self.base.cmp(&other.base)
        };
        base.then(self.twisted.cmp(&other.twisted))
    }
}

impl PartialOrd for LineId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl LineId {
    /// An untwisted line id.
    pub fn new(base: &str) -> Self {
        LineId {
            base: Arc::from(base),
            twisted: false,
        }
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn is_twisted(&self) -> bool {
        self.twisted
    }

    /// The `χ₋₁`-twisted id; applying this twice returns the original id.
    pub fn chi_twist(&self) -> LineId {
        LineId {
            base: Arc::clone(&self.base),
            twisted: !self.twisted,
        }
    }

    /// Parses a symbol of the form `ident` or `ident!chi` (repeated `!chi`
    /// suffixes cancel in pairs). Returns `None` on malformed symbols.
    pub fn from_symbol(symbol: &str) -> Option<LineId> {
        let mut rest = symbol;
        let mut twisted = false;
        while let Some(stripped) = rest.strip_suffix("!chi") {
            rest = stripped;
            twisted = !twisted;
        }
        if rest.is_empty() || rest.contains('!') {
            return None;
        }
        Some(LineId {
            base: Arc::from(rest),
            twisted,
        })
    }
}

impl fmt::Display for LineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twisted {
            write!(f, "{}!chi", self.base)
        } else {
            write!(f, "{}", self.base)
        }
    }
}

impl fmt::Debug for LineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Conjugate-duality structure of a line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Duality {
    /// The line is its own conjugate dual. `eta0` is the parity of the
    /// normalized conjugate self-dual point; `dist_a` is its distinction
    /// exponent (`0` or `1`).
    SelfDual { eta0: Sign, dist_a: u8 },
    /// The conjugate dual of this line is a different declared line.
    Partner { other: LineId },
}

/// A declared (or derived) cuspidal line with its classifier attributes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSpec {
    pub id: LineId,
    /// Dimension of the underlying cuspidal: it is a cuspidal of `GL_deg(E)`.
    pub deg: u32,
    pub duality: Duality,
}

impl LineSpec {
    /// Declares a conjugate self-dual line.
    pub fn self_dual(id: &str, deg: u32, eta0: Sign, dist_a: u8) -> LineSpec {
        LineSpec {
            id: LineId::new(id),
            deg,
            duality: Duality::SelfDual { eta0, dist_a },
        }
    }

    /// Declares one side of a partner pair.
    pub fn partnered(id: &str, deg: u32, other: &str) -> LineSpec {
        LineSpec {
            id: LineId::new(id),
            deg,
            duality: Duality::Partner {
                other: LineId::new(other),
            },
        }
    }

    pub fn is_self_dual(&self) -> bool {
        matches!(self.duality, Duality::SelfDual { .. })
    }

    pub fn eta0(&self) -> Option<Sign> {
        match self.duality {
            Duality::SelfDual { eta0, .. } => Some(eta0),
            Duality::Partner { .. } => None,
        }
    }

    pub fn dist_a(&self) -> Option<u8> {
        match self.duality {
            Duality::SelfDual { dist_a, .. } => Some(dist_a),
            Duality::Partner { .. } => None,
        }
    }

    /// Id of the conjugate-dual line: the line itself when self-dual, the
    /// partner otherwise. A derived twisted spec already stores the twisted
    /// partner, so the stored id is returned as-is.
    pub fn conj_dual_line(&self) -> LineId {
        match &self.duality {
            Duality::SelfDual { .. } => self.id.clone(),
            Duality::Partner { other } => other.clone(),
        }
    }

    /// The derived `χ₋₁`-twisted line: same degree and duality shape, parity
    /// negated and distinction exponent flipped (a functional transforming by
    /// `ω^a` on the original point transforms by `ω^(a+1)` on the twisted one,
    /// because `χ₋₁` restricts to `ω` on `F^×`).
    pub fn chi_twisted(&self) -> LineSpec {
        let duality = match &self.duality {
            Duality::SelfDual { eta0, dist_a } => Duality::SelfDual {
                eta0: -*eta0,
                dist_a: 1 - dist_a,
            },
            Duality::Partner { other } => Duality::Partner {
                other: other.chi_twist(),
            },
        };
        LineSpec {
            id: self.id.chi_twist(),
            deg: self.deg,
            duality,
        }
    }
}

/// The set of declared cuspidal lines, closed under the partner relation.
///
/// Twisted ids (`base!chi`) are never declared; they resolve by deriving the
/// twist of the declared base line on the fly. Declared ids therefore must
/// not contain `!`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Universe {
    lines: BTreeMap<String, LineSpec>,
}

impl Universe {
    pub fn new(lines: Vec<LineSpec>) -> Result<Universe, UniverseError> {
        let mut map: BTreeMap<String, LineSpec> = BTreeMap::new();
        for line in lines {
            let key = line.id.to_string();
            if line.id.is_twisted() || key.contains('!') {
                return Err(UniverseError::ReservedId(key));
            }
            if line.deg == 0 {
                return Err(UniverseError::ZeroDegree(key));
            }
            if map.insert(key.clone(), line).is_some() {
                return Err(UniverseError::DuplicateId(key));
            }
        }
        let u = Universe { lines: map };
        for line in u.lines.values() {
            if let Duality::Partner { other } = &line.duality {
                let a = line.id.to_string();
                let b = other.to_string();
                if a == b {
                    return Err(UniverseError::SelfPartner(a));
                }
                let Some(back) = u.lines.get(&b) else {
                    return Err(UniverseError::UnknownPartner {
                        line: a,
                        partner: b,
                    });
                };
                match &back.duality {
                    Duality::Partner { other: back_other } if *back_other == line.id => {}
                    _ => return Err(UniverseError::InconsistentPartners { a, b }),
                }
                if back.deg != line.deg {
                    return Err(UniverseError::PartnerDegMismatch { a, b });
                }
            }
        }
        Ok(u)
    }

    /// A universe holding a single conjugate self-dual line.
    pub fn single_self_line(id: &str, deg: u32, eta0: Sign, dist_a: u8) -> Universe {
        Universe::new(vec![LineSpec::self_dual(id, deg, eta0, dist_a)])
            .expect("single line is always consistent")
    }

    /// Resolves a line id, deriving `!chi` twists of declared lines.
    pub fn line(&self, id: &LineId) -> Result<LineSpec, ModelError> {
        let spec = self
            .lines
            .get(id.base())
            .ok_or_else(|| ModelError::UnknownLine(id.clone()))?;
        Ok(if id.is_twisted() {
            spec.chi_twisted()
        } else {
            spec.clone()
        })
    }

    pub fn contains(&self, id: &LineId) -> bool {
        self.lines.contains_key(id.base())
    }

    /// Declared lines, in id order. Twisted derivations are not included.
    pub fn declared(&self) -> impl Iterator<Item = &LineSpec> {
        self.lines.values()
    }
}

// ---------------------------------------------------------------------------
// Segments
// ---------------------------------------------------------------------------

/// A nonempty segment `[b, e]` on a cuspidal line: the set `{ν^b σ, …, ν^e σ}`.
///
/// Invariants: `b ≤ e` and `e − b` is an integer, so both endpoints lie on
/// one lattice. The `Ord` implementation is the canonical multisegment order
/// (line ascending, beginning descending, end descending), which is also a
/// standard order in the linking sense.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    line: LineId,
    b: HalfInt,
    e: HalfInt,
}

impl Segment {
    pub fn new(line: LineId, b: HalfInt, e: HalfInt) -> Result<Segment, ModelError> {
        if (e - b).doubled() % 2 != 0 {
            return Err(ModelError::LatticeMismatch { b, e });
        }
        if b > e {
            return Err(ModelError::EmptySegment { b, e });
        }
        Ok(Segment { line, b, e })
    }

    pub fn line(&self) -> &LineId {
        &self.line
    }

    /// Beginning exponent `b(Δ)`.
    pub fn begin(&self) -> HalfInt {
        self.b
    }

    /// End exponent `e(Δ)`.
    pub fn end(&self) -> HalfInt {
        self.e
    }

    /// Length `ℓ(Δ) = e − b + 1`. Segments are nonempty by construction, so
    /// there is no `is_empty` counterpart.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> u32 {
        ((self.e - self.b).doubled() / 2 + 1) as u32
    }

    pub fn lattice(&self) -> Lattice {
        self.b.lattice()
    }

    /// The exponent of the segment's center, `(b + e) / 2`. Always a
    /// half-integer because `e − b` is integral.
    pub fn center(&self) -> HalfInt {
        HalfInt::from_doubled((self.b.doubled() + self.e.doubled()) / 2)
    }

    /// Exponents covered by the segment, ascending.
    pub fn points(&self) -> impl Iterator<Item = HalfInt> + '_ {
        (0..self.len() as i32).map(move |i| self.b + HalfInt::whole(i))
    }

    /// Set containment, meaningful only on a common effective line.
    pub fn contains(&self, other: &Segment) -> bool {
        self.line == other.line
            && self.lattice() == other.lattice()
            && self.b <= other.b
            && other.e <= self.e
    }

    /// Two segments are linked when they lie on one effective line, neither
    /// contains the other, and their union is again a segment.
    pub fn is_linked(&self, other: &Segment) -> bool {
        if self.line != other.line || self.lattice() != other.lattice() {
            return false;
        }
        if self.contains(other) || other.contains(self) {
            return false;
        }
        let (first, second) = if self.b <= other.b {
            (self, other)
        } else {
            (other, self)
        };
        second.b <= first.e + HalfInt::whole(1)
    }

    /// `self ≺ other`: linked, and the union starts where `self` starts.
    pub fn precedes(&self, other: &Segment) -> bool {
        self.is_linked(other) && self.b < other.b
    }

    /// The conjugate-dual segment `[−e, −b]` on the conjugate-dual line.
    pub fn conj_dual(&self, universe: &Universe) -> Result<Segment, ModelError> {
        let line = universe.line(&self.line)?.conj_dual_line();
        Ok(Segment {
            line,
            b: -self.e,
            e: -self.b,
        })
    }

    /// Relabels the segment onto the `χ₋₁`-twisted line, keeping exponents.
    pub fn chi_twist(&self) -> Segment {
        Segment {
            line: self.line.chi_twist(),
            b: self.b,
            e: self.e,
        }
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.line
            .cmp(&other.line)
            .then_with(|| other.b.cmp(&self.b))
            .then_with(|| other.e.cmp(&self.e))
    }
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == self.e {
            write!(f, "[{}]@{}", self.b, self.line)
        } else {
            write!(f, "[{},{}]@{}", self.b, self.e, self.line)
        }
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Builds a segment after checking that its line is declared (or a twist of a
/// declared line) in the universe.
pub fn make_segment(
    universe: &Universe,
    line: LineId,
    b: HalfInt,
    e: HalfInt,
) -> Result<Segment, ModelError> {
    if !universe.contains(&line) {
        return Err(ModelError::UnknownLine(line));
    }
    Segment::new(line, b, e)
}

// ---------------------------------------------------------------------------
// Multisegments
// ---------------------------------------------------------------------------

/// A finite multiset of segments, kept in canonical order.
///
/// Equality is exact multiset equality. The canonical order (line ascending,
/// beginning descending, end descending) doubles as a standard order:
/// no segment precedes a later one.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiSegment {
    segs: Vec<Segment>,
}

impl MultiSegment {
    pub fn new(mut segs: Vec<Segment>) -> MultiSegment {
        segs.sort();
        MultiSegment { segs }
    }

    pub fn empty() -> MultiSegment {
        MultiSegment::default()
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segs
    }

    /// Number of segments `t = |𝔪|`.
    pub fn len(&self) -> usize {
        self.segs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    /// Sum of segment lengths (number of cuspidal points with multiplicity).
    pub fn total_length(&self) -> u64 {
        self.segs.iter().map(|s| s.len() as u64).sum()
    }

    /// A standard order: for `i < j` the `i`-th segment never precedes the
    /// `j`-th. The canonical order has this property by construction; it is
    /// re-checked here in debug builds.
    pub fn standard_order(&self) -> &[Segment] {
        debug_assert!(
            self.segs
                .iter()
                .enumerate()
                .all(|(i, a)| self.segs[i + 1..].iter().all(|b| !a.precedes(b))),
            "canonical order failed the standard-order property"
        );
        &self.segs
    }

    /// The set of cuspidal points covered by some segment.
    pub fn support(&self) -> BTreeSet<(LineId, HalfInt)> {
        self.segs
            .iter()
            .flat_map(|s| s.points().map(move |p| (s.line().clone(), p)))
            .collect()
    }

    /// Cuspidal points with coverage multiplicities.
    pub fn support_multiplicities(&self) -> BTreeMap<(LineId, HalfInt), usize> {
        let mut out = BTreeMap::new();
        for s in &self.segs {
            for p in s.points() {
                *out.entry((s.line().clone(), p)).or_insert(0) += 1;
            }
        }
        out
    }

    /// True iff all segments lie on one effective cuspidal line: a single
    /// line id *and* a single exponent lattice. Vacuously true when empty.
    pub fn is_rigid(&self) -> bool {
        match self.segs.first() {
            None => true,
            Some(first) => self
                .segs
                .iter()
                .all(|s| s.line() == first.line() && s.lattice() == first.lattice()),
        }
    }

    /// The effective line `(id, lattice)` of a rigid nonempty multisegment.
    pub fn rigid_line(&self) -> Option<(LineId, Lattice)> {
        let first = self.segs.first()?;
        self.is_rigid()
            .then(|| (first.line().clone(), first.lattice()))
    }

    /// Applies `∨` followed by `τ` segmentwise: `[b,e]@L ↦ [−e,−b]@L̄` where
    /// `L̄` is `L` itself for a self-dual line and the partner otherwise.
    pub fn conj_dual(&self, universe: &Universe) -> Result<MultiSegment, ModelError> {
        let segs = self
            .segs
            .iter()
            .map(|s| s.conj_dual(universe))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MultiSegment::new(segs))
    }

    /// True iff the multisegment equals its conjugate dual as a multiset.
    pub fn is_conj_self_dual(&self, universe: &Universe) -> Result<bool, ModelError> {
        Ok(self.conj_dual(universe)? == *self)
    }

    /// The contragredient `[b,e] ↦ [−e,−b]`, exposed only on self-dual lines
    /// where the universe identifies the dual line with the line itself.
    pub fn contragredient(&self, universe: &Universe) -> Result<MultiSegment, ModelError> {
        let segs = self
            .segs
            .iter()
            .map(|s| {
                let spec = universe.line(s.line())?;
                if !spec.is_self_dual() {
                    return Err(ModelError::NotSelfDualLine(s.line().clone()));
                }
                Ok(Segment {
                    line: s.line().clone(),
                    b: -s.e,
                    e: -s.b,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MultiSegment::new(segs))
    }

    /// Galois conjugation on a self-dual line fixes the combinatorial shadow;
    /// exposed for symmetry with [`MultiSegment::contragredient`], and
    /// restricted to self-dual lines for the same reason.
    pub fn tau_conj(&self, universe: &Universe) -> Result<MultiSegment, ModelError> {
        for s in &self.segs {
            let spec = universe.line(s.line())?;
            if !spec.is_self_dual() {
                return Err(ModelError::NotSelfDualLine(s.line().clone()));
            }
        }
        Ok(self.clone())
    }

    /// Relabels every segment onto its `χ₋₁`-twisted line.
    pub fn chi_twist(&self) -> MultiSegment {
        // Toggling the twist flag swaps the order of a line and its twist,
        // so the result must be re-sorted.
        MultiSegment::new(self.segs.iter().map(Segment::chi_twist).collect())
    }
}

impl FromIterator<Segment> for MultiSegment {
    fn from_iter<T: IntoIterator<Item = Segment>>(iter: T) -> Self {
        MultiSegment::new(iter.into_iter().collect())
    }
}

impl fmt::Display for MultiSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segs.is_empty() {
            return write!(f, "empty");
        }
        for (i, s) in self.segs.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The id of the `χ₋₁`-twisted line.
pub fn chi_twist_line(line: &LineId) -> LineId {
    line.chi_twist()
}

// ---------------------------------------------------------------------------
// Representation specifications
// ---------------------------------------------------------------------------

/// An ordered product of multisegment factors `π = π₁ × ⋯ × π_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepSpec {
    factors: Vec<MultiSegment>,
}

impl RepSpec {
    /// Every factor must be nonempty.
    pub fn new(factors: Vec<MultiSegment>) -> Result<RepSpec, ModelError> {
        if let Some(index) = factors.iter().position(MultiSegment::is_empty) {
            return Err(ModelError::EmptyFactor { index });
        }
        Ok(RepSpec { factors })
    }

    pub fn factors(&self) -> &[MultiSegment] {
        &self.factors
    }

    /// The multiset sum of all factors.
    pub fn concatenation(&self) -> MultiSegment {
        self.factors
            .iter()
            .flat_map(|m| m.segments().iter().cloned())
            .collect()
    }
}

impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "({m})")?;
        }
        Ok(())
    }
}
