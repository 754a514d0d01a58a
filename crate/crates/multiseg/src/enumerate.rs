//! Exhaustive small-instance enumeration of multisegments.
//!
//! The enumerator generates every canonical multisegment built from segments
//! whose endpoints lie in a bounded exponent window on the declared lines of
//! a universe, each exactly once. The property suites run over these streams.

use thiserror::Error;

use crate::model::{HalfInt, Lattice, MultiSegment, Segment, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("case count {count} exceeds the configured bound {bound}")]
    BoundExceeded { count: u128, bound: u64 },
}

/// Which exponent lattices to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeMode {
    Integral,
    Half,
    Both,
}

impl LatticeMode {
    fn allows(self, lattice: Lattice) -> bool {
        matches!(
            (self, lattice),
            (LatticeMode::Both, _)
                | (LatticeMode::Integral, Lattice::Integral)
                | (LatticeMode::Half, Lattice::Half)
        )
    }
}

/// Bounds for an exhaustive enumeration.
#[derive(Debug, Clone)]
pub struct EnumSpec {
    pub universe: Universe,
    /// Inclusive exponent window.
    pub lo: HalfInt,
    pub hi: HalfInt,
    /// Maximum number of segments per multisegment.
    pub max_segments: usize,
    pub lattice: LatticeMode,
    /// Refuse to enumerate more cases than this (default `10^7`).
    pub case_bound: u64,
}

impl EnumSpec {
    pub fn new(
        universe: Universe,
        lo: HalfInt,
        hi: HalfInt,
        max_segments: usize,
        lattice: LatticeMode,
    ) -> EnumSpec {
        EnumSpec {
            universe,
            lo,
            hi,
            max_segments,
            lattice,
            case_bound: 10_000_000,
        }
    }

    /// All segments within bounds, in canonical order.
    pub fn segment_pool(&self) -> Vec<Segment> {
        let mut pool = Vec::new();
        for line in self.universe.declared() {
            for lattice_parity in [0, 1] {
                // Doubled values with the given parity inside [lo, hi].
                let mut b_doubled = self.lo.doubled();
                if (b_doubled % 2 + 2) % 2 != lattice_parity {
                    b_doubled += 1;
                }
                let mut b = b_doubled;
                while b <= self.hi.doubled() {
                    let lattice = HalfInt::from_doubled(b).lattice();
                    if self.lattice.allows(lattice) {
                        let mut e = b;
                        while e <= self.hi.doubled() {
                            pool.push(
                                Segment::new(
                                    line.id.clone(),
                                    HalfInt::from_doubled(b),
                                    HalfInt::from_doubled(e),
                                )
                                .expect("endpoints share a lattice by construction"),
                            );
                            e += 2;
                        }
                    }
                    b += 2;
                }
            }
        }
        pool.sort();
        pool
    }

    /// Exact number of multisegments the enumeration will yield:
    /// multisets of size at most `max_segments` over the pool.
    pub fn case_count(&self) -> u128 {
        let s = self.segment_pool().len() as u128;
        (0..=self.max_segments as u128)
            .map(|k| multiset_count(s, k))
            .sum()
    }
}

/// Number of multisets of size `k` over `s` items: `C(s + k − 1, k)`.
fn multiset_count(s: u128, k: u128) -> u128 {
    if k == 0 {
        return 1;
    }
    if s == 0 {
        return 0;
    }
    let mut num = 1u128;
    for i in 0..k {
        num = num * (s + i) / (i + 1);
    }
    num
}

/// Streams every canonical multisegment within bounds exactly once, the
/// empty one first.
pub fn enumerate_multisegments(spec: &EnumSpec) -> Result<MultiSegmentIter, EnumError> {
    let count = spec.case_count();
    if count > spec.case_bound as u128 {
        return Err(EnumError::BoundExceeded {
            count,
            bound: spec.case_bound,
        });
    }
    Ok(MultiSegmentIter {
        pool: spec.segment_pool(),
        stack: Vec::new(),
        max: spec.max_segments,
        exhausted: false,
        started: false,
    })
}

/// Iterator over multisets of pool indices in depth-first order. The index
/// stack is kept non-decreasing, so each multiset appears exactly once and
/// the segments come out in canonical order.
pub struct MultiSegmentIter {
    pool: Vec<Segment>,
    stack: Vec<usize>,
    max: usize,
    exhausted: bool,
    started: bool,
}

impl MultiSegmentIter {
    fn current(&self) -> MultiSegment {
        MultiSegment::new(self.stack.iter().map(|&i| self.pool[i].clone()).collect())
    }

    fn advance(&mut self) {
        if self.stack.len() < self.max && !self.pool.is_empty() {
            let next = self.stack.last().copied().unwrap_or(0);
            self.stack.push(next);
            return;
        }
        loop {
            match self.stack.pop() {
                None => {
                    self.exhausted = true;
                    return;
                }
                Some(top) if top + 1 < self.pool.len() => {
                    self.stack.push(top + 1);
                    return;
                }
                Some(_) => {}
            }
        }
    }
}

impl Iterator for MultiSegmentIter {
    type Item = MultiSegment;

    fn next(&mut self) -> Option<MultiSegment> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(MultiSegment::empty());
        }
        self.advance();
        if self.exhausted {
            return None;
        }
        Some(self.current())
    }
}
