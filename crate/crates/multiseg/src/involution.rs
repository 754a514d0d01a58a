//! The Zelevinsky involution `𝔪 ↦ 𝔪^t`, computed by the
//! Mœglin–Waldspurger chain-peeling algorithm.
//!
//! One round of the algorithm, run independently on each effective line:
//!
//! 1. Let `e` be the maximal end over the remaining segments.
//! 2. Start the chain at a segment with end `e` and maximal beginning.
//! 3. Extend the chain: from the current member, move to a segment whose end
//!    is one less and whose beginning is strictly smaller, picking the
//!    maximal beginning among candidates; stop when there is none.
//! 4. A chain of length `r` produces the segment `[e − r + 1, e]`.
//! 5. Shorten every chain member by one at its end (dropping those that
//!    become empty) and repeat on the residue.
//!
//! The produced segments form the dual multisegment. The chain conditions
//! are a convention guarded by the involution property suite, which checks
//! `(𝔪^t)^t = 𝔪` exhaustively at test scale; a laxer variant that admits
//! equal beginnings into a chain already fails it on `{[2],[1],[1]}`.

use crate::model::{HalfInt, Lattice, LineId, MultiSegment, Segment};

/// One round of the algorithm on one effective line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MwRound {
    /// The chain chosen this round, in selection order (ends descending).
    pub chain: Vec<Segment>,
    /// The segment the chain produces.
    pub produced: Segment,
    /// What remains of the round's effective line after shortening.
    pub residue: MultiSegment,
}

/// Round-by-round record of a dual computation.
///
/// Concatenating `produced` over all rounds yields the output, and the final
/// residue of each effective line is empty. Effective lines are processed in
/// canonical order, each one to exhaustion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MwTrace {
    pub rounds: Vec<MwRound>,
}

/// Computes the dual multisegment together with its full trace.
pub fn mw_dual(m: &MultiSegment) -> (MultiSegment, MwTrace) {
    let mut trace = MwTrace::default();
    let dual = run(m, Some(&mut trace));
    (dual, trace)
}

/// Computes the dual multisegment without recording a trace.
///
/// Same algorithm as [`mw_dual`]; this variant is for bulk callers such as
/// the exhaustive property suites.
pub fn zelevinsky_dual(m: &MultiSegment) -> MultiSegment {
    run(m, None)
}

fn run(m: &MultiSegment, mut trace: Option<&mut MwTrace>) -> MultiSegment {
    let mut produced_all: Vec<Segment> = Vec::with_capacity(m.total_length() as usize);
    // The hot loop works on doubled (begin, end) pairs; segments are only
    // materialized for output and trace records.
    for (line, mut pairs) in effective_line_groups(m) {
        let mut chain: Vec<usize> = Vec::new();
        while !pairs.is_empty() {
            select_chain(&pairs, &mut chain);
            let top = pairs[chain[0]].1;
            let produced_pair = (top - 2 * (chain.len() as i32 - 1), top);

            let chain_segs = trace.is_some().then(|| {
                chain
                    .iter()
                    .map(|&i| make_seg(&line, pairs[i]))
                    .collect::<Vec<_>>()
            });

            for &i in &chain {
                pairs[i].1 -= 2;
            }
            pairs.retain(|&(b, e)| b <= e);

            let produced = make_seg(&line, produced_pair);
            if let Some(t) = trace.as_deref_mut() {
                t.rounds.push(MwRound {
                    chain: chain_segs.expect("built when tracing"),
                    produced: produced.clone(),
                    residue: pairs.iter().map(|&p| make_seg(&line, p)).collect(),
                });
            }
            produced_all.push(produced);
        }
    }
    MultiSegment::new(produced_all)
}

fn make_seg(line: &LineId, (b, e): (i32, i32)) -> Segment {
    Segment::new(
        line.clone(),
        HalfInt::from_doubled(b),
        HalfInt::from_doubled(e),
    )
    .expect("chain arithmetic keeps endpoints ordered and on one lattice")
}

type LineGroup = (LineId, Lattice, Vec<(i32, i32)>);

/// Splits a multisegment into its effective lines (line id plus lattice), in
/// canonical order, as doubled endpoint pairs. Segments on distinct
/// effective lines never interact, so the involution acts on each group
/// independently.
fn effective_line_groups(m: &MultiSegment) -> Vec<(LineId, Vec<(i32, i32)>)> {
    let mut groups: Vec<LineGroup> = Vec::with_capacity(2);
    for seg in m.segments() {
        let pair = (seg.begin().doubled(), seg.end().doubled());
        match groups
            .iter_mut()
            .find(|(l, lat, _)| l == seg.line() && *lat == seg.lattice())
        {
            Some((_, _, g)) => g.push(pair),
            None => {
                let mut g = Vec::with_capacity(m.len());
                g.push(pair);
                groups.push((seg.line().clone(), seg.lattice(), g));
            }
        }
    }
    groups.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
    groups.into_iter().map(|(l, _, g)| (l, g)).collect()
}

/// Fills `chain` with indices into `pairs`: the head (maximal end, then
/// maximal beginning) followed by the steps of the peeling walk (end one
/// less, beginning strictly smaller, maximal among candidates).
fn select_chain(pairs: &[(i32, i32)], chain: &mut Vec<usize>) {
    debug_assert!(!pairs.is_empty());
    chain.clear();
    let mut head = 0;
    for (i, &(b, e)) in pairs.iter().enumerate() {
        if (e, b) > (pairs[head].1, pairs[head].0) {
            head = i;
        }
    }
    chain.push(head);
    let (mut cap_b, mut cur_e) = pairs[head];
    loop {
        let mut next: Option<usize> = None;
        for (i, &(b, e)) in pairs.iter().enumerate() {
            if e != cur_e - 2 || b >= cap_b || chain.contains(&i) {
                continue;
            }
            if next.is_none_or(|j| b > pairs[j].0) {
                next = Some(i);
            }
        }
        match next {
            Some(i) => {
                chain.push(i);
                (cap_b, cur_e) = pairs[i];
            }
            None => break,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{make_segment, LineSpec, Sign, Universe};

    fn universe() -> Universe {
        Universe::new(vec![
            LineSpec::self_dual("one", 1, Sign::Plus, 0),
            LineSpec::self_dual("rho2", 2, Sign::Plus, 0),
        ])
        .unwrap()
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
    fn single_segment_becomes_points() {
        let u = universe();
        let m = mseg(&u, &[("one", 0, 4)]); // [0,2]
        let expected = mseg(&u, &[("one", 0, 0), ("one", 2, 2), ("one", 4, 4)]);
        assert_eq!(zelevinsky_dual(&m), expected);
    }

    #[test]
    fn staircase_is_self_dual() {
        let u = universe();
        let m = mseg(&u, &[("one", 0, 2), ("one", 2, 4)]); // {[0,1],[1,2]}
        assert_eq!(zelevinsky_dual(&m), m);
    }

    #[test]
    fn nested_pair() {
        let u = universe();
        let m = mseg(&u, &[("one", 0, 4), ("one", 2, 2)]); // {[0,2],[1,1]}
        let expected = mseg(
            &u,
            &[("one", 0, 0), ("one", 2, 2), ("one", 2, 2), ("one", 4, 4)],
        );
        assert_eq!(zelevinsky_dual(&m), expected);
        // And back again.
        assert_eq!(zelevinsky_dual(&expected), m);
    }

    #[test]
    fn empty_input() {
        let (dual, trace) = mw_dual(&MultiSegment::empty());
        assert!(dual.is_empty());
        assert!(trace.rounds.is_empty());
    }

    #[test]
    fn trace_rounds_account_for_the_output() {
        let u = universe();
        let m = mseg(&u, &[("one", 0, 2), ("one", 2, 4), ("one", 0, 0)]);
        let (dual, trace) = mw_dual(&m);
        let produced: MultiSegment = trace.rounds.iter().map(|r| r.produced.clone()).collect();
        assert_eq!(produced, dual);
        assert!(trace.rounds.last().unwrap().residue.is_empty());

        // Chains walk ends downward with strictly shrinking beginnings.
        for round in &trace.rounds {
            for pair in round.chain.windows(2) {
                assert_eq!(pair[0].end() - HalfInt::whole(1), pair[1].end());
                assert!(pair[1].begin() < pair[0].begin());
            }
        }
    }

    #[test]
    fn lines_are_processed_independently() {
        let u = universe();
        let m = mseg(&u, &[("one", 0, 4), ("rho2", 0, 2)]);
        let by_line: MultiSegment = zelevinsky_dual(&mseg(&u, &[("one", 0, 4)]))
            .segments()
            .iter()
            .chain(zelevinsky_dual(&mseg(&u, &[("rho2", 0, 2)])).segments())
            .cloned()
            .collect();
        assert_eq!(zelevinsky_dual(&m), by_line);

        // Two lattices on one id are independent effective lines as well.
        let mixed = mseg(&u, &[("one", 0, 4), ("one", 1, 3)]);
        let by_lattice: MultiSegment = zelevinsky_dual(&mseg(&u, &[("one", 0, 4)]))
            .segments()
            .iter()
            .chain(zelevinsky_dual(&mseg(&u, &[("one", 1, 3)])).segments())
            .cloned()
            .collect();
        assert_eq!(zelevinsky_dual(&mixed), by_lattice);
    }

    #[test]
    fn dual_preserves_point_multiplicities() {
        let u = universe();
        let m = mseg(&u, &[("one", 0, 4), ("one", 2, 6), ("one", 2, 2)]);
        let dual = zelevinsky_dual(&m);
        assert_eq!(m.support_multiplicities(), dual.support_multiplicities());
    }

    /// Independent closed-form oracle: the dual of a rectangular staircase
    /// of `k` rows of length `l` is the transposed staircase of `l` rows of
    /// length `k` (rows `[j, j+l-1]` map to rows `[i, i+k-1]`).
    #[test]
    fn staircase_duality_matches_the_closed_form() {
        let u = universe();
        let staircase = |rows: i32, len: i32| -> MultiSegment {
            (0..rows)
                .map(|j| {
                    make_segment(
                        &u,
                        LineId::new("one"),
                        HalfInt::whole(j),
                        HalfInt::whole(j + len - 1),
                    )
                    .unwrap()
                })
                .collect()
        };
        for rows in 1..=5 {
            for len in 1..=5 {
                assert_eq!(
                    zelevinsky_dual(&staircase(rows, len)),
                    staircase(len, rows),
                    "staircase {rows}x{len}"
                );
            }
        }
    }
}
