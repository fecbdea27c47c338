//! Exhaustive enumeration of all 2^n sign assignments.

use crate::error::{check_k, Error, Result};
use crate::graph::Graph;

use super::{Mode, SearchStats, SignAssignment, SolveResult};

pub const DEFAULT_BRUTE_CAP: usize = 20;

// masks are u64 and a full sweep must terminate
const HARD_CAP: usize = 40;

pub fn solve_bruteforce(graph: &Graph, k: usize, mode: Mode) -> Result<SolveResult> {
    solve_bruteforce_with(graph, k, mode, DEFAULT_BRUTE_CAP)
}

/// Enumerates assignments in Gray-code order, updating closed sums of N[v]
/// when vertex `v` flips.
///
/// Among optimal assignments the witness is the lexicographically smallest
/// sign vector over vertex ids, with `+1` ordered before `−1`.
pub fn solve_bruteforce_with(graph: &Graph, k: usize, mode: Mode, cap: usize) -> Result<SolveResult> {
    let n = graph.order();
    check_k(k, n)?;
    if n > cap.min(HARD_CAP) {
        return Err(Error::BruteForceCap { n, cap: cap.min(HARD_CAP) });
    }
    let threshold = mode.threshold();
    let closed: Vec<Vec<usize>> = (0..n).map(|v| graph.closed_neighborhood(v)).collect();

    // bit v of `mask` set ⇔ vertex v is −1; `key` mirrors it with vertex 0
    // as the most significant bit so integer order is lexicographic order.
    let mut sums: Vec<i64> = (0..n).map(|v| graph.degree(v) as i64 + 1).collect();
    let mut satisfied = n;
    let mut weight = n as i64;
    let mut mask: u64 = 0;
    let mut key: u64 = 0;
    let mut best = (weight, key, mask, satisfied);

    for step in 1u64..(1u64 << n) {
        let v = step.trailing_zeros() as usize;
        mask ^= 1 << v;
        key ^= 1 << (n - 1 - v);
        let delta = if mask & (1 << v) != 0 { -2 } else { 2 };
        weight += delta;
        for &w in &closed[v] {
            let before = sums[w] >= threshold;
            sums[w] += delta;
            let after = sums[w] >= threshold;
            match (before, after) {
                (true, false) => satisfied -= 1,
                (false, true) => satisfied += 1,
                _ => {}
            }
        }
        if satisfied >= k && (weight, key) < (best.0, best.1) {
            best = (weight, key, mask, satisfied);
        }
    }

    let (optimum, _, mask, satisfied_count) = best;
    let witness = (0..n)
        .map(|v| if mask & (1 << v) != 0 { -1 } else { 1 })
        .collect();
    Ok(SolveResult {
        optimum,
        witness: SignAssignment(witness),
        satisfied_count,
        stats: SearchStats {
            nodes: 1u64 << n,
            ..SearchStats::default()
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, hajos, sun};
    use crate::solver::evaluate;

    #[test]
    fn complete_five_full() {
        assert_eq!(solve_bruteforce(&complete(5), 5, Mode::Nonneg).unwrap().optimum, 1);
    }

    #[test]
    fn cycle_six_signed() {
        assert_eq!(solve_bruteforce(&cycle(6).unwrap(), 6, Mode::Signed).unwrap().optimum, 2);
    }

    #[test]
    fn small_k_cases() {
        assert_eq!(solve_bruteforce(&complete(4), 2, Mode::Nonneg).unwrap().optimum, 0);
        assert_eq!(solve_bruteforce(&cycle(4).unwrap(), 2, Mode::Nonneg).unwrap().optimum, 0);
        // K_2: (+1, −1) gives closed sums (0, 0)
        let r = solve_bruteforce(&complete(2), 2, Mode::Nonneg).unwrap();
        assert_eq!(r.optimum, 0);
        assert_eq!(r.witness.to_string(), "+-");
    }

    #[test]
    fn single_vertex() {
        let r = solve_bruteforce(&complete(1), 1, Mode::Nonneg).unwrap();
        assert_eq!(r.optimum, 1);
        assert_eq!(r.witness.to_string(), "+");
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        let g = hajos();
        let r = solve_bruteforce(&g, 6, Mode::Nonneg).unwrap();
        assert_eq!(r.optimum, 0);
        // Enumerate every optimal witness directly and take the minimum
        // under `+` < `-`, which is plain byte order on the sign string.
        let mut optimal = Vec::new();
        for bits in 0u32..64 {
            let f = SignAssignment((0..6).map(|v| if bits >> v & 1 == 1 { -1 } else { 1 }).collect());
            let e = evaluate(&g, &f, Mode::Nonneg).unwrap();
            if e.weight == 0 && e.satisfied_count == 6 {
                optimal.push(f.to_string());
            }
        }
        optimal.sort();
        assert_eq!(r.witness.to_string(), optimal[0]);
        let e = evaluate(&g, &r.witness, Mode::Nonneg).unwrap();
        assert_eq!(e.satisfied_count, r.satisfied_count);
    }

    #[test]
    fn sun_two() {
        assert_eq!(solve_bruteforce(&sun(2).unwrap(), 8, Mode::Nonneg).unwrap().optimum, 0);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            solve_bruteforce(&complete(3), 0, Mode::Nonneg),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(matches!(
            solve_bruteforce(&Graph::empty(0), 1, Mode::Nonneg),
            Err(Error::EmptyGraph)
        ));
        assert!(matches!(
            solve_bruteforce(&cycle(21).unwrap(), 21, Mode::Nonneg),
            Err(Error::BruteForceCap { n: 21, cap: 20 })
        ));
        assert!(solve_bruteforce_with(&cycle(8).unwrap(), 8, Mode::Nonneg, 8).is_ok());
        assert!(solve_bruteforce_with(&cycle(8).unwrap(), 8, Mode::Nonneg, 7).is_err());
    }
}
