use crate::error::{check_k, Result};
use crate::graph::Graph;

use super::{Mode, SignAssignment};

/// Feasible upper-bound assignment used to seed branch-and-bound.
///
/// Starts from all `+1` (every closed sum is deg(v)+1 ≥ 1) and makes one pass
/// over vertices in ascending degree order, ties by id, flipping a vertex to
/// `−1` whenever at least `k` vertices stay satisfied. Flips only lower closed
/// sums, so a second pass could not flip anything new.
pub fn greedy_upper(graph: &Graph, k: usize, mode: Mode) -> Result<SignAssignment> {
    let n = graph.order();
    check_k(k, n)?;
    let threshold = mode.threshold();
    let mut sums: Vec<i64> = (0..n).map(|v| graph.degree(v) as i64 + 1).collect();
    let mut satisfied = n;
    let mut signs = vec![1i8; n];

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (graph.degree(v), v));
    for v in order {
        let closed = graph.closed_neighborhood(v);
        let lost = closed
            .iter()
            .filter(|&&w| sums[w] >= threshold && sums[w] - 2 < threshold)
            .count();
        if satisfied - lost >= k {
            signs[v] = -1;
            satisfied -= lost;
            for w in closed {
                sums[w] -= 2;
            }
        }
    }
    Ok(SignAssignment(signs))
}
