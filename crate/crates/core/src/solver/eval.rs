use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{Mode, SignAssignment};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalResult {
    pub weight: i64,
    /// f(N[v]) for every vertex.
    pub closed_sums: Vec<i64>,
    /// C_f under the mode's threshold, ascending.
    pub satisfied: Vec<usize>,
    pub satisfied_count: usize,
    /// P ∩ C_f.
    pub p1: Vec<usize>,
    /// M ∩ C_f.
    pub m1: Vec<usize>,
    /// |E(P, M)|.
    pub crossing_edges: usize,
}

impl EvalResult {
    pub fn is_feasible(&self, k: usize) -> bool {
        self.satisfied_count >= k
    }
}

pub fn evaluate(graph: &Graph, f: &SignAssignment, mode: Mode) -> Result<EvalResult> {
    let n = graph.order();
    if f.len() != n {
        return Err(Error::AssignmentLength {
            expected: n,
            got: f.len(),
        });
    }
    let threshold = mode.threshold();
    let closed_sums: Vec<i64> = (0..n)
        .map(|v| {
            i64::from(f.get(v)) + graph.neighbors(v).iter().map(|&u| i64::from(f.get(u))).sum::<i64>()
        })
        .collect();
    let satisfied: Vec<usize> = (0..n).filter(|&v| closed_sums[v] >= threshold).collect();
    let (p1, m1) = satisfied.iter().partition(|&&v| f.get(v) > 0);
    let crossing_edges = graph.edges().filter(|&(u, v)| f.get(u) != f.get(v)).count();
    Ok(EvalResult {
        weight: f.weight(),
        satisfied_count: satisfied.len(),
        closed_sums,
        satisfied,
        p1,
        m1,
        crossing_edges,
    })
}
