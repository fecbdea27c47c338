//! Counting inequalities that every (optimal) nonnegative signed
//! (k-sub)dominating function must satisfy, used as test oracles.

use crate::graph::{DegreeProfile, Graph};
use crate::solver::{EvalResult, SignAssignment};

/// `lhs >= rhs` with both sides kept for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inequality {
    pub lhs: i64,
    pub rhs: i64,
}

impl Inequality {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }
}

/// Both sides of 2·Σ⌈(d_i+1)/2⌉ = 2m + n + n_e.
pub fn degree_identity(p: &DegreeProfile) -> (usize, usize) {
    (2 * p.half_closed_sum(p.n), 2 * p.m + p.n + p.even_count)
}

fn degree_sum(graph: &Graph, vs: &[usize]) -> i64 {
    vs.iter().map(|&v| graph.degree(v) as i64).sum()
}

/// Σ_{v∈P} deg(v) ≥ n + n_e − 2|P| + Σ_{v∈M} deg(v), for f nonnegative on
/// every vertex of a connected graph.
pub fn full_lemma_degrees(graph: &Graph, f: &SignAssignment) -> Inequality {
    let p = f.positives();
    let m = f.negatives();
    let n_e = (0..graph.order()).filter(|&v| graph.degree(v).is_multiple_of(2)).count() as i64;
    Inequality {
        lhs: degree_sum(graph, &p),
        rhs: graph.order() as i64 + n_e - 2 * p.len() as i64 + degree_sum(graph, &m),
    }
}

/// Σ_{v∈P} deg_{G[P]}(v) ≥ Σ_{v∈P} ⌈(deg(v) − 1)/2⌉.
pub fn full_lemma_induced(graph: &Graph, f: &SignAssignment) -> Inequality {
    let p = f.positives();
    let induced: usize = p
        .iter()
        .map(|&v| graph.neighbors(v).iter().filter(|&&u| f.get(u) > 0).count())
        .sum();
    Inequality {
        lhs: induced as i64,
        // ⌈(d − 1)/2⌉ = ⌊d/2⌋ for d ≥ 0
        rhs: p.iter().map(|&v| (graph.degree(v) / 2) as i64).sum(),
    }
}

/// Σ_{v∈P} deg(v) + |P₁| ≥ Σ_{v∈P₁∪M₁} ⌈(deg(v) + 1)/2⌉, where P₁, M₁ are
/// the satisfied positive and negative vertices under the nonnegative
/// threshold.
pub fn ksub_lemma(graph: &Graph, f: &SignAssignment, eval: &EvalResult) -> Inequality {
    let half_closed = |vs: &[usize]| -> i64 { vs.iter().map(|&v| ((graph.degree(v) + 2) / 2) as i64).sum() };
    Inequality {
        lhs: degree_sum(graph, &f.positives()) + eval.p1.len() as i64,
        rhs: half_closed(&eval.p1) + half_closed(&eval.m1),
    }
}

/// f(N[v]) ≡ deg(v) + 1 (mod 2) for every vertex.
pub fn closed_sums_have_parity(graph: &Graph, eval: &EvalResult) -> bool {
    eval.closed_sums
        .iter()
        .enumerate()
        .all(|(v, &s)| (s - graph.degree(v) as i64 - 1).rem_euclid(2) == 0)
}

/// Under the nonnegative threshold, a satisfied even-degree vertex has
/// closed sum at least 1.
pub fn even_satisfied_are_positive(graph: &Graph, eval: &EvalResult) -> bool {
    eval.satisfied
        .iter()
        .filter(|&&v| graph.degree(v).is_multiple_of(2))
        .all(|&v| eval.closed_sums[v] >= 1)
}
