//! Depth-first branch-and-bound over sign assignments.
//!
//! Vertices are branched in descending degree order (ties by ascending id),
//! `−1` before `+1`. A node is pruned when
//!
//! * the optimistic weight (current weight minus the number of unassigned
//!   vertices) cannot beat the incumbent, or
//! * fewer than `k` vertices can still reach the mode threshold, counting
//!   every unassigned vertex in N[v] as `+1`.
//!
//! The search stops outright once the incumbent meets the largest applicable
//! parity-lifted lower bound from [`crate::bounds`].

use std::sync::atomic::{AtomicBool, AtomicI64, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

use crate::bounds::bound_report;
use crate::error::{check_k, Result};
use crate::graph::Graph;

use super::{evaluate, greedy_upper, Mode, SearchStats, SignAssignment, SolveResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BnbOptions {
    /// 1 runs single-threaded and returns the canonical (lexicographically
    /// smallest) optimal witness. More workers guarantee only the value.
    pub workers: usize,
    /// Stop as soon as the incumbent reaches the best applicable lower bound.
    pub use_global_bound: bool,
}

impl Default for BnbOptions {
    fn default() -> Self {
        BnbOptions {
            workers: 1,
            use_global_bound: true,
        }
    }
}

pub fn solve_bnb(graph: &Graph, k: usize, mode: Mode) -> Result<SolveResult> {
    solve_bnb_with(graph, k, mode, BnbOptions::default())
}

pub fn solve_bnb_with(graph: &Graph, k: usize, mode: Mode, opts: BnbOptions) -> Result<SolveResult> {
    let n = graph.order();
    check_k(k, n)?;

    let seed = greedy_upper(graph, k, mode)?;
    // γ_ks ≥ γ^NN_ks, so the nonnegative bounds are valid in both modes.
    let lower = if opts.use_global_bound {
        bound_report(graph, k)?.best_lifted()
    } else {
        None
    };

    let shared = Shared {
        incumbent: AtomicI64::new(seed.weight()),
        best: Mutex::new(seed.values().to_vec()),
        stop: AtomicBool::new(false),
        lower,
    };
    let mut stats = SearchStats::default();
    if shared.reached_lower(seed.weight()) {
        stats.prunes_global_bound += 1;
    } else {
        let engine = Engine::new(graph, mode, k);
        if opts.workers <= 1 {
            let mut engine = engine;
            engine.optimize(0, &shared);
            stats.absorb(&engine.stats);
        } else {
            stats.absorb(&run_parallel(engine, &shared, opts.workers));
        }
    }

    let optimum = shared.incumbent.load(Ordering::SeqCst);
    let mut witness = shared.best.into_inner().expect("incumbent lock poisoned");
    if opts.workers <= 1 {
        let mut engine = Engine::new(graph, mode, k);
        witness = engine.canonical_witness(optimum, witness);
        stats.absorb(&engine.stats);
    }
    let witness = SignAssignment(witness);
    let satisfied_count = evaluate(graph, &witness, mode)?.satisfied_count;
    Ok(SolveResult {
        optimum,
        witness,
        satisfied_count,
        stats,
    })
}

struct Shared {
    incumbent: AtomicI64,
    best: Mutex<Vec<i8>>,
    stop: AtomicBool,
    lower: Option<i64>,
}

impl Shared {
    fn reached_lower(&self, weight: i64) -> bool {
        self.lower.is_some_and(|lb| weight <= lb)
    }

    fn offer(&self, weight: i64, signs: &[i8]) -> bool {
        let mut best = self.best.lock().expect("incumbent lock poisoned");
        if weight >= self.incumbent.load(Ordering::SeqCst) {
            return false;
        }
        best.copy_from_slice(signs);
        self.incumbent.store(weight, Ordering::SeqCst);
        if self.reached_lower(weight) {
            self.stop.store(true, Ordering::SeqCst);
        }
        true
    }
}

/// Partial assignment with incrementally maintained closed-sum bounds.
#[derive(Clone)]
struct Engine<'g> {
    closed: Vec<Vec<usize>>,
    order: Vec<usize>,
    graph: &'g Graph,
    threshold: i64,
    k: usize,
    /// 0 = unassigned.
    sign: Vec<i8>,
    /// Sum of assigned signs in N[v].
    partial: Vec<i64>,
    /// Unassigned vertices in N[v].
    free: Vec<i64>,
    /// Vertices with partial + free ≥ threshold.
    alive: usize,
    weight: i64,
    unassigned: usize,
    positives: usize,
    stats: SearchStats,
}

impl<'g> Engine<'g> {
    fn new(graph: &'g Graph, mode: Mode, k: usize) -> Self {
        let n = graph.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
        Engine {
            closed: (0..n).map(|v| graph.closed_neighborhood(v)).collect(),
            order,
            graph,
            threshold: mode.threshold(),
            k,
            sign: vec![0; n],
            partial: vec![0; n],
            free: (0..n).map(|v| graph.degree(v) as i64 + 1).collect(),
            alive: n,
            weight: 0,
            unassigned: n,
            positives: 0,
            stats: SearchStats::default(),
        }
    }

    fn assign(&mut self, v: usize, s: i8) {
        debug_assert_eq!(self.sign[v], 0);
        self.sign[v] = s;
        self.weight += i64::from(s);
        self.unassigned -= 1;
        if s > 0 {
            self.positives += 1;
        }
        for &w in &self.closed[v] {
            let before = self.partial[w] + self.free[w] >= self.threshold;
            self.partial[w] += i64::from(s);
            self.free[w] -= 1;
            let after = self.partial[w] + self.free[w] >= self.threshold;
            if before && !after {
                self.alive -= 1;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let s = self.sign[v];
        debug_assert_ne!(s, 0);
        self.sign[v] = 0;
        self.weight -= i64::from(s);
        self.unassigned += 1;
        if s > 0 {
            self.positives -= 1;
        }
        for &w in &self.closed[v] {
            let before = self.partial[w] + self.free[w] >= self.threshold;
            self.partial[w] -= i64::from(s);
            self.free[w] += 1;
            let after = self.partial[w] + self.free[w] >= self.threshold;
            if !before && after {
                self.alive += 1;
            }
        }
    }

    fn next_free(&self, mut depth: usize) -> usize {
        while depth < self.order.len() && self.sign[self.order[depth]] != 0 {
            depth += 1;
        }
        depth
    }

    fn optimize(&mut self, depth: usize, shared: &Shared) {
        if shared.stop.load(Ordering::Relaxed) {
            return;
        }
        self.stats.nodes += 1;
        if self.weight - self.unassigned as i64 >= shared.incumbent.load(Ordering::Relaxed) {
            self.stats.prunes_weight += 1;
            return;
        }
        if self.alive < self.k {
            self.stats.prunes_satisfiability += 1;
            return;
        }
        let depth = self.next_free(depth);
        if depth == self.order.len() {
            // every sum is exact here, so alive is the satisfied count
            if shared.offer(self.weight, &self.sign) && shared.stop.load(Ordering::SeqCst) {
                self.stats.prunes_global_bound += 1;
            }
            return;
        }
        let v = self.order[depth];
        for s in [-1, 1] {
            self.assign(v, s);
            self.optimize(depth + 1, shared);
            self.unassign(v);
        }
    }

    /// Does some completion of the current partial assignment have exactly
    /// `target` positives and at least `k` satisfied vertices? On success the
    /// completion is left in `found`.
    fn completes_to(&mut self, depth: usize, target: usize, found: &mut Vec<i8>) -> bool {
        self.stats.nodes += 1;
        if self.positives > target || self.positives + self.unassigned < target {
            self.stats.prunes_weight += 1;
            return false;
        }
        if self.alive < self.k {
            self.stats.prunes_satisfiability += 1;
            return false;
        }
        let depth = self.next_free(depth);
        if depth == self.order.len() {
            found.copy_from_slice(&self.sign);
            return true;
        }
        let v = self.order[depth];
        for s in [-1, 1] {
            self.assign(v, s);
            let ok = self.completes_to(depth + 1, target, found);
            self.unassign(v);
            if ok {
                return true;
            }
        }
        false
    }

    /// Fixes vertices 0, 1, … in turn to `+1` whenever an optimal completion
    /// still exists, yielding the lexicographically smallest optimal witness.
    /// `known` must be an optimal assignment.
    fn canonical_witness(&mut self, optimum: i64, mut known: Vec<i8>) -> Vec<i8> {
        let n = self.graph.order();
        let target = usize::try_from((optimum + n as i64) / 2).expect("optimum ≥ −n");
        let mut found = vec![0; n];
        for v in 0..n {
            self.assign(v, 1);
            if known[v] == 1 {
                continue;
            }
            if self.completes_to(0, target, &mut found) {
                known.copy_from_slice(&found);
            } else {
                self.unassign(v);
                self.assign(v, -1);
            }
        }
        known
    }
}

/// Splits the tree on the first few vertices of the branching order and
/// explores the subtrees on the rayon pool with a shared incumbent.
fn run_parallel(engine: Engine<'_>, shared: &Shared, workers: usize) -> SearchStats {
    let n = engine.order.len();
    let split = ((workers * 8).next_power_of_two().trailing_zeros() as usize).min(n);
    let prefixes: Vec<u64> = (0..1u64 << split).collect();
    let task = |prefix: &u64| {
        let mut e = engine.clone();
        for depth in 0..split {
            let s = if prefix >> depth & 1 == 1 { 1 } else { -1 };
            e.assign(e.order[depth], s);
        }
        e.optimize(split, shared);
        e.stats
    };
    let run = || prefixes.par_iter().map(task).collect::<Vec<_>>();
    let per_task = match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    let mut stats = SearchStats::default();
    for s in &per_task {
        stats.absorb(s);
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{circulant, complete, cycle, gnp, hajos, sun};
    use crate::solver::solve_bruteforce;

    #[test]
    fn sun_three() {
        assert_eq!(solve_bnb(&sun(3).unwrap(), 12, Mode::Nonneg).unwrap().optimum, 0);
    }

    #[test]
    fn cycle_twelve_as_circulant() {
        let g = circulant(12, &[1]).unwrap();
        assert_eq!(solve_bnb(&g, 12, Mode::Nonneg).unwrap().optimum, 4);
    }

    #[test]
    fn complete_six() {
        assert_eq!(solve_bnb(&complete(6), 6, Mode::Nonneg).unwrap().optimum, 0);
    }

    #[test]
    fn matches_bruteforce_witness() {
        let graphs = [hajos(), cycle(7).unwrap(), complete(5), gnp(9, 0.4, 7).unwrap()];
        for g in &graphs {
            for k in 1..=g.order() {
                for mode in [Mode::Nonneg, Mode::Signed] {
                    let a = solve_bruteforce(g, k, mode).unwrap();
                    let b = solve_bnb(g, k, mode).unwrap();
                    assert_eq!(a.optimum, b.optimum);
                    assert_eq!(a.witness, b.witness, "k={k} mode={mode}");
                    assert_eq!(a.satisfied_count, b.satisfied_count);
                }
            }
        }
    }

    #[test]
    fn without_global_bound() {
        let opts = BnbOptions {
            use_global_bound: false,
            ..BnbOptions::default()
        };
        let r = solve_bnb_with(&sun(2).unwrap(), 8, Mode::Nonneg, opts).unwrap();
        assert_eq!(r.optimum, 0);
        assert_eq!(r.stats.prunes_global_bound, 0);
    }

    #[test]
    fn parallel_value_matches() {
        let opts = BnbOptions {
            workers: 4,
            ..BnbOptions::default()
        };
        for seed in 0..5 {
            let g = gnp(14, 0.3, seed).unwrap();
            for k in [1, 7, 14] {
                let serial = solve_bnb(&g, k, Mode::Nonneg).unwrap();
                let par = solve_bnb_with(&g, k, Mode::Nonneg, opts).unwrap();
                assert_eq!(serial.optimum, par.optimum);
                let e = evaluate(&g, &par.witness, Mode::Nonneg).unwrap();
                assert_eq!(e.weight, par.optimum);
                assert!(e.satisfied_count >= k);
            }
        }
    }

    #[test]
    fn global_bound_terminates_early() {
        let r = solve_bnb(&complete(10), 10, Mode::Nonneg).unwrap();
        assert_eq!(r.optimum, 0);
        assert_eq!(r.stats.prunes_global_bound, 1);
    }

    #[test]
    fn disconnected_graph() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (3, 4)]).unwrap();
        for k in 1..=7 {
            for mode in [Mode::Nonneg, Mode::Signed] {
                assert_eq!(
                    solve_bnb(&g, k, mode).unwrap().optimum,
                    solve_bruteforce(&g, k, mode).unwrap().optimum
                );
            }
        }
    }
}
