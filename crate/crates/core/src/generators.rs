//! Graph families used for reference values, sharpness checks, and random
//! ensembles.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("complete graph is simple")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

/// Cycle `c_0..c_{2t-1}` (ids `0..2t`) with one extra vertex `u_i` (id
/// `2t + i`) adjacent to `c_i` and `c_{i+1 mod 2t}`. Order 4t, size 6t, all
/// degrees even.
pub fn sun(t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(Error::Parameter(format!("sun gadget needs t >= 2, got {t}")));
    }
    let len = 2 * t;
    let mut edges = Vec::with_capacity(6 * t);
    for i in 0..len {
        let next = (i + 1) % len;
        edges.push((i, next));
        edges.push((len + i, i));
        edges.push((len + i, next));
    }
    Graph::from_edges(2 * len, edges)
}

/// Hajós graph: a triangle `x_1 x_2 x_3` (ids 0..3) and vertices `y_1 y_2 y_3`
/// (ids 3..6), where `y_i` is adjacent to the two `x_j` with `j != i`.
pub fn hajos() -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                edges.push((3 + i, j));
            }
        }
    }
    Graph::from_edges(6, edges).expect("Hajós graph is simple")
}

/// Circulant graph: `i ~ i ± s (mod n)` for every offset `s`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    if offsets.is_empty() {
        return Err(Error::Parameter("circulant needs at least one offset".into()));
    }
    let mut sorted = offsets.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&bad) = sorted.iter().find(|&&s| s == 0 || s > n / 2) {
        return Err(Error::Parameter(format!(
            "circulant offset {bad} outside 1..={}",
            n / 2
        )));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for &s in &sorted {
            let j = (i + s) % n;
            // offset n/2 on even n pairs each vertex with its antipode once
            if 2 * s == n && j < i {
                continue;
            }
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, edges)
}

/// Erdős–Rényi G(n, p).
///
/// Pairs `(i, j)`, `i < j`, are visited in lexicographic order. Each draws one
/// `u64` from a ChaCha8 stream seeded with `seed` via `seed_from_u64`; the top
/// 53 bits scaled to `[0, 1)` decide the edge when strictly below `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = 1.0 / (1u64 << 53) as f64;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let draw = (rng.next_u64() >> 11) as f64 * scale;
            if draw < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}
