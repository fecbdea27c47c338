//! Sign assignments, their evaluation, and exact minimisation of the weight
//! over (nonnegative) signed k-subdominating functions.

mod bnb;
mod brute;
mod eval;
mod greedy;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

pub use bnb::{solve_bnb, solve_bnb_with, BnbOptions};
pub use brute::{solve_bruteforce, solve_bruteforce_with, DEFAULT_BRUTE_CAP};
pub use eval::{evaluate, EvalResult};
pub use greedy::greedy_upper;

/// Closed-neighborhood threshold that makes a vertex count as satisfied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// f(N[v]) ≥ 0.
    Nonneg,
    /// f(N[v]) ≥ 1.
    Signed,
}

impl Mode {
    pub fn threshold(self) -> i64 {
        match self {
            Mode::Nonneg => 0,
            Mode::Signed => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Nonneg => "nonneg",
            Mode::Signed => "signed",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "nonneg" => Ok(Mode::Nonneg),
            "signed" => Ok(Mode::Signed),
            other => Err(Error::Parameter(format!("unknown mode `{other}`"))),
        }
    }
}

/// A total function V → {−1, +1}, stored as one `i8` per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignAssignment(Vec<i8>);

impl SignAssignment {
    /// Fails if any entry is not ±1.
    pub fn new(values: Vec<i8>) -> Result<Self, Error> {
        if let Some(pos) = values.iter().position(|&s| s != 1 && s != -1) {
            return Err(Error::Parameter(format!(
                "sign at vertex {pos} is {}, expected ±1",
                values[pos]
            )));
        }
        Ok(SignAssignment(values))
    }

    pub fn all_positive(n: usize) -> Self {
        SignAssignment(vec![1; n])
    }

    pub fn values(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> i8 {
        self.0[v]
    }

    /// ω(f) = |P| − |M|.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|&s| i64::from(s)).sum()
    }

    /// P: vertices assigned +1.
    pub fn positives(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] > 0).collect()
    }

    /// M: vertices assigned −1.
    pub fn negatives(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] < 0).collect()
    }
}

/// Renders as a string of `+` and `-`, one character per vertex.
impl fmt::Display for SignAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            f.write_str(if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for SignAssignment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(Error::Parameter(format!("bad sign character `{other}`"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SignAssignment)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes_weight: u64,
    pub prunes_satisfiability: u64,
    pub prunes_global_bound: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.prunes_weight += other.prunes_weight;
        self.prunes_satisfiability += other.prunes_satisfiability;
        self.prunes_global_bound += other.prunes_global_bound;
    }
}

/// Which exact method to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Brute force up to [`AUTO_BRUTE_LIMIT`] vertices, branch-and-bound above.
    Auto,
    Brute,
    Bnb,
}

/// Largest order `Algorithm::Auto` sends to brute force.
pub const AUTO_BRUTE_LIMIT: usize = 14;

impl Algorithm {
    /// The concrete method used for a graph of order `n`.
    pub fn resolve(self, n: usize) -> Algorithm {
        match self {
            Algorithm::Auto if n <= AUTO_BRUTE_LIMIT => Algorithm::Brute,
            Algorithm::Auto => Algorithm::Bnb,
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Brute => "brute",
            Algorithm::Bnb => "bnb",
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Algorithm::Auto),
            "brute" => Ok(Algorithm::Brute),
            "bnb" => Ok(Algorithm::Bnb),
            other => Err(Error::Parameter(format!("unknown algorithm `{other}`"))),
        }
    }
}

/// Runs `algorithm` (resolved against the graph order).
pub fn solve(
    graph: &crate::graph::Graph,
    k: usize,
    mode: Mode,
    algorithm: Algorithm,
    brute_cap: usize,
    bnb: BnbOptions,
) -> Result<SolveResult, Error> {
    match algorithm.resolve(graph.order()) {
        Algorithm::Brute => solve_bruteforce_with(graph, k, mode, brute_cap),
        _ => solve_bnb_with(graph, k, mode, bnb),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: i64,
    pub witness: SignAssignment,
    pub satisfied_count: usize,
    pub stats: SearchStats,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_string_round_trip() {
        let f: SignAssignment = "+-+-".parse().unwrap();
        assert_eq!(f.values(), &[1, -1, 1, -1]);
        assert_eq!(f.to_string(), "+-+-");
        assert_eq!(f.weight(), 0);
        assert_eq!(f.positives(), vec![0, 2]);
        assert!("+x".parse::<SignAssignment>().is_err());
        assert!(SignAssignment::new(vec![1, 0]).is_err());
    }

    #[test]
    fn auto_resolution() {
        assert_eq!(Algorithm::Auto.resolve(14), Algorithm::Brute);
        assert_eq!(Algorithm::Auto.resolve(15), Algorithm::Bnb);
        assert_eq!(Algorithm::Brute.resolve(30), Algorithm::Brute);
        assert_eq!("bnb".parse::<Algorithm>().unwrap(), Algorithm::Bnb);
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("nonneg".parse::<Mode>().unwrap(), Mode::Nonneg);
        assert_eq!("signed".parse::<Mode>().unwrap().threshold(), 1);
        assert!("both".parse::<Mode>().is_err());
    }
}
