//! Known exact values for named graph families, with their sources.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::generators;
use crate::graph::Graph;
use crate::solver::Mode;

/// γ_s(C_n): n/3, ⌊n/3⌋+1 or ⌊n/3⌋+2 by n mod 3.
pub fn exact_cycle_signed(n: usize) -> Result<i64> {
    if n < 3 {
        return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
    }
    let third = (n / 3) as i64;
    Ok(match n % 3 {
        0 => third,
        1 => third + 1,
        _ => third + 2,
    })
}

/// γ^NN_s(C_n); cycles are even graphs, so this equals γ_s(C_n).
pub fn exact_cycle_nn(n: usize) -> Result<i64> {
    exact_cycle_signed(n)
}

/// γ^NN_s(K_n) = n mod 2.
pub fn exact_complete_nn(n: usize) -> i64 {
    (n % 2) as i64
}

/// γ^NN_s of the sun gadget on a 2t-cycle: 0.
pub fn exact_sun_nn(t: usize) -> Result<i64> {
    if t < 2 {
        return Err(Error::Parameter(format!("sun gadget needs t >= 2, got {t}")));
    }
    Ok(0)
}

/// γ^NN_s(Hajós) = 0.
pub fn exact_hajos_nn() -> i64 {
    0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceValue {
    pub family: &'static str,
    pub param: usize,
    /// Full domination (k = n) for every entry in the table.
    pub mode: Mode,
    pub value: i64,
    pub provenance: &'static str,
}

impl ReferenceValue {
    pub fn graph(&self) -> Graph {
        match self.family {
            "cycle" => generators::cycle(self.param).expect("table cycles have n >= 3"),
            "complete" => generators::complete(self.param),
            "sun" => generators::sun(self.param).expect("table suns have t >= 2"),
            "hajos" => generators::hajos(),
            other => unreachable!("unknown reference family {other}"),
        }
    }
}

const CYCLE_SIGNED: &str = "signed domination number of C_n (n/3, floor(n/3)+1, floor(n/3)+2 by n mod 3)";
const CYCLE_NN: &str = "even graphs: nonnegative and signed numbers coincide; applied to C_n";
const COMPLETE_NN: &str = "K_n: 0 for even n, 1 for odd n";
const SUN_NN: &str = "2t-cycle with a triangle on every edge: cycle +1, gadget -1 has weight 0";
const HAJOS_NN: &str = "Hajos graph: nonnegative signed domination number 0";

/// Reference entries: cycles 3..=30 in both modes, complete graphs 1..=12,
/// sun gadgets t = 2..=4, and the Hajós graph.
pub fn reference_table() -> Vec<ReferenceValue> {
    let mut out = Vec::new();
    for n in 3..=30 {
        out.push(ReferenceValue {
            family: "cycle",
            param: n,
            mode: Mode::Signed,
            value: exact_cycle_signed(n).expect("n >= 3"),
            provenance: CYCLE_SIGNED,
        });
        out.push(ReferenceValue {
            family: "cycle",
            param: n,
            mode: Mode::Nonneg,
            value: exact_cycle_nn(n).expect("n >= 3"),
            provenance: CYCLE_NN,
        });
    }
    for n in 1..=12 {
        out.push(ReferenceValue {
            family: "complete",
            param: n,
            mode: Mode::Nonneg,
            value: exact_complete_nn(n),
            provenance: COMPLETE_NN,
        });
    }
    for t in 2..=4 {
        out.push(ReferenceValue {
            family: "sun",
            param: t,
            mode: Mode::Nonneg,
            value: exact_sun_nn(t).expect("t >= 2"),
            provenance: SUN_NN,
        });
    }
    out.push(ReferenceValue {
        family: "hajos",
        param: 0,
        mode: Mode::Nonneg,
        value: exact_hajos_nn(),
        provenance: HAJOS_NN,
    });
    out
}

/// `family,param,n,k,mode,value,provenance` rows.
pub fn reference_csv() -> String {
    let mut out = String::from("family,param,n,k,mode,value,provenance\n");
    for r in reference_table() {
        let n = r.graph().order();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},\"{}\"",
            r.family, r.param, n, n, r.mode, r.value, r.provenance
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{solve_bnb, solve_bruteforce};

    #[test]
    fn cycle_values() {
        assert_eq!(exact_cycle_signed(6).unwrap(), 2);
        assert_eq!(exact_cycle_signed(7).unwrap(), 3);
        assert_eq!(exact_cycle_signed(8).unwrap(), 4);
        assert_eq!(exact_cycle_nn(9).unwrap(), 3);
        assert_eq!(exact_cycle_nn(4).unwrap(), 2);
        assert!(exact_cycle_signed(2).is_err());
        for n in 3..=30 {
            assert_eq!(exact_cycle_nn(n), exact_cycle_signed(n));
        }
    }

    #[test]
    fn complete_and_sun_values() {
        assert_eq!(exact_complete_nn(4), 0);
        assert_eq!(exact_complete_nn(5), 1);
        assert_eq!(exact_complete_nn(1), 1);
        assert_eq!(exact_sun_nn(2).unwrap(), 0);
        assert!(exact_sun_nn(1).is_err());
        assert_eq!(exact_hajos_nn(), 0);
    }

    #[test]
    fn table_matches_solvers() {
        for r in reference_table() {
            let g = r.graph();
            let n = g.order();
            assert_eq!((r.value - n as i64).rem_euclid(2), 0, "{r:?}");
            if n <= 12 {
                assert_eq!(solve_bruteforce(&g, n, r.mode).unwrap().optimum, r.value, "{r:?}");
            }
            if n <= 20 {
                assert_eq!(solve_bnb(&g, n, r.mode).unwrap().optimum, r.value, "{r:?}");
            }
        }
    }

    #[test]
    fn csv_has_one_row_per_entry() {
        let csv = reference_csv();
        assert_eq!(csv.lines().count(), reference_table().len() + 1);
        assert!(csv.contains("hajos,0,6,6,nonneg,0,"));
    }
}
