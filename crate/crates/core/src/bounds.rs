//! Closed-form lower bounds on γ^NN_s and γ^NN_ks, in exact rational
//! arithmetic.
//!
//! Every achievable weight has the parity of `n` (ω(f) = 2|P| − n), so each
//! rational bound is also reported lifted to the least integer of that parity.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde_json::{Map, Value};

use crate::error::{check_k, Error, Result};
use crate::graph::{DegreeProfile, Graph};

pub type Rational = Ratio<i64>;

fn int(x: usize) -> i64 {
    i64::try_from(x).expect("graph parameter exceeds i64")
}

/// n/2 − m.
pub fn bound_prior_halfn(p: &DegreeProfile) -> Rational {
    Rational::new(int(p.n), 2) - int(p.m)
}

/// (−4m + 3n⌈(δ+1)/2⌉ − n) / (3⌈(δ+1)/2⌉ + 1).
pub fn bound_prior_deltaceil(p: &DegreeProfile) -> Rational {
    let c = int(p.min_degree + 2) / 2;
    let (n, m) = (int(p.n), int(p.m));
    Rational::new(-4 * m + 3 * n * c - n, 3 * c + 1)
}

/// (δ − Δ)·n / (δ + Δ + 2).
pub fn bound_prior_hua(p: &DegreeProfile) -> Rational {
    let (lo, hi) = (int(p.min_degree), int(p.max_degree));
    Rational::new((lo - hi) * int(p.n), lo + hi + 2)
}

/// (nδ − nΔ + 2n_e) / (Δ + δ + 2).
pub fn bound_nn_1(p: &DegreeProfile) -> Rational {
    let (n, lo, hi) = (int(p.n), int(p.min_degree), int(p.max_degree));
    Rational::new(n * lo - n * hi + 2 * int(p.even_count), hi + lo + 2)
}

/// (2m + n_e − nΔ) / (Δ + 1).
pub fn bound_nn_2(p: &DegreeProfile) -> Rational {
    let (n, hi) = (int(p.n), int(p.max_degree));
    Rational::new(2 * int(p.m) + int(p.even_count) - n * hi, hi + 1)
}

/// (nδ + n_e − 2m) / (δ + 1).
pub fn bound_nn_3(p: &DegreeProfile) -> Rational {
    let (n, lo) = (int(p.n), int(p.min_degree));
    Rational::new(n * lo + int(p.even_count) - 2 * int(p.m), lo + 1)
}

fn ceil_sqrt(x: u64) -> u64 {
    let s = x.isqrt();
    if s * s < x {
        s + 1
    } else {
        s
    }
}

/// ⌈(−(δ+1) + √((δ+1)² + 8(nδ + n + n_e)))/2 − n⌉.
///
/// With a = δ+1 and y = 2(t+n) + a, the ceiling is the least integer t with
/// y ≥ 0 and y² ≥ x, i.e. y is the least integer ≥ √x congruent to a mod 2.
pub fn bound_nn_4(p: &DegreeProfile) -> i64 {
    let a = (p.min_degree + 1) as u64;
    let n = p.n as u64;
    let x = a * a + 8 * (n * p.min_degree as u64 + n + p.even_count as u64);
    let mut y = ceil_sqrt(x);
    if (y + a) % 2 == 1 {
        y += 1;
    }
    (int(y as usize) - int(a as usize)) / 2 - int(p.n)
}

/// ⌈√(2m + n + n_e) − n⌉.
pub fn bound_nn_5(p: &DegreeProfile) -> i64 {
    let x = (2 * p.m + p.n + p.even_count) as u64;
    ceil_sqrt(x) as i64 - int(p.n)
}

/// 2·Σ_{i≤k}⌈(d_i+1)/2⌉/(Δ+1) − n.
pub fn bound_ksub_1(p: &DegreeProfile, k: usize) -> Result<Rational> {
    check_k(k, p.n)?;
    let s = int(p.half_closed_sum(k));
    Ok(Rational::new(2 * s, int(p.max_degree) + 1) - int(p.n))
}

/// (nδ − 4m − n + 2·Σ_{i≤k}⌈(d_i+1)/2⌉)/(δ+1).
pub fn bound_ksub_2(p: &DegreeProfile, k: usize) -> Result<Rational> {
    check_k(k, p.n)?;
    let (n, lo) = (int(p.n), int(p.min_degree));
    let s = int(p.half_closed_sum(k));
    Ok(Rational::new(n * lo - 4 * int(p.m) - n + 2 * s, lo + 1))
}

/// Which form of the r-regular bound to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    /// Every vertex satisfied (k = n).
    Full,
    /// At least `k` vertices satisfied.
    Sub(usize),
}

/// r-regular graphs: k(r+2)/(r+1) − n for even r, k − n for odd r.
/// For k = n and even r this is n/(r+1); for odd r it is 0.
pub fn bound_regular(p: &DegreeProfile, coverage: Coverage) -> Result<Rational> {
    if !p.is_regular() || p.n == 0 {
        return Err(Error::NotRegular);
    }
    let k = match coverage {
        Coverage::Full => p.n,
        Coverage::Sub(k) => {
            check_k(k, p.n)?;
            k
        }
    };
    let (k, n, r) = (int(k), int(p.n), int(p.min_degree));
    Ok(if r % 2 == 0 {
        Rational::new(k * (r + 2), r + 1) - n
    } else {
        Rational::from_integer(k - n)
    })
}

/// Smallest integer ≥ `raw`.
pub fn ceil_int(raw: Rational) -> i64 {
    raw.ceil().to_integer()
}

/// Smallest integer ≥ `raw` congruent to `n` mod 2.
pub fn parity_lift(raw: Rational, n: usize) -> i64 {
    let c = ceil_int(raw);
    if (c - int(n)).is_odd() {
        c + 1
    } else {
        c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundKind {
    PriorHalfN,
    PriorDeltaCeil,
    PriorHua,
    Nn1,
    Nn2,
    Nn3,
    Nn4,
    Nn5,
    Ksub1,
    Ksub2,
    Regular,
}

impl BoundKind {
    pub const ALL: [BoundKind; 11] = [
        BoundKind::PriorHalfN,
        BoundKind::PriorDeltaCeil,
        BoundKind::PriorHua,
        BoundKind::Nn1,
        BoundKind::Nn2,
        BoundKind::Nn3,
        BoundKind::Nn4,
        BoundKind::Nn5,
        BoundKind::Ksub1,
        BoundKind::Ksub2,
        BoundKind::Regular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::PriorHalfN => "prior_halfn",
            BoundKind::PriorDeltaCeil => "prior_deltaceil",
            BoundKind::PriorHua => "prior_hua",
            BoundKind::Nn1 => "nn1",
            BoundKind::Nn2 => "nn2",
            BoundKind::Nn3 => "nn3",
            BoundKind::Nn4 => "nn4",
            BoundKind::Nn5 => "nn5",
            BoundKind::Ksub1 => "ksub1",
            BoundKind::Ksub2 => "ksub2",
            BoundKind::Regular => "regular",
        }
    }

    /// Bounds on γ^NN_s only, i.e. meaningful at k = n.
    pub fn full_domination_only(self) -> bool {
        !matches!(self, BoundKind::Ksub1 | BoundKind::Ksub2 | BoundKind::Regular)
    }

    /// Bounds whose derivation assumes a connected graph.
    pub fn needs_connected(self) -> bool {
        matches!(
            self,
            BoundKind::Nn1 | BoundKind::Nn2 | BoundKind::Nn3 | BoundKind::Nn4 | BoundKind::Nn5
        )
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    pub kind: BoundKind,
    pub raw: Rational,
    pub ceil: i64,
    pub parity_lifted: i64,
    /// False when the bound's hypothesis (k = n, connectivity) does not hold.
    pub applicable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub connected: bool,
    /// One entry per kind in [`BoundKind::ALL`] order; `Regular` is present
    /// only for regular graphs.
    pub values: Vec<BoundValue>,
}

/// Evaluates every bound for `graph` at subdomination parameter `k`.
pub fn bound_report(graph: &Graph, k: usize) -> Result<BoundReport> {
    let profile = graph.degree_profile();
    bound_report_for(&profile, graph.is_connected(), k)
}

pub fn bound_report_for(p: &DegreeProfile, connected: bool, k: usize) -> Result<BoundReport> {
    check_k(k, p.n)?;
    let mut values = Vec::with_capacity(BoundKind::ALL.len());
    for kind in BoundKind::ALL {
        let raw = match kind {
            BoundKind::PriorHalfN => bound_prior_halfn(p),
            BoundKind::PriorDeltaCeil => bound_prior_deltaceil(p),
            BoundKind::PriorHua => bound_prior_hua(p),
            BoundKind::Nn1 => bound_nn_1(p),
            BoundKind::Nn2 => bound_nn_2(p),
            BoundKind::Nn3 => bound_nn_3(p),
            BoundKind::Nn4 => Rational::from_integer(bound_nn_4(p)),
            BoundKind::Nn5 => Rational::from_integer(bound_nn_5(p)),
            BoundKind::Ksub1 => bound_ksub_1(p, k)?,
            BoundKind::Ksub2 => bound_ksub_2(p, k)?,
            BoundKind::Regular => match bound_regular(p, Coverage::Sub(k)) {
                Ok(r) => r,
                Err(_) => continue,
            },
        };
        let applicable = (!kind.full_domination_only() || k == p.n)
            && (!kind.needs_connected() || connected);
        values.push(BoundValue {
            kind,
            raw,
            ceil: ceil_int(raw),
            parity_lifted: parity_lift(raw, p.n),
            applicable,
        });
    }
    Ok(BoundReport {
        n: p.n,
        k,
        connected,
        values,
    })
}

impl BoundReport {
    pub fn get(&self, kind: BoundKind) -> Option<&BoundValue> {
        self.values.iter().find(|v| v.kind == kind)
    }

    /// Largest parity-lifted value among applicable bounds.
    pub fn best_lifted(&self) -> Option<i64> {
        self.values
            .iter()
            .filter(|v| v.applicable)
            .map(|v| v.parity_lifted)
            .max()
    }

    /// Flat `(field, value)` pairs with stable names such as
    /// `bound.nn1.raw`. Missing bounds produce empty values.
    pub fn fields(&self) -> Vec<(String, String)> {
        let mut out = vec![
            ("n".to_string(), self.n.to_string()),
            ("k".to_string(), self.k.to_string()),
            ("connected".to_string(), self.connected.to_string()),
        ];
        for kind in BoundKind::ALL {
            let v = self.get(kind);
            let prefix = format!("bound.{}", kind.name());
            out.push((format!("{prefix}.raw"), v.map(|v| v.raw.to_string()).unwrap_or_default()));
            out.push((format!("{prefix}.ceil"), v.map(|v| v.ceil.to_string()).unwrap_or_default()));
            out.push((
                format!("{prefix}.lifted"),
                v.map(|v| v.parity_lifted.to_string()).unwrap_or_default(),
            ));
            out.push((
                format!("{prefix}.applicable"),
                v.map(|v| v.applicable.to_string()).unwrap_or_default(),
            ));
        }
        out
    }

    pub fn csv_header(&self) -> String {
        self.fields().into_iter().map(|(k, _)| k).collect::<Vec<_>>().join(",")
    }

    pub fn csv_row(&self) -> String {
        self.fields().into_iter().map(|(_, v)| v).collect::<Vec<_>>().join(",")
    }

    /// JSON object with the same field names as [`BoundReport::fields`];
    /// raw values stay strings (`"-8/7"`), integers and flags are typed.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("n".into(), self.n.into());
        map.insert("k".into(), self.k.into());
        map.insert("connected".into(), self.connected.into());
        for kind in BoundKind::ALL {
            let prefix = format!("bound.{}", kind.name());
            let v = self.get(kind);
            map.insert(format!("{prefix}.raw"), v.map_or(Value::Null, |v| v.raw.to_string().into()));
            map.insert(format!("{prefix}.ceil"), v.map_or(Value::Null, |v| v.ceil.into()));
            map.insert(format!("{prefix}.lifted"), v.map_or(Value::Null, |v| v.parity_lifted.into()));
            map.insert(format!("{prefix}.applicable"), v.map_or(Value::Null, |v| v.applicable.into()));
        }
        Value::Object(map)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n={} k={} connected={}\n", self.n, self.k, self.connected);
        out.push_str(&format!(
            "{:<16} {:>10} {:>6} {:>7} {:>10}\n",
            "bound", "raw", "ceil", "lifted", "applicable"
        ));
        for v in &self.values {
            out.push_str(&format!(
                "{:<16} {:>10} {:>6} {:>7} {:>10}\n",
                v.kind.name(),
                v.raw.to_string(),
                v.ceil,
                v.parity_lifted,
                v.applicable
            ));
        }
        out
    }
}
