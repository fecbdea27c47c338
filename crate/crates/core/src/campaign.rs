//! Verification campaigns and reproduction tables.
//!
//! A campaign builds a deterministic ensemble of graphs, solves every
//! instance exactly with both methods, and checks bound dominance, counting
//! lemmas, structural identities and reference values. Every failure carries
//! the graph text and parameters needed to replay it from the CLI.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::bounds::{bound_report_for, BoundKind, BoundReport, Rational};
use crate::error::{Error, Result};
use crate::generators;
use crate::graph::Graph;
use crate::invariants;
use crate::reference;
use crate::solver::{
    evaluate, solve, solve_bnb, solve_bruteforce_with, Algorithm, BnbOptions, Mode, SolveResult,
    DEFAULT_BRUTE_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Complete,
    Cycle,
    Path,
    Sun,
    Hajos,
    Circulant,
    Gnp,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Complete,
        Family::Cycle,
        Family::Path,
        Family::Sun,
        Family::Hajos,
        Family::Circulant,
        Family::Gnp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Sun => "sun",
            Family::Hajos => "hajos",
            Family::Circulant => "circulant",
            Family::Gnp => "gnp",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown family `{s}`")))
    }
}

/// Which values of k to solve for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KPolicy {
    /// k = n only.
    Full,
    /// k ∈ {1, ⌈n/2⌉, n}.
    Sweep,
    /// Every 1 ≤ k ≤ n.
    All,
    /// A single k (skipped for graphs with fewer vertices).
    Fixed(usize),
}

impl KPolicy {
    pub fn values(self, n: usize) -> Vec<usize> {
        let mut ks = match self {
            KPolicy::Full => vec![n],
            KPolicy::Sweep => vec![1, n.div_ceil(2), n],
            KPolicy::All => (1..=n).collect(),
            KPolicy::Fixed(k) if k >= 1 && k <= n => vec![k],
            KPolicy::Fixed(_) => vec![],
        };
        ks.retain(|&k| k >= 1);
        ks.dedup();
        ks
    }
}

impl FromStr for KPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n" | "full" => Ok(KPolicy::Full),
            "sweep" => Ok(KPolicy::Sweep),
            "all" => Ok(KPolicy::All),
            other => other
                .parse::<usize>()
                .ok()
                .filter(|&k| k >= 1)
                .map(KPolicy::Fixed)
                .ok_or_else(|| Error::Parameter(format!("bad k policy `{other}`"))),
        }
    }
}

/// A named graph with the parameters that produced it.
#[derive(Debug, Clone)]
pub struct Instance {
    pub id: String,
    pub family: Family,
    pub param: usize,
    pub graph: Graph,
}

/// First 16 hex digits of SHA-256 over the canonical edge-list text.
pub fn graph_hash(graph: &Graph) -> String {
    let digest = Sha256::digest(graph.to_edge_list().as_bytes());
    digest.iter().take(8).fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// Seed of the `index`-th G(n, p) sample in a campaign:
/// `base + 1_000_000·n + 1_000·p_index + index` (wrapping).
pub fn gnp_seed(base: u64, n: usize, p_index: usize, index: usize) -> u64 {
    base.wrapping_add(1_000_000 * n as u64)
        .wrapping_add(1_000 * p_index as u64)
        .wrapping_add(index as u64)
}

/// Named-family members with order in `n_min..=n_max`.
pub fn family_instances(family: Family, n_min: usize, n_max: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    let mut push = |id: String, param: usize, graph: Graph| {
        if (n_min..=n_max).contains(&graph.order()) {
            out.push(Instance {
                id,
                family,
                param,
                graph,
            });
        }
    };
    match family {
        Family::Complete => {
            for n in 1..=n_max {
                push(format!("complete(n={n})"), n, generators::complete(n));
            }
        }
        Family::Cycle => {
            for n in 3..=n_max {
                push(format!("cycle(n={n})"), n, generators::cycle(n).expect("n >= 3"));
            }
        }
        Family::Path => {
            for n in 1..=n_max {
                push(format!("path(n={n})"), n, generators::path(n));
            }
        }
        Family::Sun => {
            for t in 2..=n_max / 4 {
                push(format!("sun(t={t})"), t, generators::sun(t).expect("t >= 2"));
            }
        }
        Family::Hajos => push("hajos".into(), 0, generators::hajos()),
        Family::Circulant => {
            for n in 5..=n_max {
                push(
                    format!("circulant(n={n},offsets=1+2)"),
                    n,
                    generators::circulant(n, &[1, 2]).expect("valid offsets"),
                );
                if n % 2 == 0 {
                    push(
                        format!("circulant(n={n},offsets=1+{})", n / 2),
                        n,
                        generators::circulant(n, &[1, n / 2]).expect("valid offsets"),
                    );
                }
            }
        }
        Family::Gnp => {}
    }
    out
}

/// Exact value of a reference family at k = n, if one is known.
pub fn reference_value(instance: &Instance, mode: Mode) -> Option<i64> {
    match (instance.family, mode) {
        (Family::Cycle, Mode::Signed) => reference::exact_cycle_signed(instance.param).ok(),
        (Family::Cycle, Mode::Nonneg) => reference::exact_cycle_nn(instance.param).ok(),
        (Family::Complete, Mode::Nonneg) => Some(reference::exact_complete_nn(instance.param)),
        (Family::Sun, Mode::Nonneg) => reference::exact_sun_nn(instance.param).ok(),
        (Family::Hajos, Mode::Nonneg) => Some(reference::exact_hajos_nn()),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    DegreeIdentity,
    Reductions,
    Oracle,
    BoundDominance,
    Lemmas,
    Monotonicity,
    ModeDominance,
    EvenEquality,
    Parity,
    Reference,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::DegreeIdentity,
        Check::Reductions,
        Check::Oracle,
        Check::BoundDominance,
        Check::Lemmas,
        Check::Monotonicity,
        Check::ModeDominance,
        Check::EvenEquality,
        Check::Parity,
        Check::Reference,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::DegreeIdentity => "degree-identity",
            Check::Reductions => "reductions",
            Check::Oracle => "oracle",
            Check::BoundDominance => "bound-dominance",
            Check::Lemmas => "lemmas",
            Check::Monotonicity => "monotonicity",
            Check::ModeDominance => "mode-dominance",
            Check::EvenEquality => "even-equality",
            Check::Parity => "parity",
            Check::Reference => "reference",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown check `{s}`")))
    }
}

/// Deliberate defects for exercising the harness itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutant {
    /// Adds 1 to the numerator of the (nδ + n_e − 2m)/(δ+1) bound.
    Nn3OffByOne,
}

impl FromStr for Mutant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nn3-off-by-one" => Ok(Mutant::Nn3OffByOne),
            other => Err(Error::Parameter(format!("unknown mutant `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignConfig {
    pub seed: u64,
    pub families: Vec<Family>,
    pub n_min: usize,
    pub n_max: usize,
    pub p_values: Vec<f64>,
    pub seeds_per_cell: usize,
    pub k_policy: KPolicy,
    pub checks: Vec<Check>,
    pub brute_cap: usize,
    pub mutant: Option<Mutant>,
}

impl Default for CampaignConfig {
    /// G(n, p) for n = 4..=9, p ∈ {0.2, 0.5, 0.8}, 50 samples per cell, plus
    /// every named family up to 9 vertices; k ∈ {1, ⌈n/2⌉, n}.
    fn default() -> Self {
        CampaignConfig {
            seed: 1,
            families: Family::ALL.to_vec(),
            n_min: 4,
            n_max: 9,
            p_values: vec![0.2, 0.5, 0.8],
            seeds_per_cell: 50,
            k_policy: KPolicy::Sweep,
            checks: Check::ALL.to_vec(),
            brute_cap: DEFAULT_BRUTE_CAP,
            mutant: None,
        }
    }
}

impl CampaignConfig {
    /// Named families cover orders 1..=n_max; n_min only limits G(n, p).
    pub fn instances(&self) -> Result<Vec<Instance>> {
        let mut out = Vec::new();
        for &family in &self.families {
            if family != Family::Gnp {
                out.extend(family_instances(family, 1, self.n_max));
                continue;
            }
            for n in self.n_min..=self.n_max {
                for (pi, &p) in self.p_values.iter().enumerate() {
                    for i in 0..self.seeds_per_cell {
                        let seed = gnp_seed(self.seed, n, pi, i);
                        out.push(Instance {
                            id: format!("gnp(n={n},p={p},seed={seed})"),
                            family: Family::Gnp,
                            param: n,
                            graph: generators::gnp(n, p, seed)?,
                        });
                    }
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub check: Check,
    pub instance: String,
    pub k: Option<usize>,
    pub mode: Option<Mode>,
    pub detail: String,
    pub observed: String,
    pub expected: String,
    /// Canonical edge-list text; pass to `solve`/`bounds` to replay.
    pub graph: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignReport {
    /// Seconds since the Unix epoch; excluded from determinism comparisons.
    pub timestamp: Option<u64>,
    pub config: CampaignConfig,
    pub instances: usize,
    pub connected_instances: usize,
    pub checks: BTreeMap<Check, CheckTally>,
    pub counterexamples: Vec<Counterexample>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|t| t.failed == 0)
    }

    pub fn tally(&self, check: Check) -> CheckTally {
        self.checks.get(&check).copied().unwrap_or_default()
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|(c, t)| json!({"check": c.name(), "passed": t.passed, "failed": t.failed}))
            .collect();
        json!({
            "timestamp": self.timestamp,
            "config": self.config,
            "instances": self.instances,
            "connected_instances": self.connected_instances,
            "passed": self.passed(),
            "checks": checks,
            "counterexamples": self.counterexamples,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "instances: {} ({} connected)\n",
            self.instances, self.connected_instances
        );
        for (c, t) in &self.checks {
            let _ = writeln!(
                out,
                "{:<16} {} passed={} failed={}",
                c.name(),
                if t.failed == 0 { "PASS" } else { "FAIL" },
                t.passed,
                t.failed
            );
        }
        for ce in &self.counterexamples {
            let _ = writeln!(
                out,
                "counterexample [{}] {} k={:?} mode={:?}: {} observed={} expected={}",
                ce.check.name(),
                ce.instance,
                ce.k,
                ce.mode.map(Mode::name),
                ce.detail,
                ce.observed,
                ce.expected
            );
        }
        out
    }
}

/// Counterexamples kept per check; tallies stay exact.
const MAX_COUNTEREXAMPLES_PER_CHECK: usize = 25;

#[derive(Default)]
struct Outcome {
    tallies: BTreeMap<Check, CheckTally>,
    failures: Vec<Counterexample>,
}

struct Recorder<'a> {
    instance: &'a Instance,
    enabled: &'a [Check],
    out: Outcome,
}

impl<'a> Recorder<'a> {
    fn on(&self, check: Check) -> bool {
        self.enabled.contains(&check)
    }

    #[allow(clippy::too_many_arguments)]
    fn record(
        &mut self,
        check: Check,
        ok: bool,
        k: Option<usize>,
        mode: Option<Mode>,
        detail: impl FnOnce() -> String,
        observed: impl ToString,
        expected: impl ToString,
    ) {
        if !self.on(check) {
            return;
        }
        let tally = self.out.tallies.entry(check).or_default();
        if ok {
            tally.passed += 1;
            return;
        }
        tally.failed += 1;
        self.out.failures.push(Counterexample {
            check,
            instance: self.instance.id.clone(),
            k,
            mode,
            detail: detail(),
            observed: observed.to_string(),
            expected: expected.to_string(),
            graph: self.instance.graph.to_edge_list(),
        });
    }
}

fn apply_mutant(report: &mut BoundReport, mutant: Option<Mutant>, min_degree: usize) {
    let Some(Mutant::Nn3OffByOne) = mutant else {
        return;
    };
    if let Some(v) = report.values.iter_mut().find(|v| v.kind == BoundKind::Nn3) {
        v.raw += Rational::new(1, min_degree as i64 + 1);
        v.ceil = crate::bounds::ceil_int(v.raw);
        v.parity_lifted = crate::bounds::parity_lift(v.raw, report.n);
    }
}

fn check_instance(instance: &Instance, cfg: &CampaignConfig) -> Result<Outcome> {
    let graph = &instance.graph;
    let n = graph.order();
    let profile = graph.degree_profile();
    let connected = graph.is_connected();
    let mut rec = Recorder {
        instance,
        enabled: &cfg.checks,
        out: Outcome::default(),
    };

    let (lhs, rhs) = invariants::degree_identity(&profile);
    rec.record(Check::DegreeIdentity, lhs == rhs, None, None, || "2·Σ⌈(d+1)/2⌉ vs 2m+n+n_e".into(), lhs, rhs);
    if n == 0 {
        return Ok(rec.out);
    }

    let mut full_report = bound_report_for(&profile, connected, n)?;
    apply_mutant(&mut full_report, cfg.mutant, profile.min_degree);
    let value = |kind: BoundKind| full_report.get(kind).expect("always present").raw;
    for (sub, full) in [(BoundKind::Ksub1, BoundKind::Nn2), (BoundKind::Ksub2, BoundKind::Nn3)] {
        rec.record(
            Check::Reductions,
            value(sub) == value(full),
            Some(n),
            None,
            || format!("{sub}(G, n) = {full}(G)"),
            value(sub),
            value(full),
        );
    }

    let ks = cfg.k_policy.values(n);
    let brute_ok = n <= cfg.brute_cap;
    let mut results: BTreeMap<(Mode, usize), SolveResult> = BTreeMap::new();

    for mode in [Mode::Nonneg, Mode::Signed] {
        for &k in &ks {
            let bnb = solve_bnb(graph, k, mode)?;
            let exact = if brute_ok {
                let brute = solve_bruteforce_with(graph, k, mode, cfg.brute_cap)?;
                rec.record(
                    Check::Oracle,
                    brute.optimum == bnb.optimum,
                    Some(k),
                    Some(mode),
                    || "branch-and-bound vs brute force".into(),
                    bnb.optimum,
                    brute.optimum,
                );
                brute
            } else {
                bnb
            };

            let eval = evaluate(graph, &exact.witness, mode)?;
            let parity_ok = (exact.optimum - n as i64).rem_euclid(2) == 0
                && invariants::closed_sums_have_parity(graph, &eval)
                && (mode == Mode::Signed || invariants::even_satisfied_are_positive(graph, &eval))
                && eval.weight == exact.optimum
                && eval.satisfied_count >= k;
            rec.record(
                Check::Parity,
                parity_ok,
                Some(k),
                Some(mode),
                || "optimum ≡ n (mod 2), closed-sum parity, witness consistency".into(),
                format!("{} via {}", exact.optimum, exact.witness),
                format!("parity {}", n % 2),
            );

            if mode == Mode::Nonneg {
                let mut report = bound_report_for(&profile, connected, k)?;
                apply_mutant(&mut report, cfg.mutant, profile.min_degree);
                let exact_q = Rational::from_integer(exact.optimum);
                for b in report.values.iter().filter(|b| b.applicable) {
                    rec.record(
                        Check::BoundDominance,
                        exact_q >= b.raw && exact.optimum >= b.parity_lifted,
                        Some(k),
                        Some(mode),
                        || format!("exact ≥ {} (raw and lifted)", b.kind),
                        exact.optimum,
                        format!(">= {} (lifted {})", b.raw, b.parity_lifted),
                    );
                }

                let lemma = invariants::ksub_lemma(graph, &exact.witness, &eval);
                rec.record(
                    Check::Lemmas,
                    lemma.holds(),
                    Some(k),
                    Some(mode),
                    || format!("Σ_P deg + |P1| ≥ Σ_(P1∪M1) ⌈(deg+1)/2⌉ for {}", exact.witness),
                    lemma.lhs,
                    format!(">= {}", lemma.rhs),
                );
                if k == n && connected {
                    let a = invariants::full_lemma_degrees(graph, &exact.witness);
                    rec.record(
                        Check::Lemmas,
                        a.holds(),
                        Some(k),
                        Some(mode),
                        || format!("Σ_P deg ≥ n + n_e − 2|P| + Σ_M deg for {}", exact.witness),
                        a.lhs,
                        format!(">= {}", a.rhs),
                    );
                    let b = invariants::full_lemma_induced(graph, &exact.witness);
                    rec.record(
                        Check::Lemmas,
                        b.holds(),
                        Some(k),
                        Some(mode),
                        || format!("Σ_P deg_G[P] ≥ Σ_P ⌈(deg−1)/2⌉ for {}", exact.witness),
                        b.lhs,
                        format!(">= {}", b.rhs),
                    );
                }
            }

            if k == n {
                if let Some(expected) = reference_value(instance, mode) {
                    rec.record(
                        Check::Reference,
                        exact.optimum == expected,
                        Some(k),
                        Some(mode),
                        || "closed-form reference value".into(),
                        exact.optimum,
                        expected,
                    );
                }
            }
            results.insert((mode, k), exact);
        }
    }

    for mode in [Mode::Nonneg, Mode::Signed] {
        for pair in ks.windows(2) {
            let (lo, hi) = (&results[&(mode, pair[0])], &results[&(mode, pair[1])]);
            rec.record(
                Check::Monotonicity,
                lo.optimum <= hi.optimum,
                Some(pair[1]),
                Some(mode),
                || format!("optimum at k={} ≤ optimum at k={}", pair[0], pair[1]),
                lo.optimum,
                format!("<= {}", hi.optimum),
            );
        }
    }
    let even = graph.is_even();
    for &k in &ks {
        let nn = results[&(Mode::Nonneg, k)].optimum;
        let signed = results[&(Mode::Signed, k)].optimum;
        rec.record(
            Check::ModeDominance,
            nn <= signed,
            Some(k),
            None,
            || "nonneg optimum ≤ signed optimum".into(),
            nn,
            format!("<= {signed}"),
        );
        if even {
            rec.record(
                Check::EvenEquality,
                nn == signed,
                Some(k),
                None,
                || "even graph: nonneg optimum = signed optimum".into(),
                nn,
                signed,
            );
        }
    }
    Ok(rec.out)
}

/// Runs the campaign with instances checked in parallel; the report is
/// independent of scheduling.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    let instances = cfg.instances()?;
    let outcomes = instances
        .par_iter()
        .map(|inst| check_instance(inst, cfg))
        .collect::<Result<Vec<_>>>()?;

    let mut checks: BTreeMap<Check, CheckTally> = cfg.checks.iter().map(|&c| (c, CheckTally::default())).collect();
    let mut counterexamples = Vec::new();
    for outcome in outcomes {
        for (c, t) in outcome.tallies {
            let entry = checks.entry(c).or_default();
            entry.passed += t.passed;
            entry.failed += t.failed;
        }
        counterexamples.extend(outcome.failures);
    }
    counterexamples.sort();
    let mut per_check: BTreeMap<Check, usize> = BTreeMap::new();
    counterexamples.retain(|ce| {
        let seen = per_check.entry(ce.check).or_default();
        *seen += 1;
        *seen <= MAX_COUNTEREXAMPLES_PER_CHECK
    });

    Ok(CampaignReport {
        timestamp: std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs()),
        config: cfg.clone(),
        connected_instances: instances.iter().filter(|i| i.graph.is_connected()).count(),
        instances: instances.len(),
        checks,
        counterexamples,
    })
}

/// Parameters for a reproduction table.
#[derive(Debug, Clone)]
pub struct TableSpec {
    pub family: Family,
    pub from: usize,
    pub to: usize,
    pub k_policy: KPolicy,
    pub modes: Vec<Mode>,
    /// Circulant offsets (ignored elsewhere).
    pub offsets: Vec<usize>,
    /// G(n, p) edge probability and seed (ignored elsewhere).
    pub p: f64,
    pub seed: u64,
    pub algorithm: Algorithm,
    pub brute_cap: usize,
}

/// Builds the graph of `family` at parameter `param` (n, or t for sun).
pub fn build_family(family: Family, param: usize, offsets: &[usize], p: f64, seed: u64) -> Result<Graph> {
    match family {
        Family::Complete => Ok(generators::complete(param)),
        Family::Cycle => generators::cycle(param),
        Family::Path => Ok(generators::path(param)),
        Family::Sun => generators::sun(param),
        Family::Hajos => Ok(generators::hajos()),
        Family::Circulant => generators::circulant(param, offsets),
        Family::Gnp => generators::gnp(param, p, seed),
    }
}

const TABLE_BOUNDS: [BoundKind; 11] = BoundKind::ALL;

/// CSV with one row per (parameter, k, mode): order statistics, the exact
/// optimum, and every bound's raw value.
pub fn table_csv(spec: &TableSpec) -> Result<String> {
    let mut out = String::from("family,param,n,m,delta,Delta,n_e,k,mode,exact");
    for kind in TABLE_BOUNDS {
        let _ = write!(out, ",bound.{}.raw", kind.name());
    }
    out.push('\n');
    let params: Vec<usize> = if spec.family == Family::Hajos {
        vec![0]
    } else {
        (spec.from..=spec.to).collect()
    };
    for param in params {
        let graph = build_family(spec.family, param, &spec.offsets, spec.p, spec.seed)?;
        let profile = graph.degree_profile();
        let connected = graph.is_connected();
        for k in spec.k_policy.values(graph.order()) {
            let report = bound_report_for(&profile, connected, k)?;
            for &mode in &spec.modes {
                let exact = solve(&graph, k, mode, spec.algorithm, spec.brute_cap, BnbOptions::default())?;
                let _ = write!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{}",
                    spec.family.name(),
                    param,
                    profile.n,
                    profile.m,
                    profile.min_degree,
                    profile.max_degree,
                    profile.even_count,
                    k,
                    mode,
                    exact.optimum
                );
                for kind in TABLE_BOUNDS {
                    let cell = report.get(kind).map(|b| b.raw.to_string()).unwrap_or_default();
                    let _ = write!(out, ",{cell}");
                }
                out.push('\n');
            }
        }
    }
    Ok(out)
}

/// One JSON-lines record describing a solve.
pub fn solve_record(graph: &Graph, graph_id: &str, k: usize, mode: Mode, algorithm: Algorithm, result: &SolveResult) -> Value {
    json!({
        "graph": graph_id,
        "graph_hash": graph_hash(graph),
        "n": graph.order(),
        "m": graph.size(),
        "mode": mode.name(),
        "k": k,
        "algorithm": algorithm.resolve(graph.order()).name(),
        "optimum": result.optimum,
        "satisfied_count": result.satisfied_count,
        "witness": result.witness.to_string(),
        "nodes": result.stats.nodes,
        "prunes_weight": result.stats.prunes_weight,
        "prunes_satisfiability": result.stats.prunes_satisfiability,
        "prunes_global_bound": result.stats.prunes_global_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_policy_values() {
        assert_eq!(KPolicy::Sweep.values(7), vec![1, 4, 7]);
        assert_eq!(KPolicy::Sweep.values(1), vec![1]);
        assert_eq!(KPolicy::Sweep.values(2), vec![1, 2]);
        assert_eq!(KPolicy::Full.values(5), vec![5]);
        assert_eq!(KPolicy::All.values(3), vec![1, 2, 3]);
        assert_eq!(KPolicy::Fixed(4).values(3), Vec::<usize>::new());
        assert_eq!("sweep".parse::<KPolicy>().unwrap(), KPolicy::Sweep);
        assert_eq!("3".parse::<KPolicy>().unwrap(), KPolicy::Fixed(3));
        assert!("0".parse::<KPolicy>().is_err());
    }

    #[test]
    fn family_ranges() {
        let suns = family_instances(Family::Sun, 1, 12);
        assert_eq!(suns.len(), 2);
        assert_eq!(family_instances(Family::Hajos, 1, 5).len(), 0);
        assert!(family_instances(Family::Circulant, 1, 9)
            .iter()
            .all(|i| i.graph.order() <= 9));
    }

    #[test]
    fn small_campaign_passes() {
        let cfg = CampaignConfig {
            n_max: 6,
            seeds_per_cell: 3,
            ..CampaignConfig::default()
        };
        let report = run_campaign(&cfg).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert!(report.tally(Check::Oracle).passed > 0);
        assert!(report.tally(Check::Reference).passed > 0);
    }

    #[test]
    fn mutant_is_caught() {
        let cfg = CampaignConfig {
            families: vec![Family::Cycle, Family::Sun],
            n_max: 9,
            checks: vec![Check::BoundDominance, Check::Reductions],
            mutant: Some(Mutant::Nn3OffByOne),
            ..CampaignConfig::default()
        };
        let report = run_campaign(&cfg).unwrap();
        assert!(!report.passed());
        let ce = &report.counterexamples[0];
        assert!(!ce.graph.is_empty());
    }

    #[test]
    fn graph_hash_is_stable() {
        let g = generators::cycle(5).unwrap();
        assert_eq!(graph_hash(&g), graph_hash(&generators::circulant(5, &[1]).unwrap()));
        assert_eq!(graph_hash(&g).len(), 16);
    }

    #[test]
    fn table_for_complete_graphs() {
        let spec = TableSpec {
            family: Family::Complete,
            from: 1,
            to: 6,
            k_policy: KPolicy::Full,
            modes: vec![Mode::Nonneg],
            offsets: vec![],
            p: 0.5,
            seed: 0,
            algorithm: Algorithm::Auto,
            brute_cap: DEFAULT_BRUTE_CAP,
        };
        let csv = table_csv(&spec).unwrap();
        let rows: Vec<&str> = csv.lines().skip(1).collect();
        assert_eq!(rows.len(), 6);
        for (i, row) in rows.iter().enumerate() {
            let cols: Vec<&str> = row.split(',').collect();
            assert_eq!(cols[9], ((i + 1) % 2).to_string());
        }
    }
}
