//! Exit criteria for the library. Each criterion prints one PASS/FAIL line
//! and the process exits nonzero if any criterion fails. All comparisons are
//! exact.

use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use signdom::bounds::{bound_report, ceil_int, BoundKind, Rational};
use signdom::campaign::{run_campaign, CampaignConfig, CampaignReport, Check};
use signdom::generators::{complete, cycle, hajos, sun};
use signdom::reference::exact_cycle_signed;
use signdom::solver::{solve, solve_bnb, Algorithm, BnbOptions, Mode, DEFAULT_BRUTE_CAP};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn auto(g: &signdom::Graph, k: usize, mode: Mode) -> i64 {
    solve(g, k, mode, Algorithm::Auto, DEFAULT_BRUTE_CAP, BnbOptions::default())
        .expect("solvable")
        .optimum
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for n in 1..=12 {
        let got = auto(&complete(n), n, Mode::Nonneg);
        ensure(got == (n % 2) as i64, || format!("K_{n}: got {got}, expected {}", n % 2))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("K_1..K_12 match n mod 2 in {:?}", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for n in 3..=20 {
        let g = cycle(n).unwrap();
        let expected = exact_cycle_signed(n).unwrap();
        let signed = solve_bnb(&g, n, Mode::Signed).unwrap().optimum;
        let nn = solve_bnb(&g, n, Mode::Nonneg).unwrap().optimum;
        ensure(signed == expected, || format!("C_{n} signed: got {signed}, expected {expected}"))?;
        ensure(nn == expected, || format!("C_{n} nonneg: got {nn}, expected {expected}"))?;
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("C_3..C_20 match in both modes in {:?}", start.elapsed()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for t in 2..=4usize {
        let g = sun(t).unwrap();
        let n = g.order();
        let got = auto(&g, n, Mode::Nonneg);
        ensure(got == 0, || format!("sun({t}): got {got}"))?;
        let rep = bound_report(&g, n).unwrap();
        let raw = |kind| rep.get(kind).unwrap().raw;
        for kind in [BoundKind::Nn1, BoundKind::Nn2, BoundKind::Nn3] {
            ensure(raw(kind) == q(0), || format!("sun({t}) {kind} = {}", raw(kind)))?;
        }
        let t = t as i64;
        ensure(raw(BoundKind::PriorHalfN) == q(-4 * t), || format!("prior_halfn = {}", raw(BoundKind::PriorHalfN)))?;
        ensure(raw(BoundKind::PriorHua) == q(-t), || format!("prior_hua = {}", raw(BoundKind::PriorHua)))?;
        let dc = ceil_int(raw(BoundKind::PriorDeltaCeil));
        let expected = ceil_int(Rational::new(-4 * t, 7));
        ensure(dc == expected, || format!("ceil(prior_deltaceil) = {dc}, expected {expected}"))?;
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("sun(2..4) optimum 0, bounds as stated, in {:?}", start.elapsed()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let g = hajos();
    let got = solve_bnb(&g, 6, Mode::Nonneg).unwrap().optimum;
    ensure(got == 0, || format!("optimum {got}"))?;
    let rep = bound_report(&g, 6).unwrap();
    for kind in [BoundKind::Nn4, BoundKind::Nn5] {
        let v = rep.get(kind).unwrap().raw;
        ensure(v == q(0), || format!("{kind} = {v}"))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("Hajós optimum 0, nn4 = nn5 = 0 in {:?}", start.elapsed()))
}

struct CampaignRun {
    report: CampaignReport,
    elapsed: Duration,
}

fn default_campaign() -> &'static CampaignRun {
    static RUN: OnceLock<CampaignRun> = OnceLock::new();
    RUN.get_or_init(|| {
        let start = Instant::now();
        let report = run_campaign(&CampaignConfig::default()).expect("campaign runs");
        CampaignRun {
            report,
            elapsed: start.elapsed(),
        }
    })
}

fn zero_failures(checks: &[Check]) -> Result<String, String> {
    let rep = &default_campaign().report;
    let mut summary = Vec::new();
    for &c in checks {
        let t = rep.tally(c);
        ensure(t.failed == 0, || {
            let ce = rep.counterexamples.iter().find(|ce| ce.check == c);
            format!("{} failed {} times; first: {ce:?}", c.name(), t.failed)
        })?;
        ensure(t.passed > 0, || format!("{} never ran", c.name()))?;
        summary.push(format!("{}={}", c.name(), t.passed));
    }
    Ok(summary.join(" "))
}

fn criterion_5() -> Outcome {
    let run = default_campaign();
    ensure(run.report.connected_instances >= 18 * 20, || {
        format!("only {} connected instances", run.report.connected_instances)
    })?;
    let s = zero_failures(&[Check::Oracle])?;
    within(run.elapsed, Duration::from_secs(300))?;
    Ok(format!(
        "{s} over {} instances ({} connected) in {:?}",
        run.report.instances, run.report.connected_instances, run.elapsed
    ))
}

fn criterion_6() -> Outcome {
    zero_failures(&[Check::BoundDominance])
}

fn criterion_7() -> Outcome {
    zero_failures(&[Check::Lemmas])
}

fn criterion_8() -> Outcome {
    zero_failures(&[Check::DegreeIdentity, Check::Reductions])
}

fn criterion_9() -> Outcome {
    zero_failures(&[Check::Monotonicity, Check::ModeDominance, Check::EvenEquality])
}

fn criterion_10() -> Outcome {
    let cfg = CampaignConfig::default();
    let strip = |mut r: CampaignReport| {
        r.timestamp = None;
        r.to_json().to_string()
    };
    let a = strip(default_campaign().report.clone());
    let b = strip(run_campaign(&cfg).map_err(|e| e.to_string())?);
    ensure(a == b, || "reports differ".into())?;
    Ok(format!("identical {}-byte reports", a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 complete graphs", criterion_1),
        ("2 cycles", criterion_2),
        ("3 sun gadget", criterion_3),
        ("4 Hajós graph", criterion_4),
        ("5 oracle equivalence", criterion_5),
        ("6 bound dominance", criterion_6),
        ("7 lemma invariants", criterion_7),
        ("8 identity and reductions", criterion_8),
        ("9 structural properties", criterion_9),
        ("10 determinism", criterion_10),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        match f() {
            Ok(msg) => println!("criterion {name}: PASS ({msg})"),
            Err(msg) => {
                println!("criterion {name}: FAIL ({msg})");
                failed.push(name);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria passed", criteria.len(), criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
