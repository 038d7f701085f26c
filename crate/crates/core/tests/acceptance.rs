//! One line per acceptance criterion. Run with
//! `cargo test -p krs-core --test acceptance [-- 3 7 ...]`.
//!
//! Every count-based criterion requires zero failures; runtimes are
//! checked against the targets below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use krs_core::krs;
use krs_core::report::Report;
use krs_core::suites::{run_suite, RunConfig};
use krs_core::{Bitableau, GridSize};

struct Line {
    id: &'static str,
    pass: bool,
    detail: String,
    /// A failure that is analysed in the ledger and does not fail the run.
    known: bool,
}

fn cfg(m: usize, n: usize, bound: usize) -> RunConfig {
    RunConfig { timestamp: false, ..RunConfig::with_grid(GridSize::new(m, n).unwrap(), bound) }
}

fn suite(name: &str, c: &RunConfig) -> (Report, Duration) {
    let start = Instant::now();
    let r = run_suite(name, c).unwrap_or_else(|e| panic!("{name}: {e}"));
    (r, start.elapsed())
}

fn describe(r: &Report) -> String {
    let failing: Vec<&str> = r.slices.iter().filter(|s| !s.pass).map(|s| s.check.as_str()).collect();
    let mut failing = failing;
    failing.dedup();
    if failing.is_empty() {
        format!("{} checked, 0 failures", r.summary.checked)
    } else {
        format!("{} checked, {} failures in {:?}", r.summary.checked, r.summary.counterexamples, failing)
    }
}

fn line(id: &'static str, pass: bool, detail: String) -> Line {
    Line { id, pass, detail, known: false }
}

fn timed_suite(id: &'static str, name: &str, c: &RunConfig, target: Option<Duration>) -> Line {
    let (r, t) = suite(name, c);
    let fast = target.map_or(true, |lim| t <= lim);
    let limit = target.map(|l| format!(" (target {l:?})")).unwrap_or_default();
    line(id, r.passed() && fast, format!("{name} on {}, degree ≤ {}: {}; {t:.2?}{limit}", c.grid, c.degree_bound, describe(&r)))
}

fn c1() -> Line {
    let sigma: Bitableau = "[1,3,4,5|1,2,3,6]·[2,6|4,5]".parse().unwrap();
    let want: Vec<(usize, usize)> = vec![(1, 4), (2, 1), (3, 2), (4, 5), (5, 6), (6, 3)];
    let reps = 100u32;
    let start = Instant::now();
    let mut ok = true;
    for _ in 0..reps {
        let a = krs::forward(&sigma).unwrap();
        ok &= a.pairs() == want.as_slice();
        ok &= krs::inverse(&a).unwrap() == sigma;
    }
    let per = start.elapsed() / reps;
    line("1", ok && per < Duration::from_millis(1), format!("[1,3,4,5|1,2,3,6]·[2,6|4,5] ↦ (1,2,3,4,5,6 | 4,1,2,5,6,3) and back; {per:.2?} per round trip (target < 1ms)"))
}

fn c6() -> Line {
    let (r, t) = suite("duality", &cfg(3, 3, 5));
    line("6", r.passed(), format!("permutations of length ≤ 7 and monomials of degree ≤ 5 on 3×3, t ≤ 4: {}; {t:.2?}", describe(&r)))
}

fn c8() -> Line {
    let (a, ta) = suite("groebner-it", &cfg(3, 3, 5));
    let (b, tb) = suite("groebner-it", &cfg(4, 4, 5));
    line("8", a.passed() && b.passed(), format!("3×3: {}; 4×4: {}; {:.2?}", describe(&a), describe(&b), ta + tb))
}

fn c10() -> Line {
    let (a, ta) = suite("examples-4a", &cfg(3, 3, 4));
    let (b, tb) = suite("examples-4b", &cfg(6, 6, 6));
    let literal_ok = b.slices.iter().filter(|s| s.check.starts_with("literal:")).all(|s| s.pass);
    let corrected_ok = b.slices.iter().filter(|s| s.check.starts_with("corrected:")).all(|s| s.pass);
    let krs_ok = b.check_passed("krs-monomial") == Some(true);
    let pass = a.passed() && krs_ok && literal_ok;
    // the documented discrepancy: exactly the literal shape list and the
    // literal no-witness claim fail, everything else holds
    let literal_failures: Vec<&str> = b.slices.iter().filter(|s| !s.pass).map(|s| s.check.as_str()).collect();
    let known = !pass
        && a.passed()
        && krs_ok
        && corrected_ok
        && literal_failures == ["literal:degree-shapes", "literal:no-witness"];
    let witness = b
        .slices
        .iter()
        .find(|s| s.check == "literal:no-witness")
        .and_then(|s| s.witnesses.first())
        .map(|w| w.to_string())
        .unwrap_or_default();
    Line {
        id: "10",
        pass,
        known,
        detail: format!(
            "(a) {}; (b) literal I_3^(2) ∩ I_4: {} {witness}; (b) read as I_2^(4) ∩ I_4: {}; {:.2?}",
            if a.passed() { "reproduced" } else { "NOT reproduced" },
            if literal_ok { "reproduced" } else { "NOT reproduced, failing checks" },
            if corrected_ok { "reproduced" } else { "NOT reproduced" },
            ta + tb
        )
        .replace("failing checks ", &format!("failing checks {literal_failures:?} ")),
    }
}

fn c13() -> Line {
    timed_suite("13", "symb-in", &cfg(3, 3, 6), Some(Duration::from_secs(600)))
}

fn c14() -> Line {
    let (a, ta) = suite("cogenerated", &cfg(3, 3, 5));
    let (b, tb) = suite("cogenerated-explore", &cfg(3, 3, 4));
    let json_ok = b.to_json().ok().and_then(|s| serde_json::from_str::<Report>(&s).ok()).is_some_and(|back| back == b);
    let well_formed = b.explorer && b.passed() && json_ok && !b.findings.is_empty();
    line("14", a.passed() && well_formed, format!(
        "cogenerated: {}; explorer report well-formed: {well_formed} ({} mismatches recorded as evidence); {:.2?}",
        describe(&a),
        b.summary.counterexamples,
        ta + tb
    ))
}

fn c15() -> Line {
    let (r, t) = suite("negative-control", &cfg(3, 3, 3));
    let detail = r.findings.first().map(|f| f.to_string()).unwrap_or_default();
    line("15", r.passed(), format!("KRS(I) ≠ ini(I) detected for {detail}; {t:.2?}"))
}

fn main() -> ExitCode {
    let wanted: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let criteria: Vec<(&str, Box<dyn Fn() -> Line>)> = vec![
        ("1", Box::new(c1)),
        ("2", Box::new(|| timed_suite("2", "bijection", &cfg(4, 4, 6), Some(Duration::from_secs(120))))),
        ("3", Box::new(|| timed_suite("3", "schensted", &cfg(4, 4, 6), None))),
        ("4", Box::new(|| timed_suite("4", "greene", &cfg(4, 4, 6), None))),
        ("5", Box::new(|| timed_suite("5", "gamma-invariance", &cfg(4, 4, 6), None))),
        ("6", Box::new(c6)),
        ("7", Box::new(|| timed_suite("7", "straightening", &cfg(3, 3, 4), Some(Duration::from_secs(300))))),
        ("8", Box::new(c8)),
        ("9", Box::new(|| timed_suite("9", "gandin-closure", &cfg(3, 3, 5), None))),
        ("10", Box::new(c10)),
        ("11", Box::new(|| {
            let (r, t) = suite("balancing", &cfg(3, 3, 1));
            line("11", r.passed(), format!("all minor pairs on 3×3 (ρ = 1 included): {}; {t:.2?}", describe(&r)))
        })),
        ("12", Box::new(|| timed_suite("12", "algam", &cfg(4, 4, 6), None))),
        ("13", Box::new(c13)),
        ("14", Box::new(c14)),
        ("15", Box::new(c15)),
    ];
    let mut unexpected = 0;
    for (id, run) in criteria {
        if !wanted.is_empty() && !wanted.iter().any(|w| w == id) {
            continue;
        }
        let l = run();
        let verdict = if l.pass { "PASS" } else { "FAIL" };
        let note = if !l.pass && l.known { " [known discrepancy, see README]" } else { "" };
        println!("criterion {:>2}: {verdict}{note} {}", l.id, l.detail);
        if !l.pass && !l.known {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria failed");
        ExitCode::FAILURE
    }
}
