//! Acceptance gate: one line per criterion, non-zero exit if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use lahbell::cli::{table_from_record, OutputRecord, TableData, TableKindArg};
use lahbell::exact::{rat, rat_int};
use lahbell::oracle::count_ordered_partitions;
use lahbell::poly::{defining_relation_check, lah_bell_poly, DefiningVariant};
use lahbell::tables::lah;
use lahbell::verify::{gf_lambdas, gf_points, run_suite, Bounds, Suite};

struct Gate {
    failed: usize,
}

impl Gate {
    /// Runs `body`, which returns (passed, detail), and enforces the time limit.
    fn criterion(
        &mut self,
        id: &str,
        title: &str,
        limit: Option<u64>,
        body: impl FnOnce() -> (bool, String),
    ) {
        let start = Instant::now();
        let (ok, detail) = body();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|s| elapsed < Duration::from_secs(s));
        let timing = match limit {
            Some(s) => format!("{:.2}s, limit {s}s", elapsed.as_secs_f64()),
            None => format!("{:.2}s", elapsed.as_secs_f64()),
        };
        let verdict = if ok && in_time { "PASS" } else { "FAIL" };
        if verdict == "FAIL" {
            self.failed += 1;
        }
        let late = if in_time { "" } else { " [over time limit]" };
        println!("{id} {verdict} {title}: {detail} ({timing}){late}");
    }
}

fn suite_verdict(suite: Suite, expected: Bounds) -> (bool, String) {
    let outcome = run_suite(suite, false).expect("default bounds are valid");
    if outcome.bounds != expected {
        return (false, format!("bounds drifted: {:?}", outcome.bounds));
    }
    let detail = match outcome.first_failure() {
        None => format!(
            "{} reports, {} checks",
            outcome.reports.len(),
            outcome.checks()
        ),
        Some(report) => format!("first failure: {report}"),
    };
    (outcome.passed(), detail)
}

fn bounds(
    n_max: usize,
    m_max: usize,
    sum_max: usize,
    r_max: usize,
    order: usize,
    lambda_order: usize,
) -> Bounds {
    Bounds {
        n_max,
        m_max,
        sum_max,
        r_max,
        order,
        lambda_order,
    }
}

fn run_bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lahbell"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

fn main() {
    let mut gate = Gate { failed: 0 };

    gate.criterion(
        "AC1",
        "enumeration equals L(n,k), row sums equal LB_n(1)",
        Some(5),
        || {
            let mut checks = 0;
            for n in 0..=9 {
                let mut row = lahbell::exact::ExactInt::default();
                for k in 0..=n {
                    let count = count_ordered_partitions(n, k).expect("within cap");
                    if count != lah(n, k) {
                        return (false, format!("n={n}, k={k}: {count} vs {}", lah(n, k)));
                    }
                    row += count;
                    checks += 1;
                }
                if rat_int(row.clone()) != lah_bell_poly(n).eval(&rat(1, 1)) {
                    return (false, format!("row sum n={n}"));
                }
                checks += 1;
            }
            let (ok, detail) = suite_verdict(Suite::Oracle, bounds(9, 0, 9, 0, 10, 8));
            (ok, format!("{checks} direct checks; suite: {detail}"))
        },
    );

    gate.criterion(
        "AC2",
        "defining relations, n <= 12, r <= 4, lambda formal",
        Some(10),
        || suite_verdict(Suite::Defining, bounds(12, 0, 12, 4, 10, 8)),
    );

    gate.criterion(
        "AC3",
        "Spivey recurrence for LB_n, n + m <= 12, with x = 1",
        Some(10),
        || suite_verdict(Suite::Spivey, bounds(12, 12, 12, 0, 10, 8)),
    );

    gate.criterion(
        "AC4",
        "r-Spivey recurrence, n + m <= 10, r <= 4, with x = 1",
        Some(30),
        || suite_verdict(Suite::SpiveyR, bounds(10, 10, 10, 4, 10, 8)),
    );

    gate.criterion(
        "AC5",
        "lambda-Spivey recurrence in t and lambda, n + m <= 8, r <= 3",
        Some(60),
        || suite_verdict(Suite::SpiveyLambda, bounds(8, 8, 8, 3, 10, 8)),
    );

    gate.criterion(
        "AC6",
        "Weyl algebra identities, n, m <= 8, r <= 3",
        Some(30),
        || suite_verdict(Suite::Weyl, bounds(8, 8, 16, 3, 10, 8)),
    );

    gate.criterion(
        "AC7",
        "generating functions, order 10 (lambda 8), r <= 3",
        Some(30),
        || {
            let grid_ok = gf_lambdas()
                == vec![rat(1, 1), rat(-1, 1), rat(1, 2), rat(2, 1), rat(1, 3)]
                && gf_points() == vec![rat(0, 1), rat(1, 1), rat(1, 2)];
            if !grid_ok {
                return (false, "lambda or x grid drifted".to_string());
            }
            suite_verdict(Suite::Gf, bounds(3, 3, 6, 3, 10, 8))
        },
    );

    gate.criterion(
        "AC8",
        "closed-form L^r_lambda(n,k) equals the basis expansion, n <= 12, r <= 4",
        None,
        || {
            let mut checks = 0;
            for n in 0..=12 {
                for r in 0..=4 {
                    let report = defining_relation_check(n, r, DefiningVariant::Lambda);
                    if !report.passed() {
                        return (false, report.to_string());
                    }
                    checks += report.checks;
                }
            }
            (true, format!("{checks} coefficient checks"))
        },
    );

    gate.criterion(
        "AC9",
        "Dobinski series within reported bounds, tail < 1e-20",
        Some(30),
        || suite_verdict(Suite::Dobinski, bounds(10, 0, 10, 3, 10, 8)),
    );

    gate.criterion(
        "AC10",
        "Spivey's Bell identity n + m <= 14, Bell by enumeration n <= 8",
        None,
        || suite_verdict(Suite::Baseline, bounds(14, 14, 14, 0, 10, 8)),
    );

    gate.criterion(
        "AC11",
        "CLI exit codes and table JSON round trip",
        None,
        || {
            let (quick, _) = run_bin(&["verify", "all", "--quick"]);
            if quick != 0 {
                return (false, format!("verify all --quick exited {quick}"));
            }
            let (faulty, _) = run_bin(&["verify", "all", "--quick", "--inject-fault"]);
            if faulty != 1 {
                return (false, format!("fault injection exited {faulty}"));
            }
            type Case<'a> = (
                &'a [&'a str],
                TableKindArg,
                Option<usize>,
                Option<(i64, i64)>,
            );
            let cases: [Case; 5] = [
                (
                    &["table", "lah", "12", "--format", "json"],
                    TableKindArg::Lah,
                    None,
                    None,
                ),
                (
                    &["table", "rlah", "10", "--r", "3", "--format", "json"],
                    TableKindArg::Rlah,
                    Some(3),
                    None,
                ),
                (
                    &["table", "stirling2", "10", "--format", "json"],
                    TableKindArg::Stirling2,
                    None,
                    None,
                ),
                (
                    &["table", "lambda-rlah", "8", "--r", "2", "--format", "json"],
                    TableKindArg::LambdaRlah,
                    Some(2),
                    None,
                ),
                (
                    &[
                        "table",
                        "lambda-rlah",
                        "8",
                        "--r",
                        "1",
                        "--lambda",
                        "-2/3",
                        "--format",
                        "json",
                    ],
                    TableKindArg::LambdaRlah,
                    Some(1),
                    Some((-2, 3)),
                ),
            ];
            for (args, kind, r, lambda) in cases {
                let (code, text) = run_bin(args);
                if code != 0 {
                    return (false, format!("{args:?} exited {code}"));
                }
                let record: OutputRecord = match serde_json::from_str(&text) {
                    Ok(r) => r,
                    Err(e) => return (false, format!("{args:?}: {e}")),
                };
                if record.to_json() != text {
                    return (false, format!("{args:?}: re-serialization differs"));
                }
                let lambda = lambda.map(|(p, q)| rat(p, q));
                let n_max = args[2].parse().expect("row count");
                let expected =
                    TableData::generate(kind, n_max, r, lambda.as_ref()).expect("valid table");
                match table_from_record(&record) {
                    Ok(parsed) if parsed == expected => {}
                    _ => return (false, format!("{args:?}: parsed table differs")),
                }
                let (again, second) = run_bin(args);
                if again != 0 || second != text {
                    return (false, format!("{args:?}: output not deterministic"));
                }
            }
            (
                true,
                "quick suites exit 0, fault exits 1, 5 tables round-trip".to_string(),
            )
        },
    );

    if gate.failed > 0 {
        println!("acceptance: {} criteria failed", gate.failed);
        std::process::exit(1);
    }
    println!("acceptance: all 11 criteria passed");
}
