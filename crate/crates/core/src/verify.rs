//! Verification suites: parameter sweeps over every identity check, run on a
//! worker pool and collected in canonical order.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::dobinski::{dobinski_eval, DEFAULT_PRECISION_BITS};
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, rat, rat_int, ExactInt, ExactRat};
use crate::oracle::Enumerator;
use crate::poly::{
    defining_relation_check_with, r_lah_bell_poly_from, spivey_lambda_check_with,
    spivey_r_check_with, vandermonde_check, DefiningVariant, LambdaPoly,
};
use crate::report::Report;
use crate::series::{gf_check_bell_with, gf_check_lah_with, gf_check_lambda_with};
use crate::series::{two_variable_spivey_spot_check, GfLambdaTarget};
use crate::tables::{bell, r_lah_recurrence_check, spivey_bell_check, ClosedForm, LahSource};
use crate::weyl;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Defining,
    Spivey,
    SpiveyR,
    SpiveyLambda,
    Weyl,
    Gf,
    Oracle,
    Baseline,
    Dobinski,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Defining,
        Suite::Spivey,
        Suite::SpiveyR,
        Suite::SpiveyLambda,
        Suite::Weyl,
        Suite::Gf,
        Suite::Oracle,
        Suite::Baseline,
        Suite::Dobinski,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Defining => "defining",
            Suite::Spivey => "spivey",
            Suite::SpiveyR => "spivey-r",
            Suite::SpiveyLambda => "spivey-lambda",
            Suite::Weyl => "weyl",
            Suite::Gf => "gf",
            Suite::Oracle => "oracle",
            Suite::Baseline => "baseline",
            Suite::Dobinski => "dobinski",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// Sweep limits for one suite. `sum_max` caps `n + m` where both appear.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub n_max: usize,
    pub m_max: usize,
    pub sum_max: usize,
    pub r_max: usize,
    pub order: usize,
    pub lambda_order: usize,
}

/// Caller-supplied replacements for the default bounds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Overrides {
    pub n_max: Option<usize>,
    pub m_max: Option<usize>,
    pub sum_max: Option<usize>,
    pub r_max: Option<usize>,
    pub order: Option<usize>,
    pub lambda_order: Option<usize>,
}

pub const MAX_DEGREE: usize = 40;
pub const MAX_R: usize = 16;
pub const MAX_ORDER: usize = 40;

impl Bounds {
    const fn new(n_max: usize, m_max: usize, sum_max: usize, r_max: usize) -> Self {
        Bounds {
            n_max,
            m_max,
            sum_max,
            r_max,
            order: 10,
            lambda_order: 8,
        }
    }

    pub fn default_for(suite: Suite, quick: bool) -> Self {
        match (suite, quick) {
            (Suite::Defining, false) => Bounds::new(12, 0, 12, 4),
            (Suite::Defining, true) => Bounds::new(6, 0, 6, 2),
            (Suite::Spivey, false) => Bounds::new(12, 12, 12, 0),
            (Suite::Spivey, true) => Bounds::new(6, 6, 6, 0),
            (Suite::SpiveyR, false) => Bounds::new(10, 10, 10, 4),
            (Suite::SpiveyR, true) => Bounds::new(5, 5, 5, 2),
            (Suite::SpiveyLambda, false) => Bounds::new(8, 8, 8, 3),
            (Suite::SpiveyLambda, true) => Bounds::new(4, 4, 4, 2),
            (Suite::Weyl, false) => Bounds::new(8, 8, 16, 3),
            (Suite::Weyl, true) => Bounds::new(4, 4, 8, 2),
            (Suite::Gf, false) => Bounds::new(3, 3, 6, 3),
            (Suite::Gf, true) => Bounds {
                order: 6,
                lambda_order: 5,
                ..Bounds::new(2, 2, 4, 2)
            },
            (Suite::Oracle, false) => Bounds::new(9, 0, 9, 0),
            (Suite::Oracle, true) => Bounds::new(7, 0, 7, 0),
            (Suite::Baseline, false) => Bounds::new(14, 14, 14, 0),
            (Suite::Baseline, true) => Bounds::new(8, 8, 8, 0),
            (Suite::Dobinski, false) => Bounds::new(10, 0, 10, 3),
            (Suite::Dobinski, true) => Bounds::new(4, 0, 4, 2),
        }
    }

    /// Applies overrides. An explicit `n_max`/`m_max` without `sum_max`
    /// lifts the sum cap to `n_max + m_max`.
    pub fn with(mut self, o: &Overrides) -> Result<Self> {
        let widened = o.n_max.is_some() || o.m_max.is_some();
        self.n_max = o.n_max.unwrap_or(self.n_max);
        self.m_max = o.m_max.unwrap_or(self.m_max);
        self.r_max = o.r_max.unwrap_or(self.r_max);
        self.order = o.order.unwrap_or(self.order);
        self.lambda_order = o.lambda_order.unwrap_or(self.lambda_order);
        self.sum_max = match o.sum_max {
            Some(s) => s,
            None if widened => self.n_max + self.m_max,
            None => self.sum_max,
        };
        let caps = [
            ("n-max", self.n_max, MAX_DEGREE),
            ("m-max", self.m_max, MAX_DEGREE),
            ("sum-max", self.sum_max, MAX_DEGREE),
            ("r-max", self.r_max, MAX_R),
            ("order", self.order, MAX_ORDER),
            ("lambda-order", self.lambda_order, MAX_ORDER),
        ];
        for (name, value, cap) in caps {
            if value > cap {
                return Err(Error::BoundTooLarge { name, value, cap });
            }
        }
        Ok(self)
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..=self.n_max).flat_map(move |n| {
            (0..=self.m_max)
                .filter(move |&m| n + m <= self.sum_max)
                .map(move |m| (n, m))
        })
    }
}

/// Corrupts `L(2,1)` and `L_λ(2,1)` (at `r = 0`) by one, leaving every
/// other entry intact.
#[derive(Debug, Clone, Copy, Default)]
pub struct Faulty;

impl LahSource for Faulty {
    fn r_lah(&self, n: usize, k: usize, r: usize) -> ExactInt {
        let v = ClosedForm.r_lah(n, k, r);
        if (n, k, r) == (2, 1, 0) {
            v + 1
        } else {
            v
        }
    }

    fn lambda_r_lah(&self, n: usize, k: usize, r: usize) -> LambdaPoly {
        let v = ClosedForm.lambda_r_lah(n, k, r);
        if (n, k, r) == (2, 1, 0) {
            v + LambdaPoly::one()
        } else {
            v
        }
    }
}

type Task<'a> = Box<dyn Fn(&dyn LahSource) -> Report + Send + Sync + 'a>;

/// Turns a setup error into a failing report rather than dropping it.
fn settle(identity: &str, outcome: Result<Report>) -> Report {
    outcome.unwrap_or_else(|e| {
        let mut report = Report::new(identity);
        report.check_that(|| "setup".to_string(), false, &e.to_string());
        report
    })
}

pub fn gf_lambdas() -> Vec<ExactRat> {
    vec![rat(1, 1), rat(-1, 1), rat(1, 2), rat(2, 1), rat(1, 3)]
}

pub fn gf_points() -> Vec<ExactRat> {
    vec![rat(0, 1), rat(1, 1), rat(1, 2)]
}

fn tasks(suite: Suite, b: &Bounds, quick: bool) -> Vec<Task<'static>> {
    let mut out: Vec<Task<'static>> = Vec::new();
    match suite {
        Suite::Defining => {
            for n in 0..=b.n_max {
                out.push(Box::new(move |s| {
                    defining_relation_check_with(s, n, 0, DefiningVariant::Classic)
                }));
                for r in 0..=b.r_max {
                    out.push(Box::new(move |s| {
                        defining_relation_check_with(s, n, r, DefiningVariant::RShift)
                    }));
                    out.push(Box::new(move |s| {
                        defining_relation_check_with(s, n, r, DefiningVariant::Lambda)
                    }));
                }
                out.push(Box::new(move |_| vandermonde_check(n)));
            }
            for r in 0..=b.r_max {
                let n_max = b.n_max;
                out.push(Box::new(move |_| r_lah_recurrence_check(n_max, r)));
            }
        }
        Suite::Spivey => {
            for (n, m) in b.pairs() {
                out.push(Box::new(move |s| spivey_r_check_with(s, n, m, 0)));
            }
        }
        Suite::SpiveyR => {
            for r in 0..=b.r_max {
                for (n, m) in b.pairs() {
                    out.push(Box::new(move |s| spivey_r_check_with(s, n, m, r)));
                }
            }
        }
        Suite::SpiveyLambda => {
            for r in 0..=b.r_max {
                for (n, m) in b.pairs() {
                    out.push(Box::new(move |s| spivey_lambda_check_with(s, n, m, r)));
                }
            }
        }
        Suite::Weyl => {
            let (shift_max, k_max, reorder_max) = if quick { (3, 2, 3) } else { (5, 4, 5) };
            let shift_max = shift_max.min(b.n_max);
            for i in 0..=reorder_max {
                for j in 0..=reorder_max {
                    out.push(Box::new(move |_| weyl::reordering_check(i, j)));
                }
            }
            for k in 0..=b.n_max {
                out.push(Box::new(move |_| weyl::commutator_check(k)));
            }
            for r in 0..=b.r_max {
                for n in 0..=b.n_max {
                    out.push(Box::new(move |s| weyl::expansion_check_with(s, n, r)));
                    out.push(Box::new(move |s| weyl::exp_action_check_with(s, n, r)));
                }
                for (n, m) in b.pairs() {
                    out.push(Box::new(move |s| {
                        weyl::operator_spivey_check_with(s, n, m, r)
                    }));
                }
                for n in 0..=shift_max {
                    for m in 0..=shift_max {
                        for k in 1..=k_max {
                            out.push(Box::new(move |_| {
                                settle("weyl-shift", weyl::shift_identity_check(n, m, r, k))
                            }));
                        }
                    }
                }
            }
        }
        Suite::Gf => {
            let (order, lambda_order) = (b.order, b.lambda_order);
            for r in 0..=b.r_max {
                for k in 0..=order {
                    out.push(Box::new(move |s| {
                        settle("gf-lah", gf_check_lah_with(s, k, order, r))
                    }));
                }
                for x in gf_points() {
                    out.push(Box::new(move |s| gf_check_bell_with(s, r, order, &x)));
                }
                for lambda in gf_lambdas() {
                    for k in 0..=lambda_order {
                        let lambda = lambda.clone();
                        out.push(Box::new(move |s| {
                            let target = GfLambdaTarget::Number { k };
                            settle(
                                "gf-lambda-number",
                                gf_check_lambda_with(s, r, &lambda, lambda_order, &target),
                            )
                        }));
                    }
                    for x in gf_points() {
                        let lambda = lambda.clone();
                        out.push(Box::new(move |s| {
                            let target = GfLambdaTarget::Poly { x: x.clone() };
                            settle(
                                "gf-lambda-poly",
                                gf_check_lambda_with(s, r, &lambda, lambda_order, &target),
                            )
                        }));
                    }
                    for (n, m) in b.pairs() {
                        let lambda = lambda.clone();
                        out.push(Box::new(move |_| {
                            settle(
                                "gf-two-variable",
                                two_variable_spivey_spot_check(n, m, r, &lambda, &rat(1, 2)),
                            )
                        }));
                    }
                }
            }
        }
        Suite::Oracle => {
            for n in 0..=b.n_max {
                out.push(Box::new(move |s| oracle_check(s, n)));
            }
        }
        Suite::Baseline => {
            for (n, m) in b.pairs() {
                out.push(Box::new(move |_| spivey_bell_check(n, m)));
            }
            for n in 0..=b.n_max.min(8) {
                out.push(Box::new(move |_| bell_enumeration_check(n)));
            }
        }
        Suite::Dobinski => {
            let lambdas = [None, Some(rat(1, 1)), Some(rat(1, 2)), Some(rat(2, 1))];
            for n in 0..=b.n_max {
                for r in 0..=b.r_max {
                    for x in [rat(1, 2), rat(1, 1), rat(2, 1)] {
                        for lambda in lambdas.clone() {
                            let x = x.clone();
                            out.push(Box::new(move |_| dobinski_check(n, r, &x, lambda.as_ref())));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Enumerated ordered-block partitions against `L(n,k)` and `LB_n(1)`.
pub fn oracle_check(src: &dyn LahSource, n: usize) -> Report {
    let mut report = Report::new("oracle").param("n", n);
    let counts = match Enumerator::default().distribution_by_block_count(n) {
        Ok(c) => c,
        Err(e) => {
            report.check_that(|| format!("n={n}"), false, &e.to_string());
            return report;
        }
    };
    for k in 0..=n {
        let got = counts.get(&k).cloned().unwrap_or_default();
        report.check(|| format!("n={n}, k={k}"), &src.r_lah(n, k, 0), &got);
    }
    let total: ExactInt = counts.values().sum();
    let lb_at_one = r_lah_bell_poly_from(src, n, 0).eval(&ExactRat::one());
    report.check(|| format!("row sum n={n}"), &lb_at_one, &rat_int(total));
    report
}

/// Bell numbers against the count of enumerated set partitions.
pub fn bell_enumeration_check(n: usize) -> Report {
    let mut report = Report::new("bell-enumeration").param("n", n);
    match Enumerator::default().count_set_partitions(n) {
        Ok(count) => report.check(|| format!("n={n}"), &bell(n), &count),
        Err(e) => report.check_that(|| format!("n={n}"), false, &e.to_string()),
    };
    report
}

/// One Dobinski evaluation: error within the reported bounds, and the tail
/// bound below `1e-20`.
pub fn dobinski_check(n: usize, r: usize, x: &ExactRat, lambda: Option<&ExactRat>) -> Report {
    let eps = parse_rational("1e-20").expect("literal parses");
    let mut report = Report::new("dobinski")
        .param("n", n)
        .param("r", r)
        .param("x", format_rational(x))
        .param(
            "lambda",
            lambda.map(format_rational).unwrap_or_else(|| "none".into()),
        );
    let at = || format!("n={n}, r={r}, x={x}, lambda={lambda:?}");
    match dobinski_eval(n, r, x, lambda, &eps) {
        Ok(res) => {
            let allowance =
                ExactRat::new(1.into(), ExactInt::one() << (DEFAULT_PRECISION_BITS / 2));
            let err = res.error();
            let tail = res.tail_bound.to_rational();
            report.check_that(
                at,
                err >= ExactRat::default(),
                "approximation exceeds exact value",
            );
            report.check_that(at, err <= &tail + allowance, "error exceeds tail bound");
            report.check_that(at, tail < eps, "tail bound not below 1e-20");
        }
        Err(e) => {
            report.check_that(at, false, &e.to_string());
        }
    }
    report
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub bounds: Bounds,
    pub reports: Vec<Report>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    pub fn checks(&self) -> usize {
        self.reports.iter().map(|r| r.checks).sum()
    }

    pub fn first_failure(&self) -> Option<&Report> {
        self.reports.iter().find(|r| !r.passed())
    }
}

/// Runs the given suites on a pool of `jobs` workers. Reports come back in
/// the order the sweep enumerates them, whatever the completion order.
pub fn run_suites(
    suites: &[Suite],
    overrides: &Overrides,
    quick: bool,
    jobs: usize,
    src: &dyn LahSource,
) -> Result<Vec<SuiteOutcome>> {
    let plans = suites
        .iter()
        .map(|&suite| {
            let bounds = Bounds::default_for(suite, quick).with(overrides)?;
            if suite == Suite::Oracle && bounds.n_max > crate::oracle::DEFAULT_CAP {
                return Err(Error::EnumerationCap {
                    n: bounds.n_max,
                    cap: crate::oracle::DEFAULT_CAP,
                });
            }
            Ok((suite, bounds))
        })
        .collect::<Result<Vec<_>>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool builds");
    Ok(pool.install(|| {
        plans
            .into_iter()
            .map(|(suite, bounds)| {
                let reports = tasks(suite, &bounds, quick)
                    .par_iter()
                    .map(|task| task(src))
                    .collect();
                SuiteOutcome {
                    suite,
                    bounds,
                    reports,
                }
            })
            .collect()
    }))
}

pub fn run_suite(suite: Suite, quick: bool) -> Result<SuiteOutcome> {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut outcomes = run_suites(&[suite], &Overrides::default(), quick, jobs, &ClosedForm)?;
    Ok(outcomes.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn overrides_widen_the_sum_cap() {
        let b = Bounds::default_for(Suite::Spivey, false);
        let o = Overrides {
            n_max: Some(6),
            m_max: Some(6),
            ..Default::default()
        };
        let widened = b.clone().with(&o).unwrap();
        assert_eq!(widened.sum_max, 12);
        assert_eq!(widened.pairs().count(), 49);
        let capped = Overrides {
            r_max: Some(99),
            ..Default::default()
        };
        assert!(matches!(
            b.with(&capped),
            Err(Error::BoundTooLarge { name: "r-max", .. })
        ));
    }

    #[test]
    fn faulty_source_differs_in_one_entry() {
        for n in 0..=4 {
            for k in 0..=n {
                for r in 0..=2 {
                    let same = Faulty.r_lah(n, k, r) == ClosedForm.r_lah(n, k, r);
                    assert_eq!(same, (n, k, r) != (2, 1, 0));
                }
            }
        }
    }

    #[test]
    fn every_quick_suite_catches_the_fault() {
        for suite in [
            Suite::Defining,
            Suite::Spivey,
            Suite::SpiveyR,
            Suite::SpiveyLambda,
            Suite::Weyl,
            Suite::Gf,
            Suite::Oracle,
        ] {
            let clean = run_suites(&[suite], &Overrides::default(), true, 2, &ClosedForm).unwrap();
            assert!(clean[0].passed(), "{suite} fails on clean data");
            let faulty = run_suites(&[suite], &Overrides::default(), true, 2, &Faulty).unwrap();
            assert!(!faulty[0].passed(), "{suite} misses the injected fault");
        }
    }

    #[test]
    fn output_order_is_independent_of_jobs() {
        let one = run_suites(
            &[Suite::Spivey],
            &Overrides::default(),
            true,
            1,
            &ClosedForm,
        )
        .unwrap();
        let four = run_suites(
            &[Suite::Spivey],
            &Overrides::default(),
            true,
            4,
            &ClosedForm,
        )
        .unwrap();
        assert_eq!(one[0].reports, four[0].reports);
    }
}
