//! Coefficient-wise verification of the exponential generating functions.
//! Every comparison is made on `n!·[t^n]`.

use num_traits::{One, Zero};

use super::{BiSeries, TruncSeries};
use crate::error::{Error, Result};
use crate::exact::{factorial, rat_int, ExactRat};
use crate::poly::{
    lambda_r_lah_bell_poly, lambda_r_lah_bell_poly_from, r_lah_bell_poly_from, spivey_rhs_lambda,
};
use crate::report::Report;
use crate::tables::{ClosedForm, LahSource};

fn egf_coeff(s: &TruncSeries, n: usize) -> ExactRat {
    s.coeff(n) * rat_int(factorial(n))
}

fn inv_factorial(k: usize) -> ExactRat {
    ExactRat::new(1.into(), factorial(k))
}

pub fn gf_check_lah(k: usize, order: usize, r: usize) -> Result<Report> {
    gf_check_lah_with(&ClosedForm, k, order, r)
}

/// Column generating function of the r-Lah numbers in two equivalent forms,
/// `(1/k!)(1/(1-t))^r (1/(1-t) - 1)^k` and `(t^k/k!)(1/(1-t))^{k+r}`,
/// against `L^r(n,k)` for `n ≤ order`.
pub fn gf_check_lah_with(src: &dyn LahSource, k: usize, order: usize, r: usize) -> Result<Report> {
    if k > order {
        return Err(Error::OrderTooSmall { k, order });
    }
    let mut report = Report::new("gf-lah")
        .param("k", k)
        .param("order", order)
        .param("r", r);
    let one = ExactRat::one();
    let geometric = TruncSeries::binomial_series(&one, &one, order);
    let shifted = &geometric - &TruncSeries::one(order);
    let product_form = (&TruncSeries::binomial_series(&rat_int(r), &one, order)
        * &shifted.pow_int(k))
        .scale(&inv_factorial(k));
    let closed_form = &TruncSeries::monomial(inv_factorial(k), k, order)
        * &TruncSeries::binomial_series(&rat_int(k + r), &one, order);
    for n in 0..=order {
        let want = rat_int(src.r_lah(n, k, r));
        report.check(
            || format!("product form n={n}, k={k}, r={r}"),
            &want,
            &egf_coeff(&product_form, n),
        );
        report.check(
            || format!("closed form n={n}, k={k}, r={r}"),
            &want,
            &egf_coeff(&closed_form, n),
        );
    }
    Ok(report)
}

pub fn gf_check_bell(r: usize, order: usize, x: &ExactRat) -> Report {
    gf_check_bell_with(&ClosedForm, r, order, x)
}

/// `(1/(1-t))^r · exp(x(1/(1-t) - 1))` against `LB_n^{(r)}(x)`.
pub fn gf_check_bell_with(src: &dyn LahSource, r: usize, order: usize, x: &ExactRat) -> Report {
    let mut report = Report::new("gf-bell")
        .param("r", r)
        .param("order", order)
        .param("x", crate::exact::format_rational(x));
    let one = ExactRat::one();
    let geometric = TruncSeries::binomial_series(&one, &one, order);
    let exponent = (&geometric - &TruncSeries::one(order)).scale(x);
    let lhs = &TruncSeries::binomial_series(&rat_int(r), &one, order)
        * &exponent.exp().expect("argument vanishes at t = 0");
    for n in 0..=order {
        let want = r_lah_bell_poly_from(src, n, r).eval(x);
        report.check(|| format!("n={n}, r={r}"), &want, &egf_coeff(&lhs, n));
    }
    report
}

/// Which side of the λ generating functions to check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfLambdaTarget {
    /// Column `k` of `L^r_λ(n,k)`.
    Number { k: usize },
    /// `LB_{n,λ}^{(r)}(x)` at a rational `x`.
    Poly { x: ExactRat },
}

pub fn gf_check_lambda(
    r: usize,
    lambda: &ExactRat,
    order: usize,
    target: &GfLambdaTarget,
) -> Result<Report> {
    gf_check_lambda_with(&ClosedForm, r, lambda, order, target)
}

/// `(1/k!)(t/(1-λt))^k (1/(1-λt))^{r/λ}` against `L^r_λ(n,k)`, or
/// `exp((x/λ)(1/(1-λt) - 1)) (1/(1-λt))^{r/λ}` against `LB_{n,λ}^{(r)}(x)`,
/// both at the given nonzero λ.
pub fn gf_check_lambda_with(
    src: &dyn LahSource,
    r: usize,
    lambda: &ExactRat,
    order: usize,
    target: &GfLambdaTarget,
) -> Result<Report> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let one = ExactRat::one();
    let r_over_lambda = rat_int(r) / lambda;
    let power = TruncSeries::binomial_series(&r_over_lambda, lambda, order);
    let inverse = TruncSeries::binomial_series(&one, lambda, order);
    let lam = crate::exact::format_rational(lambda);
    match target {
        GfLambdaTarget::Number { k } => {
            let k = *k;
            if k > order {
                return Err(Error::OrderTooSmall { k, order });
            }
            let mut report = Report::new("gf-lambda-number")
                .param("r", r)
                .param("lambda", &lam)
                .param("order", order)
                .param("k", k);
            let base = &TruncSeries::t(order) * &inverse;
            let lhs = (&base.pow_int(k) * &power).scale(&inv_factorial(k));
            for n in 0..=order {
                let want = src.lambda_r_lah(n, k, r).eval(lambda);
                report.check(
                    || format!("n={n}, k={k}, r={r}, lambda={lam}"),
                    &want,
                    &egf_coeff(&lhs, n),
                );
            }
            Ok(report)
        }
        GfLambdaTarget::Poly { x } => {
            let mut report = Report::new("gf-lambda-poly")
                .param("r", r)
                .param("lambda", &lam)
                .param("order", order)
                .param("x", crate::exact::format_rational(x));
            let exponent = (&inverse - &TruncSeries::one(order)).scale(&(x / lambda));
            let lhs = &exponent.exp()? * &power;
            for n in 0..=order {
                let want = lambda_r_lah_bell_poly_from(src, n, r).eval_both(x, lambda);
                report.check(
                    || format!("n={n}, r={r}, lambda={lam}"),
                    &want,
                    &egf_coeff(&lhs, n),
                );
            }
            Ok(report)
        }
    }
}

/// Two-variable generating function `Σ LB_{n+m,λ}^{(r)}(t) x^n y^m/(n! m!)`,
/// expanded three ways up to `x^n y^m`:
///
/// 1. directly as `(1/(1-λ(x+y)))^{r/λ} exp((t/λ)(1/(1-λ(x+y)) - 1))`;
/// 2. through the factorization with `P = 1/(1-λx)` and
///    `B = 1/(1 - λyP)`:
///    `P^{r/λ} exp((t/λ)(P-1)) · exp((t/λ)P(B-1)) · B^{r/λ}`;
/// 3. as the double sum of the λ-Spivey recurrence.
///
/// Route 1 must agree with route 2 coefficient-wise, route 1 with
/// `LB_{i+j,λ}^{(r)}(t)`, and route 2 at `(n, m)` with the recurrence.
pub fn two_variable_spivey_spot_check(
    n: usize,
    m: usize,
    r: usize,
    lambda: &ExactRat,
    t: &ExactRat,
) -> Result<Report> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let lam = crate::exact::format_rational(lambda);
    let mut report = Report::new("gf-two-variable")
        .param("n", n)
        .param("m", m)
        .param("r", r)
        .param("lambda", &lam)
        .param("t", crate::exact::format_rational(t));
    let one = ExactRat::one();
    let r_over_lambda = rat_int(r) / lambda;
    let t_over_lambda = t / lambda;
    let x = BiSeries::monomial(one.clone(), 1, 0, n, m);
    let y = BiSeries::monomial(one.clone(), 0, 1, n, m);
    let unit = BiSeries::one(n, m);

    let u = (&x + &y).scale(lambda);
    let one_shot_inverse = BiSeries::neg_binomial_power(&u, &one)?;
    let direct = &BiSeries::neg_binomial_power(&u, &r_over_lambda)?
        * &(&one_shot_inverse - &unit).scale(&t_over_lambda).exp()?;

    let lx = x.scale(lambda);
    let p = BiSeries::neg_binomial_power(&lx, &one)?;
    let v = &y.scale(lambda) * &p;
    let b = BiSeries::neg_binomial_power(&v, &one)?;
    let first = &BiSeries::neg_binomial_power(&lx, &r_over_lambda)?
        * &(&p - &unit).scale(&t_over_lambda).exp()?;
    let second = (&p * &(&b - &unit)).scale(&t_over_lambda).exp()?;
    let third = BiSeries::neg_binomial_power(&v, &r_over_lambda)?;
    let factored = &(&first * &second) * &third;

    for i in 0..=n {
        for j in 0..=m {
            let at = || format!("x^{i} y^{j}");
            report.check(at, &direct.coeff(i, j), &factored.coeff(i, j));
            let scale = rat_int(factorial(i) * factorial(j));
            let want = lambda_r_lah_bell_poly(i + j, r).eval_both(t, lambda);
            report.check(at, &want, &(direct.coeff(i, j) * &scale));
        }
    }
    let scale = rat_int(factorial(n) * factorial(m));
    let recurrence = spivey_rhs_lambda(n, m, r).eval_both(t, lambda);
    report.check(
        || format!("recurrence at x^{n} y^{m}"),
        &recurrence,
        &(factored.coeff(n, m) * scale),
    );
    Ok(report)
}
