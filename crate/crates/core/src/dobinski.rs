//! Numerical evaluation of the Dobinski-type series with rigorous error bounds.
//!
//! Every term of the series is summed exactly; the only inexact step is the
//! factor `e^{-y}`, which is replaced by a rational lower bound, and the final
//! rounding down onto a `2^{-p}` grid. Both steps round toward zero, so the
//! reported value never exceeds the true one and refining the precision can
//! only move it closer.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    degenerate_factorial_value, factorial_value, format_rational, rat_int, Direction, ExactRat,
};
use crate::poly::{lambda_r_lah_bell_poly, r_lah_bell_poly};

pub const MIN_PRECISION_BITS: u32 = 128;
pub const DEFAULT_PRECISION_BITS: u32 = 256;

/// Binary fixed-point number `mantissa · 2^{-precision_bits}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HpFloat {
    mantissa: BigInt,
    precision_bits: u32,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

impl HpFloat {
    pub fn zero(precision_bits: u32) -> Self {
        HpFloat {
            mantissa: BigInt::zero(),
            precision_bits,
        }
    }

    /// Largest grid point not above `q`.
    pub fn floor_from(q: &ExactRat, precision_bits: u32) -> Self {
        let scaled = q * rat_int(pow2(precision_bits));
        HpFloat {
            mantissa: scaled.floor().to_integer(),
            precision_bits,
        }
    }

    /// Smallest grid point not below `q`.
    pub fn ceil_from(q: &ExactRat, precision_bits: u32) -> Self {
        let scaled = q * rat_int(pow2(precision_bits));
        HpFloat {
            mantissa: scaled.ceil().to_integer(),
            precision_bits,
        }
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn to_rational(&self) -> ExactRat {
        ExactRat::new(self.mantissa.clone(), pow2(self.precision_bits))
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// Fixed-point decimal with `digits` places, truncated toward zero.
    pub fn to_decimal(&self, digits: usize) -> String {
        let q = self.to_rational();
        let sign = if q.is_negative() { "-" } else { "" };
        let scale = num_traits::pow(BigInt::from(10), digits);
        let scaled = (q.abs() * rat_int(scale.clone())).floor().to_integer();
        let (whole, frac) = scaled.div_rem(&scale);
        if digits == 0 {
            return format!("{sign}{whole}");
        }
        format!(
            "{sign}{whole}.{:0>width$}",
            frac.to_string(),
            width = digits
        )
    }

    /// Number of decimal places the binary precision supports.
    pub fn decimal_digits(&self) -> usize {
        (self.precision_bits as usize * 30103) / 100000
    }
}

impl fmt::Display for HpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(self.decimal_digits()))
    }
}

/// Renders a rational as `d.ddd…e±X` with `digits` significant digits,
/// truncated toward zero.
pub fn format_scientific(q: &ExactRat, digits: usize) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let sign = if q.is_negative() { "-" } else { "" };
    let a = q.abs();
    let ten = rat_int(10);
    let mut exp = a.numer().to_string().len() as i32 - a.denom().to_string().len() as i32;
    // settle 10^exp <= a < 10^(exp+1)
    while ten.pow(exp) > a {
        exp -= 1;
    }
    while ten.pow(exp + 1) <= a {
        exp += 1;
    }
    let shifted = (a * ten.pow(digits as i32 - 1 - exp))
        .floor()
        .to_integer()
        .to_string();
    let (lead, rest) = shifted.split_at(1);
    if rest.is_empty() {
        format!("{sign}{lead}e{exp}")
    } else {
        format!("{sign}{lead}.{rest}e{exp}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DobinskiResult {
    /// Truncated series times a lower bound for `e^{-y}`, rounded down.
    pub approx: HpFloat,
    /// Upper bound on the neglected tail of the series.
    pub tail_bound: HpFloat,
    /// Upper bound on the error from `e^{-y}` and the final rounding.
    pub rounding_bound: HpFloat,
    pub terms_used: usize,
    pub exact_reference: ExactRat,
}

impl DobinskiResult {
    /// `exact_reference − approx`, which is never negative.
    pub fn error(&self) -> ExactRat {
        &self.exact_reference - self.approx.to_rational()
    }
}

/// The series `Σ w_k y^k / k!` in either of its two shapes.
struct Series<'a> {
    n: usize,
    r: usize,
    lambda: Option<&'a ExactRat>,
    y: ExactRat,
}

impl<'a> Series<'a> {
    fn new(n: usize, r: usize, x: &ExactRat, lambda: Option<&'a ExactRat>) -> Self {
        let y = match lambda {
            Some(l) => x / l,
            None => x.clone(),
        };
        Series { n, r, lambda, y }
    }

    /// `⟨k+r⟩_n`, or `⟨λk+r⟩_{n,λ}`.
    fn weight(&self, k: usize) -> ExactRat {
        match self.lambda {
            None => factorial_value(&rat_int(k + self.r), self.n, Direction::Rising),
            Some(l) => {
                let a = l * rat_int(k) + rat_int(self.r);
                degenerate_factorial_value(&a, self.n, l, Direction::Rising)
            }
        }
    }

    /// `r/λ` or `r`: the shift inside the ordinary rising factorial.
    fn rho(&self) -> ExactRat {
        match self.lambda {
            Some(l) => rat_int(self.r) / l,
            None => rat_int(self.r),
        }
    }
}

fn validate(x: &ExactRat, lambda: Option<&ExactRat>) -> Result<()> {
    if let Some(l) = lambda {
        if l.is_zero() {
            return Err(Error::ZeroLambda);
        }
        if l.is_negative() {
            return Err(Error::NonPositiveLambda);
        }
    }
    if !x.is_positive() {
        return Err(Error::NonPositiveX);
    }
    Ok(())
}

/// `K₀ = ⌈2(x/min(λ,1) + n + r)⌉ + 2`; from here on consecutive terms at
/// least halve.
pub fn threshold_index(n: usize, r: usize, x: &ExactRat, lambda: Option<&ExactRat>) -> usize {
    let one = ExactRat::one();
    let scaled_x = match lambda {
        Some(l) if l < &one => x / l,
        _ => x.clone(),
    };
    let k0 = ((scaled_x + rat_int(n + r)) * rat_int(2))
        .ceil()
        .to_integer();
    k0.to_usize().expect("threshold index fits in usize") + 2
}

/// Exact ratio `term_{k+1}/term_k = ((k+ρ+n)/(k+ρ)) · y/(k+1)`, with `ρ = r`
/// or `r/λ` and `y = x` or `x/λ`. It decreases to 0 in `k`.
///
/// Panics if `k == 0`.
pub fn term_ratio_bound(
    n: usize,
    r: usize,
    x: &ExactRat,
    lambda: Option<&ExactRat>,
    k: usize,
) -> ExactRat {
    assert!(k >= 1, "term ratio bound needs k >= 1");
    let series = Series::new(n, r, x, lambda);
    let base = rat_int(k) + series.rho();
    (&base + rat_int(n)) / &base * &series.y / rat_int(k + 1)
}

pub fn dobinski_eval(
    n: usize,
    r: usize,
    x: &ExactRat,
    lambda: Option<&ExactRat>,
    eps: &ExactRat,
) -> Result<DobinskiResult> {
    dobinski_eval_with_precision(n, r, x, lambda, eps, DEFAULT_PRECISION_BITS)
}

/// Evaluates `LB_n^{(r)}(x) = e^{-x} Σ ⟨k+r⟩_n x^k/k!` or, with λ,
/// `LB_{n,λ}^{(r)}(x) = e^{-x/λ} Σ ⟨λk+r⟩_{n,λ} (x/λ)^k/k!`.
///
/// The sum stops at the first `K ≥ K₀` with `term_K < eps/4`. Past `K₀` the
/// terms shrink geometrically with ratio below 1/2, so `2·term_K` bounds the
/// tail. The grid spacing `2^{-p}` must be at most `eps/2` so that the
/// rounded-up tail bound stays below `eps`.
pub fn dobinski_eval_with_precision(
    n: usize,
    r: usize,
    x: &ExactRat,
    lambda: Option<&ExactRat>,
    eps: &ExactRat,
    precision_bits: u32,
) -> Result<DobinskiResult> {
    validate(x, lambda)?;
    if !eps.is_positive() {
        return Err(Error::NonPositiveEps);
    }
    let needed = bits_for_resolution(eps).max(MIN_PRECISION_BITS);
    if precision_bits < needed {
        return Err(Error::PrecisionTooLow {
            min: needed,
            got: precision_bits,
        });
    }

    let series = Series::new(n, r, x, lambda);
    let k0 = threshold_index(n, r, x, lambda);
    let quarter_eps = eps / rat_int(4);
    let mut sum = ExactRat::zero();
    let mut power = ExactRat::one(); // y^k / k!
    let mut k = 0usize;
    let last_term = loop {
        let term = series.weight(k) * &power;
        sum += &term;
        if k >= k0 && term < quarter_eps {
            break term;
        }
        k += 1;
        power = power * &series.y / rat_int(k);
    };

    let lower_exp = exp_neg_lower_bound(&series.y, &sum, precision_bits);
    let approx = HpFloat::floor_from(&(lower_exp * &sum), precision_bits);
    let tail_bound = HpFloat::ceil_from(&(last_term * rat_int(2)), precision_bits);
    let rounding_bound = HpFloat::ceil_from(
        &ExactRat::new(BigInt::from(2), pow2(precision_bits)),
        precision_bits,
    );
    let exact_reference = match lambda {
        None => r_lah_bell_poly(n, r).eval(x),
        Some(l) => lambda_r_lah_bell_poly(n, r).eval_both(x, l),
    };
    Ok(DobinskiResult {
        approx,
        tail_bound,
        rounding_bound,
        terms_used: k + 1,
        exact_reference,
    })
}

/// Smallest `p` with `2^{-p} ≤ eps/2`.
fn bits_for_resolution(eps: &ExactRat) -> u32 {
    let half = eps / rat_int(2);
    let mut p = 0u32;
    while ExactRat::new(BigInt::one(), pow2(p)) > half {
        p += 1;
    }
    p
}

/// Rational `L ≤ e^{-y}` with `(e^{-y} − L)·scale < 2^{-p}`.
///
/// `L = 1/U_M` where `U_M = Σ_{k≤M} y^k/k! + 2y^{M+1}/(M+1)!` overestimates
/// `e^y` once `M + 2 ≥ 2y`. `U_M` decreases in `M` from there, and `M` is the
/// first index past that point meeting the accuracy target, so a larger `p`
/// never yields a smaller `L`.
fn exp_neg_lower_bound(y: &ExactRat, scale: &ExactRat, precision_bits: u32) -> ExactRat {
    let start = (y * rat_int(2))
        .ceil()
        .to_integer()
        .to_usize()
        .unwrap_or(0)
        .max(1);
    let target = ExactRat::new(BigInt::one(), pow2(precision_bits));
    let mut partial = ExactRat::zero();
    let mut t = ExactRat::one(); // y^k / k!
    let mut m = 0usize;
    loop {
        partial += &t;
        let next = &t * y / rat_int(m + 1);
        let slack = &next * rat_int(2);
        if m >= start && &slack * scale < target {
            return (partial + slack).recip();
        }
        t = next;
        m += 1;
    }
}

impl fmt::Display for DobinskiResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "approx: {}", self.approx)?;
        writeln!(
            f,
            "tail_bound: {}",
            format_scientific(&self.tail_bound.to_rational(), 6)
        )?;
        writeln!(
            f,
            "rounding_bound: {}",
            format_scientific(&self.rounding_bound.to_rational(), 6)
        )?;
        writeln!(f, "terms_used: {}", self.terms_used)?;
        writeln!(f, "exact: {}", format_rational(&self.exact_reference))?;
        write!(f, "difference: {}", format_scientific(&self.error(), 6))
    }
}

/// Compares two grid values of possibly different precision.
pub fn compare(a: &HpFloat, b: &HpFloat) -> Ordering {
    a.to_rational().cmp(&b.to_rational())
}
