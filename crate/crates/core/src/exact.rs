//! Exact integer/rational primitives and factorial-type polynomials.
//!
//! Integers and rationals are backed by `num-bigint` / `num-rational`;
//! `BigRational` reduces after every operation, so values are always in
//! lowest terms with a positive denominator.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::poly::{BiPoly, LambdaPoly, XPoly};

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

/// Default number of memoized factorials.
pub const DEFAULT_FACTORIAL_CAP: usize = 512;

/// Rising or falling direction of a factorial-type product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Rising,
    Falling,
}

impl Direction {
    fn sign(self) -> i64 {
        match self {
            Direction::Rising => 1,
            Direction::Falling => -1,
        }
    }
}

/// Memoized factorials `0!..=cap!`. Requests past the cap are computed
/// on demand from the largest stored value.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    values: Vec<BigInt>,
}

impl FactorialTable {
    pub fn with_cap(cap: usize) -> Self {
        let mut values = Vec::with_capacity(cap + 1);
        values.push(BigInt::one());
        for i in 1..=cap {
            let next = &values[i - 1] * BigInt::from(i);
            values.push(next);
        }
        FactorialTable { values }
    }

    pub fn cap(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> BigInt {
        if let Some(v) = self.values.get(n) {
            return v.clone();
        }
        let cap = self.cap();
        let mut acc = self.values[cap].clone();
        for i in cap + 1..=n {
            acc *= BigInt::from(i);
        }
        acc
    }
}

fn default_table() -> &'static FactorialTable {
    static TABLE: OnceLock<FactorialTable> = OnceLock::new();
    TABLE.get_or_init(|| FactorialTable::with_cap(DEFAULT_FACTORIAL_CAP))
}

/// `n!`
pub fn factorial(n: usize) -> ExactInt {
    default_table().get(n)
}

pub fn int(v: i64) -> ExactInt {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> ExactRat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: impl Into<BigInt>) -> ExactRat {
    BigRational::from_integer(v.into())
}

/// Generalized binomial `a(a-1)...(a-k+1)/k!` with rational upper argument.
pub fn binomial(a: &ExactRat, k: usize) -> ExactRat {
    let mut acc = ExactRat::one();
    for i in 0..k {
        acc *= a - rat_int(i);
    }
    acc / rat_int(factorial(k))
}

/// Ordinary binomial for integer arguments; zero when `k > n`.
pub fn binomial_int(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Rising (`a(a+1)...(a+n-1)`) or falling factorial of a rational value.
pub fn factorial_value(a: &ExactRat, n: usize, direction: Direction) -> ExactRat {
    degenerate_factorial_value(a, n, &ExactRat::one(), direction)
}

/// `a(a±λ)(a±2λ)...` with `n` factors.
pub fn degenerate_factorial_value(
    a: &ExactRat,
    n: usize,
    lambda: &ExactRat,
    direction: Direction,
) -> ExactRat {
    let step = lambda * rat_int(direction.sign());
    let mut acc = ExactRat::one();
    let mut factor = a.clone();
    for _ in 0..n {
        acc *= &factor;
        factor += &step;
    }
    acc
}

/// Ordinary rising factorial of a nonnegative integer, `⟨a⟩_n`.
pub fn rising_int(a: u64, n: usize) -> ExactInt {
    (0..n as u64).fold(ExactInt::one(), |acc, i| acc * (a + i))
}

/// `(x)_n` or `⟨x⟩_n` as a polynomial in x.
pub fn factorial_poly(n: usize, direction: Direction) -> XPoly {
    let sign = direction.sign();
    (0..n).fold(XPoly::one(), |acc, i| {
        let factor = XPoly::from_coeffs(vec![rat_int(sign * i as i64), ExactRat::one()]);
        acc * factor
    })
}

/// `(x)_{n,λ}` or `⟨x⟩_{n,λ}` as a polynomial in x over ℚ[λ].
pub fn degenerate_factorial_poly(n: usize, direction: Direction) -> BiPoly {
    let sign = direction.sign();
    (0..n).fold(BiPoly::one(), |acc, i| {
        let shift = LambdaPoly::monomial(rat_int(sign * i as i64), 1);
        acc * BiPoly::from_coeffs(vec![shift, LambdaPoly::one()])
    })
}

/// `binom{x}{n}_λ = (x)_{n,λ} / n!`
pub fn degenerate_binomial(x: &ExactRat, n: usize, lambda: &ExactRat) -> ExactRat {
    degenerate_factorial_value(x, n, lambda, Direction::Falling) / rat_int(factorial(n))
}

/// Parses `"p/q"`, `"p"`, a plain decimal such as `"0.5"`, or scientific
/// notation such as `"1e-20"`.
pub fn parse_rational(text: &str) -> Result<ExactRat, Error> {
    let bad = || Error::Parse(text.to_string());
    let s = text.trim();
    if let Some((mantissa, exponent)) = s.split_once(['e', 'E']) {
        if mantissa.contains('/') {
            return Err(bad());
        }
        let mantissa = parse_rational(mantissa).map_err(|_| bad())?;
        let exponent: i32 = exponent.parse().map_err(|_| bad())?;
        let power = BigRational::from_integer(BigInt::from(10)).pow(exponent);
        return Ok(mantissa * power);
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole: BigInt = match whole.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            w => w.parse().map_err(|_| bad())?,
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let magnitude = BigRational::new(whole * &scale + frac, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let v: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(v))
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn format_rational(v: &ExactRat) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn is_positive(v: &ExactRat) -> bool {
    v.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(1), int(1));
        assert_eq!(factorial(5), int(120));
    }

    #[test]
    fn factorial_past_cap() {
        let small = FactorialTable::with_cap(4);
        assert_eq!(small.get(10), int(3628800));
        assert_eq!(small.get(600), factorial(600));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&rat(4, 1), 2), rat(6, 1));
        assert_eq!(binomial(&rat(-7, 3), 0), rat(1, 1));
        assert_eq!(binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(binomial_int(3, 5), int(0));
        assert_eq!(binomial_int(10, 3), int(120));
    }

    #[test]
    fn factorial_poly_examples() {
        assert_eq!(factorial_poly(0, Direction::Rising), XPoly::one());
        assert_eq!(factorial_poly(2, Direction::Rising).to_string(), "x + x^2");
        assert_eq!(
            factorial_poly(2, Direction::Falling).to_string(),
            "-x + x^2"
        );
        assert_eq!(factorial_poly(7, Direction::Falling).degree(), Some(7));
    }

    #[test]
    fn degenerate_factorial_poly_examples() {
        assert_eq!(
            degenerate_factorial_poly(1, Direction::Falling).to_string(),
            "x"
        );
        assert_eq!(
            degenerate_factorial_poly(2, Direction::Falling).to_string(),
            "-l*x + x^2"
        );
        assert_eq!(
            degenerate_factorial_poly(2, Direction::Rising).to_string(),
            "l*x + x^2"
        );
    }

    #[test]
    fn degenerate_factorial_poly_specializations() {
        for n in 0..=30 {
            for d in [Direction::Rising, Direction::Falling] {
                let bi = degenerate_factorial_poly(n, d);
                assert_eq!(bi.eval_lambda(&rat(1, 1)), factorial_poly(n, d));
                assert_eq!(bi.eval_lambda(&rat(0, 1)), XPoly::monomial(rat(1, 1), n));
            }
        }
    }

    #[test]
    fn degenerate_binomial_examples() {
        assert_eq!(degenerate_binomial(&rat(5, 7), 0, &rat(3, 1)), rat(1, 1));
        assert_eq!(degenerate_binomial(&rat(3, 1), 2, &rat(1, 1)), rat(3, 1));
        assert_eq!(degenerate_binomial(&rat(2, 1), 2, &rat(1, 2)), rat(3, 2));
    }

    #[test]
    fn integer_binomials_match_factorial_quotient() {
        for n in 0..25u64 {
            for k in 0..=n {
                let b = binomial(&rat(n as i64, 1), k as usize);
                assert!(b.is_integer() && !b.is_negative());
                let direct =
                    factorial(n as usize) / (factorial(k as usize) * factorial((n - k) as usize));
                assert_eq!(b, rat_int(direct.clone()));
                assert_eq!(binomial_int(n, k), direct);
            }
        }
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-2").unwrap(), rat(-2, 1));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational("2.5E2").unwrap(), rat(250, 1));
        assert!(parse_rational("1/2e3").is_err());
        assert!(parse_rational("1e").is_err());
    }

    fn small_rat() -> impl Strategy<Value = ExactRat> {
        (-40i64..40, 1i64..12).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #[test]
        fn factorial_poly_matches_direct_product(n in 0usize..=30, x in small_rat()) {
            for d in [Direction::Rising, Direction::Falling] {
                let expected = (0..n).fold(rat(1, 1), |acc, i| {
                    acc * (&x + rat_int(d.sign() * i as i64))
                });
                prop_assert_eq!(factorial_poly(n, d).eval(&x), expected);
            }
        }

        #[test]
        fn degenerate_binomial_times_factorial(x in small_rat(), lambda in small_rat(), n in 0usize..=15) {
            let lhs = degenerate_binomial(&x, n, &lambda) * rat_int(factorial(n));
            let poly = degenerate_factorial_poly(n, Direction::Falling);
            prop_assert_eq!(lhs, poly.eval_both(&x, &lambda));
        }
    }
}
