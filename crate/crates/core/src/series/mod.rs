//! Truncated formal power series with exact rational coefficients.

mod gf;

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, rat_int, ExactRat};

pub use gf::{
    gf_check_bell, gf_check_bell_with, gf_check_lah, gf_check_lah_with, gf_check_lambda,
    gf_check_lambda_with, two_variable_spivey_spot_check, GfLambdaTarget,
};

/// `Σ_{n≤order} c_n t^n`; everything past `order` is discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<ExactRat>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![ExactRat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ExactRat::one(), order)
    }

    pub fn constant(c: ExactRat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::monomial(ExactRat::one(), 1, order)
    }

    pub fn monomial(c: ExactRat, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// Pads with zeros or truncates to `order`.
    pub fn from_coeffs(mut coeffs: Vec<ExactRat>, order: usize) -> Self {
        coeffs.resize(order + 1, ExactRat::zero());
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRat] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> ExactRat {
        self.coeffs.get(n).cloned().unwrap_or_else(ExactRat::zero)
    }

    pub fn scale(&self, c: &ExactRat) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `exp(a)` for `a(0) = 0`, via `n·b_n = Σ_{k=1}^n k·a_k·b_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut b = vec![ExactRat::zero(); order + 1];
        b[0] = ExactRat::one();
        for n in 1..=order {
            let mut acc = ExactRat::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += rat_int(k) * &self.coeffs[k] * &b[n - k];
                }
            }
            b[n] = acc / rat_int(n);
        }
        Ok(TruncSeries { coeffs: b })
    }

    pub fn pow_int(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| &acc * self)
    }

    /// `(1 - scale·t)^(-exponent)`: coefficient of `t^n` is
    /// `C(exponent+n-1, n)·scale^n`.
    pub fn binomial_series(exponent: &ExactRat, scale: &ExactRat, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = ExactRat::one();
        for n in 0..=order {
            let top = exponent + rat_int(n) - ExactRat::one();
            coeffs.push(binomial(&top, n) * &power);
            power *= scale;
        }
        TruncSeries { coeffs }
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;

    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Cauchy product truncated at the smaller order.
impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![ExactRat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncSeries { coeffs: out }
    }
}

/// Truncated double series `Σ c_{ij} x^i y^j`, `i ≤ nx`, `j ≤ ny`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    coeffs: Vec<Vec<ExactRat>>,
}

impl BiSeries {
    pub fn zero(nx: usize, ny: usize) -> Self {
        BiSeries {
            coeffs: vec![vec![ExactRat::zero(); ny + 1]; nx + 1],
        }
    }

    pub fn constant(c: ExactRat, nx: usize, ny: usize) -> Self {
        let mut s = Self::zero(nx, ny);
        s.coeffs[0][0] = c;
        s
    }

    pub fn one(nx: usize, ny: usize) -> Self {
        Self::constant(ExactRat::one(), nx, ny)
    }

    /// `c·x^i·y^j`
    pub fn monomial(c: ExactRat, i: usize, j: usize, nx: usize, ny: usize) -> Self {
        let mut s = Self::zero(nx, ny);
        if i <= nx && j <= ny {
            s.coeffs[i][j] = c;
        }
        s
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.coeffs.len() - 1, self.coeffs[0].len() - 1)
    }

    pub fn coeff(&self, i: usize, j: usize) -> ExactRat {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(ExactRat::zero)
    }

    pub fn scale(&self, c: &ExactRat) -> Self {
        BiSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|row| row.iter().map(|a| a * c).collect())
                .collect(),
        }
    }

    fn has_zero_constant(&self) -> bool {
        self.coeffs[0][0].is_zero()
    }

    /// Largest total degree that can survive truncation.
    fn max_total_degree(&self) -> usize {
        let (nx, ny) = self.orders();
        nx + ny
    }

    /// `exp(a) = Σ_s a^s/s!`, finite because `a(0,0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.has_zero_constant() {
            return Err(Error::NonzeroConstantTerm);
        }
        let (nx, ny) = self.orders();
        let mut acc = Self::one(nx, ny);
        let mut power = Self::one(nx, ny);
        for s in 1..=self.max_total_degree() {
            power = &power * self;
            acc = &acc + &power.scale(&ExactRat::new(1.into(), crate::exact::factorial(s)));
        }
        Ok(acc)
    }

    /// `(1 - u)^(-exponent) = Σ_s C(exponent+s-1, s) u^s` for `u(0,0) = 0`.
    pub fn neg_binomial_power(u: &BiSeries, exponent: &ExactRat) -> Result<Self> {
        if !u.has_zero_constant() {
            return Err(Error::NonzeroConstantTerm);
        }
        let (nx, ny) = u.orders();
        let mut acc = Self::one(nx, ny);
        let mut power = Self::one(nx, ny);
        for s in 1..=u.max_total_degree() {
            power = &power * u;
            let c = binomial(&(exponent + rat_int(s) - ExactRat::one()), s);
            acc = &acc + &power.scale(&c);
        }
        Ok(acc)
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;

    fn add(self, rhs: &BiSeries) -> BiSeries {
        let (nx, ny) = self.orders();
        let mut out = BiSeries::zero(nx, ny);
        for i in 0..=nx {
            for j in 0..=ny {
                out.coeffs[i][j] = &self.coeffs[i][j] + rhs.coeff(i, j);
            }
        }
        out
    }
}

impl Sub for &BiSeries {
    type Output = BiSeries;

    fn sub(self, rhs: &BiSeries) -> BiSeries {
        self + &rhs.scale(&-ExactRat::one())
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;

    fn mul(self, rhs: &BiSeries) -> BiSeries {
        let (nx, ny) = self.orders();
        let mut out = BiSeries::zero(nx, ny);
        for (i1, row) in self.coeffs.iter().enumerate() {
            for (j1, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=nx - i1 {
                    for j2 in 0..=ny - j1 {
                        let b = rhs.coeff(i2, j2);
                        if !b.is_zero() {
                            out.coeffs[i1 + i2][j1 + j2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{factorial, rat};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<ExactRat> {
        v.iter().map(|&i| rat_int(i)).collect()
    }

    #[test]
    fn binomial_series_examples() {
        let geo = TruncSeries::binomial_series(&rat(1, 1), &rat(1, 1), 6);
        assert!(geo.coeffs().iter().all(|c| *c == rat(1, 1)));
        let s = TruncSeries::binomial_series(&rat(2, 1), &rat(1, 1), 3);
        assert_eq!(s.coeffs(), ints(&[1, 2, 3, 4]).as_slice());
        // r/λ = 4 with λ = 1/2
        let s = TruncSeries::binomial_series(&rat(4, 1), &rat(1, 2), 2);
        assert_eq!(s.coeffs(), &[rat(1, 1), rat(2, 1), rat(5, 2)]);
    }

    #[test]
    fn exp_examples() {
        assert_eq!(TruncSeries::zero(5).exp().unwrap(), TruncSeries::one(5));
        let e = TruncSeries::t(3).exp().unwrap();
        assert_eq!(e.coeffs(), &[rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 6)]);
        assert_eq!(TruncSeries::one(3).exp(), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn pow_example() {
        // (t/(1-t))^2 = t^2 + 2t^3 + 3t^4 + ...
        let geo = TruncSeries::binomial_series(&rat(1, 1), &rat(1, 1), 4);
        let base = &TruncSeries::t(4) * &geo;
        assert_eq!(base.pow_int(2).coeffs(), ints(&[0, 0, 1, 2, 3]).as_slice());
    }

    #[test]
    fn bi_series_exp_matches_univariate() {
        // exp(x + y) = Σ x^i y^j / (i! j!)
        let u =
            &BiSeries::monomial(rat(1, 1), 1, 0, 4, 3) + &BiSeries::monomial(rat(1, 1), 0, 1, 4, 3);
        let e = u.exp().unwrap();
        for i in 0..=4 {
            for j in 0..=3 {
                assert_eq!(
                    e.coeff(i, j),
                    ExactRat::new(1.into(), factorial(i) * factorial(j))
                );
            }
        }
    }

    fn zero_constant_series() -> impl Strategy<Value = TruncSeries> {
        prop::collection::vec((-6i64..6, 1i64..5), 1..8).prop_map(|v| {
            let mut coeffs = vec![rat(0, 1)];
            coeffs.extend(v.iter().map(|&(p, q)| rat(p, q)));
            TruncSeries::from_coeffs(coeffs, 7)
        })
    }

    fn small_rat() -> impl Strategy<Value = ExactRat> {
        (-8i64..8, 1i64..5).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #[test]
        fn exp_of_negation_is_inverse(a in zero_constant_series()) {
            let prod = &a.exp().unwrap() * &(-&a).exp().unwrap();
            prop_assert_eq!(prod, TruncSeries::one(7));
        }

        #[test]
        fn exponent_additivity(e1 in small_rat(), e2 in small_rat(), s in small_rat()) {
            let lhs = &TruncSeries::binomial_series(&e1, &s, 8) * &TruncSeries::binomial_series(&e2, &s, 8);
            prop_assert_eq!(lhs, TruncSeries::binomial_series(&(&e1 + &e2), &s, 8));
        }
    }
}
