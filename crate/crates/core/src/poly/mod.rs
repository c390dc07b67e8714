//! Dense univariate polynomials over an exact coefficient ring.
//!
//! The variable is carried at the type level (`X`, `Y`, `Lambda`), so a
//! polynomial in λ cannot be added to one in x by accident. Nesting gives
//! the bivariate case: [`BiPoly`] is a polynomial in x whose coefficients
//! are polynomials in λ.

mod basis;
mod families;
mod identities;

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::{format_rational, ExactRat};

pub use basis::{
    degenerate_falling_basis_coeffs, expand_in_monic_basis, falling_basis_coeffs,
    from_degenerate_falling_basis, from_falling_basis,
};
pub use families::{
    lah_bell_poly, lambda_r_lah, lambda_r_lah_bell_poly, lambda_r_lah_bell_poly_from,
    lambda_r_lah_row, r_lah_bell_poly, r_lah_bell_poly_from,
};
pub use identities::{
    defining_relation_check, defining_relation_check_with, spivey_lambda_check,
    spivey_lambda_check_with, spivey_r_check, spivey_r_check_with, spivey_rhs, spivey_rhs_lambda,
    vandermonde_check, DefiningVariant,
};

pub trait Variable:
    Copy + Clone + Default + fmt::Debug + PartialEq + Eq + Send + Sync + 'static
{
    const SYMBOL: &'static str;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct X;
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Y;
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Lambda;

impl Variable for X {
    const SYMBOL: &'static str = "x";
}
impl Variable for Y {
    const SYMBOL: &'static str = "y";
}
impl Variable for Lambda {
    const SYMBOL: &'static str = "l";
}

/// Exact commutative ring usable as polynomial coefficients.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Embeds a rational scalar.
    fn from_rat(v: ExactRat) -> Self;
    fn render(&self) -> String;
    /// True when `render` produces a single term, i.e. needs no parentheses
    /// as a factor.
    fn is_atomic(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Coeff for ExactRat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rat(v: ExactRat) -> Self {
        v
    }
    fn render(&self) -> String {
        format_rational(self)
    }
    fn is_atomic(&self) -> bool {
        true
    }
}

/// Dense polynomial; `coeffs[d]` is the coefficient of `var^d`. The zero
/// polynomial is the empty list and no trailing coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C, V> {
    coeffs: Vec<C>,
    var: PhantomData<V>,
}

pub type XPoly = Poly<ExactRat, X>;
pub type LambdaPoly = Poly<ExactRat, Lambda>;
pub type BiPoly = Poly<LambdaPoly, X>;

impl<C: Coeff, V: Variable> Poly<C, V> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Coeff::is_zero) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            var: PhantomData,
        }
    }

    pub fn zero() -> Self {
        Self::from_coeffs(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·var^degree`
    pub fn monomial(c: C, degree: usize) -> Self {
        let mut coeffs = vec![C::zero(); degree];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> C {
        self.coeffs.get(degree).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplies by `var^k`.
    pub fn shift_degree(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs)
    }

    pub fn eval(&self, at: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.mul_ref(at).add_ref(c))
    }

    /// `self(q(var))`
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * q) + &Self::constant(c.clone())
        })
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn map_coeffs<D: Coeff, W: Variable>(&self, f: impl Fn(&C) -> D) -> Poly<D, W> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Self>) -> Self
    where
        Self: 'a,
    {
        items.into_iter().fold(Self::zero(), |acc, p| &acc + p)
    }
}

impl<V: Variable> Poly<ExactRat, V> {
    pub fn from_ints(values: &[i64]) -> Self {
        Self::from_coeffs(
            values
                .iter()
                .map(|&v| ExactRat::from_integer(v.into()))
                .collect(),
        )
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl BiPoly {
    /// Substitutes a value for λ, leaving a polynomial in x.
    pub fn eval_lambda(&self, lambda: &ExactRat) -> XPoly {
        self.map_coeffs(|c| c.eval(lambda))
    }

    /// Substitutes a value for x, leaving a polynomial in λ.
    pub fn eval_x(&self, x: &ExactRat) -> LambdaPoly {
        self.eval(&LambdaPoly::constant(x.clone()))
    }

    pub fn eval_both(&self, x: &ExactRat, lambda: &ExactRat) -> ExactRat {
        self.eval_lambda(lambda).eval(x)
    }

    /// Lifts a polynomial in x with constant (λ-free) coefficients.
    pub fn from_x_poly(p: &XPoly) -> Self {
        p.map_coeffs(|c| LambdaPoly::constant(c.clone()))
    }
}

impl<C: Coeff, V: Variable> Coeff for Poly<C, V> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rat(v: ExactRat) -> Self {
        Poly::constant(C::from_rat(v))
    }
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_atomic(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() <= 1
            && self.coeffs.iter().all(|c| c.is_zero() || c.is_atomic())
    }
}

impl<'a, C: Coeff, V: Variable> Add<&'a Poly<C, V>> for &'a Poly<C, V> {
    type Output = Poly<C, V>;

    fn add(self, rhs: &'a Poly<C, V>) -> Poly<C, V> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.add_ref(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => C::zero(),
                })
                .collect(),
        )
    }
}

impl<'a, C: Coeff, V: Variable> Sub<&'a Poly<C, V>> for &'a Poly<C, V> {
    type Output = Poly<C, V>;

    fn sub(self, rhs: &'a Poly<C, V>) -> Poly<C, V> {
        self + &(-rhs)
    }
}

impl<'a, C: Coeff, V: Variable> Mul<&'a Poly<C, V>> for &'a Poly<C, V> {
    type Output = Poly<C, V>;

    fn mul(self, rhs: &'a Poly<C, V>) -> Poly<C, V> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<C: Coeff, V: Variable> Neg for &Poly<C, V> {
    type Output = Poly<C, V>;

    fn neg(self) -> Poly<C, V> {
        Poly::from_coeffs(self.coeffs.iter().map(Coeff::neg_ref).collect())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<C: Coeff, V: Variable> $trait for Poly<C, V> {
            type Output = Poly<C, V>;

            fn $method(self, rhs: Poly<C, V>) -> Poly<C, V> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<C: Coeff, V: Variable> Neg for Poly<C, V> {
    type Output = Poly<C, V>;

    fn neg(self) -> Poly<C, V> {
        -&self
    }
}

/// Ascending degree, explicit `*`, e.g. `2*x + x^2` or `1 + (2 + 2*l)*x`.
impl<C: Coeff, V: Variable> fmt::Display for Poly<C, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = match d {
                0 => String::new(),
                1 => V::SYMBOL.to_string(),
                _ => format!("{}^{}", V::SYMBOL, d),
            };
            let term = if d == 0 {
                c.render()
            } else if c.is_one() {
                power
            } else if *c == C::one().neg_ref() {
                format!("-{power}")
            } else if c.is_atomic() {
                format!("{}*{power}", c.render())
            } else {
                format!("({})*{power}", c.render())
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(t);
                }
            }
        }
        f.write_str(&out)
    }
}

impl<C: Coeff, V: Variable> fmt::Debug for Poly<C, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
