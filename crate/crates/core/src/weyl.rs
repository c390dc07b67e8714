//! Normally ordered elements of the Weyl algebra generated by `X`
//! (multiplication by x) and `D` (d/dx) with `DX - XD = 1`.
//!
//! Every element is stored as `Σ c_{ij} X^i D^j` with all X's to the left.
//! Products use the reordering rule
//! `D^j X^i = Σ_s s!·C(i,s)·C(j,s)·X^{i-s} D^{j-s}`;
//! [`rewrite_normal_order`] is the independent route that only applies the
//! single-step rule `DX -> XD + 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial_int, factorial, rat_int, rising_int, ExactInt, ExactRat};
use crate::poly::XPoly;
use crate::report::Report;
use crate::tables::{ClosedForm, LahSource};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeylOp {
    terms: BTreeMap<(usize, usize), ExactRat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    X,
    D,
}

impl WeylOp {
    pub fn zero() -> Self {
        WeylOp::default()
    }

    pub fn identity() -> Self {
        Self::term(ExactRat::one(), 0, 0)
    }

    pub fn scalar(c: ExactRat) -> Self {
        Self::term(c, 0, 0)
    }

    /// `c·X^i D^j`
    pub fn term(c: ExactRat, i: usize, j: usize) -> Self {
        let mut op = WeylOp::zero();
        op.add_term(i, j, c);
        op
    }

    pub fn x() -> Self {
        Self::term(ExactRat::one(), 1, 0)
    }

    pub fn d() -> Self {
        Self::term(ExactRat::one(), 0, 1)
    }

    pub fn x_pow(i: usize) -> Self {
        Self::term(ExactRat::one(), i, 0)
    }

    pub fn d_pow(j: usize) -> Self {
        Self::term(ExactRat::one(), 0, j)
    }

    /// `XD`, the Euler operator.
    pub fn euler() -> Self {
        Self::term(ExactRat::one(), 1, 1)
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), ExactRat> {
        &self.terms
    }

    pub fn coeff(&self, i: usize, j: usize) -> ExactRat {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(ExactRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, i: usize, j: usize, c: ExactRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(ExactRat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn scale(&self, c: &ExactRat) -> Self {
        let mut out = WeylOp::zero();
        for (&(i, j), v) in &self.terms {
            out.add_term(i, j, v * c);
        }
        out
    }

    /// Canonical product `self · other`.
    pub fn normal_mul(&self, other: &WeylOp) -> WeylOp {
        let mut out = WeylOp::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &other.terms {
                let ab = a * b;
                // X^i (D^j X^k) D^l
                for s in 0..=j.min(k) {
                    let w = factorial(s)
                        * binomial_int(k as u64, s as u64)
                        * binomial_int(j as u64, s as u64);
                    out.add_term(i + k - s, j + l - s, &ab * rat_int(w));
                }
            }
        }
        out
    }

    /// Product computed by writing each pair of terms as a word and
    /// rewriting it with `DX -> XD + 1` only.
    pub fn naive_mul(&self, other: &WeylOp) -> WeylOp {
        let mut out = WeylOp::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &other.terms {
                let mut word = vec![Letter::X; i];
                word.extend(std::iter::repeat_n(Letter::D, j));
                word.extend(std::iter::repeat_n(Letter::X, k));
                word.extend(std::iter::repeat_n(Letter::D, l));
                out = &out + &rewrite_normal_order(&word).scale(&(a * b));
            }
        }
        out
    }

    /// Action on a polynomial: `X^i D^j x^m = (m)_j x^{m-j+i}`.
    pub fn apply_to_poly(&self, p: &XPoly) -> XPoly {
        let mut out = vec![ExactRat::zero(); p.coeffs().len() + self.max_x_power()];
        for (&(i, j), c) in &self.terms {
            for (m, pm) in p.coeffs().iter().enumerate() {
                if j > m || pm.is_zero() {
                    continue;
                }
                let falling = factorial(m) / factorial(m - j);
                out[m - j + i] += c * pm * rat_int(falling);
            }
        }
        XPoly::from_coeffs(out)
    }

    /// `q(x)` with `self(e^x) = q(x)·e^x`; since `D^j e^x = e^x`, `q = Σ c_{ij} x^i`.
    pub fn apply_to_exp(&self) -> XPoly {
        let mut out = vec![ExactRat::zero(); self.max_x_power() + 1];
        for (&(i, _), c) in &self.terms {
            out[i] += c;
        }
        XPoly::from_coeffs(out)
    }

    fn max_x_power(&self) -> usize {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }
}

/// Normal-orders a word in X and D using only `DX -> XD + 1`.
pub fn rewrite_normal_order(word: &[Letter]) -> WeylOp {
    let mut out = WeylOp::zero();
    let mut pending: Vec<(ExactRat, Vec<Letter>)> = vec![(ExactRat::one(), word.to_vec())];
    while let Some((c, w)) = pending.pop() {
        match w.windows(2).position(|p| p == [Letter::D, Letter::X]) {
            Some(pos) => {
                let mut swapped = w.clone();
                swapped.swap(pos, pos + 1);
                let mut contracted = w;
                contracted.drain(pos..pos + 2);
                pending.push((c.clone(), swapped));
                pending.push((c, contracted));
            }
            None => {
                let i = w.iter().filter(|&&l| l == Letter::X).count();
                out.add_term(i, w.len() - i, c);
            }
        }
    }
    out
}

/// `⟨XD + c⟩_n = (XD + c)(XD + c + 1)...(XD + c + n - 1)`, normal ordered.
pub fn op_rising(c: u64, n: usize) -> WeylOp {
    (0..n as u64).fold(WeylOp::identity(), |acc, i| {
        let factor = &WeylOp::euler() + &WeylOp::scalar(rat_int(c + i));
        acc.normal_mul(&factor)
    })
}

/// `⟨XD + r⟩_n = Σ_k L^r(n,k) X^k D^k`; `r = 0` is the plain Lah case.
pub fn expansion_check(n: usize, r: usize) -> Report {
    expansion_check_with(&ClosedForm, n, r)
}

pub fn expansion_check_with(src: &dyn LahSource, n: usize, r: usize) -> Report {
    let mut report = Report::new("weyl-expansion").param("n", n).param("r", r);
    let op = op_rising(r as u64, n);
    let expected = (0..=n).fold(WeylOp::zero(), |acc, k| {
        &acc + &WeylOp::term(rat_int(src.r_lah(n, k, r)), k, k)
    });
    report.check(|| format!("n={n}, r={r}"), &expected, &op);
    report
}

pub fn exp_action_check(n: usize, r: usize) -> Report {
    exp_action_check_with(&ClosedForm, n, r)
}

/// `e^{-x}⟨XD + r⟩_n e^x = LB_n^{(r)}(x)`
pub fn exp_action_check_with(src: &dyn LahSource, n: usize, r: usize) -> Report {
    let mut report = Report::new("weyl-exp-action").param("n", n).param("r", r);
    let got = op_rising(r as u64, n).apply_to_exp();
    let want = crate::poly::r_lah_bell_poly_from(src, n, r);
    report.check(|| format!("n={n}, r={r}"), &want, &got);
    report
}

/// Closed-form normal ordering of `D^j X^i` against rewriting with
/// `DX -> XD + 1` alone.
pub fn reordering_check(i: usize, j: usize) -> Report {
    let mut report = Report::new("weyl-reordering").param("i", i).param("j", j);
    let closed = WeylOp::d_pow(j).normal_mul(&WeylOp::x_pow(i));
    let word: Vec<Letter> = std::iter::repeat_n(Letter::D, j)
        .chain(std::iter::repeat_n(Letter::X, i))
        .collect();
    report.check(
        || format!("D^{j} X^{i}"),
        &rewrite_normal_order(&word),
        &closed,
    );
    report
}

/// `DX^k - X^kD = kX^{k-1}` and `(XD)X^k = X^k(XD + k)`.
pub fn commutator_check(k: usize) -> Report {
    let mut report = Report::new("weyl-commutator").param("k", k);
    let xk = WeylOp::x_pow(k);
    let d = WeylOp::d();
    let lhs = &d.normal_mul(&xk) + &xk.normal_mul(&d).scale(&-ExactRat::one());
    let rhs = if k == 0 {
        WeylOp::zero()
    } else {
        WeylOp::term(rat_int(k), k - 1, 0)
    };
    report.check(|| format!("DX^{k} - X^{k}D"), &rhs, &lhs);
    let lhs = WeylOp::euler().normal_mul(&xk);
    let rhs = xk.normal_mul(&(&WeylOp::euler() + &WeylOp::scalar(rat_int(k))));
    report.check(|| format!("(XD)X^{k}"), &rhs, &lhs);
    report
}

/// `⟨XD+r+m⟩_n X^k = X^k Σ_l C(n,l) ⟨XD+r⟩_l ⟨m+k⟩_{n-l}`, for `k >= 1`.
pub fn shift_identity_check(n: usize, m: usize, r: usize, k: usize) -> Result<Report> {
    if k == 0 {
        return Err(Error::ZeroShiftPower);
    }
    let mut report = Report::new("weyl-shift")
        .param("n", n)
        .param("m", m)
        .param("r", r)
        .param("k", k);
    let xk = WeylOp::x_pow(k);
    let lhs = op_rising((r + m) as u64, n).normal_mul(&xk);
    let sum = (0..=n).fold(WeylOp::zero(), |acc, l| {
        let w = binomial_int(n as u64, l as u64) * rising_int((m + k) as u64, n - l);
        &acc + &op_rising(r as u64, l).scale(&rat_int(w))
    });
    let rhs = xk.normal_mul(&sum);
    report.check(|| format!("n={n}, m={m}, r={r}, k={k}"), &rhs, &lhs);
    Ok(report)
}

pub fn operator_spivey_check(n: usize, m: usize, r: usize) -> Report {
    operator_spivey_check_with(&ClosedForm, n, m, r)
}

/// `⟨XD+r⟩_{n+m} = Σ_k Σ_l C(n,l) L^r(m,k) ⟨m+k⟩_{n-l} X^k ⟨XD+r⟩_l D^k`,
/// together with the factorization
/// `⟨XD+r⟩_{n+m} = ⟨XD+r⟩_m ⟨XD+r+m⟩_n = ⟨XD+r+m⟩_n ⟨XD+r⟩_m`.
pub fn operator_spivey_check_with(src: &dyn LahSource, n: usize, m: usize, r: usize) -> Report {
    let mut report = Report::new("weyl-spivey")
        .param("n", n)
        .param("m", m)
        .param("r", r);
    let at = || format!("n={n}, m={m}, r={r}");
    let whole = op_rising(r as u64, n + m);
    let head = op_rising(r as u64, m);
    let tail = op_rising((r + m) as u64, n);
    report.check(at, &whole, &head.normal_mul(&tail));
    report.check(at, &whole, &tail.normal_mul(&head));

    let mut rhs = WeylOp::zero();
    for k in 0..=m {
        let lah_mk = src.r_lah(m, k, r);
        if lah_mk.is_zero() {
            continue;
        }
        let xk = WeylOp::x_pow(k);
        let dk = WeylOp::d_pow(k);
        for l in 0..=n {
            let w: ExactInt =
                binomial_int(n as u64, l as u64) * &lah_mk * rising_int((m + k) as u64, n - l);
            let term = xk.normal_mul(&op_rising(r as u64, l)).normal_mul(&dk);
            rhs = &rhs + &term.scale(&rat_int(w));
        }
    }
    report.check(at, &whole, &rhs);
    report
}

impl Add for &WeylOp {
    type Output = WeylOp;

    fn add(self, rhs: &WeylOp) -> WeylOp {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Mul for &WeylOp {
    type Output = WeylOp;

    fn mul(self, rhs: &WeylOp) -> WeylOp {
        self.normal_mul(rhs)
    }
}

impl Add for WeylOp {
    type Output = WeylOp;

    fn add(self, rhs: WeylOp) -> WeylOp {
        &self + &rhs
    }
}

impl Mul for WeylOp {
    type Output = WeylOp;

    fn mul(self, rhs: WeylOp) -> WeylOp {
        self.normal_mul(&rhs)
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest total degree first, e.g. "X^2*D^2 + 2*X*D + 1".
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            match i {
                0 => {}
                1 => factors.push("X".to_string()),
                _ => factors.push(format!("X^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("D".to_string()),
                _ => factors.push(format!("D^{j}")),
            }
            let monomial = factors.join("*");
            let negative = *c < ExactRat::zero();
            let magnitude = if negative { -c } else { c.clone() };
            let body = if monomial.is_empty() {
                crate::exact::format_rational(&magnitude)
            } else if magnitude.is_one() {
                monomial
            } else {
                format!("{}*{monomial}", crate::exact::format_rational(&magnitude))
            };
            match (first, negative) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => f.write_str(&body)?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylOp({self})")
    }
}
