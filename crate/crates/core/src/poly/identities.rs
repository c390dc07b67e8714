//! Polynomial identities: defining relations of the Lah-type numbers, the
//! Spivey-type recurrences, and the rising-factorial Vandermonde identities.

use super::{
    degenerate_falling_basis_coeffs, falling_basis_coeffs, lambda_r_lah_bell_poly_from,
    r_lah_bell_poly_from, BiPoly, Coeff, LambdaPoly, Poly, XPoly, X, Y,
};
use crate::exact::{
    binomial_int, degenerate_factorial_poly, factorial, factorial_poly, rat_int, rising_int,
    Direction, ExactRat,
};
use crate::report::Report;
use crate::tables::{ClosedForm, LahSource};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DefiningVariant {
    /// `⟨x⟩_n = Σ L(n,k)(x)_k`; the shift is ignored.
    Classic,
    /// `⟨x+r⟩_n = Σ L^r(n,k)(x)_k`
    RShift,
    /// `⟨x+r⟩_{n,λ} = Σ L^r_λ(n,k)(x)_{k,λ}` with λ formal.
    Lambda,
}

impl DefiningVariant {
    pub fn name(self) -> &'static str {
        match self {
            DefiningVariant::Classic => "classic",
            DefiningVariant::RShift => "r_shift",
            DefiningVariant::Lambda => "lambda",
        }
    }
}

pub fn defining_relation_check(n: usize, r: usize, variant: DefiningVariant) -> Report {
    defining_relation_check_with(&ClosedForm, n, r, variant)
}

/// Expands the shifted rising factorial, converts it to the (degenerate)
/// falling basis and compares each coefficient with `src`.
pub fn defining_relation_check_with(
    src: &dyn LahSource,
    n: usize,
    r: usize,
    variant: DefiningVariant,
) -> Report {
    let r = if variant == DefiningVariant::Classic {
        0
    } else {
        r
    };
    let mut report = Report::new(format!("defining-{}", variant.name()))
        .param("n", n)
        .param("r", r);
    match variant {
        DefiningVariant::Classic | DefiningVariant::RShift => {
            let shift = XPoly::from_coeffs(vec![rat_int(r), ExactRat::from_integer(1.into())]);
            let lhs = factorial_poly(n, Direction::Rising).compose(&shift);
            let coeffs = falling_basis_coeffs(&lhs);
            for k in 0..=n {
                let got = coeffs
                    .get(k)
                    .cloned()
                    .unwrap_or_else(<ExactRat as Coeff>::zero);
                let want = rat_int(src.r_lah(n, k, r));
                report.check(|| format!("n={n}, k={k}, r={r}"), &want, &got);
            }
        }
        DefiningVariant::Lambda => {
            let shift =
                BiPoly::from_coeffs(vec![LambdaPoly::constant(rat_int(r)), LambdaPoly::one()]);
            let lhs = degenerate_factorial_poly(n, Direction::Rising).compose(&shift);
            let coeffs = degenerate_falling_basis_coeffs(&lhs);
            for k in 0..=n {
                let got = coeffs.get(k).cloned().unwrap_or_else(LambdaPoly::zero);
                let want = src.lambda_r_lah(n, k, r);
                report.check(|| format!("n={n}, k={k}, r={r}"), &want, &got);
            }
        }
    }
    report
}

/// `Σ_{k≤m} Σ_{l≤n} C(n,l) L^r(m,k) ⟨m+k⟩_{n-l} x^k LB_l^{(r)}(x)`
pub fn spivey_rhs(n: usize, m: usize, r: usize) -> XPoly {
    spivey_rhs_from(&ClosedForm, n, m, r)
}

fn spivey_rhs_from(src: &dyn LahSource, n: usize, m: usize, r: usize) -> XPoly {
    let lower: Vec<XPoly> = (0..=n).map(|l| r_lah_bell_poly_from(src, l, r)).collect();
    let mut acc = XPoly::zero();
    for k in 0..=m {
        let lah_mk = src.r_lah(m, k, r);
        if lah_mk == 0.into() {
            continue;
        }
        let inner = (0..=n).fold(XPoly::zero(), |inner, l| {
            let w = binomial_int(n as u64, l as u64) * rising_int((m + k) as u64, n - l);
            &inner + &lower[l].scale(&rat_int(w))
        });
        acc = &acc + &inner.shift_degree(k).scale(&rat_int(lah_mk));
    }
    acc
}

/// Compares [`spivey_rhs`] with `LB_{n+m}^{(r)}(x)`, and the `x = 1`
/// corollary on the numbers.
pub fn spivey_r_check(n: usize, m: usize, r: usize) -> Report {
    spivey_r_check_with(&ClosedForm, n, m, r)
}

pub fn spivey_r_check_with(src: &dyn LahSource, n: usize, m: usize, r: usize) -> Report {
    let mut report = Report::new("spivey-r")
        .param("n", n)
        .param("m", m)
        .param("r", r);
    let lhs = r_lah_bell_poly_from(src, n + m, r);
    let rhs = spivey_rhs_from(src, n, m, r);
    let at = || format!("n={n}, m={m}, r={r}");
    report.check(at, &lhs, &rhs);
    let one = ExactRat::from_integer(1.into());
    report.check(
        || format!("n={n}, m={m}, r={r}, x=1"),
        &lhs.eval(&one),
        &rhs.eval(&one),
    );
    report
}

/// `Σ_{j≤m} Σ_{k≤n} C(n,k) L^r_λ(m,j) ⟨m+j⟩_{n-k} t^j λ^{n-k} LB_{k,λ}^{(r)}(t)`,
/// with t and λ formal. `⟨m+j⟩_{n-k}` is the ordinary rising factorial.
pub fn spivey_rhs_lambda(n: usize, m: usize, r: usize) -> BiPoly {
    spivey_rhs_lambda_from(&ClosedForm, n, m, r)
}

fn spivey_rhs_lambda_from(src: &dyn LahSource, n: usize, m: usize, r: usize) -> BiPoly {
    let lower: Vec<BiPoly> = (0..=n)
        .map(|k| lambda_r_lah_bell_poly_from(src, k, r))
        .collect();
    let mut acc = BiPoly::zero();
    for j in 0..=m {
        let lah_mj = src.lambda_r_lah(m, j, r);
        if lah_mj.is_zero() {
            continue;
        }
        let inner = (0..=n).fold(BiPoly::zero(), |inner, k| {
            let w = binomial_int(n as u64, k as u64) * rising_int((m + j) as u64, n - k);
            let weight = LambdaPoly::monomial(rat_int(w), n - k);
            &inner + &lower[k].scale(&weight)
        });
        acc = &acc + &inner.shift_degree(j).scale(&lah_mj);
    }
    acc
}

pub fn spivey_lambda_check(n: usize, m: usize, r: usize) -> Report {
    spivey_lambda_check_with(&ClosedForm, n, m, r)
}

/// Exact bivariate comparison of [`spivey_rhs_lambda`] with
/// `LB_{n+m,λ}^{(r)}(t)`, plus the `t = 1` corollary as a polynomial in λ.
pub fn spivey_lambda_check_with(src: &dyn LahSource, n: usize, m: usize, r: usize) -> Report {
    let mut report = Report::new("spivey-lambda")
        .param("n", n)
        .param("m", m)
        .param("r", r);
    let lhs = lambda_r_lah_bell_poly_from(src, n + m, r);
    let rhs = spivey_rhs_lambda_from(src, n, m, r);
    report.check(|| format!("n={n}, m={m}, r={r}"), &lhs, &rhs);
    let one = ExactRat::from_integer(1.into());
    report.check(
        || format!("n={n}, m={m}, r={r}, t=1"),
        &lhs.eval_x(&one),
        &rhs.eval_x(&one),
    );
    report
}

type XYPoly = Poly<Poly<ExactRat, Y>, X>;

/// `⟨x+y⟩_n = Σ C(n,k)⟨x⟩_k⟨y⟩_{n-k}` and
/// `C(x+y+n-1, n) = Σ C(x+k-1, k) C(y+n-k-1, n-k)` in ℚ[x, y].
pub fn vandermonde_check(n: usize) -> Report {
    let mut report = Report::new("vandermonde").param("n", n);

    let rising_x = |k: usize| -> XYPoly {
        factorial_poly(k, Direction::Rising).map_coeffs(|c| Poly::constant(c.clone()))
    };
    let rising_y = |k: usize| -> XYPoly {
        XYPoly::constant(factorial_poly(k, Direction::Rising).map_coeffs(|c| c.clone()))
    };
    let x_plus_y = XYPoly::from_coeffs(vec![Poly::var(), Poly::one()]);

    let lhs = rising_x(n).compose(&x_plus_y);
    let rhs = (0..=n).fold(XYPoly::zero(), |acc, k| {
        let c = Poly::constant(rat_int(binomial_int(n as u64, k as u64)));
        &acc + &(&rising_x(k) * &rising_y(n - k)).scale(&c)
    });
    report.check(|| format!("rising n={n}"), &lhs, &rhs);

    // C(z+k-1, k) = ⟨z⟩_k / k!
    let inv_fact = |k: usize| Poly::constant(ExactRat::new(1.into(), factorial(k)));
    let lhs = (0..n).fold(XYPoly::one(), |acc, i| {
        let shift = Poly::constant(rat_int(n as i64 - 1 - i as i64));
        &acc * &(&x_plus_y + &XYPoly::constant(shift))
    });
    let lhs = lhs.scale(&inv_fact(n));
    let rhs = (0..=n).fold(XYPoly::zero(), |acc, k| {
        let term = &rising_x(k).scale(&inv_fact(k)) * &rising_y(n - k).scale(&inv_fact(n - k));
        &acc + &term
    });
    report.check(|| format!("binomial n={n}"), &lhs, &rhs);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::poly::{lah_bell_poly, lambda_r_lah_bell_poly, r_lah_bell_poly};

    #[test]
    fn defining_examples() {
        for v in [
            DefiningVariant::Classic,
            DefiningVariant::RShift,
            DefiningVariant::Lambda,
        ] {
            assert!(defining_relation_check(0, 3, v).passed());
        }
        let lhs = factorial_poly(2, Direction::Rising);
        assert_eq!(
            falling_basis_coeffs(&lhs),
            vec![rat(0, 1), rat(2, 1), rat(1, 1)]
        );
        // ⟨x+1⟩_{2,λ} = (x+1)(x+1+λ)
        let shifted = BiPoly::from_coeffs(vec![
            LambdaPoly::from_ints(&[1, 1]),
            LambdaPoly::from_ints(&[2, 1]),
            LambdaPoly::one(),
        ]);
        let coeffs = degenerate_falling_basis_coeffs(&shifted);
        assert_eq!(coeffs[1], LambdaPoly::from_ints(&[2, 2]));
        assert_eq!(coeffs[2], LambdaPoly::one());
        assert_eq!(coeffs[0], LambdaPoly::from_ints(&[1, 1]));
        assert!(defining_relation_check(2, 1, DefiningVariant::Lambda).passed());
    }

    #[test]
    fn spivey_examples() {
        for n in 0..5 {
            for r in 0..3 {
                assert_eq!(spivey_rhs(n, 0, r), r_lah_bell_poly(n, r));
            }
        }
        assert_eq!(spivey_rhs(1, 1, 0), lah_bell_poly(2));
        assert_eq!(spivey_rhs(1, 1, 0).to_string(), "2*x + x^2");
        assert_eq!(spivey_rhs(2, 1, 1), r_lah_bell_poly(3, 1));
    }

    #[test]
    fn spivey_lambda_examples() {
        let one = rat(1, 1);
        for (n, m, r) in [(1, 1, 0), (2, 1, 1), (3, 2, 2)] {
            assert_eq!(
                spivey_rhs_lambda(n, m, r).eval_lambda(&one),
                spivey_rhs(n, m, r)
            );
        }
        assert_eq!(spivey_rhs_lambda(1, 1, 0), lambda_r_lah_bell_poly(2, 0));
        assert_eq!(spivey_rhs_lambda(2, 2, 1), lambda_r_lah_bell_poly(4, 1));
    }

    #[test]
    fn vandermonde_small() {
        for n in 0..=6 {
            let report = vandermonde_check(n);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn vandermonde_two_by_hand() {
        // x^2 + 2xy + y^2 + x + y
        let x_plus_y = XYPoly::from_coeffs(vec![Poly::var(), Poly::one()]);
        let lhs = factorial_poly(2, Direction::Rising)
            .map_coeffs::<Poly<ExactRat, Y>, X>(|c| Poly::constant(c.clone()))
            .compose(&x_plus_y);
        let expected = XYPoly::from_coeffs(vec![
            Poly::from_ints(&[0, 1, 1]),
            Poly::from_ints(&[1, 2]),
            Poly::one(),
        ]);
        assert_eq!(lhs, expected);
    }
}
