//! Lah-Bell, r-Lah-Bell and λ-analogue r-Lah-Bell polynomials.

use super::{BiPoly, LambdaPoly, XPoly};
use crate::exact::{factorial, rat_int, ExactRat};
use crate::tables::{ClosedForm, LahSource};

/// `LB_n(x) = Σ_k L(n,k) x^k`
pub fn lah_bell_poly(n: usize) -> XPoly {
    r_lah_bell_poly(n, 0)
}

/// `LB_n^{(r)}(x) = Σ_k L^r(n,k) x^k`
pub fn r_lah_bell_poly(n: usize, r: usize) -> XPoly {
    r_lah_bell_poly_from(&ClosedForm, n, r)
}

pub fn r_lah_bell_poly_from(src: &dyn LahSource, n: usize, r: usize) -> XPoly {
    XPoly::from_coeffs((0..=n).map(|k| rat_int(src.r_lah(n, k, r))).collect())
}

/// `L^r_λ(n,k) = (n!/k!)·(r + λ(n-1))_{n-k,λ} / (n-k)!` as an element of ℚ[λ].
///
/// The degenerate falling factorial of `r + λ(n-1)` with step λ has the
/// factors `r + λ(n-1-i)` for `i < n-k`.
pub fn lambda_r_lah(n: usize, k: usize, r: usize) -> LambdaPoly {
    if k > n {
        return LambdaPoly::zero();
    }
    let j = n - k;
    let product = (0..j).fold(LambdaPoly::one(), |acc, i| {
        let step = n as i64 - 1 - i as i64;
        acc * LambdaPoly::from_ints(&[r as i64, step])
    });
    let scale = ExactRat::new(factorial(n), factorial(k) * factorial(j));
    product.scale(&scale)
}

pub fn lambda_r_lah_row(n: usize, r: usize) -> Vec<LambdaPoly> {
    (0..=n).map(|k| lambda_r_lah(n, k, r)).collect()
}

/// `LB_{n,λ}^{(r)}(x) = Σ_k L^r_λ(n,k) x^k`
pub fn lambda_r_lah_bell_poly(n: usize, r: usize) -> BiPoly {
    lambda_r_lah_bell_poly_from(&ClosedForm, n, r)
}

pub fn lambda_r_lah_bell_poly_from(src: &dyn LahSource, n: usize, r: usize) -> BiPoly {
    BiPoly::from_coeffs((0..=n).map(|k| src.lambda_r_lah(n, k, r)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::tables::{lah, r_lah};
    use num_traits::Zero;

    #[test]
    fn lah_bell_examples() {
        assert_eq!(lah_bell_poly(0), XPoly::one());
        assert_eq!(lah_bell_poly(2).to_string(), "2*x + x^2");
        assert_eq!(lah_bell_poly(3).eval(&rat(1, 1)), rat(13, 1));
    }

    #[test]
    fn lah_bell_shape() {
        for n in 0..=20 {
            let p = lah_bell_poly(n);
            assert_eq!(p.degree(), Some(n));
            assert_eq!(p.leading(), Some(&rat(1, 1)));
            assert!(p
                .coeffs()
                .iter()
                .all(|c| c.is_integer() && *c >= ExactRat::zero()));
            let row_sum: num_bigint::BigInt = (0..=n).map(|k| lah(n, k)).sum();
            assert_eq!(p.eval(&rat(1, 1)), rat_int(row_sum));
        }
    }

    #[test]
    fn r_lah_bell_examples() {
        for n in 0..8 {
            assert_eq!(r_lah_bell_poly(n, 0), lah_bell_poly(n));
        }
        assert_eq!(r_lah_bell_poly(1, 1).to_string(), "1 + x");
        assert_eq!(r_lah_bell_poly(2, 1).to_string(), "2 + 4*x + x^2");
        for n in 0..=15 {
            for r in 0..=4 {
                let row_sum: num_bigint::BigInt = (0..=n).map(|k| r_lah(n, k, r)).sum();
                assert_eq!(r_lah_bell_poly(n, r).eval(&rat(1, 1)), rat_int(row_sum));
            }
        }
    }

    #[test]
    fn lambda_r_lah_examples() {
        for n in 0..6 {
            for r in 0..3 {
                assert_eq!(lambda_r_lah(n, n, r), LambdaPoly::one());
            }
        }
        assert_eq!(lambda_r_lah(2, 1, 0), LambdaPoly::from_ints(&[0, 2]));
        assert_eq!(lambda_r_lah(2, 1, 1), LambdaPoly::from_ints(&[2, 2]));
        assert_eq!(lambda_r_lah(2, 1, 0).to_string(), "2*l");
        assert!(lambda_r_lah(2, 3, 1).is_zero());
    }

    #[test]
    fn lambda_r_lah_at_one_is_r_lah() {
        for n in 0..=15 {
            for k in 0..=n {
                for r in 0..=4 {
                    assert_eq!(
                        lambda_r_lah(n, k, r).eval(&rat(1, 1)),
                        rat_int(r_lah(n, k, r))
                    );
                }
            }
        }
    }

    #[test]
    fn lambda_r_lah_bell_examples() {
        for r in 0..4 {
            assert_eq!(lambda_r_lah_bell_poly(0, r), BiPoly::one());
        }
        assert_eq!(lambda_r_lah_bell_poly(1, 1).to_string(), "1 + x");
        assert_eq!(
            lambda_r_lah_bell_poly(2, 0).eval_lambda(&rat(1, 1)),
            lah_bell_poly(2)
        );
        for n in 0..8 {
            for r in 0..4 {
                assert_eq!(
                    lambda_r_lah_bell_poly(n, r).eval_lambda(&rat(1, 1)),
                    r_lah_bell_poly(n, r)
                );
            }
        }
    }
}
