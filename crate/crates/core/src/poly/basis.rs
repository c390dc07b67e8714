//! Change of basis into (degenerate) falling factorials.

use super::{BiPoly, Coeff, LambdaPoly, Poly, Variable, XPoly};
use crate::exact::{degenerate_factorial_poly, factorial_poly, Direction, ExactRat};

/// Coefficients of `p` in a basis of monic polynomials `basis(k)` of
/// degree `k`, by back-substitution from the top degree down.
pub fn expand_in_monic_basis<C: Coeff, V: Variable>(
    p: &Poly<C, V>,
    basis: impl Fn(usize) -> Poly<C, V>,
) -> Vec<C> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let mut out = vec![C::zero(); deg + 1];
    let mut rest = p.clone();
    for k in (0..=deg).rev() {
        let c = rest.coeff(k);
        if c.is_zero() {
            continue;
        }
        let b = basis(k);
        debug_assert_eq!(b.degree(), Some(k));
        debug_assert!(b.leading().is_some_and(Coeff::is_one));
        rest = &rest - &b.scale(&c);
        out[k] = c;
    }
    debug_assert!(rest.is_zero());
    out
}

/// `c_k` with `p = Σ c_k (x)_k`.
pub fn falling_basis_coeffs(p: &XPoly) -> Vec<ExactRat> {
    expand_in_monic_basis(p, |k| factorial_poly(k, Direction::Falling))
}

/// `c_k ∈ ℚ[λ]` with `p = Σ c_k (x)_{k,λ}`.
pub fn degenerate_falling_basis_coeffs(p: &BiPoly) -> Vec<LambdaPoly> {
    expand_in_monic_basis(p, |k| degenerate_factorial_poly(k, Direction::Falling))
}

pub fn from_falling_basis(coeffs: &[ExactRat]) -> XPoly {
    coeffs
        .iter()
        .enumerate()
        .fold(XPoly::zero(), |acc, (k, c)| {
            &acc + &factorial_poly(k, Direction::Falling).scale(c)
        })
}

pub fn from_degenerate_falling_basis(coeffs: &[LambdaPoly]) -> BiPoly {
    coeffs
        .iter()
        .enumerate()
        .fold(BiPoly::zero(), |acc, (k, c)| {
            &acc + &degenerate_factorial_poly(k, Direction::Falling).scale(c)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<ExactRat> {
        v.iter().map(|&i| rat_int(i)).collect()
    }

    #[test]
    fn falling_examples() {
        assert_eq!(falling_basis_coeffs(&XPoly::one()), ints(&[1]));
        assert_eq!(
            falling_basis_coeffs(&XPoly::monomial(rat(1, 1), 2)),
            ints(&[0, 1, 1])
        );
        let rising2 = factorial_poly(2, Direction::Rising);
        assert_eq!(falling_basis_coeffs(&rising2), ints(&[0, 2, 1]));
        assert!(falling_basis_coeffs(&XPoly::zero()).is_empty());
    }

    #[test]
    fn degenerate_examples() {
        let x = BiPoly::var();
        assert_eq!(
            degenerate_falling_basis_coeffs(&x),
            vec![LambdaPoly::zero(), LambdaPoly::one()]
        );
        let rising2 = degenerate_factorial_poly(2, Direction::Rising);
        assert_eq!(
            degenerate_falling_basis_coeffs(&rising2),
            vec![
                LambdaPoly::zero(),
                LambdaPoly::from_ints(&[0, 2]),
                LambdaPoly::one()
            ]
        );
        let sq = BiPoly::monomial(LambdaPoly::one(), 2);
        assert_eq!(
            degenerate_falling_basis_coeffs(&sq),
            vec![LambdaPoly::zero(), LambdaPoly::var(), LambdaPoly::one()]
        );
    }

    fn int_poly() -> impl Strategy<Value = XPoly> {
        prop::collection::vec(-50i64..50, 0..=13).prop_map(|v| XPoly::from_ints(&v))
    }

    fn int_bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(prop::collection::vec(-9i64..9, 0..4), 0..=13).prop_map(|rows| {
            BiPoly::from_coeffs(rows.iter().map(|r| LambdaPoly::from_ints(r)).collect())
        })
    }

    proptest! {
        #[test]
        fn falling_round_trip(p in int_poly()) {
            prop_assert_eq!(from_falling_basis(&falling_basis_coeffs(&p)), p);
        }

        #[test]
        fn degenerate_round_trip(p in int_bipoly()) {
            prop_assert_eq!(from_degenerate_falling_basis(&degenerate_falling_basis_coeffs(&p)), p);
        }
    }
}
