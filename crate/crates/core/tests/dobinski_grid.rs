use lahbell::dobinski::{dobinski_eval, dobinski_eval_with_precision, DEFAULT_PRECISION_BITS};
use lahbell::exact::{parse_rational, rat, rat_int, ExactRat};
use num_bigint::BigInt;
use num_traits::One;

fn grid() -> Vec<(usize, usize, ExactRat, Option<ExactRat>)> {
    let lambdas = [None, Some(rat(1, 1)), Some(rat(1, 2)), Some(rat(2, 1))];
    let mut points = Vec::new();
    for n in 0..=10 {
        for r in 0..=3 {
            for x in [rat(1, 2), rat(1, 1), rat(2, 1)] {
                for lambda in &lambdas {
                    points.push((n, r, x.clone(), lambda.clone()));
                }
            }
        }
    }
    points
}

#[test]
fn truncation_respects_reported_bounds() {
    let eps = parse_rational("1e-20").unwrap();
    let allowance = ExactRat::new(BigInt::one(), BigInt::one() << (DEFAULT_PRECISION_BITS / 2));
    for (n, r, x, lambda) in grid() {
        let res = dobinski_eval(n, r, &x, lambda.as_ref(), &eps).unwrap();
        let err = res.error();
        let tail = res.tail_bound.to_rational();
        assert!(
            err >= ExactRat::from_integer(0.into()),
            "approx overshoots at n={n} r={r} x={x}"
        );
        assert!(
            err <= &tail + &allowance,
            "n={n} r={r} x={x} lambda={lambda:?}"
        );
        assert!(
            tail < eps,
            "tail too large at n={n} r={r} x={x} lambda={lambda:?}"
        );
        let size = x.clone() + rat_int(n + r + 10);
        assert!(rat_int(res.terms_used) <= size * rat_int(50));
    }
}

#[test]
fn doubling_precision_never_hurts() {
    let eps = parse_rational("1e-20").unwrap();
    for (n, r, x, lambda) in grid() {
        let coarse = dobinski_eval_with_precision(n, r, &x, lambda.as_ref(), &eps, 128).unwrap();
        let fine = dobinski_eval_with_precision(n, r, &x, lambda.as_ref(), &eps, 256).unwrap();
        assert!(
            fine.error() <= coarse.error(),
            "n={n} r={r} x={x} lambda={lambda:?}"
        );
    }
}

#[test]
fn lambda_one_agrees_with_classic() {
    let eps = parse_rational("1e-25").unwrap();
    for n in 0..=6 {
        for r in 0..=3 {
            let x = rat(3, 2);
            let classic = dobinski_eval(n, r, &x, None, &eps).unwrap();
            let lambda = dobinski_eval(n, r, &x, Some(&rat(1, 1)), &eps).unwrap();
            assert_eq!(classic.exact_reference, lambda.exact_reference);
            assert_eq!(classic.approx, lambda.approx);
        }
    }
}
