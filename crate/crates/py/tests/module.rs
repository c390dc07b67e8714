use pyo3::prelude::*;
use pyo3::types::{PyDict, PyModule};

fn with_module(code: &std::ffi::CStr) {
    Python::attach(|py| {
        let m = PyModule::new(py, "lahbell").unwrap();
        lahbell_py::lahbell_module(&m).unwrap();
        let globals = PyDict::new(py);
        globals.set_item("lb", m).unwrap();
        if let Err(e) = py.run(code, Some(&globals), None) {
            e.display(py);
            panic!("python assertion failed");
        }
    });
}

#[test]
fn numbers() {
    with_module(
        c"assert lb.lah(3, 2) == 6
assert lb.r_lah(2, 1, 1) == 4
assert lb.stirling2(4, 2) == 7
assert lb.bell(10) == 115975
assert lb.lah(60, 1) > 2**64",
    );
}

#[test]
fn polynomials() {
    with_module(
        c"from fractions import Fraction
p = lb.lah_bell_poly(2)
assert str(p) == '2*x + x^2' and p.variable == 'x' and p.degree == 2
assert p(1) == 3 and p('1/2') == Fraction(5, 4)
assert lb.r_lah_bell_poly(2, 1)(1) == 7
q = lb.lambda_r_lah_bell_poly(2, 0)
assert q(1, 1) == 3
assert q.at_lambda(1) == p
assert str(lb.lambda_r_lah(2, 1, 0)) == '2*l'",
    );
}

#[test]
fn weyl_operators() {
    with_module(
        c"W = lb.WeylOp
assert str(W.d() * W.x()) == 'X*D + 1'
assert W.rising(0, 3).apply_to_exp() == lb.lah_bell_poly(3)
assert W.rising(0, 2).terms() == {(1, 1): 2, (2, 2): 1}
x2 = lb.lah_bell_poly(2)
assert str(W.euler().apply(x2)) == '2*x + 2*x^2'
assert str(W.d().apply(x2)) == '2 + 2*x'",
    );
}

#[test]
fn checks_and_oracle() {
    with_module(
        c"r = lb.spivey_r_check(2, 3, 1)
assert r.passed and r.checks > 0 and not r.failures
assert lb.spivey_lambda_check(2, 2, 1)
assert lb.defining_relation_check(5, 2, 'lambda')
assert lb.operator_spivey_check(2, 2, 1)
assert lb.distribution_by_block_count(4) == {1: 24, 2: 36, 3: 12, 4: 1}
assert lb.count_ordered_partitions(5, 2) == lb.lah(5, 2)
for name, ok, reports in lb.verify('spivey', quick=True):
    assert name == 'spivey' and ok and reports
try:
    lb.count_ordered_partitions(12, 2)
    raise AssertionError('cap not enforced')
except ValueError:
    pass",
    );
}

#[test]
fn dobinski() {
    with_module(
        c"from fractions import Fraction
res = lb.dobinski_eval(2, 1, eps='1e-25')
assert res.exact == 3
assert 0 <= res.error <= res.tail_bound + res.rounding_bound
assert res.tail_bound < Fraction(1, 10**25)
assert res.approx.startswith('2.99999999999999999999')
lam = lb.dobinski_eval(2, 1, r=1, lam=Fraction(1, 2))
assert lam.exact == lb.lambda_r_lah_bell_poly(2, 1)(1, Fraction(1, 2))
try:
    lb.dobinski_eval(2, 1, lam=0)
    raise AssertionError('zero lambda accepted')
except ValueError:
    pass",
    );
}
