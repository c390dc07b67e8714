"""Smoke test for the compiled extension.

Builds the extension with cargo, copies it next to this script as
lahbell.so and exercises the main entry points:

    python3 python/smoke_test.py
"""

import pathlib
import shutil
import subprocess
import sys
from fractions import Fraction

HERE = pathlib.Path(__file__).resolve().parent
ROOT = HERE.parent


def build():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "lahbell-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "release" / "liblahbell_py.so"
    shutil.copy(built, HERE / "lahbell.so")
    sys.path.insert(0, str(HERE))


def main():
    build()
    import lahbell as lb

    assert [lb.lah(4, k) for k in range(5)] == [0, 24, 36, 12, 1]
    assert lb.r_lah(2, 1, 1) == 4
    assert str(lb.lah_bell_poly(2)) == "2*x + x^2"
    assert lb.r_lah_bell_poly(2, 1)(1) == 7
    assert lb.lambda_r_lah_bell_poly(2, 0)(1, 1) == 3
    assert str(lb.lambda_r_lah(2, 1, 0)) == "2*l"

    op = lb.WeylOp.rising(1, 3)
    assert op.apply_to_exp() == lb.r_lah_bell_poly(3, 1)

    assert lb.spivey_r_check(3, 3, 2).passed
    for name, ok, reports in lb.verify("all", quick=True):
        assert ok, name
        print(f"{name}: {len(reports)} reports passed")

    res = lb.dobinski_eval(3, Fraction(1, 2), r=1, lam="1/2")
    assert 0 <= res.error <= res.tail_bound + res.rounding_bound
    print(res)
    print("smoke test passed")


if __name__ == "__main__":
    main()
