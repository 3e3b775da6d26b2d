"""Smoke test for the zetacont extension module.

Build and install first, e.g.

    maturin build --release --auditwheel skip -m crates/python/Cargo.toml -o dist
    pip install dist/zetacont-*.whl

then run ``python python/smoke_test.py``.
"""

from fractions import Fraction

import mpmath

import zetacont

mpmath.mp.dps = 50


def close(value, expected, tol):
    got = mpmath.mpc(mpmath.mpf(value.re), mpmath.mpf(value.im))
    return abs(got - expected) < tol


def main():
    spec = zetacont.derive_identity(5)
    assert spec.p == 5 and spec.k0 == 6
    assert spec.pole_coefficient == "1/1"
    assert spec.extended_validity_re_gt == "-5/1"
    for k, r in spec.terms[:10]:
        assert Fraction(r) == Fraction((k - 2) * (k - 4) * (k - 5) * (k + 9), 720)
    assert zetacont.identities_equal(spec, zetacont.derive_identity(6))
    assert zetacont.identities_equal(spec, zetacont.reference_identity(5))
    assert zetacont.Identity.from_json(spec.to_json()) == spec

    assert zetacont.bernoulli(1) == "1/2"
    assert zetacont.faulhaber(2) == ["0/1", "1/6", "1/2", "1/3"]

    points = {"-3+2i": ("-3", "2"), "0.5+14.134725i": ("0.5", "14.134725"), "-4.5": ("-4.5", "0"), "2": ("2", "0")}
    for s, (re, im) in points.items():
        report = zetacont.eval_identity(spec, s)
        expected = mpmath.zeta(mpmath.mpc(mpmath.mpf(re), mpmath.mpf(im)))
        assert close(report.value, expected, 1e-35), (s, report)
        assert report.error_estimate < 1e-35
    assert abs(complex(zetacont.eval_identity(spec, 0.5 + 3j).value) - complex(mpmath.zeta(0.5 + 3j))) < 1e-12

    assert close(zetacont.zeta_em_reference("-7.25"), mpmath.zeta(mpmath.mpf("-7.25")), 1e-35)
    zp = zetacont.zeta_prime_at_zero(zetacont.derive_identity(2))
    assert close(zp, -mpmath.log(2 * mpmath.pi) / 2, 1e-35)
    assert close(zetacont.sum_zeta_m1(30), 1, 1e-30)
    zeros = zetacont.trivial_zero_report(zetacont.derive_identity(11))
    assert [z[0] for z in zeros] == [-2, -4, -6, -8, -10]
    assert all(z[1] < 1e-35 for z in zeros)

    for bad, exc in [("1", zetacont.PoleError), ("-6", zetacont.DomainError)]:
        try:
            zetacont.eval_identity(spec, bad)
        except exc:
            pass
        else:
            raise AssertionError(f"{bad} should raise {exc.__name__}")
    assert issubclass(zetacont.PoleError, ValueError)
    print("zetacont smoke test passed")


if __name__ == "__main__":
    main()
