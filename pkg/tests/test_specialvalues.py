from fractions import Fraction

import mpmath
import pytest
from mpmath import mpf

from ellipkint import (
    CATALOG,
    DomainError,
    In_exact_real,
    QuadExt,
    SpecialPoint,
    Surd,
    eval_at_special,
    make_exact_value,
    relation,
)
from ellipkint.specialvalues import in1_pair

F = Fraction


def qe(a, b=0, d=1):
    return QuadExt(F(a), F(b), d)


def test_catalog_contents():
    assert set(CATALOG) == {"1", "3", "1/3", "cot2-pi-10", "cot2-pi-12"}
    assert CATALOG["cot2-pi-10"].z == qe(5, 2, 5)
    assert CATALOG["cot2-pi-12"].z == qe(7, 4, 3)
    assert CATALOG["1/3"].theta_over_pi == F(1, 3)


def test_catalog_arccot_values():
    # ArcCot(sqrt(z)) must really equal theta*pi for every catalog point
    with mpmath.workdps(40):
        for point in CATALOG.values():
            lhs = mpmath.acot(mpmath.sqrt(point.z.to_mpf()))
            rhs = mpf(point.theta_over_pi.numerator) / point.theta_over_pi.denominator * mpmath.pi
            assert abs(lhs - rhs) < mpf("1e-35")


def test_eval_z1_table():
    # sqrt(2)*I_n(1) = a + b*pi for n = 0..3, printed table values
    expected = [
        (F(0), F(1, 4)),
        (F(1, 6), F(1, 8)),
        (F(1, 6), F(19, 240)),
        (F(121, 840), F(9, 160)),
    ]
    for n, (a, b) in enumerate(expected):
        assert in1_pair(n) == (a, b)


def test_eval_cot_points():
    v = eval_at_special(0, CATALOG["cot2-pi-10"])
    assert v.pi_coeff == qe(F(1, 10))
    assert v.pi_surd == Surd(qe(50, 22, 5))
    assert v.alg_coeff.is_zero()

    v = eval_at_special(0, CATALOG["cot2-pi-12"])
    assert v.pi_coeff == qe(F(1, 24))
    assert v.pi_surd == Surd(qe(26, 15, 3))


def test_eval_i2_at_3_has_sqrt3():
    # the published table prints sqrt(2) here; both routes say sqrt(3)
    v = eval_at_special(2, CATALOG["3"])
    assert v.alg_coeff == qe(F(1, 180))
    assert v.alg_surd == Surd(qe(1))
    assert v.pi_coeff == qe(F(11, 2880))
    assert v.pi_surd == Surd(qe(3))


def test_exact_matches_floating_route():
    # every catalog point, n <= 8: exact evaluation vs closed-form float
    with mpmath.workdps(50):
        for point in CATALOG.values():
            z = point.z.to_mpf()
            for n in range(9):
                exact = eval_at_special(n, point).to_mpf()
                floating = In_exact_real(n, z)
                assert abs(exact - floating) < 1e-12


def test_self_relation():
    assert relation(4, 4) == (F(-1), F(0))


def test_relation_published_pairs():
    assert relation(1, 0) == (F(-1, 2), F(-1, 6))
    assert relation(2, 0) == (F(-19, 60), F(-1, 6))


def test_relation_exactness_sweep():
    pairs = {k: in1_pair(k) for k in range(11)}
    for n in range(11):
        for m in range(11):
            a_m, b_m = pairs[m]
            if b_m == 0:
                continue
            P, Q = relation(n, m)
            a_n, b_n = pairs[n]
            assert b_n + P * b_m == 0
            assert a_n + P * a_m + Q == 0


def test_user_extensible_point():
    # Cot^2(pi/8) = 3 + 2*sqrt(2), theta = 1/8, field d = 2
    point = SpecialPoint("cot2-pi-8", qe(3, 2, 2), F(1, 8), 2)
    v = eval_at_special(0, point)
    with mpmath.workdps(40):
        z = point.z.to_mpf()
        assert abs(v.to_mpf() - In_exact_real(0, z)) < 1e-12


def test_special_point_validation():
    with pytest.raises(DomainError):
        SpecialPoint("bad", qe(-1), F(1, 4), 1)
    with pytest.raises(DomainError):
        SpecialPoint("bad", qe(1), F(2, 3), 1)


def test_make_exact_value_normalizes():
    # radical 104+60*sqrt(3) must normalize to 2*sqrt(26+15*sqrt(3))
    v = make_exact_value(qe(1), qe(104, 60, 3), qe(0), qe(1))
    assert v.pi_surd == Surd(qe(26, 15, 3))
    assert v.pi_coeff == qe(F(1, 2))


def test_zero_value():
    v = make_exact_value(qe(0), qe(2), qe(0), qe(2))
    assert v.is_zero()
