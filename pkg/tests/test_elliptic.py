import mpmath
import pytest
from mpmath import mpf

from ellipkint import DomainError, Precision, agm, ellip_k, tanh_sinh_integrate

PREC = Precision()


def test_agm_fixed_point():
    assert agm(1, 1) == 1


def test_agm_homogeneous():
    with mpmath.workdps(45):
        assert abs(agm(2, 8) - 2 * agm(1, 4)) < mpf("1e-38")


def test_agm_four_step_oracle():
    # independent hand iteration: a,b = (a+b)/2, sqrt(a*b) four times from (1, 1/2)
    # brackets the limit to ~5e-17; frozen midpoint of the fourth bracket
    assert abs(agm(1, 0.5) - mpf("0.72839551552345343")) < 1e-15


def test_agm_result_in_bracket():
    v = agm(1, 4)
    assert 1 <= v <= 4


def test_agm_rejects_nonpositive():
    with pytest.raises(DomainError):
        agm(0, 1)
    with pytest.raises(DomainError):
        agm(1, -2)


def test_agm_bracket_contracts():
    # geometric iterate stays below arithmetic iterate and the bracket
    # at least halves per step (it actually squares: quadratic convergence)
    with mpmath.workdps(45):
        a, b = mpf(1), mpf("0.25")
        widths = []
        for _ in range(5):
            a, b = (a + b) / 2, mpmath.sqrt(a * b)
            assert b <= a
            widths.append(a - b)
        for w_prev, w_next in zip(widths, widths[1:]):
            assert w_next <= w_prev / 2


def test_k_at_zero():
    with mpmath.workdps(45):
        assert abs(ellip_k(0) - mpmath.pi / 2) < mpf("1e-38")


def test_k_domain():
    with pytest.raises(DomainError):
        ellip_k(1)
    with pytest.raises(DomainError):
        ellip_k(-0.1)
    with pytest.raises(DomainError):
        ellip_k(1.5)


def test_k_lower_bound_and_monotonic():
    grid = [mpf(i) / 20 for i in range(20)]
    values = [ellip_k(k) for k in grid]
    assert values[0] >= mpmath.pi / 2 - mpf("1e-30")
    for v1, v2 in zip(values, values[1:]):
        assert v1 < v2
    for v in values[1:]:
        assert v > mpmath.pi / 2


@pytest.mark.parametrize("k", [0.1, 0.3, 0.5, 0.7, 0.9, 0.99])
def test_k_against_defining_integral(k):
    # quadrature of the defining integral is the independent oracle
    k = mpf(k)

    def integrand(t):
        return 1 / mpmath.sqrt((1 - t * t) * (1 - (k * t) ** 2))

    oracle = tanh_sinh_integrate(integrand, 0, 1, PREC).value
    assert abs(ellip_k(k) - oracle) < 1e-10


def test_k_log_asymptote_near_one():
    k = 1 - mpf("1e-8")
    asymptote = mpmath.log(4 / mpmath.sqrt((1 - k) * (1 + k)))
    assert abs(ellip_k(k) - asymptote) / asymptote < 5e-4  # 3 significant digits
