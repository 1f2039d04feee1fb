from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from ellipkint import Polynomial

coeff_lists = st.lists(
    st.fractions(max_denominator=50), min_size=0, max_size=6
)


def test_trailing_zeros_stripped():
    assert Polynomial([1, 2, 0, 0]) == Polynomial([1, 2])
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial().degree == -1


def test_basic_arithmetic():
    p = Polynomial([1, 2])      # 1 + 2z
    q = Polynomial([0, 0, 3])   # 3z^2
    assert (p + q) == Polynomial([1, 2, 3])
    assert (p - p).is_zero()
    assert p * q == Polynomial([0, 0, 3, 6])
    assert 2 * p == Polynomial([2, 4])


def test_derivative():
    p = Polynomial([5, 3, 0, 2])  # 5 + 3z + 2z^3
    assert p.derivative() == Polynomial([3, 0, 6])
    assert Polynomial([7]).derivative().is_zero()


def test_evaluation():
    p = Polynomial([1, -1, 1])
    assert p(Fraction(1, 2)) == Fraction(3, 4)
    assert p(0) == 1


def test_leading_coefficient():
    assert Polynomial([1, 2, Fraction(-3, 4)]).leading_coefficient == Fraction(-3, 4)
    assert Polynomial().leading_coefficient == 0


@given(coeff_lists, coeff_lists)
def test_product_degree_and_eval_consistency(a, b):
    p, q = Polynomial(a), Polynomial(b)
    prod = p * q
    if p.is_zero() or q.is_zero():
        assert prod.is_zero()
    else:
        assert prod.degree == p.degree + q.degree
    x = Fraction(3, 7)
    assert prod(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@given(coeff_lists)
def test_derivative_is_linear(a):
    p = Polynomial(a)
    assert (p + p).derivative() == p.derivative() + p.derivative()
