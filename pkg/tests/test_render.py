import json
from fractions import Fraction

import pytest

from ellipkint import (
    CATALOG,
    DomainError,
    QuadExt,
    eval_at_special,
    exact_value_from_json,
    exact_value_to_json,
    make_exact_value,
    render,
)

F = Fraction


def qe(a, b=0, d=1):
    return QuadExt(F(a), F(b), d)


def test_text_golden_i0_1():
    assert render(eval_at_special(0, CATALOG["1"])) == "pi/(4*sqrt(2))"


def test_latex_golden_i1_3():
    v = eval_at_special(1, CATALOG["3"])
    assert render(v, "latex") == "\\frac{1}{72}+\\frac{7\\pi}{432\\sqrt{3}}"


def test_zero_renders_as_zero():
    v = make_exact_value(qe(0), qe(1), qe(0), qe(1))
    assert render(v) == "0"
    assert render(v, "latex") == "0"


def test_text_nested_radical():
    v = eval_at_special(0, CATALOG["cot2-pi-10"])
    assert render(v) == "pi/(10*sqrt(50+22*sqrt(5)))"


def test_text_pi_first_term_order():
    v = eval_at_special(1, CATALOG["1"])
    assert render(v) == "1/(6*sqrt(2)) + pi/(8*sqrt(2))"
    assert render(v, term_order="pi_first") == "pi/(8*sqrt(2)) + 1/(6*sqrt(2))"


def test_negative_coefficient():
    v = make_exact_value(qe(F(-1, 3)), qe(2), qe(F(1, 5)), qe(1))
    assert render(v) == "1/5 - pi/(3*sqrt(2))"


def test_quadratic_coefficient():
    v = make_exact_value(qe(3, 2, 5), qe(1), qe(0), qe(1))
    assert render(v) == "(3+2*sqrt(5))*pi"
    assert render(v, "latex") == "(3+2\\sqrt{5})\\pi"


def test_unknown_format_and_order():
    v = eval_at_special(0, CATALOG["1"])
    with pytest.raises(DomainError):
        render(v, "html")
    with pytest.raises(DomainError):
        render(v, term_order="random")


@pytest.mark.parametrize("label", sorted(CATALOG))
@pytest.mark.parametrize("n", [0, 1, 4])
def test_json_round_trip(label, n):
    v = eval_at_special(n, CATALOG[label])
    payload = json.loads(json.dumps(exact_value_to_json(v)))
    assert exact_value_from_json(payload) == v


def test_json_schema_shape():
    obj = render(eval_at_special(1, CATALOG["1"]), "json")
    assert set(obj) == {"pi", "alg"}
    assert set(obj["pi"]) == {"coeff", "surd"}
    assert obj["pi"]["coeff"] == {"a": "1/8", "b": "0/1", "d": 1}
    assert obj["pi"]["surd"]["radicand"]["a"] == "2/1"
    # rationals are strings, never floats
    assert isinstance(obj["alg"]["coeff"]["a"], str)
