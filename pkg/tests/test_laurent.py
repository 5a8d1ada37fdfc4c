import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vknots import PreconditionError
from vknots.laurent import LaurentPoly, monomial, one, var, zero

VARS = ("t", "l")

exps = st.tuples(st.integers(-4, 4), st.integers(-4, 4))
polys = st.dictionaries(exps, st.integers(-9, 9), max_size=6).map(
    lambda d: LaurentPoly.from_dict(VARS, d)
)


def test_monomial_identity():
    p = monomial(3, (1, -2), VARS)
    assert p * one(VARS) == p
    assert p + zero(VARS) == p


def test_additive_inverse():
    p = monomial(2, (1, 0), VARS) + monomial(-5, (0, -1), VARS)
    assert (p + (-p)).is_zero()


def test_ring_identity_difference_of_squares():
    t = var("t", ("t",))
    onep = one(("t",))
    assert (t - onep) * (t + onep) == t * t - onep


@settings(max_examples=80, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_substitute_at_one():
    p = monomial(1, (1,), ("t",)) + monomial(1, (-1,), ("t",)) + monomial(-2, (0,), ("t",))
    assert p.substitute({"t": 1}).is_zero()


def test_substitute_empty_is_identity():
    p = monomial(4, (2, -1), VARS)
    assert p.substitute({}) == p


def test_substitute_rename_merges():
    p = monomial(1, (1, 1), VARS)
    q = p.substitute({"l": "t"})
    assert q.variables == ("t",)
    assert q == monomial(1, (2,), ("t",))


def test_substitute_zero_with_negative_exponent():
    p = monomial(1, (-1, 0), VARS)
    with pytest.raises(PreconditionError):
        p.substitute({"t": 0})


def test_mismatched_variables():
    with pytest.raises(PreconditionError):
        monomial(1, (1,), ("t",)) + monomial(1, (1, 0), VARS)


def test_render_goldens():
    assert zero(VARS).render() == "0"
    p = LaurentPoly.from_dict(("t", "l1", "l2"),
                              {(0, 0, -4): -1, (0, 0, 4): -1, (0, 0, 0): 2})
    assert p.render() == "-l2^4 + 2 - l2^-4"
    q = LaurentPoly.from_dict(("t",), {(1,): 1, (-1,): 1, (0,): -2})
    assert q.render() == "t - 2 + t^-1"


def test_render_coefficients_and_exponents():
    p = LaurentPoly.from_dict(VARS, {(2, 0): 3, (1, -1): -1, (0, 0): 1})
    assert p.render() == "3t^2 - tl^-1 + 1"


@settings(max_examples=60, deadline=None)
@given(polys)
def test_render_injective_on_canonical(p):
    q = LaurentPoly.from_dict(VARS, p.as_dict())
    assert q.render() == p.render()
    if not p.is_zero():
        assert (p + monomial(1, (0, 0), VARS)).render() != p.render()


def test_json_form():
    p = LaurentPoly.from_dict(("t",), {(1,): 1, (0,): -2})
    assert p.to_json_dict() == {
        "vars": ["t"],
        "terms": [{"coef": 1, "exp": [1]}, {"coef": -2, "exp": [0]}],
    }
