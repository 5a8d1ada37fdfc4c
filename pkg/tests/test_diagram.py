import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vknots import (
    GaussCodeError,
    PreconditionError,
    ValidationError,
    crossing_change,
    flat_key,
    mirror,
    parse,
    reorder_components,
    reverse_component,
    serialize,
)
from conftest import random_chord_diagram, random_knot

import random


def test_parse_unknot(unknot):
    assert unknot.n_components == 1
    assert unknot.n_crossings == 0
    assert serialize(unknot) == "0"


def test_parse_vtref(vtref):
    assert vtref.n_components == 1
    assert vtref.n_crossings == 2
    assert [p.token() for p in vtref.components[0]] == ["O1+", "O2+", "U1+", "U2+"]


def test_parse_hopf_two_components(hopf):
    assert hopf.n_components == 2
    assert hopf.n_crossings == 1
    assert not hopf.is_self_crossing(1)


def test_parse_whitespace_ignored():
    assert serialize(parse(" O1+ U2+\nO3- U1+ O2+ U3- ")) == \
        serialize(parse("O1+U2+O3-U1+O2+U3-"))


@pytest.mark.parametrize("bad", ["", "O1", "O1+U1", "X1+", "O1+;U2+", ";O1+U1+"])
def test_parse_rejects_syntax(bad):
    with pytest.raises((GaussCodeError, ValidationError)):
        parse(bad)


@pytest.mark.parametrize("bad", [
    "O1+U1+O1+U1+",       # id seen four times
    "O1+O1+",             # two over passages
    "O1+U1-",             # mismatched signs
    "O1+U2+",             # unmatched ids
])
def test_parse_rejects_invalid(bad):
    with pytest.raises(ValidationError):
        parse(bad)


def test_serialize_rotation_normalizes():
    assert serialize(parse("U1+O2+U2+O1+")) == "O1+U1+O2+U2+"
    assert serialize(parse("U2+O1+U1+O2+")) == "O1+U1+O2+U2+"
    assert serialize(parse("O1-;U1-")) == "O1-;U1-"


def test_serialize_parse_idempotent():
    for seed in range(40):
        d = random_knot(seed)
        assert serialize(parse(serialize(d))) == serialize(d)


def test_mirror_flips_everything(vtref):
    m = mirror(vtref)
    assert serialize(m) == "O1-O2-U1-U2-"
    for seed in range(50):
        d = random_knot(seed)
        assert serialize(mirror(mirror(d))) == serialize(d)


def test_crossing_change_involution(vtref, hopf):
    once = crossing_change(vtref, 1)
    assert serialize(crossing_change(once, 1)) == serialize(vtref)
    assert serialize(crossing_change(hopf, 1)) == "U1+;O1+"


def test_crossing_change_everywhere_is_mirror():
    for seed in range(20):
        d = random_knot(seed)
        cur = d
        for cid in d.crossing_ids():
            cur = crossing_change(cur, cid)
        assert serialize(cur) == serialize(mirror(d))


def test_crossing_change_unknown_id(vtref):
    with pytest.raises(PreconditionError):
        crossing_change(vtref, 99)


def test_reverse_component_involution():
    rng = random.Random(5)
    for seed in range(30):
        d = random_chord_diagram(rng, rng.randint(1, 5), rng.randint(1, 3))
        for i in range(1, d.n_components + 1):
            assert serialize(reverse_component(reverse_component(d, i), i)) \
                == serialize(d)


def test_reverse_component_sign_rule(hopf, vtref):
    # one passage on the reversed component: sign flips
    assert reverse_component(hopf, 1).sign(1) == 1
    # both passages on it: sign kept
    rev = reverse_component(vtref, 1)
    assert rev.sign(1) == 1 and rev.sign(2) == 1


def test_reorder_components(hopf):
    assert serialize(reorder_components(hopf, (2, 1))) == "U1-;O1-"
    assert serialize(reorder_components(hopf, (1, 2))) == serialize(hopf)
    with pytest.raises(PreconditionError):
        reorder_components(hopf, (1, 1))


def test_reorder_roundtrip():
    rng = random.Random(7)
    for _ in range(20):
        d = random_chord_diagram(rng, 4, 3)
        perm = [1, 2, 3]
        rng.shuffle(perm)
        inverse = [0] * 3
        for slot, old in enumerate(perm):
            inverse[old - 1] = slot + 1
        assert serialize(reorder_components(reorder_components(d, perm), inverse)) \
            == serialize(d)


def test_flat_key_crossing_change_invariance():
    for seed in range(40):
        d = random_knot(seed, 5)
        key = flat_key(d)
        for cid in d.crossing_ids():
            assert flat_key(crossing_change(d, cid)) == key
        assert flat_key(mirror(d)) == key


def test_flat_key_orbit_constant_under_all_change_subsets(vtref, kishino):
    import itertools

    for d in (vtref, kishino):
        key = flat_key(d)
        ids = d.crossing_ids()
        for r in range(len(ids) + 1):
            for subset in itertools.combinations(ids, r):
                cur = d
                for cid in subset:
                    cur = crossing_change(cur, cid)
                assert flat_key(cur) == key


def test_flat_key_rotation_invariance(vtref):
    comp = vtref.components[0]
    for r in range(len(comp)):
        rotated = parse("".join(p.token() for p in comp[r:] + comp[:r]))
        assert flat_key(rotated) == flat_key(vtref)


def test_flat_key_separates(unknot, vtref):
    assert flat_key(vtref) != flat_key(unknot)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_ops_preserve_validity(seed):
    d = random_knot(seed, 5)
    # constructors validate; exercising them is the assertion
    mirror(d)
    for cid in d.crossing_ids():
        crossing_change(d, cid)
    reverse_component(d, 1)


def test_flat_key_orbit_on_larger_random_diagrams():
    import itertools
    for seed in (3, 17):
        d = random_knot(seed, 6)
        key = flat_key(d)
        ids = d.crossing_ids()
        for r in range(len(ids) + 1):
            for subset in itertools.combinations(ids, r):
                cur = d
                for cid in subset:
                    cur = crossing_change(cur, cid)
                assert flat_key(cur) == key
