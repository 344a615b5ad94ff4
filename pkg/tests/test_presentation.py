import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import corpus
from gentlekit import data
from gentlekit.generate import random_gentle
from gentlekit.presentation import (
    BOUNDARY,
    TRANSITION,
    TWO_REGULAR,
    NotAdmissibleError,
    NotGentleError,
    ParseError,
    classify_strict,
    find_violations,
    from_text,
    opposite,
    parse,
    rename,
    require_strict,
    serialize,
)


def test_prototype_shape(proto):
    assert len(proto.vertices) == 7
    assert len(proto.arrows) == 11
    assert len(proto.relations) == 8
    classes = dict(proto.vertex_class)
    assert [v for v, c in classes.items() if c == TRANSITION] == ["1", "3", "7"]
    assert all(c in (TRANSITION, TWO_REGULAR) for c in classes.values())


def test_rel_means_second_after_first():
    gp = from_text("vertex 1 2\narrow a : 1 -> 2\narrow b : 2 -> 1\nrel b . a\n")
    assert gp.is_relation("a", "b")
    assert not gp.is_relation("b", "a")
    assert gp.rho == {"a": "b"}
    assert gp.sigma == {"b": "a"}


def test_comments_and_blank_lines():
    gp = from_text("# header\nquiver q  # name\n\nvertex 1\narrow x : 1 -> 1\nrel x . x\n")
    assert gp.quiver.name == "q"
    assert gp.rho == {"x": "x"}


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("vertex 1\narrow a : 1 => 1\n", 2, 13),
        ("vertex 1\narrow a 1 -> 1\n", 2, 9),
        ("vertex 1\narrow a : 1 -> 2\n", 2, 16),
        ("vertex 1 1\n", 1, 10),
        ("vertex 1\narrow a : 1 -> 1\nrel b . a\n", 3, 5),
        ("vertex 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\nrel b . a\n", 4, 5),
        ("verts 1\n", 1, 1),
    ],
)
def test_parse_errors_carry_position(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert (exc.value.line, exc.value.column) == (line, col)


def test_three_out_arrows_is_ge1():
    text = "vertex 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\narrow c : 1 -> 2\n"
    with pytest.raises(NotGentleError) as exc:
        from_text(text)
    assert any(v.axiom == "Ge1" for v in exc.value.violations)


def test_ge3_and_ge4():
    # x then either y or z freely: Ge3
    text = "vertex 1 2\narrow x : 1 -> 2\narrow y : 2 -> 1\narrow z : 2 -> 1\n"
    axioms = {v.axiom for v in find_violations(*parse(text))}
    assert "Ge3" in axioms and "Ge4" in axioms
    # two relations out of one arrow: Ge3 only
    text2 = text + "rel y . x\nrel z . x\n"
    axioms2 = [v.axiom for v in find_violations(*parse(text2))]
    assert "Ge3" in axioms2


def test_strict_classification():
    assert classify_strict(corpus("prototype")).admissible_complete
    rep = classify_strict(corpus("qstar"))
    assert not rep.admissible_complete
    assert rep.offending_arrows == ("y",)
    assert set(rep.offending_vertices) == {"1", "2"}
    sq = corpus("two_cycle_square")
    assert set(sq.vertex_class.values()) == {BOUNDARY}
    with pytest.raises(NotAdmissibleError):
        require_strict(sq)


@pytest.mark.parametrize("name", data.NAMES)
def test_corpus_round_trip(name):
    gp = corpus(name)
    assert from_text(serialize(gp.quiver, gp.relations)) == gp


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10))
def test_random_round_trip_and_opposite(seed, n):
    gp = random_gentle(random.Random(seed), n)
    assert from_text(serialize(gp.quiver, gp.relations)) == gp
    op = opposite(gp)
    assert opposite(op).relations == gp.relations
    assert len(op.relations) == len(gp.relations)


def test_rename_preserves_structure(proto):
    vmap = {v: f"x{v}" for v in proto.vertices}
    amap = {a: a.upper() for a in proto.arrows}
    r = rename(proto, vmap, amap, list(reversed(proto.arrows)))
    assert r.arrows[0] == "A11"
    assert {amap[a]: amap[b] for a, b in proto.rho.items()} == dict(r.rho)
