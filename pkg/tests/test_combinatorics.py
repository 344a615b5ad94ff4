import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from conftest import corpus
from gentlekit import data
from gentlekit.combinatorics import (
    admissible_decomposition,
    admissible_path,
    differential_decomposition,
    differential_path,
    glue_split,
    injective_dimension,
    is_finite_projective,
    koszul_dual,
)
from gentlekit.generate import random_admissible, random_gentle
from gentlekit.presentation import classify_strict, rename

gentle_seeds = st.tuples(st.integers(0, 10**6), st.integers(0, 12))


def _random(seed_n):
    seed, n = seed_n
    return random_gentle(random.Random(seed), n, n_isolated=seed % 2)


def test_prototype_cycles(proto):
    dec = admissible_decomposition(proto)
    assert dec.lengths == [9, 2]
    assert dec.cycles[0].arrows == ("a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9")
    assert dec.cycles[1].arrows == ("a10", "a11")
    assert dec.uncovered == ()


def test_prototype_differential(proto):
    dd = differential_decomposition(proto)
    assert [c.arrows for c in dd.cycles] == [("a4", "a6", "a10"), ("a5",)]
    assert sorted(w.arrows for w in dd.walks) == [("a1", "a9"), ("a3", "a11", "a7"), ("a8", "a2")]
    assert differential_path(proto, "a6").is_cycle
    assert not admissible_path(proto, "a1").arrows[-1] == "a1"


@pytest.mark.parametrize(
    "name, w", [("prototype", 3), ("two_cycle_square", 0), ("two_loop", 1), ("two_cycle", 1), ("qstar", 2)]
)
def test_injective_dimension(name, w):
    assert injective_dimension(corpus(name)) == w


def test_w_renaming_invariant(proto, rng):
    for _ in range(5):
        verts = list(proto.vertices)
        rng.shuffle(verts)
        vmap = dict(zip(proto.vertices, [f"u{v}" for v in verts]))
        amap = {a: f"b{i}" for i, a in enumerate(rng.sample(proto.arrows, len(proto.arrows)))}
        order = rng.sample(proto.arrows, len(proto.arrows))
        assert injective_dimension(rename(proto, vmap, amap, order)) == 3


def test_finite_projectivity():
    q = is_finite_projective(corpus("qstar"))
    assert not q.finite_projective and q.witness == ("y",)
    assert is_finite_projective(corpus("prototype")).finite_projective
    assert is_finite_projective(corpus("two_cycle")).finite_projective


def test_glued_prototype(proto):
    g = glue_split(proto)
    assert sorted((c.kind, c.length) for c in g.components) == [("A~", 2), ("A~", 9)]


@settings(max_examples=200, deadline=None)
@given(gentle_seeds)
def test_sigma_partition(seed_n):
    gp = _random(seed_n)
    dec = admissible_decomposition(gp)
    covered = [a for c in dec.cycles for a in c.arrows]
    assert len(covered) == len(set(covered))
    assert len(covered) + len(dec.uncovered) == len(gp.arrows)
    # raises on disagreement between the two criteria
    is_finite_projective(gp)


@settings(max_examples=100, deadline=None)
@given(gentle_seeds)
def test_koszul_involution_and_chain_duality(seed_n):
    gp = _random(seed_n)
    dual = koszul_dual(gp)
    assert set(koszul_dual(dual).relations) == set(gp.relations)
    assert koszul_dual(dual).quiver.arrows == gp.quiver.arrows
    d_cycles = Counter(c.length for c in differential_decomposition(gp).cycles)
    a_cycles = Counter(c.length for c in admissible_decomposition(dual).cycles)
    assert d_cycles == a_cycles


@settings(max_examples=100, deadline=None)
@given(gentle_seeds)
def test_w_zero_means_no_walks(seed_n):
    gp = _random(seed_n)
    if injective_dimension(gp) == 0:
        assert not differential_decomposition(gp).walks


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6))
def test_strict_sigma_is_bijection(seed):
    rng = random.Random(seed)
    gp = random_admissible(rng, rng.randint(1, 10))
    assert classify_strict(gp).admissible_complete
    assert sorted(gp.sigma) == sorted(gp.sigma.values()) == sorted(gp.arrows)


def test_two_loop_dual_is_xy(proto):
    dual = koszul_dual(corpus("two_loop"))
    assert set(dual.relations) == set(corpus("two_loop_dual").relations)


@pytest.mark.parametrize("name", data.NAMES)
def test_double_dual_corpus(name):
    gp = corpus(name)
    dd = koszul_dual(koszul_dual(gp))
    assert dd.quiver.arrows == gp.quiver.arrows and set(dd.relations) == set(gp.relations)


def test_prototype_dual_relation_count(proto):
    # every vertex contributes (in-degree x out-degree) composites; 19 in total, 8 of them relations
    assert len(proto.composable_pairs()) == 19
    assert len(koszul_dual(proto).relations) == 11
