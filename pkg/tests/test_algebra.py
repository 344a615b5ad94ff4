import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from conftest import STRICT_CORPUS, corpus
from gentlekit.algebra import (
    FullCycle,
    Idempotent,
    Path,
    Theta,
    TruncatedAlgebra,
    assign_signs,
    basis_rank,
    check_signs,
    sign_problems,
    verify_theta,
)
from gentlekit.generate import random_admissible
from gentlekit.presentation import NotAdmissibleError
from oracle_paths import item_key, oracle_for


def both_signs(gp):
    e = assign_signs(gp)
    return [e, e.flipped(gp)]


def small_random(n=12, seed=7, max_rank=40):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        gp = random_admissible(rng, rng.randint(1, 6), max_vertices=5)
        if basis_rank(gp, assign_signs(gp)) <= max_rank:
            out.append(gp)
    return out


CASES = [corpus(n) for n in STRICT_CORPUS if n != "prototype"] + small_random()


def test_signs(proto):
    e = assign_signs(proto)
    assert not sign_problems(proto, e.eps)
    f = e.flipped(proto)
    assert not sign_problems(proto, f.eps)
    assert set(e.positive).isdisjoint(f.positive)
    bad = dict(e.eps)
    bad["a1"] = 1  # a1 leaves the transition vertex 1
    with pytest.raises(ValueError):
        check_signs(proto, bad)


def test_rejects_non_strict():
    gp = corpus("qstar")
    with pytest.raises(NotAdmissibleError):
        assign_signs(gp)


def test_prototype_rank(proto):
    alg = TruncatedAlgebra(proto, assign_signs(proto))
    assert len(alg) == 85
    assert len(alg) == 9 * 9 + 2 * 2


@pytest.mark.parametrize("gp", CASES + [corpus("prototype")], ids=lambda g: g.quiver.name)
def test_rank_identity_and_oracle_products(gp):
    for eps in both_signs(gp):
        alg = TruncatedAlgebra(gp, eps, N=6)
        ora = oracle_for(gp, eps)
        assert len(alg) == basis_rank(gp, eps) == ora.rank()
        for (i, x), (j, y) in product(enumerate(alg.basis), repeat=2):
            got = {(item_key(alg.basis[k]), d): c for k, d, c in alg.basis_product(i, j)}
            assert got == ora.rewrite(ora.times(ora.item_word(x), ora.item_word(y))), (x, y)


@pytest.mark.parametrize("gp", CASES, ids=lambda g: g.quiver.name)
def test_associativity_exhaustive(gp):
    alg = TruncatedAlgebra(gp, assign_signs(gp), N=4)
    els = [alg.basis_element(i) for i in range(len(alg))]
    for x, y, z in product(els, repeat=3):
        assert (x * y) * z == x * (y * z)


@pytest.mark.parametrize("gp", CASES + [corpus("prototype")], ids=lambda g: g.quiver.name)
def test_c_central_nu_morphism(gp):
    for eps in both_signs(gp):
        alg = TruncatedAlgebra(gp, eps, N=4)
        c = alg.c()
        one = alg.one()
        assert alg.nu(c) == c
        assert alg.nu(one) == one
        els = [alg.basis_element(i) for i in range(len(alg))]
        for x in els:
            assert c * x == x * c
            assert one * x == x == x * one
        for x, y in product(els, repeat=2):
            assert alg.nu(x * y) == alg.nu(x) * alg.nu(y)


def test_c_is_sum_of_cycles():
    gp = corpus("two_cycle")
    alg = TruncatedAlgebra(gp, assign_signs(gp))
    # alpha * beta * ... : the full cycle at 1 equals c e1 at a transition vertex
    a, b = alg.arrow("alpha"), alg.arrow("beta")
    e1 = alg.element(Idempotent("1"))
    assert b * a == alg.element({(Idempotent("1"), 1): 1})
    assert b * a == alg.c() * e1


def test_two_loop_products():
    gp = corpus("two_loop")
    alg = TruncatedAlgebra(gp, assign_signs(gp))
    assert alg.basis == (Idempotent("1"), Path("x", 1), Path("y", 1), FullCycle("x"))
    x, y = alg.arrow("x"), alg.arrow("y")
    assert (x * x).terms == {} and (y * y).terms == {}
    assert y * x == alg.element(FullCycle("x"))
    assert x * y == alg.element({(Idempotent("1"), 1): 1, FullCycle("x"): -1})
    assert x * y + y * x == alg.c()


@pytest.mark.parametrize("name", STRICT_CORPUS)
def test_theta_corpus(name):
    gp = corpus(name)
    for eps in both_signs(gp):
        rep = verify_theta(gp, eps, N=4)
        assert rep.ok, [str(f) for f in rep.failures[:5]]
        assert all(rep.checks.values())


def test_theta_detects_wrong_twist(monkeypatch):
    gp = corpus("prototype")
    monkeypatch.setattr(TruncatedAlgebra, "nu", lambda self, x: x)
    assert not verify_theta(gp, N=3).ok


def test_theta_detects_wrong_sign(monkeypatch):
    gp = corpus("two_cycle")
    orig = Theta.__call__
    monkeypatch.setattr(Theta, "__call__", lambda self, x: orig(self, x).scale(-1))
    rep = verify_theta(gp, N=3)
    assert {"theta-psi", "psi-theta"} <= {f.check for f in rep.failures}


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6))
def test_theta_random(seed):
    rng = random.Random(seed)
    gp = random_admissible(rng, rng.randint(1, 6), max_vertices=6)
    assert verify_theta(gp, N=3).ok


def test_truncation_drops_high_degree():
    gp = corpus("two_cycle")
    alg = TruncatedAlgebra(gp, assign_signs(gp), N=2)
    c = alg.c()
    assert (c * c).terms == {}
    with pytest.raises(ValueError):
        TruncatedAlgebra(gp, assign_signs(gp), N=1)
