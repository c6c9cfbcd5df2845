from __future__ import annotations

import pytest

from ogpd.builders import fixtures, group_groupoid, klein_groupoids
from ogpd.errors import AxiomViolation
from ogpd.functor import find_isomorphism, kernel, star_class
from ogpd.groups import FiniteGroup
from ogpd.quotient import (
    brute_force_quotient,
    factorize,
    find_nexus,
    is_normal,
    quotient,
    quotient_as_sets,
    simeq,
)


@pytest.fixture(scope="module")
def klein():
    return klein_groupoids()


def test_quotient_by_identities_is_isomorphic(klein):
    G = klein[1]
    q = quotient(G, G.objects.elements)
    assert len(q.groupoid.arrows) == len(G.arrows)
    assert find_isomorphism(G, q.groupoid) is not None


def test_kernel_is_normal(klein):
    _, G, _, p, _ = klein
    assert is_normal(G, kernel(p)).passed


def test_non_normal_subgroup_breaks_conjugation():
    G = group_groupoid(FiniteGroup.symmetric(3))
    A = {"*", ("*", "1")}
    rep = is_normal(G, A)
    assert rep.has("normal.conjugation")
    with pytest.raises(AxiomViolation):
        quotient(G, A)


def test_missing_identity_is_reported(klein):
    G = klein[1]
    assert is_normal(G, {"e", "f"}).has("normal.wide")


def test_nexus_between_connected_objects():
    fx = fixtures("example_vi")
    n = find_nexus(fx.S, fx.A, "k", "l")
    assert (n.a, n.p) == ("iota", "iota^-1")
    assert find_nexus(fx.S, fx.A, "x", "y") is None


def test_example_quotient_is_not_inductive():
    fx = fixtures("example_vi")
    q = quotient(fx.S, fx.A)
    Q = q.groupoid
    assert len(Q.objects) == 5
    assert Q.objects == fx.expected
    assert not Q.is_inductive()
    assert simeq(fx.S, fx.A, "k", "l")
    assert not simeq(fx.S, fx.A, "x", "y")


def test_quotient_matches_brute_force(klein):
    _, G, _, p, _ = klein
    for A in (kernel(p), frozenset(G.arrows), frozenset(G.objects.elements)):
        q = quotient(G, A)
        assert quotient_as_sets(q) == brute_force_quotient(G, A)


def test_klein_factorization(klein):
    _, G, _, p, _ = klein
    fac = factorize(p)
    assert star_class(fac.psi).bijective
    assert fac.varpi.then(fac.psi).mapping == p.mapping
    assert len(fac.quotient.groupoid.arrows) == 6
