from __future__ import annotations

import pytest

from ogpd.builders import interval, klein_groupoids, simplicial
from ogpd.cocylinder import interval_mapping_groupoid
from ogpd.core import Poset, product, trivial_groupoid
from ogpd.functor import (
    OrderedFunctor,
    brute_force_transformation_count,
    constant_functor,
    curry,
    enumerate_functors,
    find_isomorphism,
    identity_functor,
    inclusion,
    is_embedding,
    is_isomorphism,
    kernel,
    mapping_groupoid,
    projection,
    pullback,
    star_class,
    uncurry,
    validate_functor,
)


@pytest.fixture(scope="module")
def klein():
    return klein_groupoids()


def test_klein_projection_classes(klein):
    _, G, _, p, _ = klein
    assert validate_functor(p).passed
    sc = star_class(p)
    assert sc.surjective and not sc.injective
    assert sc.name == "fibration"
    assert kernel(p) == frozenset({"ab@z", "e", "f", "z"})
    assert G.subset_is_subgroupoid(kernel(p), wide=True)


def test_constant_functor_kernel_is_everything(klein):
    _, G, H, _, _ = klein
    c = constant_functor(G, H, "0")
    assert validate_functor(c).passed
    assert kernel(c) == frozenset(G.arrows)


def test_broken_functor_is_reported(klein):
    _, G, H, p, _ = klein
    m = dict(p.mapping)
    m["a@z"] = "0"  # a@z * b@z = ab@z must still map to 0 = y y
    rep = validate_functor(OrderedFunctor(G, H, m, check=False))
    assert rep.has("functor.compose")


def test_identity_is_a_covering_isomorphism(klein):
    G = klein[1]
    ident = identity_functor(G)
    assert star_class(ident).bijective
    assert is_isomorphism(ident) and is_embedding(ident)


def test_wide_trivial_inclusion_is_an_immersion(klein):
    G = klein[1]
    G0 = trivial_groupoid(G.objects)
    inc = inclusion(G0, G)
    sc = star_class(inc)
    assert sc.injective and not sc.surjective
    assert is_embedding(inc)


def test_four_functors_on_the_interval():
    I = interval()
    fs = enumerate_functors(I, I)
    assert len(fs) == 4
    assert len({f.key() for f in fs}) == 4


def test_mapping_groupoid_counts_agree():
    I = interval()
    mg = mapping_groupoid(I, I)
    assert len(mg.groupoid.objects) == 4
    assert len(mg.groupoid.arrows) == brute_force_transformation_count(I, I) == 16


def test_mapping_groupoid_matches_triple_model():
    I = interval()
    model = interval_mapping_groupoid(simplicial(2))
    mg = mapping_groupoid(I, simplicial(2))
    assert len(model.groupoid.arrows) == len(mg.groupoid.arrows)
    assert find_isomorphism(model.groupoid, mg.groupoid) is not None


def test_curry_uncurry_round_trip():
    I = interval()
    C = trivial_groupoid(Poset([0, 1], [(0, 1)]))
    A = trivial_groupoid(Poset(["u", "v"], [("u", "v")]))
    for target, F in [(I, projection(product(I, I), 1, I)),
                      (C, projection(product(A, C), 1, C))]:
        src = F.source
        left = I if target is I else A
        right = I if target is I else C
        G, OG = curry(F, left, right)
        assert validate_functor(G).passed
        back = uncurry(G, left, OG)
        assert back.mapping == {a: F(a) for a in src.arrows}


def test_pullback_of_identity_is_source(klein):
    _, G, H, p, _ = klein
    P, left, right = pullback(p, identity_functor(H))
    assert len(P.arrows) == len(G.arrows)
    assert is_isomorphism(left)


@pytest.mark.parametrize("left, right, target", [
    (interval(), interval(), interval()),
    (trivial_groupoid(Poset(["u", "v"], [("u", "v")])), interval(), simplicial(1)),
])
def test_curry_is_a_bijection(left, right, target):
    OG = mapping_groupoid(left, target)
    src = enumerate_functors(product(left, right), target)
    curried = [curry(F, left, right, OGPD=OG)[0] for F in src]
    assert all(uncurry(G, left, OG).mapping == F.mapping for F, G in zip(src, curried))
    transposes = enumerate_functors(right, OG.groupoid)
    assert {G.key() for G in curried} == {G.key() for G in transposes}
    for G in transposes:
        assert curry(uncurry(G, left, OG), left, right, OGPD=OG)[0].mapping == G.mapping
