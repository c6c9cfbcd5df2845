"""Property tests over seeded random instances."""

from __future__ import annotations

import random

from hypothesis import assume, given
from hypothesis import strategies as st

from ogpd.action import action_roundtrip_table, random_action
from ogpd.builders import random_instance, random_poset
from ogpd.core import validate_ogpd
from ogpd.enlargement import triple_factorization
from ogpd.functor import kernel, star_class, validate_functor
from ogpd.quotient import brute_force_quotient, factorize, is_normal, quotient, quotient_as_sets

seeds = st.integers(min_value=0, max_value=10**6)


def instance(seed):
    return random_instance(seed, with_interval=seed % 3 == 0)


@given(seeds)
def test_random_instances_are_valid(seed):
    ri = instance(seed)
    assert validate_ogpd(ri.groupoid).passed
    assert validate_functor(ri.functor).passed
    assert is_normal(ri.groupoid, ri.normal).passed


@given(seeds)
def test_restrictions_are_unique(seed):
    G = instance(seed).groupoid
    for g in G.arrows:
        for f in G.objects.down(G.dom(g)):
            below = [h for h in G.down(g) if G.dom(h) == f]
            assert below == [G.restriction(f, g)]


@given(seeds, st.data())
def test_pseudoproduct_is_associative(seed, data):
    G = instance(seed).groupoid
    assume(G.is_inductive())
    arrows = sorted(G.arrows, key=repr)
    a, b, c = (data.draw(st.sampled_from(arrows)) for _ in range(3))
    assert G.pseudoproduct(G.pseudoproduct(a, b), c) == G.pseudoproduct(a, G.pseudoproduct(b, c))


@given(seeds)
def test_kernel_is_wide_normal_subgroupoid(seed):
    ri = instance(seed)
    K = kernel(ri.functor)
    assert ri.groupoid.subset_is_subgroupoid(K, wide=True)
    assert is_normal(ri.groupoid, K).passed


@given(seeds)
def test_quotient_matches_oracle(seed):
    ri = instance(seed)
    q = quotient(ri.groupoid, ri.normal)
    assert validate_ogpd(q.groupoid).passed
    assert quotient_as_sets(q) == brute_force_quotient(ri.groupoid, ri.normal)


@given(seeds)
def test_factorization_recovers_functor(seed):
    theta = instance(seed).functor
    fac = factorize(theta)
    assert fac.varpi.then(fac.psi).mapping == theta.mapping
    assert star_class(fac.varpi).surjective
    assert star_class(fac.psi).injective
    if star_class(theta).surjective:
        assert star_class(fac.psi).bijective


@given(seeds)
def test_star_classes_compose(seed):
    theta = random_instance(seed, with_normal=False).functor
    tf = triple_factorization(theta)
    # immersions compose to immersions, fibrations to fibrations
    assert star_class(tf.i.then(tf.pi)).injective
    if star_class(tf.factorization.psi).surjective:
        assert star_class(tf.varpi.then(tf.factorization.psi)).surjective


@given(seeds)
def test_triple_factorization_composite(seed):
    theta = random_instance(seed, with_normal=False).functor
    tf = triple_factorization(theta)
    assert tf.varpi.then(tf.i).then(tf.pi).mapping == theta.mapping
    assert star_class(tf.pi).bijective


@given(seeds)
def test_action_round_trip(seed):
    act = random_action(seed)
    assert action_roundtrip_table(act) == act.act


@given(seeds, st.integers(min_value=1, max_value=6))
def test_random_posets_are_partial_orders(seed, n):
    P = random_poset(random.Random(seed), n)
    assert P.check().passed
    for x in P:
        assert set(P.linear_extension()[: P.linear_extension().index(x)]) >= set(P.down(x)) - {x}
