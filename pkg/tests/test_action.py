from __future__ import annotations

import random

import pytest

from ogpd.action import (
    GroupoidAction,
    action_roundtrip_table,
    action_to_covering_roundtrip,
    canonical_action,
    covering_to_action,
    random_action,
    random_covering,
    semidirect_product,
    validate_action,
)
from ogpd.builders import inverse_semigroup_roundtrip, klein_groupoids, random_inverse_semigroup
from ogpd.functor import find_isomorphism, is_isomorphism, star_class


@pytest.fixture(scope="module")
def klein():
    return klein_groupoids()


def test_canonical_action_is_valid(klein):
    assert validate_action(canonical_action(klein[1])).passed


def test_corrupted_table_is_detected():
    act = random_action(3)
    table = dict(act.act)
    key = next(k for k, v in table.items() if k[0] != v)
    table[key] = key[0]
    bad = GroupoidAction(act.actor, act.carrier, act.omega, table, check=False)
    assert not validate_action(bad).passed


def test_canonical_semidirect_product_is_the_groupoid(klein):
    G = klein[1]
    sdp = semidirect_product(canonical_action(G))
    assert len(sdp.groupoid.arrows) == len(G.arrows)
    assert find_isomorphism(sdp.groupoid, G) is not None
    assert star_class(sdp.projection).bijective


@pytest.mark.parametrize("seed", range(6))
def test_semidirect_arrow_count(seed):
    act = random_action(seed)
    G, A = act.actor, act.carrier
    expected = sum(len(G.star(act.omega[A.cod(a)])) for a in A.arrows)
    assert len(semidirect_product(act).groupoid.arrows) == expected


@pytest.mark.parametrize("seed", range(6))
def test_covering_round_trip(seed):
    gamma = random_covering(seed)
    iso, sdp = action_to_covering_roundtrip(gamma)
    assert is_isomorphism(iso)
    assert iso.then(sdp.projection).mapping == gamma.mapping
    assert validate_action(covering_to_action(gamma)).passed


@pytest.mark.parametrize("seed", range(6))
def test_action_round_trip(seed):
    act = random_action(seed)
    assert action_roundtrip_table(act) == act.table()


@pytest.mark.parametrize("seed", range(4))
def test_inverse_semigroup_round_trip(seed):
    S = random_inverse_semigroup(random.Random(seed))
    _, S2 = inverse_semigroup_roundtrip(S)
    assert S2 == S
