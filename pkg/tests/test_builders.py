from __future__ import annotations

import random

import pytest

from ogpd.builders import (
    FIXTURE_NAMES,
    PresheafSpec,
    all_small_groupoids,
    basic_groupoid,
    fixtures,
    presheaf_groupoid,
    random_instance,
    random_poset,
)
from ogpd.core import Poset, validate_ogpd
from ogpd.errors import PreconditionError
from ogpd.functor import validate_functor
from ogpd.groups import FiniteGroup
from ogpd.quotient import is_normal


def test_basic_groupoids():
    assert len(basic_groupoid("simplicial", n=2).arrows) == 9
    assert len(basic_groupoid("interval").arrows) == 4
    assert len(basic_groupoid("group", group=FiniteGroup.symmetric(3)).arrows) == 6
    T = basic_groupoid("trivial", elements=[0, 1, 2], leq=[(0, 1)])
    assert T.is_trivial() and T.objects.leq(0, 1)
    with pytest.raises(PreconditionError):
        basic_groupoid("sphere")


def test_small_menu_is_valid():
    for G in all_small_groupoids():
        assert validate_ogpd(G).passed, G.name


def test_presheaf_groupoid_counts():
    P = Poset(["lo", "hi"], [("lo", "hi")])
    spec = PresheafSpec(P, {"lo": FiniteGroup.cyclic(4), "hi": FiniteGroup.cyclic(2)}, {("hi", "lo"): (0, 2)})
    G = presheaf_groupoid(spec)
    assert len(G.arrows) == 6
    assert validate_ogpd(G).passed


@pytest.mark.parametrize("seed", [0, 17, 123])
def test_random_instance_is_reproducible(seed):
    a, b = random_instance(seed), random_instance(seed)
    assert a.groupoid == b.groupoid
    assert a.functor.mapping == b.functor.mapping
    assert a.normal == b.normal


@pytest.mark.parametrize("seed", range(8))
def test_random_instance_parts_are_valid(seed):
    ri = random_instance(seed, with_interval=seed % 2 == 1)
    assert validate_ogpd(ri.groupoid).passed
    assert validate_functor(ri.functor).passed
    assert is_normal(ri.groupoid, ri.normal).passed


def test_random_poset_is_a_poset():
    for s in range(10):
        P = random_poset(random.Random(s), 5)
        assert P.check().passed


def test_fixture_names():
    for name in FIXTURE_NAMES:
        assert fixtures(name).name == name
    with pytest.raises(PreconditionError):
        fixtures("nope")
