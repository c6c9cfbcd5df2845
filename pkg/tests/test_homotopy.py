from __future__ import annotations

import random

import pytest

from ogpd.action import random_covering
from ogpd.builders import fixtures, interval
from ogpd.core import Poset, trivial_groupoid, validate_ogpd
from ogpd.errors import PreconditionError
from ogpd.functor import enumerate_functors, identity_functor
from ogpd.homotopy import (
    HomotopySquare,
    cylinder,
    find_lift,
    has_path_lifting,
    is_lift,
    iter_lifts,
    lift_choice_of,
    lift_covering,
    make_homotopy,
    path_lift,
    random_square,
)


@pytest.fixture(scope="module")
def klein():
    return fixtures("klein_hlp")


def test_cylinder_size(klein):
    AI = cylinder(klein.E)
    assert len(AI.arrows) == 4 * len(klein.E.arrows)
    assert validate_ogpd(AI).passed


def test_klein_square_has_no_lift(klein):
    assert find_lift(klein.square) is None
    assert list(iter_lifts(klein.square)) == []


def test_identity_square_lifts_by_identities(klein):
    Ft = find_lift(klein.identity_square)
    assert Ft is not None and is_lift(klein.identity_square, Ft)
    assert lift_choice_of(Ft, klein.E) == {"e": "e", "f": "f", "z": "z"}


def test_fibration_lifts_paths_one_at_a_time(klein):
    p = klein.p
    assert has_path_lifting(p)
    assert path_lift(p, "e", "x@1") == "a@e"
    assert path_lift(p, "f", "x@1") == "b@f"
    assert p(path_lift(p, "z", "y@0")) == "y@0"


def test_pointwise_lifts_are_not_monotone(klein):
    # each path lifts alone, but z needs a@z and b@z at once
    G = klein.G
    g_e, g_f = path_lift(klein.p, "e", "x@1"), path_lift(klein.p, "f", "x@1")
    assert G.restriction("z", g_e) != G.restriction("z", g_f)


def test_path_lift_rejects_foreign_arrow(klein):
    with pytest.raises(PreconditionError):
        path_lift(klein.p, "e", "y@0")


def test_square_must_commute(klein):
    F = make_homotopy(klein.E, klein.p, klein.i, {"e": "x@1", "f": "x@1", "z": "y@0"})
    with pytest.raises(PreconditionError):
        HomotopySquare(klein.E, identity_functor(klein.H), klein.i, F)


def test_lift_is_monotone_in_restriction():
    gamma = random_covering(7)
    G = gamma.source
    A = trivial_groupoid(Poset(["lo", "hi"], [("lo", "hi")]))
    fs = enumerate_functors(A, G)
    rng = random.Random(3)
    for _ in range(8):
        sq = random_square(rng, gamma, A, rng.choice(fs))
        choice = lift_choice_of(lift_covering(sq), A)
        assert G.leq(choice["lo"], choice["hi"])
        assert G.restriction(G.dom(choice["lo"]), choice["hi"]) == choice["lo"]
