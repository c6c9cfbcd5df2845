from __future__ import annotations

import pytest

from ogpd.builders import klein_groupoids, random_instance
from ogpd.core import Poset, trivial_groupoid
from ogpd.errors import PreconditionError
from ogpd.functor import find_isomorphism, identity_functor, inclusion, is_isomorphism, star_class
from ogpd.enlargement import (
    is_enlargement,
    maximum_enlargement,
    tensor_poset,
    triple_factorization,
    universal_map,
)


@pytest.fixture(scope="module")
def klein():
    return klein_groupoids()


def test_groupoid_enlarges_itself(klein):
    G = klein[1]
    w = is_enlargement(G, G)
    assert w and set(w.connecting) == set(G.objects)


def test_isolated_object_is_not_reached():
    A = trivial_groupoid(Poset(["a"]))
    B = trivial_groupoid(Poset(["a", "b"]))
    w = is_enlargement(A, B)
    assert not w
    assert w.report.has("enlargement.connect")


def test_missing_lower_object_breaks_ideal(klein):
    G = klein[1]
    w = is_enlargement(G.full_subgroupoid(["e"]), G)
    assert w.report.has("enlargement.ideal")


def test_object_inclusion_gives_singleton_classes(klein):
    G = klein[1]
    inc = inclusion(trivial_groupoid(G.objects), G)
    T = tensor_poset(inc)
    assert all(len(members) == 1 for members in T.classes.values())
    assert len(T.classes) == len(G.arrows)


def test_arrows_identify_their_endpoints():
    for seed in range(10):
        phi = random_instance(seed, with_normal=False).functor
        if not star_class(phi).injective:
            continue
        T = tensor_poset(phi)
        U = phi.source
        for u in U.arrows:
            assert T.cls(U.dom(u), phi(u)) == T.cls(U.cod(u), phi(U.cod(u)))


def test_identity_enlarges_to_itself(klein):
    H = klein[2]
    me = maximum_enlargement(identity_functor(H))
    assert find_isomorphism(me.groupoid, H) is not None
    assert is_isomorphism(me.pi)


def test_universal_map_into_itself_is_identity(klein):
    _, G, _, _, _ = klein
    phi = inclusion(trivial_groupoid(G.objects), G)
    me = maximum_enlargement(phi)
    um = universal_map(phi, me.i, me.pi, enlargement=me)
    assert um.nu.mapping == {a: a for a in me.groupoid.arrows}
    assert um.solutions == 1


def test_non_immersion_is_refused(klein):
    p = klein[3]
    with pytest.raises(PreconditionError):
        tensor_poset(p)


def test_non_immersion_tensor_stays_antisymmetric(klein):
    # finite groupoids never join strictly comparable objects, so the order
    # on classes is a partial order even without star-injectivity
    T = tensor_poset(klein[3], allow_non_immersion=True)
    assert T.antisymmetric and not T.violations


def test_triple_factorization_of_klein(klein):
    p = klein[3]
    tf = triple_factorization(p)
    assert tf.varpi.then(tf.i).then(tf.pi).mapping == p.mapping
    assert star_class(tf.pi).bijective


def test_tensor_order_is_antisymmetric_on_random_non_immersions():
    seen = 0
    for seed in range(400):
        phi = random_instance(seed, with_normal=False, with_interval=seed % 2 == 0).functor
        if star_class(phi).injective:
            continue
        T = tensor_poset(phi, allow_non_immersion=True)
        assert T.antisymmetric, seed
        seen += 1
        if seen == 20:
            break
    assert seen == 20
