"""The triple model of ``OGPD(I, H)``, mapping cocylinders and the derived groupoid.

Triple-model arrows are ``(h0, t, h1)``: a transformation from the functor
picking ``h0`` to the one picking ``h1``, with component ``t`` at ``0`` and
``h0^-1 t h1`` at ``1``.  Objects are the identity triples ``(h, h d, h)``.
Cocylinder arrows ``(h0, a, h1)`` pair an arrow ``a`` of ``G`` with such a
triple over ``a phi``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import GroupoidAction, SemidirectProduct, semidirect_product
from .builders import INTERVAL_ARROW, interval
from .core import OrderedGroupoid, trivial_groupoid
from .enlargement import is_enlargement
from .errors import InvariantBreach, PreconditionError
from .functor import (
    OrderedFunctor, is_isomorphism, kernel, mapping_groupoid, pullback, star_class,
)
from .homotopy import (
    HomotopySquare, _finish, lift_eps, lift_through_immersion, omega_poset, register_lift,
)
from .quotient import Factorization, factorize


# ---------------------------------------------------------------------------
# OGPD(I, H) as triples


@dataclass
class TripleModel:
    H: OrderedGroupoid
    groupoid: OrderedGroupoid
    eps0: OrderedFunctor
    eps1: OrderedFunctor

    def object_of(self, h):
        return (h, self.H.dom(h), h)


def interval_mapping_groupoid(H: OrderedGroupoid) -> TripleModel:
    H.require_valid()
    arrows = [
        (h0, t, h1)
        for h0 in H.arrows
        for t in H.star(H.dom(h0))
        for h1 in H.star(H.cod(t))
    ]
    objects = [(h, H.dom(h), h) for h in H.arrows]

    def leq(s, u):
        return all(H.leq(x, y) for x, y in zip(s, u))

    T = OrderedGroupoid.from_operations(
        objects, leq, arrows,
        lambda s: (s[0], H.dom(s[0]), s[0]),
        lambda s: (s[2], H.dom(s[2]), s[2]),
        lambda s, u: (s[0], H.compose(s[1], u[1]), u[2]),
        lambda s: (s[2], H.inv(s[1]), s[0]),
        leq,
        name=f"OGPD(I,{H.name or 'H'})",
    )
    model = TripleModel(H, T, None, None)
    model.eps0 = OrderedFunctor(T, H, {s: s[1] for s in T.arrows}, name="eps0", cert=("eps", 0, H))
    model.eps1 = OrderedFunctor(
        T, H, {s: H.compose(H.inv(s[0]), s[1], s[2]) for s in T.arrows}, name="eps1", cert=("eps", 1, H),
    )
    return model


def triple_iso(model: TripleModel, budget=None) -> OrderedFunctor:
    """Explicit isomorphism from the triple model onto ``mapping_groupoid(I, H)``."""
    H = model.H
    I = interval()
    MG = mapping_groupoid(I, H, budget=budget)
    by_iota = {f(INTERVAL_ARROW): f for f in MG.functors}
    m = {}
    for s in model.groupoid.arrows:
        h0, t, h1 = s
        comps = {0: t, 1: H.compose(H.inv(h0), t, h1)}
        m[s] = MG.arrow_of(by_iota[h0], comps)
    iso = OrderedFunctor(model.groupoid, MG.groupoid, m, name="triples")
    if not is_isomorphism(iso):
        raise InvariantBreach("triple model is not isomorphic to OGPD(I, H)")
    return iso


def loops_iso(H: OrderedGroupoid) -> OrderedFunctor:
    """``h -> (h, h d, h)`` from ``Omega H`` (a trivial groupoid) onto ``ker eps0 & ker eps1``."""
    model = interval_mapping_groupoid(H)
    T = model.groupoid
    k0, k1 = kernel(model.eps0), kernel(model.eps1)
    both = k0 & k1
    # ker eps0 is the groupoid of coinitial pairs (h0, h1) with (h0, h1)(h1, h2) = (h0, h2)
    for s in k0:
        for u in T.out_arrows(T.cod(s)):
            if u in k0 and T.compose(s, u) != (s[0], s[1], u[2]):
                raise InvariantBreach("pair composition law fails in ker eps0")
    Omega = trivial_groupoid(omega_poset(H), name="OmegaH")
    inter = T.subgroupoid(both, name="ker0&ker1")
    m = {h: model.object_of(h) for h in H.arrows}
    phi = OrderedFunctor(Omega, inter, m, name="loops")
    if not is_isomorphism(phi):
        raise InvariantBreach("Omega H is not isomorphic to ker eps0 & ker eps1")
    return phi


# ---------------------------------------------------------------------------
# mapping cocylinder


@dataclass
class Cocylinder:
    phi: OrderedFunctor
    groupoid: OrderedGroupoid
    i_phi: OrderedFunctor
    p_phi: OrderedFunctor
    q_phi: OrderedFunctor

    def connecting_arrow(self, obj):
        """``<h, e, e phi>`` from the object ``(e, h)`` into the image of ``i_phi``."""
        h, e, _ = obj
        return (h, e, self.phi(e))


def mapping_cocylinder(phi: OrderedFunctor) -> Cocylinder:
    phi.require_valid()
    G, H = phi.source, phi.target
    # h0 and h1 start where a phi does and where it ends: h0^-1 (a phi) h1 is then defined
    arrows = [
        (h0, a, h1)
        for a in G.arrows
        for h0 in H.star(H.dom(phi(a))) for h1 in H.star(H.cod(phi(a)))
    ]
    objects = [(h, e, h) for e in G.objects for h in H.star(phi(e))]

    def leq(s, u):
        return H.leq(s[0], u[0]) and G.leq(s[1], u[1]) and H.leq(s[2], u[2])

    M = OrderedGroupoid.from_operations(
        objects, leq, arrows,
        lambda s: (s[0], G.dom(s[1]), s[0]),
        lambda s: (s[2], G.cod(s[1]), s[2]),
        lambda s, u: (s[0], G.compose(s[1], u[1]), u[2]),
        lambda s: (s[2], G.inv(s[1]), s[0]),
        leq,
        name=f"M^{phi.name or 'phi'}",
    )
    cyl = Cocylinder(phi, M, None, None, None)
    cyl.i_phi = OrderedFunctor(
        G, M, {g: (phi(G.dom(g)), g, phi(G.cod(g))) for g in G.arrows}, name="i_phi",
    )
    cyl.p_phi = OrderedFunctor(
        M, H, {s: H.compose(H.inv(s[0]), phi(s[1]), s[2]) for s in M.arrows},
        name="p_phi", cert=("p_phi", cyl),
    )
    cyl.q_phi = OrderedFunctor(M, G, {s: s[1] for s in M.arrows}, name="q_phi", cert=("q_phi", cyl))
    if cyl.i_phi.then(cyl.p_phi).mapping != phi.mapping:
        raise InvariantBreach("phi != i_phi p_phi")
    return cyl


def cocylinder_as_pullback(phi: OrderedFunctor, model: TripleModel | None = None) -> OrderedGroupoid:
    """``M^phi`` built as the generic pullback of ``eps0`` along ``phi``, relabelled to triples."""
    model = model or interval_mapping_groupoid(phi.target)
    P, _, _ = pullback(phi, model.eps0)
    return P.relabel(lambda s: (s[1][0], s[0], s[1][2]), name="pullback")


@register_lift("p_phi")
def lift_p_phi(sq: HomotopySquare) -> OrderedFunctor:
    """For ``af = <h_a, g_a, k_a>`` and ``l_y = (y, iota)F``: ``(a, iota) -> <h_a, g_a, k_a l_{a r}>``."""
    cert = sq.p.cert
    if cert is None or cert[0] != "p_phi":
        raise PreconditionError("p is not a cocylinder fibration p_phi")
    cyl: Cocylinder = cert[1]
    H = cyl.phi.target
    A = sq.A
    choice = {}
    for y in A.objects:
        k, e, _ = sq.f(y)
        l = sq.path(y)
        if H.dom(l) != H.cod(k):
            raise InvariantBreach("l_y d != k_y r")
        choice[y] = (k, e, H.compose(k, l))

    def formula(a):
        h, g, k = sq.f(a)
        l = sq.path(A.cod(a))
        if H.dom(l) != H.cod(k):
            raise InvariantBreach("l_{a r} d != k_a r")
        return (h, g, H.compose(k, l))

    return _finish(sq, choice, formula, "F~p_phi")


@register_lift("q_phi")
def lift_q_phi(sq: HomotopySquare) -> OrderedFunctor:
    """Lift against ``q_phi`` by lifting the image square against ``eps0`` and pairing."""
    from .homotopy import make_homotopy

    cert = sq.p.cert
    if cert is None or cert[0] != "q_phi":
        raise PreconditionError("p is not a cocylinder projection q_phi")
    cyl: Cocylinder = cert[1]
    phi = cyl.phi
    H = phi.target
    model = interval_mapping_groupoid(H)
    A = sq.A
    to_triples = OrderedFunctor(
        cyl.groupoid, model.groupoid, {s: (s[0], phi(s[1]), s[2]) for s in cyl.groupoid.arrows},
        name="pr2",
    )
    f2 = sq.f.then(to_triples)
    F2 = make_homotopy(A, model.eps0, f2, {x: phi(sq.path(x)) for x in A.objects})
    lifted = lift_eps(HomotopySquare(A, model.eps0, f2, F2))
    choice = {}
    for y in A.objects:
        h0, _, h1 = lifted((y, INTERVAL_ARROW))
        choice[y] = (h0, sq.path(y), h1)
    return _finish(sq, choice, None, "F~q_phi")


# ---------------------------------------------------------------------------
# the derived groupoid


@dataclass
class Derived:
    phi: OrderedFunctor
    groupoid: OrderedGroupoid
    action: GroupoidAction


def derived_groupoid(phi: OrderedFunctor) -> Derived:
    """Pairs ``(a, h)`` with ``(a phi) r = h d``; ``(a, h)(b, k) = (ab, k)``; ``H`` acts by ``(a, h) <| h' = (a, hh')``."""
    phi.require_valid()
    G, H = phi.source, phi.target
    arrows = [(a, h) for a in G.arrows for h in H.star(H.cod(phi(a)))]
    objects = [(e, h) for e in G.objects for h in H.star(phi(e))]

    def dom(s):
        a, h = s
        return (G.dom(a), H.compose(phi(a), h))

    def leq(s, u):
        return G.leq(s[0], u[0]) and H.leq(s[1], u[1])

    D = OrderedGroupoid.from_operations(
        objects, leq, arrows, dom,
        lambda s: (G.cod(s[0]), s[1]),
        lambda s, u: (G.compose(s[0], u[0]), u[1]),
        lambda s: (G.inv(s[0]), H.compose(phi(s[0]), s[1])),
        leq,
        name=f"Der({phi.name or 'phi'})",
    )
    omega = {s: H.cod(s[1]) for s in D.arrows}
    act = {(s, k): (s[0], H.compose(s[1], k)) for s in D.arrows for k in H.star(H.cod(s[1]))}
    return Derived(phi, D, GroupoidAction(H, D, omega, act, name="H on Der"))


def kernel_to_derived(cyl: Cocylinder, der: Derived) -> OrderedFunctor:
    """``<h0, a, h1> -> (a, h1)`` from ``ker p_phi`` onto ``Der(phi)``, checked to be an isomorphism."""
    M = cyl.groupoid
    K = M.subgroupoid(kernel(cyl.p_phi), name="ker p_phi")
    m = {s: (s[1], s[2]) for s in K.arrows}
    iso = OrderedFunctor(K, der.groupoid, m, name="ker->Der")
    if not is_isomorphism(iso):
        raise InvariantBreach("ker p_phi is not isomorphic to Der(phi)")
    H, phi = cyl.phi.target, cyl.phi
    for a, h in der.groupoid.arrows:
        if (H.compose(phi(a), h), a, h) not in K:
            raise InvariantBreach("Der(phi) pair does not come from the kernel")
    return iso


@dataclass
class GammaIso:
    sdp: SemidirectProduct
    gamma: OrderedFunctor
    gamma_inv: OrderedFunctor


def gamma_iso(phi: OrderedFunctor, cyl: Cocylinder | None = None, der: Derived | None = None) -> GammaIso:
    """``(k, (g, h)) -> <(g phi) h k^-1, g, h>`` from ``H |x Der(phi)`` to ``M^phi`` and its inverse."""
    cyl = cyl or mapping_cocylinder(phi)
    der = der or derived_groupoid(phi)
    H = phi.target
    sdp = semidirect_product(der.action, name="H|xDer")
    S, M = sdp.groupoid, cyl.groupoid
    fwd = {
        (k, (g, h)): (H.compose(phi(g), h, H.inv(k)), g, h) for k, (g, h) in S.arrows
    }
    back = {s: (H.compose(H.inv(s[0]), phi(s[1]), s[2]), (s[1], s[2])) for s in M.arrows}
    gamma = OrderedFunctor(S, M, fwd, name="gamma")
    gamma_inv = OrderedFunctor(M, S, back, name="gamma^-1")
    if any(back[fwd[s]] != s for s in S.arrows) or any(fwd[back[s]] != s for s in M.arrows):
        raise InvariantBreach("gamma and its inverse are not mutually inverse")
    if not is_isomorphism(gamma):
        raise InvariantBreach("gamma is not an ordered isomorphism")
    if gamma.then(cyl.p_phi).mapping != sdp.projection.mapping:
        raise InvariantBreach("gamma does not carry the projection to p_phi")
    return GammaIso(sdp, gamma, gamma_inv)


# ---------------------------------------------------------------------------
# the pipeline


@dataclass
class PipelineResult:
    cocylinder: Cocylinder
    factorization: Factorization
    derived: Derived
    gamma: GammaIso
    witness: object


def fibration_theorem_pipeline(phi: OrderedFunctor, budget=None, lift_squares=()) -> PipelineResult:
    """Enlargement ``i_phi``, then ``p_phi`` split into quotient map and covering; every stage checked.

    ``lift_squares`` are sample squares against the quotient map; each is
    lifted through the immersion ``psi`` using the ``p_phi`` lift.
    """
    cyl = mapping_cocylinder(phi)
    M = cyl.groupoid
    Gi = M.subgroupoid(cyl.i_phi.image(), name="G i_phi")
    witness = is_enlargement(Gi, M)
    if not witness:
        raise InvariantBreach(f"G i_phi is not an enlargement of M^phi: {witness}")
    fac = factorize(cyl.p_phi)
    if not star_class(fac.varpi).surjective or not star_class(fac.psi).bijective:
        raise InvariantBreach("p_phi did not split as fibration then covering")
    if cyl.i_phi.then(fac.varpi).then(fac.psi).mapping != phi.mapping:
        raise InvariantBreach("composite of the three stages is not phi")
    for sq in lift_squares:
        lift_through_immersion(sq, fac.psi, cyl.p_phi, lift_p_phi)
    der = derived_groupoid(phi)
    kernel_to_derived(cyl, der)
    g = gamma_iso(phi, cyl, der)
    # q_phi on Der(phi) is (a, h) -> a
    G = phi.source
    q_der = OrderedFunctor(der.groupoid, G, {s: s[0] for s in der.groupoid.arrows}, name="q|Der")
    if not star_class(q_der).bijective:
        raise InvariantBreach("q_phi restricted to Der(phi) is not a covering")
    if kernel(q_der) != frozenset(der.groupoid.objects):
        raise InvariantBreach("ker q_phi on Der(phi) is not the object set")
    return PipelineResult(cyl, fac, der, g, witness)
