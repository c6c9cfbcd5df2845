"""Ordered right actions of groupoids, semidirect products, and the covering/action dictionary."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from .builders import CosetPresheaf, interval, random_coset_presheaf, random_poset, ambient_group
from .core import OrderedGroupoid, Poset, ValidationReport, csorted, product, trivial_groupoid
from .errors import InvariantBreach, PreconditionError
from .functor import OrderedFunctor, is_isomorphism, star_class
from .homotopy import HomotopySquare, _finish, register_lift


class GroupoidAction:
    """Right action of ``actor`` on ``carrier`` through the moment map ``omega``.

    ``omega`` sends every arrow of the carrier to an object of the actor (it
    is a functor into the trivial groupoid on the actor's objects); ``act``
    maps ``(a, g)`` to ``a <| g`` whenever ``a omega = g d``.
    """

    def __init__(self, actor: OrderedGroupoid, carrier: OrderedGroupoid, omega: Mapping, act: Mapping,
                 *, check=True, name=None):
        self.actor = actor
        self.carrier = carrier
        self.omega = dict(omega)
        self.act = dict(act)
        self.name = name
        self._report = None
        if check:
            self.require_valid()

    def __call__(self, a, g):
        return self.act[(a, g)]

    def report(self) -> ValidationReport:
        if self._report is None:
            self._report = validate_action(self)
        return self._report

    def require_valid(self):
        self.report().raise_if_failed("action")
        return self

    def omega_functor(self) -> OrderedFunctor:
        G0 = trivial_groupoid(self.actor.objects, name="G0")
        return OrderedFunctor(self.carrier, G0, self.omega, name="omega")

    def table(self) -> dict:
        return dict(self.act)

    @property
    def on_poset(self) -> bool:
        return self.carrier.is_trivial()


def validate_action(act: GroupoidAction) -> ValidationReport:
    """Exhaustive check of the five action axioms plus well-typedness of omega."""
    rep = ValidationReport()
    G, A, w, t = act.actor, act.carrier, act.omega, act.act
    for a in A.arrows:
        if a not in w or w[a] not in G.objects:
            rep.add("omega.total", (a,), "carrier arrow without a moment")
            return rep
    for a in A.arrows:
        if w[a] != w[A.dom(a)] or w[a] != w[A.cod(a)]:
            rep.add("omega.functor", (a,), "moment differs along an arrow")
        for b in A.up(a):
            if not G.objects.leq(w[a], w[b]):
                rep.add("omega.order", (a, b), "moment map is not order-preserving")
    for (a, g), v in t.items():
        if a not in A or g not in G or v not in A:
            rep.add("act.references", (a, g), "action table names an unknown arrow")
            return rep
    for a in A.arrows:
        for g in G.arrows:
            defined = (a, g) in t
            if defined != (w[a] == G.dom(g)):
                rep.add("act.domain", (a, g), "a <| g defined exactly when a omega = g d")
            elif defined and w[t[(a, g)]] != G.cod(g):
                rep.add("act.moment", (a, g), "(a <| g) omega != g r")
    if not rep.passed:
        return rep
    for a in A.arrows:
        for g in G.star(w[a]):
            ag = t[(a, g)]
            if A.dom(ag) != t[(A.dom(a), g)] or A.cod(ag) != t[(A.cod(a), g)]:
                rep.add("act.endpoints", (a, g), "a <| g does not run from a d <| g to a r <| g")
            for h in G.star(G.cod(g)):
                if t[(a, G.compose(g, h))] != t[(ag, h)]:
                    rep.add("act.compose", (a, g, h), "a <| gh != (a <| g) <| h")
        if t[(a, w[a])] != a:
            rep.add("act.identity", (a,), "a <| a omega != a")
    if not rep.passed:
        return rep
    for a in A.arrows:
        for b in A.out_arrows(A.cod(a)):
            ab = A.compose(a, b)
            for g in G.star(w[a]):
                if t[(ab, g)] != A.compose(t[(a, g)], t[(b, g)]):
                    rep.add("act.multiplicative", (a, b, g), "(ab) <| g != (a <| g)(b <| g)")
    for a in A.arrows:
        for g in G.star(w[a]):
            for b in A.up(a):
                for h in G.up(g):
                    if (b, h) in t and not A.leq(t[(a, g)], t[(b, h)]):
                        rep.add("act.order", (a, g, b, h), "a <= b, g <= h but a <| g not <= b <| h")
    return rep


def canonical_action(G: OrderedGroupoid) -> GroupoidAction:
    """``G`` acting on its object poset by ``x <| g = g r``."""
    G0 = trivial_groupoid(G.objects, name="G0")
    act = {(x, g): G.cod(g) for x in G.objects for g in G.star(x)}
    return GroupoidAction(G, G0, {x: x for x in G.objects}, act, name="canonical")


def product_action(s: GroupoidAction, t: GroupoidAction) -> GroupoidAction:
    """``G x G'`` acting componentwise on ``A x A'``."""
    G = product(s.actor, t.actor)
    A = product(s.carrier, t.carrier)
    omega = {(a, b): (s.omega[a], t.omega[b]) for a, b in A.arrows}
    act = {}
    for a, b in A.arrows:
        for g in s.actor.star(s.omega[a]):
            for h in t.actor.star(t.omega[b]):
                act[((a, b), (g, h))] = (s.act[(a, g)], t.act[(b, h)])
    return GroupoidAction(G, A, omega, act, name="product")


# ---------------------------------------------------------------------------
# semidirect products


@dataclass
class SemidirectProduct:
    action: GroupoidAction
    groupoid: OrderedGroupoid
    projection: OrderedFunctor

    def object_of(self, x):
        """The object of ``G |x A`` over the carrier object ``x``."""
        return (self.action.omega[x], x)


def semidirect_product(act: GroupoidAction, name=None) -> SemidirectProduct:
    """``G |x A``: arrows ``(g, a)`` with ``a omega = g r`` and ``(g, a)(h, b) = (gh, (a <| h) b)``."""
    act.require_valid()
    G, A, w, t = act.actor, act.carrier, act.omega, act.act
    arrows = [(g, a) for a in A.arrows for g in G.in_arrows(w[a])]
    objects = [(w[x], x) for x in A.objects]

    def dom(ga):
        g, a = ga
        return (G.dom(g), A.dom(t[(a, G.inv(g))]))

    def cod(ga):
        g, a = ga
        return (G.cod(g), A.cod(a))

    def mul(ga, hb):
        (g, a), (h, b) = ga, hb
        return (G.compose(g, h), A.compose(t[(a, h)], b))

    def inv(ga):
        g, a = ga
        gi = G.inv(g)
        return (gi, A.inv(t[(a, gi)]))

    def leq(s, u):
        return G.leq(s[0], u[0]) and A.leq(s[1], u[1])

    S = OrderedGroupoid.from_operations(
        objects, leq, arrows, dom, cod, mul, inv, leq,
        name=name or f"{G.name or 'G'}|x{A.name or 'A'}",
    )
    sdp = SemidirectProduct(act, S, None)
    sdp.projection = OrderedFunctor(S, G, {s: s[0] for s in S.arrows}, name="pi", cert=("sdp", sdp))
    return sdp


@register_lift("sdp")
def lift_sdp_projection(sq: HomotopySquare) -> OrderedFunctor:
    """Lift against the projection ``pi: (g, a) -> g``.

    For ``bf = (g_b, a_b)`` and ``h_y = (y, iota)F`` the lift is
    ``(b, iota) -> (g_b h_{b r}, a_b <| h_{b r})``.
    """
    cert = sq.p.cert
    if cert is None or cert[0] != "sdp":
        raise PreconditionError("p is not the projection of a semidirect product")
    sdp: SemidirectProduct = cert[1]
    G, t = sdp.action.actor, sdp.action.act
    A = sq.A
    choice = {}
    for y in A.objects:
        e, u = sq.f(y)
        h = sq.path(y)
        choice[y] = (h, t[(u, h)])

    def formula(b):
        g, a = sq.f(b)
        h = sq.path(A.cod(b))
        return (G.compose(g, h), t[(a, h)])

    Ft = _finish(sq, choice, formula, "F~sdp")
    for b in A.arrows:
        if sq.p(Ft((b, "iota"))) != sq.F((b, "iota")):
            raise InvariantBreach("formula lift does not project to F")
    return Ft


# ---------------------------------------------------------------------------
# coverings and actions


def covering_to_action(gamma: OrderedFunctor) -> GroupoidAction:
    """Action of ``G`` on the object poset of ``C``: ``x <| g`` is the end of the unique star lift of ``g``."""
    if not star_class(gamma).bijective:
        raise PreconditionError("functor is not a covering")
    C, G = gamma.source, gamma.target
    P = trivial_groupoid(C.objects, name="C0")
    act = {}
    for x in C.objects:
        for c in C.star(x):
            act[(x, gamma(c))] = C.cod(c)
    return GroupoidAction(G, P, {x: gamma(x) for x in C.objects}, act, name="from covering")


def action_to_covering_roundtrip(gamma: OrderedFunctor) -> tuple[OrderedFunctor, SemidirectProduct]:
    """Isomorphism ``C -> G |x C_0`` over ``G`` given by ``c -> (c gamma, c r)``."""
    act = covering_to_action(gamma)
    sdp = semidirect_product(act)
    C = gamma.source
    iso = OrderedFunctor(C, sdp.groupoid, {c: (gamma(c), C.cod(c)) for c in C.arrows}, name="c->(cg,cr)")
    if not is_isomorphism(iso):
        raise InvariantBreach("c -> (c gamma, c r) is not an isomorphism")
    if iso.then(sdp.projection).mapping != gamma.mapping:
        raise InvariantBreach("isomorphism does not commute with the projections")
    return iso, sdp


def action_roundtrip_table(act: GroupoidAction) -> dict:
    """Recover a poset action from the covering ``G |x P -> G`` (carrier objects re-identified with ``P``)."""
    sdp = semidirect_product(act)
    back = covering_to_action(sdp.projection)
    return {(x[1], g): v[1] for (x, g), v in back.act.items()}


# ---------------------------------------------------------------------------
# random actions


def coset_action(Gc: CosetPresheaf, W: Mapping, G: OrderedGroupoid | None = None) -> GroupoidAction:
    """Action of the coset presheaf ``S/N`` on right cosets ``W_q s`` (``N_q <= W_q <= S_q``).

    Points are ``(q, min(W_q s))``; ``(q, W_q s) <= (q', W_q' s')`` when
    ``q <= q'`` and ``W_q' s' <= W_q s`` as sets.
    """
    K, Q = Gc.K, Gc.base
    G = G or Gc.groupoid()
    cosets = {}
    for q in Q:
        for s in sorted(Gc.S[q]):
            c = K.right_coset(W[q], s)
            cosets[(q, min(c))] = c
    points = csorted(cosets)
    leq = [(p, r) for p in points for r in points
           if Q.leq(p[0], r[0]) and cosets[r] <= cosets[p]]
    P = trivial_groupoid(Poset(points, leq), name="cosets")
    act = {}
    for p in points:
        q = p[0]
        for g in G.star(q):
            _, k = Gc.coset_of(g)
            c = K.right_coset(W[q], K.mul(p[1], k))
            act[(p, g)] = (q, min(c))
    return GroupoidAction(G, P, {p: p[0] for p in points}, act, name="coset action")


def random_coset_action(rng: random.Random, Gc: CosetPresheaf, G=None) -> GroupoidAction:
    K = Gc.K
    W = {q: rng.choice(K.subgroups_between(Gc.N[q], Gc.S[q])) for q in Gc.base}
    return coset_action(Gc, W, G)


def random_action(seed: int, *, objects=3, max_order=6, with_interval=None) -> GroupoidAction:
    """Seeded random poset action; sometimes crossed with the interval acting on its two objects."""
    rng = random.Random(seed)
    K = ambient_group(rng, max_order)
    Gc = random_coset_presheaf(rng, K, random_poset(rng, rng.randint(1, objects)))
    act = random_coset_action(rng, Gc)
    if with_interval is None:
        with_interval = rng.random() < 0.3
    if with_interval:
        act = product_action(act, canonical_action(interval()))
    return act


def random_covering(seed: int, **kw) -> OrderedFunctor:
    return semidirect_product(random_action(seed, **kw)).projection
