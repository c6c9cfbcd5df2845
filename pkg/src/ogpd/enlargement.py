"""Enlargements, the tensor poset ``U_0 (x) OmegaH`` and the maximum enlargement.

For a star-injective ``phi: U -> H`` the groupoid ``H |x (U_0 (x) OmegaH)``
contains ``U`` as an enlargement and covers ``H``; every other factorization
of ``phi`` as an embedding followed by a covering receives a unique map from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .action import GroupoidAction, SemidirectProduct, semidirect_product
from .core import OrderedGroupoid, Poset, ValidationReport, canon, csorted, trivial_groupoid
from .errors import InvariantBreach, PreconditionError
from .functor import (
    OrderedFunctor,
    inclusion,
    is_embedding,
    iter_functors,
    star_class,
)
from .quotient import Factorization, factorize
from .search import as_budget


# ---------------------------------------------------------------------------
# the enlargement predicate


@dataclass
class EnlargementWitness:
    """Outcome of :func:`is_enlargement`; truthy exactly when all three conditions hold."""

    sub: OrderedGroupoid
    whole: OrderedGroupoid
    inclusion: OrderedFunctor | None
    connecting: dict
    report: ValidationReport

    def __bool__(self):
        return self.report.passed

    def __str__(self):
        if self.report.passed:
            return f"enlargement ({len(self.connecting)} connecting arrows)"
        return "not an enlargement: " + "; ".join(str(v) for v in self.report.violations)


def is_enlargement(A: OrderedGroupoid, B: OrderedGroupoid) -> EnlargementWitness:
    """Check ``A`` is an order ideal on objects, full in ``B`` over ``A_0``, and reaches every object.

    Connecting arrows are the canonically least arrows from each object of
    ``B`` into ``A_0``.
    """
    rep = ValidationReport()
    stray = [a for a in A.arrows if a not in B]
    if stray:
        rep.add("enlargement.subset", (stray[0],), "arrow of A missing from B")
        return EnlargementWitness(A, B, None, {}, rep)
    for a in A.arrows:
        if A.dom(a) != B.dom(a) or A.cod(a) != B.cod(a):
            rep.add("enlargement.subset", (a,), "endpoints differ in A and B")
    for a in A.arrows:
        for b in A.out_arrows(A.cod(a)):
            if A.compose(a, b) != B.compose(a, b):
                rep.add("enlargement.subset", (a, b), "composites differ in A and B")
    if not rep.passed:
        return EnlargementWitness(A, B, None, {}, rep)
    A0 = frozenset(A.objects)
    for e in csorted(A0):
        for x in B.objects.down(e):
            if x not in A0:
                rep.add("enlargement.ideal", (x, e), "object below A_0 is not in A_0")
    for b in B.arrows:
        if B.dom(b) in A0 and B.cod(b) in A0 and b not in A:
            rep.add("enlargement.full", (b,), "arrow between A-objects is not in A")
    connecting = {}
    for e in B.objects:
        found = [b for b in B.star(e) if B.cod(b) in A0]
        if found:
            connecting[e] = csorted(found)[0]
        else:
            rep.add("enlargement.connect", (e,), "no arrow from this object into A_0")
    inc = None
    if rep.passed:
        inc = inclusion(A, B, name="enlargement")
        if not is_embedding(inc):
            rep.add("enlargement.order", (), "A does not carry the induced order")
    return EnlargementWitness(A, B, inc, connecting, rep)


# ---------------------------------------------------------------------------
# the tensor poset


@dataclass
class TensorPoset:
    """Classes ``e (x) h`` of pairs with ``e phi = h d``, their order and the right ``H``-action.

    Classes are named by their canonically least pair.
    """

    phi: OrderedFunctor
    classes: dict  # representative pair -> frozenset of pairs
    class_of: dict  # pair -> representative
    poset: Poset
    act: dict  # (class, h) -> class
    omega: dict  # class -> object of H
    antisymmetric: bool = True
    violations: list = field(default_factory=list)

    def cls(self, e, h):
        return self.class_of[(e, h)]

    def action(self) -> GroupoidAction:
        H = self.phi.target
        return GroupoidAction(H, trivial_groupoid(self.poset, name="U0(x)OmegaH"), self.omega, self.act,
                              name="tensor")


def _tensor_classes(phi: OrderedFunctor):
    U, H = phi.source, phi.target
    pairs = [(e, h) for e in U.objects for h in H.star(phi(e))]
    parent = {p: p for p in pairs}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    # (e, (u phi) k) ~ (f, k) for u in U(e, f)
    for u in U.arrows:
        e, f = U.dom(u), U.cod(u)
        for k in H.star(phi(f)):
            a, b = find((e, H.compose(phi(u), k))), find((f, k))
            if a != b:
                lo, hi = sorted((a, b), key=canon)
                parent[hi] = lo
    groups: dict = {}
    for p in pairs:
        groups.setdefault(find(p), []).append(p)
    classes, class_of = {}, {}
    for members in groups.values():
        rep = csorted(members)[0]
        classes[rep] = frozenset(members)
        for p in members:
            class_of[p] = rep
    return classes, class_of


def tensor_poset(phi: OrderedFunctor, *, allow_non_immersion=False) -> TensorPoset:
    """Build ``U_0 (x) OmegaH`` for ``phi: U -> H``.

    Non-star-injective ``phi`` is refused unless ``allow_non_immersion`` is
    set, in which case the relation is still computed and ``antisymmetric``
    records whether it happens to be a partial order.
    """
    phi.require_valid()
    if not star_class(phi).injective and not allow_non_immersion:
        raise PreconditionError("tensor poset needs a star-injective functor")
    U, H = phi.source, phi.target
    classes, class_of = _tensor_classes(phi)

    def below(C, D):
        e, k = D
        return any(U.objects.leq(x, e) and H.leq(l, k) for x, l in classes[C])

    reps = csorted(classes)
    rel = {}
    for C in reps:
        for D in reps:
            v = below(C, D)
            for e, k in classes[D]:
                w = any(U.objects.leq(x, e) and H.leq(l, k) for x, l in classes[C])
                if w != v:
                    raise InvariantBreach(f"order on {C!r}, {D!r} depends on the representative")
            rel[(C, D)] = v
    violations = []
    for C in reps:
        for D in reps:
            if C != D and rel[(C, D)] and rel[(D, C)]:
                violations.append((C, D))
            if rel[(C, D)]:
                for E in reps:
                    if rel[(D, E)] and not rel[(C, E)]:
                        raise InvariantBreach(f"tensor order is not transitive at {C!r}, {D!r}, {E!r}")
    if violations and not allow_non_immersion:
        raise InvariantBreach(f"tensor order not antisymmetric for a star-injective functor: {violations[0]!r}")
    pairs = [(C, D) for C in reps for D in reps if rel[(C, D)]]
    poset = Poset(reps, pairs, check=not violations)

    omega = {C: H.cod(C[1]) for C in reps}
    act = {}
    for C in reps:
        for m in H.star(omega[C]):
            images = {class_of[(f, H.compose(h, m))] for f, h in classes[C]}
            if len(images) != 1:
                raise InvariantBreach(f"action of {m!r} on {C!r} depends on the representative")
            act[(C, m)] = images.pop()
    return TensorPoset(phi, classes, class_of, poset, act, omega, not violations, violations)


# ---------------------------------------------------------------------------
# the maximum enlargement


@dataclass
class MaximumEnlargement:
    phi: OrderedFunctor
    tensor: TensorPoset
    sdp: SemidirectProduct
    groupoid: OrderedGroupoid
    i: OrderedFunctor
    pi: OrderedFunctor
    witness: EnlargementWitness


def maximum_enlargement(phi: OrderedFunctor) -> MaximumEnlargement:
    """``H |x (U_0 (x) OmegaH)`` with ``i: u -> (u phi, u d (x) u phi)`` and the projection ``pi``."""
    if not star_class(phi.require_valid()).injective:
        raise PreconditionError("maximum enlargement needs a star-injective functor")
    U = phi.source
    T = tensor_poset(phi)
    sdp = semidirect_product(T.action(), name="H~")
    Ht, pi = sdp.groupoid, sdp.projection
    i = OrderedFunctor(U, Ht, {u: (phi(u), T.cls(U.dom(u), phi(u))) for u in U.arrows}, name="i")
    if not is_embedding(i):
        raise InvariantBreach("i is not an ordered embedding")
    if not star_class(pi).bijective:
        raise InvariantBreach("projection from the enlargement is not a covering")
    if i.then(pi).mapping != phi.mapping:
        raise InvariantBreach("phi != i pi")
    Ui = Ht.subgroupoid(i.image(), name="U i")
    witness = is_enlargement(Ui, Ht)
    if not witness:
        raise InvariantBreach(f"U i is not an enlargement: {witness}")
    return MaximumEnlargement(phi, T, sdp, Ht, i, pi, witness)


@dataclass
class UniversalMap:
    nu: OrderedFunctor
    solutions: int
    budget_used: int


def universal_map(phi: OrderedFunctor, j: OrderedFunctor, xi: OrderedFunctor, *,
                  enlargement: MaximumEnlargement | None = None, budget=None) -> UniversalMap:
    """The functor ``nu: H~ -> C`` with ``j = i nu`` and ``pi = nu xi``, checked unique by search.

    A search that runs out of budget raises :class:`BudgetExceeded`; a second
    solution raises :class:`InvariantBreach`.
    """
    if not is_embedding(j):
        raise PreconditionError("j is not an ordered embedding")
    if not star_class(xi.require_valid()).bijective:
        raise PreconditionError("xi is not a covering")
    if j.target is not xi.source and j.target != xi.source:
        raise PreconditionError("j and xi do not compose")
    if j.then(xi).mapping != phi.mapping:
        raise PreconditionError("phi != j xi")
    me = enlargement or maximum_enlargement(phi)
    Ht, C, T = me.groupoid, xi.source, me.tensor

    def star_lift(x, h):
        hits = [c for c in C.star(x) if xi(c) == h]
        if len(hits) != 1:
            raise InvariantBreach(f"covering has {len(hits)} lifts of {h!r} at {x!r}")
        return hits[0]

    def nu_of(h, e, k):
        c = star_lift(j(e), k)
        q_inv = star_lift(C.cod(c), xi.target.inv(h))
        return C.inv(q_inv)

    m = {}
    for s in Ht.arrows:
        h, D = s
        images = {nu_of(h, e, k) for e, k in T.classes[D]}
        if len(images) != 1:
            raise InvariantBreach(f"nu depends on the representative of {D!r}")
        m[s] = images.pop()
    nu = OrderedFunctor(Ht, C, m, name="nu").require_valid()
    if me.i.then(nu).mapping != j.mapping:
        raise InvariantBreach("j != i nu")
    if nu.then(xi).mapping != me.pi.mapping:
        raise InvariantBreach("pi != nu xi")

    budget = as_budget(budget)
    cand = {s: [c for c in C.arrows if xi(c) == me.pi(s)] for s in Ht.arrows}
    fixed = {me.i(u): j(u) for u in phi.source.arrows}
    found = 0
    for sol in iter_functors(Ht, C, budget=budget, candidates=cand, fixed=fixed):
        found += 1
        if sol != m:
            raise InvariantBreach("a second functor satisfies both equations")
    if found != 1:
        raise InvariantBreach(f"exhaustive search found {found} solutions")
    return UniversalMap(nu, found, budget.used)


# ---------------------------------------------------------------------------
# the triple factorization


@dataclass
class TripleFactorization:
    phi: OrderedFunctor
    factorization: Factorization
    enlargement: MaximumEnlargement

    @property
    def varpi(self) -> OrderedFunctor:
        return self.factorization.varpi

    @property
    def i(self) -> OrderedFunctor:
        return self.enlargement.i

    @property
    def pi(self) -> OrderedFunctor:
        return self.enlargement.pi


def triple_factorization(phi: OrderedFunctor) -> TripleFactorization:
    """``phi`` as quotient fibration, then enlargement embedding, then covering."""
    fac = factorize(phi)
    me = maximum_enlargement(fac.psi)
    if not star_class(fac.varpi).surjective:
        raise InvariantBreach("quotient map is not a fibration")
    composite = fac.varpi.then(me.i).then(me.pi)
    if composite.mapping != phi.mapping:
        raise InvariantBreach("varpi i pi != phi")
    return TripleFactorization(phi, fac, me)


__all__ = [
    "EnlargementWitness",
    "MaximumEnlargement",
    "TensorPoset",
    "TripleFactorization",
    "UniversalMap",
    "is_enlargement",
    "maximum_enlargement",
    "tensor_poset",
    "triple_factorization",
    "universal_map",
]
