"""Normal ordered subgroupoids and the ordered quotient ``G // A``.

Two arrows are identified when each lies above a two-sided ``A``-translate
of the other; classes are composed through a nexus, a pair of arrows of
``A`` linking the end of one class to the start of the next.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import OrderedGroupoid, ValidationReport, canon, csorted
from .errors import InvariantBreach, PreconditionError
from .functor import OrderedFunctor, kernel, star_class


# ---------------------------------------------------------------------------
# normality


def is_normal(G: OrderedGroupoid, A: Iterable) -> ValidationReport:
    """Wide, closed, restriction-closed and closed under ``h^-1 a k`` for ``h, k`` with an upper bound."""
    rep = ValidationReport()
    A = frozenset(A)
    stray = [a for a in A if a not in G]
    if stray:
        rep.add("normal.subset", (stray[0],), "arrow not in the groupoid")
        return rep
    for x in G.objects:
        if x not in A:
            rep.add("normal.wide", (x,), "identity missing")
    for a in csorted(A):
        if G.inv(a) not in A:
            rep.add("normal.closed", (a,), "inverse missing")
        for b in G.out_arrows(G.cod(a)):
            if b in A and G.compose(a, b) not in A:
                rep.add("normal.closed", (a, b), "composite missing")
    for a in csorted(A):
        for e in G.objects.down(G.dom(a)):
            if G.restriction(e, a) not in A:
                rep.add("normal.restriction", (e, a), "restriction of a to e missing")
    for a in csorted(A):
        for h in G.out_arrows(G.dom(a)):
            for k in G.out_arrows(G.cod(a)):
                if h in A and k in A:
                    continue
                c = G.compose(G.inv(h), a, k)
                if c in A:
                    continue
                for g in G.up(h):
                    if g in G.up(k):
                        rep.add("normal.conjugation", (a, h, k, g), "h^-1 a k not in A although h, k <= g")
                        break
    return rep


@dataclass(frozen=True)
class Nexus:
    a: object
    p: object


def iter_nexuses(G: OrderedGroupoid, A: frozenset, e, f) -> Iterator[Nexus]:
    """Pairs ``(a, p)`` in ``A`` with ``a d <= e``, ``a r = f``, ``p d <= f``, ``p r = e``."""
    As = [a for a in G.in_arrows(f) if a in A and G.objects.leq(G.dom(a), e)]
    Ps = [p for p in G.in_arrows(e) if p in A and G.objects.leq(G.dom(p), f)]
    for a in As:
        for p in Ps:
            yield Nexus(a, p)


def find_nexus(G: OrderedGroupoid, A, e, f) -> Nexus | None:
    for n in iter_nexuses(G, frozenset(A), e, f):
        return n
    return None


# ---------------------------------------------------------------------------
# the relation


class _Relation:
    """``g <~ h`` iff some ``a g b`` (``a, b`` in ``A``) lies below ``h``."""

    def __init__(self, G: OrderedGroupoid, A: frozenset):
        self.G, self.A = G, A
        self._orbit: dict = {}

    def orbit(self, g) -> frozenset:
        hit = self._orbit.get(g)
        if hit is None:
            G, A = self.G, self.A
            left = [a for a in G.in_arrows(G.dom(g)) if a in A]
            right = [b for b in G.out_arrows(G.cod(g)) if b in A]
            hit = frozenset(G.compose(a, g, b) for a in left for b in right)
            self._orbit[g] = hit
        return hit

    def below(self, g, h) -> bool:
        return not self.orbit(g).isdisjoint(self.G.down(h))

    def equiv(self, g, h) -> bool:
        return self.below(g, h) and self.below(h, g)


def simeq(G: OrderedGroupoid, A, g, h) -> bool:
    return _Relation(G, frozenset(A)).equiv(g, h)


# ---------------------------------------------------------------------------
# the quotient


@dataclass
class QuotientGroupoid:
    parent: OrderedGroupoid
    A: frozenset
    groupoid: OrderedGroupoid
    classes: dict  # class id -> frozenset of arrows
    class_of: dict  # arrow -> class id
    varpi: OrderedFunctor

    def members(self, cls) -> frozenset:
        return self.classes[cls]

    def partition(self) -> frozenset:
        return frozenset(self.classes.values())


def _class_id(members, G):
    idents = [x for x in members if x in G.objects]
    return csorted(idents)[0] if idents else csorted(members)[0]


def quotient(G: OrderedGroupoid, A, *, name=None, check_normal=True) -> QuotientGroupoid:
    """``G // A`` with composition through nexuses; the result is re-validated in full."""
    A = frozenset(A)
    G.require_valid()
    if check_normal:
        is_normal(G, A).raise_if_failed("normal ordered subgroupoid")
    R = _Relation(G, A)
    arrows = G.arrows

    # classes by direct pairwise test
    class_of: dict = {}
    classes: dict = {}
    for g in arrows:
        if g in class_of:
            continue
        members = frozenset(h for h in arrows if R.equiv(g, h))
        cid = _class_id(members, G)
        for h in members:
            if h in class_of:
                raise InvariantBreach(f"relation is not transitive: {h!r} falls in two classes")
            class_of[h] = cid
        classes[cid] = members
    for cid, members in classes.items():
        for g in members:
            for h in members:
                if not R.equiv(g, h):
                    raise InvariantBreach(f"relation is not transitive on the class of {cid!r}")

    def d(c):
        return class_of[G.dom(c)]

    def r(c):
        return class_of[G.cod(c)]

    for cid, members in classes.items():
        for g in members:
            if class_of[G.dom(g)] != d(cid) or class_of[G.cod(g)] != r(cid):
                raise InvariantBreach("equivalent arrows with inequivalent ends")
            if class_of[G.inv(g)] != class_of[G.inv(cid)]:
                raise InvariantBreach("equivalent arrows with inequivalent inverses")

    objects = [c for c in classes if any(x in G.objects for x in classes[c])]
    ends = {c: (d(c), r(c)) for c in classes}
    compose = {}
    by_dom: dict = {}
    for c in classes:
        by_dom.setdefault(ends[c][0], []).append(c)
    for X in classes:
        for Y in by_dom.get(ends[X][1], ()):
            compose[(X, Y)] = _compose_classes(G, A, X, Y, class_of)
    inverse = {c: class_of[G.inv(c)] for c in classes}
    order = [(X, Y) for X in classes for Y in classes if X != Y and R.below(X, Y)]
    obj_order = [(X, Y) for X in objects for Y in objects if X == Y or R.below(X, Y)]
    Q = OrderedGroupoid(objects, obj_order, ends, compose, inverse, order,
                        name=name or f"{G.name or 'G'}//A")
    varpi = OrderedFunctor(G, Q, dict(class_of), name="varpi")
    if not star_class(varpi).surjective:
        raise InvariantBreach("quotient map is not star-surjective")
    return QuotientGroupoid(G, A, Q, classes, class_of, varpi)


def _compose_classes(G, A, X, Y, class_of):
    g, h = X, Y
    nx = find_nexus(G, A, G.cod(g), G.dom(h))
    if nx is None:
        raise InvariantBreach(f"no nexus between {G.cod(g)!r} and {G.dom(h)!r}")
    a, p = nx.a, nx.p
    g1 = G.corestriction(g, G.dom(a))
    h1 = G.restriction(G.dom(p), h)
    first = class_of[G.compose(g1, a, h)]
    second = class_of[G.compose(g, G.inv(p), h1)]
    if first != second:
        raise InvariantBreach(f"g'ah and gp^-1h' fall in different classes for {X!r}, {Y!r}")
    return first


def brute_force_quotient(G: OrderedGroupoid, A) -> tuple[frozenset, dict, frozenset]:
    """Independent oracle: literal definition, union-find, every nexus and representative tried.

    Returns the partition, the composition table on member sets and the class
    order as pairs of member sets.
    """
    A = frozenset(A)
    arrows = G.arrows
    Al = [a for a in arrows if a in A]

    def lower(g, h):
        for a in Al:
            if G.cod(a) != G.dom(g):
                continue
            for b in Al:
                if G.dom(b) != G.cod(g):
                    continue
                if G.leq(G.compose(a, g, b), h):
                    return True
        return False

    parent = {g: g for g in arrows}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    rel = {(g, h): lower(g, h) for g in arrows for h in arrows}
    for g in arrows:
        for h in arrows:
            if rel[(g, h)] and rel[(h, g)]:
                rg, rh = find(g), find(h)
                if rg != rh:
                    parent[max(rg, rh, key=canon)] = min(rg, rh, key=canon)
    groups: dict = {}
    for g in arrows:
        groups.setdefault(find(g), set()).add(g)
    parts = {g: frozenset(groups[find(g)]) for g in arrows}
    partition = frozenset(parts.values())

    table = {}
    for X in partition:
        for Y in partition:
            results = set()
            for g in X:
                for h in Y:
                    for nx in iter_nexuses(G, A, G.cod(g), G.dom(h)):
                        a, p = nx.a, nx.p
                        g1 = G.corestriction(g, G.dom(a))
                        h1 = G.restriction(G.dom(p), h)
                        results.add(parts[G.compose(g1, a, h)])
                        results.add(parts[G.compose(g, G.inv(p), h1)])
            if len(results) > 1:
                raise InvariantBreach("class composite depends on the nexus or representatives")
            if results:
                table[(X, Y)] = results.pop()
    order = frozenset(
        (X, Y) for X in partition for Y in partition
        if any(rel[(g, k)] for g in X for k in Y)
    )
    return partition, table, order


def quotient_as_sets(q: QuotientGroupoid) -> tuple[frozenset, dict, frozenset]:
    """The quotient in the same shape as :func:`brute_force_quotient` for comparison."""
    Q, cl = q.groupoid, q.classes
    table = {(cl[X], cl[Y]): cl[Q.compose(X, Y)] for X in Q.arrows for Y in Q.out_arrows(Q.cod(X))}
    order = frozenset((cl[X], cl[Y]) for X in Q.arrows for Y in Q.up(X))
    return q.partition(), table, order


def iter_nexus_composites(q: QuotientGroupoid) -> Iterator[tuple]:
    """For every composable class pair, every member pair and every nexus: ``(X, Y, class)``."""
    G, A, cl = q.parent, q.A, q.class_of
    Q = q.groupoid
    for X in Q.arrows:
        for Y in Q.out_arrows(Q.cod(X)):
            for g in q.classes[X]:
                for h in q.classes[Y]:
                    for nx in iter_nexuses(G, A, G.cod(g), G.dom(h)):
                        g1 = G.corestriction(g, G.dom(nx.a))
                        yield X, Y, cl[G.compose(g1, nx.a, h)]


# ---------------------------------------------------------------------------
# factorization


@dataclass
class Factorization:
    theta: OrderedFunctor
    quotient: QuotientGroupoid
    varpi: OrderedFunctor
    psi: OrderedFunctor


def factorize(theta: OrderedFunctor) -> Factorization:
    """``theta = varpi psi`` through ``G // ker theta`` with ``psi`` star-injective."""
    theta.require_valid()
    K = kernel(theta)
    q = quotient(theta.source, K, name=f"{theta.source.name or 'G'}//ker")
    m = {}
    for cid, members in q.classes.items():
        images = {theta(g) for g in members}
        if len(images) != 1:
            raise InvariantBreach(f"theta is not constant on the class of {cid!r}")
        m[cid] = images.pop()
    psi = OrderedFunctor(q.groupoid, theta.target, m, name="psi")
    if q.varpi.then(psi).mapping != theta.mapping:
        raise InvariantBreach("theta != varpi psi")
    sc = star_class(psi)
    if not sc.injective:
        raise InvariantBreach("induced functor is not star-injective")
    if star_class(theta).surjective and not sc.bijective:
        raise InvariantBreach("theta is a fibration but psi is not a covering")
    return Factorization(theta, q, q.varpi, psi)


def require_normal(G, A) -> frozenset:
    A = frozenset(A)
    rep = is_normal(G, A)
    if not rep.passed:
        raise PreconditionError(f"not a normal ordered subgroupoid: {rep.violations[0]}")
    return A
