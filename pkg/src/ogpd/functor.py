"""Ordered functors, star classification, kernels and the mapping groupoid OGPD(A, B)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .core import OrderedGroupoid, ValidationReport, canon, product
from .errors import PreconditionError, StructureError
from .search import as_budget, monotone_selections


class OrderedFunctor:
    """An arrow-to-arrow map between ordered groupoids.

    ``cert`` optionally records which construction produced the functor
    (``("p_phi", cylinder)`` and similar); certified lift procedures read it.
    It takes no part in equality.
    """

    def __init__(self, source: OrderedGroupoid, target: OrderedGroupoid, mapping: Mapping,
                 *, name: str | None = None, check: bool = True, cert=None):
        self.source = source
        self.target = target
        self.name = name
        self.cert = cert
        m = dict(mapping)
        for a, b in m.items():
            if a not in source:
                raise StructureError(f"functor {name or ''} maps unknown source arrow {a!r}")
            if b not in target:
                raise StructureError(f"functor {name or ''} maps {a!r} to unknown target arrow {b!r}")
        self.mapping = m
        self._report: ValidationReport | None = None
        if check:
            self.require_valid()

    def __call__(self, a):
        return self.mapping[a]

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"<OrderedFunctor {label}{self.source!r} -> {self.target!r}>"

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, OrderedFunctor)
            and self.mapping == other.mapping
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self):
        return hash(frozenset(self.mapping.items()))

    def key(self) -> tuple:
        """Images of the source arrows in canonical order (identifies the functor)."""
        return tuple(self.mapping[a] for a in self.source.arrows)

    def report(self) -> ValidationReport:
        if self._report is None:
            self._report = validate_functor(self)
        return self._report

    def require_valid(self) -> "OrderedFunctor":
        self.report().raise_if_failed(f"functor {self.name or ''}".strip())
        return self

    def on_object(self, x):
        return self.mapping[x]

    def then(self, other: "OrderedFunctor", name=None) -> "OrderedFunctor":
        """Diagrammatic composite: first ``self`` then ``other``."""
        if self.target != other.source:
            raise PreconditionError("functors are not composable")
        return OrderedFunctor(
            self.source, other.target, {a: other.mapping[b] for a, b in self.mapping.items()},
            name=name, check=False,
        )._trusted()

    def _trusted(self) -> "OrderedFunctor":
        self._report = ValidationReport()
        return self

    def image(self) -> set:
        return set(self.mapping.values())


def validate_functor(phi: OrderedFunctor) -> ValidationReport:
    """Exhaustive check of functoriality and order preservation."""
    rep = ValidationReport()
    G, H, m = phi.source, phi.target, phi.mapping
    missing = [a for a in G.arrows if a not in m]
    if missing:
        rep.add("functor.total", (missing[0],), "source arrow without an image")
        return rep
    for a in G.arrows:
        b = m[a]
        if H.dom(b) != m[G.dom(a)] or H.cod(b) != m[G.cod(a)]:
            rep.add("functor.endpoints", (a, b), "image arrow has the wrong endpoints")
    for x in G.objects:
        if not H.is_identity(m[x]):
            rep.add("functor.identity", (x, m[x]), "identity not sent to an identity")
    for a in G.arrows:
        if m[G.inv(a)] != H.inv(m[a]):
            rep.add("functor.inverse", (a,), "inverse not preserved")
    if not rep.passed:
        return rep
    for a in G.arrows:
        for b in G.out_arrows(G.cod(a)):
            if m[G.compose(a, b)] != H.compose(m[a], m[b]):
                rep.add("functor.compose", (a, b), "(ab) phi != (a phi)(b phi)")
    for a in G.arrows:
        for b in G.up(a):
            if not H.leq(m[a], m[b]):
                rep.add("functor.order", (a, b), "a <= b but a phi not <= b phi")
    return rep


def identity_functor(G: OrderedGroupoid, name=None) -> OrderedFunctor:
    return OrderedFunctor(G, G, {a: a for a in G.arrows}, name=name or "id", check=False)._trusted()


def inclusion(sub: OrderedGroupoid, G: OrderedGroupoid, name=None) -> OrderedFunctor:
    return OrderedFunctor(sub, G, {a: a for a in sub.arrows}, name=name or "incl")


def constant_functor(G: OrderedGroupoid, T: OrderedGroupoid, obj, name=None) -> OrderedFunctor:
    return OrderedFunctor(G, T, {a: obj for a in G.arrows}, name=name)


# ---------------------------------------------------------------------------
# star classification


@dataclass(frozen=True)
class StarClass:
    surjective: bool
    injective: bool

    @property
    def bijective(self) -> bool:
        return self.surjective and self.injective

    @property
    def name(self) -> str:
        if self.bijective:
            return "covering"
        if self.surjective:
            return "fibration"
        if self.injective:
            return "immersion"
        return "none"


def star_surjective_at(phi: OrderedFunctor, e) -> bool:
    G, H = phi.source, phi.target
    image = {phi(g) for g in G.star(e)}
    return image >= set(H.star(phi(e)))


def star_injective_at(phi: OrderedFunctor, e) -> bool:
    images = [phi(g) for g in phi.source.star(e)]
    return len(set(images)) == len(images)


def star_failures(phi: OrderedFunctor) -> dict:
    """Objects where the star map fails to be onto / one-to-one."""
    G = phi.source
    return {
        "surjective": [e for e in G.objects if not star_surjective_at(phi, e)],
        "injective": [e for e in G.objects if not star_injective_at(phi, e)],
    }


def star_class(phi: OrderedFunctor) -> StarClass:
    phi.require_valid()
    G = phi.source
    return StarClass(
        surjective=all(star_surjective_at(phi, e) for e in G.objects),
        injective=all(star_injective_at(phi, e) for e in G.objects),
    )


def is_fibration(phi) -> bool:
    return star_class(phi).surjective


def is_immersion(phi) -> bool:
    return star_class(phi).injective


def is_covering(phi) -> bool:
    return star_class(phi).bijective


def kernel(phi: OrderedFunctor) -> frozenset:
    """Arrows sent to identities; a wide subgroupoid of the source."""
    phi.require_valid()
    H = phi.target
    ker = frozenset(a for a in phi.source.arrows if H.is_identity(phi(a)))
    injective = star_class(phi).injective
    if injective != (ker == frozenset(phi.source.objects)):
        raise AssertionError("star-injectivity disagrees with the kernel test")
    return ker


def is_isomorphism(phi: OrderedFunctor) -> bool:
    """Bijective on arrows with an order-preserving inverse."""
    phi.require_valid()
    m = phi.mapping
    if len(set(m.values())) != len(m) or len(m) != len(phi.target.arrows):
        return False
    G, H = phi.source, phi.target
    return all(G.leq(a, b) == H.leq(m[a], m[b]) for a in G.arrows for b in G.arrows)


def is_embedding(phi: OrderedFunctor) -> bool:
    """Injective on arrows and order-reflecting on its image."""
    phi.require_valid()
    m = phi.mapping
    if len(set(m.values())) != len(m):
        return False
    G, H = phi.source, phi.target
    return all(G.leq(a, b) == H.leq(m[a], m[b]) for a in G.arrows for b in G.arrows)


def inverse_functor(phi: OrderedFunctor, name=None) -> OrderedFunctor:
    if not is_isomorphism(phi):
        raise PreconditionError("functor is not an isomorphism")
    return OrderedFunctor(phi.target, phi.source, {b: a for a, b in phi.mapping.items()}, name=name)


# ---------------------------------------------------------------------------
# natural transformations


@dataclass
class NaturalTransformation:
    """Components ``x -> x tau`` from ``frm`` to ``to`` (both functors A -> B)."""

    frm: OrderedFunctor
    to: OrderedFunctor
    component: dict

    def report(self) -> ValidationReport:
        rep = ValidationReport()
        A, B = self.frm.source, self.frm.target
        for x in A.objects:
            c = self.component.get(x)
            if c is None or B.dom(c) != self.frm(x) or B.cod(c) != self.to(x):
                rep.add("transformation.component", (x,), "component has the wrong endpoints")
        if not rep.passed:
            return rep
        for a in A.arrows:
            x, y = A.dom(a), A.cod(a)
            if B.compose(self.component[x], self.to(a)) != B.compose(self.frm(a), self.component[y]):
                rep.add("transformation.naturality", (a,), "square does not commute")
        for x in A.objects:
            for y in A.objects.up(x):
                if not B.leq(self.component[x], self.component[y]):
                    rep.add("transformation.order", (x, y), "components not order-preserving")
        return rep


# ---------------------------------------------------------------------------
# enumeration of ordered functors


def _hom_table(B: OrderedGroupoid) -> dict:
    hom: dict = {}
    for b in B.arrows:
        hom.setdefault((B.dom(b), B.cod(b)), []).append(b)
    return hom


def iter_functors(
    A: OrderedGroupoid,
    B: OrderedGroupoid,
    *,
    budget=None,
    candidates: Mapping | None = None,
    fixed: Mapping | None = None,
    injective: bool = False,
) -> Iterator[dict]:
    """Yield every ordered functor ``A -> B`` as a mapping, in canonical order.

    Backtracking assigns objects first (in a linear extension of ``A_0``) and
    then non-identity arrows; every assignment is propagated through inverses
    and all composites with already-assigned arrows, and checked against the
    order on assigned arrows.  ``candidates`` restricts the images of chosen
    arrows, ``fixed`` pins some of them, ``injective`` prunes non-injective
    maps.  Each attempted value costs one budget tick.
    """
    A.require_valid()
    B.require_valid()
    budget = as_budget(budget)
    hom = _hom_table(B)
    cand = dict(candidates or {})
    order = A.objects.linear_extension() + [a for a in A.arrows if a not in A.objects]
    assign: dict = {}
    used: dict = {}

    def push(a, b, trail) -> bool:
        stack = [(a, b)]
        while stack:
            a, b = stack.pop()
            cur = assign.get(a)
            if cur is not None:
                if cur != b:
                    return False
                continue
            if a in cand and b not in cand[a]:
                return False
            if injective:
                if b in used:
                    return False
                used[b] = a
            assign[a] = b
            trail.append(a)
            da, ca = A.dom(a), A.cod(a)
            if da in assign and B.dom(b) != assign[da]:
                return False
            if ca in assign and B.cod(b) != assign[ca]:
                return False
            for u in A.up(a):
                if u in assign and not B.leq(b, assign[u]):
                    return False
            for w in A.down(a):
                if w in assign and not B.leq(assign[w], b):
                    return False
            stack.append((A.inv(a), B.inv(b)))
            if not A.is_identity(a):
                for c in A.out_arrows(ca):
                    if c in assign:
                        stack.append((A.compose(a, c), B.compose(b, assign[c])))
                for c in A.in_arrows(da):
                    if c in assign:
                        stack.append((A.compose(c, a), B.compose(assign[c], b)))
        return True

    def undo(trail):
        for a in trail:
            b = assign.pop(a)
            if injective and used.get(b) == a:
                del used[b]

    base_trail: list = []
    if fixed:
        for a, b in fixed.items():
            if not push(a, b, base_trail):
                undo(base_trail)
                return

    def rec(i):
        while i < len(order) and order[i] in assign:
            i += 1
        if i == len(order):
            yield {a: assign[a] for a in A.arrows}
            return
        a = order[i]
        if A.is_identity(a):
            options = list(B.objects)
        else:
            options = hom.get((assign[A.dom(a)], assign[A.cod(a)]), [])
        if a in cand:
            options = [b for b in options if b in cand[a]]
        for b in options:
            budget.tick()
            trail: list = []
            if push(a, b, trail):
                yield from rec(i + 1)
            undo(trail)

    yield from rec(0)
    undo(base_trail)


def enumerate_functors(A: OrderedGroupoid, B: OrderedGroupoid, budget=None, **kw) -> list[OrderedFunctor]:
    """All ordered functors ``A -> B`` in deterministic order."""
    out = []
    for m in iter_functors(A, B, budget=budget, **kw):
        out.append(OrderedFunctor(A, B, m, check=False)._trusted())
    return out


def find_isomorphism(A: OrderedGroupoid, B: OrderedGroupoid, budget=None) -> OrderedFunctor | None:
    if len(A) != len(B) or len(A.objects) != len(B.objects):
        return None
    for m in iter_functors(A, B, budget=budget, injective=True):
        phi = OrderedFunctor(A, B, m, check=False)._trusted()
        if is_isomorphism(phi):
            return phi
    return None


# ---------------------------------------------------------------------------
# the mapping groupoid OGPD(A, B)


class MappingGroupoid:
    """OGPD(A, B): ordered functors as objects, ordered natural transformations as arrows.

    Arrow ids are ``(i, j, comps)`` with ``i``, ``j`` indices into
    :attr:`functors` and ``comps`` the components listed over
    ``A.objects.elements``.  The identity at functor ``i`` (which is also the
    object id) is ``(i, i, identities)``.

    Arrows are ordered pointwise: ``tau <= sigma`` when the source functors
    compare arrow by arrow and every component of ``tau`` lies below the
    matching component of ``sigma``.
    """

    def __init__(self, A: OrderedGroupoid, B: OrderedGroupoid, budget=None):
        budget = as_budget(budget)
        self.A, self.B = A, B
        self.functors = enumerate_functors(A, B, budget=budget)
        self._index = {f.key(): i for i, f in enumerate(self.functors)}
        objs = A.objects.elements
        self.object_order = objs
        n = len(self.functors)
        fleq = [[all(B.leq(f(a), g(a)) for a in A.arrows) for g in self.functors] for f in self.functors]
        self._fleq = fleq

        arrows = []
        for i, f in enumerate(self.functors):
            stars = {x: B.star(f(x)) for x in objs}
            below = {x: [y for y in A.objects.down(x) if y != x] for x in objs}
            order = sorted(objs, key=lambda x: (len(below[x]), canon(x)))
            for comps in monotone_selections(order, below, stars, B.leq, budget):
                j = self._conjugate_index(f, comps)
                if j is not None:
                    arrows.append((i, j, tuple(comps[x] for x in objs)))

        def ident(i):
            f = self.functors[i]
            return (i, i, tuple(f(x) for x in objs))

        def dom(t):
            return ident(t[0])

        def cod(t):
            return ident(t[1])

        def mul(s, t):
            return (s[0], t[1], tuple(B.compose(p, q) for p, q in zip(s[2], t[2])))

        def inv(t):
            return (t[1], t[0], tuple(B.inv(p) for p in t[2]))

        def leq(s, t):
            return fleq[s[0]][t[0]] and fleq[s[1]][t[1]] and all(B.leq(p, q) for p, q in zip(s[2], t[2]))

        self.groupoid = OrderedGroupoid.from_operations(
            [ident(i) for i in range(n)],
            lambda x, y: fleq[x[0]][y[0]],
            arrows, dom, cod, mul, inv, leq,
            name=f"OGPD({A.name or 'A'},{B.name or 'B'})",
        )

    def _conjugate_index(self, f: OrderedFunctor, comps: dict):
        A, B = self.A, self.B
        img = tuple(
            B.compose(B.inv(comps[A.dom(a)]), f(a), comps[A.cod(a)]) for a in A.arrows
        )
        return self._index.get(img)

    def object_of(self, f: OrderedFunctor):
        i = self._index[f.key()]
        return (i, i, tuple(f(x) for x in self.object_order))

    def functor_of(self, obj) -> OrderedFunctor:
        return self.functors[obj[0]]

    def transformation(self, arrow) -> NaturalTransformation:
        i, j, comps = arrow
        return NaturalTransformation(self.functors[i], self.functors[j], dict(zip(self.object_order, comps)))

    def arrow_of(self, frm: OrderedFunctor, comps: Mapping):
        i = self._index[frm.key()]
        j = self._conjugate_index(frm, dict(comps))
        if j is None:
            raise PreconditionError("components do not define an ordered natural transformation")
        a = (i, j, tuple(comps[x] for x in self.object_order))
        if a not in self.groupoid:
            raise PreconditionError("components do not define an ordered natural transformation")
        return a


def mapping_groupoid(A: OrderedGroupoid, B: OrderedGroupoid, budget=None) -> MappingGroupoid:
    return MappingGroupoid(A, B, budget=budget)


def brute_force_transformation_count(A: OrderedGroupoid, B: OrderedGroupoid, budget=None) -> int:
    """Count (from, to, components) triples by direct search over hom sets (independent check)."""
    from itertools import product as cart

    budget = as_budget(budget)
    functors = enumerate_functors(A, B, budget=budget)
    objs = A.objects.elements
    count = 0
    for f in functors:
        for g in functors:
            homs = [B.hom(f(x), g(x)) for x in objs]
            for comps in cart(*homs):
                budget.tick()
                tau = NaturalTransformation(f, g, dict(zip(objs, comps)))
                if tau.report().passed:
                    count += 1
    return count


# ---------------------------------------------------------------------------
# exponential law


def curry(F: OrderedFunctor, A: OrderedGroupoid, B: OrderedGroupoid, OGPD: MappingGroupoid | None = None,
          budget=None) -> tuple[OrderedFunctor, MappingGroupoid]:
    """Transpose ``F: A x B -> C`` to ``B -> OGPD(A, C)``."""
    C = F.target
    OG = OGPD or mapping_groupoid(A, C, budget=budget)
    objs = OG.object_order
    images = {}
    for b in B.arrows:
        x, y = B.dom(b), B.cod(b)
        frm = OrderedFunctor(A, C, {a: F((a, x)) for a in A.arrows}, check=False)
        comps = {z: F((z, b)) for z in objs}
        images[b] = OG.arrow_of(frm, comps)
    return OrderedFunctor(B, OG.groupoid, images, name="curry"), OG


def uncurry(G: OrderedFunctor, A: OrderedGroupoid, OG: MappingGroupoid) -> OrderedFunctor:
    """Inverse transpose: ``B -> OGPD(A, C)`` back to ``A x B -> C``."""
    B = G.source
    C = OG.B
    P = product(A, B)
    m = {}
    for a in A.arrows:
        for b in B.arrows:
            frm = OG.functor_of(OG.groupoid.dom(G(b)))
            comps = dict(zip(OG.object_order, G(b)[2]))
            # (a, b) = (a, d b)(cod a, b)
            m[(a, b)] = C.compose(frm(a), comps[A.cod(a)])
    return OrderedFunctor(P, C, m, name="uncurry")


def post_compose(p: OrderedFunctor, T: OrderedGroupoid, budget=None,
                 source: MappingGroupoid | None = None,
                 target: MappingGroupoid | None = None) -> tuple[OrderedFunctor, MappingGroupoid, MappingGroupoid]:
    """``p_*: OGPD(T, G) -> OGPD(T, H)`` given by composing with ``p``."""
    budget = as_budget(budget)
    src = source or mapping_groupoid(T, p.source, budget=budget)
    tgt = target or mapping_groupoid(T, p.target, budget=budget)
    m = {}
    for arr in src.groupoid.arrows:
        i, j, comps = arr
        f = src.functors[i]
        fp = f.then(p)
        m[arr] = tgt.arrow_of(fp, {x: p(c) for x, c in zip(src.object_order, comps)})
    return OrderedFunctor(src.groupoid, tgt.groupoid, m, name="p_*"), src, tgt


# ---------------------------------------------------------------------------
# pullbacks


def pullback(f: OrderedFunctor, g: OrderedFunctor, name=None) -> tuple[OrderedGroupoid, OrderedFunctor, OrderedFunctor]:
    """Pullback of ``f: X -> Z`` and ``g: Y -> Z``; arrows are pairs ``(x, y)`` with ``x f = y g``."""
    if f.target != g.target:
        raise PreconditionError("pullback needs a common target")
    X, Y = f.source, g.source
    arrows = [(a, b) for a in X.arrows for b in Y.arrows if f(a) == g(b)]
    objs = [(x, y) for x in X.objects for y in Y.objects if f(x) == g(y)]
    P = OrderedGroupoid.from_operations(
        objs,
        lambda s, t: X.leq(s[0], t[0]) and Y.leq(s[1], t[1]),
        arrows,
        lambda s: (X.dom(s[0]), Y.dom(s[1])),
        lambda s: (X.cod(s[0]), Y.cod(s[1])),
        lambda s, t: (X.compose(s[0], t[0]), Y.compose(s[1], t[1])),
        lambda s: (X.inv(s[0]), Y.inv(s[1])),
        lambda s, t: X.leq(s[0], t[0]) and Y.leq(s[1], t[1]),
        name=name or "pullback",
    )
    p1 = OrderedFunctor(P, X, {s: s[0] for s in P.arrows}, name="pr1")
    p2 = OrderedFunctor(P, Y, {s: s[1] for s in P.arrows}, name="pr2")
    return P, p1, p2


def projection(P: OrderedGroupoid, index: int, target: OrderedGroupoid, name=None) -> OrderedFunctor:
    return OrderedFunctor(P, target, {a: a[index] for a in P.arrows}, name=name)


__all__ = [
    "OrderedFunctor", "validate_functor", "identity_functor", "inclusion", "constant_functor",
    "StarClass", "star_class", "star_failures", "star_surjective_at", "star_injective_at",
    "is_fibration", "is_immersion", "is_covering", "kernel", "is_isomorphism", "is_embedding",
    "inverse_functor", "NaturalTransformation", "iter_functors", "enumerate_functors",
    "find_isomorphism", "MappingGroupoid", "mapping_groupoid", "brute_force_transformation_count",
    "curry", "uncurry", "post_compose", "pullback", "projection",
]
