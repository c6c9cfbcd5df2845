"""Finite posets and ordered groupoids.

An ordered groupoid is stored as explicit tables.  Objects are identified with
their identity arrows, so every object id is also an arrow id; the object
poset is kept separately and validation checks that it agrees with the order
on identity arrows.

Composition is written left to right: ``compose(g, h)`` is defined when
``cod(g) == dom(h)``, matching ``g d = g g^-1`` and ``g r = g^-1 g``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as _cartesian
from typing import Callable, Hashable, Iterable, Mapping

from .errors import AxiomViolation, InvariantBreach, PreconditionError, StructureError

Arrow = Hashable
Obj = Hashable


def canon(x):
    """Total sort key over the id types we use (ints, strings, nested tuples)."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(canon(e) for e in x))
    if isinstance(x, frozenset):
        return (3, tuple(sorted(canon(e) for e in x)))
    return (4, repr(x))


def csorted(items: Iterable) -> list:
    return sorted(items, key=canon)


# ---------------------------------------------------------------------------
# validation reports


@dataclass(frozen=True)
class Violation:
    tag: str
    witness: tuple
    message: str = ""

    def __str__(self):
        w = ", ".join(map(repr, self.witness))
        return f"[{self.tag}] {self.message} (witness: {w})"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    @property
    def tags(self) -> list[str]:
        return [v.tag for v in self.violations]

    def add(self, tag: str, witness, message: str = "") -> None:
        # first witness per axiom only
        if tag not in self.tags:
            self.violations.append(Violation(tag, tuple(witness), message))

    def has(self, tag: str) -> bool:
        return tag in self.tags

    def raise_if_failed(self, what="structure"):
        if not self.passed:
            raise AxiomViolation(self, what)
        return self


# ---------------------------------------------------------------------------
# posets


class Poset:
    """A finite partial order given by its ``<=`` pairs.

    Reflexive pairs are added automatically.  With ``check=True`` (default)
    antisymmetry and transitivity are verified and a failure raises
    :class:`AxiomViolation`.
    """

    def __init__(self, elements: Iterable, leq_pairs: Iterable[tuple] = (), *, check: bool = True):
        self.elements = tuple(csorted(set(elements)))
        elset = set(self.elements)
        pairs = set()
        for x, y in leq_pairs:
            if x not in elset or y not in elset:
                raise StructureError(f"order pair ({x!r}, {y!r}) names an unknown element")
            pairs.add((x, y))
        pairs.update((x, x) for x in self.elements)
        self._pairs = frozenset(pairs)
        up = {x: set() for x in self.elements}
        down = {x: set() for x in self.elements}
        for x, y in pairs:
            up[x].add(y)
            down[y].add(x)
        self._up = {x: frozenset(s) for x, s in up.items()}
        self._down = {x: frozenset(s) for x, s in down.items()}
        if check:
            self.check().raise_if_failed("poset")

    @classmethod
    def from_function(cls, elements, leq: Callable, check=True) -> "Poset":
        els = list(elements)
        return cls(els, [(x, y) for x in els for y in els if leq(x, y)], check=check)

    @classmethod
    def discrete(cls, elements) -> "Poset":
        return cls(elements, ())

    def check(self) -> ValidationReport:
        rep = ValidationReport()
        for x, y in self._pairs:
            if x != y and (y, x) in self._pairs:
                rep.add("poset.antisymmetry", (x, y), "x <= y <= x with x != y")
        for x in self.elements:
            for y in self._up[x]:
                if not self._up[y] <= self._up[x]:
                    z = next(iter(self._up[y] - self._up[x]))
                    rep.add("poset.transitivity", (x, y, z), "x <= y <= z but not x <= z")
        return rep

    @property
    def pairs(self) -> frozenset:
        return self._pairs

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._up

    def __eq__(self, other):
        return isinstance(other, Poset) and set(self.elements) == set(other.elements) and self._pairs == other._pairs

    def __hash__(self):
        return hash((frozenset(self.elements), self._pairs))

    def __repr__(self):
        return f"Poset({len(self.elements)} elements, {len(self._pairs)} pairs)"

    def leq(self, x, y) -> bool:
        return (x, y) in self._pairs

    def lt(self, x, y) -> bool:
        return x != y and (x, y) in self._pairs

    def up(self, x) -> frozenset:
        return self._up[x]

    def down(self, x) -> frozenset:
        return self._down[x]

    def lower_bounds(self, x, y) -> frozenset:
        return self._down[x] & self._down[y]

    def meet(self, x, y):
        """Greatest lower bound of ``x`` and ``y``, or ``None`` if there is none."""
        lower = self.lower_bounds(x, y)
        for m in lower:
            if lower <= self._down[m]:
                return m
        return None

    def join(self, x, y):
        upper = self._up[x] & self._up[y]
        for m in upper:
            if upper <= self._up[m]:
                return m
        return None

    def is_meet_semilattice(self) -> bool:
        els = self.elements
        return all(self.meet(x, y) is not None for i, x in enumerate(els) for y in els[i:])

    def maximal(self) -> list:
        return [x for x in self.elements if len(self._up[x]) == 1]

    def minimal(self) -> list:
        return [x for x in self.elements if len(self._down[x]) == 1]

    def covers(self) -> list[tuple]:
        """Hasse diagram edges ``(x, y)`` with ``x < y`` and nothing strictly between."""
        out = []
        for x in self.elements:
            for y in self._up[x]:
                if y == x:
                    continue
                if not any(z not in (x, y) and z in self._up[x] for z in self._down[y]):
                    out.append((x, y))
        return out

    def linear_extension(self) -> list:
        """Elements listed so that every element follows everything below it."""
        return sorted(self.elements, key=lambda x: (len(self._down[x]), canon(x)))

    def height(self) -> dict:
        """Length of the longest chain ending at each element (minimal elements get 0)."""
        h: dict = {}
        for x in self.linear_extension():
            below = [h[y] for y in self._down[x] if y != x]
            h[x] = 1 + max(below) if below else 0
        return h

    def is_order_ideal(self, subset) -> bool:
        s = set(subset)
        return all(self._down[x] <= s for x in s)

    def restrict(self, subset) -> "Poset":
        s = set(subset)
        return Poset(s, [(x, y) for (x, y) in self._pairs if x in s and y in s], check=False)


def meet(P: Poset, x, y):
    return P.meet(x, y)


# ---------------------------------------------------------------------------
# ordered groupoids


class OrderedGroupoid:
    """A finite ordered groupoid held as explicit tables.

    Parameters mirror the data of the structure: ``objects`` (ids, which are
    also the identity arrows), ``obj_order`` (pairs ``(x, y)`` meaning
    ``x <= y``), ``arrows`` mapping each non-identity or identity arrow to its
    ``(dom, cod)``, ``compose`` mapping composable pairs to composites,
    ``inverse`` and ``order`` (pairs of arrows).

    Identity compositions, identity inverses and reflexive order pairs are
    filled in when absent.  Dangling references raise
    :class:`StructureError`.  Unless ``check=False`` the full axiom suite runs
    and a failure raises :class:`AxiomViolation`.
    """

    def __init__(
        self,
        objects: Iterable,
        obj_order: Iterable[tuple],
        arrows: Mapping,
        compose: Mapping,
        inverse: Mapping,
        order: Iterable[tuple],
        *,
        name: str | None = None,
        check: bool = True,
    ):
        self.name = name
        objs = list(objects)
        if len(set(objs)) != len(objs):
            raise StructureError("duplicate object id")
        ends = dict(arrows)
        for x in objs:
            if x in ends and ends[x] != (x, x):
                raise StructureError(f"identity {x!r} declared with endpoints {ends[x]!r}")
            ends[x] = (x, x)
        objset = set(objs)
        for a, (d, c) in ends.items():
            if d not in objset or c not in objset:
                raise StructureError(f"arrow {a!r} has an unknown endpoint")
        self.objects = Poset(objs, obj_order, check=False)
        self.arrows = tuple(csorted(ends))
        self._dom = {a: d for a, (d, c) in ends.items()}
        self._cod = {a: c for a, (d, c) in ends.items()}

        mul = {}
        for (a, b), c in dict(compose).items():
            for z in (a, b, c):
                if z not in ends:
                    raise StructureError(f"composition ({a!r}, {b!r}) -> {c!r} names an unknown arrow")
            mul[(a, b)] = c
        for a in self.arrows:
            mul.setdefault((self._dom[a], a), a)
            mul.setdefault((a, self._cod[a]), a)
        self._mul = mul

        inv = {}
        for a, b in dict(inverse).items():
            if a not in ends or b not in ends:
                raise StructureError(f"inverse pair ({a!r}, {b!r}) names an unknown arrow")
            inv[a] = b
        for a, b in list(inv.items()):
            inv.setdefault(b, a)
        for x in objs:
            inv.setdefault(x, x)
        missing = [a for a in self.arrows if a not in inv]
        if missing:
            raise StructureError(f"arrow {missing[0]!r} has no inverse")
        self._inv = inv

        up = {a: {a} for a in self.arrows}
        down = {a: {a} for a in self.arrows}
        for a, b in order:
            if a not in ends or b not in ends:
                raise StructureError(f"order pair ({a!r}, {b!r}) names an unknown arrow")
            up[a].add(b)
            down[b].add(a)
        self._up = {a: frozenset(s) for a, s in up.items()}
        self._down = {a: frozenset(s) for a, s in down.items()}

        out = {x: [] for x in objs}
        inc = {x: [] for x in objs}
        for a in self.arrows:
            out[self._dom[a]].append(a)
            inc[self._cod[a]].append(a)
        self._out = {x: tuple(v) for x, v in out.items()}
        self._in = {x: tuple(v) for x, v in inc.items()}
        self._report: ValidationReport | None = None
        self._sig = None
        if check:
            self.require_valid()

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_operations(
        cls,
        objects: Iterable,
        obj_leq: Callable,
        arrows: Iterable,
        dom: Callable,
        cod: Callable,
        mul: Callable,
        inv: Callable,
        leq: Callable,
        *,
        name: str | None = None,
        check: bool = True,
    ) -> "OrderedGroupoid":
        """Tabulate a groupoid described by functions on its ids."""
        objs = csorted(set(objects))
        arrs = csorted(set(arrows))
        ends = {a: (dom(a), cod(a)) for a in arrs}
        by_dom: dict = {}
        for a in arrs:
            by_dom.setdefault(ends[a][0], []).append(a)
        compose = {}
        for a in arrs:
            for b in by_dom.get(ends[a][1], ()):
                compose[(a, b)] = mul(a, b)
        inverse = {a: inv(a) for a in arrs}
        obj_order = [(x, y) for x in objs for y in objs if obj_leq(x, y)]
        order = [(a, b) for a in arrs for b in arrs if a != b and leq(a, b)]
        return cls(objs, obj_order, ends, compose, inverse, order, name=name, check=check)

    def relabel(self, f: Callable, name=None) -> "OrderedGroupoid":
        """Isomorphic copy with every id replaced by ``f(id)`` (must be injective)."""
        m = {a: f(a) for a in self.arrows}
        if len(set(m.values())) != len(m):
            raise StructureError("relabelling is not injective")
        return OrderedGroupoid(
            [m[x] for x in self.objects],
            [(m[x], m[y]) for x, y in self.objects.pairs],
            {m[a]: (m[self._dom[a]], m[self._cod[a]]) for a in self.arrows},
            {(m[a], m[b]): m[c] for (a, b), c in self._mul.items()},
            {m[a]: m[b] for a, b in self._inv.items()},
            [(m[a], m[b]) for a in self.arrows for b in self._up[a] if a != b],
            name=name or self.name,
            check=self._report is not None and self._report.passed,
        )

    # -- validation -----------------------------------------------------------

    def report(self) -> ValidationReport:
        if self._report is None:
            self._report = validate_ogpd(self)
        return self._report

    def require_valid(self) -> "OrderedGroupoid":
        self.report().raise_if_failed(f"ordered groupoid {self.name or ''}".strip())
        return self

    @property
    def is_valid(self) -> bool:
        return self.report().passed

    # -- basic accessors ------------------------------------------------------

    def __len__(self):
        return len(self.arrows)

    def __contains__(self, a):
        return a in self._dom

    def __iter__(self):
        return iter(self.arrows)

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"<OrderedGroupoid {label}{len(self.objects)} objects, {len(self.arrows)} arrows>"

    def signature(self):
        if self._sig is None:
            self._sig = (
                frozenset((a, self._dom[a], self._cod[a]) for a in self.arrows),
                frozenset(self._mul.items()),
                frozenset(self._inv.items()),
                frozenset((a, b) for a in self.arrows for b in self._up[a]),
                self.objects.pairs,
            )
        return self._sig

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, OrderedGroupoid) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def dom(self, a):
        return self._dom[a]

    def cod(self, a):
        return self._cod[a]

    # short aliases: d for domain, r for range
    d = dom
    r = cod

    def inv(self, a):
        return self._inv[a]

    def is_identity(self, a) -> bool:
        return a in self.objects

    def composable(self, a, b) -> bool:
        return self._cod[a] == self._dom[b]

    def try_compose(self, a, b):
        if self._cod[a] != self._dom[b]:
            return None
        return self._mul[(a, b)]

    def compose(self, *arrows):
        """Left-to-right composite ``a1 a2 ... an``; raises if undefined."""
        if not arrows:
            raise PreconditionError("compose needs at least one arrow")
        acc = arrows[0]
        if acc not in self._dom:
            raise PreconditionError(f"unknown arrow {acc!r}")
        for b in arrows[1:]:
            if b not in self._dom:
                raise PreconditionError(f"unknown arrow {b!r}")
            if self._cod[acc] != self._dom[b]:
                raise PreconditionError(f"{acc!r} and {b!r} are not composable")
            acc = self._mul[(acc, b)]
        return acc

    def compose_table(self) -> dict:
        return dict(self._mul)

    def leq(self, a, b) -> bool:
        return b in self._up[a]

    def up(self, a) -> frozenset:
        return self._up[a]

    def down(self, a) -> frozenset:
        return self._down[a]

    def order_pairs(self) -> list[tuple]:
        return [(a, b) for a in self.arrows for b in csorted(self._up[a]) if a != b]

    def have_upper_bound(self, a, b) -> bool:
        return not self._up[a].isdisjoint(self._up[b])

    def out_arrows(self, x) -> tuple:
        return self._out[x]

    def in_arrows(self, x) -> tuple:
        return self._in[x]

    def hom(self, x, y) -> list:
        return [a for a in self._out[x] if self._cod[a] == y]

    def non_identity_arrows(self) -> list:
        return [a for a in self.arrows if a not in self.objects]

    # -- elementary calculus ---------------------------------------------------

    def star(self, e) -> tuple:
        """Arrows with domain ``e``."""
        if e not in self.objects:
            raise PreconditionError(f"{e!r} is not an object")
        return self._out[e]

    def local_group(self, e) -> tuple:
        return tuple(a for a in self.star(e) if self._cod[a] == e)

    def restriction(self, f, g):
        """The unique ``(f|g) <= g`` with domain ``f``; needs ``f <= dom(g)``."""
        if f not in self.objects or g not in self._dom:
            raise PreconditionError(f"restriction needs an object and an arrow, got {f!r}, {g!r}")
        if not self.objects.leq(f, self._dom[g]):
            raise PreconditionError(f"{f!r} is not below the domain of {g!r}")
        found = [h for h in self._down[g] if self._dom[h] == f]
        if len(found) != 1:
            raise InvariantBreach(f"restriction of {g!r} to {f!r} has {len(found)} candidates")
        return found[0]

    def corestriction(self, g, f):
        """The unique ``(g|f) <= g`` with codomain ``f``; defined as ``(f|g^-1)^-1``."""
        return self._inv[self.restriction(f, self._inv[g])]

    def pseudoproduct(self, a, b):
        """``a * b`` through the meet of ``r(a)`` and ``d(b)``; ``None`` if that meet does not exist."""
        m = self.objects.meet(self._cod[a], self._dom[b])
        if m is None:
            return None
        return self.compose(self.corestriction(a, m), self.restriction(m, b))

    def is_inductive(self) -> bool:
        return self.objects.is_meet_semilattice()

    def is_trivial(self) -> bool:
        return len(self.arrows) == len(self.objects)

    def subset_is_subgroupoid(self, arrows: Iterable, wide: bool = False) -> bool:
        s = set(arrows)
        if any(a not in self._dom for a in s):
            return False
        if wide and not set(self.objects) <= s:
            return False
        for a in s:
            if self._inv[a] not in s or self._dom[a] not in s:
                return False
            for b in self._out[self._cod[a]]:
                if b in s and self._mul[(a, b)] not in s:
                    return False
        return True

    def subgroupoid(self, arrows: Iterable, name=None, check=True) -> "OrderedGroupoid":
        """The subgroupoid on ``arrows`` (closed under the operations), with the induced order."""
        s = set(arrows)
        for a in list(s):
            s.add(self._dom[a])
            s.add(self._cod[a])
        if not self.subset_is_subgroupoid(s):
            raise PreconditionError("arrow set is not closed under composition and inverse")
        objs = [x for x in self.objects if x in s]
        return OrderedGroupoid(
            objs,
            [(x, y) for (x, y) in self.objects.pairs if x in s and y in s],
            {a: (self._dom[a], self._cod[a]) for a in s},
            {(a, b): c for (a, b), c in self._mul.items() if a in s and b in s},
            {a: self._inv[a] for a in s},
            [(a, b) for a in s for b in self._up[a] if b in s and a != b],
            name=name,
            check=check,
        )

    def full_subgroupoid(self, objects: Iterable, name=None) -> "OrderedGroupoid":
        objs = set(objects)
        return self.subgroupoid(
            [a for a in self.arrows if self._dom[a] in objs and self._cod[a] in objs], name=name
        )


def validate_ogpd(G: OrderedGroupoid) -> ValidationReport:
    """Check the category laws, inverses, the partial order and OG1-OG3.

    Every axiom is scanned exhaustively; the report keeps the first witness of
    each failed axiom.  Category failures stop the scan because the later
    checks rely on a total composition table.
    """
    rep = ValidationReport()
    objs = set(G.objects)
    for x in G.objects:
        if G._dom[x] != x or G._cod[x] != x:
            rep.add("category.identity", (x,), "identity arrow with wrong endpoints")
    for (a, b), c in G._mul.items():
        if G._cod[a] != G._dom[b]:
            rep.add("category.compose", (a, b), "composite listed for a non-composable pair")
        elif G._dom[c] != G._dom[a] or G._cod[c] != G._cod[b]:
            rep.add("category.compose", (a, b, c), "composite has wrong endpoints")
    for a in G.arrows:
        for b in G._out[G._cod[a]]:
            if (a, b) not in G._mul:
                rep.add("category.compose", (a, b), "composable pair without a composite")
    if not rep.passed:
        return rep
    for a in G.arrows:
        if G._mul[(G._dom[a], a)] != a or G._mul[(a, G._cod[a])] != a:
            rep.add("category.identity", (a,), "identity is not neutral")
    for a in G.arrows:
        for b in G._out[G._cod[a]]:
            ab = G._mul[(a, b)]
            for c in G._out[G._cod[b]]:
                if G._mul[(ab, c)] != G._mul[(a, G._mul[(b, c)])]:
                    rep.add("category.associativity", (a, b, c), "(ab)c != a(bc)")
    for a in G.arrows:
        b = G._inv[a]
        if G._dom[b] != G._cod[a] or G._cod[b] != G._dom[a]:
            rep.add("inverse", (a, b), "inverse has wrong endpoints")
        elif G._mul[(a, b)] != G._dom[a] or G._mul[(b, a)] != G._cod[a]:
            rep.add("inverse", (a, b), "a a^-1 is not the identity at dom(a)")
    if not rep.passed:
        return rep

    for tag, v in ((v.tag, v) for v in G.objects.check().violations):
        rep.add("objects." + tag, v.witness, v.message)
    for a in G.arrows:
        for b in G._up[a]:
            if a != b and a in G._up[b]:
                rep.add("order.antisymmetry", (a, b), "a <= b <= a with a != b")
            if not G._up[b] <= G._up[a]:
                c = next(iter(G._up[b] - G._up[a]))
                rep.add("order.transitivity", (a, b, c), "a <= b <= c but not a <= c")
    for x in objs:
        for y in objs:
            if G.leq(x, y) != G.objects.leq(x, y):
                rep.add("order.objects", (x, y), "identity-arrow order differs from object order")
    # OG1
    for a in G.arrows:
        for b in G._up[a]:
            if not G.leq(G._inv[a], G._inv[b]):
                rep.add("OG1", (a, b), "a <= b but not a^-1 <= b^-1")
    # OG2
    for g1 in G.arrows:
        for h1 in G._out[G._cod[g1]]:
            c1 = G._mul[(g1, h1)]
            for g2 in G._up[g1]:
                for h2 in G._up[h1]:
                    if G._cod[g2] == G._dom[h2] and not G.leq(c1, G._mul[(g2, h2)]):
                        rep.add("OG2", (g1, h1, g2, h2), "g1 <= g2, h1 <= h2 but g1h1 not <= g2h2")
    # OG3: existence and uniqueness of restrictions
    for g in G.arrows:
        for f in G.objects.down(G._dom[g]):
            found = [h for h in G._down[g] if G._dom[h] == f]
            if not found:
                rep.add("OG3.existence", (f, g), "no restriction of g to f")
            elif len(found) > 1:
                rep.add("OG3.uniqueness", (f, g, *csorted(found)[:2]), "restriction of g to f is not unique")
    return rep


def restriction(G: OrderedGroupoid, f, g):
    return G.restriction(f, g)


def corestriction(G: OrderedGroupoid, g, f):
    return G.corestriction(g, f)


def pseudoproduct(G: OrderedGroupoid, a, b):
    return G.pseudoproduct(a, b)


def star(G: OrderedGroupoid, e) -> tuple:
    return G.star(e)


def is_inductive(G: OrderedGroupoid) -> bool:
    return G.is_inductive()


def product(A: OrderedGroupoid, B: OrderedGroupoid, name=None) -> OrderedGroupoid:
    """Componentwise product; arrows are pairs ``(a, b)``."""
    A.require_valid()
    B.require_valid()
    objs = list(_cartesian(A.objects, B.objects))
    arrows = {(a, b): ((A.dom(a), B.dom(b)), (A.cod(a), B.cod(b))) for a in A.arrows for b in B.arrows}
    compose = {}
    for a in A.arrows:
        for b in B.arrows:
            for a2 in A.out_arrows(A.cod(a)):
                for b2 in B.out_arrows(B.cod(b)):
                    compose[((a, b), (a2, b2))] = (A.compose(a, a2), B.compose(b, b2))
    inverse = {(a, b): (A.inv(a), B.inv(b)) for a in A.arrows for b in B.arrows}
    order = [
        ((a, b), (a2, b2))
        for a in A.arrows
        for b in B.arrows
        for a2 in A.up(a)
        for b2 in B.up(b)
        if (a, b) != (a2, b2)
    ]
    obj_order = [((x, y), (x2, y2)) for x, y in objs for x2 in A.objects.up(x) for y2 in B.objects.up(y)]
    return OrderedGroupoid(
        objs, obj_order, arrows, compose, inverse, order,
        name=name or f"{A.name or 'A'}x{B.name or 'B'}",
    )


def trivial_groupoid(P: Poset, name=None) -> OrderedGroupoid:
    """The poset ``P`` as an ordered groupoid with identity arrows only."""
    return OrderedGroupoid(P.elements, P.pairs, {}, {}, {}, P.pairs, name=name)


# ---------------------------------------------------------------------------
# connected components and the partially ordered quotient Q(G)


@dataclass
class Pi0:
    components: dict  # representative object -> frozenset of objects
    component_of: dict  # object -> representative
    preorder: frozenset  # pairs of representatives (c1, c2) meaning c1 <= c2
    Q: Poset  # elements are tuples of component representatives
    q_of: dict  # component representative -> element of Q


def components(G: OrderedGroupoid) -> dict:
    """Map each object to the least object of its connected component."""
    parent = {x: x for x in G.objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in G.arrows:
        ra, rb = find(G.dom(a)), find(G.cod(a))
        if ra != rb:
            lo, hi = csorted([ra, rb])
            parent[hi] = lo
    groups: dict = {}
    for x in G.objects:
        groups.setdefault(find(x), []).append(x)
    out = {}
    for members in groups.values():
        rep = csorted(members)[0]
        for x in members:
            out[x] = rep
    return out


def pi0_quotient(G: OrderedGroupoid) -> Pi0:
    """Components of ``G`` with the induced preorder and its poset collapse Q(G).

    ``C <= D`` when every arrow of ``D`` lies above some arrow of ``C``.
    """
    G.require_valid()
    comp_of = components(G)
    members: dict = {}
    for a in G.arrows:
        members.setdefault(comp_of[G.dom(a)], set()).add(a)
    reps = csorted(members)
    pre = set()
    for c in reps:
        for d in reps:
            if all(any(g in members[c] for g in G.down(h)) for h in members[d]):
                pre.add((c, d))
    classes: dict = {}
    for c in reps:
        key = tuple(d for d in reps if (c, d) in pre and (d, c) in pre)
        classes[c] = key
    Q = Poset(set(classes.values()), [(classes[c], classes[d]) for (c, d) in pre])
    comps = {c: frozenset(x for x in G.objects if comp_of[x] == c) for c in reps}
    return Pi0(comps, comp_of, frozenset(pre), Q, classes)
