"""Constructors for the standard small examples and seeded random instances.

Random groupoids are built presheaf-first: a presheaf of groups over a poset
always satisfies the ordered-groupoid axioms, so generation never dead-ends.
Groups of the presheaf are subquotients ``S_x / N_x`` of one ambient group
``K``, which makes linking maps, morphisms and normal subpresheaves all
"induced by the identity of K" and therefore automatically compatible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .core import OrderedGroupoid, Poset, csorted, product, trivial_groupoid
from .errors import PreconditionError, StructureError
from .functor import OrderedFunctor
from .groups import FiniteGroup
from .search import Budget, monotone_selections

INTERVAL_ARROW = "iota"
INTERVAL_INVERSE = "iota^-1"


# ---------------------------------------------------------------------------
# presheaves of groups


@dataclass
class PresheafSpec:
    """Groups ``G_x`` over a poset with linking homomorphisms ``alpha[(x, y)]`` for ``x >= y``."""

    base: Poset
    groups: dict
    linking: dict = field(default_factory=dict)

    def alpha(self, x, y) -> tuple:
        if x == y:
            return tuple(self.groups[x].elements)
        return self.linking[(x, y)]

    def check(self) -> None:
        P = self.base
        for x in P:
            if x not in self.groups:
                raise StructureError(f"no group at {x!r}")
        for y, x in P.pairs:
            if x == y:
                continue
            if (x, y) not in self.linking:
                raise StructureError(f"missing linking map {x!r} -> {y!r}")
            a, Gx, Gy = self.linking[(x, y)], self.groups[x], self.groups[y]
            if len(a) != Gx.order or any(not 0 <= v < Gy.order for v in a):
                raise StructureError(f"linking map {x!r} -> {y!r} has the wrong shape")
            for g in Gx.elements:
                for h in Gx.elements:
                    if a[Gx.mul(g, h)] != Gy.mul(a[g], a[h]):
                        raise StructureError(f"linking map {x!r} -> {y!r} is not a homomorphism")
        for z, y in P.pairs:
            for y2, x in P.pairs:
                if y2 != y or len({x, y, z}) < 3:
                    continue
                axy, ayz, axz = self.alpha(x, y), self.alpha(y, z), self.alpha(x, z)
                if any(ayz[axy[g]] != axz[g] for g in self.groups[x].elements):
                    raise StructureError(f"linking maps do not compose along {x!r} >= {y!r} >= {z!r}")


def default_label(x, g: int, group: FiniteGroup):
    return x if g == 0 else (x, group.names[g])


def named_label(x, g: int, group: FiniteGroup):
    """``'a@e'`` style labels; the identity of ``G_x`` is the object ``x`` itself."""
    return x if g == 0 else f"{group.names[g]}@{x}"


def presheaf_groupoid(spec: PresheafSpec, *, label: Callable = default_label, name=None,
                      check=True) -> OrderedGroupoid:
    """Disjoint union of the groups ``G_x``, with ``g >= g alpha^x_y``."""
    spec.check()
    P = spec.base
    lab = {(x, g): label(x, g, spec.groups[x]) for x in P for g in spec.groups[x].elements}
    arrows = {lab[(x, g)]: (x, x) for x in P for g in spec.groups[x].elements}
    compose, inverse = {}, {}
    for x in P:
        G = spec.groups[x]
        for g in G.elements:
            inverse[lab[(x, g)]] = lab[(x, G.inv(g))]
            for h in G.elements:
                compose[(lab[(x, g)], lab[(x, h)])] = lab[(x, G.mul(g, h))]
    order = []
    for y, x in P.pairs:
        if x != y:
            a = spec.alpha(x, y)
            order += [(lab[(y, a[g])], lab[(x, g)]) for g in spec.groups[x].elements]
    return OrderedGroupoid(P.elements, P.pairs, arrows, compose, inverse, order, name=name, check=check)


def presheaf_morphism(G: OrderedGroupoid, H: OrderedGroupoid, base_map: Mapping, fibre_maps: Mapping,
                      name=None) -> OrderedFunctor:
    """Functor from arrow-level data: ``fibre_maps[a]`` is the image of each non-identity arrow."""
    m = {x: base_map[x] for x in G.objects}
    for a in G.arrows:
        if a not in G.objects:
            m[a] = fibre_maps[a]
    return OrderedFunctor(G, H, m, name=name)


# ---------------------------------------------------------------------------
# basic groupoids


def interval() -> OrderedGroupoid:
    """Two objects ``0``, ``1`` joined by ``iota`` and its inverse; trivial order."""
    return OrderedGroupoid(
        [0, 1], [],
        {INTERVAL_ARROW: (0, 1), INTERVAL_INVERSE: (1, 0)},
        {(INTERVAL_ARROW, INTERVAL_INVERSE): 0, (INTERVAL_INVERSE, INTERVAL_ARROW): 1},
        {INTERVAL_ARROW: INTERVAL_INVERSE},
        [],
        name="I",
    )


def simplicial(n: int) -> OrderedGroupoid:
    """The groupoid on ``0..n`` with exactly one arrow ``(i, j)`` between any two objects."""
    objs = list(range(n + 1))

    def arr(i, j):
        return i if i == j else (i, j)

    arrows = {arr(i, j): (i, j) for i in objs for j in objs}
    compose = {(arr(i, j), arr(j, k)): arr(i, k) for i in objs for j in objs for k in objs}
    inverse = {arr(i, j): arr(j, i) for i in objs for j in objs}
    return OrderedGroupoid(objs, [], arrows, compose, inverse, [], name=f"Delta{n}")


def group_groupoid(G: FiniteGroup, obj="*", name=None) -> OrderedGroupoid:
    spec = PresheafSpec(Poset([obj]), {obj: G})
    return presheaf_groupoid(spec, name=name or "group")


def basic_groupoid(kind: str, **params) -> OrderedGroupoid:
    if kind == "interval":
        return interval()
    if kind == "trivial":
        P = params.get("poset")
        if P is None:
            P = Poset(params.get("elements", [0]), params.get("leq", ()))
        return trivial_groupoid(P, name="trivial")
    if kind == "simplicial":
        return simplicial(params.get("n", 1))
    if kind == "group":
        return group_groupoid(params.get("group", FiniteGroup.cyclic(2)))
    raise PreconditionError(f"unknown groupoid kind {kind!r}")


def one_point() -> OrderedGroupoid:
    return trivial_groupoid(Poset(["pt"]), name="pt")


# ---------------------------------------------------------------------------
# inverse semigroups


class InverseSemigroupTable:
    """Finite semigroup given by ``mul[(s, t)]``; validated as an inverse semigroup."""

    def __init__(self, elements, mul: Mapping, check=True):
        self.elements = tuple(csorted(elements))
        self.mul = dict(mul)
        if check:
            self.check()
        self.inv = {s: self._find_inverse(s) for s in self.elements}

    def _find_inverse(self, s):
        m = self.mul
        cands = [t for t in self.elements if m[(m[(s, t)], s)] == s and m[(m[(t, s)], t)] == t]
        if len(cands) != 1:
            raise StructureError(f"element {s!r} has {len(cands)} inverses")
        return cands[0]

    def check(self) -> None:
        E, m = self.elements, self.mul
        for s in E:
            for t in E:
                if (s, t) not in m or m[(s, t)] not in set(E):
                    raise StructureError(f"product {s!r}{t!r} missing or outside the set")
        for s in E:
            for t in E:
                st = m[(s, t)]
                for u in E:
                    if m[(st, u)] != m[(s, m[(t, u)])]:
                        raise StructureError("operation is not associative")
        for s in E:
            self._find_inverse(s)
        idem = self.idempotents()
        for e in idem:
            for f in idem:
                if m[(e, f)] != m[(f, e)]:
                    raise StructureError("idempotents do not commute")

    def idempotents(self) -> list:
        return [s for s in self.elements if self.mul[(s, s)] == s]

    def __eq__(self, other):
        return isinstance(other, InverseSemigroupTable) and self.mul == other.mul

    def __hash__(self):
        return hash(frozenset(self.mul.items()))


def semigroup_groupoid(S: InverseSemigroupTable, name=None) -> OrderedGroupoid:
    """The inductive groupoid G(S): ``s: ss^-1 -> s^-1 s``, restricted product, natural order."""
    m, inv = S.mul, S.inv
    objs = S.idempotents()
    arrows = {s: (m[(s, inv[s])], m[(inv[s], s)]) for s in S.elements}
    compose = {}
    for s in S.elements:
        for t in S.elements:
            if arrows[s][1] == arrows[t][0]:
                compose[(s, t)] = m[(s, t)]
    order = [
        (s, t) for s in S.elements for t in S.elements
        if s != t and s == m[(m[(s, inv[s])], t)]
    ]
    obj_order = [(e, f) for e in objs for f in objs if m[(e, f)] == e]
    return OrderedGroupoid(objs, obj_order, arrows, compose, dict(inv), order, name=name or "G(S)")


def groupoid_semigroup(G: OrderedGroupoid) -> InverseSemigroupTable:
    """Inverse semigroup of an inductive groupoid under the pseudoproduct."""
    if not G.is_inductive():
        raise PreconditionError("groupoid is not inductive")
    mul = {(a, b): G.pseudoproduct(a, b) for a in G.arrows for b in G.arrows}
    return InverseSemigroupTable(G.arrows, mul)


def inverse_semigroup_roundtrip(S: InverseSemigroupTable) -> tuple[OrderedGroupoid, InverseSemigroupTable]:
    G = semigroup_groupoid(S)
    if not G.is_inductive():
        raise AssertionError("G(S) is not inductive")
    return G, groupoid_semigroup(G)


def partial_perm_product(s: tuple, t: tuple) -> tuple:
    """``s`` then ``t``; ``-1`` marks an undefined point."""
    return tuple(-1 if s[k] < 0 else t[s[k]] for k in range(len(s)))


def partial_perm_inverse(s: tuple) -> tuple:
    out = [-1] * len(s)
    for k, v in enumerate(s):
        if v >= 0:
            out[v] = k
    return tuple(out)


def inverse_semigroup_generated(gens) -> InverseSemigroupTable:
    """Inverse subsemigroup of the symmetric inverse monoid generated by partial permutations."""
    gens = [tuple(g) for g in gens]
    elems = set(gens) | {partial_perm_inverse(g) for g in gens}
    frontier = list(elems)
    while frontier:
        new = []
        for s in frontier:
            for t in list(elems):
                for u in (partial_perm_product(s, t), partial_perm_product(t, s)):
                    if u not in elems:
                        elems.add(u)
                        new.append(u)
        frontier = new
    mul = {(s, t): partial_perm_product(s, t) for s in elems for t in elems}
    return InverseSemigroupTable(elems, mul)


def random_inverse_semigroup(rng: random.Random, points=3, generators=2) -> InverseSemigroupTable:
    gens = []
    for _ in range(generators):
        dom = [k for k in range(points) if rng.random() < 0.75]
        img = rng.sample(range(points), len(dom))
        s = [-1] * points
        for k, v in zip(dom, img):
            s[k] = v
        gens.append(tuple(s))
    return inverse_semigroup_generated(gens)


# ---------------------------------------------------------------------------
# coset presheaves inside an ambient group


def random_poset(rng: random.Random, n: int, density=0.4) -> Poset:
    pairs = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density}
    changed = True
    while changed:
        changed = False
        for a, b in list(pairs):
            for c, d in list(pairs):
                if b == c and (a, d) not in pairs:
                    pairs.add((a, d))
                    changed = True
    return Poset(range(n), pairs)


def is_normal_in(K: FiniteGroup, N: frozenset, S: frozenset) -> bool:
    return all(K.mul(K.mul(K.inv(s), n), s) in N for s in S for n in N)


@dataclass
class CosetPresheaf:
    """Presheaf ``x -> S[x] / N[x]`` with ``S``, ``N`` decreasing upwards inside ``K``."""

    K: FiniteGroup
    base: Poset
    S: dict
    N: dict

    def __post_init__(self):
        self.quotients = {}
        for x in self.base:
            Q, index = self.K.quotient(self.S[x], self.N[x])
            reps = [None] * Q.order
            for g, i in index.items():
                if reps[i] is None or g < reps[i]:
                    reps[i] = g
            Q.names = tuple(str(r) for r in reps)
            self.quotients[x] = (Q, index, reps)

    def spec(self) -> PresheafSpec:
        groups = {x: q[0] for x, q in self.quotients.items()}
        linking = {}
        for y, x in self.base.pairs:
            if x != y:
                _, _, reps = self.quotients[x]
                _, iy, _ = self.quotients[y]
                linking[(x, y)] = tuple(iy[r] for r in reps)
        return PresheafSpec(self.base, groups, linking)

    def groupoid(self, name=None) -> OrderedGroupoid:
        return presheaf_groupoid(self.spec(), name=name)

    def arrow(self, x, k: int):
        """Arrow id of the coset of the ambient element ``k`` in ``S[x]/N[x]``."""
        Q, index, _ = self.quotients[x]
        return default_label(x, index[k], Q)

    def coset_of(self, a) -> tuple:
        """``(x, representative)`` of an arrow id."""
        if isinstance(a, tuple):
            x, nm = a
            return x, int(nm)
        return a, 0


def _normal_choices(K, S, lower, upper):
    return [N for N in K.subgroups if lower <= N <= upper and N <= S and is_normal_in(K, N, S)]


def random_coset_presheaf(rng: random.Random, K: FiniteGroup, P: Poset, *,
                          trivial_kernel_bias=0.5) -> CosetPresheaf:
    S, N = {}, {}
    full = frozenset(K.elements)
    for x in reversed(P.linear_extension()):
        above = [z for z in P.up(x) if z != x]
        low = K.closure(set().union(*[S[z] for z in above])) if above else frozenset({0})
        S[x] = rng.choice(K.subgroups_between(low, full))
        nlow = K.normal_closure(set().union(*[N[z] for z in above]) if above else {0}, within=S[x])
        choices = _normal_choices(K, S[x], nlow, S[x])
        N[x] = choices[0] if rng.random() < trivial_kernel_bias else rng.choice(choices)
    return CosetPresheaf(K, P, S, N)


def normal_subpresheaf(rng: random.Random, G: CosetPresheaf) -> tuple[frozenset, CosetPresheaf]:
    """A random normal subpresheaf ``M/N`` of ``G``, as arrow ids, plus the quotient presheaf ``S/M``."""
    K, P = G.K, G.base
    M = {}
    for x in reversed(P.linear_extension()):
        above = [z for z in P.up(x) if z != x]
        low = K.normal_closure(set(G.N[x]).union(*[M[z] for z in above]), within=G.S[x])
        M[x] = rng.choice(_normal_choices(K, G.S[x], low, G.S[x]))
    arrows = frozenset(G.arrow(x, k) for x in P for k in M[x])
    return arrows, CosetPresheaf(K, P, dict(G.S), M)


def quotient_presheaf_map(G: CosetPresheaf, Q: CosetPresheaf, GG: OrderedGroupoid,
                          QQ: OrderedGroupoid) -> OrderedFunctor:
    """The canonical ``S/N -> S/M`` presheaf morphism."""
    m = {}
    for a in GG.arrows:
        x, k = G.coset_of(a)
        m[a] = Q.arrow(x, k)
    return OrderedFunctor(GG, QQ, m, name="quotient")


def random_monotone_map(rng: random.Random, P: Poset, Q: Poset) -> dict:
    order = P.linear_extension()
    below = {x: [y for y in P.down(x) if y != x] for x in P}
    cands = {x: list(Q.elements) for x in P}
    return next(monotone_selections(order, below, cands, Q.leq, Budget(None), rng=rng))


def random_presheaf_morphism(rng: random.Random, H: CosetPresheaf, P: Poset, *,
                             surjective_bias=0.5) -> tuple[CosetPresheaf, dict]:
    """A coset presheaf ``G`` over ``P`` and base map ``beta`` with ``S_x <= T_{x beta}``, ``N_x <= M_{x beta}``."""
    K = H.K
    beta = random_monotone_map(rng, P, H.base)
    S, N = {}, {}
    for x in reversed(P.linear_extension()):
        above = [z for z in P.up(x) if z != x]
        T, M = H.S[beta[x]], H.N[beta[x]]
        low = K.closure(set().union(*[S[z] for z in above])) if above else frozenset({0})
        if rng.random() < surjective_bias:
            S[x] = T
        else:
            S[x] = rng.choice(K.subgroups_between(low, T))
        nlow = K.normal_closure(set().union(*[N[z] for z in above]) if above else {0}, within=S[x])
        choices = _normal_choices(K, S[x], nlow, M & S[x])
        N[x] = choices[0] if rng.random() < 0.5 else rng.choice(choices)
    return CosetPresheaf(K, P, S, N), beta


def coset_morphism(G: CosetPresheaf, H: CosetPresheaf, beta: Mapping, GG: OrderedGroupoid,
                   HH: OrderedGroupoid, name=None) -> OrderedFunctor:
    m = {}
    for a in GG.arrows:
        x, k = G.coset_of(a)
        m[a] = H.arrow(beta[x], k)
    return OrderedFunctor(GG, HH, m, name=name)


AMBIENT_GROUPS = {
    "C1": FiniteGroup.trivial,
    "C2": lambda: FiniteGroup.cyclic(2),
    "C3": lambda: FiniteGroup.cyclic(3),
    "C4": lambda: FiniteGroup.cyclic(4),
    "V4": FiniteGroup.klein,
    "S3": lambda: FiniteGroup.symmetric(3),
    "C6": lambda: FiniteGroup.cyclic(6),
    "D4": lambda: FiniteGroup.dihedral(4),
}


def ambient_group(rng: random.Random, max_order=8) -> FiniteGroup:
    names = [k for k, f in AMBIENT_GROUPS.items() if f().order <= max_order]
    return AMBIENT_GROUPS[rng.choice(names)]()


# ---------------------------------------------------------------------------
# random instances


@dataclass
class RandomInstance:
    groupoid: OrderedGroupoid
    functor: OrderedFunctor | None = None
    normal: frozenset | None = None
    seed: int = 0


def random_instance(seed: int, *, objects=3, max_order=6, with_interval=False,
                    with_functor=True, with_normal=True) -> RandomInstance:
    """Seeded random groupoid with an optional ordered functor out of it and a normal subgroupoid.

    The groupoid is a coset presheaf (optionally times the interval), the
    functor a presheaf morphism to another coset presheaf, and the normal
    subgroupoid a normal subpresheaf (times the interval, if used).
    """
    rng = random.Random(seed)
    K = ambient_group(rng, max_order)
    n = rng.randint(1, objects)
    Qbase = random_poset(rng, rng.randint(1, objects))
    Hc = random_coset_presheaf(rng, K, Qbase)
    Gc, beta = random_presheaf_morphism(rng, Hc, random_poset(rng, n))
    G = Gc.groupoid(name=f"G{seed}")
    H = Hc.groupoid(name=f"H{seed}")
    theta = coset_morphism(Gc, Hc, beta, G, H, name="theta") if with_functor else None
    normal = None
    if with_normal:
        normal, _ = normal_subpresheaf(rng, Gc)
    if with_interval:
        I = interval()
        GI = product(G, I, name=f"G{seed}xI")
        if theta is not None:
            HI = product(H, I, name=f"H{seed}xI")
            theta = OrderedFunctor(GI, HI, {(a, t): (theta(a), t) for a, t in GI.arrows}, name="theta")
        if normal is not None:
            use_interval = rng.random() < 0.5
            normal = frozenset(
                (a, t) for a, t in GI.arrows if a in normal and (use_interval or t in I.objects)
            )
        G = GI
    return RandomInstance(G, theta, normal, seed)


def random_functor_between(rng: random.Random, A: OrderedGroupoid, B: OrderedGroupoid,
                           budget=None) -> OrderedFunctor | None:
    """A uniformly chosen ordered functor ``A -> B`` (exhaustive enumeration, so keep both small)."""
    from .functor import enumerate_functors

    fs = enumerate_functors(A, B, budget=budget)
    return rng.choice(fs) if fs else None


# ---------------------------------------------------------------------------
# the named fixtures


def klein_groupoids():
    """``E``, ``G``, ``H`` with ``G_z`` the Klein four-group and ``H_1 -> H_0`` the map ``x -> y``."""
    E = Poset(["e", "f", "z"], [("z", "e"), ("z", "f")])
    C2a = FiniteGroup.cyclic(2, names=("1", "a"))
    C2b = FiniteGroup.cyclic(2, names=("1", "b"))
    V = FiniteGroup.klein(names=("1", "a", "b", "ab"))
    Gspec = PresheafSpec(E, {"e": C2a, "f": C2b, "z": V}, {("e", "z"): (0, 1), ("f", "z"): (0, 2)})
    G = presheaf_groupoid(Gspec, label=named_label, name="G")
    Hbase = Poset(["1", "0"], [("0", "1")])
    Hspec = PresheafSpec(
        Hbase,
        {"1": FiniteGroup.cyclic(2, names=("1", "x")), "0": FiniteGroup.cyclic(2, names=("1", "y"))},
        {("1", "0"): (0, 1)},
    )
    H = presheaf_groupoid(Hspec, label=named_label, name="H")
    Eg = trivial_groupoid(E, name="E")
    p = OrderedFunctor(G, H, {
        "e": "1", "f": "1", "z": "0",
        "a@e": "x@1", "b@f": "x@1",
        "a@z": "y@0", "b@z": "y@0", "ab@z": "0",
    }, name="p")
    i = OrderedFunctor(Eg, G, {x: x for x in Eg.arrows}, name="i")
    return Eg, G, H, p, i


@dataclass
class Fixture:
    name: str
    parts: dict

    def __getitem__(self, key):
        return self.parts[key]

    def __getattr__(self, key):
        try:
            return self.__dict__["parts"][key]
        except KeyError:
            raise AttributeError(key) from None


def example_vi_groupoid() -> OrderedGroupoid:
    """Seven idempotents ``x, y > k, l, m, n > z`` (``k, m < x``; ``l, n < y``), arrows ``iota: k -> l``, ``eta: m -> n``."""
    objs = ["x", "y", "k", "l", "m", "n", "z"]
    covers = [("k", "x"), ("m", "x"), ("l", "y"), ("n", "y")]
    obj_order = covers + [("z", w) for w in ("k", "l", "m", "n", "x", "y")]
    arrows = {"iota": ("k", "l"), "iota^-1": ("l", "k"), "eta": ("m", "n"), "eta^-1": ("n", "m")}
    compose = {
        ("iota", "iota^-1"): "k", ("iota^-1", "iota"): "l",
        ("eta", "eta^-1"): "m", ("eta^-1", "eta"): "n",
    }
    inverse = {"iota": "iota^-1", "eta": "eta^-1"}
    order = obj_order + [("z", a) for a in arrows]
    return OrderedGroupoid(objs, obj_order, arrows, compose, inverse, order, name="S")


def example_vi_quotient_poset() -> Poset:
    """The expected order on the five classes: two maximal over two middle over one minimum."""
    return Poset(
        ["x", "y", "k", "m", "z"],
        [("k", "x"), ("k", "y"), ("m", "x"), ("m", "y"),
         ("z", "k"), ("z", "m"), ("z", "x"), ("z", "y")],
    )


def fixtures(name: str) -> Fixture:
    from .homotopy import HomotopySquare, make_homotopy

    if name == "klein_hlp":
        E, G, H, p, i = klein_groupoids()
        F = make_homotopy(E, p, i, {"e": "x@1", "f": "x@1", "z": "y@0"})
        sq = HomotopySquare(E, p, i, F)
        F1 = make_homotopy(E, p, i, {"e": "1", "f": "1", "z": "0"})
        return Fixture(name, {"E": E, "G": G, "H": H, "p": p, "i": i, "square": sq,
                              "identity_square": HomotopySquare(E, p, i, F1)})
    if name == "pstar":
        E, G, H, p, i = klein_groupoids()
        tau = {"e": "x@1", "f": "x@1", "z": "y@0"}
        return Fixture(name, {"E": E, "G": G, "H": H, "p": p, "i": i, "tau": tau})
    if name == "example_vi":
        S = example_vi_groupoid()
        return Fixture(name, {"S": S, "A": frozenset(S.arrows), "expected": example_vi_quotient_poset()})
    raise PreconditionError(f"unknown fixture {name!r}; choose from klein_hlp, pstar, example_vi")


FIXTURE_NAMES = ("klein_hlp", "pstar", "example_vi")


def all_small_groupoids() -> list[OrderedGroupoid]:
    """A fixed menu of tiny groupoids used as sources and targets in exhaustive searches."""
    E, G, H, _, _ = klein_groupoids()
    return [
        one_point(),
        interval(),
        simplicial(2),
        group_groupoid(FiniteGroup.cyclic(2)),
        group_groupoid(FiniteGroup.cyclic(3)),
        trivial_groupoid(Poset([0, 1], [(0, 1)]), name="chain2"),
        E,
        H,
    ]
