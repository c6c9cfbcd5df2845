"""Small finite groups given by multiplication tables, with brute-force subgroup lattices."""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class FiniteGroup:
    """Group on ``range(n)`` with identity ``0``.

    ``names`` gives printable element names (used to label arrows).
    """

    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str] | None = None, check=True):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(self.order))
        inv = [None] * self.order
        for g in range(self.order):
            for h in range(self.order):
                if self.table[g][h] == 0:
                    inv[g] = h
        self.inverse = tuple(inv)
        if check:
            self._check()

    def _check(self):
        n = self.order
        rng = range(n)
        if any(len(row) != n for row in self.table):
            raise ValueError("multiplication table is not square")
        if any(self.table[0][g] != g or self.table[g][0] != g for g in rng):
            raise ValueError("0 is not the identity")
        if any(i is None for i in self.inverse):
            raise ValueError("element without inverse")
        for a in rng:
            for b in rng:
                ab = self.table[a][b]
                for c in rng:
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise ValueError("multiplication is not associative")

    def __repr__(self):
        return f"<FiniteGroup order {self.order}>"

    def __len__(self):
        return self.order

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverse[a]

    @property
    def elements(self) -> range:
        return range(self.order)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_permutations(cls, generators: Iterable[tuple], names=None) -> "FiniteGroup":
        """Close a set of permutations (tuples) under composition; element 0 is the identity."""
        gens = [tuple(g) for g in generators]
        if not gens:
            return cls.trivial()
        n = len(gens[0])
        ident = tuple(range(n))
        elems = [ident]
        seen = {ident}
        i = 0
        while i < len(elems):
            for g in gens:
                h = tuple(g[elems[i][k]] for k in range(n))
                if h not in seen:
                    seen.add(h)
                    elems.append(h)
            i += 1
        index = {p: k for k, p in enumerate(elems)}
        # a*b means "a then b"
        table = [[index[tuple(b[a[k]] for k in range(n))] for b in elems] for a in elems]
        return cls(table, names)

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls([[0]], ["1"])

    @classmethod
    def cyclic(cls, n: int, names=None) -> "FiniteGroup":
        return cls([[(a + b) % n for b in range(n)] for a in range(n)], names)

    @classmethod
    def klein(cls, names=("1", "a", "b", "ab")) -> "FiniteGroup":
        # 1 = 00, a = 01, b = 10, ab = 11 under xor
        return cls([[a ^ b for b in range(4)] for a in range(4)], names)

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        if n < 2:
            return cls.trivial()
        gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
        return cls.from_permutations(gens)

    @classmethod
    def dihedral(cls, n: int) -> "FiniteGroup":
        rot = tuple((k + 1) % n for k in range(n))
        ref = tuple((-k) % n for k in range(n))
        return cls.from_permutations([rot, ref])

    @classmethod
    def direct_product(cls, G: "FiniteGroup", H: "FiniteGroup") -> "FiniteGroup":
        m = H.order
        table = [
            [G.mul(a // m, b // m) * m + H.mul(a % m, b % m) for b in range(G.order * m)]
            for a in range(G.order * m)
        ]
        return cls(table)

    # -- subgroups -----------------------------------------------------------

    def closure(self, gens: Iterable[int]) -> frozenset:
        out = {0}
        frontier = list(set(gens))
        while frontier:
            g = frontier.pop()
            if g in out:
                continue
            out.add(g)
            for h in list(out):
                for x in (self.mul(g, h), self.mul(h, g)):
                    if x not in out:
                        frontier.append(x)
        return frozenset(out)

    @cached_property
    def subgroups(self) -> tuple[frozenset, ...]:
        subs = {frozenset({0})}
        elems = list(self.elements)
        for r in (1, 2, 3):
            for gens in combinations(elems[1:], r):
                subs.add(self.closure(gens))
        return tuple(sorted(subs, key=lambda s: (len(s), sorted(s))))

    def is_normal(self, N: frozenset) -> bool:
        return all(self.mul(self.mul(self.inv(g), n), g) in N for g in self.elements for n in N)

    @cached_property
    def normal_subgroups(self) -> tuple[frozenset, ...]:
        return tuple(N for N in self.subgroups if self.is_normal(N))

    def normal_closure(self, S: Iterable[int], within: frozenset | None = None) -> frozenset:
        """Smallest subgroup of ``within`` (default: the whole group) that contains ``S`` and is normal in it."""
        ambient = within if within is not None else frozenset(self.elements)
        gens = set(S)
        while True:
            H = self.closure(gens)
            conj = {self.mul(self.mul(self.inv(g), h), g) for g in ambient for h in H}
            if conj <= H:
                return H
            gens |= conj

    def subgroups_between(self, lower: frozenset, upper: frozenset) -> list[frozenset]:
        return [S for S in self.subgroups if lower <= S <= upper]

    def right_coset(self, H: frozenset, g: int) -> frozenset:
        return frozenset(self.mul(h, g) for h in H)

    def right_cosets(self, H: frozenset, within: frozenset) -> list[frozenset]:
        out = []
        for g in sorted(within):
            c = self.right_coset(H, g)
            if c not in out:
                out.append(c)
        return out

    def quotient(self, S: frozenset, N: frozenset) -> tuple["FiniteGroup", dict]:
        """The group ``S/N`` as a table, plus the map from ``S`` to coset indices."""
        cosets = self.right_cosets(N, S)
        # put the coset of the identity first
        cosets.sort(key=lambda c: (0 not in c, min(c)))
        index = {}
        for i, c in enumerate(cosets):
            for g in c:
                index[g] = i
        reps = [min(c) for c in cosets]
        table = [[index[self.mul(a, b)] for b in reps] for a in reps]
        return FiniteGroup(table, check=False), index


def small_groups() -> list[FiniteGroup]:
    """A menu of small groups (order at most 8) used by the random generators."""
    return [
        FiniteGroup.trivial(),
        FiniteGroup.cyclic(2),
        FiniteGroup.cyclic(3),
        FiniteGroup.klein(),
        FiniteGroup.cyclic(4),
        FiniteGroup.symmetric(3),
        FiniteGroup.cyclic(6),
        FiniteGroup.dihedral(4),
    ]
