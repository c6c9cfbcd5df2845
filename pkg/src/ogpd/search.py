"""Search budgets and the monotone-selection solver used by several modules."""

from __future__ import annotations

import random
from typing import Callable, Hashable, Iterator, Mapping, Sequence

from .errors import BudgetExceeded

DEFAULT_BUDGET = 10**6


class Budget:
    """Counts visited partial assignments; raises once ``limit`` is passed.

    One budget object may be shared by several nested searches so that a
    command-line invocation has a single global bound.
    """

    def __init__(self, limit: int | None = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"search budget of {self.limit} partial assignments exhausted")

    def __repr__(self):
        return f"Budget(used={self.used}, limit={self.limit})"


def as_budget(budget) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(DEFAULT_BUDGET if budget is None else budget)


def monotone_selections(
    order: Sequence[Hashable],
    below: Mapping[Hashable, Sequence[Hashable]],
    candidates: Mapping[Hashable, Sequence[Hashable]],
    leq: Callable[[Hashable, Hashable], bool],
    budget: Budget,
    rng: random.Random | None = None,
) -> Iterator[dict]:
    """Yield every choice ``x -> candidates[x]`` with ``sel[y] <= sel[x]`` for ``y`` in ``below[x]``.

    ``order`` must list each key after all keys in ``below`` of it, so the
    constraint is checked as soon as the upper key is placed.  With ``rng``
    the candidate order is shuffled (used for random sampling); otherwise the
    given order is kept and the output is deterministic.
    """
    keys = list(order)
    sel: dict = {}

    def rec(i):
        if i == len(keys):
            yield dict(sel)
            return
        x = keys[i]
        cands = list(candidates[x])
        if rng is not None:
            rng.shuffle(cands)
        for c in cands:
            budget.tick()
            if all(leq(sel[y], c) for y in below[x]):
                sel[x] = c
                yield from rec(i + 1)
                del sel[x]

    yield from rec(0)
