"""Homotopy-lifting squares, the per-square lift search, and certified lift constructions.

A lift of a square ``(A, p, f, F)`` is pinned down by one arrow per object
``x`` of ``A``: an arrow ``g_x`` in the star of ``xf`` with ``g_x p = (x, iota)F``,
chosen monotonically in ``x``.  Everything else follows from
``(a, iota) -> (af) g_{a r}``.  The search therefore runs over object-indexed
choices only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Mapping

from .builders import INTERVAL_ARROW, INTERVAL_INVERSE, interval
from .core import OrderedGroupoid, Poset, product
from .errors import InvariantBreach, PreconditionError
from .functor import OrderedFunctor, star_class, star_injective_at
from .search import as_budget, monotone_selections

_INTERVAL = interval()
_PRODUCTS: dict = {}


def cylinder(A: OrderedGroupoid) -> OrderedGroupoid:
    """``A x I`` (cached per source groupoid)."""
    key = id(A)
    hit = _PRODUCTS.get(key)
    if hit is None or hit[0] is not A:
        hit = (A, product(A, _INTERVAL, name=f"{A.name or 'A'}xI"))
        _PRODUCTS[key] = hit
    return hit[1]


def i0(a):
    return (a, 0)


@dataclass
class HomotopySquare:
    """``f: A -> G`` over ``p: G -> H`` together with a homotopy ``F: A x I -> H`` starting at ``fp``."""

    A: OrderedGroupoid
    p: OrderedFunctor
    f: OrderedFunctor
    F: OrderedFunctor

    def __post_init__(self):
        if self.f.source != self.A or self.f.target != self.p.source:
            raise PreconditionError("f must run from A to the source of p")
        if self.F.target != self.p.target:
            raise PreconditionError("F must land in the target of p")
        if self.F.source != cylinder(self.A):
            raise PreconditionError("F must be defined on A x I")
        for a in self.A.arrows:
            if self.F((a, 0)) != self.p(self.f(a)):
                raise PreconditionError(f"square does not commute at {a!r}: (a,0)F != afp")

    def path(self, x):
        """``(x, iota)F``, the arrow the object ``x`` travels along."""
        return self.F((x, INTERVAL_ARROW))


def make_homotopy(A: OrderedGroupoid, p: OrderedFunctor, f: OrderedFunctor, paths: Mapping,
                  name="F") -> OrderedFunctor:
    """The homotopy ``F`` with ``(a, 0)F = afp`` and ``(x, iota)F = paths[x]``.

    The remaining values are forced: ``(a, iota)F = (afp) l_y`` for ``a: x -> y``,
    ``(a, 1)F = l_x^-1 (afp) l_y`` and ``(a, iota^-1)F = l_x^-1 (afp)``.
    """
    H = p.target
    AI = cylinder(A)
    for x in A.objects:
        l = paths[x]
        if H.dom(l) != p(f(x)):
            raise PreconditionError(f"path at {x!r} does not start at x f p")
    m = {}
    for a in A.arrows:
        x, y = A.dom(a), A.cod(a)
        base = p(f(a))
        lx, ly = paths[x], paths[y]
        m[(a, 0)] = base
        m[(a, INTERVAL_ARROW)] = H.compose(base, ly)
        m[(a, 1)] = H.compose(H.inv(lx), base, ly)
        m[(a, INTERVAL_INVERSE)] = H.compose(H.inv(lx), base)
    return OrderedFunctor(AI, H, m, name=name)


def square_from_paths(A, p, f, paths) -> HomotopySquare:
    return HomotopySquare(A, p, f, make_homotopy(A, p, f, paths))


def iter_path_choices(A: OrderedGroupoid, p: OrderedFunctor, f: OrderedFunctor, budget=None,
                      rng=None) -> Iterator[dict]:
    """Monotone choices ``x -> l_x`` in the star of ``x f p``; each defines a homotopy."""
    H = p.target
    order = A.objects.linear_extension()
    below = {x: [y for y in A.objects.down(x) if y != x] for x in A.objects}
    cands = {x: list(H.star(p(f(x)))) for x in A.objects}
    yield from monotone_selections(order, below, cands, H.leq, as_budget(budget), rng)


def random_square(rng, p: OrderedFunctor, A: OrderedGroupoid, f: OrderedFunctor, budget=None) -> HomotopySquare:
    """A square over ``p`` with uniformly shuffled monotone paths."""
    for paths in iter_path_choices(A, p, f, budget, rng):
        return square_from_paths(A, p, f, paths)
    raise InvariantBreach("identity paths are always monotone, yet none was found")


# ---------------------------------------------------------------------------
# lifts


def assemble_lift(sq: HomotopySquare, choice: Mapping, *, check=True, name="F~") -> OrderedFunctor:
    """The functor ``A x I -> G`` determined by per-object choices ``g_x``."""
    A, G = sq.A, sq.p.source
    m = {}
    for a in A.arrows:
        x, y = A.dom(a), A.cod(a)
        af = sq.f(a)
        gx, gy = choice[x], choice[y]
        m[(a, 0)] = af
        m[(a, INTERVAL_ARROW)] = G.compose(af, gy)
        m[(a, 1)] = G.compose(G.inv(gx), af, gy)
        m[(a, INTERVAL_INVERSE)] = G.compose(G.inv(gx), af)
    return OrderedFunctor(cylinder(A), G, m, name=name, check=check)


def is_lift(sq: HomotopySquare, Ft: OrderedFunctor) -> bool:
    """``i0 Ft = f`` and ``Ft p = F``, with ``Ft`` a valid ordered functor."""
    if Ft.source != cylinder(sq.A) or Ft.target != sq.p.source:
        return False
    if not Ft.report().passed:
        return False
    if any(Ft((a, 0)) != sq.f(a) for a in sq.A.arrows):
        return False
    return all(sq.p(Ft(c)) == sq.F(c) for c in Ft.source.arrows)


def lift_candidates(sq: HomotopySquare) -> dict:
    """For each object ``x``: arrows in the star of ``xf`` over ``(x, iota)F``."""
    G, p = sq.p.source, sq.p
    return {x: [g for g in G.star(sq.f(x)) if p(g) == sq.path(x)] for x in sq.A.objects}


def iter_lift_choices(sq: HomotopySquare, budget=None) -> Iterator[dict]:
    """All monotone choices ``x -> g_x``, minimal objects first, in canonical order."""
    A = sq.A
    budget = as_budget(budget)
    order = A.objects.linear_extension()
    below = {x: [y for y in A.objects.down(x) if y != x] for x in A.objects}
    yield from monotone_selections(order, below, lift_candidates(sq), sq.p.source.leq, budget)


def iter_lifts(sq: HomotopySquare, budget=None) -> Iterator[OrderedFunctor]:
    for choice in iter_lift_choices(sq, budget):
        Ft = assemble_lift(sq, choice, check=False)
        if not Ft.report().passed:
            raise InvariantBreach(f"monotone choice {choice!r} did not give an ordered functor: "
                                  f"{Ft.report().violations[0]}")
        yield Ft


def find_lift(sq: HomotopySquare, budget=None) -> OrderedFunctor | None:
    """First lift in canonical order, or ``None`` once the search space is exhausted."""
    for Ft in iter_lifts(sq, budget):
        return Ft
    return None


def lift_choice_of(Ft: OrderedFunctor, A: OrderedGroupoid) -> dict:
    return {x: Ft((x, INTERVAL_ARROW)) for x in A.objects}


def path_lift(p: OrderedFunctor, e, h):
    """Some arrow of ``star(e)`` over ``h``, or ``None``; ``h`` must start at ``e p``."""
    H = p.target
    if h not in H or H.dom(h) != p(e):
        raise PreconditionError(f"{h!r} is not in the star of {p(e)!r}")
    for g in p.source.star(e):
        if p(g) == h:
            return g
    return None


def has_path_lifting(p: OrderedFunctor) -> bool:
    G, H = p.source, p.target
    return all(path_lift(p, e, h) is not None for e in G.objects for h in H.star(p(e)))


# ---------------------------------------------------------------------------
# certified lifts


_CERTIFIED: dict[str, Callable] = {}


def register_lift(tag: str):
    def deco(fn):
        _CERTIFIED[tag] = fn
        return fn
    return deco


def certified_lift(sq: HomotopySquare) -> OrderedFunctor:
    """Dispatch on the construction tag carried by ``sq.p``."""
    cert = sq.p.cert
    if cert is None:
        if star_class(sq.p).bijective:
            return lift_covering(sq)
        raise PreconditionError("functor carries no strong-fibration certificate")
    tag = cert[0]
    if tag not in _CERTIFIED:
        raise PreconditionError(f"no certified lift for {tag!r}")
    return _CERTIFIED[tag](sq)


def _finish(sq, choice, formula: Callable | None, name) -> OrderedFunctor:
    Ft = assemble_lift(sq, choice, check=True, name=name)
    if formula is not None:
        for a in sq.A.arrows:
            if formula(a) != Ft((a, INTERVAL_ARROW)):
                raise InvariantBreach(f"lift formula disagrees with (af)g at {a!r}")
    if not is_lift(sq, Ft):
        raise InvariantBreach("constructed functor is not a lift")
    return Ft


@register_lift("covering")
def lift_covering(sq: HomotopySquare) -> OrderedFunctor:
    """``g_x`` = the unique star lift of ``(x, iota)F`` at ``xf``; then ``(a, iota) -> (af) g``."""
    if not star_class(sq.p).bijective:
        raise PreconditionError("p is not a covering")
    A, G = sq.A, sq.p.source
    cands = lift_candidates(sq)
    choice = {}
    for x in A.objects:
        if len(cands[x]) != 1:
            raise InvariantBreach(f"covering has {len(cands[x])} star lifts at {x!r}")
        choice[x] = cands[x][0]
    for x in A.objects:
        for y in A.objects.down(x):
            if choice[y] != G.restriction(sq.f(y), choice[x]):
                raise InvariantBreach(f"lift at {y!r} is not the restriction of the lift at {x!r}")
    return _finish(sq, choice, None, "F~cov")


@register_lift("eps")
def lift_eps(sq: HomotopySquare) -> OrderedFunctor:
    """Lift against an evaluation map of the triple model ``OGPD(I, H)``.

    Objects of the triple model are arrows ``h`` of ``H`` (stored as ``(h, h d, h)``).
    For ``af = [h_x, t_a, h_y]`` and ``l_y = (y, iota)F``:
    evaluation at 0 lifts by ``[h_x, t_a l_y, l_y r]``, evaluation at 1 by ``[h_x, t_a, h_y l_y]``.
    """
    cert = sq.p.cert
    if cert is None or cert[0] != "eps":
        raise PreconditionError("p is not an evaluation map of the triple model")
    end, H = cert[1], cert[2]
    A = sq.A
    h = {x: sq.f(x)[0] for x in A.objects}
    choice = {}
    for y in A.objects:
        l = sq.path(y)
        if end == 0:
            choice[y] = (h[y], l, H.cod(l))
        else:
            if H.dom(l) != H.cod(h[y]):
                raise InvariantBreach("path does not start at the end of h_y")
            choice[y] = (h[y], H.dom(h[y]), H.compose(h[y], l))

    def formula(a):
        hx, t, hy = sq.f(a)
        l = sq.path(A.cod(a))
        if end == 0:
            return (hx, H.compose(t, l), H.cod(l))
        return (hx, t, H.compose(hy, l))

    return _finish(sq, choice, formula, f"F~eps{end}")


def lift_through_immersion(sq: HomotopySquare, psi: OrderedFunctor, p: OrderedFunctor,
                           lifter: Callable[[HomotopySquare], OrderedFunctor] = None) -> OrderedFunctor:
    """Lift against ``pi = sq.p`` when ``p = pi psi`` has a lift procedure and ``psi`` is an immersion.

    The homotopy is pushed down along ``psi``, lifted against ``p`` and the
    result is checked to lift the original homotopy (forced by star-injectivity).
    """
    pi = sq.p
    if psi.source != pi.target:
        raise PreconditionError("psi must start where pi ends")
    if not star_class(psi).injective:
        raise PreconditionError("psi is not an immersion")
    composite = pi.then(psi)
    if composite.mapping != p.mapping:
        raise PreconditionError("p does not factor as pi followed by psi")
    F_star = sq.F.then(psi)
    lifted = (lifter or certified_lift)(HomotopySquare(sq.A, p, sq.f, F_star))
    for c in lifted.source.arrows:
        x = lifted.source.dom(c)
        if not star_injective_at(psi, sq.F(x)):
            raise InvariantBreach("psi fails to be star-injective along the homotopy")
        if pi(lifted(c)) != sq.F(c):
            raise InvariantBreach(f"pushed lift does not lift F at {c!r}")
    if not is_lift(sq, lifted):
        raise InvariantBreach("lift through immersion failed verification")
    return lifted


# ---------------------------------------------------------------------------
# loops


def omega_poset(H: OrderedGroupoid) -> Poset:
    """All arrows of ``H`` under the arrow order."""
    return Poset(H.arrows, [(a, b) for a in H.arrows for b in H.up(a)], check=False)


def loops_iso(H: OrderedGroupoid):
    """Order isomorphism ``h -> (h, hd, h)`` from the arrows of H onto ``ker eps0 & ker eps1``."""
    from .cocylinder import loops_iso as _impl

    return _impl(H)


# ---------------------------------------------------------------------------
# transposition of squares against p_*


def transpose_square(sq: HomotopySquare, T: OrderedGroupoid, p: OrderedFunctor, src_mg, tgt_mg) -> HomotopySquare:
    """A square against ``p_*: OGPD(T, G) -> OGPD(T, H)`` becomes one against ``p`` on ``T x A``.

    ``src_mg``, ``tgt_mg`` are the mapping groupoids ``OGPD(T, G)`` and ``OGPD(T, H)``.
    The new homotopy is read off the paths: ``((t, x), iota)`` goes to the
    composite of ``t`` at the start functor and the component at ``cod t``.
    """
    A = sq.A
    G, H = p.source, p.target
    TA = product(T, A, name=f"{T.name or 'T'}x{A.name or 'A'}")

    def transposed(arrow_of, mg, target):
        def at(t, a):
            nat = arrow_of(a)
            start = mg.functor_of(mg.groupoid.dom(nat))
            comps = dict(zip(mg.object_order, nat[2]))
            return target.compose(start(t), comps[T.cod(t)])
        return at

    f_at = transposed(sq.f, src_mg, G)
    f_nat = OrderedFunctor(TA, G, {(t, a): f_at(t, a) for t, a in TA.arrows}, name="f#")
    paths = {}
    for t, x in TA.objects:
        comps = dict(zip(tgt_mg.object_order, sq.path(x)[2]))
        paths[(t, x)] = comps[t]
    return square_from_paths(TA, p, f_nat, paths)


def untranspose_lift(lift: OrderedFunctor, sq: HomotopySquare, T: OrderedGroupoid, src_mg) -> dict:
    """Per-object choices for the square against ``p_*`` from a lift of the transposed square."""
    A = sq.A
    choice = {}
    for x in A.objects:
        start = src_mg.functor_of(sq.f(x))
        comps = {t: lift(((t, x), INTERVAL_ARROW)) for t in T.objects}
        choice[x] = src_mg.arrow_of(start, comps)
    return choice
