"""Graphviz DOT text for groupoids, functors and factorizations.

Objects become nodes, non-identity arrows solid edges and covers of the
object order dashed edges drawn from the larger object down to the smaller.
"""

from __future__ import annotations

from .core import OrderedGroupoid, csorted
from .functor import OrderedFunctor
from .quotient import Factorization


def _q(x) -> str:
    s = str(x).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{s}"'


def _body(G: OrderedGroupoid, prefix="", indent="  ") -> list[str]:
    lines = []
    for x in csorted(G.objects):
        lines.append(f"{indent}{_q(prefix + str(x))} [label={_q(x)}];")
    for a in G.arrows:
        if G.is_identity(a):
            continue
        d, c = G.dom(a), G.cod(a)
        lines.append(f"{indent}{_q(prefix + str(d))} -> {_q(prefix + str(c))} [label={_q(a)}];")
    for lo, hi in csorted(G.objects.covers()):
        lines.append(f"{indent}{_q(prefix + str(hi))} -> {_q(prefix + str(lo))} [style=dashed, arrowhead=none];")
    return lines


def _cluster(G: OrderedGroupoid, key: str, title) -> list[str]:
    lines = [f"  subgraph cluster_{key} {{", f"    label={_q(title)};"]
    lines += _body(G, prefix=f"{key}:", indent="    ")
    lines.append("  }")
    return lines


def _object_map(F: OrderedFunctor, src: str, tgt: str) -> list[str]:
    return [
        f"  {_q(f'{src}:{x}')} -> {_q(f'{tgt}:{F(x)}')} [style=dotted, color=gray];"
        for x in csorted(F.source.objects)
    ]


def emit_dot(obj, name: str | None = None) -> str:
    """DOT for an :class:`OrderedGroupoid`, :class:`OrderedFunctor` or :class:`Factorization`."""
    if isinstance(obj, OrderedGroupoid):
        lines = [f"digraph {_q(name or obj.name or 'G')} {{"] + _body(obj)
    elif isinstance(obj, OrderedFunctor):
        lines = [f"digraph {_q(name or obj.name or 'F')} {{", "  compound=true;"]
        lines += _cluster(obj.source, "s", obj.source.name or "source")
        lines += _cluster(obj.target, "t", obj.target.name or "target")
        lines += _object_map(obj, "s", "t")
    elif isinstance(obj, Factorization):
        Q = obj.quotient.groupoid
        lines = [f"digraph {_q(name or 'factorization')} {{", "  compound=true;"]
        lines += _cluster(obj.theta.source, "g", obj.theta.source.name or "G")
        lines += _cluster(Q, "q", Q.name or "G//ker")
        lines += _cluster(obj.theta.target, "h", obj.theta.target.name or "H")
        lines += _object_map(obj.varpi, "g", "q")
        lines += _object_map(obj.psi, "q", "h")
    else:
        raise TypeError(f"cannot draw {type(obj).__name__}")
    lines.append("}")
    return "\n".join(lines) + "\n"
