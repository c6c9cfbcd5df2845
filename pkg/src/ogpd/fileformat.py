"""The ``.ogq`` text format: a YAML document describing groupoids, functors and friends.

Layout::

    groupoids:
      H:
        objects: ["1", "0"]
        object_order: [["0", "1"]]          # x <= y
        arrows: {x@1: ["1", "1"], y@0: ["0", "0"]}
        inverse: [[x@1, x@1], [y@0, y@0]]
        compose: [[x@1, x@1, "id:1"], [y@0, y@0, "id:0"]]
        order: [[y@0, x@1]]
    functors:
      p: {source: G, target: H, map: {"id:e": "id:1", a@e: x@1}}
    subgroupoids:
      A: {of: G, arrows: ["id:e", a@e]}
    actions:
      t: {actor: G, carrier: P, omega: {"id:u": "id:e"}, act: [["id:u", a@e, "id:v"]]}
    squares:
      s: {A: E, p: p, f: i, paths: {e: x@1}}

Identity arrows are written ``id:<object>`` and are generated, never declared.
Every error carries the line and column of the offending node.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import yaml

from .action import GroupoidAction
from .core import OrderedGroupoid, canon, csorted
from .errors import OGError, StructureError
from .functor import OrderedFunctor
from .homotopy import HomotopySquare, make_homotopy

ID_PREFIX = "id:"
SECTIONS = ("groupoids", "functors", "subgroupoids", "actions", "squares")
GROUPOID_KEYS = ("objects", "object_order", "arrows", "inverse", "compose", "order")


class FileFormatError(OGError, ValueError):
    """A parse or semantic error with a source location."""

    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


@dataclass
class Document:
    groupoids: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)
    subgroupoids: dict = field(default_factory=dict)
    actions: dict = field(default_factory=dict)
    squares: dict = field(default_factory=dict)

    def groupoid(self, name=None) -> OrderedGroupoid:
        """The named groupoid, or the only one if ``name`` is omitted."""
        if name is None:
            if len(self.groupoids) != 1:
                raise FileFormatError(f"document holds {len(self.groupoids)} groupoids; name one")
            return next(iter(self.groupoids.values()))
        if name not in self.groupoids:
            raise FileFormatError(f"no groupoid named {name!r}")
        return self.groupoids[name]


# ---------------------------------------------------------------------------
# YAML nodes to python, remembering where everything came from


class _Tree:
    def __init__(self):
        self.marks: dict = {}

    def where(self, path):
        while path and path not in self.marks:
            path = path[:-1]
        return self.marks.get(path, (None, None))

    def fail(self, path, message):
        line, col = self.where(path)
        raise FileFormatError(message, line, col)

    def build(self, node, path=()):
        self.marks[path] = (node.start_mark.line + 1, node.start_mark.column + 1)
        if isinstance(node, yaml.MappingNode):
            out = {}
            for k, v in node.value:
                key = self.build(k, path + ("<key>",))
                if isinstance(key, (list, dict)):
                    self.fail(path, "mapping keys must be scalars")
                if key in out:
                    line, col = k.start_mark.line + 1, k.start_mark.column + 1
                    raise FileFormatError(f"duplicate key {key!r}", line, col)
                out[key] = self.build(v, path + (key,))
            return out
        if isinstance(node, yaml.SequenceNode):
            return [self.build(v, path + (i,)) for i, v in enumerate(node.value)]
        return yaml.safe_load(yaml.serialize(node)) if node.tag != "tag:yaml.org,2002:str" else node.value


def _load(text: str) -> tuple[dict, _Tree]:
    try:
        node = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        raise FileFormatError(f"YAML syntax: {exc.problem}", mark.line + 1, mark.column + 1) from None
    tree = _Tree()
    if node is None:
        raise FileFormatError("empty document", 1, 1)
    data = tree.build(node)
    if not isinstance(data, dict):
        tree.fail((), "top level must be a mapping")
    return data, tree


# ---------------------------------------------------------------------------
# parsing


def _expect(tree, path, value, kind, what):
    if not isinstance(value, kind):
        tree.fail(path, f"{what} must be a {kind.__name__ if isinstance(kind, type) else 'value'}")
    return value


class _Resolver:
    """Maps textual arrow references of one groupoid to arrow ids."""

    def __init__(self, tree, name, objects, arrows):
        self.tree, self.name = tree, name
        self.objects = {str(x): x for x in objects}
        self.arrows = {str(a): a for a in arrows}

    def object(self, path, ref):
        key = str(ref)
        if key not in self.objects:
            self.tree.fail(path, f"unknown object {ref!r} in groupoid {self.name!r}")
        return self.objects[key]

    def arrow(self, path, ref):
        key = str(ref)
        if key.startswith(ID_PREFIX):
            return self.object(path, key[len(ID_PREFIX):])
        if key not in self.arrows:
            self.tree.fail(path, f"unknown arrow {ref!r} in groupoid {self.name!r}")
        return self.arrows[key]


def _parse_groupoid(tree, path, name, spec, check=True) -> tuple[OrderedGroupoid, _Resolver]:
    _expect(tree, path, spec, dict, f"groupoid {name!r}")
    for key in spec:
        if key not in GROUPOID_KEYS:
            tree.fail(path + (key,), f"unknown groupoid section {key!r}")
    objs = _expect(tree, path + ("objects",), spec.get("objects", []), list, "objects")
    seen = set()
    for i, x in enumerate(objs):
        if isinstance(x, (list, dict)):
            tree.fail(path + ("objects", i), "object ids must be scalars")
        if str(x) in seen:
            tree.fail(path + ("objects", i), f"duplicate object {x!r}")
        if str(x).startswith(ID_PREFIX):
            tree.fail(path + ("objects", i), f"object ids may not start with {ID_PREFIX!r}")
        seen.add(str(x))
    arrows_spec = _expect(tree, path + ("arrows",), spec.get("arrows", {}) or {}, dict, "arrows")
    for a in arrows_spec:
        if str(a).startswith(ID_PREFIX):
            tree.fail(path + ("arrows", a), f"identity {a!r} is generated and must not be declared")
        if str(a) in seen:
            tree.fail(path + ("arrows", a), f"arrow {a!r} reuses an object id")
    res = _Resolver(tree, name, objs, arrows_spec)
    ends = {}
    for a, dc in arrows_spec.items():
        p = path + ("arrows", a)
        if not isinstance(dc, list) or len(dc) != 2:
            tree.fail(p, f"arrow {a!r} needs [dom, cod]")
        ends[a] = (res.object(p + (0,), dc[0]), res.object(p + (1,), dc[1]))

    def pairs(section, width):
        items = _expect(tree, path + (section,), spec.get(section, []) or [], list, section)
        out = []
        for i, item in enumerate(items):
            p = path + (section, i)
            if not isinstance(item, list) or len(item) != width:
                tree.fail(p, f"{section} entries have {width} items")
            out.append((p, item))
        return out

    obj_order = [(res.object(p + (0,), x), res.object(p + (1,), y)) for p, (x, y) in pairs("object_order", 2)]
    inverse = {}
    for p, (a, b) in pairs("inverse", 2):
        a, b = res.arrow(p + (0,), a), res.arrow(p + (1,), b)
        if inverse.get(a, b) != b:
            tree.fail(p, f"conflicting inverse for {a!r}")
        inverse[a] = b
    compose = {}
    for p, (a, b, c) in pairs("compose", 3):
        key = (res.arrow(p + (0,), a), res.arrow(p + (1,), b))
        val = res.arrow(p + (2,), c)
        if compose.get(key, val) != val:
            tree.fail(p, f"conflicting composite for {key!r}")
        compose[key] = val
    order = [(res.arrow(p + (0,), a), res.arrow(p + (1,), b)) for p, (a, b) in pairs("order", 2)]
    order += obj_order
    try:
        G = OrderedGroupoid(objs, obj_order, ends, compose, inverse, order, name=name, check=check)
    except OGError as exc:
        tree.fail(path, f"groupoid {name!r}: {exc}")
    return G, res


def parse(text: str | bytes, *, check=True) -> Document:
    """Parse an ``.ogq`` document; with ``check=False`` groupoids and functors skip the axiom checks."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FileFormatError(f"not UTF-8 text ({exc.reason} at byte {exc.start})") from None
    data, tree = _load(text)
    for key in data:
        if key not in SECTIONS:
            tree.fail((key,), f"unknown section {key!r}")
    doc = Document()
    resolvers = {}
    for name, spec in (data.get("groupoids") or {}).items():
        doc.groupoids[name], resolvers[name] = _parse_groupoid(tree, ("groupoids", name), name, spec, check)

    def groupoid_ref(path, ref):
        if ref not in doc.groupoids:
            tree.fail(path, f"unknown groupoid {ref!r}")
        return doc.groupoids[ref], resolvers[ref]

    for name, spec in (data.get("functors") or {}).items():
        p = ("functors", name)
        _expect(tree, p, spec, dict, f"functor {name!r}")
        A, ra = groupoid_ref(p + ("source",), spec.get("source"))
        B, rb = groupoid_ref(p + ("target",), spec.get("target"))
        m = {}
        for a, b in _expect(tree, p + ("map",), spec.get("map", {}), dict, "map").items():
            m[ra.arrow(p + ("map", a), a)] = rb.arrow(p + ("map", a), b)
        try:
            doc.functors[name] = OrderedFunctor(A, B, m, name=name, check=check)
        except OGError as exc:
            tree.fail(p, f"functor {name!r}: {exc}")

    for name, spec in (data.get("subgroupoids") or {}).items():
        p = ("subgroupoids", name)
        _expect(tree, p, spec, dict, f"subgroupoid {name!r}")
        G, rg = groupoid_ref(p + ("of",), spec.get("of"))
        arrows = _expect(tree, p + ("arrows",), spec.get("arrows", []), list, "arrows")
        ids = frozenset(rg.arrow(p + ("arrows", i), a) for i, a in enumerate(arrows))
        if not G.subset_is_subgroupoid(ids):
            tree.fail(p, f"subgroupoid {name!r} is not closed under composition and inverse")
        doc.subgroupoids[name] = (spec.get("of"), ids)

    for name, spec in (data.get("actions") or {}).items():
        p = ("actions", name)
        _expect(tree, p, spec, dict, f"action {name!r}")
        G, rg = groupoid_ref(p + ("actor",), spec.get("actor"))
        A, ra = groupoid_ref(p + ("carrier",), spec.get("carrier"))
        omega = {ra.arrow(p + ("omega", a), a): rg.object(p + ("omega", a), _strip(x))
                 for a, x in _expect(tree, p + ("omega",), spec.get("omega", {}), dict, "omega").items()}
        act = {}
        for i, item in enumerate(_expect(tree, p + ("act",), spec.get("act", []), list, "act")):
            q = p + ("act", i)
            if not isinstance(item, list) or len(item) != 3:
                tree.fail(q, "act entries are [a, g, a<|g]")
            act[(ra.arrow(q, item[0]), rg.arrow(q, item[1]))] = ra.arrow(q, item[2])
        try:
            doc.actions[name] = GroupoidAction(G, A, omega, act, name=name)
        except OGError as exc:
            tree.fail(p, f"action {name!r}: {exc}")

    for name, spec in (data.get("squares") or {}).items():
        p = ("squares", name)
        _expect(tree, p, spec, dict, f"square {name!r}")
        A, ra = groupoid_ref(p + ("A",), spec.get("A"))
        pf, ff = spec.get("p"), spec.get("f")
        for key, ref in (("p", pf), ("f", ff)):
            if ref not in doc.functors:
                tree.fail(p + (key,), f"unknown functor {ref!r}")
        pfun, ffun = doc.functors[pf], doc.functors[ff]
        rh = resolvers[_name_of(doc, pfun.target)]
        paths = {ra.object(p + ("paths", x), x): rh.arrow(p + ("paths", x), h)
                 for x, h in _expect(tree, p + ("paths",), spec.get("paths", {}), dict, "paths").items()}
        try:
            doc.squares[name] = HomotopySquare(A, pfun, ffun, make_homotopy(A, pfun, ffun, paths))
        except (OGError, KeyError) as exc:
            tree.fail(p, f"square {name!r}: {exc}")
    return doc


def _strip(ref):
    s = str(ref)
    return s[len(ID_PREFIX):] if s.startswith(ID_PREFIX) else ref


def _name_of(doc: Document, G: OrderedGroupoid) -> str:
    for name, H in doc.groupoids.items():
        if H is G:
            return name
    raise FileFormatError("functor target is not a named groupoid")


def parse_file(path, *, check=True) -> Document:
    with open(path, "rb") as fh:
        return parse(fh.read(), check=check)


# ---------------------------------------------------------------------------
# serialization


def _scalar(x):
    return x if isinstance(x, (str, int)) and not isinstance(x, bool) else str(x)


def _ref(G: OrderedGroupoid, a):
    return f"{ID_PREFIX}{a}" if G.is_identity(a) else _scalar(a)


def groupoid_to_data(G: OrderedGroupoid) -> dict:
    """Plain data for one groupoid; non-scalar ids are written with ``str``."""
    objs = list(G.objects)
    non_id = [a for a in G.arrows if not G.is_identity(a)]
    return {
        "objects": [_scalar(x) for x in objs],
        "object_order": [[_scalar(x), _scalar(y)] for x, y in sorted(G.objects.pairs, key=canon) if x != y],
        "arrows": {_scalar(a): [_scalar(G.dom(a)), _scalar(G.cod(a))] for a in non_id},
        "inverse": [[_ref(G, a), _ref(G, G.inv(a))] for a in non_id],
        "compose": [
            [_ref(G, a), _ref(G, b), _ref(G, G.compose(a, b))]
            for a in non_id for b in G.out_arrows(G.cod(a)) if not G.is_identity(b)
        ],
        "order": [
            [_ref(G, a), _ref(G, b)]
            for a in G.arrows for b in csorted(G.up(a))
            if a != b and not (G.is_identity(a) and G.is_identity(b))
        ],
    }


def functor_to_data(F: OrderedFunctor, source: str, target: str) -> dict:
    A, B = F.source, F.target
    return {"source": source, "target": target,
            "map": {_ref(A, a): _ref(B, F(a)) for a in A.arrows}}


def serialize(doc: Document) -> str:
    """Deterministic YAML text; ``parse(serialize(doc))`` rebuilds the same structures."""
    names = {id(G): n for n, G in doc.groupoids.items()}

    def gname(G):
        if id(G) not in names:
            raise StructureError(f"groupoid {G.name!r} is referenced but not in the document")
        return names[id(G)]

    data: dict = {"groupoids": {n: groupoid_to_data(G) for n, G in doc.groupoids.items()}}
    if doc.functors:
        data["functors"] = {n: functor_to_data(F, gname(F.source), gname(F.target))
                            for n, F in doc.functors.items()}
    if doc.subgroupoids:
        data["subgroupoids"] = {
            n: {"of": of, "arrows": [_ref(doc.groupoids[of], a) for a in csorted(arrows)]}
            for n, (of, arrows) in doc.subgroupoids.items()
        }
    if doc.actions:
        data["actions"] = {}
        for n, t in doc.actions.items():
            G, A = t.actor, t.carrier
            data["actions"][n] = {
                "actor": gname(G), "carrier": gname(A),
                "omega": {_ref(A, a): _ref(G, x) for a, x in sorted(t.omega.items(), key=canon)},
                "act": [[_ref(A, a), _ref(G, g), _ref(A, b)] for (a, g), b in sorted(t.act.items(), key=canon)],
            }
    if doc.squares:
        fnames = {id(F): n for n, F in doc.functors.items()}
        data["squares"] = {}
        for n, sq in doc.squares.items():
            if id(sq.p) not in fnames or id(sq.f) not in fnames:
                raise StructureError(f"square {n!r} uses functors missing from the document")
            data["squares"][n] = {
                "A": gname(sq.A), "p": fnames[id(sq.p)], "f": fnames[id(sq.f)],
                "paths": {_scalar(x): _ref(sq.p.target, sq.path(x)) for x in sq.A.objects},
            }
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=None, allow_unicode=True, width=100)


def single(G: OrderedGroupoid, name=None) -> Document:
    return Document(groupoids={name or G.name or "G": G})
