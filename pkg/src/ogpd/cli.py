"""Command-line front end.

Exit status: 0 when the verdict is true, 1 when it is false, 2 for bad
input and 3 when a search budget runs out.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field

from .builders import FIXTURE_NAMES, fixtures, random_instance
from .cocylinder import fibration_theorem_pipeline
from .core import validate_ogpd
from .dot import emit_dot
from .enlargement import maximum_enlargement, triple_factorization
from .errors import BudgetExceeded, InvariantBreach, OGError
from .fileformat import Document, FileFormatError, parse, serialize
from .functor import kernel, post_compose, star_class, validate_functor
from .homotopy import find_lift
from .quotient import brute_force_quotient, factorize, is_normal, quotient, quotient_as_sets
from .search import Budget, DEFAULT_BUDGET

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
FILE_COMMANDS = ("validate", "classify", "quotient", "factorize", "enlarge", "cocylinder", "lift")


@dataclass
class RunReport:
    command: str
    digest: str
    verdict: bool
    result: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    dot: str | None = None
    figure: object = None  # groupoid to draw

    def verdict_block(self) -> str:
        """Canonical JSON: identical bytes for identical inputs."""
        block = {"command": self.command, "inputs_sha256": self.digest, "verdict": self.verdict,
                 "result": self.result}
        return json.dumps(block, sort_keys=True, separators=(",", ":"), default=str)

    def text(self) -> str:
        head = f"{self.command}: {'true' if self.verdict else 'false'}"
        return "\n".join([head] + [f"  {line}" for line in self.lines]) + "\n"


def _digest(command: str, data: bytes, extra: dict) -> str:
    h = hashlib.sha256()
    h.update(command.encode())
    h.update(b"\0")
    h.update(data)
    h.update(b"\0")
    h.update(json.dumps(extra, sort_keys=True, default=str).encode())
    return h.hexdigest()


def _pick(kind: str, table: dict, name):
    if name is None:
        if len(table) != 1:
            raise FileFormatError(f"document holds {len(table)} {kind}s; choose one with --{kind}")
        return next(iter(table.items()))
    if name not in table:
        raise FileFormatError(f"no {kind} named {name!r}")
    return name, table[name]


# ---------------------------------------------------------------------------
# commands on a document


def cmd_validate(doc: Document, args) -> RunReport:
    lines, result, ok = [], {}, True
    for name, G in doc.groupoids.items():
        rep = validate_ogpd(G)
        result[name] = sorted(rep.tags)
        ok &= rep.passed
        lines.append(f"groupoid {name}: {'valid' if rep.passed else 'INVALID ' + ', '.join(sorted(rep.tags))}"
                     f" ({len(G.objects)} objects, {len(G.arrows)} arrows)")
    for name, F in doc.functors.items():
        rep = validate_functor(F)
        result[f"functor:{name}"] = sorted(rep.tags)
        ok &= rep.passed
        lines.append(f"functor {name}: {'valid' if rep.passed else 'INVALID ' + ', '.join(sorted(rep.tags))}")
    r = RunReport("validate", "", ok, result, lines)
    if ok and doc.groupoids:
        key = args.groupoid if args.groupoid in doc.groupoids else next(iter(doc.groupoids))
        r.figure = doc.groupoids[key]
        r.dot = emit_dot(r.figure)
    return r


def cmd_classify(doc: Document, args) -> RunReport:
    name, F = _pick("functor", doc.functors, args.functor)
    sc = star_class(F)
    ker = kernel(F)
    result = {"surjective": sc.surjective, "injective": sc.injective, "class": sc.name,
              "kernel_size": len(ker)}
    lines = [f"functor {name}: {sc.name}", f"star-surjective: {sc.surjective}",
             f"star-injective: {sc.injective}", f"kernel: {len(ker)} arrows"]
    verdict = True if args.expect is None else {
        "fibration": sc.surjective, "immersion": sc.injective, "covering": sc.bijective}[args.expect]
    r = RunReport("classify", "", verdict, result, lines)
    r.dot = emit_dot(F)
    return r


def cmd_quotient(doc: Document, args) -> RunReport:
    gname, G = _pick("groupoid", doc.groupoids, args.groupoid)
    if args.all:
        A = frozenset(G.arrows)
    elif args.subgroupoid:
        of, A = doc.subgroupoids.get(args.subgroupoid, (None, None))
        if A is None or of != gname:
            raise FileFormatError(f"no subgroupoid {args.subgroupoid!r} of {gname!r}")
    else:
        raise FileFormatError("quotient needs --subgroupoid NAME or --all")
    rep = is_normal(G, A)
    if not rep.passed:
        return RunReport("quotient", "", False, {"normal": False, "violations": sorted(rep.tags)},
                         ["subgroupoid is not normal: " + ", ".join(sorted(rep.tags))])
    q = quotient(G, A)
    Q = q.groupoid
    part, table, order = brute_force_quotient(G, A)
    agrees = (part, table, order) == quotient_as_sets(q)
    result = {"objects": len(Q.objects), "arrows": len(Q.arrows), "inductive": Q.is_inductive(),
              "oracle_agrees": agrees}
    lines = [f"quotient {gname}//A: {len(Q.objects)} objects, {len(Q.arrows)} arrows",
             f"inductive: {str(Q.is_inductive()).lower()}",
             f"brute-force oracle agrees: {str(agrees).lower()}"]
    r = RunReport("quotient", "", agrees, result, lines)
    r.dot, r.figure = emit_dot(Q), Q
    return r


def cmd_factorize(doc: Document, args) -> RunReport:
    name, F = _pick("functor", doc.functors, args.functor)
    fac = factorize(F)
    Q = fac.quotient.groupoid
    tf = triple_factorization(F)
    result = {"quotient_objects": len(Q.objects), "quotient_arrows": len(Q.arrows),
              "psi": star_class(fac.psi).name, "enlargement_arrows": len(tf.enlargement.groupoid.arrows)}
    lines = [f"{name} = varpi psi through a quotient with {len(Q.arrows)} arrows",
             f"psi is {star_class(fac.psi).name}",
             f"triple factorization through {len(tf.enlargement.groupoid.arrows)} arrows: composite equals {name}"]
    r = RunReport("factorize", "", True, result, lines)
    r.dot = emit_dot(fac)
    return r


def cmd_enlarge(doc: Document, args) -> RunReport:
    name, F = _pick("functor", doc.functors, args.functor)
    if not star_class(F).injective:
        return RunReport("enlarge", "", False, {"star_injective": False},
                         [f"functor {name} is not star-injective; no maximum enlargement"])
    me = maximum_enlargement(F)
    Ht = me.groupoid
    result = {"objects": len(Ht.objects), "arrows": len(Ht.arrows), "enlargement": bool(me.witness)}
    lines = [f"maximum enlargement of {name}: {len(Ht.objects)} objects, {len(Ht.arrows)} arrows",
             "i is an ordered embedding, pi a covering, phi = i pi, U i is an enlargement"]
    r = RunReport("enlarge", "", True, result, lines)
    r.dot, r.figure = emit_dot(Ht), Ht
    return r


def cmd_cocylinder(doc: Document, args, budget) -> RunReport:
    name, F = _pick("functor", doc.functors, args.functor)
    res = fibration_theorem_pipeline(F, budget=budget)
    M = res.cocylinder.groupoid
    result = {"objects": len(M.objects), "arrows": len(M.arrows),
              "derived_arrows": len(res.derived.groupoid.arrows)}
    lines = [f"mapping cocylinder of {name}: {len(M.objects)} objects, {len(M.arrows)} arrows",
             "G i_phi is an enlargement; p_phi splits as a fibration then a covering",
             f"kernel of p_phi is isomorphic to Der(phi) ({len(res.derived.groupoid.arrows)} arrows)"]
    r = RunReport("cocylinder", "", True, result, lines)
    r.dot, r.figure = emit_dot(M), M
    return r


def cmd_lift(doc: Document, args, budget) -> RunReport:
    name, sq = _pick("square", doc.squares, args.square)
    Ft = find_lift(sq, budget=budget)
    if Ft is None:
        return RunReport("lift", "", False, {"lift": None}, [f"square {name}: no lift exists"])
    choice = {str(x): str(Ft((x, "iota"))) for x in sq.A.objects}
    return RunReport("lift", "", True, {"lift": choice},
                     [f"square {name}: lift found"] + [f"g_{x} = {g}" for x, g in sorted(choice.items())])


# ---------------------------------------------------------------------------
# fixtures and random instances


def cmd_fixture(name: str, args, budget) -> RunReport:
    fx = fixtures(name)
    if name == "klein_hlp":
        Ft = find_lift(fx.square, budget=budget)
        ok = Ft is None and find_lift(fx.identity_square, budget=budget) is not None
        lines = ["square over p: " + ("no lift exists" if Ft is None else "lift found"),
                 f"p is {star_class(fx.p).name}"]
        doc = Document({"E": fx.E, "G": fx.G, "H": fx.H}, {"p": fx.p, "i": fx.i}, squares={"square": fx.square})
        figure = fx.G
    elif name == "pstar":
        ps, src, tgt = post_compose(fx.p, fx.E)
        sc = star_class(ps)
        ok = not sc.surjective and star_class(fx.p).surjective
        lines = [f"p is {star_class(fx.p).name}", f"p_* on OGPD(E, -) is {sc.name}",
                 f"OGPD(E,G): {len(src.groupoid.arrows)} arrows, OGPD(E,H): {len(tgt.groupoid.arrows)} arrows"]
        doc = Document({"E": fx.E, "G": fx.G, "H": fx.H}, {"p": fx.p, "i": fx.i})
        figure = fx.G
    else:
        q = quotient(fx.S, fx.A)
        Q = q.groupoid
        ok = len(Q.objects) == 5 and not Q.is_inductive() and Q.objects == fx.expected
        lines = [f"quotient by all arrows: {len(Q.objects)} objects", f"inductive: {str(Q.is_inductive()).lower()}"]
        doc = Document({"S": fx.S})
        figure = Q
    r = RunReport(f"fixture {name}", "", ok, {"claim_holds": ok}, lines)
    r.dot, r.figure = emit_dot(figure), figure
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(serialize(doc))
    return r


def cmd_random(seed: int, args, budget) -> RunReport:
    ri = random_instance(seed, with_functor=True, with_normal=True)
    G, F, A = ri.groupoid, ri.functor, ri.normal
    checks = {"valid": validate_ogpd(G).passed}
    q = quotient(G, A)
    checks["quotient_oracle"] = quotient_as_sets(q) == brute_force_quotient(G, A)
    tf = triple_factorization(F)
    checks["triple_factorization"] = tf.varpi.then(tf.i).then(tf.pi).mapping == F.mapping
    fibration_theorem_pipeline(F, budget=budget)
    checks["fibration_theorem"] = True
    lines = [f"groupoid: {len(G.objects)} objects, {len(G.arrows)} arrows",
             f"functor: {star_class(F).name}"] + [f"{k}: {str(v).lower()}" for k, v in checks.items()]
    r = RunReport(f"random {seed}", "", all(checks.values()), checks, lines)
    r.dot, r.figure = emit_dot(G), G
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(serialize(Document({"G": G, "H": F.target}, {"theta": F})))
    return r


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ogpd", description="Finite ordered groupoids: checks and constructions.")
    ap.add_argument("command", choices=FILE_COMMANDS + ("fixture", "random"))
    ap.add_argument("target", nargs="?", help="input file, fixture name or seed")
    ap.add_argument("--groupoid", help="groupoid name inside the file")
    ap.add_argument("--functor", help="functor name inside the file")
    ap.add_argument("--subgroupoid", help="subgroupoid name inside the file")
    ap.add_argument("--square", help="square name inside the file")
    ap.add_argument("--all", action="store_true", help="quotient by every arrow")
    ap.add_argument("--expect", choices=("fibration", "immersion", "covering"),
                    help="classify: make the verdict whether the functor is of this kind")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search budget")
    ap.add_argument("--seed", type=int, help="seed for the random command")
    ap.add_argument("--dot", help="write a DOT diagram here")
    ap.add_argument("--figure", help="write a matplotlib figure here")
    ap.add_argument("--out", help="write the fixture or random instance as a .ogq file")
    ap.add_argument("--json", action="store_true", help="print only the machine verdict block")
    return ap


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_TRUE
    budget = Budget(args.budget)
    extra = {k: v for k, v in vars(args).items() if k not in ("dot", "figure", "json", "out", "target")}
    try:
        if args.command == "fixture":
            if args.target not in FIXTURE_NAMES:
                raise FileFormatError(f"unknown fixture {args.target!r}; choose from {', '.join(FIXTURE_NAMES)}")
            data = args.target.encode()
            report = cmd_fixture(args.target, args, budget)
        elif args.command == "random":
            seed = args.seed if args.seed is not None else args.target
            try:
                seed = int(seed)
            except (TypeError, ValueError):
                raise FileFormatError("random needs an integer seed") from None
            data = str(seed).encode()
            report = cmd_random(seed, args, budget)
        else:
            if not args.target:
                raise FileFormatError(f"{args.command} needs an input file")
            try:
                with open(args.target, "rb") as fh:
                    data = fh.read()
            except OSError as exc:
                raise FileFormatError(f"cannot read {args.target}: {exc.strerror}") from None
            doc = parse(data, check=args.command != "validate")
            if args.command == "validate":
                report = cmd_validate(doc, args)
            elif args.command in ("cocylinder", "lift"):
                report = globals()[f"cmd_{args.command}"](doc, args, budget)
            else:
                report = globals()[f"cmd_{args.command}"](doc, args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=stderr)
        return EXIT_BUDGET
    except InvariantBreach as exc:
        print(f"check failed: {exc}", file=stderr)
        return EXIT_FALSE
    except (OGError, ValueError) as exc:
        print(f"input error: {exc}", file=stderr)
        return EXIT_INPUT
    report.digest = _digest(args.command, data, extra)
    if args.dot and report.dot is not None:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(report.dot)
    if args.figure and report.figure is not None:
        from .plotting import draw_groupoid

        draw_groupoid(report.figure, args.figure)
    stdout.write(report.verdict_block() + "\n" if args.json else report.text())
    return EXIT_TRUE if report.verdict else EXIT_FALSE


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
