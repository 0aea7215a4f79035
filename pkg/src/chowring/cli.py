"""Command-line front end.

Sub-commands mirror the library layers: ``roots`` and ``weyl`` for the
combinatorial substrate, ``hasse`` for diagram export, ``chow`` for basis
and product queries, ``corr`` for correspondence arithmetic, and
``verify f4`` for the full verification pipeline.  Every command is
deterministic: repeated invocations print identical bytes.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import correspondence as corr
from . import f4pipeline, hasse, poly
from . import weyl as weylmod
from .rootsystem import CartanMatrix, RootSystem, build_root_system, root_system
from .schubert import format_table_text, get_chow_ring, hyperplane_table
from .weyl import get_weyl_group


class UsageError(Exception):
    pass


def _system(args) -> RootSystem:
    if getattr(args, "cartan_file", None):
        return build_root_system(CartanMatrix.from_file(args.cartan_file))
    if not args.type:
        raise UsageError("one of --type or --cartan-file is required")
    try:
        return root_system(args.type)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _theta(args, system: RootSystem | None = None) -> tuple[int, ...]:
    raw = getattr(args, "theta", None)
    if not raw:
        return ()
    try:
        theta = tuple(int(tok) for tok in raw.split(",") if tok != "")
    except ValueError:
        raise UsageError(f"cannot parse theta {raw!r}; expected e.g. 2,3,4") from None
    if system is not None:
        try:
            theta = weylmod.normalize_theta(system, theta)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return theta


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _f4_ring_by_theta(theta):
    x1, x4 = f4pipeline.get_f4_varieties()
    if theta == x1.theta:
        return x1
    if theta == x4.theta:
        return x4
    return None


def _ring(args):
    system = _system(args)
    theta = _theta(args, system)
    if system is root_system("F4"):
        labeled = _f4_ring_by_theta(theta)
        if labeled is not None:
            return labeled
    return get_chow_ring(system, theta)


def _parse_chow(ring, text):
    """Either a class label like h1^4 or a reduced word in brackets."""
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        w = weylmod.parse_element(ring.system, text[1:-1])
        return ring.element(ring.class_of(w))
    try:
        return ring.element(ring.class_by_label(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- commands -----------------------------------------------------------------


def cmd_roots(args) -> int:
    system = _system(args)
    if args.format == "json":
        payload = [{"coords": list(r), "height": system.height(r)}
                   for r in system.positive_roots]
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = [" ".join(str(x) for x in r) for r in system.positive_roots]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_weyl(args) -> int:
    system = _system(args)
    group = get_weyl_group(system)
    theta = _theta(args, system)
    if args.query == "order":
        _emit(f"{group.order}\n", args.output)
    elif args.query == "longest":
        w = group.longest_parabolic(theta) if theta else group.longest
        _emit(f"{weylmod.serialize(w)}\nlength {w.length}\n", args.output)
    elif args.query == "cosets":
        reps = (group.maximal_coset_reps(theta) if args.maximal
                else group.minimal_coset_reps(theta))
        lines = [f"{weylmod.serialize(w)}" for w in reps]
        _emit("\n".join(lines) + f"\ncount {len(reps)}\n", args.output)
    return 0


def cmd_hasse(args) -> int:
    system = _system(args)
    group = get_weyl_group(system)
    theta = _theta(args, system)
    if args.pieri:
        ring = _ring(args)
        nodes = [i for i in range(1, system.rank + 1) if i not in ring.theta]
        node = args.node or (nodes[0] if len(nodes) == 1 else None)
        if node is None:
            raise UsageError("--node is required for a Pieri diagram of this theta")
        diagram = hasse.build_pieri_diagram(ring, node)
    else:
        diagram = hasse.build_hasse(group, theta)
    if args.format == "json":
        _emit(hasse.export_json(diagram), args.output)
    else:
        _emit(hasse.export_dot(diagram, by_codim=args.by_codim), args.output)
    return 0


def cmd_chow(args) -> int:
    ring = _ring(args)
    if args.query == "basis":
        codims = [args.codim] if args.codim is not None else range(ring.dim + 1)
        lines = []
        for s in codims:
            for cls in ring.basis(s):
                lines.append(f"codim {s}: {ring.label_of(cls)} "
                             f"[{weylmod.serialize(cls.rep)}]")
        _emit("\n".join(lines) + "\n", args.output)
    elif args.query == "mult":
        if not args.lhs or not args.rhs:
            raise UsageError("chow mult needs --lhs and --rhs")
        x = _parse_chow(ring, args.lhs)
        y = _parse_chow(ring, args.rhs)
        _emit(repr(ring.multiply(x, y)) + "\n", args.output)
    elif args.query == "table":
        nodes = [i for i in range(1, ring.system.rank + 1) if i not in ring.theta]
        node = args.node or (nodes[0] if len(nodes) == 1 else None)
        if node is None:
            raise UsageError("--node is required for a table of this theta")
        rows = hyperplane_table(ring, node)
        if args.format == "json":
            _emit(json.dumps(rows, indent=2) + "\n", args.output)
        else:
            _emit(format_table_text(rows), args.output)
    elif args.query == "giambelli-lift":
        if not args.cls:
            raise UsageError("chow giambelli-lift needs --class")
        x = _parse_chow(ring, args.cls)
        (cls, coeff), = x.terms.items()
        lift = coeff * ring.giambelli_lift(cls)
        _emit(poly.format_polynomial(lift) + "\n", args.output)
    return 0


def _f4_variety(tag: str):
    x1, x4 = f4pipeline.get_f4_varieties()
    if tag == "x1":
        return x1
    if tag == "x4":
        return x4
    raise UsageError(f"unknown variety {tag!r}; use x1 or x4")


def _load_corr(path: str):
    with open(path) as fh:
        payload = json.load(fh)
    source = _f4_variety(payload["source"])
    target = _f4_variety(payload["target"])
    return corr.from_jsonable(source, target, payload["terms"])


def _dump_corr(alpha) -> str:
    x1, x4 = f4pipeline.get_f4_varieties()
    tag = {id(x1): "x1", id(x4): "x4"}
    payload = {"source": tag[id(alpha.source)], "target": tag[id(alpha.target)],
               "terms": corr.to_jsonable(alpha)}
    return json.dumps(payload, indent=2) + "\n"


def cmd_corr(args) -> int:
    if args.query == "diagonal":
        ring = _f4_variety(args.variety)
        _emit(_dump_corr(corr.diagonal(ring)), args.output)
    elif args.query == "transpose":
        alpha = _load_corr(args.inputs[0])
        _emit(_dump_corr(corr.transpose(alpha)), args.output)
    elif args.query == "compose":
        beta = _load_corr(args.inputs[0])
        alpha = _load_corr(args.inputs[1])
        composed = corr.compose(beta, alpha)
        if args.mod:
            composed = corr.mod_reduce(composed, args.mod)
        _emit(_dump_corr(composed), args.output)
    return 0


def cmd_verify(args) -> int:
    if args.what != "f4":
        raise UsageError(f"unknown verification target {args.what!r}")
    if args.jobs and args.jobs > 1:
        print("note: checks run sequentially; --jobs is accepted for "
              "compatibility", file=sys.stderr)
    report = f4pipeline.run_f4_verification(args.eps)
    text = (report.to_json(timings=args.timings) if args.format == "json"
            else report.to_text(timings=args.timings))
    _emit(text, None)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(report.to_json(timings=args.timings))
    return 0 if report.passed else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chowring",
        description="Schubert calculus for Chow rings of G/P and the "
                    "verification pipeline for the two F4 varieties")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, theta=True):
        p.add_argument("--type", help="named root system (A1, A2, B2, B3, G2, F4)")
        p.add_argument("--cartan-file", help="plain-text integer Cartan matrix")
        if theta:
            p.add_argument("--theta", default="",
                           help="parabolic subset, comma-separated nodes, "
                                "e.g. 2,3,4")
        p.add_argument("--format", choices=("text", "json", "dot"),
                       default="text")
        p.add_argument("-o", "--output", help="write to a file instead of stdout")

    p = sub.add_parser("roots", help="list positive roots")
    common(p, theta=False)
    p.set_defaults(fn=cmd_roots)

    p = sub.add_parser("weyl", help="Weyl group queries")
    p.add_argument("query", choices=("order", "longest", "cosets"))
    common(p)
    p.add_argument("--maximal", action="store_true",
                   help="maximal instead of minimal coset representatives")
    p.set_defaults(fn=cmd_weyl)

    p = sub.add_parser("hasse", help="export Hasse or Pieri diagrams")
    common(p)
    p.add_argument("--pieri", action="store_true",
                   help="weighted hyperplane-multiplication diagram")
    p.add_argument("--node", type=int,
                   help="hyperplane node for --pieri (defaults to the "
                        "complement of theta when unique)")
    p.add_argument("--by-codim", action="store_true",
                   help="flip edge orientation to increasing codimension")
    p.set_defaults(fn=cmd_hasse)

    p = sub.add_parser("chow", help="Chow ring queries")
    p.add_argument("query", choices=("basis", "mult", "table", "giambelli-lift"))
    common(p)
    p.add_argument("--codim", type=int)
    p.add_argument("--lhs")
    p.add_argument("--rhs")
    p.add_argument("--class", dest="cls")
    p.add_argument("--node", type=int)
    p.set_defaults(fn=cmd_chow)

    p = sub.add_parser("corr", help="correspondence arithmetic on the F4 pair")
    p.add_argument("query", choices=("diagonal", "transpose", "compose"))
    p.add_argument("inputs", nargs="*",
                   help="JSON files; compose takes BETA ALPHA for beta o alpha")
    p.add_argument("--variety", default="x1", help="x1 or x4 (for diagonal)")
    p.add_argument("--mod", type=int, default=0, choices=(0, 3))
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_corr)

    p = sub.add_parser("verify", help="run a verification pipeline")
    p.add_argument("what", choices=("f4",))
    p.add_argument("--eps", default="both", choices=("1", "-1", "both"))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--report", help="also write a JSON report to this path")
    p.add_argument("--timings", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
