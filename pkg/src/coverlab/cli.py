"""Command-line interface: ``coverlab <command> [options]``.

Exit status is 0 on success, 1 on a computation error or a failing
verification, 2 on a usage error (bad flag, out-of-range parameter).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import warnings

from . import __version__
from .betti import betti_table, closed_form_regularity
from .graphs import (
    GraphError,
    SimpleGraph,
    complete_graph,
    complete_multipartite,
    cover_ideal,
    crown,
    edge_ideal,
    from_edge_list,
    notation_generators,
)
from .hilbert import (
    closed_form_bracket,
    closed_form_bracket_plus_M,
    closed_form_crown,
    closed_form_symbolic_multipartite,
    minh_multiplicity,
    numerator,
    symbolic_multiplicity,
)
from .monomial import Monomial, MonomialIdeal, PreconditionError
from .powers import bracket_power, multipartite_chain_ideal, power, symbolic_power
from .verify import report_emit, verify_suite


class UsageError(Exception):
    pass


def parse_parts(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"parts must be comma-separated integers, got {text!r}")


_NAMED = {"triangle": ("multipartite", (1, 1, 1))}


def parse_graph_spec(spec: str) -> SimpleGraph:
    """Names like ``triangle``, ``C3,3``, ``K2,1,1``, ``K4``, ``crown:3``, ``multipartite:2,1``."""
    s = spec.strip()
    if s in _NAMED:
        fam, param = _NAMED[s]
        return complete_multipartite(param)
    m = re.fullmatch(r"C(\d+),(\d+)", s)
    if m and m.group(1) == m.group(2):
        return crown(int(m.group(1)))
    m = re.fullmatch(r"K(\d+(?:,\d+)+)", s)
    if m:
        return complete_multipartite(parse_parts(m.group(1)))
    m = re.fullmatch(r"K(\d+)", s)
    if m:
        return complete_graph(int(m.group(1)))
    m = re.fullmatch(r"(crown|complete|multipartite):(.+)", s)
    if m:
        fam, arg = m.groups()
        if fam == "multipartite":
            return complete_multipartite(parse_parts(arg))
        return crown(int(arg)) if fam == "crown" else complete_graph(int(arg))
    raise UsageError(f"unrecognized graph {spec!r}")


# -- argument plumbing ------------------------------------------------------

def _add_format(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="fmt", action="store_const", const="json")
    g.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    g.add_argument("--text", dest="fmt", action="store_const", const="text")
    p.set_defaults(fmt="text")
    p.add_argument("--out", help="write output to this file instead of stdout")


def _add_graph(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--crown", type=int, metavar="N")
    g.add_argument("--multipartite", type=parse_parts, metavar="P1,P2,...")
    g.add_argument("--complete", type=int, metavar="N")
    g.add_argument("--edge-file", metavar="PATH")
    g.add_argument("--graph", metavar="NAME")


def _add_ideal(p: argparse.ArgumentParser, kinds: bool = True) -> None:
    _add_graph(p)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--edge", action="store_true", help="use the edge ideal instead of the cover ideal")
    if kinds:
        k = p.add_mutually_exclusive_group()
        k.add_argument("--power", dest="kind", action="store_const", const="power")
        k.add_argument("--symbolic", dest="kind", action="store_const", const="symbolic")
        k.add_argument("--bracket", dest="kind", action="store_const", const="bracket")
        k.add_argument("--bracket-plus-m", dest="kind", action="store_const", const="bracket-plus-m")
        p.set_defaults(kind="power")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="coverlab", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("graph", help="build a graph and print its edge list")
    g.add_argument("kind", choices=["crown", "multipartite", "complete", "from-file"])
    g.add_argument("--n", type=int)
    g.add_argument("--parts", type=parse_parts)
    g.add_argument("--edge-file")
    _add_format(g)

    for name in ("cover-ideal", "edge-ideal"):
        p = sub.add_parser(name)
        _add_graph(p)
        _add_format(p)

    for name in ("power", "bracket-power", "symbolic-power"):
        p = sub.add_parser(name)
        _add_ideal(p, kinds=False)
        _add_format(p)

    p = sub.add_parser("hilbert", help="Hilbert series of S/I")
    _add_ideal(p)
    _add_format(p)

    p = sub.add_parser("betti", help="multigraded Betti table of I")
    _add_ideal(p)
    _add_format(p)

    p = sub.add_parser("reg", help="regularity of I, with the closed form when one applies")
    _add_ideal(p)
    p.add_argument("--chain", type=int, metavar="J",
                   help="use (M, N_1^s, ..., N_J^s) for a multipartite graph")
    _add_format(p)

    p = sub.add_parser("mult", help="multiplicity of S/I^(s)")
    _add_graph(p)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--which", choices=["cover", "edge"], default="cover")
    _add_format(p)

    v = sub.add_parser("verify", help="check closed forms against computed values")
    v.add_argument("scope", choices=["crown", "multipartite", "multiplicity", "all"])
    v.add_argument("--n", type=int, action="append")
    v.add_argument("--parts", type=parse_parts, action="append")
    v.add_argument("--graph", action="append")
    v.add_argument("--edge-file", action="append")
    v.add_argument("--s-max", type=int)
    v.add_argument("--force", action="store_true")
    v.add_argument("--no-timing", action="store_true")
    _add_format(v)
    return ap


def _load_edge_file(path: str) -> SimpleGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            return from_edge_list(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read edge file: {exc}")


def select_graph(args) -> SimpleGraph:
    if args.crown is not None:
        return crown(args.crown)
    if args.multipartite is not None:
        return complete_multipartite(args.multipartite)
    if args.complete is not None:
        return complete_graph(args.complete)
    if args.edge_file is not None:
        return _load_edge_file(args.edge_file)
    return parse_graph_spec(args.graph)


def _family(G: SimpleGraph):
    return G.family or (None, None)


def select_ideal(args, G: SimpleGraph, kind: str) -> MonomialIdeal:
    base = edge_ideal(G) if args.edge else cover_ideal(G)
    s = args.s
    if kind == "power":
        return power(base, s)
    if kind == "symbolic":
        return symbolic_power(base, s)
    if kind == "bracket":
        return bracket_power(base, s)
    if kind == "bracket-plus-m":
        M = Monomial.from_support(range(G.vertex_count), G.vertex_count)
        return bracket_power(base, s) + MonomialIdeal.principal(M)
    raise UsageError(f"unknown ideal kind {kind!r}")


def _crown_guard(G: SimpleGraph) -> None:
    fam, n = _family(G)
    if fam == "crown" and n < 3:
        raise PreconditionError(f"crown closed forms hold For n≥3; got n={n}")


# -- output helpers -----------------------------------------------------------

def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _ordered_gens(I: MonomialIdeal, G: SimpleGraph) -> list:
    """Generators in formula order when I is the family's cover ideal, else canonical order."""
    fam, param = _family(G)
    if fam in ("crown", "multipartite") and not (fam == "crown" and param < 3):
        gens = [m.exponents for m in notation_generators(fam, param)]
        if sorted(gens) == sorted(I.gens):
            return gens
    return list(I.gens)


def emit_ideal(I: MonomialIdeal, G: SimpleGraph, fmt: str) -> str:
    labels = list(G.labels)
    gens = _ordered_gens(I, G)
    text = [Monomial(g).format(labels) for g in gens]
    if fmt == "json":
        return _json({"variables": labels, "generators": [list(g) for g in gens],
                      "text": text})
    if fmt == "csv":
        return _csv([labels] + [list(g) for g in gens])
    return (", ".join(text) if gens else "0") + "\n"


# -- commands -------------------------------------------------------------

def cmd_graph(args) -> str:
    if args.kind == "crown":
        if args.n is None:
            raise UsageError("graph crown needs --n")
        G = crown(args.n)
    elif args.kind == "complete":
        if args.n is None:
            raise UsageError("graph complete needs --n")
        G = complete_graph(args.n)
    elif args.kind == "multipartite":
        if args.parts is None:
            raise UsageError("graph multipartite needs --parts")
        G = complete_multipartite(args.parts)
    else:
        if args.edge_file is None:
            raise UsageError("graph from-file needs --edge-file")
        G = _load_edge_file(args.edge_file)
    if args.fmt == "json":
        return _json({"labels": list(G.labels),
                      "edges": [[G.labels[u], G.labels[v]] for u, v in G.edges]})
    if args.fmt == "csv":
        return _csv([("u", "v")] + [(G.labels[u], G.labels[v]) for u, v in G.edges])
    return G.edge_list_text()


def cmd_ideal(args) -> str:
    G = select_graph(args)
    if args.command == "cover-ideal":
        I = cover_ideal(G)
    elif args.command == "edge-ideal":
        I = edge_ideal(G)
    else:
        kind = {"power": "power", "bracket-power": "bracket",
                "symbolic-power": "symbolic"}[args.command]
        I = select_ideal(args, G, kind)
    return emit_ideal(I, G, args.fmt)


def _closed_series(G: SimpleGraph, kind: str, s: int, edge: bool):
    fam, param = _family(G)
    if edge or fam is None:
        return None
    if fam == "crown" and kind in ("power", "symbolic"):
        return closed_form_crown(param, s)
    if fam == "multipartite":
        forms = {"bracket": closed_form_bracket, "bracket-plus-m": closed_form_bracket_plus_M,
                 "symbolic": closed_form_symbolic_multipartite}
        if kind in forms:
            return forms[kind](param, s)
    return None


def cmd_hilbert(args) -> str:
    G = select_graph(args)
    if not args.edge:
        _crown_guard(G)
    I = select_ideal(args, G, args.kind)
    hs = numerator(I)
    red = hs.reduce() if not hs.numerator.is_zero() else None
    closed = _closed_series(G, args.kind, args.s, args.edge)
    if args.fmt == "json":
        out = hs.to_json()
        if red:
            out["reduced"] = {"h": list(red.h.coeffs), "dim": red.dim, "mult": red.mult}
        if closed is not None:
            out["closed_form"] = closed.to_json()
            out["closed_form_match"] = closed.same_rational(hs)
        return _json(out)
    if args.fmt == "csv":
        rows = [("power", "coefficient")] + list(enumerate(hs.numerator.coeffs))
        return _csv(rows)
    lines = [f"numerator: {hs.numerator}", f"den_pow: {hs.den_pow}"]
    if red:
        lines += [f"h: {red.h}", f"dim: {red.dim}", f"mult: {red.mult}"]
    if closed is not None:
        lines.append(f"closed form: {closed.numerator} over (1 - t)^{closed.den_pow} "
                     f"[{'match' if closed.same_rational(hs) else 'MISMATCH'}]")
    return "\n".join(lines) + "\n"


def cmd_betti(args) -> str:
    G = select_graph(args)
    I = select_ideal(args, G, args.kind)
    T = betti_table(I)
    if args.fmt == "json":
        return _json(T.to_json())
    if args.fmt == "csv":
        rows = [("i", "b", "rank")]
        rows += [(i, " ".join(map(str, b)), r) for (i, b), r in T.entries.items()]
        return _csv(rows)
    lines = [f"{'i':>3} {'deg':>4} {'rank':>6}"]
    for (i, d), r in T.coarse().items():
        lines.append(f"{i:>3} {d:>4} {r:>6}")
    lines.append(f"reg: {T.regularity}  pd(S/I): {T.projective_dimension}")
    return "\n".join(lines) + "\n"


def _expected_reg(G: SimpleGraph, args):
    fam, param = _family(G)
    if args.edge:
        return None
    if args.chain is not None:
        if fam != "multipartite":
            raise UsageError("--chain needs a multipartite graph")
        return closed_form_regularity("chain", parts=param, s=args.s, j=args.chain)
    if fam == "crown" and args.kind in ("power", "symbolic"):
        return closed_form_regularity("crown", n=param, s=args.s)
    if fam == "multipartite" and args.kind == "symbolic":
        return closed_form_regularity("multipartite", parts=param, s=args.s)
    return None


def cmd_reg(args) -> str:
    G = select_graph(args)
    if not args.edge:
        _crown_guard(G)
    expected = _expected_reg(G, args)
    if args.chain is not None:
        I = multipartite_chain_ideal(G.family[1], args.s, args.chain)
    else:
        I = select_ideal(args, G, args.kind)
    T = betti_table(I)
    reg, pd = T.regularity, T.projective_dimension
    i, b = T.witness()
    if args.fmt == "json":
        return _json({"reg": reg, "pd": pd, "expected": expected,
                      "match": None if expected is None else reg == expected,
                      "witness": {"i": i, "b": list(b)}})
    if args.fmt == "csv":
        return _csv([("reg", "pd", "expected"), (reg, pd, "" if expected is None else expected)])
    lines = [f"reg: {reg}", f"pd(S/I): {pd}"]
    if expected is not None:
        lines.append(f"closed form: {expected} [{'match' if reg == expected else 'MISMATCH'}]")
    return "\n".join(lines) + "\n"


def cmd_mult(args) -> str:
    G = select_graph(args)
    base = cover_ideal(G) if args.which == "cover" else edge_ideal(G)
    computed = numerator(symbolic_power(base, args.s)).reduce().mult
    formula = symbolic_multiplicity(G, args.which, args.s)
    minh = minh_multiplicity(base, args.s)
    if args.fmt == "json":
        return _json({"which": args.which, "s": args.s, "computed": computed,
                      "formula": formula, "minh": minh})
    if args.fmt == "csv":
        return _csv([("which", "s", "computed", "formula", "minh"),
                     (args.which, args.s, computed, formula, minh)])
    return f"computed: {computed}\nformula: {formula}\nminh count: {minh}\n"


def cmd_verify(args):
    graphs = None
    if args.graph or args.edge_file:
        graphs = [parse_graph_spec(g) for g in args.graph or []]
        graphs += [_load_edge_file(f) for f in args.edge_file or []]
    report = verify_suite(args.scope, ns=args.n, parts_list=args.parts, graphs=graphs,
                          s_max=args.s_max, force=args.force, timing=not args.no_timing)
    return report_emit(report, args.fmt, timing=not args.no_timing), (0 if report.ok else 1)


COMMANDS = {
    "graph": cmd_graph,
    "cover-ideal": cmd_ideal,
    "edge-ideal": cmd_ideal,
    "power": cmd_ideal,
    "bracket-power": cmd_ideal,
    "symbolic-power": cmd_ideal,
    "hilbert": cmd_hilbert,
    "betti": cmd_betti,
    "reg": cmd_reg,
    "mult": cmd_mult,
    "verify": cmd_verify,
}


def run_command(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            result = COMMANDS[args.command](args)
    except (UsageError, PreconditionError, GraphError) as exc:
        print(f"coverlab {args.command}: {exc}", file=stderr)
        return 2
    except Exception as exc:  # computation failure
        print(f"coverlab {args.command}: error: {exc}", file=stderr)
        return 1
    text, status = result if isinstance(result, tuple) else (result, 0)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
