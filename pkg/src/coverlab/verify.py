"""Theorem verification harness: closed forms against computed values."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from .betti import betti_table, closed_form_regularity
from .graphs import (
    SimpleGraph,
    closed_form_cover_generators,
    complete_multipartite,
    cover_degree,
    cover_ideal,
    crown,
    crown_monomials,
    edge_ideal,
    minimum_cover_count,
    multipartite_monomials,
    normalize_parts,
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
from .monomial import MonomialIdeal, PreconditionError, colon
from .powers import (
    bracket_power,
    multipartite_chain_ideal,
    multipartite_symbolic_generators,
    power,
    symbolic_power,
)

CSV_HEADER = ("theorem", "params", "expected", "computed", "status", "ms")

# tag -> what the record checks
THEOREMS = {
    "crown-cover-generators": "cover ideal of C_{n,n} is (M_x, M_y, M_1..M_n)",
    "crown-cover-degree": "deg J(C_{n,n}) = 2n - 2",
    "crown-colon-generators": "(M_j):M_i = (x_i y_i) and (M_x, M_y, M_1..M_{i-1}):M_i = (x_i, y_i)",
    "crown-colon-power": "J^s : M_x = J^(s-1)",
    "crown-colon-power-plus-mx": "(J^s, M_x) : M_y = (J^(s-1), M_x)",
    "crown-colon-chain": "(J^s, M_x, M_y, M_1..M_{i-1}) : M_i = (x_i, y_i, M_i^(s-1))",
    "crown-power-equals-symbolic": "J^s = J^(s) for the bipartite crown graph",
    "crown-regularity": "reg J^s = s deg J",
    "crown-regularity-equals-pd": "reg J = pd S/I(G)",
    "crown-hilbert-series": "Hilbert series of S/J^s",
    "multipartite-cover-generators": "cover ideal of K_parts is (N_1..N_k)",
    "multipartite-cover-degree": "deg J = n - p_k",
    "multipartite-symbolic-recursion": "J^(s) = M J^(s-2) + (N_1^s..N_k^s)",
    "multipartite-colon-symbolic": "J^(s) : M = J^(s-2)",
    "multipartite-symbolic-plus-m": "(J^(s), M) = (J^[s], M)",
    "multipartite-bracket-part-colon": "(N_1^s..N_{i-1}^s) : N_i^s = (M_i^s)",
    "multipartite-bracket-colon": "J^[s] : M = J^[s-1]",
    "multipartite-chain-regularity": "reg (M, N_1^s..N_j^s) = s(n - p_j) + p_j - 1",
    "multipartite-regularity": "reg J^(s) = s deg J + p_k - 1",
    "complete-regularity": "reg J^(s) = s(n - 1) for the complete graph",
    "multipartite-bracket-hilbert": "Hilbert series of S/J^[s]",
    "multipartite-bracket-plus-m-hilbert": "Hilbert series of S/(J^[s], M)",
    "multipartite-symbolic-hilbert": "Hilbert series of S/J^(s)",
    "cover-symbolic-multiplicity": "e(S/J^(s)) = binom(s+1, 2) |E|",
    "edge-symbolic-multiplicity": "e(S/I^(s)) = binom(h+s-1, h) V(G)",
    "edge-minh-multiplicity": "binom(h+s-1, h) V(G) = binom(h+s-1, h) |Minh(I)|",
}

# desk-scale guards
CROWN_MAX_N, CROWN_MAX_S = 4, 3
MULTI_MAX_N, MULTI_MAX_S = 6, 4
MULT_MAX_VERTICES, MULT_MAX_S = 8, 4

DEFAULT_MULTIPARTITE = ((1, 1, 1), (2, 1), (2, 1, 1), (2, 2, 1), (1, 1, 1, 1))


@dataclass
class CheckRecord:
    theorem: str
    params: str
    expected: str
    computed: str
    status: str  # pass | fail | skipped
    ms: int | None = None

    def as_row(self, timing: bool = True) -> list:
        ms = "" if (not timing or self.ms is None) else str(self.ms)
        return [self.theorem, self.params, self.expected, self.computed, self.status, ms]

    def as_dict(self, timing: bool = True) -> dict:
        d = {k: getattr(self, k) for k in CSV_HEADER}
        if not timing:
            d["ms"] = None
        return d


@dataclass
class VerificationReport:
    records: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for r in self.records:
            counts[r.status] += 1
        counts["total"] = len(self.records)
        return counts

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.records)

    def failures(self) -> list:
        return [r for r in self.records if r.status == "fail"]

    def extend(self, other: "VerificationReport") -> None:
        self.records.extend(other.records)


def _fmt_params(**kw) -> str:
    out = []
    for k, v in kw.items():
        if isinstance(v, (tuple, list)):
            v = ",".join(map(str, v))
        out.append(f"{k}={v}")
    return ";".join(out)


def _show(x, names=None) -> str:
    if isinstance(x, MonomialIdeal):
        return f"({x.format(names)})"
    return str(x)


class _Runner:
    def __init__(self, timing: bool = True):
        self.report = VerificationReport()
        self.timing = timing
        self.names = None  # variable labels for printing ideals

    def check(self, tag: str, params: str, expected: Callable, computed: Callable,
              same: Callable | None = None) -> None:
        assert tag in THEOREMS, tag
        t0 = time.perf_counter()
        exp = expected()
        got = computed()
        ok = same(exp, got) if same else exp == got
        ms = int(round((time.perf_counter() - t0) * 1000))
        self.report.records.append(CheckRecord(
            tag, params, _show(exp, self.names), _show(got, self.names), "pass" if ok else "fail",
            ms if self.timing else None))


def _series_equal(a, b) -> bool:
    return a.same_rational(b)


# -- scopes ---------------------------------------------------------------

def verify_crown(ns: Sequence[int] = (3, 4), s_max: int = 3, force: bool = False,
                 timing: bool = True) -> VerificationReport:
    ns = list(ns)
    if any(n < 3 for n in ns):
        raise PreconditionError("crown checks hold For n≥3")
    if s_max < 1:
        raise PreconditionError("s-max must be >= 1")
    if not force and (max(ns) > CROWN_MAX_N or s_max > CROWN_MAX_S):
        raise PreconditionError(
            f"crown verification limited to n <= {CROWN_MAX_N}, s <= {CROWN_MAX_S}; use --force")
    run = _Runner(timing)
    for n in ns:
        G = crown(n)
        run.names = G.labels
        N = 2 * n
        c = crown_monomials(n)
        J = cover_ideal(G)
        p = _fmt_params(n=n)
        run.check("crown-cover-generators", p,
                  lambda: closed_form_cover_generators("crown", n), lambda: J)
        run.check("crown-cover-degree", p, lambda: 2 * n - 2, lambda: cover_degree(G))
        run.check("crown-regularity-equals-pd", p,
                  lambda: betti_table(edge_ideal(G)).projective_dimension,
                  lambda: betti_table(J).regularity)

        def basic_colons():
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i != j and colon(MonomialIdeal.principal(c.Mi[j - 1]), c.Mi[i - 1]) != \
                            MonomialIdeal.principal(c.x(i) * c.y(i)):
                        return False
                prefix = MonomialIdeal(N, [c.Mx, c.My, *c.Mi[: i - 1]])
                if colon(prefix, c.Mi[i - 1]) != MonomialIdeal(N, [c.x(i), c.y(i)]):
                    return False
            return True
        run.check("crown-colon-generators", p, lambda: True, basic_colons)

        powers = {0: MonomialIdeal.unit(N)}
        for s in range(1, s_max + 1):
            powers[s] = power(J, s)
            Js = powers[s]
            ps = _fmt_params(n=n, s=s)
            run.check("crown-power-equals-symbolic", ps, lambda: Js,
                      lambda: symbolic_power(J, s))
            run.check("crown-regularity", ps,
                      lambda: closed_form_regularity("crown", n=n, s=s),
                      lambda: betti_table(Js).regularity)
            run.check("crown-hilbert-series", ps, lambda: closed_form_crown(n, s),
                      lambda: numerator(Js), _series_equal)
            if s >= 2:
                prev = powers[s - 1]
                Mx = MonomialIdeal.principal(c.Mx)
                run.check("crown-colon-power", ps, lambda: prev, lambda: colon(Js, c.Mx))
                run.check("crown-colon-power-plus-mx", ps, lambda: prev + Mx,
                          lambda: colon(Js + Mx, c.My))
                for i in range(1, n + 1):
                    K = MonomialIdeal(N, [*Js.generators, c.Mx, c.My, *c.Mi[: i - 1]])
                    run.check("crown-colon-chain", _fmt_params(n=n, s=s, i=i),
                              lambda: MonomialIdeal(N, [c.x(i), c.y(i), c.Mi[i - 1] ** (s - 1)]),
                              lambda: colon(K, c.Mi[i - 1]))
    return run.report


def verify_multipartite(parts_list: Sequence[Sequence[int]] = DEFAULT_MULTIPARTITE,
                        s_max: int = 3, force: bool = False,
                        timing: bool = True) -> VerificationReport:
    parts_list = [normalize_parts(p) for p in parts_list]
    if s_max < 1:
        raise PreconditionError("s-max must be >= 1")
    if not force and (max(sum(p) for p in parts_list) > MULTI_MAX_N or s_max > MULTI_MAX_S):
        raise PreconditionError(
            f"multipartite verification limited to n <= {MULTI_MAX_N}, s <= {MULTI_MAX_S}; use --force")
    run = _Runner(timing)
    for parts in parts_list:
        G = complete_multipartite(parts)
        run.names = G.labels
        m = multipartite_monomials(parts)
        n, k = m.n, len(parts)
        J = cover_ideal(G)
        Mideal = MonomialIdeal.principal(m.M)
        p = _fmt_params(parts=parts)
        run.check("multipartite-cover-generators", p,
                  lambda: closed_form_cover_generators("multipartite", parts), lambda: J)
        run.check("multipartite-cover-degree", p, lambda: n - parts[-1], lambda: cover_degree(G))
        symb = {0: MonomialIdeal.unit(n)}
        brk = {}
        for s in range(1, s_max + 1):
            symb[s] = symbolic_power(J, s)
            brk[s] = bracket_power(J, s)
            Js, Jb = symb[s], brk[s]
            ps = _fmt_params(parts=parts, s=s)
            run.check("multipartite-symbolic-recursion", ps, lambda: Js,
                      lambda: multipartite_symbolic_generators(parts, s))
            run.check("multipartite-symbolic-plus-m", ps, lambda: Jb + Mideal,
                      lambda: Js + Mideal)
            run.check("multipartite-regularity", ps,
                      lambda: closed_form_regularity("multipartite", parts=parts, s=s),
                      lambda: betti_table(Js).regularity)
            if all(x == 1 for x in parts):
                run.check("complete-regularity", _fmt_params(n=n, s=s),
                          lambda: closed_form_regularity("complete", n=n, s=s),
                          lambda: betti_table(Js).regularity)
            run.check("multipartite-bracket-hilbert", ps,
                      lambda: closed_form_bracket(parts, s), lambda: numerator(Jb), _series_equal)
            run.check("multipartite-bracket-plus-m-hilbert", ps,
                      lambda: closed_form_bracket_plus_M(parts, s),
                      lambda: numerator(Jb + Mideal), _series_equal)
            run.check("multipartite-symbolic-hilbert", ps,
                      lambda: closed_form_symbolic_multipartite(parts, s),
                      lambda: numerator(Js), _series_equal)
            for i in range(2, k + 1):
                run.check("multipartite-bracket-part-colon", _fmt_params(parts=parts, s=s, i=i),
                          lambda: MonomialIdeal.principal(m.Mi[i - 1] ** s),
                          lambda: colon(MonomialIdeal(n, [N ** s for N in m.Ni[: i - 1]]),
                                        m.Ni[i - 1] ** s))
            if s >= 2:
                run.check("multipartite-colon-symbolic", ps, lambda: symb[s - 2],
                          lambda: colon(Js, m.M))
                run.check("multipartite-bracket-colon", ps, lambda: brk[s - 1],
                          lambda: colon(Jb, m.M))
                for j in range(1, k + 1):
                    run.check("multipartite-chain-regularity", _fmt_params(parts=parts, s=s, j=j),
                              lambda: closed_form_regularity("chain", parts=parts, s=s, j=j),
                              lambda: betti_table(multipartite_chain_ideal(parts, s, j)).regularity)
    return run.report


def _graph_name(G: SimpleGraph) -> str:
    if G.family and G.family[0] == "crown":
        return f"C{G.family[1]},{G.family[1]}"
    if G.family and G.family[0] == "multipartite":
        return "K" + ",".join(map(str, G.family[1]))
    return f"graph[{G.vertex_count}v,{G.edge_count}e]"


def default_multiplicity_graphs() -> list:
    return [complete_multipartite((1, 1, 1)), crown(3), complete_multipartite((2, 2)),
            complete_multipartite((2, 1, 1))]


def verify_multiplicity(graphs: Sequence[SimpleGraph] | None = None, s_max: int = 3,
                        force: bool = False, timing: bool = True) -> VerificationReport:
    graphs = list(graphs) if graphs is not None else default_multiplicity_graphs()
    if s_max < 1:
        raise PreconditionError("s-max must be >= 1")
    if any(not G.edges for G in graphs):
        raise PreconditionError("multiplicity checks need graphs with at least one edge")
    if not force and (max(G.vertex_count for G in graphs) > MULT_MAX_VERTICES or s_max > MULT_MAX_S):
        raise PreconditionError(
            f"multiplicity verification limited to {MULT_MAX_VERTICES} vertices, s <= {MULT_MAX_S}; use --force")
    run = _Runner(timing)
    for G in graphs:
        J, I = cover_ideal(G), edge_ideal(G)
        name = _graph_name(G)
        h, count = minimum_cover_count(G)
        for s in range(1, s_max + 1):
            ps = _fmt_params(graph=name, s=s)
            run.check("cover-symbolic-multiplicity", ps,
                      lambda: comb(s + 1, 2) * G.edge_count,
                      lambda: numerator(symbolic_power(J, s)).reduce().mult)
            run.check("edge-symbolic-multiplicity", ps,
                      lambda: symbolic_multiplicity(G, "edge", s),
                      lambda: numerator(symbolic_power(I, s)).reduce().mult)
            run.check("edge-minh-multiplicity", ps,
                      lambda: comb(h + s - 1, h) * count, lambda: minh_multiplicity(I, s))
    return run.report


def verify_suite(scope: str = "all", *, ns=None, parts_list=None, graphs=None,
                 s_max: int | None = None, force: bool = False,
                 timing: bool = True) -> VerificationReport:
    if scope not in ("crown", "multipartite", "multiplicity", "all"):
        raise PreconditionError(f"unknown scope {scope!r}")
    report = VerificationReport()
    if scope in ("crown", "all"):
        report.extend(verify_crown(ns or (3, 4), s_max or 3, force, timing))
    if scope in ("multipartite", "all"):
        report.extend(verify_multipartite(parts_list or DEFAULT_MULTIPARTITE, s_max or 3,
                                          force, timing))
    if scope in ("multiplicity", "all"):
        report.extend(verify_multiplicity(graphs, s_max or 3, force, timing))
    return report


# -- emission -------------------------------------------------------------

def report_emit(report: VerificationReport, fmt: str = "json", timing: bool = True) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in report.records:
            w.writerow(r.as_row(timing))
        return buf.getvalue()
    if fmt == "json":
        return json.dumps({"records": [r.as_dict(timing) for r in report.records],
                           "summary": report.summary}, indent=2) + "\n"
    if fmt == "text":
        lines = []
        for r in report.records:
            ms = f"  {r.ms} ms" if timing and r.ms is not None else ""
            line = f"{r.status.upper():7} {r.theorem} [{r.params}]{ms}"
            if r.status == "fail":
                line += f"\n        expected: {r.expected}\n        computed: {r.computed}"
            lines.append(line)
        s = report.summary
        lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
        return "\n".join(lines) + "\n"
    raise PreconditionError(f"unknown format {fmt!r}")
