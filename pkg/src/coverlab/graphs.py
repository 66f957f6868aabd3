"""Simple graphs, their edge ideals and cover ideals.

Two families get closed-form generator sets: crown graphs C_{n,n}
(K_{n,n} minus a perfect matching) and complete multipartite graphs.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .monomial import (
    Monomial,
    MonomialIdeal,
    PreconditionError,
    intersect_all,
    minimal_primes,
)


class GraphError(ValueError):
    pass


class LoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class EdgeListParseError(GraphError):
    pass


class EdgelessGraphWarning(UserWarning):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    """Labeled vertices ``0..n-1`` and a set of undirected edges ``(i, j)``, i < j."""

    labels: tuple
    edges: tuple
    family: tuple | None = field(default=None, compare=False)
    # for multipartite input: original part order -> sorted position
    permutation: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        if len(set(labels)) != len(labels):
            raise GraphError("vertex labels must be unique")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise LoopError(f"loop at vertex {labels[u]}")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge {labels[u]} {labels[v]}")
            if not (0 <= e[0] and e[1] < len(labels)):
                raise GraphError(f"edge {e} out of range")
            seen.add(e)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_list_text(self) -> str:
        return "".join(f"{self.labels[u]} {self.labels[v]}\n" for u, v in self.edges)


@dataclass(frozen=True)
class VertexCover:
    vertices: frozenset

    def is_cover_of(self, G: SimpleGraph) -> bool:
        return all(u in self.vertices or v in self.vertices for u, v in G.edges)

    def is_minimal_cover_of(self, G: SimpleGraph) -> bool:
        return self.is_cover_of(G) and not any(
            VertexCover(self.vertices - {v}).is_cover_of(G) for v in self.vertices)

    def labels(self, G: SimpleGraph) -> list:
        return [G.labels[i] for i in sorted(self.vertices)]


# -- constructors ---------------------------------------------------------

def crown(n: int) -> SimpleGraph:
    """C_{n,n} on x1..xn, y1..yn with edges {x_i, y_j}, i != j."""
    if n < 2:
        raise PreconditionError(f"crown graph requires n >= 2, got {n}")
    labels = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
    edges = [(i, n + j) for i in range(n) for j in range(n) if i != j]
    return SimpleGraph(tuple(labels), tuple(edges), family=("crown", n))


def normalize_parts(parts: Sequence[int]) -> tuple:
    parts = tuple(int(p) for p in parts)
    if len(parts) < 2:
        raise PreconditionError(f"complete multipartite graph requires k >= 2 parts, got {len(parts)}")
    if any(p < 1 for p in parts):
        raise PreconditionError(f"every part size must be >= 1, got {parts}")
    return tuple(sorted(parts, reverse=True))


def complete_multipartite(parts: Sequence[int]) -> SimpleGraph:
    """K_{p_1,...,p_k} with parts sorted descending.

    Vertex ``x{i}{j}`` is slot j of part i (``x{i}_{j}`` once an index reaches 10).
    """
    given = tuple(int(p) for p in parts)
    ordered = normalize_parts(given)
    perm = tuple(sorted(range(len(given)), key=lambda i: (-given[i], i)))
    labels, block = [], []
    sep = "_" if len(ordered) > 9 or ordered[0] > 9 else ""
    for i, p in enumerate(ordered, start=1):
        block.append(list(range(len(labels), len(labels) + p)))
        labels.extend(f"x{i}{sep}{j}" for j in range(1, p + 1))
    edges = [(u, v)
             for a in range(len(block)) for b in range(a + 1, len(block))
             for u in block[a] for v in block[b]]
    return SimpleGraph(tuple(labels), tuple(edges),
                       family=("multipartite", ordered), permutation=perm)


def complete_graph(n: int) -> SimpleGraph:
    return complete_multipartite([1] * n)


def from_edge_list(text: str) -> SimpleGraph:
    """Parse ``u v`` lines; ``#`` starts a comment.  Vertices ordered by first appearance."""
    index: dict = {}
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListParseError(f"line {lineno}: expected two labels, got {raw!r}")
        u, v = fields
        if u == v:
            raise LoopError(f"line {lineno}: loop at {u}")
        for lab in (u, v):
            index.setdefault(lab, len(index))
        e = frozenset((index[u], index[v]))
        if e in seen:
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(e)
        edges.append((index[u], index[v]))
    return SimpleGraph(tuple(index), tuple(edges))


# -- ideals ---------------------------------------------------------------

def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    n = G.vertex_count
    return MonomialIdeal(n, [Monomial.from_support(e, n) for e in G.edges])


def cover_ideal(G: SimpleGraph) -> MonomialIdeal:
    """Intersection of the edge primes (x_u, x_v); unit ideal (with a warning) if edgeless."""
    n = G.vertex_count
    if not G.edges:
        warnings.warn("edgeless graph: cover ideal is the unit ideal", EdgelessGraphWarning)
        return MonomialIdeal.unit(n)
    return intersect_all([MonomialIdeal.variables(e, n) for e in G.edges], n)


def minimal_vertex_covers(G: SimpleGraph) -> list:
    J = cover_ideal(G)
    if not G.edges:
        return [VertexCover(frozenset())]
    return [VertexCover(frozenset(i for i, x in enumerate(g) if x)) for g in J.gens]


def cover_degree(G: SimpleGraph) -> int:
    if not G.edges:
        raise PreconditionError("cover degree needs a graph with at least one edge")
    return cover_ideal(G).max_degree()


def minimum_cover_count(G: SimpleGraph) -> tuple:
    """(h, V): the smallest vertex-cover size and how many minimal covers attain it."""
    if not G.edges:
        raise PreconditionError("graph must have at least one edge")
    primes = minimal_primes(edge_ideal(G))
    h = min(p.height for p in primes)
    return h, sum(1 for p in primes if p.height == h)


# -- closed forms for the two families --------------------------------------

class CrownMonomials(NamedTuple):
    n: int
    Mx: Monomial
    My: Monomial
    M: Monomial
    Mi: tuple  # M / (x_i y_i), i = 1..n

    def x(self, i: int) -> Monomial:
        return Monomial.var(i - 1, 2 * self.n)

    def y(self, i: int) -> Monomial:
        return Monomial.var(self.n + i - 1, 2 * self.n)


class MultipartiteMonomials(NamedTuple):
    parts: tuple
    n: int
    M: Monomial
    Mi: tuple  # product of part i
    Ni: tuple  # M / M_i


def crown_monomials(n: int) -> CrownMonomials:
    if n < 3:
        raise PreconditionError(f"crown closed forms hold For n≥3; got n={n}")
    N = 2 * n
    Mx = Monomial.from_support(range(n), N)
    My = Monomial.from_support(range(n, N), N)
    M = Mx * My
    Mi = tuple(Monomial.from_support([j for j in range(N) if j not in (i, n + i)], N)
               for i in range(n))
    return CrownMonomials(n, Mx, My, M, Mi)


def multipartite_monomials(parts: Sequence[int]) -> MultipartiteMonomials:
    parts = normalize_parts(parts)
    n = sum(parts)
    Mi, start = [], 0
    for p in parts:
        Mi.append(Monomial.from_support(range(start, start + p), n))
        start += p
    M = Monomial.from_support(range(n), n)
    Ni = tuple(M / m for m in Mi)
    return MultipartiteMonomials(parts, n, M, tuple(Mi), Ni)


def notation_generators(family: str, param) -> tuple:
    """Cover-ideal generators in formula order: (M_x, M_y, M_1..M_n) or (N_1..N_k)."""
    if family == "crown":
        c = crown_monomials(param)
        return (c.Mx, c.My, *c.Mi)
    if family == "multipartite":
        return multipartite_monomials(param).Ni
    raise PreconditionError(f"unknown family {family!r}")


def closed_form_cover_generators(family: str, param) -> MonomialIdeal:
    """Cover ideal written down directly from the family's generator formula.

    ``family`` is ``"crown"`` (param n >= 3) or ``"multipartite"`` (param parts).
    """
    gens = notation_generators(family, param)
    return MonomialIdeal(gens[0].ambient, gens)


def graph_for(family: str, param) -> SimpleGraph:
    if family == "crown":
        return crown(param)
    if family == "multipartite":
        return complete_multipartite(param)
    if family == "complete":
        return complete_graph(param)
    raise PreconditionError(f"unknown family {family!r}")
