"""Multigraded Betti numbers, regularity and projective dimension.

beta_{i,b}(I) is the rank of the reduced homology H~_{i-1} of the upper Koszul
complex K^b(I) = {squarefree tau <= b : x^(b - tau) in I}.  Only multidegrees in
the lcm lattice of I can carry nonzero Betti numbers, so only those are probed.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .graphs import normalize_parts
from .monomial import Monomial, MonomialIdeal, PreconditionError, _divides, _lcm
from .polynomial import IntPolynomial

THREADS_ENV = "COVERLAB_THREADS"
PARALLEL_MIN_LATTICE = 256  # below this, process startup outweighs the work


def _require_proper(I: MonomialIdeal) -> None:
    if not I.is_proper_nonzero():
        raise PreconditionError("requires a proper nonzero monomial ideal")


# -- lcm lattice ----------------------------------------------------------

@dataclass(frozen=True)
class LcmLattice:
    ambient: int
    elements: tuple  # exponent tuples, sorted by (degree, exponents)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, b) -> bool:
        e = b.exponents if isinstance(b, Monomial) else tuple(b)
        return e in set(self.elements)

    @property
    def top(self) -> Monomial:
        return Monomial(self.elements[-1])


def _lattice(gens: tuple) -> set:
    L = set(gens)
    frontier = set(gens)
    while frontier:
        new = {_lcm(a, g) for a in frontier for g in gens} - L
        L |= new
        frontier = new
    return L


def lcm_lattice(I: MonomialIdeal) -> LcmLattice:
    """Closure of the minimal generators under pairwise lcm."""
    _require_proper(I)
    elems = sorted(_lattice(I.gens), key=lambda e: (sum(e), e))
    return LcmLattice(I.ambient, tuple(elems))


# -- simplicial complexes ---------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplexLite:
    """Downward-closed family of faces; ``faces == frozenset()`` is the void complex."""

    vertices: frozenset
    faces: frozenset = field(default_factory=frozenset)

    @classmethod
    def from_facets(cls, facets, vertices=None) -> "SimplicialComplexLite":
        faces = set()
        for F in facets:
            F = sorted(F)
            for mask in range(1 << len(F)):
                faces.add(frozenset(F[i] for i in range(len(F)) if mask >> i & 1))
        verts = frozenset(vertices) if vertices is not None else frozenset().union(*faces) if faces else frozenset()
        return cls(verts, frozenset(faces))

    def is_void(self) -> bool:
        return not self.faces

    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.faces), default=-2)


def _bareiss_rank(rows: list) -> int:
    """Rank over Q of an integer matrix by fraction-free elimination."""
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    m, ncols = len(M), len(M[0])
    rank, prev = 0, 1
    for c in range(ncols):
        piv = next((r for r in range(rank, m) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][c]
        for r in range(rank + 1, m):
            a = M[r][c]
            row, top = M[r], M[rank]
            for cc in range(c, ncols):
                row[cc] = (p * row[cc] - a * top[cc]) // prev
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def _homology_from_masks(faces: set) -> tuple:
    """Reduced homology ranks of a complex given by face bitmasks; index 0 is dim -1."""
    if not faces:
        return ()
    by_dim: dict = {}
    for f in faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    top = max(by_dim)
    index = {d: {f: i for i, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    ranks = {}
    for d in range(0, top + 1):
        lower = index[d - 1]
        rows = []
        for f in sorted(by_dim[d]):
            row = [0] * len(lower)
            sign, bits = 1, f
            while bits:
                low = bits & -bits
                row[lower[f ^ low]] = sign
                sign = -sign
                bits ^= low
            rows.append(row)
        ranks[d] = _bareiss_rank(rows)
    out = []
    for d in range(-1, top + 1):
        out.append(len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return tuple(out)


def reduced_homology_ranks(c: SimplicialComplexLite) -> tuple:
    """Ranks of reduced homology over a field of characteristic 0.

    Entry ``k`` is the rank of H~_{k-1}, so the first entry is H~_{-1}
    (nonzero only for the irrelevant complex {emptyset}).  The void complex
    returns an empty tuple.
    """
    faces = {sum(1 << v for v in f) for f in c.faces}
    return _homology_from_masks(faces)


def _koszul_facets(gens: tuple, b: tuple) -> list:
    facets = []
    for g in gens:
        if _divides(g, b):
            facets.append(sum(1 << i for i, (x, y) in enumerate(zip(g, b)) if x < y))
    return facets


def upper_koszul_complex(I: MonomialIdeal, b: Monomial) -> SimplicialComplexLite:
    """Faces: squarefree tau <= b with x^(b - tau) in I."""
    e = b.exponents
    facets = _koszul_facets(I.gens, e)
    supp = [i for i, x in enumerate(e) if x]
    return SimplicialComplexLite.from_facets(
        [[i for i in supp if F >> i & 1] for F in facets], supp)


def _betti_at(gens: tuple, b: tuple) -> tuple:
    facets = _koszul_facets(gens, b)
    if not facets:
        return ()
    common = facets[0]
    for F in facets[1:]:
        common &= F
    if common:
        return ()  # cone over any common vertex: acyclic
    faces = set()
    for F in set(facets):
        sub = F
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & F
    return _homology_from_masks(faces)


def _betti_chunk(args) -> list:
    gens, bs = args
    return [(b, _betti_at(gens, b)) for b in bs]


def worker_count(workers: int | None = None) -> int:
    if workers is None:
        workers = int(os.environ.get(THREADS_ENV, "1") or 1)
    return max(1, workers)


# -- Betti tables ---------------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    """Nonzero beta_{i,b}(I), keyed by (homological index i, multidegree b)."""

    ambient: int
    entries: dict

    def coarse(self) -> dict:
        out: dict = {}
        for (i, b), r in self.entries.items():
            key = (i, sum(b))
            out[key] = out.get(key, 0) + r
        return dict(sorted(out.items()))

    @property
    def regularity(self) -> int:
        """reg(I)."""
        return max(sum(b) - i for (i, b) in self.entries)

    @property
    def regularity_quotient(self) -> int:
        """reg(S/I) = reg(I) - 1."""
        return self.regularity - 1

    @property
    def projective_dimension(self) -> int:
        """pd(S/I) = pd(I) + 1."""
        return 1 + max(i for (i, _b) in self.entries)

    def witness(self) -> tuple:
        """An entry (i, b) attaining the regularity."""
        return max(self.entries, key=lambda k: (sum(k[1]) - k[0], k))

    def k_polynomial(self) -> IntPolynomial:
        """sum_i (-1)^i sum_b beta_{i,b}(S/I) t^|b|; equals the Hilbert numerator over (1-t)^n."""
        terms = [(1, 0)]
        for (i, b), r in self.entries.items():
            terms.append(((-1) ** (i + 1) * r, sum(b)))
        return IntPolynomial.from_terms(terms)

    def to_json(self) -> dict:
        return {
            "entries": [{"i": i, "b": list(b), "rank": r} for (i, b), r in self.entries.items()],
            "reg": self.regularity,
            "pd": self.projective_dimension,
        }


def betti_table(I: MonomialIdeal, workers: int | None = None) -> BettiTable:
    _require_proper(I)
    gens = I.gens
    lattice = sorted(_lattice(gens), key=lambda e: (sum(e), e))
    workers = worker_count(workers)
    if workers > 1 and len(lattice) > PARALLEL_MIN_LATTICE:
        step = -(-len(lattice) // (4 * workers))
        chunks = [(gens, lattice[i:i + step]) for i in range(0, len(lattice), step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [pair for part in pool.map(_betti_chunk, chunks) for pair in part]
    else:
        results = _betti_chunk((gens, lattice))
    entries = {}
    for b, ranks in results:
        for i, r in enumerate(ranks):
            if r:
                entries[(i, b)] = r
    entries = dict(sorted(entries.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1])))
    return BettiTable(I.ambient, entries)


def regularity(I: MonomialIdeal, workers: int | None = None) -> int:
    """Castelnuovo-Mumford regularity of the ideal I."""
    return betti_table(I, workers).regularity


def projective_dimension(I: MonomialIdeal, workers: int | None = None) -> int:
    """Projective dimension of S/I."""
    return betti_table(I, workers).projective_dimension


# -- closed-form regularity ------------------------------------------------

def closed_form_regularity(family: str, **params) -> int:
    """Regularity predicted for the families with known formulas.

    ``crown`` (n, s): reg J^s = s(2n - 2).
    ``multipartite`` (parts, s): reg J^(s) = s(n - p_k) + p_k - 1.
    ``chain`` (parts, s, j): reg (M, N_1^s..N_j^s) = s(n - p_j) + p_j - 1.
    ``complete`` (n, s): reg J^(s) = s(n - 1).
    """
    s = params.get("s", 1)
    if s < 1:
        raise PreconditionError(f"s must be >= 1, got {s}")
    if family == "crown":
        n = params["n"]
        if n < 3:
            raise PreconditionError(f"crown regularity formula holds For n≥3; got n={n}")
        return s * (2 * n - 2)
    if family == "complete":
        n = params["n"]
        if n < 2:
            raise PreconditionError(f"complete graph needs n >= 2, got {n}")
        return s * (n - 1)
    parts = normalize_parts(params["parts"])
    n = sum(parts)
    if family == "multipartite":
        return s * (n - parts[-1]) + parts[-1] - 1
    if family == "chain":
        j = params["j"]
        if s < 2 or not 1 <= j <= len(parts):
            raise PreconditionError(f"I_(s,j) needs s >= 2 and 1 <= j <= k; got s={s}, j={j}")
        p = parts[j - 1]
        return s * (n - p) + p - 1
    raise PreconditionError(f"unknown family {family!r}")
