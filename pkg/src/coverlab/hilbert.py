"""Hilbert series of S/I for monomial ideals I, closed forms, multiplicities."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import NamedTuple, Sequence

import numpy as np

from .graphs import SimpleGraph, minimum_cover_count, normalize_parts
from .monomial import MonomialIdeal, PreconditionError, _minimal, minimal_primes
from .polynomial import IntPolynomial


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / (1 - t)^den_pow."""

    numerator: IntPolynomial
    den_pow: int

    def reduce(self) -> "ReducedSeries":
        return reduce(self)

    def expand(self, D: int) -> list:
        """First D+1 coefficients of the power series."""
        a, k = self.numerator.coeffs, self.den_pow
        out = []
        for d in range(D + 1):
            if k == 0:
                out.append(a[d] if d < len(a) else 0)
            else:
                out.append(sum(a[i] * comb(d - i + k - 1, k - 1)
                               for i in range(min(d, len(a) - 1) + 1)))
        return out

    def same_rational(self, other: "HilbertSeries") -> bool:
        """Equality as rational functions, by clearing denominators exactly."""
        K = max(self.den_pow, other.den_pow)
        lhs = self.numerator * IntPolynomial.one_minus_t_power(K - self.den_pow)
        rhs = other.numerator * IntPolynomial.one_minus_t_power(K - other.den_pow)
        return lhs == rhs

    def to_json(self) -> dict:
        return {"coeffs": list(self.numerator.coeffs), "den_pow": self.den_pow}

    def __str__(self) -> str:
        return f"({self.numerator}) / (1 - t)^{self.den_pow}"


class ReducedSeries(NamedTuple):
    h: IntPolynomial
    dim: int
    mult: int


# -- numerator by pivot recursion ----------------------------------------

def _pairwise_coprime(gens) -> bool:
    used = [0] * len(gens[0])
    for g in gens:
        for i, e in enumerate(g):
            if e:
                if used[i]:
                    return False
                used[i] = 1
    return True


def _pivot(gens) -> int:
    counts = [0] * len(gens[0])
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    return max(range(len(counts)), key=lambda i: (counts[i], -i))


def _poly_add(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _numerator(gens: tuple) -> tuple:
    if not gens:
        return (1,)
    if not any(gens[0]):
        return ()
    if _pairwise_coprime(gens):
        poly = (1,)
        for g in gens:
            d = sum(g)
            poly = _poly_add(poly, (0,) * d + tuple(-c for c in poly))
        return poly
    j = _pivot(gens)
    unit_j = tuple(1 if i == j else 0 for i in range(len(gens[0])))
    # I = (I + x_j) "+" t * (I : x_j)
    plus = _minimal([g for g in gens if not g[j]] + [unit_j])
    quot = _minimal(g[:j] + (g[j] - 1 if g[j] else 0,) + g[j + 1:] for g in gens)
    return _poly_add(_numerator(plus), (0,) + _numerator(quot))


def numerator(I: MonomialIdeal) -> HilbertSeries:
    """Hilbert series of S/I over (1 - t)^n, n the number of variables."""
    return HilbertSeries(IntPolynomial(_numerator(I.gens)), I.ambient)


def reduce(hs: HilbertSeries) -> ReducedSeries:
    """Cancel every (1 - t) factor; return (h-polynomial, Krull dimension, multiplicity)."""
    if hs.numerator.is_zero():
        raise PreconditionError("zero numerator: the module is zero")
    h, k = hs.numerator, hs.den_pow
    while k > 0:
        q, r = h.divmod_one_minus_t()
        if r != 0:
            break
        h, k = q, k - 1
    mult = h(1)
    if mult <= 0:
        raise ArithmeticError(f"reduced numerator {h} has h(1) = {mult}")
    return ReducedSeries(h, k, mult)


# -- exhaustive oracle ----------------------------------------------------

@lru_cache(maxsize=32)
def _monomials_upto(n: int, D: int):
    rows = []
    for d in range(D + 1):
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            rows.append(e)
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    arr.setflags(write=False)
    return arr


def hilbert_function_oracle(I: MonomialIdeal, D: int) -> list:
    """Count of degree-d monomials outside I, d = 0..D, by enumeration."""
    if D < 0:
        raise PreconditionError("D must be >= 0")
    E = _monomials_upto(I.ambient, D)
    inside = np.zeros(len(E), dtype=bool)
    for g in I.gens:
        inside |= np.all(E >= np.array(g, dtype=np.int64), axis=1)
    degs = E.sum(axis=1)
    return [int(x) for x in np.bincount(degs[~inside], minlength=D + 1)[: D + 1]]


# -- closed forms -----------------------------------------------------------

def closed_form_crown(n: int, s: int) -> HilbertSeries:
    """Series of S/J^s for the crown graph C_{n,n}, as the displayed numerator."""
    if n < 3:
        raise PreconditionError(f"crown Hilbert series formula holds For n≥3; got n={n}")
    if s < 1:
        raise PreconditionError(f"s must be >= 1, got {s}")
    terms = [(i + 1, i) for i in range(n * s)]
    terms += [((n - i - 1) * s, n * s + i) for i in range(n - 2)]
    terms.append((-(n - 1) * s, n * s + n - 2))
    terms += [(-(i + 1) * n, s * (2 * n - 2) - i * (n - 2)) for i in range(s - 1)]
    return HilbertSeries(IntPolynomial.from_terms(terms), 2 * n - 2)


def _parts_n(parts, s):
    parts = normalize_parts(parts)
    if s < 1:
        raise PreconditionError(f"s must be >= 1, got {s}")
    return parts, sum(parts)


def closed_form_bracket(parts: Sequence[int], s: int) -> HilbertSeries:
    """Series of S/J^[s] for J the cover ideal of K_parts."""
    parts, n = _parts_n(parts, s)
    k = len(parts)
    terms = [(1, 0), (k - 1, s * n)] + [(-1, s * (n - p)) for p in parts]
    return HilbertSeries(IntPolynomial.from_terms(terms), n)


def closed_form_bracket_plus_M(parts: Sequence[int], s: int) -> HilbertSeries:
    """Series of S/(J^[s], M), M the product of all variables."""
    parts, n = _parts_n(parts, s)
    terms = [(1, 0), (-1, n)]
    terms += [(-1, s * (n - p)) for p in parts]
    terms += [(1, s * (n - p) + p) for p in parts]
    return HilbertSeries(IntPolynomial.from_terms(terms), n)


def closed_form_symbolic_multipartite(parts: Sequence[int], s: int) -> HilbertSeries:
    """Series of S/J^(s), split by the parity of s."""
    parts, n = _parts_n(parts, s)
    k = len(parts)
    r, odd = divmod(s, 2)
    tail = []
    for j in range(r):
        for p in parts:
            e = (s - j) * (n - p) + j * p
            tail += [(1, e + p), (-1, e)]
    if odd:
        head = [(1, 0), (k - 1, (r + 1) * n)] + [(-1, (n - p) + r * n) for p in parts]
    else:
        head = [(1, 0), (-1, r * n)]
    return HilbertSeries(IntPolynomial.from_terms(head + tail), n)


# -- multiplicities -------------------------------------------------------

def linear_power_multiplicity(h: int, s: int) -> int:
    """Multiplicity of S/P^s for P generated by h independent linear forms."""
    if h < 1 or s < 1:
        raise PreconditionError(f"need h >= 1 and s >= 1, got h={h}, s={s}")
    return comb(s + h - 1, h)


def minh_multiplicity(I: MonomialIdeal, s: int) -> int:
    """binom(h+s-1, h) times the number of minimal primes of minimum height h."""
    primes = minimal_primes(I)
    h = min(p.height for p in primes)
    return linear_power_multiplicity(h, s) * sum(1 for p in primes if p.height == h)


def symbolic_multiplicity(G: SimpleGraph, which: str, s: int) -> int:
    """Closed-form multiplicity of S/I(G)^(s) (``edge``) or S/J(G)^(s) (``cover``)."""
    if not G.edges:
        raise PreconditionError("multiplicity formulas need a graph with at least one edge")
    if s < 1:
        raise PreconditionError(f"s must be >= 1, got {s}")
    if which == "cover":
        return comb(s + 1, 2) * G.edge_count
    if which == "edge":
        h, count = minimum_cover_count(G)
        return comb(h + s - 1, h) * count
    raise PreconditionError(f"which must be 'edge' or 'cover', got {which!r}")
