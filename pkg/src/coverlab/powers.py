"""Ordinary, bracket and symbolic powers of monomial ideals."""

from __future__ import annotations

from math import comb
from typing import Sequence

from .graphs import multipartite_monomials
from .monomial import (
    Monomial,
    MonomialIdeal,
    PreconditionError,
    _minimal,
    intersect,
    minimal_primes,
    product,
)


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 0:
        raise PreconditionError(f"power requires s >= 0, got {s}")
    result = MonomialIdeal.unit(I.ambient)
    for _ in range(s):
        result = product(result, I)
    return result


def bracket_power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """Ideal generated by the s-th powers of the minimal generators of I."""
    if s < 1:
        raise PreconditionError(f"bracket power requires s >= 1, got {s}")
    return MonomialIdeal._from_canonical(
        I.ambient, _minimal(tuple(e * s for e in g) for g in I.gens))


def _check_squarefree(I: MonomialIdeal, s: int) -> None:
    if s < 0:
        raise PreconditionError(f"symbolic power requires s >= 0, got {s}")
    if not I.is_proper_nonzero():
        raise PreconditionError("symbolic power requires a proper nonzero ideal")
    if not I.is_squarefree():
        raise PreconditionError("symbolic power is only defined here for squarefree ideals")


def symbolic_power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """Intersection of p^s over the minimal primes p of a squarefree ideal I."""
    _check_squarefree(I, s)
    n = I.ambient
    if s == 0:
        return MonomialIdeal.unit(n)
    # smallest p^s first keeps the running intersection small
    primes = sorted(minimal_primes(I), key=lambda p: (comb(p.height + s - 1, s), p.sort_key()))
    result = MonomialIdeal.unit(n)
    for p in primes:
        result = intersect(result, power(p.ideal(n), s))
    return result


def symbolic_membership(I: MonomialIdeal, u: Monomial, s: int) -> bool:
    """u lies in I^(s) iff its p-degree is at least s for every minimal prime p."""
    _check_squarefree(I, s)
    if s == 0:
        return True
    return all(p.degree_of(u) >= s for p in minimal_primes(I))


def multipartite_symbolic_generators(parts: Sequence[int], s: int) -> MonomialIdeal:
    """J^(s) = M * J^(s-2) + (N_1^s, ..., N_k^s) for J the cover ideal of K_parts."""
    if s < 0:
        raise PreconditionError(f"s must be >= 0, got {s}")
    m = multipartite_monomials(parts)
    n = m.n
    if s == 0:
        return MonomialIdeal.unit(n)
    J = MonomialIdeal(n, m.Ni)
    if s == 1:
        return J
    # iterate upward from the two bases J^(0) = S, J^(1) = J
    prev2, prev1 = MonomialIdeal.unit(n), J
    M = MonomialIdeal.principal(m.M)
    for t in range(2, s + 1):
        cur = product(M, prev2) + MonomialIdeal(n, [N ** t for N in m.Ni])
        prev2, prev1 = prev1, cur
    return prev1


def multipartite_chain_ideal(parts: Sequence[int], s: int, j: int) -> MonomialIdeal:
    """I_{s,j} = (M, N_1^s, ..., N_j^s)."""
    m = multipartite_monomials(parts)
    k = len(m.parts)
    if s < 2 or not 1 <= j <= k:
        raise PreconditionError(f"I_(s,j) needs s >= 2 and 1 <= j <= k={k}; got s={s}, j={j}")
    return MonomialIdeal(m.n, [m.M, *(N ** s for N in m.Ni[:j])])
