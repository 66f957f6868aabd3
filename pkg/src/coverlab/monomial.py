"""Monomials and monomial ideals over a fixed ambient polynomial ring.

Exponent vectors are plain tuples of ints internally; :class:`Monomial` is the
public wrapper.  Every constructive operation returns a :class:`MonomialIdeal`
in canonical form (minimal generators sorted by degree, then exponent tuple),
so ideal equality is tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

# exponents are meant to fit a signed 32-bit word
MAX_EXPONENT = 2**31 - 1

Exps = tuple  # tuple[int, ...]


class AmbientMismatchError(ValueError):
    """Raised when objects living in different polynomial rings are combined."""


class PreconditionError(ValueError):
    """An input violates a documented range or shape requirement."""


def _check_exps(exps: Exps) -> Exps:
    for e in exps:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponents must be non-negative integers, got {exps!r}")
        if e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
    return exps


def _same_ambient(a: int, b: int) -> None:
    if a != b:
        raise AmbientMismatchError(f"ambient mismatch: {a} vs {b} variables")


# -- raw exponent-tuple kernels -------------------------------------------

def _divides(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: Exps, b: Exps) -> Exps:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _gcd(a: Exps, b: Exps) -> Exps:
    return tuple(x if x < y else y for x, y in zip(a, b))


def _mul(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def _quo(g: Exps, m: Exps) -> Exps:
    """g / gcd(g, m)."""
    return tuple(x - y if x > y else 0 for x, y in zip(g, m))


def _key(g: Exps):
    return (sum(g), g)


def _minimal(gens: Iterable[Exps]) -> tuple:
    """Drop every generator properly divisible by another; canonical order."""
    cands = sorted(set(gens), key=_key)
    kept: list = []
    for g in cands:
        for h in kept:
            if _divides(h, g):
                break
        else:
            kept.append(g)
    return tuple(kept)


def _in_ideal(gens: Sequence[Exps], m: Exps) -> bool:
    for g in gens:
        if _divides(g, m):
            return True
    return False


# -- public types ---------------------------------------------------------

@dataclass(frozen=True, order=False)
class Monomial:
    """A monomial x^a given by its exponent vector a."""

    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents", _check_exps(tuple(self.exponents)))

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int, power: int = 1) -> "Monomial":
        e = [0] * n
        e[i] = power
        return cls(tuple(e))

    @classmethod
    def from_support(cls, support: Iterable[int], n: int) -> "Monomial":
        e = [0] * n
        for i in support:
            e[i] = 1
        return cls(tuple(e))

    @property
    def ambient(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_ambient(self.ambient, other.ambient)
        return Monomial(_mul(self.exponents, other.exponents))

    def __pow__(self, s: int) -> "Monomial":
        if s < 0:
            raise PreconditionError("monomial power requires s >= 0")
        return Monomial(tuple(e * s for e in self.exponents))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        _same_ambient(self.ambient, other.ambient)
        if not _divides(other.exponents, self.exponents):
            raise ValueError("division is not exact")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"x{i + 1}" for i in range(self.ambient)]
        parts = []
        for name, e in zip(names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "".join(parts) or "1"

    def __repr__(self) -> str:
        return f"Monomial({self.format()})"


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _same_ambient(a.ambient, b.ambient)
    return Monomial(_lcm(a.exponents, b.exponents))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _same_ambient(a.ambient, b.ambient)
    return Monomial(_gcd(a.exponents, b.exponents))


def divides(a: Monomial, b: Monomial) -> bool:
    _same_ambient(a.ambient, b.ambient)
    return _divides(a.exponents, b.exponents)


class MonomialIdeal:
    """Ideal generated by finitely many monomials in ``ambient`` variables.

    The zero ideal has no generators; the unit ideal is generated by the
    identity monomial.
    """

    __slots__ = ("ambient", "_gens", "_hash")

    def __init__(self, ambient: int, gens: Iterable = ()):
        raw = []
        for g in gens:
            e = g.exponents if isinstance(g, Monomial) else _check_exps(tuple(g))
            if len(e) != ambient:
                raise AmbientMismatchError(
                    f"generator of length {len(e)} in ring with {ambient} variables")
            raw.append(e)
        self.ambient = ambient
        self._gens = _minimal(raw)
        self._hash = None

    @classmethod
    def _from_canonical(cls, ambient: int, gens: tuple) -> "MonomialIdeal":
        obj = cls.__new__(cls)
        obj.ambient = ambient
        obj._gens = gens
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls._from_canonical(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls._from_canonical(n, ((0,) * n,))

    @classmethod
    def principal(cls, m: Monomial) -> "MonomialIdeal":
        return cls._from_canonical(m.ambient, (m.exponents,))

    @classmethod
    def variables(cls, support: Iterable[int], n: int) -> "MonomialIdeal":
        """The monomial prime generated by the given variables."""
        gens = []
        for i in support:
            e = [0] * n
            e[i] = 1
            gens.append(tuple(e))
        return cls(n, gens)

    @property
    def gens(self) -> tuple:
        """Raw exponent tuples of the minimal generators, in canonical order."""
        return self._gens

    @property
    def generators(self) -> tuple:
        return tuple(Monomial(g) for g in self._gens)

    def __len__(self) -> int:
        return len(self._gens)

    def is_zero(self) -> bool:
        return not self._gens

    def is_unit(self) -> bool:
        return len(self._gens) == 1 and not any(self._gens[0])

    def is_proper_nonzero(self) -> bool:
        return bool(self._gens) and not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self._gens for e in g)

    def max_degree(self) -> int:
        return max(sum(g) for g in self._gens)

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ambient == other.ambient and self._gens == other._gens

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ambient, self._gens))
        return self._hash

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def format(self, names: Sequence[str] | None = None, sep: str = ", ") -> str:
        if self.is_zero():
            return "0"
        return sep.join(Monomial(g).format(names) for g in self._gens)

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.format()})"


@dataclass(frozen=True)
class PrimeSupport:
    """The monomial prime ideal generated by a set of variables."""

    variables: frozenset

    def __post_init__(self):
        v = frozenset(self.variables)
        if not v:
            raise ValueError("a monomial prime needs at least one variable")
        object.__setattr__(self, "variables", v)

    @property
    def height(self) -> int:
        return len(self.variables)

    def degree_of(self, u: Monomial) -> int:
        """Sum of the exponents of ``u`` over the variables of this prime."""
        return sum(u.exponents[i] for i in self.variables)

    def ideal(self, n: int) -> MonomialIdeal:
        return MonomialIdeal.variables(sorted(self.variables), n)

    def sort_key(self):
        return (len(self.variables), tuple(sorted(self.variables)))


# -- ideal operations -----------------------------------------------------

def minimalize(gens: Iterable[Monomial], ambient: int | None = None) -> MonomialIdeal:
    gens = list(gens)
    if ambient is None:
        if not gens:
            raise ValueError("ambient is required for an empty generator set")
        ambient = gens[0].ambient
    return MonomialIdeal(ambient, gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I.ambient, J.ambient)
    return MonomialIdeal._from_canonical(I.ambient, _minimal(I.gens + J.gens))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I.ambient, J.ambient)
    gens = _minimal(_mul(g, h) for g in I.gens for h in J.gens)
    if gens and max(max(g) for g in gens) > MAX_EXPONENT:
        raise OverflowError("exponent overflow in product")
    return MonomialIdeal._from_canonical(I.ambient, gens)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I.ambient, J.ambient)
    return MonomialIdeal._from_canonical(
        I.ambient, _minimal(_lcm(g, h) for g in I.gens for h in J.gens))


def intersect_all(ideals: Sequence[MonomialIdeal], ambient: int) -> MonomialIdeal:
    """Intersection of a family; the empty family gives the unit ideal."""
    return reduce(intersect, ideals, MonomialIdeal.unit(ambient))


def colon(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    _same_ambient(I.ambient, m.ambient)
    e = m.exponents
    return MonomialIdeal._from_canonical(I.ambient, _minimal(_quo(g, e) for g in I.gens))


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J as the intersection of the colons by the generators of J."""
    _same_ambient(I.ambient, J.ambient)
    return intersect_all([colon(I, Monomial(g)) for g in J.gens], I.ambient)


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    e = m.exponents if isinstance(m, Monomial) else tuple(m)
    _same_ambient(I.ambient, len(e))
    return _in_ideal(I.gens, e)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal._from_canonical(
        I.ambient, _minimal(tuple(1 if x else 0 for x in g) for g in I.gens))


def minimal_primes(I: MonomialIdeal) -> list:
    """Minimal primes of ``I``, i.e. minimal transversals of its support hypergraph.

    Each generator support E gives the prime (x_i : i in E); intersecting them
    yields the squarefree ideal whose generators are the minimal transversals.
    """
    if not I.is_proper_nonzero():
        raise PreconditionError("minimal_primes requires a proper nonzero ideal")
    n = I.ambient
    edges = sorted({frozenset(i for i, x in enumerate(g) if x) for g in I.gens},
                   key=lambda s: (len(s), sorted(s)))
    dual = intersect_all([MonomialIdeal.variables(sorted(e), n) for e in edges], n)
    primes = [PrimeSupport(frozenset(i for i, x in enumerate(g) if x)) for g in dual.gens]
    return sorted(primes, key=PrimeSupport.sort_key)


def height(I: MonomialIdeal) -> int:
    return min(p.height for p in minimal_primes(I))
