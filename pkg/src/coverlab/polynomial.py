"""Univariate polynomials in t with exact integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable


def _trim(coeffs) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Immutable; ``coeffs[i]`` is the coefficient of t^i, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple]) -> "IntPolynomial":
        """Sum of ``coef * t^exp`` over (coef, exp) pairs; repeated exponents add up."""
        acc: dict = {}
        for c, e in terms:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + c
        if not acc:
            return cls()
        out = [0] * (max(acc) + 1)
        for e, c in acc.items():
            out[e] = c
        return cls(out)

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> "IntPolynomial":
        return cls([0] * exp + [coef])

    @classmethod
    def one_minus_t_power(cls, k: int) -> "IntPolynomial":
        p = cls([1])
        base = cls([1, -1])
        for _ in range(k):
            p = p * base
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def divmod_one_minus_t(self) -> tuple:
        """Synthetic division by (1 - t): returns (quotient, remainder)."""
        if not self.coeffs:
            return IntPolynomial(), 0
        # p(t) = (1 - t) q(t) + r  with q_i = -sum_{j > i} p_j, r = p(1)
        q, run = [], 0
        for c in reversed(self.coeffs[1:]):
            run -= c
            q.append(run)
        return IntPolynomial(q[::-1]), sum(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"

    _TERM = re.compile(r"([+-]?)\s*(\d*)\s*(t(?:\^(\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Inverse of ``str``: accepts forms like ``1 - 3t^2 + 2t^3``."""
        if re.search(r"\d\s+[\dt]", text):
            raise ValueError(f"cannot parse polynomial {text!r}")
        s = text.replace(" ", "")
        if s == "0":
            return cls()
        terms, pos = [], 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if (not m or m.end() == pos or not (m.group(2) or m.group(3))
                    or (pos and not m.group(1))):
                raise ValueError(f"cannot parse polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                exp = int(m.group(4)) if m.group(4) else 1
            else:
                exp = 0
            terms.append((sign * coef, exp))
            pos = m.end()
        return cls.from_terms(terms)
