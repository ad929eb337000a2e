"""Dense univariate polynomials with exact integer coefficients, and q-analogs."""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence


class BettiPolynomial:
    """Polynomial in ``x`` stored as ``coeffs[m]`` = coefficient of ``x**m``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and ``degree == -1``. Values are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> BettiPolynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, m: int) -> int:
        return self.coeffs[m] if 0 <= m < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if isinstance(other, int):
            other = BettiPolynomial.constant(other)
        if not isinstance(other, BettiPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return BettiPolynomial(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return BettiPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, BettiPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return BettiPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return BettiPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BettiPolynomial:
        if k < 0:
            raise ValueError("negative power")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = BettiPolynomial.constant(other)
        if not isinstance(other, BettiPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def reversed(self, degree: int | None = None) -> BettiPolynomial:
        """Coefficients read from ``x**degree`` down to ``x**0``."""
        d = self.degree if degree is None else degree
        return BettiPolynomial(self.coeff(d - m) for m in range(d + 1))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __repr__(self) -> str:
        return f"BettiPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for m, c in enumerate(self.coeffs):
            if not c:
                continue
            if m == 0:
                terms.append(str(c))
            else:
                mono = "x" if m == 1 else f"x^{m}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


ZERO = BettiPolynomial()
ONE = BettiPolynomial((1,))


def q_int(p: int) -> BettiPolynomial:
    """``[p]_x = 1 + x + ... + x**(p-1)``; ``[0]_x = 0``."""
    if p < 0:
        raise ValueError(f"q-integer of negative {p}")
    return BettiPolynomial((1,) * p)


def q_factorial(m: int) -> BettiPolynomial:
    return reduce(lambda acc, p: acc * q_int(p), range(1, m + 1), ONE)


def product(factors: Sequence[BettiPolynomial] | Iterable[BettiPolynomial]) -> BettiPolynomial:
    return reduce(lambda a, b: a * b, factors, ONE)


def total(terms: Iterable[BettiPolynomial]) -> BettiPolynomial:
    return reduce(lambda a, b: a + b, terms, ZERO)
