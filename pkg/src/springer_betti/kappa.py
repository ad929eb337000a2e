"""Kappa codes: coordinates on the set of tableaux sharing a standardization.

For a standard tableau ``T`` every row-standard ``t`` with
``standardize(t) == T`` is reached from ``T`` by applying ``delta_i``
``kappa_i`` times for ``i = 1..n`` in order, with ``0 <= kappa_i < p_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian

from .errors import BoundsError, ParseError, SpringerError
from .moves import delta, is_applicable
from .poly import BettiPolynomial, product, q_int
from .tableau import StandardTableau, Tableau, as_standard, standardize


@dataclass(frozen=True)
class PQStatistics:
    """``q[i-1]``: 1-based column of ``i`` in ``T``; ``p[i-1]``: rows of length
    ``q_i`` in the prefix subtableau of entries ``1..i``."""

    q: tuple[int, ...]
    p: tuple[int, ...]

    @property
    def class_size(self) -> int:
        out = 1
        for x in self.p:
            out *= x
        return out


def pq_statistics(T: StandardTableau) -> PQStatistics:
    T = as_standard(T)
    qs, ps = [], []
    for i in range(1, T.n + 1):
        q = T.position(i)[1] + 1
        qs.append(q)
        ps.append(T.prefix_shape(i).rows_of_length(q))
    return PQStatistics(tuple(qs), tuple(ps))


def check_bounds(T: StandardTableau, kappa) -> PQStatistics:
    stats = pq_statistics(T)
    kappa = tuple(kappa)
    if len(kappa) != T.n:
        raise BoundsError(f"kappa code has length {len(kappa)}, expected {T.n}")
    for i, (k, p) in enumerate(zip(kappa, stats.p), start=1):
        if not 0 <= k <= p - 1:
            raise BoundsError(f"kappa_{i} = {k} outside 0..{p - 1}")
    return stats


def decode(T: StandardTableau, kappa) -> Tableau:
    """Apply ``delta_1`` ``kappa_1`` times, then ``delta_2``, ... up to ``delta_n``."""
    T = as_standard(T)
    check_bounds(T, kappa)
    t: Tableau = T
    for i, k in enumerate(kappa, start=1):
        for _ in range(k):
            t = delta(t, i)
    return t


def encode(t: Tableau) -> tuple[StandardTableau, tuple[int, ...]]:
    """Inverse of :func:`decode`.

    Peels entries from ``n`` down: ``kappa_i`` is the number of smaller
    entries below ``i`` in its column, and each is undone by the move at the
    entry directly below ``i``.
    """
    T = standardize(t)
    kappa = [0] * t.n
    for i in range(t.n, 0, -1):
        r, c = t.position(i)
        k = sum(1 for row in t.rows[r + 1:] if c < len(row) and row[c] < i)
        kappa[i - 1] = k
        for _ in range(k):
            b = t.below(i)
            if b is None or not is_applicable(t, b):
                raise SpringerError(f"cannot undo a move of {i} in {t}")
            t = delta(t, b)
    if t != T:
        raise SpringerError(f"peeling ended at {t}, expected {T}")
    return T, tuple(kappa)


def all_codes(T: StandardTableau):
    """Every in-bounds kappa code for ``T``, lexicographically."""
    return cartesian(*(range(p) for p in pq_statistics(T).p))


def chi_T(T: StandardTableau) -> BettiPolynomial:
    """``prod [p_i]_x``: coefficient of ``x**m`` counts the class members with ``m`` inversions."""
    return product(q_int(p) for p in pq_statistics(T).p)


def inversion_distribution(T: StandardTableau) -> dict[int, int]:
    return {m: c for m, c in enumerate(chi_T(T).coeffs) if c}


def parse_kappa(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ParseError(f"cannot parse kappa code {text!r}") from None


def format_kappa(kappa) -> str:
    return ",".join(str(k) for k in kappa)
