"""Poincare polynomials and Betti numbers of type A Springer fibers.

``chi(x)`` is indexed by codimension: the coefficient of ``x**m`` counts
row-standard tableaux with ``m`` inversions, and the Betti number ``b_m``
is the coefficient of ``x**(d - m)`` with ``d`` the fiber dimension.
Three independent routes compute it:

* ``enumeration``: histogram of the inversion statistic over every
  row-standard tableau (brute force);
* ``product-sum``: sum over standard tableaux of ``prod [p_i]_x``;
* ``recursion``: removal of corners, memoized on the partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import kernels
from .errors import CrossCheckError, ShapeError
from .kappa import chi_T
from .partitions import (
    Partition,
    as_partition,
    conjugate,
    format_partition,
    hook_count,
    multinomial,
    springer_dimension,
)
from .poly import ONE, BettiPolynomial, product, q_factorial, q_int, total
from .tableau import check_cap, enumerate_standard, t_min

METHODS = ("enumeration", "product-sum", "recursion")


@dataclass(frozen=True)
class Corner:
    """A removable box; ``row`` and ``column`` are 1-based."""

    row: int
    column: int
    p: int


def corners(shape) -> list[Corner]:
    shape = as_partition(shape)
    return [
        Corner(r + 1, c + 1, shape.rows_of_length(c + 1)) for r, c in shape.corners()
    ]


def chi_enumeration(shape, cap: int | None = None) -> BettiPolynomial:
    shape = as_partition(shape)
    check_cap(multinomial(shape), cap)
    return BettiPolynomial(kernels.inversion_histogram(shape.parts, springer_dimension(shape)))


def chi_sum(shape, cap: int | None = None) -> BettiPolynomial:
    return total(chi_T(T) for T in enumerate_standard(as_partition(shape), cap=cap))


@lru_cache(maxsize=None)
def _chi_recursive(parts: tuple[int, ...]) -> BettiPolynomial:
    if not parts:
        return ONE
    shape = Partition(parts)
    return total(
        q_int(shape.rows_of_length(c + 1)) * _chi_recursive(shape.remove_cell(r).parts)
        for r, c in shape.corners()
    )


def chi_recursive(shape) -> BettiPolynomial:
    return _chi_recursive(as_partition(shape).parts)


def chi_tmin(shape) -> BettiPolynomial:
    """Poincare polynomial of the component indexed by ``t_min``: ``prod [mu_q]_x!``."""
    return product(q_factorial(m) for m in conjugate(shape).parts)


def chi(shape, method: str = "recursion", cap: int | None = None) -> BettiPolynomial:
    if method == "enumeration":
        return chi_enumeration(shape, cap=cap)
    if method == "product-sum":
        return chi_sum(shape, cap=cap)
    if method == "recursion":
        return chi_recursive(shape)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS + ('all',)}")


@dataclass(frozen=True)
class BettiTable:
    shape: Partition
    dim: int
    poincare_by_codim: tuple[int, ...]
    betti: tuple[int, ...]
    num_standard: int
    num_row_standard: int
    method: str
    agreement: bool | None = None

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "n": self.shape.n,
            "dim": self.dim,
            "poincare_by_codim": list(self.poincare_by_codim),
            "betti": list(self.betti),
            "num_standard": self.num_standard,
            "num_row_standard": str(self.num_row_standard),
            "method": self.method,
            "agreement": self.agreement,
        }

    def csv_row(self) -> list[str]:
        return [
            format_partition(self.shape),
            str(self.shape.n),
            str(self.dim),
            " ".join(map(str, self.betti)),
            " ".join(map(str, self.poincare_by_codim)),
            str(self.num_standard),
            str(self.num_row_standard),
            self.method,
            "" if self.agreement is None else str(self.agreement).lower(),
        ]


CSV_HEADER = [
    "shape", "n", "dim", "betti", "poincare_by_codim",
    "num_standard", "num_row_standard", "method", "agreement",
]


def betti_numbers(shape, method: str = "all", cap: int | None = None) -> BettiTable:
    """Betti numbers ``b_0..b_d``.

    ``method="all"`` runs every route and raises :class:`CrossCheckError`
    unless they agree exactly.
    """
    shape = as_partition(shape)
    d = springer_dimension(shape)
    agreement = None
    if method == "all":
        results = {m: chi(shape, m, cap=cap) for m in METHODS}
        poly = results["recursion"]
        if any(p != poly for p in results.values()):
            raise CrossCheckError(
                f"methods disagree on {shape.parts}: "
                + "; ".join(f"{m}={p}" for m, p in results.items()),
                results,
            )
        agreement = True
    else:
        poly = chi(shape, method, cap=cap)
    coeffs = tuple(poly.coeff(m) for m in range(d + 1))
    return BettiTable(
        shape=shape,
        dim=d,
        poincare_by_codim=coeffs,
        betti=coeffs[::-1],
        num_standard=hook_count(shape),
        num_row_standard=multinomial(shape),
        method=method,
        agreement=agreement,
    )


def tmin_unique_top_degree(shape) -> bool:
    """Whether ``t_min`` is the only standard tableau whose product reaches degree ``d``.

    Observed on small shapes; not a proven property.
    """
    shape = as_partition(shape)
    d = springer_dimension(shape)
    top = [T for T in enumerate_standard(shape) if chi_T(T).degree == d]
    return top == [t_min(shape)]


# -- closed forms for special shapes -------------------------------------------

FAMILIES = {
    "single-row": ("n",),
    "column": ("n",),
    "one-box-second-row": ("s",),
    "two-column-hook": ("r",),
    "hook": ("s", "r"),
    "two-row": ("s", "t"),
}


def _params(family: str, params: dict) -> dict:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    expected = FAMILIES[family]
    if set(params) != set(expected):
        raise ValueError(f"family {family!r} takes parameters {expected}, got {tuple(params)}")
    for k, v in params.items():
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"parameter {k} must be a nonnegative integer, got {v!r}")
    return params


def family_shape(family: str, **params) -> Partition:
    p = _params(family, params)
    if family == "single-row":
        return Partition((p["n"],) if p["n"] else ())
    if family == "column":
        return Partition((1,) * p["n"])
    if family == "one-box-second-row":
        if p["s"] < 1:
            raise ShapeError("one-box-second-row needs s >= 1")
        return Partition((p["s"], 1))
    if family == "two-column-hook":
        if p["r"] < 1:
            raise ShapeError("two-column-hook needs r >= 1")
        return Partition((2,) + (1,) * (p["r"] - 1))
    if family == "hook":
        if p["s"] < 2 or p["r"] < 1:
            raise ShapeError("hook needs s >= 2 and r >= 1")
        return Partition((p["s"],) + (1,) * (p["r"] - 1))
    s, t = p["s"], p["t"]
    if not 0 <= t <= s or s < 1:
        raise ShapeError("two-row needs 0 <= t <= s and s >= 1")
    return Partition((s, t) if t else (s,))


def closed_form(family: str, **params) -> BettiPolynomial:
    """Hand-derived formulas for special shapes, used as test references.

    ``hook`` is ``(s, 1^(r-1))``, ``two-row`` is ``(s, t)``.
    """
    family_shape(family, **params)
    if family == "single-row":
        return ONE
    if family == "column":
        return q_factorial(params["n"])
    if family == "one-box-second-row":
        return BettiPolynomial((params["s"], 1))
    if family == "two-column-hook":
        r = params["r"]
        return q_factorial(r - 1) * BettiPolynomial(r - p for p in range(r))
    if family == "hook":
        s, r = params["s"], params["r"]
        inner = total(comb(s + p - 2, p) * q_int(r - p) for p in range(r))
        return q_factorial(r - 1) * inner
    s, t = params["s"], params["t"]
    two = q_int(2)
    coeffs = [Fraction(c) for c in (two ** t).coeffs]
    for p in range(1, t + 1):
        scale = Fraction(comb(s + p - 1, p - 1) * (s - p), p)
        for m, c in enumerate((two ** (t - p)).coeffs):
            coeffs[m] += scale * c
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError(f"two-row formula is not integral at s={s}, t={t}: {coeffs}")
    return BettiPolynomial(int(c) for c in coeffs)
