"""Integer partitions: Jordan types, diagram shapes and their column lengths."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import ParseError, ShapeError


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts.

    Rows of a Young diagram, top to bottom. The empty partition is valid.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ShapeError(f"partition parts must be positive integers, got {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ShapeError(f"partition parts must be weakly decreasing, got {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __str__(self) -> str:
        return format_partition(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def rows_of_length(self, q: int) -> int:
        """Number of rows of length exactly ``q`` (mu'_q)."""
        return sum(1 for p in self.parts if p == q)

    def cells(self) -> list[tuple[int, int]]:
        """0-based (row, column) cells in row-major order."""
        return [(r, c) for r, length in enumerate(self.parts) for c in range(length)]

    def contains(self, other: Partition) -> bool:
        """True if the diagram of ``other`` sits inside this one."""
        if other.r > self.r:
            return False
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def corners(self) -> list[tuple[int, int]]:
        """0-based cells with no neighbour to the right or below."""
        out = []
        for r, length in enumerate(self.parts):
            below = self.parts[r + 1] if r + 1 < self.r else 0
            if length > below:
                out.append((r, length - 1))
        return out

    def remove_cell(self, row: int) -> Partition:
        parts = list(self.parts)
        parts[row] -= 1
        if parts[row] == 0:
            parts.pop(row)
        return Partition(tuple(parts))


def as_partition(shape) -> Partition:
    if isinstance(shape, Partition):
        return shape
    if isinstance(shape, str):
        return parse_partition(shape)
    return Partition(tuple(shape))


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,2"``; an empty string or ``"0"`` is the empty partition."""
    text = text.strip()
    if text in ("", "0", "()"):
        return Partition(())
    try:
        parts = tuple(int(tok) for tok in text.strip("()").split(","))
    except ValueError:
        raise ParseError(f"cannot parse partition {text!r}") from None
    return Partition(parts)


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p.parts)


def conjugate(p) -> Partition:
    """Column lengths of the diagram: ``mu_q = #{rows with length >= q}``."""
    parts = as_partition(p).parts
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for x in parts if x >= q) for q in range(1, parts[0] + 1)))


def springer_dimension(p) -> int:
    """Dimension of the Springer fiber of Jordan type ``p``."""
    return sum(m * (m - 1) // 2 for m in conjugate(p).parts)


def multinomial(p) -> int:
    """``n! / prod(lambda_p!)``: the number of row-standard tableaux."""
    parts = as_partition(p).parts
    return factorial(sum(parts)) // prod(factorial(x) for x in parts)


def hook_count(p) -> int:
    """Number of standard tableaux, by the hook length formula."""
    p = as_partition(p)
    conj = p.conjugate().parts
    hooks = prod(
        (p.parts[r] - c - 1) + (conj[c] - r - 1) + 1 for r, c in p.cells()
    )
    return factorial(p.n) // hooks


@cache
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ShapeError(f"n must be nonnegative, got {n}")
    return [Partition(parts) for parts in _partitions(n, n)]


def all_partitions(n_max: int) -> Iterable[Partition]:
    for n in range(n_max + 1):
        yield from partitions_of(n)
