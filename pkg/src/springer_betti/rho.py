"""Subquotient chains (i_k, j_k), their duality, and jeu de taquin relabeling."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import ChainError, ParseError, RhoValidationError, ShapeError, TableauError
from .partitions import Partition, as_partition
from .tableau import StandardTableau, as_standard, enumerate_standard, from_chain


@dataclass(frozen=True)
class RhoSequence:
    pairs: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.pairs) - 1

    def __iter__(self):
        return iter(self.pairs)

    def __str__(self) -> str:
        return format_rho(self)


def validate_rho(pairs: Sequence[Sequence[int]]) -> RhoSequence:
    """Check every condition on ``(i_k, j_k)_{k=0..n}`` and report all failures."""
    pairs = tuple((int(a), int(b)) for a, b in pairs)
    if not pairs:
        raise RhoValidationError([(0, "sequence is empty")])
    n = len(pairs) - 1
    bad: list[tuple[int, str]] = []
    for k, (i, j) in enumerate(pairs):
        if j - i != k:
            bad.append((k, f"j_k - i_k = {j - i}, expected {k}"))
        if not 0 <= i <= j <= n:
            bad.append((k, f"need 0 <= i_k <= j_k <= {n}, got ({i}, {j})"))
        if k:
            pi, pj = pairs[k - 1]
            if i > pi:
                bad.append((k, f"i_k = {i} > i_(k-1) = {pi}; i must weakly decrease"))
            if j < pj:
                bad.append((k, f"j_k = {j} < j_(k-1) = {pj}; j must weakly increase"))
    if bad:
        raise RhoValidationError(bad)
    return RhoSequence(pairs)


def parse_rho(text: str) -> RhoSequence:
    """Parse ``"2-2;1-2;1-3;0-3"``."""
    pairs = []
    for tok in text.strip().split(";"):
        try:
            a, b = tok.strip().split("-")
            pairs.append((int(a), int(b)))
        except ValueError:
            raise ParseError(f"cannot parse rho pair {tok!r} in {text!r}") from None
    return validate_rho(pairs)


def format_rho(rho: RhoSequence) -> str:
    return ";".join(f"{i}-{j}" for i, j in rho.pairs)


def spaltenstein_chain(n: int) -> RhoSequence:
    """``(0, k)``: restrictions to the flag subspaces."""
    return RhoSequence(tuple((0, k) for k in range(n + 1)))


def dual_chain(n: int) -> RhoSequence:
    """``(n - k, n)``: quotients by the flag subspaces."""
    return RhoSequence(tuple((n - k, n) for k in range(n + 1)))


def rho_star(rho: RhoSequence) -> RhoSequence:
    n = rho.n
    return RhoSequence(tuple((n - j, n - i) for i, j in rho.pairs))


def enumerate_rho(n: int) -> Iterator[RhoSequence]:
    """Every sequence in R_n: pick a start ``(a, a)`` then grow left or right."""
    def grow(pairs):
        i, j = pairs[-1]
        if len(pairs) == n + 1:
            yield RhoSequence(tuple(pairs))
            return
        if i > 0:
            yield from grow(pairs + [(i - 1, j)])
        if j < n:
            yield from grow(pairs + [(i, j + 1)])

    for a in range(n + 1):
        yield from grow([(a, a)])


# -- jeu de taquin ---------------------------------------------------------------

@dataclass(frozen=True)
class SkewTableau:
    """Filling of ``outer / inner`` by distinct integers increasing along rows
    and down columns. ``cells`` maps 0-based ``(row, col)`` to the entry."""

    outer: Partition
    inner: Partition
    cells: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self):
        outer, inner = as_partition(self.outer), as_partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        cells = self.cells.items() if isinstance(self.cells, dict) else self.cells
        cells = tuple(sorted(((int(r), int(c)), int(v)) for (r, c), v in cells))
        object.__setattr__(self, "cells", cells)
        if not outer.contains(inner):
            raise ShapeError(f"inner {inner.parts} is not inside outer {outer.parts}")
        expected = {
            (r, c)
            for r, length in enumerate(outer.parts)
            for c in range(inner[r] if r < inner.r else 0, length)
        }
        grid = dict(cells)
        if set(grid) != expected:
            raise TableauError("cells do not match the skew shape")
        if len(set(grid.values())) != len(grid):
            raise TableauError("skew tableau entries must be distinct")
        for (r, c), v in grid.items():
            for nb in ((r, c + 1), (r + 1, c)):
                if nb in grid and grid[nb] <= v:
                    raise TableauError(f"entries must increase right and down at {(r, c)}")

    @property
    def size(self) -> int:
        return len(self.cells)


def skew_subtableau(T: StandardTableau, i: int, j: int) -> SkewTableau:
    """Entries ``i+1..j`` of ``T`` on the skew shape ``Y_j(T) / Y_i(T)``."""
    T = as_standard(T)
    if not 0 <= i <= j <= T.n:
        raise ValueError(f"need 0 <= i <= j <= {T.n}, got ({i}, {j})")
    cells = {
        (r, c): x
        for r, row in enumerate(T.rows)
        for c, x in enumerate(row)
        if i < x <= j
    }
    return SkewTableau(T.prefix_shape(j), T.prefix_shape(i), tuple(cells.items()))


CornerChooser = Callable[[list[tuple[int, int]]], tuple[int, int]]


def rectify(s: SkewTableau, choose: CornerChooser | None = None) -> tuple[tuple[int, ...], ...]:
    """Straight-shape rows obtained by inward slides until the inner shape is empty.

    ``choose`` picks the inner corner to slide into next; the default takes
    the lexicographically last one.
    """
    grid = dict(s.cells)
    inner = s.inner
    while inner.r:
        options = inner.corners()
        r, c = max(options) if choose is None else choose(options)
        if (r, c) not in options:
            raise ValueError(f"{(r, c)} is not an inner corner")
        inner = inner.remove_cell(r)
        hole = (r, c)
        while True:
            hr, hc = hole
            right, down = grid.get((hr, hc + 1)), grid.get((hr + 1, hc))
            if right is None and down is None:
                break
            src = (hr, hc + 1) if down is None or (right is not None and right < down) else (hr + 1, hc)
            grid[hole] = grid.pop(src)
            hole = src
    rows: dict[int, list[int]] = {}
    for (r, _), v in sorted(grid.items()):
        rows.setdefault(r, []).append(v)
    return tuple(tuple(rows[r]) for r in sorted(rows))


def jdt_rectify(s: SkewTableau, choose: CornerChooser | None = None) -> StandardTableau:
    """Rectification with entries replaced by their ranks ``1..size``."""
    rows = rectify(s, choose)
    rank = {v: k for k, v in enumerate(sorted(v for row in rows for v in row), start=1)}
    return StandardTableau([[rank[v] for v in row] for row in rows])


def relabel_chain(T: StandardTableau, rho: RhoSequence) -> list[Partition]:
    """Shapes of the rectified subtableaux ``T[i_k+1..j_k]`` for ``k = 0..n``."""
    T = as_standard(T)
    if rho.n != T.n:
        raise ValueError(f"rho has n={rho.n} but the tableau has n={T.n}")
    return [jdt_rectify(skew_subtableau(T, i, j)).shape for i, j in rho.pairs]


def relabel_component(T: StandardTableau, rho: RhoSequence) -> StandardTableau:
    """The standard tableau ``S`` whose prefix shapes are the rectified shapes."""
    chain = relabel_chain(T, rho)
    try:
        return from_chain(chain)
    except ShapeError as exc:
        raise ChainError(
            f"rectified shapes {[p.parts for p in chain]} of {T} under {rho} "
            f"do not form a one-box chain: {exc}"
        ) from exc


def relabel_table(shape, rho: RhoSequence) -> dict[str, str]:
    return {str(T): str(relabel_component(T, rho)) for T in enumerate_standard(as_partition(shape))}
