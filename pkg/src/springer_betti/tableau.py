"""Row-standard and standard tableaux, the inversion statistic and dominance order.

Entries are ``1..n``. Row and column indices exposed by this module are
0-based; the text format is rows joined by ``/`` with entries joined by ``,``
(``"2,4,8/3,6,7/1,5"``).
"""

from __future__ import annotations

import os
from typing import Iterator, Sequence

from .errors import CapExceededError, ParseError, ShapeError, TableauError
from .partitions import Partition, as_partition, conjugate, hook_count, multinomial

DEFAULT_CAP = 10**6
CAP_ENV_VAR = "SPRINGER_BETTI_CAP"


def default_cap() -> int:
    value = os.environ.get(CAP_ENV_VAR)
    if value is None:
        return DEFAULT_CAP
    try:
        cap = int(value)
    except ValueError:
        raise ParseError(f"{CAP_ENV_VAR} must be an integer, got {value!r}") from None
    if cap < 1:
        raise ParseError(f"{CAP_ENV_VAR} must be >= 1, got {cap}")
    return cap


class Tableau:
    """A row-standard tableau: each of ``1..n`` once, rows strictly increasing."""

    __slots__ = ("rows", "_pos")

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if any(len(row) == 0 for row in rows):
            raise TableauError(f"empty row in tableau {rows}")
        lengths = [len(row) for row in rows]
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise ShapeError(f"row lengths {lengths} are not weakly decreasing")
        n = sum(lengths)
        pos = {}
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if c and row[c - 1] >= x:
                    raise TableauError(f"row {r + 1} of {format_tableau_rows(rows)} is not increasing")
                pos[x] = (r, c)
        if sorted(pos) != list(range(1, n + 1)) or len(pos) != n:
            raise TableauError(f"entries of {format_tableau_rows(rows)} are not exactly 1..{n}")
        self.rows = rows
        self._pos = pos

    @classmethod
    def _unchecked(cls, rows: tuple[tuple[int, ...], ...]) -> "Tableau":
        # caller guarantees row-standardness
        t = cls.__new__(cls)
        t.rows = rows
        t._pos = {x: (r, c) for r, row in enumerate(rows) for c, x in enumerate(row)}
        return t

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def n(self) -> int:
        return len(self._pos)

    def position(self, entry: int) -> tuple[int, int]:
        return self._pos[entry]

    def at(self, row: int, col: int) -> int | None:
        if 0 <= row < len(self.rows) and 0 <= col < len(self.rows[row]):
            return self.rows[row][col]
        return None

    def right_of(self, entry: int) -> int | None:
        r, c = self._pos[entry]
        return self.at(r, c + 1)

    def above(self, entry: int) -> int | None:
        r, c = self._pos[entry]
        return self.at(r - 1, c) if r else None

    def below(self, entry: int) -> int | None:
        r, c = self._pos[entry]
        return self.at(r + 1, c)

    def columns(self) -> list[tuple[int, ...]]:
        ncols = len(self.rows[0]) if self.rows else 0
        return [
            tuple(row[c] for row in self.rows if c < len(row)) for c in range(ncols)
        ]

    def word(self) -> tuple[int, ...]:
        """``w_k`` = 0-based row holding entry ``k``."""
        return tuple(self._pos[k][0] for k in range(1, self.n + 1))

    def is_standard(self) -> bool:
        return all(
            all(a < b for a, b in zip(col, col[1:])) for col in self.columns()
        )

    def __eq__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __lt__(self, other: Tableau) -> bool:
        return (self.shape, self.word()) < (other.shape, other.word())

    def __str__(self) -> str:
        return format_tableau_rows(self.rows)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class StandardTableau(Tableau):
    """Row-standard tableau whose columns also increase downward."""

    __slots__ = ()

    def __init__(self, rows: Sequence[Sequence[int]]):
        super().__init__(rows)
        if not self.is_standard():
            raise TableauError(f"{self} has a column that does not increase downward")

    def prefix_shape(self, i: int) -> Partition:
        """Shape of the subtableau of entries ``1..i`` (the diagram Y_i(T))."""
        return Partition(tuple(
            k for k in (sum(1 for x in row if x <= i) for row in self.rows) if k
        ))

    def prefix_shapes(self) -> list[Partition]:
        return [self.prefix_shape(i) for i in range(self.n + 1)]


def as_standard(t: Tableau) -> StandardTableau:
    if isinstance(t, StandardTableau):
        return t
    return StandardTableau(t.rows)


def format_tableau_rows(rows) -> str:
    return "/".join(",".join(str(x) for x in row) for row in rows)


def parse_tableau(text: str) -> Tableau:
    """Parse ``"2,4,8/3,6,7/1,5"``.

    Rows without commas are read digit by digit (``"248/367/15"``), which is
    only accepted when every entry is a single digit.
    """
    text = text.strip()
    if not text:
        return Tableau(())
    rows = []
    has_comma = "," in text
    for chunk in text.split("/"):
        chunk = chunk.strip()
        try:
            if has_comma:
                rows.append([int(tok) for tok in chunk.split(",")])
            else:
                rows.append([int(ch) for ch in chunk])
        except ValueError:
            raise ParseError(f"cannot parse tableau {text!r}") from None
    if not has_comma and sum(len(r) for r in rows) > 9:
        raise ParseError(f"digit shorthand {text!r} is ambiguous for n > 9; use commas")
    return Tableau(rows)


def parse_standard(text: str) -> StandardTableau:
    return as_standard(parse_tableau(text))


def from_word(shape, word: Sequence[int], standard: bool = False) -> Tableau:
    """Tableau with entry ``k`` in row ``word[k-1]`` (0-based rows)."""
    shape = as_partition(shape)
    rows: list[list[int]] = [[] for _ in range(shape.r)]
    for k, r in enumerate(word, start=1):
        rows[r].append(k)
    if tuple(len(row) for row in rows) != shape.parts:
        raise ShapeError(f"word {tuple(word)} does not fill shape {shape.parts}")
    return (StandardTableau if standard else Tableau)(rows)


def from_chain(chain: Sequence[Partition]) -> StandardTableau:
    """Standard tableau with ``k`` in the box ``chain[k] minus chain[k-1]``."""
    if not chain or chain[0].n != 0:
        raise ShapeError("chain must start at the empty partition")
    word = []
    for k in range(1, len(chain)):
        prev, cur = chain[k - 1].parts, chain[k].parts
        prev = prev + (0,) * (len(cur) - len(prev))
        diff = [r for r in range(len(cur)) if cur[r] != prev[r]]
        if len(prev) != len(cur) or len(diff) != 1 or cur[diff[0]] != prev[diff[0]] + 1:
            raise ShapeError(f"{chain[k - 1].parts} -> {chain[k].parts} is not a one-box step")
        word.append(diff[0])
    return from_word(chain[-1], word, standard=True)


# -- inversion statistic ------------------------------------------------------

def is_inversion(t: Tableau, a: int, b: int) -> bool:
    """Whether ``(min(a,b), max(a,b))`` is an inversion of ``t``."""
    if a > b:
        a, b = b, a
    ra, ca = t.position(a)
    rb, cb = t.position(b)
    if a == b or ca != cb:
        return False
    a_right = t.right_of(a)
    b_right = t.right_of(b)
    if a_right is None or b_right is None:
        return ra > rb
    return a_right > b_right


def inversions(t: Tableau) -> set[tuple[int, int]]:
    out = set()
    for col in t.columns():
        entries = sorted(col)
        for x, a in enumerate(entries):
            for b in entries[x + 1:]:
                if is_inversion(t, a, b):
                    out.add((a, b))
    return out


def n_inv(t: Tableau) -> int:
    return len(inversions(t))


def standardize(t: Tableau) -> StandardTableau:
    """Sort each column increasing downward."""
    rows = [list(row) for row in t.rows]
    for c, col in enumerate(t.columns()):
        for r, x in enumerate(sorted(col)):
            rows[r][c] = x
    return StandardTableau(rows)


def prefix_composition_chain(t: Tableau) -> list[tuple[int, ...]]:
    """``pi^(i)_p`` = number of entries ``<= i`` in row ``p``, for ``i = 0..n``."""
    counts = [0] * len(t.rows)
    chain = [tuple(counts)]
    for k in range(1, t.n + 1):
        counts[t.position(k)[0]] += 1
        chain.append(tuple(counts))
    return chain


# -- enumeration --------------------------------------------------------------

def check_cap(count: int, cap: int | None) -> None:
    cap = default_cap() if cap is None else cap
    if count > cap:
        raise CapExceededError(count, cap)


def count_row_standard(shape) -> int:
    return multinomial(shape)


def row_words(shape) -> Iterator[list[int]]:
    """All words with ``parts[p]`` copies of ``p``, in lexicographic order."""
    shape = as_partition(shape)
    word = [r for r, length in enumerate(shape.parts) for _ in range(length)]
    n = len(word)
    while True:
        yield list(word)
        k = n - 2
        while k >= 0 and word[k] >= word[k + 1]:
            k -= 1
        if k < 0:
            return
        m = n - 1
        while word[m] <= word[k]:
            m -= 1
        word[k], word[m] = word[m], word[k]
        word[k + 1:] = reversed(word[k + 1:])


def enumerate_row_standard(shape, cap: int | None = None) -> Iterator[Tableau]:
    """Every row-standard tableau of ``shape``, lexicographic on the row word."""
    shape = as_partition(shape)
    check_cap(multinomial(shape), cap)
    for word in row_words(shape):
        yield from_word(shape, word)


def enumerate_standard(shape, cap: int | None = None) -> Iterator[StandardTableau]:
    """Every standard tableau of ``shape``, lexicographic on the row word."""
    shape = as_partition(shape)
    check_cap(hook_count(shape), cap)
    parts = shape.parts
    n = shape.n
    counts = [0] * len(parts)
    word: list[int] = []

    def extend():
        if len(word) == n:
            yield from_word(shape, word, standard=True)
            return
        for r in range(len(parts)):
            if counts[r] < parts[r] and (r == 0 or counts[r - 1] > counts[r]):
                counts[r] += 1
                word.append(r)
                yield from extend()
                word.pop()
                counts[r] -= 1

    yield from extend()


# -- dominance order ------------------------------------------------------------

def _column_prefix_counts(T: StandardTableau) -> list[list[int]]:
    ncols = T.shape.parts[0] if T.n else 0
    table = []
    for i in range(1, T.n + 1):
        lam = T.prefix_shape(i).parts
        table.append([sum(min(x, q) for x in lam) for q in range(1, ncols + 1)])
    return table


def dominance_leq(S: StandardTableau, T: StandardTableau) -> bool:
    """``S <= T``: every prefix of ``S`` has at least as many boxes in its
    first ``q`` columns as the matching prefix of ``T``."""
    if S.shape != T.shape:
        raise ShapeError(f"shapes differ: {S.shape.parts} vs {T.shape.parts}")
    cs, ct = _column_prefix_counts(S), _column_prefix_counts(T)
    return all(a >= b for rs, rt in zip(cs, ct) for a, b in zip(rs, rt))


def t_min(shape) -> StandardTableau:
    """Fill columns left to right with consecutive integers."""
    shape = as_partition(shape)
    rows: list[list[int]] = [[] for _ in range(shape.r)]
    k = 1
    for length in conjugate(shape).parts:
        for r in range(length):
            rows[r].append(k)
            k += 1
    return StandardTableau(rows)
