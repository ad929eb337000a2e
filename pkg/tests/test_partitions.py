from math import factorial, prod

import pytest
from hypothesis import given

from conftest import partitions
from springer_betti.errors import ParseError, ShapeError
from springer_betti.partitions import (
    Partition,
    conjugate,
    hook_count,
    multinomial,
    parse_partition,
    partitions_of,
    springer_dimension,
)


def transpose_cells(parts):
    cells = {(r, c) for r, length in enumerate(parts) for c in range(length)}
    flipped = {(c, r) for r, c in cells}
    rows = {}
    for r, _ in flipped:
        rows[r] = rows.get(r, 0) + 1
    return tuple(rows[r] for r in sorted(rows))


@pytest.mark.parametrize("parts, expected", [
    ((3, 2, 2), (3, 3, 1)),
    ((), ()),
    ((1, 1, 1, 1, 1), (5,)),
])
def test_conjugate_examples(parts, expected):
    assert conjugate(Partition(parts)).parts == expected
    assert transpose_cells(parts) == expected


@given(partitions(max_n=12))
def test_conjugate_matches_cell_transpose_and_is_involutive(p):
    assert conjugate(p).parts == transpose_cells(p.parts)
    assert conjugate(conjugate(p)) == p


def test_springer_dimension():
    assert springer_dimension((2, 2, 1)) == 3 * 2 // 2 + 2 * 1 // 2 == 4
    for n in range(8):
        assert springer_dimension((n,) if n else ()) == 0
        assert springer_dimension((1,) * n) == n * (n - 1) // 2


def test_validation():
    with pytest.raises(ShapeError):
        Partition((1, 2))
    with pytest.raises(ShapeError):
        Partition((2, 0))
    with pytest.raises(ParseError):
        parse_partition("3,a")
    assert parse_partition("3,2,2") == Partition((3, 2, 2))
    assert parse_partition("") == Partition(())
    assert str(Partition((3, 2, 2))) == "3,2,2"


def test_partitions_of_counts_and_order():
    assert [len(partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@given(partitions(max_n=10))
def test_counts(p):
    assert multinomial(p) == factorial(p.n) // prod(factorial(x) for x in p.parts)
    assert 1 <= hook_count(p) <= multinomial(p)


def test_corners_and_removal():
    p = Partition((2, 2, 1))
    assert p.corners() == [(1, 1), (2, 0)]
    assert p.remove_cell(2) == Partition((2, 2))
    assert p.rows_of_length(2) == 2
