from itertools import combinations, permutations

import pytest
from hypothesis import given

from conftest import row_standard_tableaux
from springer_betti.errors import CapExceededError, ParseError, ShapeError, TableauError
from springer_betti.partitions import Partition, hook_count, multinomial, partitions_of
from springer_betti.tableau import (
    StandardTableau,
    Tableau,
    dominance_leq,
    enumerate_row_standard,
    enumerate_standard,
    from_chain,
    inversions,
    n_inv,
    parse_standard,
    parse_tableau,
    prefix_composition_chain,
    standardize,
    t_min,
)


def brute_row_standard(parts):
    """Every filling with increasing rows, found by filtering all permutations."""
    n = sum(parts)
    out = set()
    for perm in permutations(range(1, n + 1)):
        rows, k = [], 0
        for length in parts:
            rows.append(perm[k:k + length])
            k += length
        if all(list(r) == sorted(r) for r in rows):
            out.add(tuple(rows))
    return out


def permutation_inversions(word):
    return {(min(a, b), max(a, b)) for x, a in enumerate(word) for b in word[x + 1:] if a > b}


def test_parse_and_format():
    t = parse_tableau("2,4,8/3,6,7/1,5")
    assert t.rows == ((2, 4, 8), (3, 6, 7), (1, 5))
    assert str(t) == "2,4,8/3,6,7/1,5"
    assert parse_tableau("248/367/15") == t
    assert parse_tableau("10,11/1,2/3,4/5,6/7,8/9").n == 11
    with pytest.raises(ParseError):
        parse_tableau("1,x/2")
    with pytest.raises(TableauError):
        parse_tableau("2,1/3")
    with pytest.raises(TableauError):
        parse_tableau("1,2/2")
    with pytest.raises(ShapeError):
        parse_tableau("1/2,3")
    with pytest.raises(TableauError):
        StandardTableau([[2, 3], [1]])


def test_paper_example_inversions():
    t = parse_tableau("2,4,8/3,6,7/1,5")
    assert inversions(t) == {(1, 2), (4, 6), (5, 6), (7, 8)}
    assert n_inv(t) == 4


def test_single_column_example():
    assert inversions(parse_tableau("3/1/2")) == {(1, 3), (2, 3)}


@pytest.mark.parametrize("n", range(1, 7))
def test_single_column_matches_permutation_inversions(n):
    for perm in permutations(range(1, n + 1)):
        t = Tableau([[x] for x in perm])
        assert inversions(t) == permutation_inversions(perm)


@pytest.mark.parametrize("shape", [p for n in range(7) for p in partitions_of(n)], ids=str)
def test_zero_inversions_iff_standard(shape):
    for t in enumerate_row_standard(shape):
        assert (n_inv(t) == 0) == t.is_standard()


def test_standardize_examples():
    assert standardize(parse_tableau("3,4/1,2/5")) == parse_tableau("1,2/3,4/5")
    assert standardize(parse_tableau("2,4,8/3,6,7/1,5")) == parse_tableau("1,4,7/2,5,8/3,6")
    T = parse_standard("1,3/2,5/4")
    assert standardize(T) == T


@given(row_standard_tableaux(max_n=9))
def test_standardize_properties(t):
    s = standardize(t)
    assert s.is_standard()
    assert standardize(s) == s
    assert [sorted(c) for c in s.columns()] == [sorted(c) for c in t.columns()]


def test_prefix_composition_chain():
    chain = prefix_composition_chain(parse_tableau("1,2/3"))
    assert chain[0] == (0, 0)
    assert chain[2] == (2, 0)
    assert chain[-1] == (2, 1)
    T = parse_standard("1,2/3,4/5")
    for pi in prefix_composition_chain(T):
        assert list(pi) == sorted(pi, reverse=True)
    assert [p.parts for p in T.prefix_shapes()] == [(), (1,), (2,), (2, 1), (2, 2), (2, 2, 1)]


@given(row_standard_tableaux(max_n=9))
def test_prefix_chain_steps_by_one_box(t):
    chain = prefix_composition_chain(t)
    assert chain[-1] == t.shape.parts
    for a, b in zip(chain, chain[1:]):
        diffs = [y - x for x, y in zip(a, b)]
        assert sorted(diffs) == [0] * (len(diffs) - 1) + [1]
    # standard exactly when every prefix composition is already a partition
    assert t.is_standard() == all(list(pi) == sorted(pi, reverse=True) for pi in chain)


def test_enumerate_row_standard_examples():
    assert [str(t) for t in enumerate_row_standard((2, 1))] == ["1,2/3", "1,3/2", "2,3/1"]
    assert len(list(enumerate_row_standard((5,)))) == 1
    assert len(list(enumerate_row_standard((2, 2, 1)))) == 30
    assert list(enumerate_row_standard(())) == [Tableau(())]


@pytest.mark.parametrize("shape", [p for n in range(7) for p in partitions_of(n)], ids=str)
def test_enumeration_matches_brute_force(shape):
    listed = [t.rows for t in enumerate_row_standard(shape)]
    assert len(listed) == multinomial(shape)
    assert set(listed) == brute_row_standard(shape.parts)
    words = [Tableau(rows).word() for rows in listed]
    assert words == sorted(words)
    standard = [t.rows for t in enumerate_standard(shape)]
    assert standard == [r for r in listed if Tableau(r).is_standard()]
    assert len(standard) == hook_count(shape)


def test_enumerate_standard_examples():
    assert len(list(enumerate_standard((2, 2, 1)))) == 5
    assert len(list(enumerate_standard((1,) * 5))) == 1
    assert [str(t) for t in enumerate_standard((2, 2))] == ["1,2/3,4", "1,3/2,4"]


def test_cap():
    with pytest.raises(CapExceededError):
        list(enumerate_row_standard((2, 2, 1), cap=29))
    assert len(list(enumerate_row_standard((2, 2, 1), cap=30))) == 30


def test_cap_env(monkeypatch):
    monkeypatch.setenv("SPRINGER_BETTI_CAP", "5")
    with pytest.raises(CapExceededError):
        list(enumerate_row_standard((2, 2)))


def test_t_min():
    assert t_min((3, 2, 2)) == parse_tableau("1,4,7/2,5/3,6")
    assert t_min((4,)) == parse_tableau("1,2,3,4")
    assert t_min((2, 2, 1)) == parse_tableau("1,4/2,5/3")


def test_dominance_example():
    a, b = parse_standard("1,3/2,4"), parse_standard("1,2/3,4")
    assert dominance_leq(a, b)
    assert not dominance_leq(b, a)
    assert dominance_leq(a, a)
    with pytest.raises(ShapeError):
        dominance_leq(a, parse_standard("1,2,3"))


@pytest.mark.parametrize("shape", [p for n in range(7) for p in partitions_of(n)], ids=str)
def test_dominance_is_partial_order_with_minimum(shape):
    stds = list(enumerate_standard(shape))
    leq = {(i, j): dominance_leq(a, b) for i, a in enumerate(stds) for j, b in enumerate(stds)}
    m = len(stds)
    for i in range(m):
        assert leq[i, i]
    for i, j in combinations(range(m), 2):
        assert not (leq[i, j] and leq[j, i])
    for i in range(m):
        for j in range(m):
            if leq[i, j]:
                assert all(leq[i, k] for k in range(m) if leq[j, k])
    minima = [a for i, a in enumerate(stds) if all(leq[i, j] for j in range(m))]
    assert minima == [t_min(shape)]


def test_from_chain_round_trip():
    for T in enumerate_standard((3, 2, 1)):
        assert from_chain(T.prefix_shapes()) == T
    with pytest.raises(ShapeError):
        from_chain([Partition(()), Partition((2,))])


def test_tableau_hash_and_equality_across_types():
    T = parse_standard("1,2/3")
    t = Tableau([[1, 2], [3]])
    assert T == t and hash(T) == hash(t)
    assert len({T, t}) == 1
