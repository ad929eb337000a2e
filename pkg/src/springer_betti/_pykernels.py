"""Pure-Python inversion kernels; the reference the compiled ones must match."""

from __future__ import annotations


def word_inversions(parts, word) -> int:
    """Inversion count of the tableau with entry ``k`` in row ``word[k-1]``."""
    rows = [[] for _ in parts]
    for k, r in enumerate(word, start=1):
        rows[r].append(k)
    return _count(parts, rows)


def _count(parts, rows) -> int:
    count = 0
    r_max = len(parts)
    for c in range(parts[0] if parts else 0):
        col = []
        for r in range(r_max):
            if parts[r] <= c:
                break
            row = rows[r]
            col.append((row[c], r, row[c + 1] if c + 1 < parts[r] else 0))
        m = len(col)
        for x in range(m):
            ex, rx, nx = col[x]
            for y in range(x + 1, m):
                ey, ry, ny = col[y]
                if ex > ey:
                    lo_r, hi_r, lo_n, hi_n = ry, rx, ny, nx
                else:
                    lo_r, hi_r, lo_n, hi_n = rx, ry, nx, ny
                if lo_n == 0 or hi_n == 0:
                    if lo_r > hi_r:
                        count += 1
                elif lo_n > hi_n:
                    count += 1
    return count


def inversion_histogram(parts, dim: int) -> list[int]:
    """``hist[m]`` = number of row-standard tableaux of ``parts`` with ``m`` inversions."""
    parts = tuple(parts)
    hist = [0] * (dim + 1)
    word = [r for r, length in enumerate(parts) for _ in range(length)]
    n = len(word)
    while True:
        hist[word_inversions(parts, word)] += 1
        k = n - 2
        while k >= 0 and word[k] >= word[k + 1]:
            k -= 1
        if k < 0:
            return hist
        m = n - 1
        while word[m] <= word[k]:
            m -= 1
        word[k], word[m] = word[m], word[k]
        word[k + 1:] = reversed(word[k + 1:])
