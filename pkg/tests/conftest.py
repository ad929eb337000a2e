import random

import pytest
from hypothesis import strategies as st

from springer_betti.partitions import Partition
from springer_betti.tableau import Tableau

ACCEPTANCE_RESULTS: list[tuple[str, bool, float, str]] = []


@st.composite
def partitions(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    parts = []
    remaining = n
    while remaining:
        part = draw(st.integers(min_value=1, max_value=min(remaining, parts[-1] if parts else remaining)))
        parts.append(part)
        remaining -= part
    return Partition(tuple(parts))


@st.composite
def row_standard_tableaux(draw, max_n=7, min_n=0):
    shape = draw(partitions(max_n=max_n, min_n=min_n))
    values = draw(st.permutations(range(1, shape.n + 1)))
    rows, k = [], 0
    for length in shape.parts:
        rows.append(sorted(values[k:k + length]))
        k += length
    return Tableau(rows)


@pytest.fixture
def rng():
    return random.Random(20261017)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, elapsed, detail in ACCEPTANCE_RESULTS:
        status = "PASS" if ok else "FAIL"
        line = f"{status}  {name}  ({elapsed:.2f}s)"
        if detail:
            line += f"  {detail}"
        terminalreporter.write_line(line)
