"""Elementary moves delta_i between row-standard tableaux and the graph they span."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import CapExceededError, NotApplicableError, SpringerError, TableauError
from .partitions import Partition, as_partition, multinomial
from .tableau import (
    StandardTableau,
    Tableau,
    default_cap,
    enumerate_row_standard,
    is_inversion,
    n_inv,
    standardize,
)


def _check_entry(t: Tableau, i: int) -> None:
    if not 1 <= i <= t.n:
        raise TableauError(f"entry {i} out of range 1..{t.n}")


def is_applicable(t: Tableau, i: int) -> bool:
    """Membership of ``t`` in D_i."""
    _check_entry(t, i)
    j = t.above(i)
    if j is None:
        return False
    i_right, j_right = t.right_of(i), t.right_of(j)
    if i_right is not None and not j < i_right:
        return False
    if j_right is not None and not i < j_right:
        return False
    lo, hi = min(i, j), max(i, j)
    col = t.position(i)[1]
    for k in (row[col] for row in t.rows if col < len(row)):
        if lo < k < hi and is_inversion(t, lo, k) == is_inversion(t, k, hi):
            return False
    return True


def delta(t: Tableau, i: int) -> Tableau:
    """Swap the row prefixes ending at ``i`` and at the entry ``j`` above it."""
    if not is_applicable(t, i):
        raise NotApplicableError(f"delta_{i} is not defined on {t}")
    return _swap_prefixes(t, i)


def _swap_prefixes(t: Tableau, i: int) -> Tableau:
    # only called once is_applicable(t, i) holds, which keeps rows increasing
    r, c = t.position(i)
    rows = list(t.rows)
    rows[r], rows[r - 1] = rows[r - 1][: c + 1] + rows[r][c + 1:], rows[r][: c + 1] + rows[r - 1][c + 1:]
    return Tableau._unchecked(tuple(rows))


def applicable_moves(t: Tableau) -> list[int]:
    return [i for i in range(1, t.n + 1) if is_applicable(t, i)]


@dataclass(frozen=True)
class MoveGraph:
    """All row-standard tableaux of a shape with an edge for every move.

    ``adjacency[v]`` lists ``(label, w)`` in increasing label order, where
    ``w = delta(vertices[v], label)``. ``edge_labels`` maps each unordered
    edge ``(v, w)`` with ``v < w`` to every entry realizing it in either
    direction.
    """

    shape: Partition
    vertices: tuple[Tableau, ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...]
    edge_labels: dict[tuple[int, int], frozenset[int]]
    index: dict[Tableau, int] = field(repr=False)

    @property
    def num_edges(self) -> int:
        return len(self.edge_labels)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by first vertex."""
        seen = [False] * len(self.vertices)
        out = []
        for start in range(len(self.vertices)):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for _, w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            out.append(sorted(comp))
        return out

    def distances_to_standard(self) -> list[int]:
        """Breadth-first distance from each vertex to the standard tableau of its component."""
        dist = [-1] * len(self.vertices)
        queue = deque()
        for v, t in enumerate(self.vertices):
            if t.is_standard():
                dist[v] = 0
                queue.append(v)
        while queue:
            v = queue.popleft()
            for _, w in self.adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def to_dot(self) -> str:
        """Graphviz source with one cluster per component."""
        lines = [f'graph "moves_{",".join(map(str, self.shape.parts))}" {{', "  node [shape=box];"]
        for cid, comp in enumerate(self.components()):
            lines.append(f"  subgraph cluster_{cid} {{")
            lines.append(f'    label="component {cid}";')
            for v in comp:
                t = self.vertices[v]
                lines.append(f'    v{v} [label="{t}\\nn_inv={n_inv(t)}"];')
            lines.append("  }")
        for (v, w), labels in sorted(self.edge_labels.items()):
            lines.append(f'  v{v} -- v{w} [label="{",".join(map(str, sorted(labels)))}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_move_graph(shape, cap: int | None = None) -> MoveGraph:
    shape = as_partition(shape)
    vertices = tuple(enumerate_row_standard(shape, cap=cap))
    index = {t: v for v, t in enumerate(vertices)}
    adjacency = []
    labels: dict[tuple[int, int], set[int]] = {}
    for v, t in enumerate(vertices):
        nbrs = []
        for i in applicable_moves(t):
            w = index[delta(t, i)]
            nbrs.append((i, w))
            labels.setdefault((min(v, w), max(v, w)), set()).add(i)
        adjacency.append(tuple(nbrs))
    return MoveGraph(
        shape=shape,
        vertices=vertices,
        adjacency=tuple(adjacency),
        edge_labels={e: frozenset(s) for e, s in labels.items()},
        index=index,
    )


def geodesic_path(t: Tableau, cap: int | None = None) -> list[int]:
    """Labels of a shortest move sequence from ``t`` to ``standardize(t)``.

    Neighbours are expanded in increasing label order, so the witness is
    reproducible.
    """
    cap = default_cap() if cap is None else cap
    count = multinomial(t.shape)
    if count > cap:
        raise CapExceededError(count, cap)
    target = standardize(t)
    parent: dict[Tableau, tuple[Tableau, int] | None] = {t: None}
    queue = deque([t])
    while target not in parent:
        if not queue:
            raise SpringerError(f"standardization of {t} is unreachable by moves")
        v = queue.popleft()
        for i in applicable_moves(v):
            w = _swap_prefixes(v, i)
            if w not in parent:
                parent[w] = (v, i)
                queue.append(w)
    v, path = target, []
    while parent[v] is not None:
        v, label = parent[v]
        path.append(label)
    return path[::-1]


def geodesic_to_standard(t: Tableau, cap: int | None = None) -> int:
    return len(geodesic_path(t, cap=cap))


def greedy_reduction(t: Tableau) -> list[int]:
    """Move sequence of length ``n_inv(t)`` reaching ``standardize(t)``.

    Each step moves the largest entry not yet at its standardized place by
    applying delta at the entry directly below it.
    """
    target: StandardTableau = standardize(t)
    seq = []
    while t != target:
        m = max(k for k in range(1, t.n + 1) if t.position(k) != target.position(k))
        i = t.below(m)
        if i is None or not is_applicable(t, i):
            raise SpringerError(f"no reducing move below {m} in {t}")
        t = delta(t, i)
        seq.append(i)
    return seq


def apply_moves(t: Tableau, labels) -> Tableau:
    for i in labels:
        t = delta(t, i)
    return t
