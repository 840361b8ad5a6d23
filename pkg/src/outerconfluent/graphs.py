"""Ordered graphs: vertices 0..n-1 in boundary order, adjacency as row bitsets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class OrderedGraph:
    """Undirected graph with the total vertex order 0 < 1 < ... < n-1.

    Row i of ``rows`` is an int bitset: bit j set iff i and j are adjacent.
    The matrix is symmetric with a zero diagonal.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError("row count does not match vertex count")
        for i, r in enumerate(self.rows):
            if r >> self.n:
                raise ValueError(f"row {i} has bits outside 0..{self.n - 1}")
            if (r >> i) & 1:
                raise ValueError(f"nonzero diagonal at {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.rows[i] >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise ValueError(f"asymmetric adjacency at ({i},{j})")

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    out.append((u, v))
                r >>= 1
                v += 1
        return out

    def n_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def induced(self, subset: Iterable[int]) -> "OrderedGraph":
        """Induced ordered subgraph; vertices relabeled to 0..|s|-1 in sorted order."""
        vs = sorted(set(subset))
        pos = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for v in vs:
            r = self.rows[v]
            acc = 0
            for w in vs:
                if (r >> w) & 1:
                    acc |= 1 << pos[w]
            rows[pos[v]] = acc
        return OrderedGraph(len(vs), tuple(rows))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> OrderedGraph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("loops not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return OrderedGraph(n, tuple(rows))


def empty_graph(n: int) -> OrderedGraph:
    return OrderedGraph(n, tuple([0] * n))


def complete_graph(n: int) -> OrderedGraph:
    full = (1 << n) - 1
    return OrderedGraph(n, tuple(full ^ (1 << i) for i in range(n)))


def path_graph(n: int) -> OrderedGraph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> OrderedGraph:
    edges = [(i, i + 1) for i in range(n - 1)]
    if n >= 3:
        edges.append((0, n - 1))
    return from_edges(n, edges)


def complete_bipartite(a: int, b: int) -> OrderedGraph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def parse_graph(text: str) -> OrderedGraph:
    """Parse the graph file format: ``graph N`` then ``edge u v`` lines."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "graph":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate graph header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ValueError(f"line {lineno}: bad graph header")
            n = int(parts[1])
        elif parts[0] == "edge":
            if n is None:
                raise ValueError(f"line {lineno}: edge before graph header")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: bad edge line")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ValueError(f"line {lineno}: bad edge endpoints") from None
            if not (0 <= u < v < n):
                raise ValueError(f"line {lineno}: edge ({u},{v}) out of range or not u < v")
            edges.append((u, v))
        else:
            raise ValueError(f"line {lineno}: unknown directive {parts[0]!r}")
    if n is None:
        raise ValueError("missing graph header")
    return from_edges(n, edges)


def serialize_graph(g: OrderedGraph) -> str:
    lines = [f"graph {g.n}"]
    lines.extend(f"edge {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def iter_subsets(n: int, size: int) -> Iterator[tuple[int, ...]]:
    from itertools import combinations

    return combinations(range(n), size)
