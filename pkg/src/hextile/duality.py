"""Geometric duals of hexagonal tilings, the locally C6 test, and the
reconstruction of a tiling from its dual through triangles."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph
from .grid_families import LocalCheck
from .surface import HexTiling


@dataclass(frozen=True)
class DualTiling:
    """Dual of a tiling: vertex c is cell c, dual edge e crosses primal edge e."""

    graph: Graph
    primal: HexTiling

    def primal_edge(self, dual_edge: int) -> int:
        return dual_edge

    def dual_edge(self, primal_edge: int) -> int:
        return primal_edge

    def multi_edges(self) -> list[tuple[int, int]]:
        """Cell pairs joined by more than one dual edge."""
        seen: dict[tuple[int, int], int] = {}
        for u, v in self.graph.edges:
            key = (min(u, v), max(u, v))
            seen[key] = seen.get(key, 0) + 1
        return sorted(k for k, c in seen.items() if c > 1)


def dual_tiling(t: HexTiling) -> DualTiling:
    """One vertex per cell, one dual edge per primal edge with the same id."""
    edges = []
    for e, cells in enumerate(t.cell_index):
        if len(cells) != 2:
            raise ValueError(f"edge {e} lies in {len(cells)} cells")
        edges.append((cells[0], cells[1]))
    return DualTiling(Graph(len(t.cells), edges), t)


def _is_induced_cycle(vs: list[int], nbrs: list[set[int]]) -> bool:
    inside = set(vs)
    local = {v: nbrs[v] & inside for v in vs}
    if any(len(s) != 2 for s in local.values()):
        return False
    # 2-regular: connected means a single cycle
    start = vs[0]
    seen = {start}
    stack = [start]
    while stack:
        for w in local[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def is_locally_c6(g: Graph) -> LocalCheck:
    """Connected, simple, 6-regular, each neighbourhood inducing a 6-cycle."""
    if g.n == 0 or not g.is_simple():
        return LocalCheck(False, None, "empty or not simple")
    for v in range(g.n):
        if g.degree(v) != 6:
            return LocalCheck(False, v, "not 6-regular")
    if not g.is_connected():
        return LocalCheck(False, None, "not connected")
    nbrs = g.neighbor_sets()
    for v in range(g.n):
        if not _is_induced_cycle(sorted(nbrs[v]), nbrs):
            return LocalCheck(False, v, "neighbourhood is not an induced 6-cycle")
    return LocalCheck(True)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    nbrs = g.neighbor_sets()
    out = []
    for u in range(g.n):
        for v, w in combinations(sorted(x for x in nbrs[u] if x > u), 2):
            if w in nbrs[v]:
                out.append((u, v, w))
    return out


def triangle_dual(g: Graph) -> Graph:
    """Triangles as vertices, joined when they share an edge of g.

    On a locally C6 graph every edge lies in exactly two triangles, so this
    gives back the cubic tiling it is the dual of.
    """
    tris = triangles(g)
    holders: dict[tuple[int, int], list[int]] = {}
    for tid, (a, b, c) in enumerate(tris):
        for e in ((a, b), (a, c), (b, c)):
            holders.setdefault(e, []).append(tid)
    edges = []
    for e in sorted(holders):
        h = holders[e]
        if len(h) != 2:
            raise ValueError(f"edge {e} lies in {len(h)} triangles, not 2")
        edges.append((h[0], h[1]))
    return Graph(len(tris), edges)
