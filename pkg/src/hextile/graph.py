"""Multigraph carrier and the generic algorithms the rest of the package uses.

Vertices are dense integers ``0..n-1``. Edges keep their input order, so an
edge id is simply its position in ``Graph.edges``. Loops and parallel edges
are allowed; simplicity is checked explicitly where it matters.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, parse errors)."""


class Graph:
    """Finite undirected multigraph with stable integer vertex ids."""

    __slots__ = ("n", "edges", "adj", "_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self._cache: dict = {}
        self.edges: tuple[tuple[int, int], ...] = tuple(
            (int(u), int(v)) for u, v in edges
        )
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(
                    f"edge {eid} ({u}, {v}) has an endpoint outside [0, {n})"
                )
            adj[u].append((v, eid))
            if u != v:
                adj[v].append((u, eid))
            else:
                adj[u].append((u, eid))
        self.adj: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(a) for a in adj
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adj[v]]

    def neighbor_sets(self) -> list[set[int]]:
        return [{w for w, _ in a if w != v} for v, a in enumerate(self.adj)]

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if a == v else a

    def edge_between(self, u: int, v: int) -> int | None:
        """Id of the first edge joining ``u`` and ``v``, or None."""
        for w, eid in self.adj[u]:
            if w == v:
                return eid
        return None

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            if u == v:
                return False
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_regular(self, d: int) -> bool:
        return all(len(a) == d for a in self.adj)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(bfs_distances(self, 0)) == self.n

    def edge_multiset(self) -> list[tuple[int, int]]:
        return sorted((u, v) if u <= v else (v, u) for u, v in self.edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Copy with vertex ``v`` renamed to ``perm[v]``; edge order kept."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def check_adjacency(self) -> bool:
        """Rebuild the incidence index and compare with the stored one."""
        return Graph(self.n, self.edges).adj == self.adj


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


@dataclass(frozen=True)
class Cycle:
    """A simple cycle: cyclic vertex sequence plus the edge ids between them.

    ``edges[i]`` joins ``vertices[i]`` and ``vertices[i + 1]`` (cyclically).
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def is_valid(self, g: Graph) -> bool:
        k = len(self.vertices)
        if k == 0 or k != len(self.edges) or len(set(self.vertices)) != k:
            return False
        for i, eid in enumerate(self.edges):
            u, v = self.vertices[i], self.vertices[(i + 1) % k]
            a, b = g.edges[eid]
            if {a, b} != {u, v} or (k > 2 and u == v):
                return False
        return len(set(self.edges)) == k or k == 1


def cycle_from_vertices(g: Graph, verts: Sequence[int]) -> Cycle:
    """Build a Cycle from a vertex sequence, resolving the connecting edges."""
    k = len(verts)
    eids = []
    for i in range(k):
        eid = g.edge_between(verts[i], verts[(i + 1) % k])
        if eid is None:
            raise GraphError(f"{verts[i]} and {verts[(i + 1) % k]} are not adjacent")
        eids.append(eid)
    return Cycle(tuple(verts), tuple(eids))


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w, _ in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = sorted(bfs_distances(g, s))
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def girth(g: Graph) -> float:
    """Length of a shortest cycle; loops count 1, parallel pairs 2; inf if none."""
    best = math.inf
    pairs = set()
    for u, v in g.edges:
        if u == v:
            return 1
        key = (u, v) if u < v else (v, u)
        if key in pairs:
            best = 2
        pairs.add(key)
    if best == 2:
        return 2
    # simple graph: BFS from every vertex, shortest cycle through a non-tree edge
    for s in range(g.n):
        dist = {s: 0}
        parent_edge = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w, eid in g.adj[u]:
                if eid == parent_edge[u]:
                    continue
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent_edge[w] = eid
                    queue.append(w)
                else:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w, _ in g.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def _colorable(nbrs: list[set[int]], k: int) -> bool:
    # DSATUR-ordered backtracking
    n = len(nbrs)
    color = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] < 0:
                kv = (len(sat[v]), len(nbrs[v]), -v)
                if key is None or kv > key:
                    best, key = v, kv
        return best

    def solve(left: int) -> bool:
        if left == 0:
            return True
        v = pick()
        for c in range(k):
            if c in sat[v]:
                continue
            if c > max(color) + 1:
                break
            color[v] = c
            touched = [w for w in nbrs[v] if color[w] < 0 and c not in sat[w]]
            for w in touched:
                sat[w].add(c)
            if solve(left - 1):
                return True
            for w in touched:
                sat[w].discard(c)
            color[v] = -1
        return False

    return solve(n)


def _greedy_towards(nbrs: list[set[int]], root: int, pre: dict[int, int], k: int) -> list[int] | None:
    """Greedy colouring by decreasing BFS distance from ``root`` (root last).

    Every vertex but the root still has its BFS parent uncoloured when its
    turn comes, so at most k - 1 colours are blocked for it.
    """
    n = len(nbrs)
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if w not in dist and w not in pre:
                dist[w] = dist[u] + 1
                queue.append(w)
    if len(dist) + len(pre) != n:
        return None
    color = [-1] * n
    for v, c in pre.items():
        color[v] = c
    for v in sorted(dist, key=lambda x: -dist[x]):
        used = {color[w] for w in nbrs[v]}
        free = [c for c in range(k) if c not in used]
        if not free:
            return None
        color[v] = free[0]
    return color


def _brooks_coloring(nbrs: list[set[int]]) -> list[int] | None:
    """A colouring with max-degree many colours via the constructive Brooks argument.

    Handles the non-regular case and the case of a vertex with two
    non-adjacent neighbours whose removal keeps the graph connected.
    Returns None when neither applies (caller falls back to search).
    """
    n = len(nbrs)
    k = max((len(a) for a in nbrs), default=0)
    if k == 0:
        return [0] * n
    low = [v for v in range(n) if len(nbrs[v]) < k]
    if low:
        return _greedy_towards(nbrs, low[0], {}, k)
    for x in range(n):
        ns = sorted(nbrs[x])
        for i in range(len(ns)):
            for j in range(i + 1, len(ns)):
                y, z = ns[i], ns[j]
                if z in nbrs[y]:
                    continue
                col = _greedy_towards(nbrs, x, {y: 0, z: 0}, k)
                if col is not None:
                    return col
    return None


def chromatic_number_small(g: Graph) -> int:
    """Exact chromatic number for simple graphs of maximum degree at most 3.

    1 if edgeless, 2 if bipartite, 3 if a 3-colouring exists, otherwise 4
    (Brooks: only K4 components reach 4 at max degree 3).
    """
    if g.m == 0:
        return 1
    if is_bipartite(g):
        return 2
    nbrs = g.neighbor_sets()
    for comp in connected_components(g):
        index = {v: i for i, v in enumerate(comp)}
        sub = [{index[w] for w in nbrs[v]} for v in comp]
        col = _brooks_coloring(sub) if max(len(a) for a in sub) <= 3 else None
        if col is not None and all(col[u] != col[w] for u in range(len(sub)) for w in sub[u]):
            continue
        if not _colorable(sub, 3):
            return 4
    return 3


def _canonical_cycle(verts: list[int]) -> tuple[int, ...]:
    i = verts.index(min(verts))
    rot = verts[i:] + verts[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def enumerate_cycles_upto(g: Graph, max_len: int) -> list[Cycle]:
    """All simple cycles of length at most ``max_len`` in a simple graph.

    Each cycle is reported once, rotated so its smallest vertex comes first and
    oriented towards the smaller of that vertex's two cycle neighbours. Output
    is sorted by (length, vertex tuple).
    """
    found: list[tuple[int, ...]] = []
    for s in range(g.n):
        # vertices below s are excluded; distances back to s in what remains
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if dist[u] * 2 >= max_len:
                continue
            for w, _ in g.adj[u]:
                if w > s and w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        path = [s]
        on_path = {s}

        def extend(u: int) -> None:
            depth = len(path)
            for w, _ in g.adj[u]:
                if w == s:
                    # close only once per orientation: second vertex < last
                    if depth >= 3 and path[1] < path[-1]:
                        found.append(tuple(path))
                    continue
                if w < s or w in on_path:
                    continue
                d = dist.get(w)
                if d is None or depth + d > max_len:
                    continue
                path.append(w)
                on_path.add(w)
                extend(w)
                on_path.discard(w)
                path.pop()

        extend(s)
    found.sort(key=lambda c: (len(c), c))
    return [cycle_from_vertices(g, list(c)) for c in found]


def contract_edges(g: Graph, edge_ids: Iterable[int]) -> tuple[Graph, list[int]]:
    """Identify the endpoints of every edge in ``edge_ids``.

    The contracted edges disappear; every other edge survives (possibly as a
    loop or a parallel copy). New vertex ids follow the order of each class's
    smallest old vertex. Returns the quotient and the old-to-new projection.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = set(edge_ids)
    for eid in chosen:
        u, v = g.edges[eid]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    new_id: dict[int, int] = {}
    proj = []
    for v in range(g.n):
        r = find(v)
        if r not in new_id:
            new_id[r] = len(new_id)
        proj.append(new_id[r])
    kept = [(proj[u], proj[v]) for eid, (u, v) in enumerate(g.edges) if eid not in chosen]
    return Graph(len(new_id), kept), proj


def simplify(g: Graph) -> Graph:
    """Drop loops and collapse each parallel class to its first edge."""
    seen = set()
    kept = []
    for u, v in g.edges:
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        kept.append((u, v))
    return Graph(g.n, kept)


# --- text format -----------------------------------------------------------

def format_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    """Serialise to the ``hexgraph <n> <m>`` text format."""
    lines = [f"hexgraph {g.n} {g.m}"]
    lines.extend(f"# {c}" for c in comments)
    for u, v in g.edges:
        a, b = (u, v) if u <= v else (v, u)
        lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the ``hexgraph`` text format; errors carry 1-based line numbers."""
    header = None
    edges = []
    expected = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "hexgraph":
                raise GraphError(f"line {lineno}: expected 'hexgraph <n> <m>', got {raw!r}")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer header field in {raw!r}") from None
            expected = header[1]
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected '<u> <v>', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer endpoint in {raw!r}") from None
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise GraphError(f"line {lineno}: endpoint out of range [0, {header[0]}) in {raw!r}")
        edges.append((u, v))
    if header is None:
        raise GraphError("line 1: missing 'hexgraph <n> <m>' header")
    if len(edges) != expected:
        raise GraphError(f"header announces {expected} edges, found {len(edges)}")
    return Graph(header[0], edges)
