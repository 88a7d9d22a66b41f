"""Hexagonal tilings as surface maps: certification, orientability, first
homology, essentiality of cycles and shortest essential cycles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Cycle, Graph, cycle_from_vertices, enumerate_cycles_upto, girth
from .snf import smith_normal_form


@dataclass(frozen=True)
class Rejection:
    """Why a graph is not a hexagonal tiling; ``witness`` names the culprit."""

    reason: str
    witness: tuple = ()

    def __str__(self) -> str:
        if self.witness:
            return f"{self.reason} (witness {self.witness})"
        return self.reason


class HexTiling:
    """A certified hexagonal tiling: the graph plus its cells.

    ``cell_index[e]`` lists the two cells containing edge ``e``.
    ``alternatives`` is the number of cell collections the certifier found
    (capped); above 1 the graph carries more than one tiling structure.
    """

    def __init__(self, graph: Graph, cells: list[Cycle], alternatives: int = 1):
        self.graph = graph
        self.cells = list(cells)
        self.alternatives = alternatives
        index: list[list[int]] = [[] for _ in range(graph.m)]
        for cid, cell in enumerate(self.cells):
            for eid in cell.edges:
                index[eid].append(cid)
        self.cell_index: tuple[tuple[int, ...], ...] = tuple(tuple(c) for c in index)
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"HexTiling(n={self.graph.n}, cells={len(self.cells)})"

    @property
    def n(self) -> int:
        return self.graph.n

    def dump_cells(self) -> str:
        return "\n".join(
            f"cell {cid}: " + " ".join(map(str, c.vertices)) for cid, c in enumerate(self.cells)
        )


def _two_paths(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for b in range(g.n):
        nb = sorted(g.neighbors(b))
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                out.append((nb[i], b, nb[j]))
    return out


def _exact_covers(hexagons: list[tuple[int, ...]], paths: list, limit: int) -> list[list[int]]:
    """Sub-collections of hexagons covering every 2-path exactly once."""
    covering: dict[tuple, set[int]] = {p: set() for p in paths}
    own: list[list[tuple]] = []
    for cid, vs in enumerate(hexagons):
        mine = []
        for i in range(6):
            a, b, c = vs[i - 1], vs[i], vs[(i + 1) % 6]
            key = (min(a, c), b, max(a, c))
            covering[key].add(cid)
            mine.append(key)
        own.append(mine)
    found: list[list[int]] = []

    def search(active: set[int], chosen: list[int], open_paths: set) -> None:
        if len(found) >= limit:
            return
        if not open_paths:
            found.append(sorted(chosen))
            return
        target = min(open_paths, key=lambda p: (len(covering[p] & active), p))
        for cid in sorted(covering[target] & active):
            clash = {c for p in own[cid] for c in covering[p]}
            search(active - clash, chosen + [cid], open_paths.difference(own[cid]))

    search(set(range(len(hexagons))), [], set(paths))
    return found


def _hint_cover(g: Graph, hint, hexagons: list[Cycle], paths: list) -> list[Cycle] | None:
    """The hinted hexagons, if they alone cover every 2-path exactly once."""
    by_set = {frozenset(c.vertices): c for c in hexagons}
    chosen = []
    for h in hint:
        c = by_set.get(frozenset(h))
        if c is None:
            return None
        chosen.append(c)
    if 2 * len(chosen) != g.n:
        return None
    seen = set()
    for c in chosen:
        vs = c.vertices
        for i in range(6):
            a, b = vs[i - 1], vs[(i + 1) % 6]
            key = (min(a, b), vs[i], max(a, b))
            if key in seen:
                return None
            seen.add(key)
    return chosen if len(seen) == len(paths) else None


def certify_tiling(
    g: Graph, hint: Iterable[Iterable[int]] = (), limit: int = 8
) -> HexTiling | Rejection:
    """Accept ``g`` as a hexagonal tiling or say which condition fails first.

    The cells are a sub-collection of the 6-cycles covering every 2-path
    exactly once. When several collections exist the one sharing most cycles
    with ``hint`` wins (ties: the first found); the count is kept on the
    result.
    """
    if g.n == 0:
        return Rejection("empty graph")
    if not g.is_simple():
        for u, v in g.edges:
            if u == v or sum(1 for w, _ in g.adj[u] if w == v) > 1:
                return Rejection("not simple", (u, v))
    for v in range(g.n):
        if g.degree(v) != 3:
            return Rejection("not cubic", (v, g.degree(v)))
    if not g.is_connected():
        return Rejection("not connected")
    gi = girth(g)
    if gi != 6:
        return Rejection(f"girth {gi}, expected 6")
    hexagons = enumerate_cycles_upto(g, 6)
    paths = _two_paths(g)
    counts: dict[tuple, int] = {p: 0 for p in paths}
    for cyc in hexagons:
        vs = cyc.vertices
        for i in range(6):
            a, c = vs[i - 1], vs[(i + 1) % 6]
            counts[(min(a, c), vs[i], max(a, c))] += 1
    for p in paths:
        if counts[p] == 0:
            return Rejection("2-path lies in no 6-cycle", p)
    if all(c == 1 for c in counts.values()):
        return HexTiling(g, hexagons)
    covers = _exact_covers([c.vertices for c in hexagons], paths, limit)
    hinted = _hint_cover(g, hint, hexagons, paths)
    if hinted is not None:
        return HexTiling(g, hinted, alternatives=max(len(covers), 1))
    if not covers:
        worst = next(p for p in paths if counts[p] > 1)
        return Rejection("no collection of 6-cycles covers every 2-path exactly once", worst)
    wanted = {frozenset(h) for h in hint}
    best = max(covers, key=lambda cov: sum(frozenset(hexagons[c].vertices) in wanted for c in cov))
    return HexTiling(g, [hexagons[c] for c in best], alternatives=len(covers))


# --- orientation --------------------------------------------------------------

@dataclass(frozen=True)
class Orientation:
    """Outcome of trying to orient every cell coherently.

    ``cell_signs[c]`` is +1 when cell ``c`` keeps its stored vertex order and
    -1 when reversed (only when orientable). ``edge_signs[e]`` is the local
    orientation transport along edge ``e``: a closed walk reverses orientation
    iff the product of its edge signs is -1. Tree edges of a BFS tree carry +1.
    When not orientable, ``witness`` lists cells whose flips close up
    inconsistently and ``reversing_cycle`` is an orientation-reversing cycle.
    """

    orientable: bool
    cell_signs: tuple[int, ...] | None
    edge_signs: tuple[int, ...]
    witness: tuple[int, ...] = ()
    reversing_cycle: Cycle | None = None


def _edge_direction(g: Graph, cell: Cycle, i: int) -> int:
    # +1 if the cell walks edge cell.edges[i] from its first to its second end
    return 1 if g.edges[cell.edges[i]][0] == cell.vertices[i] else -1


def _cell_orientation(t: HexTiling) -> tuple[tuple[int, ...] | None, tuple[int, ...]]:
    """BFS over cell adjacency; returns (signs, ()) or (None, conflict cells)."""
    g = t.graph
    dirs = [dict() for _ in t.cells]
    for cid, cell in enumerate(t.cells):
        for i, e in enumerate(cell.edges):
            dirs[cid][e] = _edge_direction(g, cell, i)
    sign = [0] * len(t.cells)
    parent = [-1] * len(t.cells)
    sign[0] = 1
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for e in t.cells[a].edges:
            for b in t.cell_index[e]:
                if b == a:
                    continue
                want = -sign[a] * dirs[a][e] * dirs[b][e]
                if sign[b] == 0:
                    sign[b] = want
                    parent[b] = a
                    queue.append(b)
                elif sign[b] != want:
                    return None, _cell_loop(parent, a, b)
    return tuple(sign), ()


def _cell_loop(parent: list[int], a: int, b: int) -> tuple[int, ...]:
    up_a, up_b = [a], [b]
    while parent[up_a[-1]] != -1:
        up_a.append(parent[up_a[-1]])
    while parent[up_b[-1]] != -1:
        up_b.append(parent[up_b[-1]])
    common = set(up_a) & set(up_b)
    while len(up_a) > 1 and up_a[-2] in common:
        up_a.pop()
    while len(up_b) > 1 and up_b[-2] in common:
        up_b.pop()
    return tuple(up_a + list(reversed(up_b[:-1])))


def _rotation_signs(t: HexTiling) -> list[int]:
    """Edge signs from an arbitrary rotation at every vertex.

    The rotation at v cycles its sorted neighbours. F_v(e) is the cell holding
    the 2-path rho_v(w) - v - w; an edge is consistent (+1) when the cells
    picked at its two ends differ.
    """
    g = t.graph
    owner = {}
    for cid, cell in enumerate(t.cells):
        vs = cell.vertices
        for i in range(6):
            a, b = vs[i - 1], vs[(i + 1) % 6]
            owner[(min(a, b), vs[i], max(a, b))] = cid
    rot = []
    for v in range(g.n):
        nb = sorted(g.neighbors(v))
        rot.append({nb[i]: nb[(i + 1) % len(nb)] for i in range(len(nb))})
    signs = []
    for u, v in g.edges:
        a = rot[u][v]
        b = rot[v][u]
        fu = owner[(min(a, v), u, max(a, v))]
        fv = owner[(min(b, u), v, max(b, u))]
        signs.append(1 if fu != fv else -1)
    return signs


def _bfs_tree(g: Graph, root: int = 0) -> tuple[list[int], list[int]]:
    """Parent vertex and parent edge per vertex (-1 at the root)."""
    par, pedge = [-1] * g.n, [-1] * g.n
    seen = [False] * g.n
    seen[root] = True
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w, e in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                par[w], pedge[w] = u, e
                queue.append(w)
    return par, pedge


def _tree_path(par: list[int], u: int, v: int) -> list[int]:
    """Vertices of the tree path u .. v."""
    up_u, up_v = [u], [v]
    while par[up_u[-1]] != -1:
        up_u.append(par[up_u[-1]])
    while par[up_v[-1]] != -1:
        up_v.append(par[up_v[-1]])
    common = set(up_u) & set(up_v)
    while len(up_u) > 1 and up_u[-2] in common:
        up_u.pop()
    while len(up_v) > 1 and up_v[-2] in common:
        up_v.pop()
    return up_u + list(reversed(up_v[:-1]))


def orientation_signs(t: HexTiling) -> Orientation:
    """Orient the cells coherently or show why that is impossible."""
    cached = t._cache.get("orientation")
    if cached is not None:
        return cached
    g = t.graph
    cell_signs, loop = _cell_orientation(t)
    signs = _rotation_signs(t)
    # flip rotations along a BFS tree so every tree edge becomes +1
    par, pedge = _bfs_tree(g)
    flip = [1] * g.n
    order = sorted(range(g.n), key=lambda v: _depth(par, v))
    for v in order:
        if par[v] != -1:
            flip[v] = flip[par[v]] * signs[pedge[v]]
    signs = [s * flip[u] * flip[v] for s, (u, v) in zip(signs, g.edges)]
    reversing = None
    bad = [e for e, s in enumerate(signs) if s < 0]
    if bad:
        u, v = g.edges[bad[0]]
        reversing = cycle_from_vertices(g, _tree_path(par, v, u))
    if (cell_signs is None) != bool(bad):
        raise AssertionError("cell orientation and rotation signs disagree")
    out = Orientation(cell_signs is not None, cell_signs, tuple(signs), loop, reversing)
    t._cache["orientation"] = out
    return out


def _depth(par: list[int], v: int) -> int:
    d = 0
    while par[v] != -1:
        v = par[v]
        d += 1
    return d


def is_orientable(t: HexTiling) -> bool:
    return orientation_signs(t).orientable


# --- first homology ---------------------------------------------------------------

@dataclass(frozen=True)
class H1Class:
    """A homology class: free coordinates plus torsion residues and moduli."""

    free: tuple[int, ...]
    torsion: tuple[int, ...] = ()
    moduli: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def __add__(self, other: "H1Class") -> "H1Class":
        free = tuple(a + b for a, b in zip(self.free, other.free))
        tors = tuple((a + b) % d for a, b, d in zip(self.torsion, other.torsion, self.moduli))
        return H1Class(free, tors, self.moduli)


class Homology:
    """H1 of the cell complex, in coordinates fixed by a Smith normal form.

    Chains are restricted to the edges outside a BFS spanning tree; the cell
    boundaries there span the relations. ``edge_free[e]`` and
    ``edge_torsion[e]`` give the class contributed by walking edge ``e``
    from its first to its second endpoint.
    """

    def __init__(self, t: HexTiling):
        g = t.graph
        _, pedge = _bfs_tree(g)
        tree = {e for e in pedge if e != -1}
        cotree = [e for e in range(g.m) if e not in tree]
        pos = {e: i for i, e in enumerate(cotree)}
        rel = [[0] * len(t.cells) for _ in cotree]
        for cid, cell in enumerate(t.cells):
            for i, e in enumerate(cell.edges):
                if e in pos:
                    rel[pos[e]][cid] += _edge_direction(g, cell, i)
        diag, u, _ = smith_normal_form(rel)
        r = len(diag)
        self.rank = len(cotree) - r
        self.moduli = tuple(d for d in diag if d > 1)
        tors_rows = [i for i, d in enumerate(diag) if d > 1]
        free_rows = range(r, len(cotree))
        self.edge_free: list[tuple[int, ...]] = []
        self.edge_torsion: list[tuple[int, ...]] = []
        for e in range(g.m):
            if e in pos:
                j = pos[e]
                self.edge_free.append(tuple(u[i][j] for i in free_rows))
                self.edge_torsion.append(
                    tuple(u[i][j] % diag[i] for i in tors_rows)
                )
            else:
                self.edge_free.append((0,) * self.rank)
                self.edge_torsion.append((0,) * len(self.moduli))

    @property
    def shape(self) -> tuple[int, tuple[int, ...]]:
        return self.rank, self.moduli

    def walk_class(self, g: Graph, vertices, edges) -> H1Class:
        """Class of the closed walk vertices[0] -e0-> vertices[1] ... -> vertices[0]."""
        free = [0] * self.rank
        tors = [0] * len(self.moduli)
        for i, e in enumerate(edges):
            s = 1 if g.edges[e][0] == vertices[i] else -1
            if g.edges[e][0] == g.edges[e][1]:
                s = 1
            for j, x in enumerate(self.edge_free[e]):
                free[j] += s * x
            for j, x in enumerate(self.edge_torsion[e]):
                tors[j] += s * x
        return H1Class(
            tuple(free), tuple(x % d for x, d in zip(tors, self.moduli)), self.moduli
        )


def homology(t: HexTiling) -> Homology:
    h = t._cache.get("homology")
    if h is None:
        h = t._cache["homology"] = Homology(t)
    return h


def h1_shape(t: HexTiling) -> tuple[int, tuple[int, ...]]:
    """``(rank, torsion moduli)``: (2, ()) on the torus, (1, (2,)) on the Klein bottle."""
    return homology(t).shape


def homology_class(t: HexTiling, c: Cycle) -> H1Class:
    return homology(t).walk_class(t.graph, c.vertices, c.edges)


# --- orientation double cover -------------------------------------------------------

@dataclass(frozen=True)
class DoubleCover:
    """The orientable 2:1 cover: vertex ``v`` lifts to ``v`` and ``v + n``.

    Base edge ``e`` lifts to ``e`` (leaving sheet +) and ``e + m`` (leaving
    sheet -).
    """

    tiling: HexTiling
    projection: tuple[int, ...]


def _lift_edge(g: Graph, signs, e: int, v: int, s: int) -> int:
    """Id of the lift of edge ``e`` leaving vertex ``v`` on sheet ``s``."""
    if g.edges[e][0] == v:
        return e if s > 0 else e + g.m
    return e if s == signs[e] else e + g.m


def double_cover(t: HexTiling) -> DoubleCover:
    """Orientation double cover of a non-orientable tiling."""
    cached = t._cache.get("cover")
    if cached is not None:
        return cached
    ori = orientation_signs(t)
    if ori.orientable:
        raise ValueError("tiling is orientable; it needs no orientation double cover")
    g, n = t.graph, t.graph.n
    sheet = lambda v, s: v if s > 0 else v + n
    edges = []
    for (a, b), s in zip(g.edges, ori.edge_signs):
        edges.append((sheet(a, 1), sheet(b, s)))
    for (a, b), s in zip(g.edges, ori.edge_signs):
        edges.append((sheet(a, -1), sheet(b, -s)))
    edges = [(min(a, b), max(a, b)) for a, b in edges]
    cover = Graph(2 * n, edges)
    cells = []
    for cell in t.cells:
        for start in (1, -1):
            verts, eids, s = [], [], start
            for v, e in zip(cell.vertices, cell.edges):
                verts.append(sheet(v, s))
                eids.append(_lift_edge(g, ori.edge_signs, e, v, s))
                s *= ori.edge_signs[e]
            if s != start:
                raise AssertionError("a cell reverses orientation")
            cells.append(Cycle(tuple(verts), tuple(eids)))
    out = DoubleCover(HexTiling(cover, cells), tuple(v % n for v in range(2 * n)))
    t._cache["cover"] = out
    return out


def lift_walk(t: HexTiling, vertices, edges, start: int = 1) -> tuple[list[int], list[int], int]:
    """Lift a closed walk to the double cover from the given sheet.

    Returns the lifted vertices, lifted edge ids and the final sheet.
    """
    g, n = t.graph, t.graph.n
    signs = orientation_signs(t).edge_signs
    s = start
    lv, le = [], []
    for v, e in zip(vertices, edges):
        lv.append(v if s > 0 else v + n)
        le.append(_lift_edge(g, signs, e, v, s))
        s *= signs[e]
    return lv, le, s


def is_essential(t: HexTiling, c: Cycle) -> bool:
    """True iff ``c`` is not contractible on the surface of ``t``."""
    ori = orientation_signs(t)
    if ori.orientable:
        return not homology_class(t, c).is_zero()
    lv, le, end = lift_walk(t, c.vertices, c.edges)
    if end < 0:
        return True
    cover = double_cover(t).tiling
    return not homology(cover).walk_class(cover.graph, lv, le).is_zero()


# --- shortest essential cycles --------------------------------------------------------

@dataclass(frozen=True)
class CapExceeded:
    """No essential cycle of length <= ``cap`` exists; raise the cap."""

    cap: int


def _cover_lattice(t: HexTiling):
    """Graph, per-edge lattice weights and sheet offset for the universal cover walk."""
    if orientation_signs(t).orientable:
        return t.graph, homology(t).edge_free, None
    cover = double_cover(t).tiling
    return cover.graph, homology(cover).edge_free, t.graph.n


def shortest_essential(t: HexTiling, cap: int | None = None, symmetry: bool = True):
    """``(l, count)`` for the shortest essential cycles, or CapExceeded.

    Walks the universal cover breadth first from every vertex: a torus
    closed walk is contractible iff its lattice displacement is zero, and a
    Klein bottle walk is contractible iff its lift to the orientation double
    cover closes up with zero displacement. Every closed walk of minimum
    essential length is a simple cycle, met 2*l times (start and direction),
    so the count is the number of such geodesics divided by 2*l.

    With ``symmetry`` set and a unique cell collection, a vertex-transitive
    graph is searched from vertex 0 only: automorphisms then preserve the
    cells, so every start sees the same number of geodesics.
    """
    from .iso import is_vertex_transitive

    g, weights, half = _cover_lattice(t)
    n = t.graph.n
    sources = range(n)
    weight = 1
    if symmetry and t.alternatives == 1 and is_vertex_transitive(t.graph):
        sources, weight = [0], n
    if cap is None:
        cap = g.n
    rank = len(weights[0]) if weights else 0
    zero = (0,) * rank
    # tilings are simple, so each adjacency entry is one directed edge
    steps = []
    for v in range(g.n):
        out = []
        for w, e in g.adj[v]:
            wt = weights[e]
            out.append((w, wt if g.edges[e][0] == v else tuple(-x for x in wt)))
        steps.append(out)
    best = cap
    total = 0
    found = False
    for s in sources:
        start = (s, zero)
        dist = {start: 0}
        ways = {start: 1}
        frontier = [start]
        depth = 0
        hits = 0
        while frontier and depth < best:
            depth += 1
            nxt = {}
            for state in frontier:
                v, off = state
                c = ways[state]
                for w, wt in steps[v]:
                    key = (w, tuple(a + b for a, b in zip(off, wt)))
                    d = dist.get(key)
                    if d is None:
                        dist[key] = depth
                        ways[key] = c
                        nxt[key] = None
                    elif d == depth:
                        ways[key] += c
            frontier = list(nxt)
            hits = 0
            for key in frontier:
                w, off = key
                if (w == s and off != zero) or (half is not None and w == s + half):
                    hits += ways[key]
            if hits:
                break
        if hits:
            if depth < best or not found:
                best, total = depth, 0
            total += hits * weight
            found = True
    if not found:
        return CapExceeded(cap)
    if total % (2 * best):
        raise AssertionError(f"geodesic count {total} not divisible by {2 * best}")
    return best, total // (2 * best)


def essential_cycles_upto(t: HexTiling, max_len: int) -> list[Cycle]:
    """All essential cycles of length <= max_len (exhaustive)."""
    ess = _essential_checker(t)
    return [c for c in enumerate_cycles_upto(t.graph, max_len) if ess(c)]


def _essential_checker(t: HexTiling):
    """is_essential with per-edge data hoisted out of the loop."""
    g = t.graph
    ori = orientation_signs(t)
    if ori.orientable:
        h = homology(t)
        return lambda c: not h.walk_class(g, c.vertices, c.edges).is_zero()
    cover = double_cover(t).tiling
    hc = homology(cover)

    def check(c: Cycle) -> bool:
        lv, le, end = lift_walk(t, c.vertices, c.edges)
        if end < 0:
            return True
        return not hc.walk_class(cover.graph, lv, le).is_zero()

    return check


def slow_shortest_essential(t: HexTiling, cap: int):
    """Reference answer: enumerate every cycle up to ``cap``, keep the essential ones."""
    ess = essential_cycles_upto(t, cap)
    if not ess:
        return CapExceeded(cap)
    best = min(len(c) for c in ess)
    return best, sum(1 for c in ess if len(c) == best)
