"""Locally grid graphs: the five families, the local verifier, square duals
and identification of an unknown graph."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import Graph, bfs_distances, enumerate_cycles_upto
from .iso import isomorphic, vertex_profiles
from .labeled import Builder, LabeledGraph

GRID_TAGS = ("T", "K0", "K1", "K2", "S")


@dataclass(frozen=True, order=True)
class GridFamilyId:
    family: str
    p: int
    q: int
    delta: int | None = None

    def __str__(self) -> str:
        if self.family == "T":
            return f"T:{self.p},{self.q},{self.delta}"
        return f"{self.family}:{self.p},{self.q}"

    @property
    def n_vertices(self) -> int:
        return self.p * self.q


def validate_grid(gid: GridFamilyId) -> str | None:
    """Reason ``gid`` is outside the family ranges, or None."""
    f, p, q, d = gid.family, gid.p, gid.q, gid.delta
    if f not in GRID_TAGS:
        return f"unknown family {f!r}"
    if (f == "T") != (d is not None):
        return "delta is required for T and only there"
    if f == "T":
        if p < 5 or not 0 <= 2 * d <= p or q < 1:
            return "T needs p >= 5, 0 <= delta <= p/2, q >= 1"
        if q >= 4:
            return None if d + q >= 5 else "T needs delta + q >= 5 when q >= 4"
        if q in (2, 3):
            return None if d + q >= 6 else "T needs delta + q >= 6 when q is 2 or 3"
        ok = 4 <= d and 2 * d < p and Fraction(p, 3) != d and Fraction(p, 4) != d
        return None if ok else "T with q = 1 needs 4 <= delta < p/2, delta not p/3 or p/4"
    if f == "K1":
        return None if p >= 5 and p % 2 and q >= 5 else "K1 needs p >= 5 odd, q >= 5"
    if f == "K0":
        return None if p >= 5 and p % 2 == 0 and q >= 4 else "K0 needs p >= 6 even, q >= 4"
    if f == "K2":
        return None if p >= 5 and p % 2 == 0 and q >= 5 else "K2 needs p >= 6 even, q >= 5"
    return None if p >= 3 and q >= 6 else "S needs p >= 3, q >= 6"


_SPEC = re.compile(r"^(T|K0|K1|K2|S):(\d+),(\d+)(?:,(\d+))?$")


def parse_grid_spec(text: str) -> GridFamilyId:
    """Parse ``T:p,q,delta`` / ``K0:p,q`` / ``K1:p,q`` / ``K2:p,q`` / ``S:p,q``."""
    mt = _SPEC.match(text.strip())
    if not mt:
        raise ValueError(f"not a grid family spec: {text!r}")
    tag, p, q, d = mt.groups()
    if (tag == "T") != (d is not None):
        raise ValueError(f"grid spec {text!r}: T takes p,q,delta; the others take p,q")
    return GridFamilyId(tag, int(p), int(q), None if d is None else int(d))


def extra_edges(gid: GridFamilyId) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """The closing edges added to the p x q grid, indices reduced mod p / mod q."""
    f, p, q, d = gid.family, gid.p, gid.q, gid.delta
    wrap_rows = [((0, j), (p - 1, j)) for j in range(q)]
    if f == "T":
        return [((i, 0), ((i + d) % p, q - 1)) for i in range(p)] + wrap_rows
    if f in ("K0", "K1"):
        return [((j, 0), (p - j - 1, q - 1)) for j in range(p)] + wrap_rows
    if f == "K2":
        return [((j, 0), ((p - j) % p, q - 1)) for j in range(p)] + wrap_rows
    if p <= q:
        # left column to the last p vertices of the bottom row
        out = [((j, 0), (p - 1, q - p + j)) for j in range(p)]
        out += [((0, i), (i, q - 1)) for i in range(p)]
        out += [((0, i), (p - 1, i - p)) for i in range(p, q)]
        return out
    out = [((j, 0), (0, q - 1 - j)) for j in range(q)]
    out += [((p - 1 - i, q - 1), (p - 1, i)) for i in range(q)]
    out += [((i, q - 1), (i + q, 0)) for i in range(p - q)]
    return out


def build_grid(gid: GridFamilyId, check: bool = True) -> LabeledGraph:
    """p*q vertices labelled (i, j); grid edges plus the family's closing edges.

    With ``check=False`` parameters outside the family ranges are accepted;
    the result then need not be locally grid (or even simple).
    """
    if check:
        why = validate_grid(gid)
        if why:
            raise ValueError(f"invalid grid family id {gid}: {why}")
    p, q = gid.p, gid.q
    b = Builder()
    for i in range(p):
        for j in range(q):
            b.add_vertex((i, j))
    pairs = []
    for i in range(p):
        for j in range(q):
            if i + 1 < p:
                pairs.append(((i, j), (i + 1, j)))
            if j + 1 < q:
                pairs.append(((i, j), (i, j + 1)))
    pairs += extra_edges(gid)
    # a raw edge list so degenerate parameters can still produce multigraphs
    idx = b.index
    edges = [(min(idx[a], idx[c]), max(idx[a], idx[c])) for a, c in pairs]
    return LabeledGraph(Graph(len(b.labels), edges), tuple(b.labels))


def grid_ids(n: int, families=GRID_TAGS) -> list[GridFamilyId]:
    """Valid ids with exactly ``n`` vertices in scan order (family, p, q, delta)."""
    out = []
    for f in families:
        for p in range(1, n + 1):
            if n % p:
                continue
            q = n // p
            deltas = range(p // 2 + 1) if f == "T" else [None]
            for d in deltas:
                gid = GridFamilyId(f, p, q, d)
                if validate_grid(gid) is None:
                    out.append(gid)
    return out


@dataclass(frozen=True)
class LocalCheck:
    ok: bool
    witness: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _local_at(x: int, nbrs: list[set[int]]) -> bool:
    ns = sorted(nbrs[x])
    a = ns[0]
    for b, c, d in ((ns[1], ns[2], ns[3]), (ns[1], ns[3], ns[2]), (ns[2], ns[1], ns[3])):
        ring = [a, b, c, d]
        ys = []
        good = True
        for i in range(4):
            u, v = ring[i], ring[(i + 1) % 4]
            common = (nbrs[u] & nbrs[v]) - {x}
            if len(common) != 1 or (nbrs[ring[i]] & nbrs[ring[(i + 2) % 4]]) != {x}:
                good = False
                break
            ys.append(next(iter(common)))
        if not good:
            continue
        named = [x] + ring + ys
        if len(set(named)) != 9:
            continue
        induced = sum(1 for u, v in combinations(named, 2) if v in nbrs[u])
        if induced == 12:
            return True
    return False


def is_locally_grid(g: Graph) -> LocalCheck:
    """4-regular, connected, simple, and the 3x3 grid pattern around every vertex."""
    if g.n == 0 or not g.is_simple():
        return LocalCheck(False, None, "empty or not simple")
    for v in range(g.n):
        if g.degree(v) != 4:
            return LocalCheck(False, v, "not 4-regular")
    if not g.is_connected():
        return LocalCheck(False, None, "not connected")
    nbrs = g.neighbor_sets()
    for v in range(g.n):
        if not _local_at(v, nbrs):
            return LocalCheck(False, v, "no ordering of the neighbourhood fits the grid pattern")
    return LocalCheck(True)


def squares(g: Graph):
    return [c for c in enumerate_cycles_upto(g, 4) if len(c) == 4]


def grid_dual(g: Graph) -> Graph:
    """One vertex per square, one dual edge per primal edge joining its two squares."""
    sq = squares(g)
    holders: list[list[int]] = [[] for _ in range(g.m)]
    for sid, c in enumerate(sq):
        for e in c.edges:
            holders[e].append(sid)
    bad = [e for e, h in enumerate(holders) if len(h) != 2]
    if bad:
        raise ValueError(f"edge {bad[0]} {g.edges[bad[0]]} lies in {len(holders[bad[0]])} squares, not 2")
    return Graph(len(sq), [tuple(sorted(h)) for h in holders])


def identify_grid(g: Graph) -> GridFamilyId | None:
    """First id (scan order T, K0, K1, K2, S; ascending p) whose graph is isomorphic to g."""
    if not is_locally_grid(g):
        return None
    seen = set(vertex_profiles(g))
    for gid in grid_ids(g.n):
        h = build_grid(gid).graph
        # one BFS on the candidate rules most of them out cheaply
        if _layers(h, 0) not in seen:
            continue
        if isomorphic(h, g) is not None:
            return gid
    return None


def _layers(g: Graph, s: int) -> tuple[int, ...]:
    dist = bfs_distances(g, s)
    out = [0] * (max(dist.values()) + 1)
    for d in dist.values():
        out[d] += 1
    return tuple(out)
