"""Contracting a selected edge set of a tiling down to a locally grid graph,
and the matching deletion/contraction on the locally C6 dual."""

from __future__ import annotations

from dataclasses import dataclass

from .duality import DualTiling, dual_tiling
from .graph import Graph, contract_edges, simplify
from .grid_families import GridFamilyId
from .hex_families import HexFamilyId, _require_valid, build_hex, build_labeled, klein_labeled, klein_presentation
from .surface import HexTiling


@dataclass(frozen=True)
class MatchingPlan:
    """Edge ids P of ``tiling`` selected for contraction.

    ``presentation`` is "native" or "klein"; the tiling is the matching
    construction. ``skipped`` lists label pairs from the recipe that name
    vertices absent from the construction.
    """

    family: HexFamilyId
    edges: frozenset[int]
    is_matching: bool
    presentation: str
    tiling: HexTiling
    skipped: tuple = ()


def _cylinder_pairs(rows: int, half: int) -> list:
    return [((i, 2 * j), (i, 2 * j + 1)) for i in range(rows) for j in range(half)]


def _f_pairs(rows: int, k: int, l: int) -> list:
    out = []
    for i in range(rows):
        out += [((i, c), (i, c + 1)) for c in range(0, l + 1, 2)]
        out += [((i, c), (i, c + 1)) for c in range(l + 1, k - 1, 2)]
    return out


def _ladder_pairs(k: int, m: int) -> list:
    out = [((0, c), (0, c + 1)) for c in range(m - 1, 2 * k + m - 2, 2)]
    for i in range(1, m + 1):
        out += [((i, c), (i, c + 1)) for c in range(m - i - 1, 2 * k + m - i, 2)]
    return out


def _is_perfect_matching(g: Graph, edges) -> bool:
    hit = [0] * g.n
    for e in edges:
        u, v = g.edges[e]
        hit[u] += 1
        hit[v] += 1
    return all(h == 1 for h in hit)


def matching_plan(fid: HexFamilyId, l: int = 2) -> MatchingPlan:
    """The contraction set for ``fid``; ``l`` is the hexagon strip used by F."""
    _require_valid(fid)
    k, m = fid.k, fid.m
    f = fid.family
    if f in ("C", "F"):
        lg = klein_labeled(fid)
        t = klein_presentation(fid)
        rows = 2 * m + 2 if f == "C" else 2 * m + 4
        if f == "C":
            pairs = _cylinder_pairs(rows, k // 2)
        else:
            if l % 2 or not 0 <= l <= k - 3:
                raise ValueError(f"strip index l={l} must be even with 0 <= l <= k-3")
            pairs = _f_pairs(rows, k, l)
        presentation = "klein"
    else:
        lg = build_labeled(fid)
        t = build_hex(fid)
        if f in ("R", "A", "B"):
            pairs = _cylinder_pairs(m + 1, k)
        elif f == "H":
            pairs = _ladder_pairs(k, m)
            pairs += [((0, 2 * k + m - 1), (0, 2 * k + m)), ((m - k - 1, 3 * k + 2), (m, 0))]
        else:
            pairs = _ladder_pairs(k, m + 1)
            pairs.append(((0, 2 * k + m), (m + 1, 2 * (k - m - 1))))
        presentation = "native"
    idx = lg.index
    edges, skipped = set(), []
    for a, b in pairs:
        if a not in idx or b not in idx:
            skipped.append((a, b))
            continue
        edges.add(lg.edge_id(a, b))
    return MatchingPlan(
        fid, frozenset(edges), _is_perfect_matching(t.graph, edges), presentation, t, tuple(skipped)
    )


@dataclass(frozen=True)
class MinorResult:
    """Outcome of a contraction: the graph and the primal edges dropped as
    loops or parallel copies after contracting."""

    graph: Graph
    dropped: tuple[int, ...]


def _contract_and_drop(t: HexTiling, plan: MatchingPlan) -> MinorResult:
    if plan.tiling.graph != t.graph:
        raise ValueError("plan was built for a different tiling or presentation")
    g, proj = contract_edges(t.graph, plan.edges)
    seen = set()
    dropped = []
    survivors = [e for e in range(t.graph.m) if e not in plan.edges]
    for e, (u, v) in zip(survivors, g.edges):
        key = (min(u, v), max(u, v))
        if u == v or key in seen:
            dropped.append(e)
        seen.add(key)
    return MinorResult(simplify(g), tuple(dropped))


def tiling_minor(t: HexTiling, plan: MatchingPlan) -> Graph:
    """Contract the plan's edges, then drop loops and parallel copies."""
    return _contract_and_drop(t, plan).graph


def dropped_edges(t: HexTiling, plan: MatchingPlan) -> tuple[int, ...]:
    return _contract_and_drop(t, plan).dropped


def c6_minor(d: DualTiling, plan: MatchingPlan) -> Graph:
    """Delete the duals of P, then contract the duals of the dropped edges."""
    if d.primal.graph != plan.tiling.graph or d.graph.m != plan.tiling.graph.m:
        raise ValueError("dual does not come from the plan's tiling")
    dropped = set(dropped_edges(plan.tiling, plan))
    keep = [e for e in range(d.graph.m) if e not in plan.edges]
    g = Graph(d.graph.n, [d.graph.edges[e] for e in keep])
    local = [i for i, e in enumerate(keep) if e in dropped]
    out, _ = contract_edges(g, local)
    return out


def plan_minors(fid: HexFamilyId, l: int = 2) -> tuple[Graph, Graph]:
    """Both minors of ``fid``: from the tiling and from its dual."""
    plan = matching_plan(fid, l)
    return tiling_minor(plan.tiling, plan), c6_minor(dual_tiling(plan.tiling), plan)


def minor_target(fid: HexFamilyId) -> tuple[GridFamilyId, GridFamilyId]:
    """Expected (primal, dual) locally grid families of the two minors."""
    _require_valid(fid)
    k, m, f = fid.k, fid.m, fid.family
    if f == "R":
        t = GridFamilyId("T", k, m + 1, fid.r)
        return t, t
    if f == "A":
        if k % 2:
            return GridFamilyId("K1", k, m + 1), GridFamilyId("K1", k, m + 1)
        return GridFamilyId("K0", k, m + 1), GridFamilyId("K2", k, m + 1)
    if f == "B":
        return GridFamilyId("K2", k, m + 1), GridFamilyId("K0", k, m + 1)
    if f == "C":
        return GridFamilyId("K0", 2 * m + 2, k // 2), GridFamilyId("K2", 2 * m + 2, k // 2)
    if f == "F":
        return GridFamilyId("K2", 2 * m + 4, (k - 1) // 2), GridFamilyId("K0", 2 * m + 4, (k - 1) // 2)
    if f == "G":
        s = GridFamilyId("S", m + 1, k + 2)
        return s, s
    s = GridFamilyId("S", m + 1, k + 1)
    return s, s
