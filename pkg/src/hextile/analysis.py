"""Invariant reports, recognition of a tiling's family, and the parameter census."""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field

from .duality import dual_tiling, is_locally_c6, triangle_dual
from .graph import Graph, chromatic_number_small, girth
from .grid_families import build_grid, identify_grid, validate_grid
from .hex_families import (
    CHI,
    HexFamilyId,
    build_hex,
    family_ids,
    predicted_essential,
    predicted_vertex_transitive,
)
from .iso import isomorphic, is_vertex_transitive, vertex_profiles, walk_profiles
from .minors import c6_minor, dropped_edges, matching_plan, minor_target, tiling_minor
from .surface import CapExceeded, HexTiling, Rejection, certify_tiling, h1_shape, shortest_essential

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantReport:
    N: int
    girth: int
    orientable: bool
    h1_shape: tuple[int, tuple[int, ...]]
    l_G: int | None
    essential_count: int | None
    chi: int
    vertex_transitive: bool | None
    cap_exceeded: int | None = None

    def lines(self) -> list[str]:
        rank, tors = self.h1_shape
        shape = "Z^%d" % rank + "".join(f"+Z{t}" for t in tors)
        out = [
            f"N={self.N}",
            f"girth={self.girth}",
            f"orientable={str(self.orientable).lower()}",
            f"h1={shape}",
            f"l_G={self.l_G if self.l_G is not None else 'unknown'}",
            f"essential_count={self.essential_count if self.essential_count is not None else 'unknown'}",
            f"chi={self.chi}",
            f"vertex_transitive={'unknown' if self.vertex_transitive is None else str(self.vertex_transitive).lower()}",
        ]
        if self.cap_exceeded is not None:
            out.append(f"cap_exceeded={self.cap_exceeded}")
        return out


def _essential(t: HexTiling, cap: int | None):
    if cap is not None:
        return shortest_essential(t, cap)
    # start at twice the girth and double until the walk covers every length
    limit = 2 * t.graph.n
    c = 2 * int(girth(t.graph))
    while True:
        res = shortest_essential(t, c)
        if not isinstance(res, CapExceeded) or c >= limit:
            return res
        c *= 2


def invariants(t: HexTiling, cap: int | None = None, transitivity: bool = True) -> InvariantReport:
    """Every field from the graph and its cells alone, no family knowledge."""
    from .surface import is_orientable

    res = _essential(t, cap)
    if isinstance(res, CapExceeded):
        l, count, capped = None, None, res.cap
    else:
        (l, count), capped = res, None
    return InvariantReport(
        N=t.graph.n,
        girth=int(girth(t.graph)),
        orientable=is_orientable(t),
        h1_shape=h1_shape(t),
        l_G=l,
        essential_count=count,
        chi=chromatic_number_small(t.graph),
        vertex_transitive=is_vertex_transitive(t.graph) if transitivity else None,
        cap_exceeded=capped,
    )


# --- recognition ------------------------------------------------------------------

@dataclass(frozen=True)
class Recognition:
    fid: HexFamilyId | None
    mapping: list[int] | None
    reason: str = ""
    candidates: int = 0

    def __bool__(self) -> bool:
        return self.fid is not None


def _predicted_orientable(fid: HexFamilyId) -> bool:
    return fid.family == "R"


def recognize(g: Graph) -> Recognition:
    """Name the family member isomorphic to ``g``, with the vertex bijection.

    Candidates are the ids with the right vertex count, pruned by colouring
    number and orientability; an isomorphism confirms the match.
    """
    t = certify_tiling(g)
    if isinstance(t, Rejection):
        return Recognition(None, None, f"not a hexagonal tiling: {t}")
    from .surface import is_orientable

    chi = chromatic_number_small(g)
    ori = is_orientable(t)
    n = g.n
    cands = [
        fid
        for fid in family_ids(n)
        if fid.n_vertices == n and CHI[fid.family] == chi and _predicted_orientable(fid) == ori
    ]
    for fid in cands:
        try:
            h = build_hex(fid).graph
        except ValueError:
            continue
        mp = isomorphic(g, h)
        if mp is not None:
            return Recognition(fid, mp, "", len(cands))
    log.error("tiling on %d vertices matches no family member", n)
    return Recognition(None, None, "hexagonal tiling matching no family member", len(cands))


# --- census -----------------------------------------------------------------------

@dataclass
class MinorCheck:
    primal_target: str
    dual_target: str
    primal_target_valid: bool
    dual_target_valid: bool
    primal_identified: str | None
    dual_identified: str | None
    primal_iso_recipe: bool
    dual_iso_recipe: bool
    is_matching: bool
    dropped: int
    grid_dual_consistent: bool | None

    @property
    def ok(self) -> bool:
        # identify_grid may name an alias of the target; compare graphs, not ids
        return (
            self.primal_identified is not None
            and self.dual_identified is not None
            and self.primal_iso_recipe
            and self.dual_iso_recipe
        )


@dataclass
class CensusRecord:
    fid: str
    family: str
    N: int
    certified: bool
    reason: str = ""
    alternatives: int = 1
    report: InvariantReport | None = None
    predicted_l: int | None = None
    predicted_count: int | None = None
    predicted_chi: int | None = None
    predicted_vt: bool | None = None
    minor: MinorCheck | None = None
    locally_c6: bool | None = None
    dual_multi_edges: list = field(default_factory=list)
    double_dual_ok: bool | None = None

    @property
    def l_ok(self) -> bool | None:
        return None if self.report is None else self.report.l_G == self.predicted_l

    @property
    def count_ok(self) -> bool | None:
        if self.report is None or self.predicted_count is None:
            return None
        return self.report.essential_count == self.predicted_count

    def lines(self) -> list[str]:
        out = [f"id={self.fid}", f"family={self.family}", f"N={self.N}", f"certified={str(self.certified).lower()}"]
        if not self.certified:
            out.append(f"reason={self.reason}")
            return out
        out.append(f"alternatives={self.alternatives}")
        out += self.report.lines()
        out += [
            f"predicted_l_G={self.predicted_l}",
            f"predicted_count={self.predicted_count if self.predicted_count is not None else 'none'}",
            f"predicted_chi={self.predicted_chi}",
            f"predicted_vertex_transitive={str(self.predicted_vt).lower()}",
            f"l_G_match={str(self.l_ok).lower()}",
            f"count_match={'n/a' if self.count_ok is None else str(self.count_ok).lower()}",
        ]
        if self.locally_c6 is not None:
            out.append(f"dual_locally_c6={str(self.locally_c6).lower()}")
            out.append(f"double_dual_iso={str(self.double_dual_ok).lower()}")
        if self.minor is not None:
            mc = self.minor
            out += [
                f"minor_primal_target={mc.primal_target}",
                f"minor_primal_identified={mc.primal_identified or 'none'}",
                f"minor_primal_iso_recipe={str(mc.primal_iso_recipe).lower()}",
                f"minor_dual_target={mc.dual_target}",
                f"minor_dual_identified={mc.dual_identified or 'none'}",
                f"minor_dual_iso_recipe={str(mc.dual_iso_recipe).lower()}",
                f"minor_plan_is_matching={str(mc.is_matching).lower()}",
                f"minor_dropped_edges={mc.dropped}",
            ]
        return out


def check_minor(fid: HexFamilyId) -> MinorCheck:
    plan = matching_plan(fid)
    t = plan.tiling
    prim = tiling_minor(t, plan)
    dual = c6_minor(dual_tiling(t), plan)
    pt, dt = minor_target(fid)
    out = []
    for g, gid in ((prim, pt), (dual, dt)):
        valid = validate_grid(gid) is None
        ident = identify_grid(g)
        iso = isomorphic(g, build_grid(gid, check=False).graph) is not None
        out.append((valid, str(ident) if ident else None, iso))
    consistent = None
    if out[0][1] is not None:
        from .grid_families import grid_dual

        consistent = isomorphic(grid_dual(prim), dual) is not None
    return MinorCheck(
        str(pt), str(dt), out[0][0], out[1][0], out[0][1], out[1][1], out[0][2], out[1][2],
        plan.is_matching, len(dropped_edges(t, plan)), consistent,
    )


def check_duality(t: HexTiling) -> tuple[bool, list, bool]:
    d = dual_tiling(t)
    multi = d.multi_edges()
    ok = bool(is_locally_c6(d.graph))
    try:
        back = isomorphic(triangle_dual(d.graph), t.graph) is not None
    except ValueError:
        # extra triangles (chords in a neighbourhood) leave some edge in 3+ of them
        back = False
    return ok, multi, back


def census_record(
    fid: HexFamilyId,
    transitivity_max_n: int = 120,
    minors: bool = True,
    duality: bool = True,
) -> CensusRecord:
    rec = CensusRecord(str(fid), fid.family, fid.n_vertices, False)
    try:
        t = build_hex(fid)
    except ValueError as exc:
        rec.reason = str(exc)
        return rec
    rec.certified = True
    rec.alternatives = t.alternatives
    rec.report = invariants(t, transitivity=fid.n_vertices <= transitivity_max_n)
    rec.predicted_l, rec.predicted_count = predicted_essential(fid)
    rec.predicted_chi = CHI[fid.family]
    rec.predicted_vt = predicted_vertex_transitive(fid)
    if duality:
        rec.locally_c6, rec.dual_multi_edges, rec.double_dual_ok = check_duality(t)
    if minors:
        try:
            rec.minor = check_minor(fid)
        except ValueError as exc:
            log.warning("minor check failed for %s: %s", fid, exc)
    return rec


@dataclass
class CensusReport:
    max_n: int
    records: list[CensusRecord]
    cross_family: list[tuple[str, str]]
    aliases: list[tuple[str, str]]
    iso_max_n: int

    def lines(self) -> list[str]:
        out = [f"census max_n={self.max_n} members={len(self.records)} iso_max_n={self.iso_max_n}"]
        for rec in self.records:
            out.append("")
            out += rec.lines()
        out.append("")
        out.append(f"cross_family_isomorphisms={len(self.cross_family)}")
        out += [f"cross_family={a}~{b}" for a, b in self.cross_family]
        out.append(f"within_family_aliases={len(self.aliases)}")
        out += [f"alias={a}~{b}" for a, b in self.aliases]
        return out

    def to_json(self) -> str:
        return json.dumps(
            {
                "max_n": self.max_n,
                "iso_max_n": self.iso_max_n,
                "records": [asdict(r) for r in self.records],
                "cross_family": self.cross_family,
                "aliases": self.aliases,
            },
            indent=1,
        )


def _iso_key(g: Graph) -> tuple:
    return (g.n, tuple(sorted(vertex_profiles(g))), tuple(sorted(walk_profiles(g))))


def isomorphism_classes(ids: list[HexFamilyId]) -> tuple[list, list]:
    """Pairs of isomorphic members split into cross-family and same-family."""
    groups: dict[tuple, list[tuple[HexFamilyId, Graph]]] = {}
    for fid in ids:
        try:
            g = build_hex(fid).graph
        except ValueError:
            continue
        groups.setdefault(_iso_key(g), []).append((fid, g))
    cross, alias = [], []
    for members in groups.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                (a, ga), (b, gb) = members[i], members[j]
                if isomorphic(ga, gb) is None:
                    continue
                (cross if a.family != b.family else alias).append((str(a), str(b)))
    return cross, alias


def census(
    max_n: int,
    families: str = "RABCFGH",
    iso_max_n: int = 120,
    transitivity_max_n: int = 120,
    minors: bool = True,
    duality: bool = True,
    progress=None,
) -> CensusReport:
    """Every valid id up to ``max_n`` vertices, checked against the predictions."""
    if max_n < 18:
        raise ValueError("census needs max_n >= 18")
    ids = family_ids(max_n, families)
    records = []
    for fid in ids:
        rec = census_record(fid, transitivity_max_n, minors, duality)
        records.append(rec)
        if progress is not None:
            progress(rec)
    cross, alias = isomorphism_classes([f for f in ids if f.n_vertices <= iso_max_n])
    return CensusReport(max_n, records, cross, alias, iso_max_n)
