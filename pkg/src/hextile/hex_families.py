"""The seven families of hexagonal tilings and their predicted invariants."""

from __future__ import annotations

import re
from math import comb
from dataclasses import dataclass

from . import blocks
from .labeled import Builder, LabeledGraph
from .surface import HexTiling, Rejection, certify_tiling


FAMILY_TAGS = ("R", "A", "B", "C", "F", "G", "H")


@dataclass(frozen=True, order=True)
class HexFamilyId:
    """A member of one family: tag plus (k, m) and, for family R only, r."""

    family: str
    k: int
    m: int
    r: int | None = None

    def __str__(self) -> str:
        if self.family == "R":
            return f"Hr:{self.k},{self.m},{self.r}"
        return f"H{self.family.lower()}:{self.k},{self.m}"

    @property
    def n_vertices(self) -> int:
        k, m = self.k, self.m
        if self.family == "F":
            return 2 * k * (m + 2)
        if self.family == "G":
            return 2 * (m + 1) * (k + 2)
        if self.family == "H":
            return 2 * (m + 1) * (k + 1)
        return 2 * k * (m + 1)


def validate(fid: HexFamilyId) -> str | None:
    """Reason ``fid`` is outside the classification ranges, or None if valid.

    Degenerate m = 0 members of families R and F are admitted here; whether a
    given degenerate member is a tiling is decided by certification.
    """
    f, k, m, r = fid.family, fid.k, fid.m, fid.r
    if f not in FAMILY_TAGS:
        return f"unknown family {f!r}"
    if (f == "R") != (r is not None):
        return "r is required for family R and only there"
    if f == "R":
        if k < 2 or not 0 <= r <= k // 2:
            return "R needs 0 <= r <= floor(k/2)"
        if m >= 2:
            return None if k >= 3 else "R needs k >= 3"
        if m == 1:
            return None if k > 3 and r >= 2 else "R with m = 1 needs k > 3 and r >= 2"
        if m == 0:
            return None if k >= 3 else "degenerate R needs k >= 3"
        return "R needs m >= 0"
    if f == "A":
        return None if m >= 2 and k >= 3 else "A needs m >= 2, k >= 3"
    if f == "B":
        ok = k % 2 == 0 and m % 2 == 1 and m >= 3 and k >= 4
        return None if ok else "B needs k even >= 4, m odd >= 3"
    if f == "C":
        return None if k % 2 == 0 and k >= 6 and m >= 1 else "C needs k even >= 6, m >= 1"
    if f == "F":
        return None if k % 2 == 1 and k >= 7 and m >= 0 else "F needs k odd >= 7, m >= 0"
    if f == "G":
        return None if k >= m + 1 and m >= 3 else "G needs m >= 3, k >= m + 1"
    return None if 2 <= k <= m - 2 else "H needs 2 <= k <= m - 2"


def _require_valid(fid: HexFamilyId) -> None:
    why = validate(fid)
    if why:
        raise ValueError(f"invalid family id {fid}: {why}")


_SPEC = re.compile(r"^H([rabcfgh]):(\d+),(\d+)(?:,(\d+))?$")


def parse_hex_spec(text: str) -> HexFamilyId:
    """Parse ``Hr:k,m,r`` / ``Ha:k,m`` / ... into a HexFamilyId."""
    mt = _SPEC.match(text.strip())
    if not mt:
        raise ValueError(f"not a hexagonal family spec: {text!r}")
    tag, k, m, r = mt.groups()
    family = tag.upper()
    if (family == "R") != (r is not None):
        raise ValueError(f"family spec {text!r}: Hr takes k,m,r; the others take k,m")
    return HexFamilyId(family, int(k), int(m), None if r is None else int(r))


# --- native constructions ---------------------------------------------------

def _close_cylinder(fid: HexFamilyId) -> Builder:
    k, m = fid.k, fid.m
    b = blocks.cylinder(k, m)
    b.mark_bricks()
    z = lambda j: b.names[("z", j % k)]
    x = lambda j: b.names[("x", j % k)]
    if fid.family == "R":
        for j in range(k):
            b.add_edge(z(j), x(j + fid.r), exterior=True)
        if m == 0:
            # the spiral's cells: two ring 2-paths joined by two chords
            c = lambda i: (0, i % (2 * k))
            r = fid.r
            for j in range(k):
                b.bricks.append(tuple(c(2 * j + d) for d in (0, 1, 2, 2 * r + 3, 2 * r + 2, 2 * r + 1)))
    elif fid.family == "A":
        b.add_edge(z(0), x(1), exterior=True)
        b.add_edge(z(1), x(0), exterior=True)
        for i in range(2, k):
            b.add_edge(z(i), x(k + 1 - i), exterior=True)
    elif fid.family == "B":
        b.add_edge(z(0), x(0), exterior=True)
        for i in range(1, k):
            b.add_edge(z(i), x(k - i), exterior=True)
    elif fid.family == "C":
        h = k // 2
        for i in range(h):
            b.add_edge(z(i), z(i + h), exterior=True)
            b.add_edge(x(i), x(i + h), exterior=True)
    elif fid.family == "F":
        for i in range(k):
            b.add_vertex(("w", i))
            b.add_vertex(("v", i))
        for i in range(k):
            b.add_edge(("w", i), ("w", (i + 1) % k))
            b.add_edge(("v", i), ("v", (i + 1) % k))
        for i in range(k):
            b.add_edge(z(i), ("w", (2 * i) % k), exterior=True)
            b.add_edge(x(i), ("v", (2 * i) % k), exterior=True)
    return b


def _close_twisted(fid: HexFamilyId) -> Builder:
    k, m = fid.k, fid.m
    if fid.family == "G":
        b = blocks.twisted_cylinder_2(k, m)
        b.mark_bricks()
        for i in range(m + 1):
            b.add_edge(b.names[("z", i)], b.names[("w", i)], exterior=True)
            b.add_edge(b.names[("x", i)], b.names[("v", i)], exterior=True)
        return b
    b = blocks.twisted_cylinder_1(k, m)
    b.mark_bricks()
    for i in range(k + 1):
        b.add_edge(b.names[("z", i)], b.names[("x", i)], exterior=True)
        b.add_edge(b.names[("v", i)], b.names[("w", i)], exterior=True)
    return b


def build_labeled(fid: HexFamilyId) -> LabeledGraph:
    """Construct a family member on its native labelling (no certification)."""
    _require_valid(fid)
    if fid.family in ("G", "H"):
        return _close_twisted(fid).build()
    return _close_cylinder(fid).build()


def build_hex(fid: HexFamilyId) -> HexTiling:
    """Construct and certify a family member."""
    lg = build_labeled(fid)
    res = certify_tiling(lg.graph, hint=lg.bricks)
    if isinstance(res, Rejection):
        raise ValueError(f"{fid} is not a hexagonal tiling: {res}")
    return res


# --- Klein bottle presentations of families C and F -------------------------

def _klein_builder(fid: HexFamilyId) -> Builder:
    k, m = fid.k, fid.m
    rows = 2 * m + 2 if fid.family == "C" else 2 * m + 4
    b = Builder()
    blocks._grid(b, rows, k)
    cuts = []
    for i in range(rows // 2):
        for j in range(k):
            if 2 * j + 1 < k:
                cuts.append(((2 * i, 2 * j + 1), (2 * i + 1, 2 * j + 1)))
            if 2 * j < k and 2 * i + 2 < rows:
                cuts.append(((2 * i + 1, 2 * j), (2 * i + 2, 2 * j)))
    b.remove_edges(cuts)
    b.mark_bricks()
    for j in range(1, k, 2):
        b.add_edge((0, j), (rows - 1, j), exterior=True)
    for i in range(rows):
        b.names[("z", i)] = (i, 0)
        b.names[("x", i)] = (i, k - 1)
    if fid.family == "C":
        for i in range(rows):
            b.add_edge((i, 0), (rows - 1 - i, k - 1), exterior=True)
    else:
        b.add_edge((0, 0), (0, k - 1), exterior=True)
        for i in range(1, rows):
            b.add_edge((i, 0), (rows - i, k - 1), exterior=True)
    return b


def klein_labeled(fid: HexFamilyId) -> LabeledGraph:
    """Grid-based Klein bottle construction of a C or F member (uncertified)."""
    if fid.family not in ("C", "F"):
        raise ValueError(f"{fid}: Klein presentations exist for families C and F only")
    _require_valid(fid)
    return _klein_builder(fid).build()


def klein_presentation(fid: HexFamilyId) -> HexTiling:
    lg = klein_labeled(fid)
    res = certify_tiling(lg.graph, hint=lg.bricks)
    if isinstance(res, Rejection):
        raise ValueError(f"Klein presentation of {fid} is not a hexagonal tiling: {res}")
    return res


# --- parameter sweep ----------------------------------------------------------------

def family_ids(max_n: int, families: str = "RABCFGH") -> list[HexFamilyId]:
    """Every valid id with at most ``max_n`` vertices, sorted by tag then parameters.

    Degenerate m = 0 members of R and F are included whether or not they
    turn out to be tilings; callers certify.
    """
    out = []
    for f in families:
        for k in range(2, max_n + 1):
            for m in range(0, max_n + 1):
                if HexFamilyId(f, k, m, 0 if f == "R" else None).n_vertices > max_n:
                    break
                rs = range(k // 2 + 1) if f == "R" else [None]
                for r in rs:
                    fid = HexFamilyId(f, k, m, r)
                    if validate(fid) is None:
                        out.append(fid)
    order = {f: i for i, f in enumerate(FAMILY_TAGS)}
    return sorted(out, key=lambda x: (order[x.family], x.k, x.m, x.r or 0))


# --- closed forms ----------------------------------------------------------------------

CHI = {"R": 2, "A": 2, "B": 2, "C": 3, "F": 3, "G": 3, "H": 2}


def _b_sum(m: int) -> int:
    h = (m + 1) // 2
    return 2 * comb(m + 1, h) + 4 * sum(comb(m + 1, h - 2 * j) for j in range(1, (m - 1) // 4 + 1))


def predicted_essential(fid: HexFamilyId) -> tuple[int, int | None]:
    """Shortest essential length and count from the closed-form tables.

    The count is None where no closed form is known. For family R the rows
    are tried in the order k < m+1, k = m+1, r < floor((m+1)/2), otherwise.
    """
    f, k, m, r = fid.family, fid.k, fid.m, fid.r
    h = (m + 1) // 2
    if f == "R":
        if k < m + 1:
            return 2 * k, m + 1
        if k == m + 1:
            return 2 * k, m + 1 + k * comb(m + 1, h - r) if h >= r else m + 1
        if r < h:
            return 2 * (m + 1), k * comb(m + 1, h - r)
        return 2 * (m + 1 + r - h), k * comb(r + h, m)
    if f in "AB":
        length = min(2 * k, 2 * m + 2)
        if k < m + 1:
            return length, m + 1
        extra = 2 ** (m + 1) if f == "A" else _b_sum(m)
        return length, extra if k > m + 1 else extra + m + 1
    if f == "C":
        return min(k + 1, 4 * m + 4), (k // 2) * comb(2 * m + 2, m + 1) if 4 * m + 4 < k + 1 else 2 * k
    if f == "F":
        return min(k, 4 * m + 8), (k - 1) // 2 * comb(2 * m + 4, m + 2) if 4 * m + 8 < k else 2
    if f == "H":
        return 2 * k + 2, 2 ** (k + 1)
    # G
    if k > 2 * m + 1:
        return 2 * (k - m) - 2 * h + 3, None
    if k % 2:
        return k + 2, 2
    return k + 3, 2 * (k + 2)


def predicted_vertex_transitive(fid: HexFamilyId) -> bool:
    return fid.family == "R" or (fid.family == "A" and fid.k == 4 and fid.m % 2 == 1)
