"""Building blocks of hexagonal tilings: walls, cylinders, circuits, ladders,
and the two twisted cylinders.

Every block is produced on a :class:`Builder` so the tiling constructors can
keep adding exterior edges between the labelled degree-2 vertices. Grid
coordinates are ``(row, column)``.
"""

from __future__ import annotations

from .labeled import Builder, LabeledGraph


def _grid(b: Builder, rows: int, cols: int, wrap: bool = False) -> None:
    for i in range(rows):
        for j in range(cols):
            b.add_vertex((i, j))
    for i in range(rows):
        for j in range(cols - 1):
            b.add_edge((i, j), (i, j + 1))
        if wrap and cols > 2:
            b.add_edge((i, 0), (i, cols - 1))
    for i in range(rows - 1):
        for j in range(cols):
            b.add_edge((i, j), (i + 1, j))


def _brick_cuts(k: int, m: int) -> list:
    cuts = []
    for i in range((m - 1) // 2 + 1):
        for j in range(k):
            cuts.append(((2 * i, 2 * j), (2 * i + 1, 2 * j)))
            cuts.append(((2 * i + 1, 2 * j + 1), (2 * i + 2, 2 * j + 1)))
    return cuts


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def wall(k: int, m: int) -> Builder:
    """Hexagonal wall of length k and breadth m on an (m+1) x 2k grid."""
    _check(k >= 1 and m >= 0, f"wall needs k >= 1, m >= 0 (got k={k}, m={m})")
    b = Builder()
    _grid(b, m + 1, 2 * k)
    b.remove_edges(_brick_cuts(k, m))
    return b


def cylinder(k: int, m: int) -> Builder:
    """Hexagonal cylinder: the wall cut from a cylinder grid, with z/x labels."""
    _check(k >= 2 and m >= 0, f"cylinder needs k >= 2, m >= 0 (got k={k}, m={m})")
    b = Builder()
    _grid(b, m + 1, 2 * k, wrap=True)
    b.remove_edges(_brick_cuts(k, m))
    for j in range(k):
        b.names[("z", j)] = (0, 2 * j)
        b.names[("x", j)] = (m, 2 * j) if m % 2 else (m, 2 * j + 1)
    return b


def moebius_circuit(k: int) -> Builder:
    b = wall(k, 1)
    b.add_edge((0, 0), (1, 2 * k - 1))
    b.add_edge((1, 0), (0, 2 * k - 1))
    return b


def parallel_moebius(k: int) -> Builder:
    _check(k >= 1, f"parallel Moebius circuit needs k >= 1 (got {k})")
    b = Builder()
    _grid(b, 3, 2 * k + 1)
    cuts = [((0, 2 * j + 1), (1, 2 * j + 1)) for j in range(k)]
    cuts += [((1, 2 * j), (2, 2 * j)) for j in range(k + 1)]
    b.remove_edges(cuts)
    b.add_edge((0, 0), (2, 2 * k))
    b.add_edge((1, 0), (1, 2 * k))
    b.add_edge((2, 0), (0, 2 * k))
    return b


def ladder(k: int, m: int) -> Builder:
    """Hexagonal ladder of length k and breadth m (a staircase of hexagons)."""
    _check(k >= 1 and m >= 1, f"ladder needs k >= 1, m >= 1 (got k={k}, m={m})")
    b = Builder()
    _grid(b, m + 1, 2 * k + m)
    gone = [(j, i) for j in range(m - 1) for i in range(m - 1 - j)]
    gone += [(j, 2 * k + i) for j in range(2, m + 2) for i in range(m + 1 - j, m)]
    b.remove_vertices(gone)
    cuts = [((i, m - i + 2 * j), (i + 1, m - i + 2 * j)) for i in range(m) for j in range(k)]
    b.remove_edges(cuts)
    return b


def twisted_cylinder_1(k: int, m: int) -> Builder:
    """TC_{k,m,1}: ladder(k, m) closed with a twist; requires k <= m - 2."""
    _check(k >= 1 and k <= m - 2, f"TC1 needs 1 <= k <= m-2 (got k={k}, m={m})")
    b = ladder(k, m)
    top, bot = (0, 2 * k + m), (m - k - 1, 3 * k + 2)
    b.add_vertex(top)
    b.add_vertex(bot)
    b.add_edge(top, (0, 2 * k + m - 1))
    b.add_edge(top, (k + 1, m - k - 2))
    b.add_edge(bot, (m - k - 1, 3 * k + 1))
    b.add_edge(bot, (m, 0))
    for j in range(1, m - k - 1):
        b.add_edge((j, 2 * k + m - j), (k + j + 1, m - k - j - 2))
    for j in range(k + 1):
        b.names[("z", j)] = (0, 2 * k + m - 2 * j)
        b.names[("x", j)] = (j, m - (j + 1))
    b.names[("v", 0)] = bot
    b.names[("w", 0)] = (m, 2 * k)
    for i in range(k):
        b.names[("v", i + 1)] = (m - k + i, 3 * k - i)
        b.names[("w", i + 1)] = (m, 2 * k - (2 * i + 1))
    return b


def twisted_cylinder_2(k: int, m: int) -> Builder:
    """TC_{k,m,2}: ladder(k, m+1) trimmed and closed with a twist; k >= m + 1."""
    _check(m >= 1 and k >= m + 1, f"TC2 needs k >= m+1 (got k={k}, m={m})")
    b = ladder(k, m + 1)
    if k == m + 1:
        b.add_edge((0, 2 * k + m), (m + 1, 0))
    else:
        b.remove_vertices([(m + 1, i) for i in range(2 * (k - m) - 2)])
        b.add_edge((0, 2 * k + m), (m + 1, 2 * (k - m - 1)))
        for j in range(k - m - 1):
            b.add_edge((0, 2 * k + m - (2 * j + 1)), (m, 2 * (k - m - 1) - (2 * j + 2)))
    for i in range(m + 1):
        b.names[("x", i)] = (m - i, i)
        b.names[("z", i)] = (0, m + 2 * i + 1)
        b.names[("w", i)] = (i + 1, 2 * k + m - i)
        b.names[("v", i)] = (m + 1, 2 * k - (2 * i + 1))
    return b


BLOCKS = {
    "grid": None,
    "cylinder_grid": None,
    "wall": wall,
    "cylinder": cylinder,
    "cylinder_circuit": lambda k: cylinder(k, 1),
    "moebius_circuit": moebius_circuit,
    "parallel_moebius": parallel_moebius,
    "ladder": ladder,
    "TC1": twisted_cylinder_1,
    "TC2": twisted_cylinder_2,
}


def build_block(kind: str, *params: int) -> LabeledGraph:
    """Build one named structure, e.g. ``build_block("cylinder", 4, 3)``."""
    if kind in ("grid", "cylinder_grid"):
        _check(len(params) == 2, f"{kind} takes (rows, cols)")
        p, q = params
        _check(p >= 1 and q >= 1, f"{kind} needs positive dimensions")
        b = Builder()
        _grid(b, p, q, wrap=kind == "cylinder_grid")
        return b.build()
    if kind not in BLOCKS:
        raise ValueError(f"unknown block kind {kind!r}")
    return BLOCKS[kind](*params).build()
