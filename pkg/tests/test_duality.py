from hextile.duality import dual_tiling, is_locally_c6, triangle_dual
from hextile.graph import Graph
from hextile.hex_families import build_hex, parse_hex_spec
from hextile.iso import isomorphic


def octahedron():
    return Graph(6, [(a, b) for a in range(6) for b in range(a + 1, 6) if b != a + 3 or a >= 3])


def icosahedron():
    top, bot = 0, 11
    up = list(range(1, 6))
    lo = list(range(6, 11))
    e = [(top, u) for u in up] + [(bot, w) for w in lo]
    for i in range(5):
        e += [(up[i], up[(i + 1) % 5]), (lo[i], lo[(i + 1) % 5]), (up[i], lo[i]), (up[i], lo[(i + 1) % 5])]
    return Graph(12, e)


def test_dual_sizes():
    t = build_hex(parse_hex_spec("Hr:5,4,1"))
    d = dual_tiling(t)
    assert d.graph.n == 25 and d.graph.is_regular(6)
    assert d.graph.m == t.graph.m == 3 * t.n // 2
    assert all(d.primal_edge(d.dual_edge(e)) == e for e in range(t.graph.m))


def test_dual_is_locally_c6_and_round_trips():
    for spec in ("Hr:5,4,1", "Hf:7,4", "Hg:7,4", "Hh:3,6"):
        t = build_hex(parse_hex_spec(spec))
        d = dual_tiling(t).graph
        assert is_locally_c6(d)
        assert isomorphic(triangle_dual(d), t.graph) is not None


def test_platonic_solids_are_not_locally_c6():
    assert octahedron().is_regular(4)
    assert not is_locally_c6(octahedron())
    assert icosahedron().is_regular(5)
    assert not is_locally_c6(icosahedron())


def test_small_member_has_chorded_neighbourhoods():
    # essential 3-cycles in the dual put a chord in a neighbourhood
    d = dual_tiling(build_hex(parse_hex_spec("Hr:5,2,1"))).graph
    assert d.is_simple()
    chk = is_locally_c6(d)
    assert not chk and chk.witness is not None
