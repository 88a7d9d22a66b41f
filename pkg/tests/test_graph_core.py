import pytest
from hypothesis import given, settings, strategies as st

from conftest import cycle_graph, petersen, shuffled
from hextile.graph import (
    Graph,
    GraphError,
    chromatic_number_small,
    contract_edges,
    enumerate_cycles_upto,
    format_graph,
    girth,
    is_bipartite,
    parse_graph,
    simplify,
)
from hextile.hex_families import build_hex, parse_hex_spec
from hextile.iso import automorphism_orbits, isomorphic, is_vertex_transitive


def test_hexagon_is_two_regular():
    g = cycle_graph(6)
    assert g.n == 6 and g.m == 6
    assert g.degrees() == [2] * 6


def test_bad_endpoint_rejected():
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])


def test_multigraph_carrier_keeps_parallels_and_loops():
    g = Graph(2, [(0, 1), (0, 1), (1, 1)])
    assert not g.is_simple()
    assert g.degree(1) == 4
    assert girth(g) == 1
    assert simplify(g).edges == ((0, 1),)


def test_girth_small_cases():
    assert girth(cycle_graph(6)) == 6
    assert girth(petersen()) == 5
    assert girth(Graph(4, [(0, 1), (1, 2), (2, 3)])) == float("inf")


def test_bipartite_and_colouring():
    assert is_bipartite(cycle_graph(6))
    assert chromatic_number_small(cycle_graph(6)) == 2
    assert chromatic_number_small(cycle_graph(5)) == 3
    assert chromatic_number_small(petersen()) == 3
    k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert chromatic_number_small(k4) == 4


def test_cycles_of_hexagon():
    cycles = enumerate_cycles_upto(cycle_graph(6), 6)
    assert len(cycles) == 1 and len(cycles[0]) == 6
    assert cycles[0].is_valid(cycle_graph(6))


def test_petersen_has_twelve_pentagons():
    assert len(enumerate_cycles_upto(petersen(), 5)) == 12


def test_contract_one_edge_of_hexagon():
    g, proj = contract_edges(cycle_graph(6), [0])
    assert g.n == 5 and g.m == 5
    assert isomorphic(g, cycle_graph(5)) is not None
    assert proj[0] == proj[1]


def test_contract_perfect_matching_of_hexagon_gives_triangle():
    g, _ = contract_edges(cycle_graph(6), [0, 2, 4])
    assert isomorphic(g, cycle_graph(3)) is not None


def test_format_parse_round_trip():
    g = petersen()
    text = format_graph(g, ["petersen"])
    assert text.startswith("hexgraph 10 15\n# petersen\n")
    assert parse_graph(text).edge_multiset() == g.edge_multiset()


@pytest.mark.parametrize(
    "text, line",
    [
        ("hexgraph 3 1\n0 x\n", "line 2"),
        ("graph 3 1\n", "line 1"),
        ("hexgraph 3 1\n0 1 2\n", "line 2"),
        ("hexgraph 3 1\n# c\n0 5\n", "line 3"),
    ],
)
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(GraphError, match=line):
        parse_graph(text)


def test_parse_edge_count_mismatch():
    with pytest.raises(GraphError, match="announces"):
        parse_graph("hexgraph 3 2\n0 1\n")


def test_hexagon_single_orbit_and_petersen_transitive():
    assert automorphism_orbits(cycle_graph(6)) == [list(range(6))]
    assert is_vertex_transitive(petersen())
    path = Graph(3, [(0, 1), (1, 2)])
    assert automorphism_orbits(path) == [[0, 2], [1]]
    assert not is_vertex_transitive(path)


def test_hexagon_and_two_triangles_not_isomorphic():
    two = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert isomorphic(cycle_graph(6), two) is None


def test_isomorphism_mapping_is_genuine():
    g = build_hex(parse_hex_spec("Hc:6,1")).graph
    h, _ = shuffled(g, 3)
    mp = isomorphic(g, h)
    assert mp is not None
    assert sorted(tuple(sorted((mp[u], mp[v]))) for u, v in g.edges) == sorted(
        tuple(sorted(e)) for e in h.edges
    )


@st.composite
def random_graphs(draw):
    n = draw(st.integers(1, 9))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges)


@settings(max_examples=60, deadline=None)
@given(random_graphs(), st.randoms(use_true_random=False))
def test_relabelled_copy_is_isomorphic(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    mp = isomorphic(g, h)
    assert mp is not None
    assert sorted(tuple(sorted((mp[u], mp[v]))) for u, v in g.edges) == sorted(
        tuple(sorted(e)) for e in h.edges
    )


@settings(max_examples=60, deadline=None)
@given(random_graphs(), st.data())
def test_contraction_vertex_count(g, data):
    chosen = data.draw(st.lists(st.integers(0, max(g.m - 1, 0)), unique=True)) if g.m else []
    out, proj = contract_edges(g, chosen)
    # vertices drop by the number of chosen edges joining distinct classes
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    merged = 0
    for e in chosen:
        a, b = find(g.edges[e][0]), find(g.edges[e][1])
        if a != b:
            parent[a] = b
            merged += 1
    assert out.n == g.n - merged
    assert out.m == g.m - len(chosen)
    assert len(proj) == g.n


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 12))
def test_perfect_matching_of_even_cycle_halves_it(k):
    g = cycle_graph(2 * k)
    out, _ = contract_edges(g, range(0, 2 * k, 2))
    assert out.n == k
