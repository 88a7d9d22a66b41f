import pytest
from hypothesis import given, settings, strategies as st

from conftest import cycle_graph
from hextile.grid_families import (
    GridFamilyId,
    build_grid,
    grid_dual,
    grid_ids,
    identify_grid,
    is_locally_grid,
    parse_grid_spec,
    validate_grid,
)
from hextile.iso import isomorphic


def g(text):
    return build_grid(parse_grid_spec(text)).graph


def test_id_string_round_trip():
    for text in ("T:6,5,2", "K0:6,5", "K1:5,5", "K2:6,5", "S:4,9"):
        assert str(parse_grid_spec(text)) == text


def test_bad_id_strings():
    for text in ("T:6,5", "K0:6,5,1", "Q:5,5"):
        with pytest.raises(ValueError):
            parse_grid_spec(text)


def test_torus_example():
    t = g("T:5,5,0")
    assert t.n == 25 and t.is_regular(4)
    assert is_locally_grid(t)


def test_ranges():
    assert validate_grid(GridFamilyId("K2", 12, 3)) is not None
    assert validate_grid(GridFamilyId("S", 4, 9)) is None
    assert validate_grid(GridFamilyId("T", 6, 1, 4)) is not None  # 4 is not below p/2
    with pytest.raises(ValueError):
        build_grid(GridFamilyId("K1", 6, 5))


@pytest.mark.parametrize("text", ["T:6,5,2", "T:7,4,1", "K0:6,5", "K1:7,5", "K2:6,5", "S:5,9", "S:9,6", "S:6,6"])
def test_families_are_locally_grid(text):
    assert is_locally_grid(g(text))


def test_small_parameters_fail_the_local_test():
    k2 = build_grid(GridFamilyId("K2", 12, 3), check=False).graph
    assert not is_locally_grid(k2)
    assert not is_locally_grid(cycle_graph(6))


def test_duals_of_worked_examples():
    assert isomorphic(grid_dual(g("T:6,5,2")), g("T:6,5,2")) is not None
    assert isomorphic(grid_dual(g("K0:6,5")), g("K2:6,5")) is not None
    assert isomorphic(grid_dual(grid_dual(g("K0:6,5"))), g("K0:6,5")) is not None


def test_identify():
    assert str(identify_grid(g("K2:6,5"))) == "K2:6,5"
    assert identify_grid(cycle_graph(6)) is None


def test_scan_order():
    ids = grid_ids(30)
    order = {f: i for i, f in enumerate(("T", "K0", "K1", "K2", "S"))}
    keys = [(order[x.family], x.p, x.delta or 0) for x in ids]
    assert keys == sorted(keys)
    assert all(validate_grid(x) is None for x in ids)


def test_valid_ids_build_locally_grid_graphs():
    bad = [str(x) for n in range(5, 61) for x in grid_ids(n) if not is_locally_grid(build_grid(x).graph)]
    assert bad == []


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([x for n in range(25, 61) for x in grid_ids(n) if is_locally_grid(build_grid(x).graph)]))
def test_self_duality_property(gid):
    h = build_grid(gid).graph
    d = grid_dual(h)
    assert d.n == h.n and d.is_regular(4)
    want = {"K0": "K2", "K2": "K0"}.get(gid.family, gid.family)
    ref = build_grid(GridFamilyId(want, gid.p, gid.q, gid.delta), check=False).graph
    assert isomorphic(d, ref) is not None
