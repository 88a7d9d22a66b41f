import json

import pytest

from conftest import petersen, shuffled
from hextile.analysis import census, check_duality, invariants, isomorphism_classes, recognize
from hextile.hex_families import build_hex, family_ids, parse_hex_spec


def inv(spec):
    return invariants(build_hex(parse_hex_spec(spec)))


def test_smallest_torus_member():
    r = inv("Hr:3,2,0")
    assert (r.N, r.girth, r.orientable, r.h1_shape) == (18, 6, True, (2, ()))
    assert (r.l_G, r.essential_count, r.chi, r.vertex_transitive) == (6, 12, 2, True)


def test_klein_member():
    r = inv("Hf:7,4")
    assert not r.orientable and r.h1_shape == (1, (2,))
    assert (r.l_G, r.essential_count, r.chi) == (7, 2, 3)
    assert r.vertex_transitive is False


def test_report_lines():
    lines = inv("Ha:4,3").lines()
    assert "h1=Z^1+Z2" in lines and "orientable=false" in lines and "N=32" in lines


def test_small_cap_is_reported():
    r = invariants(build_hex(parse_hex_spec("Hr:6,3,1")), cap=6)
    assert r.l_G is None and r.cap_exceeded == 6
    assert "cap_exceeded=6" in r.lines()


@pytest.mark.parametrize("seed", [1, 2])
def test_invariants_ignore_labels(seed):
    from hextile.surface import certify_tiling

    t = build_hex(parse_hex_spec("Hc:6,2"))
    a = invariants(t)
    b = invariants(certify_tiling(shuffled(t.graph, seed)[0]))
    assert a == b


@pytest.mark.parametrize("spec", ["Hr:5,4,2", "Hc:6,2", "Hf:7,4", "Ha:6,3"])
def test_recognize_round_trip(spec):
    fid = parse_hex_spec(spec)
    res = recognize(shuffled(build_hex(fid).graph, 7)[0])
    assert res and res.fid == fid


def test_recognize_returns_first_isomorphic_id():
    # Hg:7,4 and Hf:9,3 are isomorphic; F comes first in scan order
    res = recognize(shuffled(build_hex(parse_hex_spec("Hg:7,4")).graph, 7)[0])
    assert str(res.fid) == "Hf:9,3"


def test_recognize_mapping_is_isomorphism():
    fid = parse_hex_spec("Hh:2,4")
    g = shuffled(build_hex(fid).graph, 3)[0]
    res = recognize(g)
    h = build_hex(res.fid).graph
    assert sorted(tuple(sorted((res.mapping[u], res.mapping[v]))) for u, v in g.edges) == sorted(
        tuple(sorted(e)) for e in h.edges
    )


def test_recognize_rejects_non_tilings():
    res = recognize(petersen())
    assert not res and "not a hexagonal tiling" in res.reason


def test_duality_check():
    ok, multi, back = check_duality(build_hex(parse_hex_spec("Hr:5,4,1")))
    assert ok and multi == [] and back


def test_isomorphism_classes_small():
    cross, alias = isomorphism_classes(family_ids(40))
    assert isinstance(cross, list) and isinstance(alias, list)


def test_census_small():
    rep = census(30, iso_max_n=30)
    assert {r.fid for r in rep.records} == {str(f) for f in family_ids(30)}
    assert any(r.certified for r in rep.records)
    data = json.loads(rep.to_json())
    assert data["max_n"] == 30 and len(data["records"]) == len(rep.records)
    assert rep.lines()[0].startswith("census max_n=30")


def test_census_bound():
    with pytest.raises(ValueError):
        census(10)
