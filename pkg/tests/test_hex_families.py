import pytest

from hextile.blocks import build_block
from hextile.hex_families import (
    HexFamilyId,
    build_hex,
    build_labeled,
    family_ids,
    klein_presentation,
    parse_hex_spec,
    predicted_essential,
    predicted_vertex_transitive,
    validate,
)
from hextile.iso import isomorphic
from hextile.surface import HexTiling


def test_id_string_round_trip():
    for text in ("Hr:5,4,2", "Ha:5,4", "Hb:4,3", "Hc:6,4", "Hf:7,4", "Hg:7,4", "Hh:2,4"):
        assert str(parse_hex_spec(text)) == text


@pytest.mark.parametrize("text", ["Hr:5,4", "Ha:5,4,1", "Hx:5,4", "Hr:5,4,-1", "T:5,5,1"])
def test_bad_id_strings(text):
    with pytest.raises(ValueError):
        parse_hex_spec(text)


@pytest.mark.parametrize("fid, ok", [
    (HexFamilyId("R", 5, 4, 3), False),
    (HexFamilyId("R", 5, 1, 1), False),
    (HexFamilyId("B", 5, 3), False),
    (HexFamilyId("C", 5, 1), False),
    (HexFamilyId("F", 5, 1), False),
    (HexFamilyId("G", 3, 3), False),
    (HexFamilyId("H", 3, 4), False),
    (HexFamilyId("H", 2, 4), True),
    (HexFamilyId("G", 4, 3), True),
])
def test_validation(fid, ok):
    assert (validate(fid) is None) == ok
    if not ok:
        with pytest.raises(ValueError):
            build_labeled(fid)


def test_vertex_counts():
    assert HexFamilyId("R", 3, 2, 0).n_vertices == 18
    assert HexFamilyId("F", 7, 4).n_vertices == 84
    assert HexFamilyId("G", 7, 4).n_vertices == 90
    assert HexFamilyId("H", 2, 4).n_vertices == 30


def test_smallest_census_member():
    ids = family_ids(18)
    assert HexFamilyId("R", 3, 2, 0) in ids
    assert all(f.n_vertices <= 18 for f in ids)


def test_block_sizes():
    assert build_block("wall", 4, 3).graph.n == 32
    assert build_block("cylinder", 4, 3).graph.n == 32
    assert build_block("ladder", 7, 4).graph.n == 2 * 5 * 8 - 2  # end rows 2k+1, inner rows 2k+2
    with pytest.raises(ValueError):
        build_block("TC1", 3, 4)


@pytest.mark.parametrize("text", ["Hr:5,4,2", "Ha:5,4", "Hb:4,3", "Hc:6,4", "Hf:7,4", "Hg:7,4", "Hh:2,4", "Hr:7,0,2"])
def test_members_are_tilings(text):
    fid = parse_hex_spec(text)
    t = build_hex(fid)
    assert isinstance(t, HexTiling)
    assert t.n == fid.n_vertices
    assert t.graph.is_regular(3)


def test_degenerate_spiral_with_r_zero_is_not_simple():
    with pytest.raises(ValueError):
        build_hex(HexFamilyId("R", 5, 0, 0))


@pytest.mark.parametrize("text", ["Hc:6,1", "Hc:8,2", "Hf:7,0", "Hf:9,1"])
def test_klein_presentation_matches_native(text):
    fid = parse_hex_spec(text)
    assert isomorphic(klein_presentation(fid).graph, build_hex(fid).graph) is not None


def test_predictions():
    assert predicted_essential(parse_hex_spec("Hr:6,3,1")) == (8, 24)
    assert predicted_essential(parse_hex_spec("Hf:7,4")) == (7, 2)
    assert predicted_essential(parse_hex_spec("Hg:15,3"))[1] is None
    assert predicted_vertex_transitive(parse_hex_spec("Hr:5,2,1"))
    assert predicted_vertex_transitive(parse_hex_spec("Ha:4,3"))
    assert not predicted_vertex_transitive(parse_hex_spec("Ha:4,4"))
