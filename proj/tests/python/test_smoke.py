import json
import os
from pathlib import Path

import pytest

import pyisotree

FIXTURES = Path(os.environ.get("ISOTREE_FIXTURE_DIR", Path(__file__).parent.parent / "fixtures"))


def fixture(name):
    return (FIXTURES / name).read_text()


def test_peak_tree():
    sg = pyisotree.load_graph_json(fixture("peak.json"))
    tree = pyisotree.build_iso_tree(sg)
    assert [z["value"] for z in tree.zones] == [1, 3, 0]
    assert [(e["low"], e["up"], e["gap"]) for e in tree.edges] == [("a", "b", 2), ("c", "b", 3)]
    assert tree.reconstruct() == sg.values
    assert tree == pyisotree.build_iso_tree(sg, engine="oracle")


def test_plateau_reduces():
    sg = pyisotree.ScalarGraph(["a", "b", "c"], [0, 0, 1], [("a", "b"), ("b", "c")])
    tree = pyisotree.build_iso_tree(sg)
    assert tree.zones[0]["sites"] == ["a", "b"]
    assert tree.zone_of("b") == "a"
    assert len(pyisotree.build_iso_tree(sg, reduce=False).zones) == 3


def test_json_round_trips():
    sg = pyisotree.gen_tri_grid(3, 3, seed=4, lo=0, hi=3)
    assert pyisotree.load_graph_json(sg.to_json()) == sg
    tree = pyisotree.build_iso_tree(sg)
    doc = tree.to_json()
    assert pyisotree.load_tree_json(sg, doc).to_json() == doc
    assert json.loads(doc)["referenceValue"] == sg.values[0]
    assert tree.to_dot().startswith("digraph isotree {")


def test_mono_connectivity():
    assert pyisotree.is_mono_connected(pyisotree.gen_tri_grid(3, 4)) == (True, None)
    c4 = pyisotree.load_graph_json(fixture("c4.json"))
    assert pyisotree.is_mono_connected(c4) == (False, (["a"], ["b", "c", "d"]))


def test_level_cuts_and_validation():
    sg = pyisotree.gen_path(3, values=[0, 1, 2])
    assert pyisotree.level_cuts(sg) == [(["p0"], 1), (["p0", "p1"], 1)]
    tree_doc = pyisotree.build_iso_tree(sg).to_json()
    assert pyisotree.validate_division(sg, tree_doc) == []
    bad = json.dumps({"cuts": [{"low": ["p0"], "gap": 1}, {"low": ["p1", "p2"], "gap": 1}]})
    assert pyisotree.validate_division(sg, bad) == [("tangent", 0, 1)]


def test_pgm():
    raw = (FIXTURES / "square_raw.pgm").read_bytes()
    sg = pyisotree.load_pgm(raw)
    assert sg.sites == ["r0c0", "r0c1", "r1c0", "r1c1"]
    assert sg.values == [0, 0, 0, 1]


def test_errors():
    with pytest.raises(pyisotree.ParseError):
        pyisotree.load_graph_json("{")
    with pytest.raises(pyisotree.ValidationError):
        pyisotree.load_graph_json('{"sites": []}')
    split = pyisotree.ScalarGraph(["a", "b"], [0, 1], [])
    with pytest.raises(pyisotree.PreconditionError):
        pyisotree.build_iso_tree(split)
    with pytest.raises(pyisotree.IsoTreeError):
        pyisotree.is_mono_connected(pyisotree.gen_path(20))
