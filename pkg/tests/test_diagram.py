import json

import pytest

from hopfg.diagram import (DiagramError, LinkDiagram, admissible_labels, braid_closure,
                           check_admissible, curl, empty, hopf_link, unknot, with_labels)
from hopfg.labels import Label


@pytest.mark.parametrize("f", [-2, -1, 0, 1, 3])
def test_unknot_framing(f):
    assert unknot(f).linking_matrix() == [[f]]
    assert unknot(f, left_curls=True).linking_matrix() == [[f]]


@pytest.mark.parametrize("sign", [1, -1])
def test_hopf_link(sign):
    d = hopf_link(sign)
    assert d.tags == ["a", "b"]
    assert d.linking_matrix() == [[0, sign], [sign, 0]]


def test_trefoil_is_one_component():
    d = braid_closure(2, [1, 1, 1])
    assert d.tags == ["a"]
    assert d.linking_matrix() == [[3]]


def test_crossing_signs_follow_orientation():
    d = hopf_link(1)
    assert {v[4] for v in d.crossings().values()} == {1}
    flipped = d.copy(reversed_={"b": True})
    assert {v[4] for v in flipped.crossings().values()} == {-1}
    assert flipped.linking_matrix() == [[0, -1], [-1, 0]]


def test_curl_writhe():
    d = LinkDiagram([("cup", 0, "a")] + curl(1, -1, "a", left=True) + [("cap", 0)], {"a": 0})
    assert d.linking_matrix() == [[-1]]


def test_admissibility_report():
    d = hopf_link(1, [Label("1/2"), Label(0)])
    rep = check_admissible(d)
    assert not rep["ok"]
    assert rep["first_failure"] == "b"
    assert [c["sum"] for c in rep["components"]] == ["0", "1/2"]
    assert check_admissible(with_labels(d, [0, 0]))["ok"]


def test_admissible_labels_of_framed_unknot():
    labs = admissible_labels(unknot(2), 4)
    assert {x[0] for x in labs} == {Label(0), Label(1)}


def test_json_round_trip():
    d = hopf_link(-1).copy(labels={"a": Label(0), "b": Label(0)}, reversed_={"a": True})
    js = json.loads(json.dumps(d.to_json()))
    back = LinkDiagram.from_json(js)
    assert back.events == d.events
    assert back.linking_matrix() == d.linking_matrix()
    assert back.reversed.get("a") is True
    assert set(js["pd"]) >= {"components", "crossings"}


def test_json_integer_component_refs():
    data = {"components": [{"tag": "x", "label": "1/2"}],
            "slices": [["cup", 0, 0], ["cap", 0]]}
    d = LinkDiagram.from_json(data)
    assert d.tags == ["x"] and d.label("x") == Label("1/2")


@pytest.mark.parametrize("data, fragment", [
    ({}, "slices"),
    ({"slices": [["spin", 0]]}, "unknown kind"),
    ({"components": [{"tag": "a"}], "slices": [["cup", 0, 3], ["cap", 0]]}, "out of range"),
    ({"components": [{"tag": "a"}], "slices": [["cup", 0, "z"], ["cap", 0]]}, "undeclared"),
])
def test_json_errors(data, fragment):
    with pytest.raises(DiagramError, match=fragment):
        LinkDiagram.from_json(data)


def test_pd_block_must_match():
    js = hopf_link(1).to_json()
    js["pd"]["crossings"][0]["sign"] *= -1
    with pytest.raises(DiagramError, match="pd"):
        LinkDiagram.from_json(js)


def test_unbalanced_word_rejected():
    with pytest.raises(DiagramError):
        LinkDiagram([("cup", 0, "a")], {"a": 0}).trace()


def test_empty():
    assert empty().tags == [] and empty().linking_matrix() == []
