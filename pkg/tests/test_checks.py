from hopfg.checks import Checker, label_tuples, representative_audit
from hopfg.diagram import unknot
from hopfg.expr import parse_expr
from hopfg.labels import Label, label_sample

SMALL = [Label(0), Label("1/4"), Label("3/2")]


def test_label_tuples_cover_every_slot():
    L = label_sample(4)
    ts = label_tuples(L, 3, limit=16, seed=0)
    assert len(ts) == 16
    for slot in range(3):
        assert {t[slot] for t in ts} == set(L)
    assert len(label_tuples(L[:2], 2, limit=16)) == 4


def test_hopf_axioms_small(H3):
    rep = Checker(H3, SMALL, tuple_limit=4, basis_limit=4).run(
        ["H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "H9"])
    assert rep.ok, rep.failures[:1]
    assert set(rep.checked) == {f"H{i}" for i in range(1, 10)}


def test_ribbon_axioms_small(H3):
    rep = Checker(H3, SMALL, tuple_limit=4, basis_limit=4).run(
        ["R1", "R2", "R3", "R4", "R5", "R6", "R7"])
    assert rep.ok, rep.failures[:1]


def test_printed_forms_are_reported(H3):
    rep = Checker(H3, [Label("1/4")], tuple_limit=2, basis_limit=3).run(["R12", "I6"])
    assert rep.failed_axioms() == {"R12", "I6"}
    assert rep.checked["R12c"] > 0 and rep.checked["I6c"] > 0
    js = rep.to_json()
    status = {a["axiom"]: a["pass"] for a in js["axioms"]}
    assert status == {"R12": False, "R12c": True, "I6": False, "I6c": True}
    f = js["failures"][0]
    assert set(f) == {"axiom", "kind", "labels", "witness", "lhs", "rhs"}


def test_factorizability(H3):
    halves = [Label(x) for x in ("0", "1/2", "1", "3/2")]
    rep = Checker(H3, halves).run(["I4", "I5"])
    assert rep.ok
    assert rep.checked["I5"] >= 4


def test_representative_audit_small(H3, H3_shifted):
    rep = representative_audit(H3, H3_shifted, [Label(0), Label("3/4")], basis_limit=3,
                               words=[parse_expr("(gen S 3/4 1/4)")],
                               diagrams=[unknot(0, Label("1/2"))])
    assert rep.ok, rep.failures[:1]
    assert rep.checked["evaluator"] == 27
    assert rep.checked["link"] == 1
