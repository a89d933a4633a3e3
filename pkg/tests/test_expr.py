import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfg.expr import ExprError, infer, obj_json, parse_expr, to_text, typecheck
from hopfg.labels import Label


def test_parse_and_print_round_trip():
    text = "(compose (gen mu 1/2 0 1/4) (tensor (gen eta 1/2) (id ((1/2 1/4)))))"
    e = parse_expr(text)
    assert parse_expr(to_text(e)) == e
    s, t = infer(e)
    assert obj_json(s) == [["1/2", "1/4"]]
    assert obj_json(t) == [["1/2", "1/4"]]


def test_labels_read_mod_two():
    assert parse_expr("(gen v 5/2)") == parse_expr("(gen v 1/2)")


@pytest.mark.parametrize("text, fragment", [
    ("", "empty input"),
    ("(id ((0 0))", "unclosed"),
    ("(id ((0 0))))", "unexpected ')'"),
    ("(gen foo 0)", "unknown generator kind"),
    ("(gen mu 0 0)", "takes 3 label"),
    ("(gen v x)", "bad label"),
    ("(id (0 0))", "pairs"),
    ("(frob 1)", "unknown form"),
])
def test_syntax_errors(text, fragment):
    with pytest.raises(ExprError, match=re.escape(fragment)):
        parse_expr(text)


def test_syntax_error_position():
    with pytest.raises(ExprError) as info:
        parse_expr("(compose\n  (gen bad 0) (id ()))")
    assert info.value.line == 2


def test_type_error_names_node():
    rep = typecheck(parse_expr("(compose (gen S 0 0) (gen eta 1/2))"))
    assert not rep.ok
    assert "root" in rep.error
    assert "1/2" in rep.error


def test_typecheck_report():
    rep = typecheck(parse_expr("(tensor (gen v 1/2) (gen lambda 0))"))
    assert rep.ok
    js = rep.to_json()
    assert js["source"] == [["0", "0"]]
    assert js["target"] == [["1/2", "3/2"]]
    assert {n["node"] for n in js["nodes"]} == {"root", "root.left", "root.right"}


def test_braid_signature():
    e = parse_expr("(braid ((0 1/4)) ((1/2 0) (1 1)))")
    s, t = infer(e)
    assert t == s[1:] + s[:1]


lab = st.sampled_from(["0", "1/4", "1/2", "3/4", "1", "5/4", "3/2", "7/4"])


@settings(max_examples=50)
@given(lab, lab, lab)
def test_delta_then_mu_types(a, b, c):
    e = parse_expr(f"(compose (gen mu {a} {b} {b}) (gen delta {a} {a} {b}))")
    s, t = infer(e)
    A, B = Label(a), Label(b)
    assert s == ((A + A, B),)
    assert t == ((A, B + B),)
