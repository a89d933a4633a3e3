import json

import pytest

from hopfg.cli import main
from hopfg.diagram import hopf_link, unknot
from hopfg.labels import Label


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, d):
    p = tmp_path / name
    p.write_text(json.dumps(d.to_json()))
    return str(p)


def test_info(capsys):
    code, out, _ = run(capsys, "info")
    data = json.loads(out)
    assert code == 0
    assert data["field_degree"] == 32 and data["conductor"] == 96
    assert data["piece_dimension"] == 27
    assert out == json.dumps(data, sort_keys=True, indent=2) + "\n"


@pytest.mark.parametrize("argv", [
    ["check", "--r", "4"],
    ["info", "--r", "1"],
    ["info", "--denominator", "0"],
    ["info", "--labels", "1/8"],
    ["info", "--labels", "x"],
    ["eval"],
    ["eval", "/no/such/file"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_eval_identity(capsys):
    code, out, _ = run(capsys, "eval", "--expr", "(id ((0 0)))")
    m = json.loads(out)["map"]
    assert code == 0
    assert m["shape"] == [27, 27]
    assert len(m["entries"]) == 27
    assert all(i == j and e["coeffs"][0] == "1" for i, j, e in m["entries"])


def test_eval_empty_link(capsys, tmp_path):
    p = tmp_path / "empty.json"
    p.write_text(json.dumps({"components": [], "slices": []}))
    code, out, _ = run(capsys, "eval", str(p))
    v = json.loads(out)["value"]
    assert code == 0 and v["approx"] == [1.0, 0.0]


def test_eval_zero_framed_unknot(capsys, tmp_path):
    code, out, _ = run(capsys, "eval", write(tmp_path, "u.json", unknot(0)))
    assert code == 0
    assert json.loads(out)["value"]["approx"] == [0.0, 0.0]


def test_eval_rejects_inadmissible(capsys, tmp_path):
    d = hopf_link(1, [Label("1/2"), Label(0)])
    code, _, err = run(capsys, "eval", write(tmp_path, "h.json", d))
    assert code == 1
    assert "'b'" in err and "admissible" in err


@pytest.mark.parametrize("text, fragment", [
    ("(gen mu 0 0)", "takes 3"),
    ("(compose (gen S 0 0) (gen eta 1/2))", "composition mismatch"),
    ("{\"slices\": [[\"spin\"]]}", "unknown kind"),
    ("{\"slices\": ", "invalid JSON"),
])
def test_eval_rejects_bad_input(capsys, text, fragment):
    code, _, err = run(capsys, "eval", "--expr", text)
    assert code == 1
    assert fragment in err


def test_invariant_with_oracle(capsys, tmp_path):
    out_file = tmp_path / "inv.json"
    code, out, _ = run(capsys, "invariant", write(tmp_path, "h.json", hopf_link(-1)),
                       "--oracle", "--out", str(out_file))
    data = json.loads(out_file.read_text())
    assert code == 0 and out == ""
    assert data["oracle"]["agrees"] is True
    assert data["diagram"]["linking_matrix"] == [[0, -1], [-1, 0]]
    assert data["blow_up_factors"]["+1"]["approx"] == [0.0, -1.0]


def test_invariant_oracle_needs_zero_labels(capsys, tmp_path):
    code, _, err = run(capsys, "invariant", write(tmp_path, "u.json", unknot(0, Label(1))),
                       "--oracle")
    assert code == 1 and "label" in err


def test_rep(capsys):
    code, out, _ = run(capsys, "rep", "--expr", "(compose (gen Sinv 0 0) (gen S 0 0))")
    data = json.loads(out)
    assert code == 0
    assert data["is_identity"] is True
    assert data["trace"]["approx"] == [27.0, 0.0]
    code, _, err = run(capsys, "rep", "--expr", "(gen eta 0)")
    assert code == 1 and "endomorphism" in err


def test_check_small(capsys):
    code, out, _ = run(capsys, "check", "--suite", "derived", "--labels", "1/4",
                       "--tuple-limit", "1", "--basis-limit", "10")
    data = json.loads(out)
    assert code == 0
    assert data["printed_forms"]["axioms"] == ["I6", "R12"]
    code, out, _ = run(capsys, "check", "--suite", "derived", "--labels", "1/4",
                       "--tuple-limit", "1", "--basis-limit", "10", "--strict-printed")
    assert code == 1
    assert json.loads(out)["ok"] is False


def test_output_is_deterministic(capsys):
    a = run(capsys, "check", "--suite", "ribbon", "--labels", "0,1/2", "--tuple-limit", "2",
            "--basis-limit", "2", "--seed", "5")[1]
    b = run(capsys, "check", "--suite", "ribbon", "--labels", "0,1/2", "--tuple-limit", "2",
            "--basis-limit", "2", "--seed", "5")[1]
    assert a == b
