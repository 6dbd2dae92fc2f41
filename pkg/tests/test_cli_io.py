"""Certificate documents and the command line driver, run in process."""
import json

import pytest

from schurlab.cli_io import (FAIL, PASS, PROBED, SCHEMA, UNRESOLVED,
                             canonical_json, claim, exit_code_for,
                             instance_digest, main, overall_status,
                             parse_field, parse_symmetric)
from schurlab.errors import PreconditionError
from schurlab.exact_math import QQ

HEXAD = {"field": {"type": "rational"},
         "points": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"],
                    ["1", "1", "1"], ["1", "2", "3"], ["1", "4", "9"]]}
SIX_LINES = {"field": {"type": "rational"},
             "lines": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"],
                       ["1", "1", "1"], ["1", "2", "3"], ["1", "4", "9"]]}
TRIANGLE_MAPS = [[["1", "0"], ["0", "0"], ["0", "0"]],
                 [["0", "0"], ["0", "1"], ["0", "0"]],
                 [["0", "0"], ["0", "0"], ["1", "-1"]]]


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_canonical_json_sorted_and_stable():
    a = canonical_json({"b": 1, "a": [2, 3]})
    b = canonical_json({"a": [2, 3], "b": 1})
    assert a == b == '{"a":[2,3],"b":1}\n'
    assert instance_digest({"x": 1}) == instance_digest({"x": 1})
    assert instance_digest({"x": 1}) != instance_digest({"x": 2})


def test_status_aggregation():
    assert overall_status([claim("a", PASS)]) == PASS
    assert overall_status([claim("a", PASS), claim("b", PROBED)]) == PROBED
    assert overall_status([claim("a", UNRESOLVED), claim("b", PROBED)]) == UNRESOLVED
    assert overall_status([claim("a", FAIL), claim("b", UNRESOLVED)]) == FAIL
    assert exit_code_for([claim("a", PASS)]) == 0
    assert exit_code_for([claim("a", PROBED)]) == 0
    assert exit_code_for([claim("a", UNRESOLVED)]) == 4
    assert exit_code_for([claim("a", FAIL)]) == 3


def test_parse_field_errors():
    assert parse_field({"type": "rational"}).s is None
    assert parse_field({"type": "quadratic", "s": 5}).s == 5
    with pytest.raises(PreconditionError):
        parse_field({"type": "real"})
    with pytest.raises(PreconditionError):
        parse_field({"type": "quadratic"})
    with pytest.raises(PreconditionError):
        parse_symmetric(QQ, [["1", "2"], ["3", "4"]])


def test_cubic_full_pass(tmp_path, capsys):
    code, out = run(["cubic", "--in", write(tmp_path, "h.json", HEXAD),
                     "--format", "structured"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == SCHEMA
    assert doc["status"] == PROBED
    statuses = {c["id"]: c["status"] for c in doc["claims"]}
    assert statuses["support-is-hexad"] == PASS
    assert statuses["polarity-routes-agree"] == PASS
    assert statuses["monad-exactness"] == PROBED
    assert len(doc["claims"]) == 19


def test_cubic_deterministic_output(tmp_path, capsys):
    path = write(tmp_path, "h.json", HEXAD)
    _, first = run(["cubic", "--in", path, "--format", "structured"], capsys)
    _, second = run(["cubic", "--in", path, "--format", "structured"], capsys)
    assert first == second


def test_cubic_collinear_rejected(tmp_path, capsys):
    bad = dict(HEXAD)
    bad["points"] = [["1", "0", "0"], ["0", "1", "0"], ["1", "1", "0"],
                     ["1", "1", "1"], ["1", "2", "3"], ["1", "4", "9"]]
    code, out = run(["cubic", "--in", write(tmp_path, "bad.json", bad)], capsys)
    assert code == 2
    assert "collinear" in out


def test_cubic_coconic_rejected(tmp_path, capsys):
    bad = dict(HEXAD)
    bad["points"] = [["1", "0", "0"], ["1", "1", "1"], ["1", "2", "4"],
                     ["1", "3", "9"], ["1", "4", "16"], ["0", "0", "1"]]
    code, out = run(["cubic", "--in", write(tmp_path, "cc.json", bad)], capsys)
    assert code == 2
    assert "conic" in out


def test_logbundle_pass(tmp_path, capsys):
    code, out = run(["logbundle", "--in",
                     write(tmp_path, "l.json", SIX_LINES),
                     "--format", "structured"], capsys)
    assert code == 0
    doc = json.loads(out)
    statuses = {c["id"]: c["status"] for c in doc["claims"]}
    assert statuses["dimensions"] == PASS
    assert statuses["dual-points-jump"] == PASS
    assert statuses["support-is-dual-points"] == PASS


def test_logbundle_too_few_lines(tmp_path, capsys):
    doc = {"field": {"type": "rational"},
           "lines": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}
    code, _ = run(["logbundle", "--in", write(tmp_path, "t.json", doc)], capsys)
    assert code == 2


def test_monad_auto_form(tmp_path, capsys):
    doc = {"field": {"type": "rational"}, "maps": TRIANGLE_MAPS}
    code, out = run(["monad", "--in", write(tmp_path, "m.json", doc),
                     "--format", "structured"], capsys)
    assert code == 0
    parsed = json.loads(out)
    statuses = {c["id"]: c["status"] for c in parsed["claims"]}
    assert statuses["form-selected"] == PASS
    assert statuses["support-resolution"] == PASS


def test_monad_non_symmetric_form(tmp_path, capsys):
    doc = {"field": {"type": "rational"}, "maps": TRIANGLE_MAPS,
           "form": [["1", "0", "0"], ["1", "1", "0"], ["0", "0", "1"]]}
    code, out = run(["monad", "--in", write(tmp_path, "m.json", doc)], capsys)
    assert code == 2
    assert "symmetric" in out


def test_monad_incompatible_form(tmp_path, capsys):
    doc = {"field": {"type": "rational"}, "maps": TRIANGLE_MAPS,
           "form": [["1", "1", "0"], ["1", "2", "0"], ["0", "0", "1"]]}
    code, out = run(["monad", "--in", write(tmp_path, "m.json", doc)], capsys)
    assert code == 3
    assert "FAIL" in out


def test_monad_unresolved_support(tmp_path, capsys):
    doc = {"field": {"type": "rational"},
           "maps": [[["1", "1"], ["-2", "0"], ["2", "1"]],
                    [["1", "0"], ["1", "0"], ["2", "-1"]],
                    [["2", "-1"], ["0", "-1"], ["-2", "2"]]]}
    code, out = run(["monad", "--in", write(tmp_path, "m.json", doc)], capsys)
    assert code == 4
    assert "UNRESOLVED" in out


def test_example_commands(capsys):
    code, out = run(["example", "--name", "triangle"], capsys)
    assert code == 0 and "overall: pass" in out
    code, out = run(["example", "--name", "nosuch"], capsys)
    assert code == 2
    code, out = run(["example"], capsys)
    assert code == 2


def test_missing_input(capsys):
    code, out = run(["cubic"], capsys)
    assert code == 2
    assert "--in" in out


def test_atomic_out_file(tmp_path, capsys):
    target = tmp_path / "cert.json"
    code = main(["monad", "--in",
                 str(write_doc(tmp_path)), "--out", str(target),
                 "--format", "structured"])
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["command"] == "monad"


def write_doc(tmp_path):
    path = tmp_path / "triangle_monad.json"
    path.write_text(json.dumps({"field": {"type": "rational"},
                                "maps": TRIANGLE_MAPS}))
    return path
