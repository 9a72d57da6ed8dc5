import json

import pytest

from ringlab.cli import main
from ringlab.errors import ParseError, SchemaError, UnknownKind
from ringlab.recipes import build_recipe, parse_recipe_text


def _write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_parse_errors():
    with pytest.raises(ParseError) as err:
        parse_recipe_text("{not json")
    assert err.value.line == 1
    with pytest.raises(SchemaError) as err:
        parse_recipe_text('{"kind":"cayley_tower","base":"Q"}')
    assert err.value.path == "/levels"
    with pytest.raises(UnknownKind):
        parse_recipe_text('{"kind":"mystery"}')


def test_recipe_digest_is_stable():
    r1 = parse_recipe_text('{"kind":"cayley_tower","base":"Q","levels":2}')
    r2 = parse_recipe_text('{"levels":2,"base":"Q","kind":"cayley_tower"}')
    assert r1.digest == r2.digest


def test_build_tower_recipe():
    recipe = parse_recipe_text(
        '{"kind":"cayley_tower","base":"Q","levels":3,"alpha":[-1,-1,-1]}')
    tower = build_recipe(recipe)
    assert [r.dim for r in tower.rings] == [1, 2, 4, 8]


def test_build_command(tmp_path, capsys):
    path = _write(tmp_path, "m2f3.json",
                  {"kind": "matrix_ring", "size": 2,
                   "base": {"kind": "scalar", "ring": "Fp:3"}})
    code, doc = _run(capsys, "build", path)
    assert code == 0
    assert doc["results"]["build"]["size"] == 81
    assert doc["results"]["build"]["associative"] is True


def test_check_command_and_expectations(tmp_path, capsys):
    path = _write(tmp_path, "z4.json", {"kind": "scalar", "ring": "Zn:4"})
    code, doc = _run(capsys, "check", path, "--checks", "simplicity")
    assert code == 0
    assert doc["results"]["simplicity"]["NotSimple"]["witness"]["spanning"] == [0, 2]
    code, _ = _run(capsys, "check", path, "--checks", "simplicity",
                   "--expect", "not-simple")
    assert code == 0
    code, _ = _run(capsys, "check", path, "--checks", "simplicity",
                   "--expect", "simple")
    assert code == 1


def test_witness_reverifies(tmp_path, capsys):
    path = _write(tmp_path, "z4.json", {"kind": "scalar", "ring": "Zn:4"})
    code, doc = _run(capsys, "check", path, "--checks", "simplicity")
    witness = doc["results"]["simplicity"]["NotSimple"]["witness"]["spanning"]
    from ringlab import zmod_ring, ideal_closure
    r4 = zmod_ring(4)
    regenerated = ideal_closure(r4, [r4.element(i) for i in witness])
    assert sorted(regenerated.span.members) == sorted(witness)
    assert not regenerated.span.is_full()


def test_certify_command(tmp_path, capsys):
    path = _write(tmp_path, "frob.json",
                  {"kind": "skew_group_ring", "group": "Z2", "action": "frobenius",
                   "base": {"kind": "scalar", "ring": "F4"}})
    code, doc = _run(capsys, "certify", path)
    assert code == 0
    cert = doc["certificates"][0]
    assert cert["verdict"] == "Simple" and cert["oracle"] == "agrees"


def test_certify_ore_recipe(tmp_path, capsys):
    path = _write(tmp_path, "ore.json",
                  {"kind": "ore_extension",
                   "base": {"kind": "scalar", "ring": "F4"},
                   "sigma": "frobenius", "delta": "zero"})
    code, doc = _run(capsys, "certify", path)
    assert code == 0
    assert doc["certificates"][0]["verdict"] == "SigmaDeltaSimple"


def test_table_command_threshold(tmp_path, capsys):
    path = _write(tmp_path, "z6.json", {"kind": "scalar", "ring": "Zn:6"})
    code, doc = _run(capsys, "table", path)
    assert code == 0 and doc["results"]["table"]["mul"][2][3] == 0
    big = _write(tmp_path, "big.json",
                 {"kind": "matrix_ring", "size": 2,
                  "base": {"kind": "scalar", "ring": "Zn:4"}})
    code, doc = _run(capsys, "table", big)
    assert code == 2 and "error" in doc["results"]["table"]
    code, doc = _run(capsys, "table", big, "--force")
    assert code == 0 and len(doc["results"]["table"]["mul"]) == 256
    alg = _write(tmp_path, "alg.json",
                 {"kind": "dynamics", "points": 3, "group": "Z3",
                  "action": [[0, 1, 2], [1, 2, 0], [2, 0, 1]], "field": "Fp:2"})
    code, doc = _run(capsys, "table", alg)
    assert code == 0 and "basis_products" in doc["results"]["table"]


def test_dynamics_recipe_flags(tmp_path, capsys):
    path = _write(tmp_path, "dyn.json",
                  {"kind": "dynamics", "points": 2, "group": "Z2",
                   "action": [[0, 1], [1, 0]], "field": "Fp:3"})
    code, doc = _run(capsys, "build", path)
    assert code == 0
    assert doc["results"]["build"]["minimal"] is True
    assert doc["results"]["build"]["faithful"] is True
    code, doc = _run(capsys, "certify", path)
    assert code == 0 and doc["certificates"][0]["verdict"] == "Simple"


def test_structure_algebra_recipe_exact_rationals(tmp_path, capsys):
    path = _write(tmp_path, "qi.json",
                  {"kind": "structure_algebra", "field": "Q", "dim": 2,
                   "constants": [[["1", "0"], ["0", "1"]],
                                 [["0", "1"], ["-1/1", "0"]]]})
    code, doc = _run(capsys, "check", path, "--checks", "center,simplicity")
    assert code == 0
    assert doc["results"]["center"]["measure"] == 2
    assert "Inconclusive" in doc["results"]["simplicity"]


def test_missing_recipe_is_usage_error(capsys):
    assert main(["build"]) == 2


def test_out_file_and_text_format(tmp_path, capsys):
    path = _write(tmp_path, "z6.json", {"kind": "scalar", "ring": "Zn:6"})
    out = tmp_path / "report.json"
    code = main(["check", path, "--checks", "simplicity", "--out", str(out)])
    assert code == 0 and out.exists()
    doc = json.loads(out.read_text())
    assert "NotSimple" in doc["results"]["simplicity"]
    code = main(["check", path, "--checks", "simplicity", "--format", "text"])
    text = capsys.readouterr().out
    assert code == 0 and "ringlab report" in text and "NotSimple" in text


def test_timings_flag(tmp_path, capsys):
    path = _write(tmp_path, "z6.json", {"kind": "scalar", "ring": "Zn:6"})
    code, doc = _run(capsys, "build", path)
    assert doc["timings_ms"] is None
    code, doc = _run(capsys, "build", path, "--timings")
    assert doc["timings_ms"]["total"] >= 0


def test_corpus_command_deterministic(capsys):
    code1, out1 = main(["corpus"]), capsys.readouterr().out
    code2, out2 = main(["corpus"]), capsys.readouterr().out
    assert code1 == 0 and code2 == 0
    assert out1 == out2
