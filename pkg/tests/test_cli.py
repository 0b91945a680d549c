import csv
import io
import json

import pytest

from confext.cli import main

VIR = '{"family":"vir+vir"}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_ext_t1(capsys):
    code, out, _ = run(capsys, "solve-ext", "--algebra", VIR, "--sub", '{"kind":"trivial","eta":"-1"}',
                       "--quot", '{"case":"i","delta":[1,0],"alpha1":"1","beta1":"1"}',
                       "--degrees", "6,8")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"]["finite"] == 1
    assert rep["basis"][0]["fA"] == "L^2"


def test_solve_ext_off_locus(capsys):
    code, out, _ = run(capsys, "solve-ext", "--algebra", VIR, "--sub", '{"kind":"trivial","eta":"-1"}',
                       "--quot", '{"case":"i","delta":[1,0],"alpha1":"1","beta1":"2"}',
                       "--degrees", "6,8")
    assert code == 0 and json.loads(out)["verdict"]["finite"] == 0


def test_solve_ext_trivial_shorthand(capsys):
    code, out, _ = run(capsys, "solve-ext", "--algebra", VIR, "--sub", "trivial:eta=0",
                       "--quot", "trivial:eta=0", "--format", "text")
    assert code == 0 and "verdict: finite 1" in out


def test_solve_ext_csv(capsys):
    code, out, _ = run(capsys, "solve-ext", "--algebra", VIR, "--sub", "trivial:eta=0",
                       "--quot", "trivial:eta=0", "--format", "csv", "--degrees", "2,4")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["N", "dimZ", "dimB", "dimExt"] and len(rows) == 3


@pytest.mark.parametrize("argv,code", [
    (["solve-ext", "--algebra", "{bad", "--sub", "trivial:eta=0", "--quot", "trivial:eta=0"], 2),
    (["solve-ext", "--algebra", VIR, "--sub", "trivial:eta=0", "--quot", "trivial:eta=0",
      "--degrees", "8,6"], 2),
    (["solve-ext", "--algebra", '{"family":"type2","a":"2","c":"1"}', "--sub", "trivial:eta=0",
      "--quot", "trivial:eta=0"], 4),
    (["solve-ext", "--algebra", VIR, "--sub", '{"delta":[1,0],"alpha1":"0"}',
      "--quot", "trivial:eta=0"], 4),
    (["solve-ext", "--algebra", VIR, "--sub", "free:PA=D+2*L,PB=D+L", "--quot", "trivial:eta=0"], 3),
    (["check-axioms", "--algebra",
      '{"family":"custom","bracket":{"AA":{"A":"D+2*L"},"AB":{"B":"(D+2*L)*D"}}}'], 3),
    (["verify-catalog", "--filter", "colour=red"], 2),
])
def test_error_exit_codes_emit_json(capsys, argv, code):
    got, out, _ = run(capsys, *argv)
    assert got == code
    json.loads(out)  # reports stay valid JSON on failure paths


def test_usage_error_is_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve-ext", "--algebra", VIR])
    assert exc.value.code == 2
    assert json.loads(capsys.readouterr().out)["exit_code"] == 2


def test_check_axioms_pass(capsys):
    code, out, _ = run(capsys, "check-axioms", "--algebra", '{"family":"type2","a":"-4","c":"1"}',
                       "--module", '{"alpha":"2","beta":"1"}')
    assert code == 0 and json.loads(out)["pass"]


def test_lemmas(capsys):
    code, out, _ = run(capsys, "lemma", "rankfactor", "--F", "L*M^2-L^2*M")
    rep = json.loads(out)
    assert code == 0 and rep["rank"] == 2 and rep["P1"] and rep["P2"]
    code, out, _ = run(capsys, "lemma", "zero", "--a", "1", "--abar", "1", "--b", "0",
                       "--bbar", "0", "--N", "5")
    assert json.loads(out)["dim"] == 0
    code, out, _ = run(capsys, "lemma", "twisted", "--a", "L", "--b", "2*L", "--N", "3")
    rep = json.loads(out)
    assert rep["residuals_zero"] and rep["agree"] and rep["basis"]
    code, out, _ = run(capsys, "lemma", "pair", "--a", "L", "--b", "L^2")
    assert json.loads(out)["agree"]
    code, out, _ = run(capsys, "lemma", "bilinear", "--a", "L", "--F", "L*M^2-L^2*M")
    assert json.loads(out)["agree"]


def test_verify_catalog_filtered(capsys):
    code, out, _ = run(capsys, "verify-catalog", "--filter", "shape=T2,family=solvable")
    doc = json.loads(out)
    assert code == 0 and doc["summary"]["entries"] == 1
    assert doc["reports"][0]["claimed_dim"] == 0 and doc["reports"][0]["pass"]


def test_verify_catalog_failure_exit_5(capsys):
    code, out, err = run(capsys, "verify-catalog", "--filter", "id=S5.T3.case2")
    assert code == 5 and "S5.T3.case2" in err
    assert json.loads(out)["summary"]["failed_ids"] == ["S5.T3.case2"]


def test_dump_catalog_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "dump-catalog")
    path = tmp_path / "cat.json"
    path.write_text(out, encoding="utf-8")
    code, again, _ = run(capsys, "dump-catalog", "--catalog", str(path))
    assert code == 0 and again == out
    code, out, _ = run(capsys, "dump-catalog", "--filter", "a=-4")
    assert len(json.loads(out)["entries"]) == 11
