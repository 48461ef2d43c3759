import json

import pytest

from galoispoints import bounds as bounds_mod
from galoispoints.cli import main
from galoispoints.curvefile import load_curve, parse_curve_text
from galoispoints.algebra.parse import ParseError
from galoispoints.report import dumps, loads


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_fermat(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "fermat", "--p", "3", "--e", "1")
    r = json.loads(out)
    assert code == 0
    assert (r["curve"]["d"], r["curve"]["g"], r["curve"]["M"]) == (4, 3, 3)
    assert r["dual"]["d_star"] == 4
    assert r["schema"] == 1 and r["config"]["k_max"] == 4 and r["config"]["trials"] == 7


def test_analyze_bh(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "ballico-hefez", "--p", "3", "--e", "1")
    r = json.loads(out)
    assert (r["curve"]["d"], r["curve"]["g"], r["curve"]["M"]) == (4, 0, 3)
    assert r["dual"]["d_star"] == 2
    assert len(r["singular"]["points"]) == 3


def test_missing_file(capsys):
    code, _, err = run(capsys, "analyze", "--curve-file", "missing.txt")
    assert code == 2 and "missing.txt" in err


def test_galois_fermat(capsys):
    code, out, _ = run(capsys, "galois", "--family", "fermat", "--p", "3", "--e", "1", "--kmax", "2")
    s = json.loads(out)["survey"]
    assert code == 0 and (s["delta"], s["delta_s"], s["complete"]) == (28, 0, True)


def test_galois_bh(capsys):
    code, out, _ = run(capsys, "galois", "--family", "ballico-hefez", "--p", "3", "--e", "1")
    s = json.loads(out)["survey"]
    assert (s["delta"], s["delta_s"]) == (4, 3)


def test_galois_cuspidal(capsys):
    code, out, _ = run(capsys, "galois", "--family", "cuspidal", "--p", "5", "--d", "4",
                       "--seed", "1")
    assert json.loads(out)["survey"]["delta"] <= 2


def test_bounds_fermat(capsys):
    code, out, _ = run(capsys, "bounds", "--family", "fermat", "--p", "3", "--e", "1")
    r = json.loads(out)
    main_rec = next(b for b in r["bounds"] if b["name"] == "main-bound")
    assert (main_rec["lhs"], main_rec["rhs"], main_rec["equality"]) == (28, 28, True)
    assert r["classification"]["kind"] == "fermat-type" and code == 0


def test_bounds_bh(capsys):
    code, out, _ = run(capsys, "bounds", "--family", "ballico-hefez", "--p", "3", "--e", "1")
    recs = {b["name"]: b for b in json.loads(out)["bounds"]}
    assert recs["main-bound"]["equality"] and recs["with-singular-bound"]["equality"]
    assert (recs["with-singular-bound"]["lhs"], recs["with-singular-bound"]["rhs"]) == (7, 7)


def test_bounds_random_strict(capsys):
    code, out, _ = run(capsys, "bounds", "--family", "random-smooth", "--p", "7", "--d", "4",
                       "--seed", "5", "--kmax", "2")
    r = json.loads(out)
    assert code == 0
    assert all(b["holds"] and not b["equality"] for b in r["bounds"])


def test_json_round_trip(capsys):
    _, out, _ = run(capsys, "bounds", "--family", "ballico-hefez", "--p", "3", "--e", "1")
    assert dumps(loads(out)) == out
    for key in ("schema", "config", "curve", "survey", "bounds", "completeness"):
        assert key in loads(out)
    for key in ("d", "p", "k", "g", "M"):
        assert key in loads(out)["curve"]


def test_tsv_and_text(capsys):
    _, out, _ = run(capsys, "galois", "--family", "ballico-hefez", "--p", "3", "--format", "tsv")
    assert "survey.delta\t4" in out.splitlines()
    _, out, _ = run(capsys, "galois", "--family", "ballico-hefez", "--p", "3", "--format", "text")
    assert "delta=4 delta_s=3" in out


def test_incomplete_survey_exit(capsys):
    code, out, _ = run(capsys, "galois", "--family", "fermat", "--p", "2", "--e", "2",
                       "--kmax", "2", "--search-k", "1")
    assert code == 3 and json.loads(out)["survey"]["complete"] is False


def test_undetermined_genus_exit(tmp_path, capsys):
    f = tmp_path / "triple.txt"
    f.write_text("field 5 1\nimplicit X^3*Z - X^4 - Y^4 - 2*X*Y^3\n")
    code, _, err = run(capsys, "bounds", "--curve-file", str(f), "--kmax", "2")
    assert code == 4 and "genus" in err
    code, _, _ = run(capsys, "analyze", "--curve-file", str(f), "--kmax", "2")
    assert code == 4


def test_alarm_exit(monkeypatch, capsys):
    # plumbing only: force a violated record and check the exit code
    real = bounds_mod.main_theorem_check

    def broken(s):
        r = real(s)
        return bounds_mod._record(r.name, r.rhs + 1, r.rhs, True)

    monkeypatch.setattr(bounds_mod, "main_theorem_check", broken)
    code, out, _ = run(capsys, "bounds", "--family", "ballico-hefez", "--p", "3")
    assert code == 5 and json.loads(out)["alarm"] is True


def test_bad_arguments(capsys):
    with pytest.raises(SystemExit) as e:
        main(["galois", "--family", "fermat"])
    assert e.value.code == 2
    code, _, _ = run(capsys, "galois", "--family", "fermat", "--p", "2", "--e", "1")
    assert code == 2


def test_curve_file_formats(tmp_path):
    f = tmp_path / "bh.txt"
    f.write_text("# Ballico-Hefez quartic\nfield 3 1\nparam s^4 ; (s+t)^4 ; t^4\ngenus 0\n")
    C = load_curve(f)
    assert C.is_parametrized and C.degree == 4
    D = parse_curve_text("field 3 1\nimplicit X^4 + Y^4 + Z^4\ngenus 3\n")
    assert D.degree == 4 and D.declared_genus == 3


@pytest.mark.parametrize("text,line,col", [
    ("field 3 1\nimplicit X^4 + Y^4 + $", 2, 22),
    ("field 6 1\nimplicit X", 1, 7),
    ("implicit X^2", 1, 1),
    ("field 3 1\nparam s^4 ; t^4", 2, 7),
    ("field 3 1\nsurface X", 2, 1),
    ("field 3 1\nimplicit X*Y", 2, 10),
])
def test_curve_file_errors(text, line, col):
    with pytest.raises(ParseError) as e:
        parse_curve_text(text)
    assert (e.value.line, e.value.pos + 1) == (line, col)


def test_reports_are_deterministic(capsys):
    argv = ("galois", "--family", "cuspidal", "--p", "5", "--d", "4", "--seed", "1", "--kmax", "2")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
