import json

import pytest

from app.main import EXIT_FAIL, EXIT_OK, EXIT_USAGE, run

PARAMS = "a=1/2,b=1/3,g=1/4,d=1/5,t=1/2"


def test_rst_count(capsys):
    assert run(["rst", "count", "--mu", "bb"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "8"


def test_rst_count_json(capsys):
    assert run(["rst", "count", "--mu", "bb", "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"word": "bb", "count": 8}


def test_poly_R_text(capsys):
    assert run(["poly", "R", "--mu", "os"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "beta*t^2 + beta*gamma*t + gamma*t + gamma*delta"


def test_poly_is_deterministic(capsys):
    run(["poly", "Ztilde", "--n", "2", "--r", "1", "--json"])
    first = capsys.readouterr().out
    run(["poly", "Ztilde", "--n", "2", "--r", "1", "--json"])
    assert capsys.readouterr().out == first


@pytest.mark.parametrize(
    "argv",
    [
        ["nope"],
        ["rst", "count"],
        ["rst", "count", "--mu", "bxq"],
        ["rst", "count", "--mu", ""],
        ["rst", "list", "--mu", "  "],
        ["poly", "R", "--mu", ""],
        ["koorn", "F", "--mu", ""],
        ["rst", "count", "--mu", "bb", "--tableau", "..."],
        ["rst", "weight", "--mu", "bb", "--tableau", "{not json"],
        ["rst", "weight", "--mu", "bb", "--tableau", "x"],
        ["poly", "R"],
        ["poly", "Z", "--n", "2", "--r", "5"],
        ["koorn", "verify"],
        ["koorn", "K", "--lambda", "01"],
        ["asep", "stationary", "--n", "1", "--r", "0", "--params", "a=0,b=1,g=1,d=1,t=1/2"],
        ["asep", "stationary", "--n", "1", "--r", "0"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == EXIT_USAGE


def test_rst_weight_of_one_filling(tmp_path, capsys):
    from app.tableaux import tableau_to_json, weight
    from app.tableaux.reference import seven_site_tableau
    from app.tableaux.tableau import tableau_text

    tab = seven_site_tableau()
    mu = str(tab.word)
    expected = str(weight(tab).value)
    assert run(["rst", "weight", "--mu", mu, "--tableau", json.dumps(tableau_to_json(tab))]) == EXIT_OK
    assert capsys.readouterr().out.strip() == expected
    assert run(["rst", "weight", "--mu", mu, "--tableau", tableau_text(tab)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == expected
    path = tmp_path / "tab.json"
    path.write_text(json.dumps(tableau_to_json(tab)), encoding="utf-8")
    assert run(["rst", "weight", "--mu", mu, "--tableau", str(path), "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["word"] == mu
    assert run(["rst", "weight", "--mu", mu + "b", "--tableau", str(path)]) == EXIT_USAGE


def test_asep_stationary(capsys):
    assert run(["asep", "stationary", "--n", "1", "--r", "0", "--params", PARAMS]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert "b  6/11" in out


def test_asep_stationary_json(capsys):
    assert run(["asep", "stationary", "--n", "1", "--r", "0", "--params", PARAMS, "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"b": "6/11", "o": "5/11"}


def test_koorn_structure_suite(capsys):
    assert run(["koorn", "verify", "structure", "--n", "1"]) == EXIT_OK
    assert "[koorn-structure] PASS" in capsys.readouterr().out


def test_hecke_suite_json(capsys):
    assert run(["hecke", "verify", "--n", "2", "--trials", "2", "--degree", "1", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert [s["suite"] for s in payload["suites"]] == ["hecke"]


def test_failed_report_exit_code(monkeypatch, capsys):
    from app import main
    from app.reporting import VerificationReport

    def failing(*a, **kw):
        rep = VerificationReport("hecke")
        rep.check("forced", False, "broken on purpose")
        return rep

    monkeypatch.setattr("app.hecke.verify.verify_hecke_relations", failing)
    assert main.run(["hecke", "verify", "--n", "2"]) == EXIT_FAIL
    assert "FAIL forced (broken on purpose)" in capsys.readouterr().out


@pytest.mark.slow
def test_verify_all_small(capsys):
    assert run(["verify-all", "--max-n", "2", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert payload["informational"][0]["suite"]
