"""End-to-end tests of the etheta command line."""

import json
import sys

import pytest

from etheta import __version__
from etheta.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, main


def _lines(capsys):
    out = capsys.readouterr().out
    return [json.loads(line) for line in out.splitlines() if line.strip()]


@pytest.fixture
def space_path(data_dir):
    def path(name: str) -> str:
        return str(data_dir / name)
    return path


class TestInspection:
    """analyze, axioms, map and enumerate."""

    def test_version(self, capsys) -> None:
        assert main(["version"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == __version__

    def test_analyze_one_operator(self, capsys, space_path) -> None:
        code = main([
            "analyze", space_path("example4.space"),
            "--set", "b", "--op", "e*-cl_theta", "--format", "json-lines",
        ])
        assert code == EXIT_OK
        assert _lines(capsys) == [{"set": ["b"], "operators": {"e*-cl_theta": ["b"]}}]

    def test_analyze_every_subset(self, capsys, space_path) -> None:
        assert main(["analyze", space_path("example4.space"), "--format", "json-lines"]) == EXIT_OK
        records = _lines(capsys)
        assert len(records) == 16
        assert records[0]["set"] == []
        assert "e*-theta-open" not in next(r for r in records if r["set"] == ["b"])["families"]

    def test_analyze_families(self, capsys, space_path) -> None:
        code = main([
            "analyze", space_path("example4.space"),
            "--families", "e*-theta-open", "--format", "json-lines",
        ])
        assert code == EXIT_OK
        (record,) = _lines(capsys)
        assert record["family"] == "e*-theta-open"
        assert len(record["members"]) == 15
        assert ["b"] not in record["members"]

    def test_analyze_table(self, capsys, space_path) -> None:
        code = main([
            "analyze", space_path("example2.space"),
            "--set", "1,2", "--op", "e*-cl_theta", "--format", "table",
        ])
        assert code == EXIT_OK
        assert capsys.readouterr().out.strip() == "e*-cl_theta({1,2}) = {1,2,3}"

    def test_axioms(self, capsys, space_path) -> None:
        assert main(["axioms", space_path("example4.space"), "--format", "json-lines"]) == EXIT_OK
        records = _lines(capsys)
        assert len(records) == 14
        by_name = {r["axiom"]: r for r in records[:-1]}
        assert by_name["e*-R1"]["holds"] is True
        assert by_name["beta-R1"]["holds"] is False
        assert records[-1] == {"cc_points": []}

    def test_axioms_table_on_terminal(self, capsys, mocker, space_path, monkeypatch, tmp_path) -> None:
        monkeypatch.chdir(tmp_path)
        monkeypatch.delenv("ETHETA_CONFIG", raising=False)
        mocker.patch.object(sys.stdout, "isatty", return_value=True)
        assert main(["axioms", space_path("example4.space")]) == EXIT_OK
        out = capsys.readouterr().out
        assert "e*-R1: true" in out
        assert "cc-points: {}" in out

    def test_map_document(self, capsys, space_path) -> None:
        assert main(["map", space_path("constant_c.map"), "--format", "json-lines"]) == EXIT_OK
        results = {r["property"]: r["holds"] for r in _lines(capsys)}
        assert len(results) == 10
        assert results["S-e*-continuous"] is True
        assert results["S-continuous"] is False

    def test_map_literal(self, capsys, space_path) -> None:
        code = main([
            "map", space_path("example4.space"),
            "--map", "a:c,b:c,c:c,d:c", "--format", "json-lines",
        ])
        assert code == EXIT_OK
        results = {r["property"]: r["holds"] for r in _lines(capsys)}
        assert results["S-e*-continuous"] is True

    def test_enumerate(self, capsys) -> None:
        assert main(["enumerate", "--points", "3", "--format", "json-lines"]) == EXIT_OK
        assert len(_lines(capsys)) == 29

    def test_enumerate_t0(self, capsys) -> None:
        assert main(["enumerate", "--points", "3", "--t0-only", "--format", "json-lines"]) == EXIT_OK
        assert len(_lines(capsys)) == 19

    def test_enumerate_limit(self, capsys) -> None:
        assert main(["enumerate", "--points", "6", "--format", "json-lines"]) == EXIT_USAGE


class TestVerify:
    """verify and claims."""

    def test_single_claim(self, capsys, config_file) -> None:
        code = main([
            "--config", str(config_file), "verify",
            "--claim", "T2.8", "--max-points", "3", "--format", "json-lines",
        ])
        assert code == EXIT_OK
        (record,) = _lines(capsys)
        assert record == {
            "claim": "T2.8-kapanis",
            "tier": "core",
            "status": "CONFIRMED",
            "instances": 34,
            "vacuous": 0,
        }

    def test_question(self, capsys, config_file) -> None:
        code = main(["--config", str(config_file), "verify", "--claim", "Q5.1", "--max-points", "2"])
        assert code == EXIT_OK
        (record,) = _lines(capsys)
        assert record["status"] == "EXHAUSTED_NO_WITNESS"
        assert record["instances"] == 64

    def test_timings(self, capsys, config_file) -> None:
        main(["--config", str(config_file), "verify", "--claim", "T2.8", "--timings"])
        (record,) = _lines(capsys)
        assert "wall_time" in record

    def test_budget_and_resume(self, capsys, config_file, tmp_path) -> None:
        args = [
            "--config", str(config_file), "verify", "--claim", "T2.8-kapanis",
            "--max-points", "3", "--instance-budget", "8",
        ]
        cursor_file = tmp_path / "cursor.json"
        assert main(args) == EXIT_BUDGET
        runs = 1
        while True:
            (record,) = _lines(capsys)
            if record["status"] != "BUDGET_EXCEEDED":
                break
            cursor_file.write_text(json.dumps(record))
            code = main(args + ["--resume", str(cursor_file)])
            runs += 1
        assert code == EXIT_OK
        assert runs == 5
        assert record["instances"] == 34

    def test_suite(self, capsys, config_file) -> None:
        code = main([
            "--config", str(config_file), "verify",
            "--max-points", "1", "--max-map-points", "1", "--max-chain-points", "1",
        ])
        assert code == EXIT_OK
        records = _lines(capsys)
        assert len(records) == 53
        assert records[-1]["claim"] == "Q5.1-open-question"

    def test_resume_needs_claim(self, config_file, tmp_path) -> None:
        assert main(["--config", str(config_file), "verify", "--resume", str(tmp_path / "c")]) == EXIT_USAGE

    def test_unknown_claim(self, capsys, config_file) -> None:
        assert main(["--config", str(config_file), "verify", "--claim", "T9.9"]) == EXIT_USAGE
        assert "unknown claim: T9.9" in capsys.readouterr().err

    def test_claims(self, capsys) -> None:
        assert main(["claims", "--format", "json-lines"]) == EXIT_OK
        records = _lines(capsys)
        assert len(records) == 53
        assert {r["tier"] for r in records} == {"core", "new", "question"}


class TestErrors:
    """Usage errors exit with status 1."""

    def test_missing_file(self, capsys, tmp_path) -> None:
        assert main(["axioms", str(tmp_path / "none.space")]) == EXIT_USAGE
        assert "Error:" in capsys.readouterr().err

    def test_invalid_topology(self, capsys, tmp_path) -> None:
        path = tmp_path / "bad.space"
        path.write_text('{"points": ["a", "b", "c"], "opens": [["a"], ["b"]]}')
        assert main(["axioms", str(path), "--format", "json-lines"]) == EXIT_USAGE
        assert "Error:" in capsys.readouterr().err

    def test_bad_set_literal(self, space_path) -> None:
        code = main(["analyze", space_path("example4.space"), "--set", "z", "--format", "json-lines"])
        assert code == EXIT_USAGE

    def test_no_command(self, capsys) -> None:
        assert main([]) == EXIT_OK
        assert "usage" in capsys.readouterr().out
