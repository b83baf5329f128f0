"""Command line contract: exit codes, reports, round trips."""

import json

import pytest

from z2covers.cli import main, verify_report
from z2covers.construction import construct_family, single_torsion_mutations
from z2covers.serialize import dumps, loads


@pytest.fixture
def family_file(tmp_path):
    path = tmp_path / "family3.bd.json"
    assert main(["construct", "--n", "3", "--out", str(path)]) == 0
    return path


@pytest.fixture
def mutated_file(tmp_path):
    bd = construct_family(3)
    _, _, mutant = next(iter(single_torsion_mutations(bd)))
    path = tmp_path / "mutant.bd.json"
    path.write_text(dumps(mutant))
    return path


class TestConstruct:
    def test_writes_the_expected_shape(self, family_file):
        doc = json.loads(family_file.read_text())
        assert len(doc["L"]) == 7
        assert sum(1 for comps in doc["D"].values() if comps) == 4

    def test_small_n_is_a_usage_error(self, capsys):
        assert main(["construct", "--n", "1"]) == 2
        assert "at least 2" in capsys.readouterr().err

    def test_halving_flag_round_trips(self, tmp_path):
        path = tmp_path / "alt.bd.json"
        assert main(["construct", "--n", "3", "--halving", "1,0,2", "--out", str(path)]) == 0
        assert main(["verify", str(path)]) == 0
        assert loads(path.read_text()) == construct_family(3, (1, 0, 2))

    def test_bad_halving_flag_is_a_usage_error(self):
        assert main(["construct", "--n", "3", "--halving", "a,b,c"]) == 2
        assert main(["construct", "--n", "3", "--halving", "1,2"]) == 2

    def test_stdout_emission(self, capsys):
        assert main(["construct", "--n", "2"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["group_spec"]["rank"] == 5


class TestVerify:
    def test_family_file_passes(self, family_file, capsys):
        assert main(["verify", str(family_file), "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["relations"]["ok"] is True
        assert report["relations"]["pairs_checked"] == 28
        assert report["canonical_map"]["degree"] == 8
        assert report["invariants"]["k_squared"] == 48

    def test_mutated_file_fails_with_the_pair_named(self, mutated_file, capsys):
        assert main(["verify", str(mutated_file), "--format", "json"]) == 1
        report = json.loads(capsys.readouterr().out)
        assert report["relations"]["ok"] is False
        assert report["relations"]["failures"]
        first = report["relations"]["failures"][0]
        assert set(first) == {"chi", "chi_prime", "lhs", "rhs"}

    def test_malformed_file_is_a_parse_error(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{]")
        assert main(["verify", str(path)]) == 3

    def test_missing_file_is_a_parse_error(self, tmp_path):
        assert main(["verify", str(tmp_path / "absent.json")]) == 3

    def test_report_matches_in_memory_pipeline_byte_for_byte(self, family_file):
        bd = construct_family(3)
        from_memory = json.dumps(verify_report(bd), sort_keys=True, indent=2)
        from_file = json.dumps(
            verify_report(loads(family_file.read_text())), sort_keys=True, indent=2
        )
        assert from_memory == from_file

    def test_oracle_section(self, family_file, capsys):
        code = main([
            "verify", str(family_file), "--oracle",
            "--oracle-prime", "2003", "--format", "json",
        ])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["oracle"]["ok"] is True
        assert report["oracle"]["order"] == 2004
        assert report["oracle"]["relations_checked"] == 28


class TestTable:
    def test_family_table_renders_six_equal_rows(self, family_file, capsys):
        assert main(["table", str(family_file)]) == 0
        out = capsys.readouterr().out
        assert out.count("[equal]") == 6

    def test_json_rows(self, family_file, capsys):
        assert main(["table", str(family_file), "--format", "json"]) == 0
        rows = json.loads(capsys.readouterr().out)["rows"]
        assert len(rows) == 6
        assert rows[0]["rhs"] == "6E + 2ΣF_ii"

    def test_mutated_file_reports_an_unequal_row(self, mutated_file, capsys):
        assert main(["table", str(mutated_file)]) == 1
        assert "UNEQUAL" in capsys.readouterr().out


class TestSweep:
    def test_range_rows(self, capsys):
        assert main(["sweep", "3..6", "--format", "json"]) == 0
        rows = json.loads(capsys.readouterr().out)["rows"]
        assert [
            (r["k_squared"], r["p_g"], r["q"], r["image_degree"], r["degree"], r["base_point_free"])
            for r in rows
        ] == [
            (48, 6, 1, 6, 8, True),
            (64, 8, 1, 8, 8, True),
            (80, 10, 1, 10, 8, True),
            (96, 12, 1, 12, 8, True),
        ]

    def test_boundary_row(self, capsys):
        assert main(["sweep", "2..2", "--format", "json"]) == 0
        (row,) = json.loads(capsys.readouterr().out)["rows"]
        assert (row["k_squared"], row["p_g"], row["q"]) == (32, 4, 1)
        assert (row["image_degree"], row["degree"], row["base_point_free"]) == (2, 16, True)

    def test_reversed_range_is_a_usage_error(self):
        assert main(["sweep", "5..3"]) == 2

    def test_out_of_bounds_range_is_a_usage_error(self):
        assert main(["sweep", "1..3"]) == 2
        assert main(["sweep", "2..65"]) == 2

    def test_garbled_range_is_a_usage_error(self):
        assert main(["sweep", "3-6"]) == 2


def test_unknown_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
