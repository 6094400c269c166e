import argparse
import csv
import io
import json
import logging

import pytest

from cli.app import FlagrepCLI
from services.cartan import Weight
from utils.parsing import UsageError


@pytest.fixture(scope="module")
def cli():
    return FlagrepCLI()


def invoke(cli, *argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_parse_bwb(cli):
    cmd = cli.parse(["bwb", "A1", "--weight", "-3"])
    assert cmd.verb == "bwb"
    assert cmd.cartan.label == "A1"
    assert cmd.weights["weight"] == Weight.of(-3)
    assert cmd.format == "pretty"


def test_parse_positional_weight(cli):
    cmd = cli.parse(["dim", "A2", "1,1"])
    assert cmd.verb == "dim"
    assert cmd.weights["weight"] == Weight.of(1, 1)


def test_parse_negative_lists_and_ranges(cli):
    cmd = cli.parse(["chi-equal", "A2", "--a", "-1/2,1", "--b", "1/2,-1", "--json"])
    assert cmd.weights["a"] == Weight.of(-0.5, 1)
    assert cmd.format == "json"
    cmd = cli.parse(["bwb-table", "B2", "--range", "-2..1", "--csv"])
    assert cmd.box == [(-2, 1), (-2, 1)]
    assert cmd.format == "csv"


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate", "A2"],
    ["bwb", "A1", "--weight", "1/2"],
    ["bwb", "A2", "--weight", "1,,2"],
    ["bwb", "A2", "--weight", "1"],
    ["bwb", "Q7", "--weight", "1"],
    ["bwb", "A1"],
    ["bwb-table", "A1", "--range", "3..1"],
    ["bwb-table", "A1", "--range", "1-3"],
    ["weights", "A2", "1,0", "--format", "xml"],
    ["dim", "A2", "1,1", "--csv"],
    ["matsuki-sl2", "--samples", "0"],
])
def test_usage_errors(cli, argv):
    with pytest.raises(UsageError):
        cli.parse(argv)
    code, out, err = invoke(cli, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("usage error:")


def test_weyl_order(cli):
    assert invoke(cli, "weyl-order", "A2") == (0, "6\n", "")
    code, out, _ = invoke(cli, "weyl-order", "G2", "--json")
    assert json.loads(out) == {"label": "G2", "order": 12}


def test_bwb_json(cli):
    code, out, _ = invoke(cli, "bwb", "A1", "--weight", "-1", "--json")
    assert code == 0
    assert json.loads(out) == {"vanishes": True}

    code, out, _ = invoke(cli, "bwb", "A1", "--weight", "-3", "--json")
    assert json.loads(out) == {"vanishes": False, "degree": 1, "highest_weight": [1], "dimension": 2}


@pytest.mark.parametrize("label", ["A1xG2", "a1xg2", "A1XG2"])
def test_bwb_on_product_label(cli, label):
    code, out, err = invoke(cli, "bwb", label, "--weight", "0,0,0", "--json")
    assert (code, err) == (0, "")
    assert json.loads(out) == {"vanishes": False, "degree": 0, "highest_weight": [0, 0, 0], "dimension": 1}


def test_weyl_order_of_e8(cli):
    assert invoke(cli, "weyl-order", "E8") == (0, "696729600\n", "")


def test_domain_error_exit_code(cli):
    code, out, err = invoke(cli, "dim", "A2", "-1,0")
    assert code == 1
    assert out == ""
    assert err.startswith("error: not-dominant: ")
    assert err.count("\n") == 1


def test_non_finite_matrix_file(cli, tmp_path):
    path = tmp_path / "affine.txt"
    path.write_text("2 -2\n-2 2\n")
    code, _, err = invoke(cli, "roots", str(path))
    assert code == 1
    assert err.startswith("error: not-finite-type: ")


def test_roots_from_file(cli, tmp_path):
    path = tmp_path / "b2.txt"
    path.write_text("2 -2\n-1 2\n")
    code, out, _ = invoke(cli, "roots", str(path), "--json")
    payload = json.loads(out)
    assert payload["rank"] == 2
    assert len(payload["roots"]) == 8
    assert payload["label"] is None


def test_orbit_json_keeps_rationals_exact(cli):
    code, out, _ = invoke(cli, "orbit", "A1", "--weight", "1/2", "--json")
    assert code == 0
    assert json.loads(out) == [["1/2"], ["-1/2"]]


def test_weights_csv(cli):
    code, out, _ = invoke(cli, "weights", "A2", "1,1", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["w1", "w2", "multiplicity"]
    assert len(rows) == 1 + 7
    assert ["0", "0", "2"] in rows
    assert sum(int(r[2]) for r in rows[1:]) == 8


def test_bwb_table_csv(cli):
    code, out, _ = invoke(cli, "bwb-table", "A1", "--range", "-2..1", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [
        ["l1", "vanishes", "degree", "hw1", "dimension"],
        ["-2", "false", "1", "0", "1"],
        ["-1", "true", "", "", ""],
        ["0", "false", "0", "0", "1"],
        ["1", "false", "0", "1", "2"],
    ]


def test_bwb_table_json(cli):
    code, out, _ = invoke(cli, "bwb-table", "A2", "--range", "-1..0", "--json")
    rows = json.loads(out)
    assert [row["weight"] for row in rows] == [[-1, -1], [-1, 0], [0, -1], [0, 0]]
    assert rows[0] == {"weight": [-1, -1], "vanishes": True}
    assert rows[3]["dimension"] == 1


def test_int_dom(cli):
    code, out, _ = invoke(cli, "int-dom", "A1", "--weight", "-2", "--json")
    assert json.loads(out) == {"weight": [-2], "conjugate": [2], "word": [1], "length": 1}


def test_chi_equal(cli):
    assert invoke(cli, "chi-equal", "A1", "--a", "1/2", "--b", "-1/2")[1] == "true\n"
    assert invoke(cli, "chi-equal", "A1", "--a", "1", "--b", "2")[1] == "false\n"


def test_matsuki_report(cli):
    code, out, err = invoke(cli, "matsuki-sl2", "--samples", "10", "--seed", "1", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["duality_pairs"] == [["Zero", "Disc"], ["Infinity", "Exterior"], ["CStar", "Circle"]]
    assert report["poset_reversal"] is True
    assert report["sample_failures"] == []


@pytest.mark.parametrize("argv", [
    ["roots", "G2", "--json"],
    ["orbit", "B2", "--weight", "1/3,-1", "--json"],
    ["weights", "B2", "1,1", "--json"],
    ["bwb-table", "B2", "--range", "-2..2", "--json"],
    ["chi-equal", "A2", "--a", "1,2", "--b", "-3,1", "--json"],
    ["matsuki-sl2", "--samples", "10", "--seed", "1", "--json"],
    ["weights", "A2", "2,1", "--csv"],
])
def test_output_is_deterministic(argv):
    first = invoke(FlagrepCLI(), *argv)
    second = invoke(FlagrepCLI(), *argv)
    assert first == second
    assert first[0] == 0
    if "--json" in argv:
        payload = json.loads(first[1])
        assert json.loads(json.dumps(payload)) == payload


def test_negative_number_hook_is_available():
    # the parser swaps this private matcher so "-3,1" and "-2..2" stay values
    assert hasattr(argparse.ArgumentParser(), "_negative_number_matcher")
    cmd = FlagrepCLI().parse(["dim", "A2", "-1,2"])
    assert cmd.weights["weight"] == Weight.of(-1, 2)


@pytest.mark.parametrize("argv,logger_name", [
    (["bwb", "A2", "--weight", "-2,1"], "flagrep.commands.cohomology"),
    (["bwb-table", "A1", "--range", "-1..1"], "flagrep.commands.cohomology"),
    (["dim", "A2", "1,1"], "flagrep.commands.reps"),
    (["weights", "A2", "1,0"], "flagrep.commands.reps"),
    (["chi-equal", "A1", "--a", "1", "--b", "-1"], "flagrep.commands.infchar"),
    (["int-dom", "A1", "--weight", "-1/2"], "flagrep.commands.infchar"),
    (["matsuki-sl2", "--samples", "10", "--seed", "1"], "flagrep.commands.matsuki"),
])
def test_commands_log_at_debug(cli, caplog, argv, logger_name):
    with caplog.at_level(logging.DEBUG, logger=logger_name):
        code, _, _ = invoke(cli, *argv)
    assert code == 0
    assert any(record.name == logger_name for record in caplog.records)
