import json
import re

import pytest
from click.testing import CliRunner

from edutree.cli import cli
from edutree.io.reports import SUMMARY_COLUMNS

STUDENT_HEADER = "PSM,CTG,SEM,ASS,ATT,LW,ESM"

FOREIGN_ARFF = """@relation foreign
@attribute PSM {First,Second,Third,Fail,Excellent}
@attribute CTG {Poor,Average,Good}
@attribute SEM {Poor,Average,Good}
@attribute ASS {Yes,No}
@attribute ATT {Poor,Average,Good}
@attribute LW {Yes,No}
@attribute ESM {First,Second,Third,Fail}
@data
Excellent,Good,Good,Yes,Good,Yes,First
"""


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def model_file(runner, tmp_path):
    path = tmp_path / "model.json"
    result = runner.invoke(cli, ["train", "--algorithm", "id3", "-o", str(path)])
    assert result.exit_code == 0, result.output
    return path


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "edutree" in result.stdout


@pytest.mark.parametrize("command", ["compare", "train", "predict", "rules"])
def test_help_is_plain_english(runner, command):
    result = runner.invoke(cli, [command, "--help"])
    assert result.exit_code == 0
    assert "--output" in result.stdout
    assert not re.search(r"[\u4e00-\u9fff]", result.stdout)


def test_compare_csv_single_algorithm(runner, frozen_clock):
    result = runner.invoke(cli, ["compare", "--algorithms", "cart", "--format", "csv"])
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[0] == ",".join(SUMMARY_COLUMNS)
    assert len(lines) == 2
    assert lines[1].startswith("cart,")
    assert lines[1].endswith(",0.0,10,1")


def test_compare_csv_is_reproducible(runner, frozen_clock, tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (first, second):
        args = ["compare", "--algorithms", "id3,c45", "--seed", "4", "--format", "csv", "-o", str(path)]
        assert runner.invoke(cli, args).exit_code == 0
    assert first.read_bytes() == second.read_bytes()
    assert [line.split(",")[0] for line in first.read_text().splitlines()[1:]] == ["id3", "c45"]


def test_compare_text_includes_published_values(runner):
    result = runner.invoke(cli, ["compare", "--algorithms", "id3", "--algorithms", "c45"])
    assert result.exit_code == 0, result.output
    assert "== accuracy ==" in result.stdout
    assert "== published accuracy ==" in result.stdout
    assert "52.0833" in result.stdout
    assert "== build time ==" in result.stdout


def test_compare_text_without_published_values_for_other_k(runner):
    result = runner.invoke(cli, ["compare", "--algorithms", "id3", "--k", "5"])
    assert result.exit_code == 0, result.output
    assert "== published accuracy ==" not in result.stdout


def test_compare_json_document(runner, frozen_clock):
    result = runner.invoke(cli, ["compare", "--algorithms", "c45", "--format", "json-document"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)["reports"][0]
    assert report["algorithm"] == "c45"
    assert report["correct"] + report["incorrect"] + report["unclassified"] == 48
    assert len(report["per_class_precision"]) == 4


def test_compare_svg_writes_text_sibling(runner, tmp_path):
    chart = tmp_path / "chart.svg"
    result = runner.invoke(cli, ["compare", "--algorithms", "cart", "--format", "svg", "-o", str(chart)])
    assert result.exit_code == 0, result.output
    assert "<svg" in chart.read_text(encoding="utf-8")
    assert "== accuracy ==" in (tmp_path / "chart.txt").read_text(encoding="utf-8")


def test_missing_data_file_is_data_error(runner, tmp_path):
    output = tmp_path / "out.csv"
    result = runner.invoke(cli, ["compare", str(tmp_path / "nope.arff"), "-o", str(output)])
    assert result.exit_code == 2
    assert "edutree: error:" in result.stderr
    assert not output.exists()


def test_malformed_arff_reports_position(runner, tmp_path):
    bad = tmp_path / "bad.arff"
    bad.write_text("@relation r\n@attribute a {x,y}\n@attribute c {p,q}\n@data\nx,p\nz,q\n", encoding="utf-8")
    result = runner.invoke(cli, ["rules", str(bad), "--algorithm", "id3"])
    assert result.exit_code == 2
    assert "6:1: error: undeclared nominal value 'z'" in result.stderr


@pytest.mark.parametrize(
    "args",
    [
        ["compare", "--k", "1"],
        ["compare", "--k", "49"],
        ["compare", "--algorithms", "c50"],
        ["predict", "--model", "m.json", "--format", "svg"],
        ["predict"],
        ["train"],
        ["train", "--algorithm", "c50"],
        ["compare", "--seed", "-1"],
    ],
)
def test_usage_errors(runner, args):
    assert runner.invoke(cli, args).exit_code == 1


def test_train_writes_model_and_tree_text(model_file):
    document = json.loads(model_file.read_text(encoding="utf-8"))
    assert document["algorithm"] == "id3"
    assert document["root"]["attribute"] == "ATT"
    tree_text = (model_file.parent / "model.tree.txt").read_text(encoding="utf-8")
    assert tree_text.startswith("id3 tree for ESM: ")


def test_train_is_byte_stable(runner, tmp_path, model_file):
    again = tmp_path / "again.json"
    assert runner.invoke(cli, ["train", "--algorithm", "id3", "-o", str(again)]).exit_code == 0
    assert again.read_bytes() == model_file.read_bytes()


def test_predict_training_data(runner, model_file):
    result = runner.invoke(cli, ["predict", "--model", str(model_file), "--format", "csv"])
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[0] == "row,prediction,First,Second,Third,Fail"
    assert len(lines) == 49
    assert not any("UNCLASSIFIED" in line for line in lines)


def test_predict_json(runner, model_file):
    result = runner.invoke(cli, ["predict", "--model", str(model_file), "--format", "json-document"])
    assert result.exit_code == 0, result.output
    predictions = json.loads(result.stdout)["predictions"]
    assert len(predictions) == 48
    assert sum(predictions[0]["distribution"].values()) == pytest.approx(1.0)


def test_predict_csv_with_undeclared_value(runner, model_file, tmp_path):
    data = tmp_path / "new.csv"
    data.write_text(f"{STUDENT_HEADER}\nExcellent,Good,Good,Yes,Good,Yes,First\n", encoding="utf-8")
    result = runner.invoke(cli, ["predict", str(data), "--model", str(model_file)])
    assert result.exit_code == 1
    assert "schema mismatch" in result.stderr


def test_predict_csv_with_wrong_header(runner, model_file, tmp_path):
    data = tmp_path / "new.csv"
    data.write_text("PSM,CTG\nFirst,Good\n", encoding="utf-8")
    result = runner.invoke(cli, ["predict", str(data), "--model", str(model_file)])
    assert result.exit_code == 1
    assert "header mismatch" in result.stderr


def test_predict_arff_with_undeclared_value(runner, model_file, tmp_path):
    data = tmp_path / "foreign.arff"
    data.write_text(FOREIGN_ARFF, encoding="utf-8")
    result = runner.invoke(cli, ["predict", str(data), "--model", str(model_file)])
    assert result.exit_code == 1
    assert "attribute 'PSM': value 'Excellent'" in result.stderr


def test_predict_invalid_model_file(runner, tmp_path):
    model = tmp_path / "broken.json"
    model.write_text('{"algorithm": "id3"}', encoding="utf-8")
    result = runner.invoke(cli, ["predict", "--model", str(model)])
    assert result.exit_code == 2
    assert "invalid model file" in result.stderr


def test_rules_text(runner):
    result = runner.invoke(cli, ["rules", "--algorithm", "id3"])
    assert result.exit_code == 0, result.output
    assert all(line.startswith("IF ATT = ") for line in result.stdout.splitlines())


def test_rules_csv(runner):
    result = runner.invoke(cli, ["rules", "--algorithm", "c45", "--format", "csv", "--merge-siblings"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines()[0] == "conditions,consequent"


def test_rules_from_csv_input(runner, tmp_path):
    data = tmp_path / "tiny.csv"
    data.write_text(
        f"{STUDENT_HEADER}\nFirst,Good,Good,Yes,Good,Yes,First\nFail,Poor,Poor,No,Poor,No,Fail\n", encoding="utf-8"
    )
    result = runner.invoke(cli, ["rules", str(data), "--algorithm", "id3", "--pruning", "off"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines()[0] == "IF PSM = 'First' THEN ESM = 'First'"
