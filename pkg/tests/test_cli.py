import json

import pytest

from opensubnormalizers.cli import (
    CENSUS_ENV,
    EXIT_OK,
    EXIT_USAGE,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def test_order(capsys):
    assert run(capsys, "order", "--name", "trivial") == (EXIT_OK, ["1"], "")
    code, out, _ = run(capsys, "order", "--name", "PSL(2,7)")
    assert out == ["168"]


def test_spr(capsys):
    code, out, _ = run(capsys, "spr", "--name", "A5")

    assert code == EXIT_OK
    assert out == ["1/6"]


def test_spr_with_classes_and_pairs(capsys):
    code, out, _ = run(capsys, "spr", "--name", "A5", "--classes", "--pairs")

    assert code == EXIT_OK
    assert out[0] == "1/6"
    assert len(out) == 1 + 5 + 3
    assert out[2].startswith("2\t15\t1/5\t")
    assert out[-3:] == ["dn\t1/12", "ds\t11/30", "implication_chain\t1"]


def test_spr_json_lines(capsys):
    code, out, _ = run(
        capsys, "spr", "--name", "A5", "--format", "json-lines"
    )

    assert code == EXIT_OK
    assert json.loads(out[0])["spr_total"] == "1/6"


def test_classes(capsys):
    code, out, _ = run(capsys, "classes", "--name", "S3")

    assert code == EXIT_OK
    assert out == ["1\t1\t()", "2\t3\t(2 3)", "3\t2\t(1 2 3)"]


def test_sylow(capsys):
    code, out, _ = run(capsys, "sylow", "--name", "A5", "-p", "2")

    assert code == EXIT_OK
    assert out == [
        "p\t2",
        "sylow_order\t4",
        "count\t5",
        "normalizer_order\t12",
    ]


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--name", "A5", "-p", "2")

    assert code == EXIT_OK
    assert out == ["16", "p_part\t4", "ratio\t4"]


def test_count_formats(capsys):
    argv = ["count", "--name", "A5", "-p", "2", "--jobs", "2"]

    code, out, _ = run(capsys, *argv, "--format", "tsv")
    assert code == EXIT_OK
    assert out[0] == "16"

    code, out, _ = run(capsys, *argv, "--format", "json-lines")
    assert code == EXIT_OK
    assert len(out) == 1
    assert json.loads(out[0]) == {
        "p": 2,
        "count": 16,
        "p_part": 4,
        "ratio": "4",
    }


def test_classes_json_lines(capsys):
    code, out, _ = run(
        capsys, "classes", "--name", "S3", "--format", "json-lines"
    )

    assert code == EXIT_OK
    assert [json.loads(line)["size"] for line in out] == [1, 3, 2]


def test_spr_element(capsys):
    code, out, _ = run(capsys, "spr-element", "--name", "A5", "-x", "(1 2 3)")

    assert code == EXIT_OK
    assert out == ["1/10"]


def test_subnormalizer(capsys):
    code, out, _ = run(
        capsys, "subnormalizer", "--name", "A5", "-x", "2 1 4 3 5"
    )

    assert code == EXIT_OK
    assert out[0] == "12"
    assert "lambda\t1" in out
    assert "alpha\t3" in out


def test_phi(capsys):
    code, out, _ = run(capsys, "phi", "--name", "A5", "--aut", "S5")

    assert code == EXIT_OK
    assert out == ["2", "c\t6", "order_over_c\t10"]


def test_file_input(capsys, tmp_path):
    path = tmp_path / "s3.group"
    path.write_text("degree 3\n2 1 3\n2 3 1\n", encoding="utf-8")

    code, out, _ = run(capsys, "order", "--file", str(path))

    assert code == EXIT_OK
    assert out == ["6"]


def test_census(capsys, tmp_path):
    path = tmp_path / "census.tsv"

    code, out, _ = run(
        capsys,
        "census",
        "--name",
        "A5",
        "--aut",
        "S5",
        "--census-file",
        str(path),
    )

    assert code == EXIT_OK
    assert out[0].startswith("A5\t60\t1/6\t")
    assert len(path.read_text(encoding="utf-8").splitlines()) == 2


def test_census_file_from_environment(capsys, tmp_path, monkeypatch):
    path = tmp_path / "census.jsonl"
    monkeypatch.setenv(CENSUS_ENV, str(path))

    code, out, _ = run(
        capsys, "census", "--name", "S3", "--format", "json-lines"
    )

    assert code == EXIT_OK
    assert json.loads(out[0])["group"] == "S3"
    assert path.exists()


def test_census_errors(capsys, tmp_path, monkeypatch):
    monkeypatch.delenv(CENSUS_ENV, raising=False)
    code, _, err = run(capsys, "census", "--name", "S3")
    assert code == EXIT_USAGE
    assert CENSUS_ENV in err

    code, _, _ = run(
        capsys,
        "census",
        "--name",
        "S3",
        "--census-file",
        str(tmp_path / "missing" / "census.tsv"),
    )
    assert code == EXIT_USAGE


def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper", "--check", "spr_a5")

    assert code == EXIT_OK
    assert out == ["PASS\tspr_a5", "1/1 checks passed"]


def test_verify_paper_json_lines(capsys):
    code, out, _ = run(
        capsys,
        "verify-paper",
        "--check",
        "spr_a5",
        "--format",
        "json-lines",
    )

    assert code == EXIT_OK
    assert json.loads(out[0]) == {
        "name": "spr_a5",
        "passed": True,
        "details": [],
    }


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["order"],
        ["order", "--name", "M11"],
        ["order", "--name", "A5", "--file", "a5.group"],
        ["order", "--name", "A5", "--max-order", "10"],
        ["order", "--name", "A5", "--json"],
        ["order", "--name", "A5", "--format", "csv"],
        ["order", "--name", "A5", "--jobs", "0"],
        ["count", "--name", "A5", "-p", "4"],
        ["spr-element", "--name", "A5", "-x", "(1 a)"],
        ["verify-paper", "--check", "no_such_check"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)

    assert code == EXIT_USAGE
