import json

import pytest

from main import run
from src.config import EnumConfig, get_config


def _run_json(capsys, argv: list[str]) -> tuple[int, dict]:
    status = run(argv)
    out = capsys.readouterr().out
    return status, json.loads(out)


# ===== 配置 =====


def test_config_reads_environment(monkeypatch):
    monkeypatch.setenv("NIE_MAX_ENUM", "10")
    monkeypatch.setenv("NIE_SEED", "7")
    monkeypatch.delenv("NIE_OUTPUT_FORMAT", raising=False)
    assert EnumConfig().max_enum == 10
    config = get_config()
    assert config.verify.seed == 7
    assert config.output.output_format == "json"


# ===== 子命令 =====


def test_ring_info(capsys):
    status, report = _run_json(capsys, ["ring-info", "--ring", "GR(4,2)"])
    assert status == 0
    assert report["schema"] == 1
    ring = report["ring"]
    assert ring["spec"] == "GR(4,2;mod=1,1,1)"
    assert (ring["q"], ring["e"], ring["size"]) == (4, 2, 16)
    assert len(ring["teichmuller"]) == 4


def test_algebra_classify(capsys):
    status, report = _run_json(capsys, ["algebra-classify", "--algebra", "Z(4);n=2;lambda=2"])
    assert status == 0
    assert report["classification"] == {"kind": "ChainViaX", "nilpotency": 4}
    assert report["x_nilpotency"] == 4
    assert len(report["ideals"]) == 5

    status, report = _run_json(capsys, ["algebra-classify", "--algebra", "Z(4);n=2;lambda=1"])
    assert status == 0
    assert report["nie"] is False
    assert "classification" not in report


def test_code_repr(capsys):
    status, report = _run_json(
        capsys, ["code-repr", "--algebra", "Z(8);n=2;lambda=2", "--gens", "[0,1]"]
    )
    assert status == 0
    code = report["code"]
    assert code["representation"] == ["[0,1]", "[2,0]", "[4,0]"]
    assert code["torsional_degrees"] == [1, 0, 0]
    assert code["cardinality"] == "32"


def test_code_distance(capsys):
    status, report = _run_json(
        capsys, ["code-distance", "--algebra", "Z(8);n=2;lambda=2", "--gens", "[0,1]"]
    )
    assert status == 0
    assert report["min_distance"] == 1
    assert report["weight_one_witness"] == "[0,4]"


def test_code_dual(capsys):
    status, report = _run_json(
        capsys, ["code-dual", "--algebra", "Z(4);n=2;lambda=2", "--gens", "[0,1]"]
    )
    assert status == 0
    assert report["annihilator"]["cardinality"] == "2"
    assert report["predicted_torsion_profile"] == [2, 1]
    assert report["verdict"]["no"]["witness"] == [2, 0]

    status, report = _run_json(
        capsys, ["code-dual", "--algebra", "Z(4);n=2;lambda=0", "--gens", "[2,0]"]
    )
    assert report["verdict"] == {"yes": 1}


def test_pir_build_and_distance(capsys):
    argv = [
        "--pir", "Z(4) x F(5)",
        "--n", "2",
        "--lambdas", "2,0",
        "--component", "[0,1]",
        "--component", "",
    ]
    status, report = _run_json(capsys, ["pir-build", *argv])
    assert status == 0
    assert report["code"]["cardinality"] == "8"

    status, report = _run_json(capsys, ["pir-distance", *argv])
    assert status == 0
    assert report["min_distance"] == 1
    assert report["nie_component"]["component"] == 1


def test_pir_optimal(capsys):
    status, report = _run_json(capsys, ["pir-optimal", "--kind", "rs", "--q", "5", "--k", "1", "--s", "2"])
    assert status == 0
    cert = report["certificate"]
    assert cert["singleton_bound"] == {"numerator": 9, "denominator": 2}
    assert cert["distance"] == 4
    assert cert["optimal"] is True


def test_verify_optimal_suite(capsys):
    status, report = _run_json(capsys, ["verify", "--suite", "optimal"])
    assert status == 0
    assert report["ok"] is True
    assert report["failures"] == []
    assert {row["suite"] for row in report["table"]} == {"optimal"}


# ===== 输出格式 =====


def test_csv_output(capsys):
    status = run(["ring-info", "--ring", "Z(4)", "--format", "csv"])
    lines = capsys.readouterr().out.splitlines()
    assert status == 0
    assert lines[0] == "key,value"
    assert "ring.size,4" in lines


def test_out_file(tmp_path, capsys):
    target = tmp_path / "reports" / "ring.json"
    status = run(["ring-info", "--ring", "Z(9)", "--out", str(target)])
    assert status == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["ring"]["teichmuller"] == [0, 1, 8]


# ===== 错误与退出码 =====


@pytest.mark.parametrize(
    "argv, error",
    [
        (["ring-info"], "UsageError"),
        (["no-such-command"], "UsageError"),
        (["ring-info", "--ring", "Q(5)"], "SpecSyntaxError"),
        (["pir-optimal", "--kind", "rs", "--q", "5"], "UsageError"),
    ],
)
def test_usage_errors_exit_2(capsys, argv, error):
    status, report = _run_json(capsys, argv)
    assert status == 2
    assert report["error"]["type"] == error


@pytest.mark.parametrize(
    "argv, error",
    [
        (["ring-info", "--ring", "F(6)"], "NonPrime"),
        (["code-repr", "--algebra", "Z(4);n=2;lambda=1", "--gens", "[1,1]"], "NotNIE"),
        (["pir-optimal", "--kind", "rs", "--q", "5", "--k", "1", "--s", "1"], "BadParameters"),
    ],
)
def test_domain_errors_exit_1(capsys, argv, error):
    status, report = _run_json(capsys, argv)
    assert status == 1
    assert report["schema"] == 1
    assert report["error"]["type"] == error
