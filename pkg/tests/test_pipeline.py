import pytest

from src.config import AppConfig
from src.core import SUITES, CaseResult, VerifyPipeline, VerifyReport, VerifySuiteConfig, render
from src.errors import BadParameters


@pytest.fixture
def tiny_config() -> VerifySuiteConfig:
    return VerifySuiteConfig(
        suite="all",
        max_ring_size=4,
        max_algebra_size=16,
        full_lattice_size=16,
        sample_size=4,
        seed=1,
    )


def test_suite_selection():
    assert VerifySuiteConfig(suite="all").suites() == list(SUITES)
    assert VerifySuiteConfig(suite="duality").suites() == ["duality"]
    with pytest.raises(BadParameters):
        VerifySuiteConfig(suite="nope").suites()


def test_config_defaults_flow_into_suite_config():
    config = AppConfig()
    suite_config = VerifySuiteConfig.from_config(config, "units")
    assert suite_config.suite == "units"
    assert suite_config.max_ring_size == config.verify.max_ring_size
    assert suite_config.seed == config.verify.seed


def test_catalogue_respects_size_limits(tiny_config):
    pipeline = VerifyPipeline(tiny_config)
    assert {r.spec.to_text() for r in pipeline.rings()} == {"Z(4)", "F(4;mod=1,1,1)", "FU(2,2)"}
    algebras = pipeline.algebras()
    assert algebras
    assert all(alg.nie and alg.size <= 16 for alg in algebras)


def test_ideals_are_deduplicated(tiny_config):
    pipeline = VerifyPipeline(tiny_config)
    alg = next(a for a in pipeline.algebras() if a.to_text() == "Z(4);n=2;lambda=2")
    codes = pipeline.ideals(alg)
    assert len(codes) == 5
    assert pipeline.ideals(alg) is codes


def test_full_run_passes(tiny_config):
    report = VerifyPipeline(tiny_config).run()
    assert report.ok, report.to_json()["failures"]
    suites = {row["suite"] for row in report.table()}
    assert suites == set(SUITES)
    keys = [r.sort_key for r in report.results]
    assert keys == sorted(keys)


def test_report_serialization():
    config = VerifySuiteConfig(suite="units")
    report = VerifyReport(
        config,
        [
            CaseResult("units", "a", "k1", True),
            CaseResult("units", "a", "k2", False, {"ring": "Z(4)"}, "detail"),
        ],
    )
    assert not report.ok
    assert report.table() == [{"suite": "units", "check": "a", "passed": 1, "failed": 1}]
    data = report.to_json()
    assert data["failures"] == [
        {"suite": "units", "check": "a", "key": "k2", "reproducer": {"ring": "Z(4)"}, "detail": "detail"}
    ]
    assert render(data, "csv").splitlines() == ["suite,check,passed,failed", "units,a,1,1"]
