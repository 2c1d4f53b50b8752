"""命令行后端: 报告构造、输出与定理验证流水线"""

from .pipeline import SUITES, CaseResult, VerifyPipeline, VerifyReport, VerifySuiteConfig
from .report import (
    algebra_report,
    build_code,
    build_pir_code,
    code_distance_report,
    code_dual_report,
    code_repr_report,
    error_report,
    pir_build_report,
    pir_distance_report,
    pir_optimal_report,
    render,
    ring_info_report,
    save_report,
)

__all__ = [
    "SUITES",
    "CaseResult",
    "VerifyPipeline",
    "VerifyReport",
    "VerifySuiteConfig",
    "algebra_report",
    "build_code",
    "build_pir_code",
    "code_distance_report",
    "code_dual_report",
    "code_repr_report",
    "error_report",
    "pir_build_report",
    "pir_distance_report",
    "pir_optimal_report",
    "render",
    "ring_info_report",
    "save_report",
]
