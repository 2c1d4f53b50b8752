"""各子命令的报告构造与输出

报告统一是带 "schema": 1 的字典; 大整数 (基数) 以十进制字符串输出。
"""

import csv
import io
import json
from pathlib import Path
from typing import Any, Sequence

from rich.console import Console

from src.chain_ring import ChainRing
from src.code_core import (
    Code,
    canonical_representation,
    cardinality,
    code_from_generators,
    min_distance,
    weight_one_witness,
)
from src.duality import dual
from src.errors import LengthMismatch
from src.pir import (
    PirCode,
    PirRing,
    crt_code,
    nie_pir_distance_check,
    optimal_construction,
    pir_min_distance,
)
from src.quotient_algebra import Algebra, chain_ideals, classify, make_algebra, parse_poly

SCHEMA_VERSION = 1

console = Console(stderr=True)


def _wrap(command: str, body: dict) -> dict:
    return {"schema": SCHEMA_VERSION, "command": command, **body}


def ring_info_report(ring: ChainRing) -> dict:
    return _wrap("ring-info", {"ring": ring.describe()})


def algebra_report(alg: Algebra) -> dict:
    body: dict[str, Any] = {
        "algebra": alg.to_text(),
        "n": alg.n,
        "lambda": alg.lam,
        "nie": alg.nie,
        "size": str(alg.size),
    }
    if alg.nie:
        kind = classify(alg)
        body["lambda_nilpotency"] = alg.lambda_nilpotency
        body["x_nilpotency"] = alg.x_nilpotency
        body["classification"] = {"kind": kind.kind.value, "nilpotency": kind.nilpotency}
        if kind.is_chain:
            body["ideals"] = [
                {"generator": g.to_text(), "cardinality": str(size)} for g, size in chain_ideals(alg)
            ]
    return _wrap("algebra-classify", body)


def build_code(alg: Algebra, gens: Sequence[str]) -> Code:
    return code_from_generators(alg, [parse_poly(alg, g) for g in gens])


def code_repr_report(code: Code) -> dict:
    body = code.to_json()
    body["representation"] = [f.to_text() for f in canonical_representation(code)]
    body["cardinality"] = str(cardinality(code))
    return _wrap("code-repr", {"code": body})


def code_distance_report(code: Code) -> dict:
    body: dict[str, Any] = {"code": code.to_json(), "min_distance": min_distance(code)}
    if code.algebra.nie:
        witness = weight_one_witness(code)
        body["weight_one_witness"] = witness.to_text() if witness is not None else None
    return _wrap("code-distance", body)


def code_dual_report(code: Code) -> dict:
    return _wrap("code-dual", dual(code).to_json())


def build_pir_code(pir: PirRing, n: int, lambdas: Sequence[int], components: Sequence[str]) -> PirCode:
    """每个分量给出以 ';' 分隔的多项式列表, 空串表示零码"""
    if len(components) != pir.s:
        raise LengthMismatch(f"给出了 {len(components)} 个分量码, 主理想环有 {pir.s} 个分量")
    comps = []
    for ring, lam, text in zip(pir.components, lambdas, components):
        alg = make_algebra(ring, n, lam)
        gens = [part for part in text.split(";") if part.strip()]
        comps.append(build_code(alg, gens))
    return crt_code(pir, n, lambdas, comps)


def pir_build_report(code: PirCode) -> dict:
    return _wrap("pir-build", {"code": code.to_json()})


def pir_distance_report(code: PirCode) -> dict:
    body: dict[str, Any] = {"code": code.to_json()}
    body["min_distance"] = code.n + 1 if code.is_zero() else pir_min_distance(code)
    witness = nie_pir_distance_check(code)
    body["nie_component"] = witness.to_json() if witness is not None else None
    return _wrap("pir-distance", body)


def pir_optimal_report(kind: str, **params: int) -> dict:
    code, certificate = optimal_construction(kind, **params)
    return _wrap(
        "pir-optimal",
        {"kind": kind, "parameters": params, "code": code.to_json(), "certificate": certificate.to_json()},
    )


def error_report(exc: Exception) -> dict:
    return {"schema": SCHEMA_VERSION, "error": {"type": type(exc).__name__, "message": str(exc)}}


def _flatten(value: Any, prefix: str, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for key, item in value.items():
            _flatten(item, f"{prefix}.{key}" if prefix else str(key), rows)
    elif isinstance(value, list):
        for idx, item in enumerate(value):
            _flatten(item, f"{prefix}.{idx}" if prefix else str(idx), rows)
    else:
        rows.append((prefix, "" if value is None else str(value)))


def render(report: dict, fmt: str) -> str:
    """把报告渲染为 json 或 csv 文本

    verify 报告的 csv 形式是逐定理的通过/失败表, 其余报告展开为 key,value 行。
    """
    if fmt == "json":
        return json.dumps(report, ensure_ascii=False, indent=2) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if report.get("command") == "verify":
        writer.writerow(["suite", "check", "passed", "failed"])
        for row in report["table"]:
            writer.writerow([row["suite"], row["check"], row["passed"], row["failed"]])
    else:
        rows: list[tuple[str, str]] = []
        _flatten(report, "", rows)
        writer.writerow(["key", "value"])
        writer.writerows(rows)
    return buffer.getvalue()


def save_report(text: str, output_path: str | Path) -> Path:
    """把渲染好的报告写入文件, 自动创建上级目录

    Returns:
        输出文件路径
    """
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(text, encoding="utf-8")
    console.print(f"[bold green]💾 报告已保存: {output_path}[/bold green]")
    return output_path
