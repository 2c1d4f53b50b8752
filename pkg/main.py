"""NIE 常循环码工具箱 - 入口

用法:
    uv run main.py ring-info --ring "GR(4,2)"
    uv run main.py algebra-classify --algebra "Z(4);n=3;lambda=2"
    uv run main.py code-repr --algebra "Z(8);n=2;lambda=2" --gens "[0,1]"
    uv run main.py pir-optimal --kind rs --q 5 --k 1 --s 2
    uv run main.py verify --suite all

通用参数:
    --format    输出格式 json / csv (默认: json)
    --out       输出文件路径 (默认输出到标准输出)

退出码: 0 成功, 1 领域错误, 2 用法错误
"""

import argparse
import sys
from typing import Callable

from rich.console import Console
from rich.panel import Panel

from src.chain_ring import make_ring, parse_ring_spec
from src.config import get_config
from src.core import (
    SUITES,
    VerifyPipeline,
    VerifySuiteConfig,
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
from src.errors import NIEError, SpecSyntaxError
from src.pir import parse_pir_spec
from src.quotient_algebra import parse_algebra_spec

console = Console(stderr=True)


class UsageError(Exception):
    """命令行用法错误"""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"无法解析整数列表: '{text}'") from None


def build_parser() -> argparse.ArgumentParser:
    """构造命令行解析器"""
    parser = _Parser(
        prog="nie",
        description="NIE 常循环码工具箱: 链环、商代数、码、对偶与主理想环构造",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default=None, help="输出格式 (默认: json)")
    common.add_argument("--out", type=str, default=None, help="输出文件路径")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ring-info", parents=[common], help="链环信息")
    p.add_argument("--ring", required=True, help='环规格, 如 "GR(4,2;mod=1,1,1)"')

    p = sub.add_parser("algebra-classify", parents=[common], help="商代数分类")
    p.add_argument("--algebra", required=True, help='代数规格 "RING;n=N;lambda=CODE"')

    for name, text in (
        ("code-repr", "码的标准表示"),
        ("code-distance", "码的最小距离"),
        ("code-dual", "零化子与对偶码"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--algebra", required=True, help='代数规格 "RING;n=N;lambda=CODE"')
        p.add_argument("--gens", action="append", default=[], help='生成元 "[c0,c1,...]", 可重复')

    for name, text in (("pir-build", "CRT 拼接主理想环上的码"), ("pir-distance", "主理想环码的最小距离")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--pir", required=True, help='主理想环规格, 如 "Z(4) x F(5)"')
        p.add_argument("--n", type=int, required=True, help="码长")
        p.add_argument("--lambdas", required=True, help="各分量的 λ 编码, 逗号分隔")
        p.add_argument(
            "--component",
            action="append",
            default=[],
            help='分量码生成元 "POLY;POLY", 每个分量一次, 空串表示零码',
        )

    p = sub.add_parser("pir-optimal", parents=[common], help="最优 CRT 构造与 Singleton 证明")
    p.add_argument("--kind", choices=["rs", "galois"], required=True)
    for flag in ("q", "k", "s", "p", "t", "m", "n"):
        p.add_argument(f"--{flag}", type=int, default=None)

    p = sub.add_parser("verify", parents=[common], help="定理验证套件")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--max-ring-size", type=int, default=None)
    p.add_argument("--max-algebra-size", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    return parser


_OPTIMAL_PARAMS = {"rs": ("q", "k", "s"), "galois": ("p", "t", "m", "n", "k", "s")}


def _optimal(args: argparse.Namespace) -> dict:
    names = _OPTIMAL_PARAMS[args.kind]
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"{args.kind} 构造缺少参数: {' '.join(missing)}")
    return pir_optimal_report(args.kind, **{name: getattr(args, name) for name in names})


def _verify(args: argparse.Namespace) -> tuple[dict, bool]:
    config = get_config()

    # 命令行参数覆盖配置
    suite_config = VerifySuiteConfig.from_config(config, args.suite)
    if args.max_ring_size is not None:
        suite_config.max_ring_size = args.max_ring_size
    if args.max_algebra_size is not None:
        suite_config.max_algebra_size = args.max_algebra_size
    if args.seed is not None:
        suite_config.seed = args.seed

    console.print(
        Panel(
            f"[bold]验证套件:[/bold]   {suite_config.suite}\n"
            f"[bold]环大小上限:[/bold] {suite_config.max_ring_size}\n"
            f"[bold]代数大小上限:[/bold] {suite_config.max_algebra_size}\n"
            f"[bold]全理想格上限:[/bold] {suite_config.full_lattice_size}\n"
            f"[bold]抽样大小:[/bold]   {suite_config.sample_size}\n"
            f"[bold]随机种子:[/bold]   {suite_config.seed}",
            title="⚙️  NIE 常循环码定理验证",
            border_style="blue",
        )
    )
    report = VerifyPipeline(suite_config).run()
    return report.to_json(), report.ok


COMMANDS: dict[str, Callable[[argparse.Namespace], dict]] = {
    "ring-info": lambda a: ring_info_report(make_ring(parse_ring_spec(a.ring))),
    "algebra-classify": lambda a: algebra_report(parse_algebra_spec(a.algebra)),
    "code-repr": lambda a: code_repr_report(build_code(parse_algebra_spec(a.algebra), a.gens)),
    "code-distance": lambda a: code_distance_report(build_code(parse_algebra_spec(a.algebra), a.gens)),
    "code-dual": lambda a: code_dual_report(build_code(parse_algebra_spec(a.algebra), a.gens)),
    "pir-build": lambda a: pir_build_report(
        build_pir_code(parse_pir_spec(a.pir), a.n, _int_list(a.lambdas), a.component)
    ),
    "pir-distance": lambda a: pir_distance_report(
        build_pir_code(parse_pir_spec(a.pir), a.n, _int_list(a.lambdas), a.component)
    ),
    "pir-optimal": _optimal,
}


def _emit(report: dict, fmt: str, out: str | None) -> None:
    text = render(report, fmt)
    if out is None:
        sys.stdout.write(text)
    else:
        save_report(text, out)


def run(argv: list[str]) -> int:
    """执行一条命令并返回退出码"""
    config = get_config()
    fmt = config.output.output_format
    out = None
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format or fmt
        out = args.out
        if args.command == "verify":
            report, ok = _verify(args)
            _emit(report, fmt, out)
            return 0 if ok else 1
        _emit(COMMANDS[args.command](args), fmt, out)
        return 0
    except (UsageError, SpecSyntaxError) as e:
        console.print(f"[red]用法错误: {e}[/red]")
        _emit(error_report(e), "json", None)
        return 2
    except NIEError as e:
        console.print(f"[red]错误: {e}[/red]")
        _emit(error_report(e), "json", None)
        return 1


def main() -> None:
    """主入口"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
