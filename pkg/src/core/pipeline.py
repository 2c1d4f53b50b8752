"""定理验证流水线

流程: 构造环与代数目录 → 枚举 (或抽样) 理想 → 逐套件执行恒等式检查 → 汇总通过/失败表

每条检查记录为一个 CaseResult, 失败时附带最小复现信息 (环规格、λ、生成元)。
输出按 (套件, 检查名, 用例键) 排序, 与执行顺序无关。
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterator

from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from src.chain_ring import ChainRing, contains, make_ring, parse_ring_spec, quotient_ring
from src.code_core import (
    Code,
    LinearCode,
    canonical_representation,
    cardinality,
    code_from_basis,
    code_from_generators,
    enumerate_codewords,
    layer_form_members,
    membership,
    min_distance,
    representation_shape_ok,
    torsion_code,
    torsion_commutes_check,
    torsion_degree_bound_holds,
    weight_one_witness,
)
from src.config import AppConfig
from src.duality import (
    annihilator,
    annihilator_bruteforce,
    dual_code,
    dual_constacyclic_constants,
    dual_min_distance_check,
    dual_torsion_profile,
    expected_dual_matrix,
    inner_product_dual,
    is_dual_constacyclic,
)
from src.errors import BadParameters
from src.pir import (
    PirCode,
    crt_code,
    galois_mds_component,
    nie_pir_distance_check,
    optimal_construction,
    parse_pir_spec,
    pir_min_distance,
    pir_min_distance_bruteforce,
    project_code,
    rs_component,
)
from src.quotient_algebra import (
    Algebra,
    AlgebraKind,
    SPoly,
    classify,
    find_inverse_bruteforce,
    gamma_x_decompose,
    ideal_basis,
    ideal_lattice,
    lattice_is_chain,
    make_algebra,
    principal_ideals,
    s_invert,
    s_is_unit,
    shift_codes,
)

console = Console(stderr=True)

SUITES = ("units", "torsion", "representation", "distance", "duality", "crt", "optimal")

RING_CATALOGUE = ("Z(4)", "Z(8)", "Z(9)", "F(4)", "GR(4,2)", "FU(2,2)")
LENGTHS = (1, 2, 3)
PIR_CATALOGUE = ("F(3) x F(3)", "Z(4) x F(5)")
PIR_DISTANCE_LIMIT = 2**16


@dataclass
class VerifySuiteConfig:
    """验证套件配置, 默认值来自 VerifyConfig"""

    suite: str = "all"
    max_ring_size: int = 512
    max_algebra_size: int = 4096
    full_lattice_size: int = 512
    sample_size: int = 24
    seed: int = 0

    @classmethod
    def from_config(cls, config: AppConfig, suite: str = "all") -> "VerifySuiteConfig":
        v = config.verify
        return cls(
            suite=suite,
            max_ring_size=v.max_ring_size,
            max_algebra_size=v.max_algebra_size,
            full_lattice_size=v.full_lattice_size,
            sample_size=v.sample_size,
            seed=v.seed,
        )

    def suites(self) -> list[str]:
        if self.suite == "all":
            return list(SUITES)
        if self.suite not in SUITES:
            raise BadParameters(f"未知的验证套件: {self.suite}")
        return [self.suite]


@dataclass
class CaseResult:
    """单条检查结果"""

    suite: str
    check: str
    key: str
    passed: bool
    reproducer: dict | None = None
    detail: str = ""

    @property
    def sort_key(self) -> tuple[str, str, str]:
        return self.suite, self.check, self.key


@dataclass
class VerifyReport:
    """全部检查结果与汇总"""

    config: VerifySuiteConfig
    results: list[CaseResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def table(self) -> list[dict]:
        counts: dict[tuple[str, str], list[int]] = {}
        for r in self.results:
            entry = counts.setdefault((r.suite, r.check), [0, 0])
            entry[0 if r.passed else 1] += 1
        return [
            {"suite": suite, "check": check, "passed": p, "failed": f}
            for (suite, check), (p, f) in sorted(counts.items())
        ]

    def to_json(self) -> dict:
        failures = [
            {
                "suite": r.suite,
                "check": r.check,
                "key": r.key,
                "reproducer": r.reproducer,
                "detail": r.detail,
            }
            for r in sorted(self.results, key=lambda r: r.sort_key)
            if not r.passed
        ]
        return {
            "schema": 1,
            "command": "verify",
            "config": {
                "suite": self.config.suite,
                "max_ring_size": self.config.max_ring_size,
                "max_algebra_size": self.config.max_algebra_size,
                "full_lattice_size": self.config.full_lattice_size,
                "sample_size": self.config.sample_size,
                "seed": self.config.seed,
            },
            "ok": self.ok,
            "table": self.table(),
            "failures": failures,
        }


def _reproducer(alg: Algebra, gens: list[SPoly] | None = None) -> dict:
    return {
        "ring": alg.ring.spec.to_text(),
        "n": alg.n,
        "lambda": alg.lam,
        "generators": [g.to_text() for g in gens] if gens is not None else [],
    }


def _code_reproducer(code: Code) -> dict:
    return _reproducer(code.algebra, list(code.generators))


def _code_key(code: Code) -> str:
    rows = ";".join(",".join(str(c) for c in row) for row in code.basis)
    return f"{code.algebra.to_text()}|{rows}"


class VerifyPipeline:
    """定理验证流水线

    完整流程:
    1. 环目录 → 过滤 |R| ≤ max_ring_size
    2. NIE 代数目录 → 每个环、每个码长、每个不可逆 λ, 过滤 |S| ≤ max_algebra_size
    3. 理想: |S| ≤ full_lattice_size 时取整个理想格, 否则取全部主理想加抽样元素对生成的理想
    4. 逐套件检查并汇总
    """

    def __init__(self, config: VerifySuiteConfig) -> None:
        self.config = config
        self._ideals: dict[Algebra, list[Code]] = {}

    # ===== 目录 =====

    def rings(self) -> list[ChainRing]:
        rings = [make_ring(parse_ring_spec(text)) for text in RING_CATALOGUE]
        return [r for r in rings if r.size <= self.config.max_ring_size]

    def algebras(self) -> list[Algebra]:
        result = []
        for ring in self.rings():
            for n in LENGTHS:
                if ring.size**n > self.config.max_algebra_size:
                    continue
                for lam in range(ring.size):
                    if not ring.is_unit(lam):
                        result.append(make_algebra(ring, n, lam))
        return result

    def ideals(self, alg: Algebra) -> list[Code]:
        """代数的理想集合 (按标准形去重, 顺序确定)"""
        cached = self._ideals.get(alg)
        if cached is not None:
            return cached
        if alg.size <= self.config.full_lattice_size:
            codes = [code_from_basis(alg, basis) for basis in ideal_lattice(alg)]
        else:
            found = {basis: code_from_generators(alg, [g]) for basis, g in principal_ideals(alg).items()}
            rng = random.Random(f"{self.config.seed}|{alg.to_text()}")
            pool = list(alg.elements())
            sample = rng.sample(pool, min(self.config.sample_size, len(pool)))
            for a, b in combinations(sample, 2):
                basis = ideal_basis(alg, [a, b])
                if basis not in found:
                    found[basis] = code_from_generators(alg, [a, b])
            codes = [found[basis] for basis in sorted(found)]
        self._ideals[alg] = codes
        return codes

    # ===== 执行 =====

    def run(self) -> VerifyReport:
        report = VerifyReport(self.config)
        handlers: dict[str, Callable[[], Iterator[CaseResult]]] = {
            "units": self._suite_units,
            "torsion": self._suite_torsion,
            "representation": self._suite_representation,
            "distance": self._suite_distance,
            "duality": self._suite_duality,
            "crt": self._suite_crt,
            "optimal": self._suite_optimal,
        }
        suites = self.config.suites()
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=console,
        ) as progress:
            task = progress.add_task("验证中...", total=len(suites))
            for idx, suite in enumerate(suites, 1):
                progress.update(task, description=f"套件 {suite} ({idx}/{len(suites)})...")
                report.results.extend(handlers[suite]())
                progress.advance(task)
        report.results.sort(key=lambda r: r.sort_key)
        self.print_table(report)
        return report

    def print_table(self, report: VerifyReport) -> None:
        table = Table(title="验证结果")
        table.add_column("套件", style="cyan")
        table.add_column("检查")
        table.add_column("通过", justify="right", style="green")
        table.add_column("失败", justify="right", style="red")
        for row in report.table():
            table.add_row(row["suite"], row["check"], str(row["passed"]), str(row["failed"]))
        console.print(table)
        if report.ok:
            console.print(f"[green]✅ 全部 {len(report.results)} 项检查通过[/green]")
        else:
            failed = sum(1 for r in report.results if not r.passed)
            console.print(f"[red]❌ {failed} 项检查失败[/red]")

    # ===== 套件: 单位与结构 =====

    def _suite_units(self) -> Iterator[CaseResult]:
        suite = "units"
        for ring in self.rings():
            key = ring.spec.to_text()
            repro = {"ring": key}
            elements = range(ring.size)

            ok = all(ring.is_unit(a) == any(ring.mul(a, b) == 1 for b in elements) for a in elements)
            yield CaseResult(suite, "ring unit criterion", key, ok, repro)

            digit_tuples = [ring.digits(a) for a in elements]
            ok = len(set(digit_tuples)) == ring.size and all(
                ring.from_digits(ds) == a for a, ds in zip(elements, digit_tuples)
            )
            yield CaseResult(suite, "gamma-adic bijection", key, ok, repro)

            ok = all(
                len({ring.mul(ring.gamma_powers[l], a) for a in elements}) == ring.q ** (ring.e - l)
                for l in range(ring.e + 1)
            )
            yield CaseResult(suite, "gamma power ideal sizes", key, ok, repro)

            zeta, q = ring.zeta, ring.q
            ok = ring.pow(zeta, q - 1) == 1 and all(ring.pow(zeta, k) != 1 for k in range(1, q - 1))
            yield CaseResult(suite, "teichmuller generator order", key, ok, repro)

            teich = ring.teichmuller
            ok = all(ring.is_unit(ring.sub(a, b)) for a, b in combinations(teich, 2))
            yield CaseResult(suite, "teichmuller differences are units", key, ok, repro)

            ok = True
            for j in range(1, ring.e):
                quotient = quotient_ring(ring, j)
                target, mu = quotient.ring, quotient.mu_code
                for a, b in product(elements, repeat=2):
                    if mu(ring.add(a, b)) != target.add(mu(a), mu(b)) or mu(ring.mul(a, b)) != target.mul(
                        mu(a), mu(b)
                    ):
                        ok = False
                        break
            yield CaseResult(suite, "quotient map is a homomorphism", key, ok, repro)

            for n in LENGTHS:
                if ring.size**n > self.config.full_lattice_size:
                    continue
                vectors = list(product(elements, repeat=n))
                ok = all(
                    (len({shift_codes(ring, lam, v) for v in vectors}) == len(vectors)) == ring.is_unit(lam)
                    for lam in elements
                )
                yield CaseResult(suite, "shift bijective iff lambda unit", f"{key};n={n}", ok, {**repro, "n": n})

        for alg in self.algebras():
            yield from self._algebra_unit_checks(alg)

    def _algebra_unit_checks(self, alg: Algebra) -> Iterator[CaseResult]:
        suite, key, repro = "units", alg.to_text(), _reproducer(alg)
        one = alg.one()
        small = alg.size <= self.config.full_lattice_size
        unit_ok, inverse_ok, reassembly_ok = True, True, True
        bad = None
        for a in alg.elements():
            if small:
                has_inverse = find_inverse_bruteforce(a) is not None
            else:
                has_inverse = contains(alg.ring, ideal_basis(alg, [a]), one.coeffs)
            claimed = s_is_unit(a)
            if claimed != has_inverse:
                unit_ok, bad = False, a
            if claimed and a * s_invert(a) != one:
                inverse_ok, bad = False, a
            if gamma_x_decompose(a).reassemble() != a:
                reassembly_ok, bad = False, a
        detail = f"element {bad.to_text()}" if bad is not None else ""
        yield CaseResult(suite, "algebra unit criterion", key, unit_ok, repro, detail)
        yield CaseResult(suite, "geometric series inverse", key, inverse_ok, repro, detail)
        yield CaseResult(suite, "gamma-x decomposition reassembles", key, reassembly_ok, repro, detail)

        big_n = alg.x_nilpotency
        ok = alg.x_power(big_n).is_zero() and not alg.x_power(big_n - 1).is_zero()
        yield CaseResult(suite, "x nilpotency index", key, ok, repro)

        kind = classify(alg)
        ok = kind.is_chain == lattice_is_chain(alg)
        if ok and kind.is_chain and small:
            ok = len(ideal_lattice(alg)) == kind.ideal_count
        yield CaseResult(suite, "classification matches ideal lattice", key, ok, repro, kind.kind.value)

    # ===== 套件: 挠码与基数 =====

    def _suite_torsion(self) -> Iterator[CaseResult]:
        suite = "torsion"
        for alg in self.algebras():
            ring, n = alg.ring, alg.n
            rng = random.Random(f"{self.config.seed}|torsion|{alg.to_text()}")
            for code in self.ideals(alg):
                key, repro = _code_key(code), _code_reproducer(code)
                count = sum(1 for _ in enumerate_codewords(code))
                yield CaseResult(suite, "cardinality formula", key, cardinality(code) == count, repro)

                degrees = code.torsional_degrees
                ok = all(n >= a >= b >= 0 for a, b in zip((n,) + degrees, degrees))
                yield CaseResult(suite, "torsional degrees decrease", key, ok, repro, str(degrees))

                ok = all(torsion_code(code, i).dimension == n - degrees[i] for i in range(ring.e))
                yield CaseResult(suite, "torsion codes are principal", key, ok, repro)

                if ring.e > 1:
                    ok = all(
                        torsion_commutes_check(code, j, i)
                        for j in range(1, ring.e + 1)
                        for i in range(j)
                    )
                    yield CaseResult(suite, "torsion commutes with quotients", key, ok, repro)

                ok = True
                for _ in range(4):
                    g = alg.poly([rng.randrange(ring.size) for _ in range(n)])
                    i, t = rng.randrange(ring.e), rng.randrange(n)
                    ok = ok and torsion_degree_bound_holds(code, i, t, g)
                yield CaseResult(suite, "torsional degree lower bound", key, ok, repro)

    # ===== 套件: 标准表示 =====

    def _suite_representation(self) -> Iterator[CaseResult]:
        suite = "representation"
        for alg in self.algebras():
            chain_via_x = classify(alg).kind == AlgebraKind.CHAIN_VIA_X
            for code in self.ideals(alg):
                key, repro = _code_key(code), _code_reproducer(code)
                rep = canonical_representation(code)
                yield CaseResult(suite, "representation shape", key, representation_shape_ok(code, rep), repro)

                regenerated = code_from_generators(alg, list(rep))
                yield CaseResult(suite, "representation regenerates code", key, regenerated == code, repro)
                yield CaseResult(
                    suite, "representation idempotent", key, canonical_representation(regenerated) == rep, repro
                )

                degrees = code.torsional_degrees
                ok = all(
                    layer_form_members(code, i) == [rep[i]] for i in range(alg.ring.e) if degrees[i] < alg.n
                )
                yield CaseResult(suite, "representation uniqueness", key, ok, repro)

                if chain_via_x:
                    yield CaseResult(
                        suite, "chain closed form", key, rep == self._chain_closed_form(code), repro
                    )

    @staticmethod
    def _chain_closed_form(code: Code) -> tuple[SPoly, ...]:
        """C = <x^{kn+w}> 时为 <<0, ..., 0, γ^k x^w, γ^{k+1}, ..., γ^{e-1}>>"""
        alg, ring, n = code.algebra, code.ring, code.n
        degrees = code.torsional_degrees
        k = sum(1 for t in degrees if t == n)
        result = []
        for i in range(ring.e):
            if i < k:
                result.append(alg.zero())
            elif i == k:
                result.append(alg.x_power(degrees[k]).scale(ring.gamma_powers[k]))
            else:
                result.append(alg.constant(ring.gamma_powers[i]))
        return tuple(result)

    # ===== 套件: 最小距离 =====

    def _suite_distance(self) -> Iterator[CaseResult]:
        suite = "distance"
        for alg in self.algebras():
            for code in self.ideals(alg):
                key, repro = _code_key(code), _code_reproducer(code)
                d = min_distance(code)
                expected = alg.n + 1 if code.is_zero() else 1
                yield CaseResult(suite, "nonzero NIE code has distance 1", key, d == expected, repro, f"d={d}")
                if code.is_zero():
                    continue
                witness = weight_one_witness(code)
                ok = witness.weight() == 1 and membership(code, witness)
                yield CaseResult(suite, "weight-one witness", key, ok, repro, witness.to_text())

    # ===== 套件: 对偶 =====

    def _suite_duality(self) -> Iterator[CaseResult]:
        suite = "duality"
        for alg in self.algebras():
            ring, n = alg.ring, alg.n
            chain = classify(alg).is_chain
            small = alg.size <= self.config.full_lattice_size
            for code in self.ideals(alg):
                key, repro = _code_key(code), _code_reproducer(code)
                ann = annihilator(code)
                dual = dual_code(code)
                yield CaseResult(suite, "reversed annihilator is the dual", key, dual == inner_product_dual(code), repro)
                ok = ann.module.size * code.module.size == ring.size**n
                yield CaseResult(suite, "annihilator cardinality", key, ok, repro)
                yield CaseResult(suite, "annihilator is an ideal", key, ann.is_ideal(), repro)
                if small:
                    yield CaseResult(suite, "annihilator oracle", key, ann == annihilator_bruteforce(code), repro)
                ok = ann.torsional_degrees == dual_torsion_profile(code)
                yield CaseResult(suite, "annihilator torsion profile", key, ok, repro)
                if not code.is_full():
                    d = dual_min_distance_check(code)
                    yield CaseResult(suite, "dual has distance 1", key, d == 1, repro, f"d={d}")
                if chain:
                    expected = LinearCode.span(ring, expected_dual_matrix(code), n)
                    yield CaseResult(suite, "block dual matrix", key, expected == dual, repro)
                verdict = is_dual_constacyclic(code)
                constants = dual_constacyclic_constants(code)
                ok = verdict.constacyclic == bool(constants)
                if verdict.constacyclic:
                    ok = ok and len(constants) == ring.size
                yield CaseResult(suite, "dual constacyclic criterion", key, ok, repro)

    # ===== 套件: CRT 与主理想环距离 =====

    def _component_codes(self, ring: ChainRing, n: int) -> list[Code]:
        lambdas = sorted({0, 1, ring.gamma})
        codes = []
        for lam in lambdas:
            alg = make_algebra(ring, n, lam)
            codes.extend(code_from_generators(alg, [g]) for g in principal_ideals(alg).values())
        return codes

    def _suite_crt(self) -> Iterator[CaseResult]:
        suite = "crt"
        for text in PIR_CATALOGUE:
            pir = parse_pir_spec(text)
            repro = {"pir": text}
            ok = True
            elements = list(pir.elements())
            for a, b in product(elements, repeat=2):
                added, multiplied = pir.add(a, b), pir.mul(a, b)
                for t, ring in enumerate(pir.components, start=1):
                    x, y = pir.psi(a, t), pir.psi(b, t)
                    if pir.psi(added, t) != ring.add(x, y) or pir.psi(multiplied, t) != ring.mul(x, y):
                        ok = False
            yield CaseResult(suite, "componentwise isomorphism", text, ok, repro)

            rng = random.Random(f"{self.config.seed}|crt|{text}")
            for n in LENGTHS:
                per_component = [self._component_codes(ring, n) for ring in pir.components]
                combos = list(product(*per_component))
                if len(combos) > self.config.sample_size:
                    combos = rng.sample(combos, self.config.sample_size)
                for comps in combos:
                    code = crt_code(pir, n, [c.algebra.lam for c in comps], list(comps))
                    yield from self._crt_checks(code, text)

    def _crt_checks(self, code: PirCode, text: str) -> Iterator[CaseResult]:
        suite = "crt"
        key = f"{text};n={code.n}|" + "|".join(_code_key(c) for c in code.components)
        repro = {
            "pir": text,
            "n": code.n,
            "lambdas": list(code.lambdas),
            "components": [[g.to_text() for g in c.generators] for c in code.components],
        }
        ok = all(project_code(code, t) == comp for t, comp in enumerate(code.components, start=1))
        if ok and code.size <= PIR_DISTANCE_LIMIT:
            words = list(code.codewords())
            projections = [
                {x.coeffs for x in enumerate_codewords(comp)} for comp in code.components
            ]
            ok = len(set(words)) == code.size and all(
                code.project(w, t) in projections[t - 1]
                for w in words
                for t in range(1, code.pir.s + 1)
            )
        yield CaseResult(suite, "CRT round trip", key, ok, repro)

        if code.is_zero() or code.size > PIR_DISTANCE_LIMIT:
            return
        d = pir_min_distance(code)
        brute = pir_min_distance_bruteforce(code)
        yield CaseResult(suite, "PIR distance is component minimum", key, d == brute, repro, f"d={d}, brute={brute}")

        witness = nie_pir_distance_check(code)
        if witness is not None:
            weight = sum(1 for a in witness.word if a != code.pir.zero)
            ok = weight == 1 and code.contains(witness.word) and brute == 1
            yield CaseResult(suite, "NIE component forces distance 1", key, ok, repro)

    # ===== 套件: 最优构造 =====

    def _suite_optimal(self) -> Iterator[CaseResult]:
        suite = "optimal"
        for q in (3, 4, 5):
            for k in range(1, q):
                comp = rs_component(q, k)
                n = q - 1
                ok = comp.module.size == q**k and min_distance(comp) == n - k + 1
                yield CaseResult(suite, "Reed-Solomon component is MDS", f"q={q};k={k}", ok, {"q": q, "k": k})

        for p, t, m, n, k in ((2, 2, 2, 3, 1), (2, 2, 2, 3, 2), (2, 1, 2, 3, 1), (3, 2, 1, 2, 1)):
            comp = galois_mds_component(p, t, m, n, k)
            params = {"p": p, "t": t, "m": m, "n": n, "k": k}
            ok = comp.module.size == p ** (t * m * k) and min_distance(comp) == n - k + 1
            yield CaseResult(suite, "Galois ring component is MDS", str(params), ok, params)

        expected = {
            ("rs", (("q", 5), ("k", 1), ("s", 2))): (5, 4, Fraction(9, 2)),
            ("galois", (("p", 2), ("t", 2), ("m", 2), ("n", 3), ("k", 1), ("s", 2))): (16, 3, Fraction(7, 2)),
        }
        cases = list(expected) + [
            ("rs", (("q", 3), ("k", 1), ("s", 2))),
            ("rs", (("q", 4), ("k", 1), ("s", 3))),
            ("rs", (("q", 5), ("k", 2), ("s", 3))),
            ("galois", (("p", 2), ("t", 2), ("m", 2), ("n", 3), ("k", 2), ("s", 3))),
        ]
        for kind, items in cases:
            params = dict(items)
            key = f"{kind}:{params}"
            code, cert = optimal_construction(kind, **params)
            base = code.components[0]
            ok = (
                cert.distance == min_distance(base)
                and code.size == base.module.size ** (code.pir.s - 1)
                and cert.distance > cert.singleton_bound - 1
                and cert.optimal
            )
            if (kind, items) in expected:
                size, d, bound = expected[(kind, items)]
                ok = ok and (cert.cardinality, cert.distance, cert.singleton_bound) == (size, d, bound)
            yield CaseResult(suite, "optimal construction certificate", key, ok, {"kind": kind, **params})

        try:
            optimal_construction("rs", q=5, k=1, s=1)
            rejected = False
        except BadParameters:
            rejected = True
        yield CaseResult(suite, "construction preconditions", "rs:q=5,k=1,s=1", rejected, {"kind": "rs"})
