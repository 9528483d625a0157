"""Brute-force ground truth for code parameters on desk-scale instances.

Every oracle enumerates exhaustively and is independent of the closed-form
parameter formulas; budget overruns raise (or are reported as skipped by
verify_params) and never count as a pass.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dataclass_field
from itertools import product

import numpy as np

from . import _kernels
from .code import (
    CartesianCode,
    dimension_formula,
    extremal_codeword,
    min_distance_formula,
)
from .errors import BudgetExceededError
from .poly import grevlex_key, monomial_rows


@dataclass(frozen=True)
class OracleBudget:
    """Hard caps checked before any enumeration starts."""

    max_words: int = 1 << 24
    max_points: int = 1 << 16

    def __post_init__(self):
        if self.max_words < 1 or self.max_points < 1:
            raise ValueError("budget caps must be positive")


DEFAULT_BUDGET = OracleBudget()

# Entry-count ceiling for the rank oracle's monomial matrix.  max_words caps
# enumerated codewords and max_points the grid, but the all-monomials matrix
# can outgrow memory on its own (row count is binomial in n and d).
MAX_RANK_ENTRIES = 1 << 26


def _min_weight(code: CartesianCode, budget, *, target=None, corrupt=False, method="auto") -> int:
    mat = code.generator_matrix()
    total = code.field.q ** mat.rows
    if total > budget.max_words:
        raise BudgetExceededError(required=total, limit=budget.max_words)
    arr = mat.array
    if corrupt:
        arr = arr.copy()
        arr[0, 0] = (int(arr[0, 0]) + 1) % code.field.q
    return _kernels.scan_min_weight(arr, code.field.tables(), target=target, method=method)


def brute_min_distance(
    code: CartesianCode,
    budget: OracleBudget | None = None,
    *,
    confirm_only: bool = False,
    method: str = "auto",
) -> int:
    """Minimum weight over every nonzero message, by exhaustive encoding.

    confirm_only allows the scan to stop once the running minimum reaches the
    closed-form distance; the default is a complete, formula-independent pass.
    Complete default scans are cached on the code object.
    """
    budget = budget or DEFAULT_BUDGET
    total = code.field.q ** code.generator_matrix().rows
    if total > budget.max_words:
        raise BudgetExceededError(required=total, limit=budget.max_words)
    if confirm_only:
        target = min_distance_formula(code.cards, code.d)
        return _min_weight(code, budget, target=target, method=method)
    if code._min_weight is None or method != "auto":
        w = _min_weight(code, budget, method=method)
        if method == "auto":
            code._min_weight = w
        return w
    return code._min_weight


def max_zero_search(
    code: CartesianCode,
    budget: OracleBudget | None = None,
    *,
    method: str = "auto",
) -> int:
    """Maximum number of grid zeros over nonzero normal-form polynomials of degree <= d.

    Messages over the footprint basis are exactly those polynomials, and a
    word's zero count is length - weight, so the full scan behind
    brute_min_distance answers this too.
    """
    return code.length - brute_min_distance(code, budget, method=method)


def brute_rank_dimension(
    code: CartesianCode,
    budget: OracleBudget | None = None,
    *,
    method: str = "auto",
) -> int:
    """Rank over F_q of the evaluations of ALL monomials of degree <= d.

    Unlike the generator matrix this does not restrict to footprint
    monomials, so equality with dimension_formula is a real check.
    """
    budget = budget or DEFAULT_BUDGET
    arr = _full_monomial_matrix(code, budget)
    return _kernels.rank_mod(arr, code.field.tables(), method=method)


def _full_monomial_matrix(code: CartesianCode, budget, *, corrupt=False) -> np.ndarray:
    grid = code.grid
    if grid.size > budget.max_points:
        raise BudgetExceededError(required=grid.size, limit=budget.max_points)
    exps = [
        e
        for e in product(*(range(code.d + 1) for _ in range(grid.n)))
        if sum(e) <= code.d
    ]
    if len(exps) * grid.size > MAX_RANK_ENTRIES:
        raise BudgetExceededError(required=len(exps) * grid.size, limit=MAX_RANK_ENTRIES)
    exps.sort(key=grevlex_key)
    arr = monomial_rows(grid, exps)
    if corrupt and arr.shape[0] >= 2:
        arr[1] = arr[0]
    return arr


@dataclass
class CheckResult:
    name: str
    d: int
    formula: int | None
    oracle: int | None
    status: str  # "pass" | "fail" | "skipped"
    elapsed: float
    detail: str | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "d": self.d,
            "formula": self.formula,
            "oracle": self.oracle,
            "status": self.status,
            "elapsed": self.elapsed,
            "detail": self.detail,
        }


@dataclass
class VerifyReport:
    q: int
    cards: tuple[int, ...]
    checks: list[CheckResult] = dataclass_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "cards": list(self.cards),
            "checks": [c.to_dict() for c in self.checks],
            "ok": self.ok,
        }


def verify_params(
    code: CartesianCode,
    budget: OracleBudget | None = None,
    *,
    corrupt: bool = False,
    method: str = "auto",
) -> VerifyReport:
    """Compare closed-form parameters against the brute-force oracles.

    Budget overruns mark a check as skipped, never passed.  `corrupt` damages
    the matrices before checking (negative control for the harness itself);
    the failure detail then carries the witnessing values.
    """
    budget = budget or DEFAULT_BUDGET
    report = VerifyReport(q=code.field.q, cards=code.cards)
    cards, d = code.cards, code.d
    dim = dimension_formula(cards, d)
    delta = min_distance_formula(cards, d)
    length = code.length

    def run(name, formula_value, fn):
        t0 = time.perf_counter()
        try:
            got = fn()
        except BudgetExceededError as exc:
            report.checks.append(
                CheckResult(name, d, formula_value, None, "skipped",
                            time.perf_counter() - t0, str(exc))
            )
            return
        elapsed = time.perf_counter() - t0
        if got == formula_value:
            report.checks.append(CheckResult(name, d, formula_value, got, "pass", elapsed))
        else:
            report.checks.append(
                CheckResult(name, d, formula_value, got, "fail", elapsed,
                            f"oracle {got} != formula {formula_value}")
            )

    def rank_oracle():
        arr = _full_monomial_matrix(code, budget, corrupt=corrupt)
        return _kernels.rank_mod(arr, code.field.tables(), method=method)

    scan: dict[str, int] = {}

    def min_weight_oracle():
        if "w" not in scan:
            scan["w"] = _min_weight(code, budget, corrupt=corrupt, method=method)
        return scan["w"]

    run("rank_dimension", dim, rank_oracle)
    run("min_distance", delta, min_weight_oracle)
    run("max_zeros", length - delta, lambda: length - min_weight_oracle())
    if 1 <= d <= code.regularity - 1:
        run(
            "extremal_weight",
            delta,
            lambda: int(np.count_nonzero(extremal_codeword(code)[1])),
        )
    return report
