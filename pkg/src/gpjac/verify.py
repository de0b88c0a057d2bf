"""Cross-method consistency sweep over a grid of (n, k)."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from .graph import reduced_step
from .intmatrix import AbelianGroup
from .jacobian import jacobian, jacobian_via_companion, jacobian_via_laplacian
from .tables import REFERENCE_TABLES
from .trees import tau_closed, tau_k2_quadratic, tau_kirchhoff, tau_theorem1

PROPERTIES = (
    "jacobian_methods",
    "symmetry",
    "tau_theorem1",
    "group_order",
    "closed_form",
    "k2_quadratic",
)


@dataclass(frozen=True)
class CheckResult:
    prop: str
    n: int
    k: int
    ok: bool
    detail: str = ""


def _compare(prop: str, n: int, k: int, got: Callable, want: Callable) -> CheckResult:
    try:
        a, b = got(), want()
    except Exception as exc:  # any failure of a method is a finding, not a crash
        return CheckResult(prop, n, k, False, f"{type(exc).__name__}: {exc}")
    if a == b:
        return CheckResult(prop, n, k, True)
    return CheckResult(prop, n, k, False, f"{a} != {b}")


def check_cell(cell: tuple[int, int]) -> list[CheckResult]:
    n, k = cell
    results = []
    lap = None

    def laplacian_group():
        nonlocal lap
        if lap is None:
            lap = jacobian_via_laplacian(n, k)
        return lap

    results.append(
        _compare("jacobian_methods", n, k, lambda: jacobian_via_companion(n, k), laplacian_group)
    )
    if n - k != k:
        results.append(
            _compare("symmetry", n, k, lambda: jacobian_via_laplacian(n, n - k), laplacian_group)
        )
    results.append(
        _compare("tau_theorem1", n, k, lambda: tau_theorem1(n, k), lambda: tau_kirchhoff(n, k))
    )
    results.append(
        _compare("group_order", n, k, lambda: laplacian_group().order, lambda: tau_kirchhoff(n, k))
    )
    rk = reduced_step(n, k)
    if rk <= 4:
        results.append(
            _compare("closed_form", n, k, lambda: tau_closed(n, k), lambda: tau_kirchhoff(n, k))
        )
    if rk == 2:
        results.append(
            _compare(
                "k2_quadratic", n, k, lambda: tau_k2_quadratic(n)[0], lambda: tau_kirchhoff(n, k)
            )
        )
    return results


def check_tables(n_max: int, k_max: int) -> list[CheckResult]:
    results = []
    for k, rows in REFERENCE_TABLES.items():
        if k > k_max:
            continue
        for n, (factors, count) in rows.items():
            if n > n_max:
                continue
            prop = f"table_k{k}"
            results.append(
                _compare(prop, n, k, lambda: jacobian(n, k), lambda: AbelianGroup.from_factors(factors))
            )
            results.append(_compare(prop, n, k, lambda: tau_kirchhoff(n, k), lambda: count))
    return results


def grid(n_max: int, k_max: int) -> list[tuple[int, int]]:
    return [(n, k) for n in range(3, n_max + 1) for k in range(1, min(n - 1, k_max) + 1)]


def run_verify(n_max: int, k_max: int, jobs: int = 1) -> list[CheckResult]:
    """All checks on the grid 3 <= n <= n_max, 1 <= k <= min(n-1, k_max),
    in deterministic (n, k) order regardless of ``jobs``."""
    cells = grid(n_max, k_max)
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_cell: Iterable = pool.map(check_cell, cells, chunksize=4)
            results = [r for rs in per_cell for r in rs]
    else:
        results = [r for cell in cells for r in check_cell(cell)]
    return results + check_tables(n_max, k_max)


def summarize(results: list[CheckResult]) -> tuple[list[str], bool]:
    """One line per property, then one line per failure."""
    order: list[str] = []
    stats: dict[str, list[int]] = {}
    failures = []
    for r in results:
        if r.prop not in stats:
            order.append(r.prop)
            stats[r.prop] = [0, 0]
        stats[r.prop][0 if r.ok else 1] += 1
        if not r.ok:
            failures.append(r)
    lines = []
    for prop in order:
        passed, failed = stats[prop]
        status = "PASS" if not failed else "FAIL"
        lines.append(f"{status} {prop}: {passed} passed, {failed} failed")
    for r in failures:
        lines.append(f"  {r.prop} GP({r.n},{r.k}): {r.detail}")
    return lines, not failures
