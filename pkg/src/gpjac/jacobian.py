"""Jacobian (sandpile) group of GP(n, k).

Two independent routes: the Smith form of the full 2n x 2n Laplacian, and
the cokernel of A^n - I for the (2k+2) x (2k+2) companion matrix A of
P(z) = (3 - z - 1/z)(3 - z^k - z^-k) - 1.
"""
from __future__ import annotations

from .graph import build_gp, laplacian, reduced_step, validate
from .intmatrix import AbelianGroup, IntegerMatrix, cokernel, mat_pow
from .poly import build_P, companion_matrix

METHODS = ("auto", "laplacian", "companion")


class InconsistencyError(RuntimeError):
    """A computation contradicted a structural fact (e.g. free rank != 1)."""


def _torsion(group: AbelianGroup, route: str, n: int, k: int) -> AbelianGroup:
    if group.free_rank != 1:
        raise InconsistencyError(
            f"{route} cokernel for GP({n},{k}) has free rank {group.free_rank}, expected 1"
        )
    return group.torsion


def jacobian_via_laplacian(n: int, k: int) -> AbelianGroup:
    g = build_gp(n, k)
    return _torsion(cokernel(laplacian(g)), "Laplacian", n, k)


def companion_power_minus_identity(n: int, k: int) -> IntegerMatrix:
    """A^n - I for the companion matrix of P with the reduced step."""
    a = companion_matrix(build_P(reduced_step(n, k)))
    return mat_pow(a, n) - IntegerMatrix.identity(a.rows)


def jacobian_via_companion(n: int, k: int) -> AbelianGroup:
    return _torsion(cokernel(companion_power_minus_identity(n, k)), "companion", n, k)


def jacobian(n: int, k: int, method: str = "auto") -> AbelianGroup:
    """Jac(GP(n, k)) as invariant factors (free_rank 0).

    ``auto`` picks the companion route whenever its matrix is smaller than
    the Laplacian, which is always the case for the reduced step.
    """
    validate(n, k)
    if method == "auto":
        method = "companion" if reduced_step(n, k) + 1 < n else "laplacian"
    if method == "laplacian":
        return jacobian_via_laplacian(n, k)
    if method == "companion":
        return jacobian_via_companion(n, k)
    raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
