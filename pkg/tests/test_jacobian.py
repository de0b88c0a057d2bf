import pytest

from gpjac.intmatrix import AbelianGroup, IntegerMatrix
from gpjac.jacobian import (
    InconsistencyError,
    _torsion,
    companion_power_minus_identity,
    jacobian,
    jacobian_via_companion,
    jacobian_via_laplacian,
)


@pytest.mark.parametrize("n,k,factors", [
    (3, 2, (5, 15)),
    (4, 3, (2, 8, 24)),
    (5, 4, (19, 95)),
])
def test_laplacian_examples(n, k, factors):
    assert jacobian_via_laplacian(n, k) == AbelianGroup(factors)


@pytest.mark.parametrize("n,k,factors", [
    (3, 2, (5, 15)),
    (20, 3, (2, 8, 8, 16, 80, 11120, 33360)),
    (10, 2, (2, 12, 60, 60, 60)),
])
def test_companion_examples(n, k, factors):
    assert jacobian_via_companion(n, k) == AbelianGroup(factors)


def test_dispatch_examples():
    assert jacobian(5, 2) == AbelianGroup((2, 10, 10, 10))
    assert jacobian(17, 4) == AbelianGroup((103, 1751, 1751, 1751))
    with pytest.raises(ValueError):
        jacobian(5, 2, "bogus")
    with pytest.raises(ValueError):
        jacobian(4, 4)


@pytest.mark.parametrize("n", range(3, 16))
def test_methods_agree(n):
    for k in range(1, n):
        lap = jacobian(n, k, "laplacian")
        assert jacobian(n, k, "companion") == lap
        assert jacobian(n, k) == lap
        assert jacobian(n, n - k, "laplacian") == lap


def test_companion_uses_reduced_step():
    # k = 7 on n = 10 reduces to 3, so the matrix is 8 x 8
    assert companion_power_minus_identity(10, 7).shape == (8, 8)
    assert jacobian_via_companion(10, 7) == jacobian_via_laplacian(10, 3)


def test_free_rank_must_be_one():
    with pytest.raises(InconsistencyError):
        _torsion(AbelianGroup((2,), 0), "test", 3, 1)
    with pytest.raises(InconsistencyError):
        _torsion(AbelianGroup((), 2), "test", 3, 1)
    assert _torsion(AbelianGroup((3,), 1), "test", 3, 1) == AbelianGroup((3,))


def test_torsion_is_not_cyclic_in_general():
    # Petersen graph: the Jacobian needs four generators
    g = jacobian(5, 2)
    assert len(g.invariant_factors) == 4
    assert isinstance(companion_power_minus_identity(5, 2), IntegerMatrix)
