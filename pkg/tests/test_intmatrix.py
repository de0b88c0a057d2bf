import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpjac.graph import build_gp, laplacian
from gpjac.intmatrix import (
    AbelianGroup,
    IntegerMatrix,
    canonical_chain,
    cokernel,
    det_bareiss,
    mat_pow,
    smith_normal_form,
)

from oracles import det_cofactor, snf_from_divisors


def matrices(max_size=5, lo=-9, hi=9, square=False):
    @st.composite
    def build(draw):
        r = draw(st.integers(1, max_size))
        c = r if square else draw(st.integers(1, max_size))
        return [[draw(st.integers(lo, hi)) for _ in range(c)] for _ in range(r)]

    return build()


def test_det_examples():
    assert det_bareiss(IntegerMatrix.identity(3)) == 1
    assert det_bareiss(IntegerMatrix([[2, 1], [1, 2]])) == 3
    lap = laplacian(build_gp(3, 2))
    assert det_bareiss(lap.minor(5, 5)) == 75


def test_det_needs_pivot_swap():
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert det_bareiss([[0, 0], [1, 2]]) == 0
    assert det_bareiss([[0, 2, 1], [0, 1, 1], [3, 0, 0]]) == 3


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det_bareiss(IntegerMatrix([[1, 2, 3], [4, 5, 6]]))


@settings(max_examples=200, deadline=None)
@given(matrices(max_size=4, square=True))
def test_det_matches_cofactor(m):
    assert det_bareiss(m) == det_cofactor(m)


def test_det_random_4x4():
    import random

    rng = random.Random(11)
    for _ in range(300):
        m = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        assert det_bareiss(m) == det_cofactor(m)


def test_snf_examples():
    assert smith_normal_form(IntegerMatrix.diagonal([2, 3])) == [1, 6]
    assert smith_normal_form(IntegerMatrix.zeros(2, 2)) == [0, 0]
    diag = smith_normal_form(laplacian(build_gp(3, 2)))
    assert [d for d in diag if d > 1] == [5, 15]
    assert diag.count(0) == 1


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_snf_matches_determinantal_divisors(m):
    assert smith_normal_form(m) == snf_from_divisors(m)


@settings(max_examples=100, deadline=None)
@given(matrices(square=True))
def test_abs_det_is_product_of_snf(m):
    d = det_bareiss(m)
    if d:
        assert abs(d) == math.prod(smith_normal_form(m))


def test_canonical_chain():
    assert canonical_chain([4, 6]) == [2, 12]
    assert canonical_chain([0, 3, 1, 2]) == [1, 1, 6, 0]
    assert canonical_chain([52230, 17410, 10, 2]) == [2, 10, 17410, 52230]


def test_cokernel_examples():
    assert cokernel(IntegerMatrix.identity(4)) == AbelianGroup((), 0)
    assert cokernel(laplacian(build_gp(5, 2))) == AbelianGroup((2, 10, 10, 10), 1)
    assert cokernel(IntegerMatrix.diagonal([4, 6])) == AbelianGroup((2, 12), 0)
    assert cokernel(IntegerMatrix([[1, 2, 3]])) == AbelianGroup((), 0)
    assert cokernel(IntegerMatrix([[2], [0]])) == AbelianGroup((2,), 1)


def test_abelian_group_validation():
    with pytest.raises(ValueError):
        AbelianGroup((1, 2))
    with pytest.raises(ValueError):
        AbelianGroup((4, 6))
    g = AbelianGroup.from_factors([6, 4, 1], free_rank=1)
    assert g == AbelianGroup((2, 12), 1)
    assert g.order == 24
    assert str(AbelianGroup((5, 15))) == "Z_5 ⊕ Z_15"
    assert str(AbelianGroup()) == "0"


def test_mat_pow_examples():
    m = IntegerMatrix([[2, -1], [7, 3]])
    assert mat_pow(m, 0) == IntegerMatrix.identity(2)
    shift = IntegerMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert mat_pow(shift, 3) == IntegerMatrix.identity(3)
    for n in (1, 5, 64, 1001):
        assert mat_pow(IntegerMatrix([[1, 1], [0, 1]]), n) == IntegerMatrix([[1, n], [0, 1]])
    with pytest.raises(ValueError):
        mat_pow(IntegerMatrix([[1, 2]]), 2)


@settings(max_examples=50, deadline=None)
@given(matrices(max_size=3, lo=-3, hi=3, square=True), st.integers(0, 8), st.integers(0, 8))
def test_mat_pow_additive(m, a, b):
    m = IntegerMatrix(m)
    assert mat_pow(m, a + b) == mat_pow(m, a) @ mat_pow(m, b)


def test_matrix_shape_errors():
    with pytest.raises(ValueError):
        IntegerMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        IntegerMatrix([[1, 2]]) @ IntegerMatrix([[1, 2]])
