import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpjac.poly import LaurentPolynomial, Z
from gpjac.trees import (
    K3_CHARACTERISTIC,
    QuadExtElement,
    cross_product_polynomial,
    k3_characteristic_from_identity,
    tau,
    tau_closed,
    tau_k2_quadratic,
    tau_k2_recurrence,
    tau_k3_recurrence,
    tau_k4_recurrence,
    tau_kirchhoff,
    tau_prism,
    tau_theorem1,
)

LP = LaurentPolynomial


def is_square(x: int) -> bool:
    return x >= 0 and math.isqrt(x) ** 2 == x


# -- examples -----------------------------------------------------------------

@pytest.mark.parametrize("n,k,want", [(5, 2, 2000), (3, 1, 75), (6, 4, 7350)])
def test_kirchhoff_examples(n, k, want):
    assert tau_kirchhoff(n, k) == want


@pytest.mark.parametrize("n,k,want", [(3, 2, 75), (4, 3, 384), (19, 4, 14906272578931)])
def test_chebyshev_product_examples(n, k, want):
    assert tau_theorem1(n, k) == want


@pytest.mark.parametrize("n,want", [(3, 75), (4, 384), (5, 1805)])
def test_prism_examples(n, want):
    assert tau_prism(n) == want
    assert tau_kirchhoff(n, n - 1) == want


def test_k2_quadratic_examples():
    assert tau_k2_quadratic(3) == (75, 15, 5)
    assert tau_k2_quadratic(4)[0] == 196
    assert tau_k2_quadratic(10)[0] == 5184000


@pytest.mark.parametrize("fn,n,want", [
    (tau_k2_recurrence, 3, 75),
    (tau_k2_recurrence, 5, 2000),
    (tau_k2_recurrence, 20, 28295350272000),
    (tau_k3_recurrence, 4, 384),
    (tau_k3_recurrence, 6, 2916),
    (tau_k3_recurrence, 7, 48223),
    (tau_k3_recurrence, 15, 18186486000),
    (tau_k4_recurrence, 5, 1805),
    (tau_k4_recurrence, 8, 42632),
    (tau_k4_recurrence, 12, 78336300),
])
def test_recurrence_examples(fn, n, want):
    assert fn(n) == want


def test_dispatch_examples():
    for method in ("auto", "kirchhoff", "theorem1", "closed"):
        assert tau(7, 2, method) == 48223
    assert tau(9, 3) == 751689
    assert tau(20, 4, "theorem1") == 66513184046420
    with pytest.raises(ValueError):
        tau(7, 2, "bogus")


def test_closed_form_rejects_large_step():
    with pytest.raises(ValueError):
        tau_closed(13, 5)
    with pytest.raises(ValueError):
        tau(13, 6, "closed")
    # reduced step 13 - 9 = 4 is covered
    assert tau(13, 9, "closed") == tau_kirchhoff(13, 4)


def test_recurrences_reject_small_n():
    with pytest.raises(ValueError):
        tau_k3_recurrence(3)
    with pytest.raises(ValueError):
        tau_k4_recurrence(4)


# -- structure ----------------------------------------------------------------

@pytest.mark.parametrize("n", range(3, 26))
def test_symmetry_and_positivity(n):
    for k in range(1, n):
        t = tau_kirchhoff(n, k)
        assert t > 0
        assert t == tau_kirchhoff(n, n - k)
        assert tau(n, k) == t


def test_perfect_square_structure():
    for n in range(3, 101):
        assert tau_k2_recurrence(n) % n == 0 and is_square(tau_k2_recurrence(n) // n)
    for n in range(5, 101):
        assert tau_k4_recurrence(n) % n == 0 and is_square(tau_k4_recurrence(n) // n)
    for n in range(4, 101):
        t = tau_k3_recurrence(n)
        d = 6 * n if n % 2 == 0 else n
        assert t % d == 0 and is_square(t // d)


@pytest.mark.parametrize("n", range(3, 41))
def test_chebyshev_product_matches_kirchhoff(n):
    for k in range(1, min(n - 1, 6) + 1):
        assert tau_theorem1(n, k) == tau_kirchhoff(n, k)


# -- Q(sqrt d) ----------------------------------------------------------------

def test_quad_ext_arithmetic():
    r = QuadExtElement(1, 1, 5)
    assert r * r == QuadExtElement(6, 2, 5)
    assert r * r.conjugate() == -4
    assert r.norm() == -4
    assert 1 - r == QuadExtElement(0, -1, 5)
    assert abs(float(r) - (1 + 5 ** 0.5)) < 1e-12
    with pytest.raises(ValueError):
        r + QuadExtElement(1, 1, 7)


quads = st.builds(
    lambda a, b: QuadExtElement(Fraction(a), Fraction(b), 29),
    st.integers(-50, 50), st.integers(-50, 50),
)


@settings(max_examples=100, deadline=None)
@given(quads, quads, quads)
def test_quad_ext_ring_laws(x, y, w):
    assert (x * y) * w == x * (y * w)
    assert x * (y + w) == x * y + x * w
    assert (x * y).norm() == x.norm() * y.norm()


def test_quad_ext_root_of_h2():
    w = QuadExtElement(Fraction(1, 4), Fraction(1, 4), 29)
    assert 4 * w * w - 2 * w - 7 == 0


# -- where the recurrences come from ------------------------------------------

def test_k3_cross_product_polynomial():
    want = LP(list(K3_CHARACTERISTIC))
    assert cross_product_polynomial(3) == want
    assert k3_characteristic_from_identity() == want


def test_k2_cross_product_polynomial():
    w2 = cross_product_polynomial(2)
    assert w2 == LP([1, 7, 13, 7, 1])
    # the degree-4 recurrence polynomial C(z) relates to W2 through z -> -z^2
    c = LP.from_high([1, -1, -3, 1, 1])
    c_neg = c(-Z)
    assert c * c_neg == w2(-(Z ** 2))


def test_cross_product_rejects_large_k():
    with pytest.raises(ValueError):
        cross_product_polynomial(4)
