"""Spanning-tree counts of GP(n, k) by independent exact methods.

* Kirchhoff: determinant of the reduced Laplacian (the reference value).
* Chebyshev product over the roots of h_k, evaluated with resultants.
* Closed forms for k = 1..4: the prism formula, the Q(sqrt 29) formula and
  integer linear recurrences for k = 2, 3, 4.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .graph import build_gp, laplacian, reduced_step, validate
from .intmatrix import det_bareiss
from .poly import (
    LaurentPolynomial,
    LinearRecurrence,
    build_h,
    cheb_T,
    cheb_T_value,
    recurrence_product,
    reduced_factor,
    resultant,
    squarefree_decomposition,
    squarefree_part,
)

METHODS = ("auto", "kirchhoff", "theorem1", "closed")

# a(n + 4) = a(n + 3) + 3 a(n + 2) - a(n + 1) - a(n); OEIS A192422.
K2_SEQUENCE = LinearRecurrence((1, 1, -3, -1, 1), (0, 1, 1, 5))

# Both halves of the k = 3 sequence share one degree-8 operator.
K3_CHARACTERISTIC = (1, -4, -1, -24, 65, -24, -1, -4, 1)
K3_EVEN = LinearRecurrence(K3_CHARACTERISTIC, (0, 1, 4, 9, 72, 320, 1332, 6889))
K3_ODD = LinearRecurrence(K3_CHARACTERISTIC, (1, 1, 20, 83, 289, 1693, 7775, 34820))

# T^16 - T^15 - 2T^13 - 16T^12 + 10T^11 - 2T^10 + 16T^9 + 50T^8 - 16T^7
#   - 2T^6 - 10T^5 - 16T^4 + 2T^3 + T + 1, seeded at n = -7..8.
K4_CHARACTERISTIC = (1, 1, 0, 2, -16, -10, -2, -16, 50, 16, -2, 10, -16, -2, 0, -1, 1)
K4_SEQUENCE = LinearRecurrence(
    K4_CHARACTERISTIC,
    (-83, 35, -19, 1, -5, 1, -1, 0, 1, 1, 5, 1, 19, 35, 83, 73),
    start=-7,
)


class QuadExtElement:
    """a + b sqrt(d) with rational a, b."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _lift(self, other) -> QuadExtElement:
        if isinstance(other, QuadExtElement):
            if other.d != self.d:
                raise ValueError("elements of different quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExtElement(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExtElement(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElement(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExtElement(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExtElement(
            self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadExtElement:
        return QuadExtElement(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return (self.a, self.b, self.d) == (o.a, o.b, o.d)

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        return f"QuadExtElement({self.a}, {self.b}, {self.d})"


# -- Kirchhoff --------------------------------------------------------------

@lru_cache(maxsize=None)
def _tau_kirchhoff(n: int, k: int) -> int:
    lap = laplacian(build_gp(n, k))
    last = lap.rows - 1
    tau = det_bareiss(lap.minor(last, last))
    if tau <= 0:
        raise ArithmeticError(f"nonpositive tree count {tau} for GP({n},{k})")
    return tau


def tau_kirchhoff(n: int, k: int) -> int:
    """Reduced-Laplacian determinant; the reference tree count."""
    return _tau_kirchhoff(n, validate(n, k))


# -- Chebyshev product over the roots of h_k --------------------------------

def tau_theorem1(n: int, k: int) -> int:
    """n * prod_s (T_n(w_s) - 1)/(w_s - 1) over the roots w_s of h_k, with sign
    (-1)^((n-1)(k-1)).

    With c = lc(h_k) = 2^k the two root products are
        prod (T_n(w_s) - 1) = Res(h_k, T_n - 1) / c^n
        prod (w_s - 1)      = (-1)^k h_k(1) / c
    so the whole expression is one exact integer division.
    """
    k = reduced_step(n, k)
    h = build_h(k)
    lc = h.leading
    h1 = h(1)
    if lc != 2 ** k or h1 != -(1 + k * k):
        raise ArithmeticError(f"h_{k} has unexpected shape: {h}")
    res = resultant(h, cheb_T(n) - 1)
    num = n * res * (-1) ** k * (-1) ** ((n - 1) * (k - 1))
    den = lc ** (n - 1) * h1
    tau, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"inexact Chebyshev product for GP({n},{k})")
    return tau


# -- closed forms for k = 1..4 ---------------------------------------------

def tau_prism(n: int) -> int:
    """n (T_n(2) - 1), the prism GP(n, 1)."""
    validate(n, 1)
    return n * (cheb_T_value(n, 2) - 1)


SQRT29_ROOT = QuadExtElement(Fraction(1, 4), Fraction(1, 4), 29)  # (1 + sqrt 29)/4


def tau_k2_quadratic(n: int) -> tuple[int, int, int]:
    """(tau, alpha, beta) with T_n((1 + sqrt 29)/4) - 1 = (alpha + beta sqrt 29)/4
    and tau = (-1)^n n (alpha^2 - 29 beta^2) / 20."""
    validate(n, 2)
    t = cheb_T_value(n, SQRT29_ROOT) - 1
    alpha, beta = 4 * t.a, 4 * t.b
    if alpha.denominator != 1 or beta.denominator != 1:
        raise ArithmeticError(f"T_{n}(w) - 1 = {t} does not have denominator 4")
    alpha, beta = int(alpha), int(beta)
    tau, rem = divmod((-1) ** n * n * (alpha * alpha - 29 * beta * beta), 20)
    if rem:
        raise ArithmeticError(f"n (alpha^2 - 29 beta^2) not divisible by 20 at n={n}")
    return tau, alpha, beta


def tau_k2_recurrence(n: int) -> int:
    validate(n, 2)
    return n * K2_SEQUENCE[n] ** 2


def tau_k3_recurrence(n: int) -> int:
    """12 m a(m)^2 for n = 2m, n b(m)^2 for n = 2m + 1."""
    if n < 4:
        raise ValueError("GP(n, 3) needs n >= 4")
    m, odd = divmod(n, 2)
    if odd:
        return n * K3_ODD[m] ** 2
    return 12 * m * K3_EVEN[m] ** 2


def tau_k4_recurrence(n: int) -> int:
    if n < 5:
        raise ValueError("GP(n, 4) needs n >= 5")
    return n * K4_SEQUENCE[n] ** 2


def tau_closed(n: int, k: int) -> int:
    k = reduced_step(n, k)
    if k == 1:
        return tau_prism(n)
    if k == 2:
        return tau_k2_recurrence(n)
    if k == 3:
        return tau_k3_recurrence(n)
    if k == 4:
        return tau_k4_recurrence(n)
    raise ValueError(f"no closed form for reduced step k={k} (only 1..4)")


def tau(n: int, k: int, method: str = "auto") -> int:
    """Number of spanning trees of GP(n, k)."""
    validate(n, k)
    if method == "auto":
        if reduced_step(n, k) <= 4:
            method = "closed"
        else:
            method = "theorem1" if n > 60 else "kirchhoff"
    if method == "kirchhoff":
        return tau_kirchhoff(n, k)
    if method == "theorem1":
        return tau_theorem1(n, k)
    if method == "closed":
        return tau_closed(n, k)
    raise ValueError(f"unknown method {method!r}; choose from {METHODS}")


# -- where the recurrences come from ---------------------------------------

def cross_product_polynomial(k: int) -> LaurentPolynomial:
    """Monic polynomial with the 2^k roots z_1^(+-1) z_2^(+-1) ... z_k^(+-1),
    where z_s, 1/z_s are the roots of H(z) = z^(k+1) P(z) / (z-1)^2.

    Built by repeated ``recurrence_product`` with H.  Each product of one
    root from every pair arises exactly k times in the last product, and
    (for k <= 3) every other product arises a different number of times, so
    it is the multiplicity-k part of the squarefree decomposition.
    """
    h = reduced_factor(k)
    if k == 1:
        return h
    if k not in (2, 3):
        raise ValueError("only k in {1, 2, 3} is supported")
    acc = h
    for _ in range(k - 1):
        acc = recurrence_product(squarefree_part(acc), h)
    part = squarefree_decomposition(acc).get(k)
    if part is None or part.degree != 2 ** k:
        raise ArithmeticError(f"could not isolate the degree-{2 ** k} factor")
    return part


def k3_characteristic_from_identity() -> LaurentPolynomial:
    """(1 + x + 11x^2 + x^3 + x^4)^2 - 6x (1 + 2x + 2x^2 + x^3)^2."""
    a = LaurentPolynomial([1, 1, 11, 1, 1])
    b = LaurentPolynomial([1, 2, 2, 1])
    return a * a - 6 * LaurentPolynomial.monomial(1, 1) * b * b
