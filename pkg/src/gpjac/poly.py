"""Exact integer Laurent polynomials, Chebyshev polynomials, resultants and
linear recurrences.

A polynomial is stored as a coefficient tuple plus the exponent of its first
entry, so ``LaurentPolynomial([1, -6, 10, -6, 1], -2)`` is
z^-2 - 6 z^-1 + 10 - 6 z + z^2.  Coefficients are always Python ints;
rational arithmetic only appears inside gcd computations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .intmatrix import IntegerMatrix, det_bareiss


class LaurentPolynomial:
    __slots__ = ("min_exp", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), min_exp: int = 0):
        c = list(coeffs)
        for x in c:
            if int(x) != x:
                raise TypeError(f"integer coefficients required, got {x!r}")
        c = [int(x) for x in c]
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        hi = len(c)
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.coeffs: tuple[int, ...] = ()
            self.min_exp = 0
        else:
            self.coeffs = tuple(c[lo:hi])
            self.min_exp = min_exp + lo

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 1) -> LaurentPolynomial:
        return cls([coeff], exp)

    @classmethod
    def from_high(cls, coeffs: Sequence[int]) -> LaurentPolynomial:
        """Ordinary polynomial from coefficients listed highest degree first."""
        return cls(reversed(list(coeffs)))

    @staticmethod
    def _coerce(x) -> LaurentPolynomial:
        if isinstance(x, LaurentPolynomial):
            return x
        if isinstance(x, int):
            return LaurentPolynomial([x])
        return NotImplemented

    # -- shape -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """max_exp - min_exp, the size of the companion matrix."""
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Highest exponent present; -1 for the zero polynomial."""
        return self.max_exp if self.coeffs else -1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def trailing(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def is_ordinary(self) -> bool:
        return self.min_exp >= 0 or not self.coeffs

    @property
    def is_bimonic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0] == 1 and self.coeffs[-1] == 1

    @property
    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def coeff(self, exp: int) -> int:
        i = exp - self.min_exp
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def ordinary_coeffs(self) -> list[int]:
        """Coefficients of z^0, z^1, ..., z^degree."""
        if not self.is_ordinary:
            raise ValueError(f"{self} has negative exponents")
        return [0] * self.min_exp + list(self.coeffs) if self.coeffs else []

    def shift(self, m: int) -> LaurentPolynomial:
        """Multiply by z^m."""
        return LaurentPolynomial(self.coeffs, self.min_exp + m)

    def normalized(self) -> LaurentPolynomial:
        """Shift so that the lowest exponent is 0."""
        return LaurentPolynomial(self.coeffs, 0)

    def derivative(self) -> LaurentPolynomial:
        return LaurentPolynomial(
            [c * (self.min_exp + i) for i, c in enumerate(self.coeffs)], self.min_exp - 1
        )

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> LaurentPolynomial:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return LaurentPolynomial([c // g for c in self.coeffs], self.min_exp)

    # -- arithmetic ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs and self.min_exp == other.min_exp

    def __hash__(self) -> int:
        return hash((self.coeffs, self.min_exp))

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial([-c for c in self.coeffs], self.min_exp)

    def __add__(self, other) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        for p in (self, other):
            off = p.min_exp - lo
            for i, c in enumerate(p.coeffs):
                out[off + i] += c
        return LaurentPolynomial(out, lo)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPolynomial:
        return (-self) + other

    def __mul__(self, other) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LaurentPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPolynomial(out, self.min_exp + other.min_exp)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPolynomial:
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = LaurentPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __floordiv__(self, other) -> LaurentPolynomial:
        """Exact division; raises ArithmeticError if there is a remainder."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        if not self.coeffs:
            return self
        num = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        nq = len(num) - len(den) + 1
        if nq <= 0:
            raise ArithmeticError(f"{other} does not divide {self}")
        quot = [0] * nq
        for i in range(nq - 1, -1, -1):
            c = num[i + len(den) - 1]
            if c:
                q, r = divmod(c, lead)
                if r:
                    raise ArithmeticError(f"{other} does not divide {self}")
                quot[i] = q
                for j, d in enumerate(den):
                    num[i + j] -= q * d
        if any(num):
            raise ArithmeticError(f"{other} does not divide {self}")
        return LaurentPolynomial(quot, self.min_exp - other.min_exp)

    def __call__(self, x):
        """Evaluate at a number (int, Fraction, float, complex) or polynomial."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.min_exp >= 0:
            return acc * x ** self.min_exp
        if isinstance(x, LaurentPolynomial):
            raise ValueError("cannot substitute a polynomial into negative powers")
        if isinstance(x, int):
            x = Fraction(x)
        return acc * x ** self.min_exp

    # -- display ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPolynomial({list(self.coeffs)!r}, {self.min_exp})"

    def __str__(self) -> str:
        return self.format("z")

    def format(self, var: str = "z") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            e = self.min_exp + i
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


Z = LaurentPolynomial.monomial(1, 1)


# -- rational helpers for gcd and squarefree decomposition -------------------

def _q(p: LaurentPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.ordinary_coeffs()]


def _q_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _q_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    if len(a) < len(b):
        return [], _q_trim(a)
    quot = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(quot) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        quot[i] = c
        if c:
            for j, d in enumerate(b):
                a[i + j] -= c * d
    return _q_trim(quot), _q_trim(a[: len(b) - 1])


def _q_monic(a: list[Fraction]) -> list[Fraction]:
    return [c / a[-1] for c in a] if a else a


def _q_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _q_trim(list(a)), _q_trim(list(b))
    while b:
        a, b = b, _q_monic(_q_divmod(a, b)[1])
    return _q_monic(a)


def _q_to_int(a: list[Fraction]) -> LaurentPolynomial:
    if not a:
        return LaurentPolynomial()
    denom = math.lcm(*(c.denominator for c in a))
    return LaurentPolynomial([c.numerator * (denom // c.denominator) for c in a]).primitive()


def _q_deriv(a: list[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(a)][1:]


def poly_gcd(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    """gcd over Q of two ordinary polynomials, as a primitive integer polynomial."""
    return _q_to_int(_q_gcd(_q(f), _q(g)))


def is_squarefree(f: LaurentPolynomial) -> bool:
    """True when f has no repeated roots (nonzero roots only for Laurent f)."""
    if f.is_zero:
        return False
    f = f.normalized()
    return poly_gcd(f, f.derivative()).degree == 0


def squarefree_decomposition(f: LaurentPolynomial) -> dict[int, LaurentPolynomial]:
    """Yun's algorithm: map multiplicity m -> primitive product of roots of
    multiplicity exactly m.  Constants are dropped."""
    a = _q(f)
    if len(a) < 2:
        return {}
    d = _q_deriv(a)
    g = _q_gcd(a, d)
    b = _q_divmod(a, g)[0]
    c = _q_divmod(d, g)[0]
    dd = [x - y for x, y in _zip_pad(c, _q_deriv(b))]
    out = {}
    i = 1
    while len(_q_trim(b)) > 1:
        g = _q_gcd(b, dd)
        if len(g) > 1:
            out[i] = _q_to_int(g)
        b = _q_divmod(b, g)[0]
        c = _q_divmod(dd, g)[0]
        dd = [x - y for x, y in _zip_pad(c, _q_deriv(b))]
        i += 1
    return out


def squarefree_part(f: LaurentPolynomial) -> LaurentPolynomial:
    result = LaurentPolynomial([1])
    for part in squarefree_decomposition(f).values():
        result = result * part
    return result.primitive()


def _zip_pad(a: list, b: list):
    n = max(len(a), len(b))
    zero = Fraction(0)
    return [(a[i] if i < len(a) else zero, b[i] if i < len(b) else zero) for i in range(n)]


# -- Chebyshev polynomials and the GP(n, k) polynomials ----------------------

@lru_cache(maxsize=None)
def cheb_T(k: int) -> LaurentPolynomial:
    """Chebyshev polynomial of the first kind, T_k(cos t) = cos(k t)."""
    if k < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    if k == 0:
        return LaurentPolynomial([1])
    if k == 1:
        return Z
    return 2 * Z * cheb_T(k - 1) - cheb_T(k - 2)


@lru_cache(maxsize=None)
def cheb_U(k: int) -> LaurentPolynomial:
    """Chebyshev polynomial of the second kind, U_k(cos t) = sin((k+1)t) / sin t."""
    if k < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    if k == 0:
        return LaurentPolynomial([1])
    if k == 1:
        return 2 * Z
    return 2 * Z * cheb_U(k - 1) - cheb_U(k - 2)


def cheb_T_value(n: int, x):
    """T_n(x) by the three-term recurrence, in whatever ring x lives in."""
    prev, cur = 1 + 0 * x, x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def build_P(k: int) -> LaurentPolynomial:
    """(3 - z - 1/z)(3 - z^k - z^-k) - 1, whose companion matrix drives the
    Jacobian of GP(n, k)."""
    if k < 1:
        raise ValueError("k must be positive")
    zi = LaurentPolynomial.monomial(1, -1)
    return (3 - Z - zi) * (3 - Z ** k - LaurentPolynomial.monomial(1, -k)) - 1


def chebyshev_quotient(n: int) -> LaurentPolynomial:
    """(T_n(w) - 1) / (w - 1), an integer polynomial of degree n - 1."""
    return (cheb_T(n) - 1) // (Z - 1)


@lru_cache(maxsize=None)
def build_h(k: int) -> LaurentPolynomial:
    """h_k(w) = 2 T_k(w) - (T_k(w) - 1)/(w - 1) - 3.

    Its roots w_s give the nontrivial roots z_s, 1/z_s of P through
    w = (z + 1/z) / 2.  Degree k, leading coefficient 2^k.
    """
    if k < 1:
        raise ValueError("k must be positive")
    return 2 * cheb_T(k) - chebyshev_quotient(k) - 3


def reduced_factor(k: int) -> LaurentPolynomial:
    """H(z) = z^(k+1) P(z) / (z - 1)^2, the monic palindromic degree-2k
    polynomial with roots z_s^(+1), z_s^(-1)."""
    return build_P(k).shift(k + 1) // ((Z - 1) ** 2)


def companion_matrix(p: LaurentPolynomial) -> IntegerMatrix:
    """Companion matrix [[0 | I], [-1, -a_1, ..., -a_{s-1}]] of a bimonic
    Laurent polynomial z^p (1 + a_1 z + ... + a_{s-1} z^{s-1} + z^s)."""
    if not p.is_bimonic:
        raise ValueError(f"companion matrix needs a bimonic polynomial, got {p}")
    s = p.span
    if s < 1:
        raise ValueError("polynomial must span at least one power")
    rows = [[int(j == i + 1) for j in range(s)] for i in range(s - 1)]
    rows.append([-c for c in p.coeffs[:-1]])
    return IntegerMatrix(rows)


# -- resultants -------------------------------------------------------------

def _sylvester(f_high: Sequence, g_high: Sequence) -> list[list]:
    """Sylvester matrix from coefficient lists given highest degree first.
    Formal degrees are len - 1; leading zeros are allowed."""
    m, n = len(f_high) - 1, len(g_high) - 1
    size = m + n
    zero = 0 * f_high[0]
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(f_high) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(g_high) + [zero] * (size - n - 1 - i))
    return rows


def sylvester_matrix(f: LaurentPolynomial, g: LaurentPolynomial) -> IntegerMatrix:
    return IntegerMatrix(
        _sylvester(f.ordinary_coeffs()[::-1], g.ordinary_coeffs()[::-1])
    )


def resultant(f: LaurentPolynomial, g: LaurentPolynomial) -> int:
    """Res(f, g) = det of the Sylvester matrix (f rows first).

    Equals lc(f)^deg(g) * prod g(r) over the roots r of f; in particular
    Res(x - 2, x - 3) = -1 and Res(g, f) = (-1)^(deg f deg g) Res(f, g).
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    fc, gc = f.ordinary_coeffs()[::-1], g.ordinary_coeffs()[::-1]
    if len(fc) == 1 and len(gc) == 1:
        return 1
    return det_bareiss(_sylvester(fc, gc))


def _interpolate(values: Sequence[int]) -> LaurentPolynomial:
    """Integer polynomial through (t, values[t]) for t = 0, 1, ..., via
    forward differences in the binomial basis."""
    diffs = []
    row = list(values)
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    total = [Fraction(0)] * len(values)
    falling = [Fraction(1)]  # t (t-1) ... (t-j+1) / j!
    for j, d in enumerate(diffs):
        if d:
            for i, c in enumerate(falling):
                total[i] += d * c
        # multiply falling by (t - j) / (j + 1)
        nxt = [Fraction(0)] * (len(falling) + 1)
        for i, c in enumerate(falling):
            nxt[i + 1] += c / (j + 1)
            nxt[i] -= c * j / (j + 1)
        falling = nxt
    if any(c.denominator != 1 for c in total):
        raise ArithmeticError("interpolated polynomial is not integral")
    return LaurentPolynomial([int(c) for c in total])


def recurrence_product(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """R(z) = Res_x(P(x), x^deg Q * Q(z / x)).

    The roots of R are all products of a root of P with a root of Q, so R(T)
    annihilates u(n) v(n) whenever P(T) u = 0 and Q(T) v = 0.  R is found by
    evaluating the integer resultant at deg P * deg Q + 1 points and
    interpolating.
    """
    for f in (p, q):
        if f.is_zero or not f.is_ordinary:
            raise ValueError(f"ordinary nonzero polynomial required, got {f}")
        if f.degree > 0 and not is_squarefree(f):
            raise ValueError(f"{f} has repeated roots")
    pc = p.ordinary_coeffs()[::-1]
    qc = q.ordinary_coeffs()
    dp, dq = p.degree, q.degree
    values = []
    for t in range(dp * dq + 1):
        # x^dq Q(t/x) = sum_j q_j t^j x^(dq - j); listed from x^dq down.
        g = [c * t ** j for j, c in enumerate(qc)]
        values.append(det_bareiss(_sylvester(pc, g)) if dp + dq else 1)
    return _interpolate(values)


# -- linear recurrences -----------------------------------------------------

@dataclass(frozen=True)
class LinearRecurrence:
    """Integer sequence with sum_j char_coeffs[j] * u(n + j) = 0 for all n.

    ``char_coeffs`` lists the characteristic polynomial from the constant
    term up; ``initial_terms`` are u(start), u(start + 1), ...
    """

    char_coeffs: tuple[int, ...]
    initial_terms: tuple[int, ...]
    start: int = 0

    def __post_init__(self):
        cc = tuple(int(c) for c in self.char_coeffs)
        while cc and cc[-1] == 0:
            cc = cc[:-1]
        if len(cc) < 2:
            raise ValueError("characteristic polynomial must have degree >= 1")
        object.__setattr__(self, "char_coeffs", cc)
        object.__setattr__(self, "initial_terms", tuple(int(x) for x in self.initial_terms))
        if len(self.initial_terms) < self.order:
            raise ValueError(
                f"need {self.order} initial terms, got {len(self.initial_terms)}"
            )
        u = self.initial_terms
        for m in range(len(u) - self.order):
            if sum(c * u[m + j] for j, c in enumerate(cc)):
                raise ValueError(f"initial terms violate the recurrence at u({self.start + m})")

    @property
    def order(self) -> int:
        return len(self.char_coeffs) - 1

    @property
    def characteristic(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.char_coeffs)

    def terms(self, frm: int, count: int) -> list[int]:
        """u(frm), ..., u(frm + count - 1)."""
        if count < 1:
            raise ValueError("count must be positive")
        cc = self.char_coeffs
        d = self.order
        lo, seq = self.start, list(self.initial_terms)
        stop = frm + count
        while lo + len(seq) < stop:
            s = -sum(c * seq[len(seq) - d + j] for j, c in enumerate(cc[:-1]))
            q, r = divmod(s, cc[-1])
            if r:
                raise ArithmeticError("forward step is not integral")
            seq.append(q)
        if frm < lo:
            if cc[0] not in (1, -1):
                raise ValueError(
                    "backward generation needs a trailing coefficient of +1 or -1"
                )
            front = []
            window = seq[:d]
            for _ in range(lo - frm):
                s = -sum(c * window[j - 1] for j, c in enumerate(cc) if j)
                val = s * cc[0]
                front.append(val)
                window = [val] + window[:-1]
            seq = front[::-1] + seq
            lo = frm
        return seq[frm - lo: frm - lo + count]

    def __getitem__(self, n: int) -> int:
        return self.terms(n, 1)[0]


def recurrence_terms(r: LinearRecurrence, frm: int, count: int) -> list[int]:
    return r.terms(frm, count)
