"""Exact integer matrices: determinant, Smith normal form, cokernel, powers.

Everything here works on Python integers, so there is no overflow at any
size.  The determinant routine is generic over any commutative ring whose
elements support ``+``, ``-``, ``*``, truthiness and exact ``//``; this is
used to expand characteristic polynomials with polynomial entries.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


class IntegerMatrix:
    """Dense immutable matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        self.rows = len(rows)
        self.cols = width
        self._data = rows

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> IntegerMatrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major flat view."""
        return tuple(x for row in self._data for x in row)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(zip(*self._data))

    def minor(self, row: int, col: int) -> IntegerMatrix:
        """Copy with one row and one column deleted."""
        return IntegerMatrix(
            [r[:col] + r[col + 1:] for i, r in enumerate(self._data) if i != row]
        )

    def block(self, r0: int, r1: int, c0: int, c1: int) -> IntegerMatrix:
        return IntegerMatrix([r[c0:c1] for r in self._data[r0:r1]])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.tolist()!r})"

    def _check_same_shape(self, other: IntegerMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: IntegerMatrix) -> IntegerMatrix:
        self._check_same_shape(other)
        return IntegerMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)]
        )

    def __sub__(self, other: IntegerMatrix) -> IntegerMatrix:
        self._check_same_shape(other)
        return IntegerMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)]
        )

    def __neg__(self) -> IntegerMatrix:
        return IntegerMatrix([[-a for a in r] for r in self._data])

    def __mul__(self, scalar: int) -> IntegerMatrix:
        return IntegerMatrix([[scalar * a for a in r] for r in self._data])

    __rmul__ = __mul__

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        columns = list(zip(*other._data))
        return IntegerMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in columns] for r in self._data]
        )


def _as_rows(m) -> list[list]:
    if isinstance(m, IntegerMatrix):
        return m.tolist()
    return [list(r) for r in m]


def det_bareiss(m) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    ``m`` is an :class:`IntegerMatrix` or any square nested sequence whose
    entries form a commutative ring with exact ``//`` division.
    """
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0 * a[k][k]
        pivot = a[k][k]
        tail_k = a[k][k + 1:]
        for i in range(k + 1, n):
            row = a[i]
            f = row[k]
            # Bareiss guarantees every quotient here is exact.
            if f:
                a[i] = row[:k + 1] + [
                    (pivot * x - f * y) // prev for x, y in zip(row[k + 1:], tail_k)
                ]
            else:
                a[i] = row[:k + 1] + [(pivot * x) // prev for x in row[k + 1:]]
        prev = pivot
    return a[-1][-1] if sign > 0 else -a[-1][-1]


def canonical_chain(values: Iterable[int]) -> list[int]:
    """Rewrite diagonal entries as a divisibility chain d1 | d2 | ... .

    diag(a, b) and diag(gcd, lcm) have the same cokernel, so repeated
    pairwise replacement yields the invariant factors.  Zeros end up last.
    """
    ones = 0
    rest = []
    for v in values:
        v = abs(v)
        if v == 1:
            ones += 1
        else:
            rest.append(v)
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            g = math.gcd(a, b)
            if g != a:
                rest[i], rest[j] = g, math.lcm(a, b)
    return [1] * ones + rest


def smith_normal_form(m) -> list[int]:
    """Diagonal of the Smith normal form, length ``min(rows, cols)``.

    Entries are nonnegative with each dividing the next; zeros come last.
    Unit pivots are eliminated by a Schur complement step (no column work is
    needed since the pivot divides everything); otherwise the nonzero entry
    of least absolute value is used and its row and column are reduced until
    they vanish.
    """
    a = _as_rows(m)
    diag: list[int] = []
    while a and a[0]:
        unit = None
        for i, r in enumerate(a):
            if 1 in r:
                unit = (i, r.index(1))
                break
            if -1 in r:
                unit = (i, r.index(-1))
                break

        if unit is not None:
            p, q = unit
            prow = a[p]
            s = prow[q]
            for i, r in enumerate(a):
                f = r[q]
                if i != p and f:
                    f *= s
                    a[i] = [x - f * y for x, y in zip(r, prow)]
            diag.append(1)
            del a[p]
            for r in a:
                del r[q]
            continue

        best = None
        for i, r in enumerate(a):
            for j, x in enumerate(r):
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            diag.extend([0] * min(len(a), len(a[0])))
            break

        _, p, q = best
        prow = a[p]
        pv = prow[q]
        dirty = False
        for i, r in enumerate(a):
            if i != p and r[q]:
                f = r[q] // pv
                if f:
                    r = a[i] = [x - f * y for x, y in zip(r, prow)]
                if r[q]:
                    dirty = True
        for j in range(len(prow)):
            if j != q and prow[j]:
                f = prow[j] // pv
                if f:
                    for r in a:
                        r[j] -= f * r[q]
                if prow[j]:
                    dirty = True
        if dirty:
            # A remainder survived; it is smaller than |pv| so the next
            # round picks a strictly smaller pivot.
            continue
        diag.append(abs(pv))
        del a[p]
        for r in a:
            del r[q]
    return canonical_chain(diag)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank + Z_d1 + ... + Z_dm."""

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        if any(d < 2 for d in factors):
            raise ValueError(f"invariant factors must be >= 2, got {factors}")
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise ValueError(f"not a divisibility chain: {factors}")
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        object.__setattr__(self, "invariant_factors", factors)

    @classmethod
    def from_factors(cls, factors: Iterable[int], free_rank: int = 0) -> AbelianGroup:
        """Canonical form of Z_a + Z_b + ... given in any order."""
        chain = canonical_chain(factors)
        free = free_rank + sum(1 for d in chain if d == 0)
        return cls(tuple(d for d in chain if d > 1), free)

    @property
    def order(self) -> int:
        """Order of the torsion part."""
        return math.prod(self.invariant_factors)

    @property
    def torsion(self) -> AbelianGroup:
        return AbelianGroup(self.invariant_factors, 0)

    def __str__(self) -> str:
        parts = [f"Z_{d}" for d in self.invariant_factors]
        parts += ["Z"] * self.free_rank
        return " ⊕ ".join(parts) if parts else "0"


def cokernel(m) -> AbelianGroup:
    """Isomorphism type of Z^rows / im(m)."""
    a = _as_rows(m)
    diag = smith_normal_form(a)
    nonzero = sum(1 for d in diag if d)
    return AbelianGroup(tuple(d for d in diag if d > 1), len(a) - nonzero)


def mat_pow(m: IntegerMatrix, e: int) -> IntegerMatrix:
    """m**e by repeated squaring; m**0 is the identity."""
    if not m.is_square:
        raise ValueError("matrix power requires a square matrix")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = IntegerMatrix.identity(m.rows)
    base = m
    while e:
        if e & 1:
            result = result @ base
        e >>= 1
        if e:
            base = base @ base
    return result
