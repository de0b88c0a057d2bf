"""Generalized Petersen graphs GP(n, k) and their Laplacians.

Vertices u_i form the outer n-cycle, v_i the inner star polygon with step k.
They are 0-indexed and stored in the order v_0..v_{n-1}, u_0..u_{n-1}, which
puts the Laplacian in the block form [[3I - C^k, -I], [-I, 3I - C^1]].
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .intmatrix import IntegerMatrix


def validate(n: int, k: int) -> int:
    """Check (n, k) and return k reduced mod n."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    k %= n
    if k == 0:
        raise ValueError("k must not be divisible by n (inner edges would be loops)")
    return k


def reduced_step(n: int, k: int) -> int:
    """Smallest step giving the same graph: min(k mod n, n - k mod n)."""
    k = validate(n, k)
    return min(k, n - k)


@dataclass(frozen=True)
class GPGraph:
    """GP(n, k) as a multiset of undirected edges.

    Vertex ``i`` is v_i and vertex ``n + i`` is u_i.  ``edges`` maps each
    unordered pair (a, b), a < b, to its multiplicity.
    """

    n: int
    k: int
    edges: Counter = field(compare=False, repr=False)

    @property
    def num_vertices(self) -> int:
        return 2 * self.n

    @property
    def num_edges(self) -> int:
        return sum(self.edges.values())

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for (a, b), mult in self.edges.items():
            deg[a] += mult
            deg[b] += mult
        return deg

    def adjacency(self) -> IntegerMatrix:
        size = self.num_vertices
        a = [[0] * size for _ in range(size)]
        for (x, y), mult in self.edges.items():
            a[x][y] += mult
            a[y][x] += mult
        return IntegerMatrix(a)


def build_gp(n: int, k: int) -> GPGraph:
    """Construct GP(n, k); k is reduced mod n.

    When 2k = n the inner edges v_i v_{i+k} and v_{i+k} v_i coincide, giving
    double edges; every vertex still has degree 3.
    """
    k = validate(n, k)
    edges: Counter = Counter()

    def add(a: int, b: int) -> None:
        edges[(min(a, b), max(a, b))] += 1

    for i in range(n):
        add(n + i, n + (i + 1) % n)
        add(n + i, i)
        add(i, (i + k) % n)
    return GPGraph(n, k, edges)


def circulant(n: int, support: Iterable[tuple[int, int]]) -> IntegerMatrix:
    """circ(a_0, ..., a_{n-1}) with a_j the summed coefficient at exponent j mod n.

    Entry (r, c) is a_{(c - r) mod n}, i.e. the matrix of sum a_j T^j for the
    shift T = circ(0, 1, 0, ..., 0).
    """
    if n < 1:
        raise ValueError("circulant size must be positive")
    first = [0] * n
    for exp, coeff in support:
        first[exp % n] += coeff
    return IntegerMatrix([[first[(c - r) % n] for c in range(n)] for r in range(n)])


def laplacian(g: GPGraph) -> IntegerMatrix:
    """Block Laplacian [[3I - C^k, -I], [-I, 3I - C^1]] of GP(n, k)."""
    n, k = g.n, g.k
    inner = circulant(n, [(0, 3), (k, -1), (-k, -1)])
    outer = circulant(n, [(0, 3), (1, -1), (-1, -1)])
    # v block first, then u block.
    rows = []
    for i in range(n):
        rows.append(list(inner.row(i)) + [-int(j == i) for j in range(n)])
    for i in range(n):
        rows.append([-int(j == i) for j in range(n)] + list(outer.row(i)))
    return IntegerMatrix(rows)
