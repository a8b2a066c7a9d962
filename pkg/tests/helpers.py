"""Shared test utilities: independent oracles and random generators.

The oracles here deliberately avoid the library's own formulas.  Signatures
of integer forms are computed by exact congruent diagonalization over the
rationals, and the ruled-surface pairing is evaluated through an explicit
2x2 Gram matrix.
"""

from __future__ import annotations

import random
from fractions import Fraction

from fourfold import Parity, TopologicalType


def signature_counts(matrix: list[list[int]]) -> tuple[int, int]:
    """(positive, negative) inertia of a symmetric integer matrix, by
    symmetric Gaussian elimination over Fraction."""
    n = len(matrix)
    m = [[Fraction(matrix[r][c]) for c in range(n)] for r in range(n)]
    pos = neg = 0
    for k in range(n):
        if m[k][k] == 0:
            for j in range(k + 1, n):
                if m[k][j] != 0:
                    # mix row/column j into k to expose a pivot, congruently
                    for c in range(n):
                        m[k][c] += m[j][c]
                    for r in range(n):
                        m[r][k] += m[r][j]
                    break
        pivot = m[k][k]
        if pivot == 0:
            continue
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for r in range(k + 1, n):
            factor = m[r][k] / pivot
            if factor == 0:
                continue
            for c in range(n):
                m[r][c] -= factor * m[k][c]
            for c in range(n):
                m[c][r] -= factor * m[c][k]
    return pos, neg


def e8_cartan() -> list[list[int]]:
    """The E8 Cartan matrix (positive definite, even)."""
    edges = [(1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
    m = [[0] * 8 for _ in range(8)]
    for v in range(8):
        m[v][v] = 2
    for a, b in edges:
        m[a - 1][b - 1] = -1
        m[b - 1][a - 1] = -1
    return m


def hyperbolic_block() -> list[list[int]]:
    return [[0, 1], [1, 0]]


def negate(matrix: list[list[int]]) -> list[list[int]]:
    return [[-x for x in row] for row in matrix]


def direct_sum(*blocks: list[list[int]]) -> list[list[int]]:
    size = sum(len(b) for b in blocks)
    out = [[0] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for r in range(len(b)):
            for c in range(len(b)):
                out[offset + r][offset + c] = b[r][c]
        offset += len(b)
    return out


def diagonal_form(entries: list[int]) -> list[list[int]]:
    n = len(entries)
    return [[entries[r] if r == c else 0 for c in range(n)] for r in range(n)]


def is_even_form(matrix: list[list[int]]) -> bool:
    # A symmetric integer form is even iff every diagonal entry is even.
    return all(matrix[i][i] % 2 == 0 for i in range(len(matrix)))


def random_type(rng: random.Random, max_rank: int = 40) -> TopologicalType:
    b2_plus = rng.randrange(0, max_rank)
    b2_minus = rng.randrange(0, max_rank)
    if (b2_plus - b2_minus) % 16 == 0 and rng.random() < 0.5:
        return TopologicalType(b2_plus, b2_minus, Parity.EVEN)
    return TopologicalType(b2_plus, b2_minus, Parity.ODD)


def random_type_small(rng: random.Random) -> TopologicalType:
    # Tiny ranks so random draws collide often; needed for transitivity.
    b2_plus = rng.randrange(0, 3)
    b2_minus = rng.randrange(0, 3)
    if b2_plus == b2_minus and rng.random() < 0.5:
        return TopologicalType(b2_plus, b2_minus, Parity.EVEN)
    return TopologicalType(b2_plus, b2_minus, Parity.ODD)


def pairing_oracle(index: int, a1: int, b1: int, a2: int, b2: int) -> int:
    """Evaluate [a1 b1] . G . [a2 b2]^T with the explicit Gram matrix
    G = [[-index, 1], [1, 0]]."""
    gram = ((-index, 1), (1, 0))
    v = (a1, b1)
    w = (a2, b2)
    return sum(v[r] * gram[r][c] * w[c] for r in range(2) for c in range(2))
