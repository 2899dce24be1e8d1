"""Multi-index bookkeeping for tensor powers.

Global flattening convention, used everywhere in the package: a word
(r_1, ..., r_n) of digits 0 <= r_k < d flattens to the mixed-radix code
sum r_k * d^(n-1-k), leftmost digit major.  Kronecker products follow the
same rule (left factor major), so index code = flattened tensor word.

Permutations come in two forms: an index table (``table[src] = dst``,
meaning the map sends basis vector e_src to e_dst) used as the internal
fast path, and the materialized permutation matrix.  Both are exposed so
tests can assert they agree.
"""

from __future__ import annotations

from typing import Sequence

from .linalg import Matrix, Scalar, Subspace, kronecker


def encode_digits(digits: Sequence[int], radix: int) -> int:
    code = 0
    for r in digits:
        if not 0 <= r < radix:
            raise ValueError(f"digit {r} out of range for radix {radix}")
        code = code * radix + r
    return code


def decode_index(code: int, radix: int, length: int) -> tuple[int, ...]:
    digits = [0] * length
    for k in range(length - 1, -1, -1):
        code, digits[k] = divmod(code, radix)
    if code:
        raise ValueError("index out of range for the given radix and length")
    return tuple(digits)


def permutation_matrix(table: Sequence[int]) -> Matrix:
    """Matrix P with P·e_src = e_table[src]."""
    n = len(table)
    cells = [[0] * n for _ in range(n)]
    for src, dst in enumerate(table):
        cells[dst][src] = 1
    return Matrix(cells, cols=n)


def invert_table(table: Sequence[int]) -> list[int]:
    inv = [0] * len(table)
    for src, dst in enumerate(table):
        inv[dst] = src
    return inv


def push_row(row: Sequence[Scalar], table: Sequence[int]) -> list[Scalar]:
    """Coordinates of P·x for the row form of x (out[table[i]] = row[i])."""
    out: list[Scalar] = [0] * len(table)
    for i, x in enumerate(row):
        if x != 0:
            out[table[i]] = x
    return out


def pull_row(row: Sequence[Scalar], table: Sequence[int]) -> list[Scalar]:
    """Coordinates of P^-1·x for the row form of x (out[i] = row[table[i]])."""
    return [row[table[i]] for i in range(len(table))]


def phi_table(dV: int, dW: int, n: int) -> list[int]:
    """Index table of the shuffle (V⊗W)^{⊗n} -> V^{⊗n} ⊗ W^{⊗n}.

    A pair-digit word ((a_1,b_1),...,(a_n,b_n)) goes to the concatenation
    (a_1,...,a_n,b_1,...,b_n).
    """
    if dV < 1 or dW < 1 or n < 0:
        raise ValueError("dimensions must be positive and n nonnegative")
    size = (dV * dW) ** n
    wn = dW**n
    table = [0] * size
    for src in range(size):
        a_code = 0
        b_code = 0
        for g in decode_index(src, dV * dW, n):
            a, b = divmod(g, dW)
            a_code = a_code * dV + a
            b_code = b_code * dW + b
        table[src] = a_code * wn + b_code
    return table


def phi_iso(dV: int, dW: int, n: int) -> Matrix:
    """Permutation matrix of the shuffle (V⊗W)^{⊗n} -> V^{⊗n} ⊗ W^{⊗n}."""
    return permutation_matrix(phi_table(dV, dW, n))


def flip_table(dV: int, dW: int) -> list[int]:
    table = [0] * (dV * dW)
    for a in range(dV):
        for b in range(dW):
            table[a * dW + b] = b * dV + a
    return table


def flip(dV: int, dW: int) -> Matrix:
    """Permutation matrix of V⊗W -> W⊗V, v⊗w -> w⊗v."""
    return permutation_matrix(flip_table(dV, dW))


def tau23_table(dA: int, dB: int) -> list[int]:
    """Middle-two swap A⊗A⊗B⊗B -> A⊗B⊗A⊗B as an index table."""
    size = dA * dA * dB * dB
    table = [0] * size
    for src in range(size):
        rest, b2 = divmod(src, dB)
        rest, b1 = divmod(rest, dB)
        a1, a2 = divmod(rest, dA)
        table[src] = ((a1 * dB + b1) * dA + a2) * dB + b2
    return table


def tau23(dA: int, dB: int) -> Matrix:
    """Permutation matrix of the middle-two swap (a,a',b,b') -> (a,b,a',b')."""
    return permutation_matrix(tau23_table(dA, dB))


def embed_at(rel: Subspace, n: int, pos: int, d: int) -> Subspace:
    """The subspace V^{⊗pos} ⊗ rel ⊗ V^{⊗(n-k-pos)} inside V^{⊗n}.

    rel must live in V^{⊗k} with d^k = rel.ambient_dim.
    """
    k = 0
    size = 1
    while size < rel.ambient_dim:
        size *= d
        k += 1
    if size != rel.ambient_dim:
        raise ValueError("relation ambient dimension is not a power of d")
    if pos < 0 or pos > n - k:
        raise ValueError(f"position {pos} out of range for degree {n}")
    left = Matrix.identity(d**pos)
    right = Matrix.identity(d ** (n - k - pos))
    rows = kronecker(kronecker(left, rel.basis), right)
    return Subspace.from_rows(d**n, rows.cells)
