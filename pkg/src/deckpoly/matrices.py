"""Dense exact-rational matrices with determinant and permanent kernels.

A matrix is a plain list of equal-length rows; entries are
`fractions.Fraction` (plain ints are accepted anywhere and treated as
exact). No function mutates its input.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import lcm

Matrix = list[list[Fraction]]

# Hard caps: the expansions cost n! terms, Ryser costs 2^n subsets.
EXPANSION_MAX_ORDER = 8
RYSER_MAX_ORDER = 16


def order_of(matrix: Matrix) -> int:
    """Return n for an n-by-n matrix, rejecting empty or ragged input."""
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square with order >= 1")
    return n


def from_rows(rows) -> Matrix:
    """Copy any nested sequence of numbers into a matrix of Fractions."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    order_of(matrix)
    return matrix


def zero_entry(matrix: Matrix, i: int, j: int) -> Matrix:
    """Copy of `matrix` with entry (i, j) replaced by zero."""
    n = order_of(matrix)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"entry ({i}, {j}) outside a {n}x{n} matrix")
    out = [list(row) for row in matrix]
    out[i][j] = Fraction(0)
    return out


def delete_row_col(matrix: Matrix, t: int) -> Matrix:
    """Principal submatrix with row t and column t removed."""
    n = order_of(matrix)
    if n < 2:
        raise ValueError("cannot delete from a matrix of order 1")
    if not 0 <= t < n:
        raise IndexError(f"index {t} outside a {n}x{n} matrix")
    return [[row[j] for j in range(n) if j != t]
            for i, row in enumerate(matrix) if i != t]


def permutation_sign(perm) -> int:
    """Sign of the permutation i -> perm[i], by cycle parity."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _integer_rows(matrix: Matrix) -> tuple[list[list[int]], Fraction]:
    """Clear denominators row by row.

    Both det and per are linear in each row, so scaling row i by the lcm
    of its denominators scales the result by the product of all the lcms.
    Returns the integer rows and that product; downstream arithmetic then
    runs on plain Python ints.
    """
    rows = []
    scale = 1
    for row in matrix:
        d = lcm(*(Fraction(x).denominator for x in row))
        scale *= d
        rows.append([int(x * d) for x in row])
    return rows, Fraction(scale)


def det_bareiss(matrix: Matrix) -> Fraction:
    """Exact determinant by fraction-free elimination with row pivoting.

    After step k each updated entry is a (k+1)-minor of the (row-swapped)
    integer matrix, so the division by the previous pivot is exact.
    A column with no usable pivot means the matrix is singular.
    """
    n = order_of(matrix)
    rows, scale = _integer_rows(matrix)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if rows[r][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        pkk = rows[k][k]
        row_k = rows[k]
        for i in range(k + 1, n):
            row_i = rows[i]
            rik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pkk - rik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return sign * rows[n - 1][n - 1] / scale


def det_expansion(matrix: Matrix) -> Fraction:
    """Signed permutation-sum determinant; the n!-term oracle for det_bareiss."""
    n = order_of(matrix)
    if n > EXPANSION_MAX_ORDER:
        raise ValueError(f"det_expansion is capped at order {EXPANSION_MAX_ORDER}, got {n}")
    total = Fraction(0)
    for perm in permutations(range(n)):
        term = Fraction(permutation_sign(perm))
        for i, j in enumerate(perm):
            if matrix[i][j] == 0:
                term = Fraction(0)
                break
            term *= matrix[i][j]
        total += term
    return total


def per_expansion(matrix: Matrix) -> Fraction:
    """Unsigned permutation-sum permanent; the n!-term oracle for per_ryser."""
    n = order_of(matrix)
    if n > EXPANSION_MAX_ORDER:
        raise ValueError(f"per_expansion is capped at order {EXPANSION_MAX_ORDER}, got {n}")
    total = Fraction(0)
    for perm in permutations(range(n)):
        term = Fraction(1)
        for i, j in enumerate(perm):
            if matrix[i][j] == 0:
                term = Fraction(0)
                break
            term *= matrix[i][j]
        total += term
    return total


def per_ryser(matrix: Matrix) -> Fraction:
    """Exact permanent via the alternating column-subset formula:

        per(M) = (-1)^n * sum_S (-1)^|S| * prod_i sum_{j in S} M[i][j]

    over all subsets S of the columns. Subsets are visited in Gray-code
    order so each step updates the row sums by a single column.
    """
    n = order_of(matrix)
    if n > RYSER_MAX_ORDER:
        raise ValueError(f"per_ryser is capped at order {RYSER_MAX_ORDER}, got {n}")
    rows, scale = _integer_rows(matrix)
    sums = [0] * n
    total = 0
    size = 0
    for g in range(1, 1 << n):
        col = (g & -g).bit_length() - 1
        if (g ^ (g >> 1)) & (1 << col):
            size += 1
            for i in range(n):
                sums[i] += rows[i][col]
        else:
            size -= 1
            for i in range(n):
                sums[i] -= rows[i][col]
        prod = 1
        for s in sums:
            if s == 0:
                prod = 0
                break
            prod *= s
        if prod:
            total += -prod if size & 1 else prod
    if n & 1:
        total = -total
    return total / scale
