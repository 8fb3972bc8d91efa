"""
Conway-normalized Alexander polynomials by three independent routes: the Seifert
form of the fiber surface, the skein recursion, and the reduced Burau
representation.
"""

from __future__ import annotations

import functools
from typing import Sequence

from .braid import (
    PositiveBraidWord,
    factor_single_occurrence,
    find_square_rewrite,
    min_rotation,
    missing_generators,
)
from .laurent import (
    ONE,
    U,
    ZERO,
    HalfLaurent,
    Parity,
    conway_parity,
    dense_divexact,
    dense_mul,
    dense_sub,
    divexact,
    from_dense,
    to_dense,
)
from .surfaces import PlaneTree, SeifertMatrix, seifert_from_braid, seifert_from_tree

LaurentMatrix = Sequence[Sequence[HalfLaurent]]


class BurauError(ArithmeticError):
    """The Burau route produced something that is not an Alexander polynomial."""


def det_laurent(M: LaurentMatrix) -> HalfLaurent:
    """
    Exact determinant. Each row is multiplied by a power of t^(1/2) to make it
    polynomial, then fraction-free Bareiss elimination runs over Z[t^(1/2)].
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n == 0:
        return ONE
    shift = 0
    rows: list[list[list[int]]] = []
    for row in M:
        nonzero = [e for e in row if not e.is_zero()]
        if not nonzero:
            return ZERO
        b = min(e.bottom() for e in nonzero)
        shift += b
        rows.append([_dense_from(e, b) for e in row])
    det = _bareiss(rows)
    return from_dense(det, shift)


def _dense_from(e: HalfLaurent, b: int) -> list[int]:
    if e.is_zero():
        return []
    return [0] * (e.bottom() - b) + to_dense(e)


def _bareiss(a: list[list[list[int]]]) -> list[int]:
    n = len(a)
    sign = 1
    prev: list[int] = [1]
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return []
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = dense_sub(dense_mul(piv, a[i][j]), dense_mul(aik, a[k][j]))
                a[i][j] = dense_divexact(num, prev) if num else []
            a[i][k] = []
        prev = piv
    d = a[n - 1][n - 1]
    return [sign * c for c in d]


def det_cofactor(M: LaurentMatrix) -> HalfLaurent:
    """Laplace expansion along rows, memoized on the remaining column subset."""
    n = len(M)

    @functools.lru_cache(maxsize=None)
    def minor(row: int, cols: int) -> HalfLaurent:
        if row == n:
            return ONE
        total = ZERO
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                e = M[row][j]
                if not e.is_zero():
                    total = total + sign * e * minor(row + 1, cols & ~(1 << j))
                sign = -sign
        return total

    return minor(0, (1 << n) - 1)


def seifert_laurent_matrix(V: SeifertMatrix) -> list[list[HalfLaurent]]:
    """t^(-1/2) V - t^(1/2) V^T."""
    e = V.entries
    n = V.dim
    return [[HalfLaurent({-1: e[i][j], 1: -e[j][i]}) for j in range(n)] for i in range(n)]


def from_seifert(V: SeifertMatrix) -> HalfLaurent:
    return det_laurent(seifert_laurent_matrix(V))


@functools.lru_cache(maxsize=None)
def _braid_poly(strands: int, letters: tuple[int, ...]) -> HalfLaurent:
    w = PositiveBraidWord(strands, letters)
    if strands == 1:
        return ONE
    if missing_generators(w):
        return ZERO
    result = ONE
    for f in factor_single_occurrence(w):
        result = result * from_seifert(seifert_from_braid(f))
    return result


def braid_poly(w: PositiveBraidWord) -> HalfLaurent:
    """Default route: reductions plus the Seifert determinant of each prime-ish factor."""
    return _braid_poly(w.strands, min_rotation(w.letters))


@functools.lru_cache(maxsize=None)
def _skein(strands: int, letters: tuple[int, ...]) -> HalfLaurent:
    w = PositiveBraidWord(strands, letters)
    if strands == 1:
        return ONE
    if missing_generators(w):
        return ZERO
    factors = factor_single_occurrence(w)
    if factors != [w]:
        result = ONE
        for f in factors:
            result = result * skein_oracle(f)
        return result
    W = find_square_rewrite(w)
    j = W.square_position()
    return skein_oracle(W.without(j, j + 1)) + U * skein_oracle(W.without(j))


def skein_oracle(w: PositiveBraidWord) -> HalfLaurent:
    """Delta(sigma_k^2 b) = Delta(b) + (t^(1/2) - t^(-1/2)) Delta(sigma_k b), recursively."""
    return _skein(w.strands, min_rotation(w.letters))


def _t(c: int, k: int = 1) -> HalfLaurent:
    """c * t^k with integral k."""
    return HalfLaurent({2 * k: c})


def burau_generator(n: int, i: int) -> list[list[HalfLaurent]]:
    """Reduced Burau matrix of sigma_i in B_n, size (n-1) x (n-1)."""
    m = n - 1
    R = [[ONE if r == c else ZERO for c in range(m)] for r in range(m)]
    k = i - 1
    R[k][k] = _t(-1)
    if k > 0:
        R[k - 1][k] = _t(1)
    if k < m - 1:
        R[k + 1][k] = ONE
    return R


def _matmul(A, B):
    n = len(A)
    return [[sum((A[r][s] * B[s][c] for s in range(n)), ZERO) for c in range(n)] for r in range(n)]


def burau_poly(w: PositiveBraidWord) -> HalfLaurent:
    n = w.strands
    if n < 2 or missing_generators(w):
        raise ValueError(f"Burau route needs a full-support word on >= 2 strands, got {w}")
    m = n - 1
    P = [[ONE if r == c else ZERO for c in range(m)] for r in range(m)]
    for i in w.letters:
        P = _matmul(P, burau_generator(n, i))
    for r in range(m):
        P[r][r] = P[r][r] - ONE
    d = det_laurent(P)
    cyclotomic = HalfLaurent({2 * k: 1 for k in range(n)})
    try:
        q = divexact(d, cyclotomic)
    except ArithmeticError as exc:
        raise BurauError(f"{w}: det(B - I) not divisible by 1 + t + ... + t^{n - 1}") from exc
    if q.is_zero():
        raise BurauError(f"{w}: Burau route gave zero for a full-support positive braid")
    # Keys are even here, so the midpoint of the support is an integral doubled shift.
    q = q.shift(-(q.top() + q.bottom()) // 2)
    if q.terms[q.top()] < 0:
        q = -q
    if conway_parity(q) not in (Parity.SYMMETRIC_INTEGRAL, Parity.ANTISYMMETRIC_HALF):
        raise BurauError(f"{w}: no unit makes {q} Conway-symmetric")
    return q


def tree_poly(T: PlaneTree) -> HalfLaurent:
    return from_seifert(seifert_from_tree(T))
