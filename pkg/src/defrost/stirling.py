"""Stirling numbers and the lambda-weighted transforms between the
degenerate and classical Frobenius-Euler sequences."""
from __future__ import annotations

from fractions import Fraction

from .errors import IndexOutOfTriangle
from .numeric import Poly


def s1_table(N: int) -> list:
    """Signed Stirling numbers of the first kind, rows 0..N."""
    rows = [[1]]
    for n in range(N):
        prev = rows[-1] + [0]
        row = [0] * (n + 2)
        for k in range(1, n + 2):
            row[k] = prev[k - 1] - n * prev[k]
        rows.append(row)
    return rows


def s2_table(N: int) -> list:
    rows = [[1]]
    for n in range(N):
        prev = rows[-1] + [0]
        row = [0] * (n + 2)
        for k in range(1, n + 2):
            row[k] = k * prev[k] + prev[k - 1]
        rows.append(row)
    return rows


def _check_triangle(n, k):
    if not 0 <= k <= n:
        raise IndexOutOfTriangle(f"need 0 <= k <= n, got n={n}, k={k}")


def s1(n: int, k: int) -> int:
    _check_triangle(n, k)
    return s1_table(n)[n][k]


def s2(n: int, k: int) -> int:
    _check_triangle(n, k)
    return s2_table(n)[n][k]


def genfall_expand(n: int, lam) -> Poly:
    """Monomial coefficients of (x|lam)_n: x^l gets lam^(n-l) S1(n,l)."""
    lam = Fraction(lam)
    row = s1_table(n)[n]
    return Poly(lam ** (n - l) * row[l] for l in range(n + 1))


def _weighted(seq, lam, table):
    lam = Fraction(lam)
    M = len(seq) - 1
    rows = table(M)
    return [
        sum((seq[n] * (lam ** (m - n) * rows[m][n]) for n in range(m + 1)), Poly())
        for m in range(M + 1)
    ]


def h_to_H(hseq, lam) -> list:
    """out_m = sum_n hseq[n] lam^(m-n) S2(m,n)."""
    return _weighted(hseq, lam, s2_table)


def H_to_h(Hseq, lam) -> list:
    """out_m = sum_n Hseq[n] lam^(m-n) S1(m,n)."""
    return _weighted(Hseq, lam, s1_table)
