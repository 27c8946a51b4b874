"""Exact Gaussian elimination over the rationals.

Only what the dimension counts need: rank and kernel dimension of matrices
with Fraction entries.  Pivoting is by first nonzero entry; exact
arithmetic makes numerical pivot selection irrelevant.
"""

from __future__ import annotations

from fractions import Fraction


def rank(rows: list[list[Fraction]]) -> int:
    if not rows:
        return 0
    m = [list(r) for r in rows]
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][col]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def kernel_dimension(rows: list[list[Fraction]], ncols: int) -> int:
    return ncols - rank(rows)
