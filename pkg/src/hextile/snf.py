"""Smith normal form over the integers with the left transform.

Matrices are lists of rows of Python ints, so entries never overflow.
"""

from __future__ import annotations


def smith_normal_form(a: list[list[int]], want_right: bool = False):
    """Return ``(diag, U, V)`` with ``U @ a @ V`` diagonal.

    ``diag`` lists the non-zero invariant factors d_1 | d_2 | ... (all
    positive); its length is the rank. ``U`` is unimodular (rows x rows).
    ``V`` is computed only when ``want_right`` is set, otherwise None.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(r) for r in a]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)] if want_right else None

    def row_op(dst: int, src: int, q: int) -> None:
        # row[dst] -= q * row[src]
        md, ms = m[dst], m[src]
        for j in range(cols):
            if ms[j]:
                md[j] -= q * ms[j]
        ud, us = u[dst], u[src]
        for j in range(rows):
            if us[j]:
                ud[j] -= q * us[j]

    def col_op(dst: int, src: int, q: int) -> None:
        for r in m:
            if r[src]:
                r[dst] -= q * r[src]
        if v is not None:
            for r in v:
                if r[src]:
                    r[dst] -= q * r[src]

    def swap_rows(i: int, j: int) -> None:
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for r in m:
            r[i], r[j] = r[j], r[i]
        if v is not None:
            for r in v:
                r[i], r[j] = r[j], r[i]

    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest non-zero magnitude in the trailing block
        best = None
        for i in range(t, rows):
            ri = m[i]
            for j in range(t, cols):
                x = ri[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            p = m[t][t]
            moved = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // p
                    row_op(i, t, q)
                    if m[i][t]:
                        swap_rows(t, i)
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // p
                    col_op(j, t, q)
                    if m[t][j]:
                        swap_cols(t, j)
                        moved = True
                        break
            if moved:
                continue
            # divisibility: fold in any row holding a non-multiple of p
            bad = None
            for i in range(t + 1, rows):
                if any(x % p for x in m[i][t + 1:]):
                    bad = i
                    break
            if bad is None:
                break
            row_op(t, bad, -1)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        diag.append(m[t][t])
        t += 1
    return diag, u, v
