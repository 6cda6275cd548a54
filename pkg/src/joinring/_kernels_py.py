"""Pure-Python prime-field kernels.

Same signatures and results as the compiled ``_kernels_c`` module. Inputs are
lists of lists of ints already reduced modulo ``m`` (or ``p``); outputs are
fresh lists.
"""
from __future__ import annotations


def matmul_mod(a, b, m):
    """Return ``a @ b`` with entries reduced modulo ``m``."""
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append([sum(x * y for x, y in zip(row, col)) % m for col in bt])
    return out


def convolve_mod(table, x, y, p):
    """Group-ring product: ``out[table[h][k]] += x[h] * y[k]`` modulo ``p``."""
    n = len(x)
    out = [0] * n
    for h in range(n):
        xh = x[h]
        if xh == 0:
            continue
        row = table[h]
        for k in range(n):
            yk = y[k]
            if yk:
                out[row[k]] += xh * yk
    return [v % p for v in out]


def row_reduce_mod(a, p, pivot_last=False):
    """Reduced row echelon form modulo a prime ``p``.

    Returns ``(rref, pivots, det)``. ``det`` is the determinant when the input
    is square and 0 otherwise (also 0 for singular square input).
    """
    rows = [list(r) for r in a]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    det = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        candidates = [i for i in range(r, nrows) if rows[i][c]]
        if not candidates:
            det = 0
            continue
        piv = candidates[-1] if pivot_last else candidates[0]
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            det = -det
        pv = rows[r][c]
        det = det * pv % p
        inv = pow(pv, p - 2, p)
        prow = [v * inv % p for v in rows[r]]
        rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    rows[i] = [(u - f * v) % p for u, v in zip(ri, prow)]
        pivots.append(c)
        r += 1
    if nrows != ncols or len(pivots) < nrows:
        det = 0
    return rows, pivots, det % p
