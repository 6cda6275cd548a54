# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled prime-field kernels (moduli below 2**31, int64 intermediates)."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t


def matmul_mod(a, b, int64_t m):
    cdef int64_t[:, ::1] A = np.ascontiguousarray(a, dtype=np.int64)
    cdef int64_t[:, ::1] B = np.ascontiguousarray(b, dtype=np.int64)
    cdef Py_ssize_t n = A.shape[0], k = A.shape[1], q = B.shape[1]
    out = np.zeros((n, q), dtype=np.int64)
    cdef int64_t[:, ::1] C = out
    cdef Py_ssize_t i, j, l
    cdef int64_t acc, aval
    for i in range(n):
        for l in range(k):
            aval = A[i, l]
            if aval == 0:
                continue
            for j in range(q):
                C[i, j] = (C[i, j] + aval * B[l, j]) % m
    return out.tolist()


def convolve_mod(table, x, y, int64_t p):
    cdef int64_t[:, ::1] T = np.ascontiguousarray(table, dtype=np.int64)
    cdef int64_t[::1] X = np.ascontiguousarray(x, dtype=np.int64)
    cdef int64_t[::1] Y = np.ascontiguousarray(y, dtype=np.int64)
    cdef Py_ssize_t n = X.shape[0]
    out = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] O = out
    cdef Py_ssize_t h, k, t
    cdef int64_t xh
    for h in range(n):
        xh = X[h]
        if xh == 0:
            continue
        for k in range(n):
            if Y[k]:
                t = T[h, k]
                O[t] = (O[t] + xh * Y[k]) % p
    return out.tolist()


cdef int64_t _inv_mod(int64_t a, int64_t p):
    cdef int64_t t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def row_reduce_mod(a, int64_t p, bint pivot_last=False):
    arr = np.array(a, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] == 0:
        return [list(r) for r in a], [], 0
    arr = np.ascontiguousarray(arr)
    cdef int64_t[:, ::1] M = arr
    cdef Py_ssize_t nrows = M.shape[0], ncols = M.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t det = 1, pv, inv, f, tmp
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        if pivot_last:
            for i in range(nrows - 1, r - 1, -1):
                if M[i, c] != 0:
                    piv = i
                    break
        else:
            for i in range(r, nrows):
                if M[i, c] != 0:
                    piv = i
                    break
        if piv < 0:
            det = 0
            continue
        if piv != r:
            for j in range(ncols):
                tmp = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = tmp
            det = (p - det) % p
        pv = M[r, c]
        det = det * pv % p
        inv = _inv_mod(pv, p)
        for j in range(ncols):
            M[r, j] = M[r, j] * inv % p
        for i in range(nrows):
            if i != r:
                f = M[i, c]
                if f != 0:
                    for j in range(ncols):
                        M[i, j] = (M[i, j] - f * M[r, j]) % p
                        if M[i, j] < 0:
                            M[i, j] += p
        pivots.append(c)
        r += 1
    if nrows != ncols or len(pivots) < nrows:
        det = 0
    return arr.tolist(), pivots, int(det % p)
