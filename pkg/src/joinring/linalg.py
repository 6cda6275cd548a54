"""Dense matrices over a :class:`~joinring.fields.Field` and the elimination
routines every other module relies on.

Exact domains (prime fields, rationals) are eliminated exactly; complex
matrices use partial pivoting with a relative zero threshold of
``COMPLEX_TOL`` times the largest initial entry.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import kernels
from .fields import COMPLEX_TOL, Field, FieldError


class ConvergenceError(ArithmeticError):
    """Root iteration did not settle within its iteration cap."""


class Matrix:
    """Immutable row-major matrix over one field."""

    __slots__ = ("field", "data", "nrows", "ncols")

    def __init__(self, field: Field, data, nrows: int | None = None, ncols: int | None = None):
        rows = tuple(tuple(r) for r in data)
        self.field = field
        self.data = rows
        self.nrows = len(rows) if nrows is None else nrows
        self.ncols = (len(rows[0]) if rows else 0) if ncols is None else ncols
        if len(rows) != self.nrows or any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged matrix data")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], nrows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def ones(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        """The all-ones matrix ``J_{nrows,ncols}``."""
        o = field.one
        return cls(field, [[o] * ncols for _ in range(nrows)], nrows, ncols)

    @classmethod
    def from_values(cls, field: Field, rows) -> "Matrix":
        """Build from raw Python values, coercing each entry into ``field``."""
        return cls(field, [[field.coerce(x) for x in r] for r in rows])

    @classmethod
    def from_numpy(cls, arr, field: Field | None = None) -> "Matrix":
        field = field or Field.complex()
        arr = np.asarray(arr)
        return cls(field, [[field.coerce(complex(x)) for x in r] for r in arr], *arr.shape)

    @classmethod
    def block_diag(cls, field: Field, blocks: Sequence["Matrix"]) -> "Matrix":
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        rows = [[field.zero] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.data):
                rows[r0 + i][c0:c0 + b.ncols] = row
            r0 += b.nrows
            c0 += b.ncols
        return cls(field, rows, n, m)

    # -- basic protocol -----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.field, self.data))

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {[list(r) for r in self.data]})"

    def allclose(self, other: "Matrix", tol: float = COMPLEX_TOL) -> bool:
        """Exact equality for exact fields, max-abs difference ``<= tol`` for complex."""
        if self.shape != other.shape:
            return False
        if self.field.is_exact:
            return self.data == other.data
        return self.max_abs_diff(other) <= tol

    def max_abs_diff(self, other: "Matrix") -> float:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        if self.nrows == 0 or self.ncols == 0:
            return 0.0
        return float(np.max(np.abs(self.to_numpy() - other.to_numpy())))

    def to_numpy(self) -> np.ndarray:
        if self.field.kind == "C":
            return np.array(self.data, dtype=complex).reshape(self.shape)
        if self.field.kind == "Fp":
            return np.array(self.data, dtype=np.int64).reshape(self.shape)
        return np.array(self.data, dtype=object).reshape(self.shape)

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix(self.field, [r[c0:c1] for r in self.data[r0:r1]], r1 - r0, c1 - c0)

    # -- arithmetic ---------------------------------------------------------

    def _check_same(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        add = self.field.add
        return Matrix(self.field, [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], *self.shape)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        sub = self.field.sub
        return Matrix(self.field, [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], *self.shape)

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self.data], *self.shape)

    def scale(self, c) -> "Matrix":
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, a) for a in r] for r in self.data], *self.shape)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.data)) if self.nrows else [], self.ncols, self.nrows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix(self.field, _matmul(self.field, self.data, other.data, other.ncols), self.nrows, other.ncols)

    def trace(self):
        t = self.field.zero
        for i in range(min(self.shape)):
            t = self.field.add(t, self.data[i][i])
        return t

    def is_zero(self) -> bool:
        scale = self.max_abs() if not self.field.is_exact else 1.0
        return all(self.field.is_zero(a, max(scale, 1.0)) for r in self.data for a in r)

    def max_abs(self) -> float:
        if self.field.kind == "Fp":
            return float(max((a for r in self.data for a in r), default=0))
        return float(max((abs(a) for r in self.data for a in r), default=0.0))

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "field": str(self.field),
            "entries": [self.field.to_json(a) for r in self.data for a in r],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Matrix":
        try:
            field = Field.parse(obj["field"])
            r, c = int(obj["rows"]), int(obj["cols"])
            entries = obj["entries"]
        except (KeyError, TypeError) as exc:
            raise FieldError(f"malformed matrix JSON: {exc}") from exc
        if len(entries) != r * c:
            raise FieldError(f"expected {r * c} entries, got {len(entries)}")
        vals = [field.from_json(e) for e in entries]
        return cls(field, [vals[i * c:(i + 1) * c] for i in range(r)], r, c)


def _matmul(field: Field, a, b, q: int):
    if not a:
        return []
    if field.kind == "Fp":
        return kernels.matmul_mod(a, b, field.p) if b else [[0] * q for _ in a]
    if field.kind == "C":
        if not b:
            return [[0j] * q for _ in a]
        out = np.array(a, dtype=complex) @ np.array(b, dtype=complex)
        return out.tolist()
    # Rationals: clear denominators per operand, multiply integers, rescale.
    da = math.lcm(*(x.denominator for r in a for x in r)) if a and a[0] else 1
    db = math.lcm(*(x.denominator for r in b for x in r)) if b and b[0] else 1
    ia = [[x.numerator * (da // x.denominator) for x in r] for r in a]
    ib_t = list(zip(*[[x.numerator * (db // x.denominator) for x in r] for r in b])) if b else []
    den = da * db
    if not ib_t:
        return [[Fraction(0)] * q for _ in a]
    return [[Fraction(sum(x * y for x, y in zip(r, c)), den) for c in ib_t] for r in ia]


# -- elimination -------------------------------------------------------------


def row_reduce(m: Matrix, pivoting: str = "first"):
    """Reduced row echelon form.

    Returns ``(rref, pivots, det)`` where ``rref`` is a list of rows, ``pivots``
    the pivot columns and ``det`` the determinant (zero unless ``m`` is square
    and nonsingular). ``pivoting`` selects the first or last eligible nonzero
    entry for exact fields; complex input always uses the largest magnitude.
    """
    if pivoting not in ("first", "last"):
        raise ValueError("pivoting must be 'first' or 'last'")
    f = m.field
    if f.kind == "Fp":
        rows, piv, det = kernels.row_reduce_mod([list(r) for r in m.data], f.p, pivoting == "last")
        return rows, piv, det
    rows = [list(r) for r in m.data]
    nrows, ncols = m.shape
    tol = COMPLEX_TOL * m.max_abs() if f.kind == "C" else 0.0
    pivots: list[int] = []
    det = f.one
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        if f.kind == "C":
            best = max(range(r, nrows), key=lambda i: abs(rows[i][c]))
            piv = best if abs(rows[best][c]) > tol else None
        else:
            cands = [i for i in range(r, nrows) if rows[i][c] != 0]
            piv = (cands[-1] if pivoting == "last" else cands[0]) if cands else None
        if piv is None:
            if f.kind == "C":
                for i in range(r, nrows):
                    rows[i][c] = f.zero
            det = f.zero
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            det = -det
        pv = rows[r][c]
        det = det * pv
        prow = [v / pv for v in rows[r]]
        prow[c] = f.one
        rows[r] = prow
        for i in range(nrows):
            if i != r:
                fac = rows[i][c]
                if fac != 0:
                    rows[i] = [u - fac * v for u, v in zip(rows[i], prow)]
                    rows[i][c] = f.zero
        pivots.append(c)
        r += 1
    if nrows != ncols or len(pivots) < nrows:
        det = f.zero
    return rows, pivots, det


def rank_nullity(m: Matrix, pivoting: str = "first") -> tuple[int, int]:
    """``(rank, nullity)`` of ``m``; ``rank + nullity == m.ncols``."""
    if m.nrows == 0 or m.ncols == 0:
        raise ValueError("rank of an empty matrix is undefined")
    _, pivots, _ = row_reduce(m, pivoting)
    return len(pivots), m.ncols - len(pivots)


def det_inverse(m: Matrix):
    """Determinant and inverse (``None`` when singular) of a square matrix."""
    if not m.is_square:
        raise ValueError(f"det/inverse need a square matrix, got {m.shape}")
    n = m.nrows
    f = m.field
    if n == 0:
        return f.one, m
    _, pivots, det = row_reduce(m)
    if len(pivots) < n:
        return (f.zero if f.is_exact else det), None
    ident = Matrix.identity(f, n)
    aug = Matrix(f, [r + s for r, s in zip(m.data, ident.data)], n, 2 * n)
    rows, _, _ = row_reduce(aug)
    inv = Matrix(f, [r[n:] for r in rows], n, n)
    return det, inv


def nullspace(m: Matrix) -> list[list]:
    """Basis of the right kernel ``{x : m x = 0}`` (exact fields or complex)."""
    rows, pivots, _ = row_reduce(m)
    f = m.field
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [f.zero] * m.ncols
        v[fc] = f.one
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(rows[i][fc])
        basis.append(v)
    return basis


def row_space_basis(field: Field, vectors: Sequence[Sequence]) -> list[list]:
    """Reduced basis of the span of ``vectors``."""
    if not vectors:
        return []
    rows, pivots, _ = row_reduce(Matrix(field, vectors))
    return [list(rows[i]) for i in range(len(pivots))]


def has_constant_row_sums(m: Matrix):
    """The common row sum if every row sums to the same value, else ``None``."""
    f = m.field
    if m.nrows == 0:
        return None
    sums = []
    for r in m.data:
        s = f.zero
        for a in r:
            s = f.add(s, a)
        sums.append(s)
    scale = max(1.0, m.max_abs() * max(m.ncols, 1)) if f.kind == "C" else 1.0
    first = sums[0]
    if all(f.eq(s, first, scale) for s in sums[1:]):
        return first
    return None


# -- eigenvalues -------------------------------------------------------------


def charpoly(m: Matrix) -> list:
    """Coefficients of ``det(xI - m)``, highest degree first (Berkowitz)."""
    if not m.is_square:
        raise ValueError("characteristic polynomial needs a square matrix")
    f = m.field
    n = m.nrows
    if n == 0:
        return [f.one]
    a = m.data
    add, mul, neg = f.add, f.mul, f.neg
    coeffs = [f.one, neg(a[0][0])]
    for r in range(1, n):
        row = a[r][:r]
        v = [a[i][r] for i in range(r)]
        t = [f.one, neg(a[r][r])]
        for _ in range(r):
            dot = f.zero
            for x, y in zip(row, v):
                dot = add(dot, mul(x, y))
            t.append(neg(dot))
            nv = []
            for i in range(r):
                s = f.zero
                for j in range(r):
                    s = add(s, mul(a[i][j], v[j]))
                nv.append(s)
            v = nv
        new = []
        for i in range(r + 2):
            s = f.zero
            for j in range(min(i, len(coeffs) - 1) + 1):
                s = add(s, mul(t[i - j], coeffs[j]))
            new.append(s)
        coeffs = new
    return coeffs


def _horner(coeffs, z):
    acc = 0j
    for c in coeffs:
        acc = acc * z + c
    return acc


def durand_kerner(coeffs: Sequence[complex], max_iter: int = 500, tol: float = 1e-12) -> list[complex]:
    """All complex roots of the polynomial with ``coeffs`` (highest degree first).

    Weierstrass iteration from points on a circle of the Cauchy radius.
    Multiple roots converge only to ``~sqrt(eps)``; clusters are therefore
    replaced by their centroid, which is well conditioned. Raises
    :class:`ConvergenceError` if the iteration stalls with a large residual.
    """
    cs = [complex(c) for c in coeffs]
    while cs and cs[0] == 0:
        cs.pop(0)
    if not cs:
        raise ValueError("zero polynomial has no well-defined roots")
    lead = cs[0]
    cs = [c / lead for c in cs]
    deg = len(cs) - 1
    if deg == 0:
        return []
    if deg == 1:
        return [-cs[1]]
    radius = 1 + max(abs(c) for c in cs[1:])
    z = [radius * 0.5 * cmath.exp(1j * (2 * math.pi * k / deg + 0.4)) for k in range(deg)]
    converged = False
    for _ in range(max_iter):
        delta = 0.0
        for k in range(deg):
            zk = z[k]
            denom = 1 + 0j
            for j in range(deg):
                if j != k:
                    denom *= zk - z[j]
            if denom == 0:
                denom = 1e-300
            step = _horner(cs, zk) / denom
            z[k] = zk - step
            delta = max(delta, abs(step))
        if delta <= tol * max(1.0, max(abs(w) for w in z)):
            converged = True
            break
    if not converged:
        for zk in z:
            bound = 1e4 * np.finfo(float).eps * sum(abs(c) * abs(zk) ** (deg - i) for i, c in enumerate(cs))
            if abs(_horner(cs, zk)) > bound:
                raise ConvergenceError(f"Durand-Kerner failed to converge after {max_iter} iterations")
    return _merge_clusters(z, cs)


def _derivative(cs: list[complex]) -> list[complex]:
    deg = len(cs) - 1
    return [c * (deg - i) for i, c in enumerate(cs[:-1])]


def _polish(cs: list[complex], z0: complex, mult: int, steps: int = 8) -> complex:
    """Newton on the ``(mult-1)``-th derivative, where a root of multiplicity ``mult`` is simple."""
    q = cs
    for _ in range(mult - 1):
        q = _derivative(q)
    dq = _derivative(q)
    z = z0
    for _ in range(steps):
        den = _horner(dq, z)
        if den == 0:
            break
        step = _horner(q, z) / den
        z -= step
        if abs(step) <= 1e-16 * max(1.0, abs(z)):
            break
    # Keep the centroid if Newton wandered off (e.g. a near-multiple cluster).
    return z if abs(z - z0) <= 1e-6 * max(1.0, abs(z0)) else z0


def _merge_clusters(z: list[complex], cs: list[complex] | None = None, rel: float = 1e-5) -> list[complex]:
    scale = max(1.0, max(abs(w) for w in z))
    remaining = list(z)
    out = []
    while remaining:
        seed = remaining.pop(0)
        cluster = [seed]
        grew = True
        while grew:
            grew = False
            for w in list(remaining):
                if any(abs(w - c) <= rel * scale for c in cluster):
                    cluster.append(w)
                    remaining.remove(w)
                    grew = True
        centre = sum(cluster) / len(cluster)
        if cs is not None and len(cluster) > 1:
            centre = _polish(cs, centre, len(cluster))
        out.extend([centre] * len(cluster))
    return out


def complex_eigenvalues(m: Matrix) -> list[complex]:
    """Eigenvalue multiset of a complex matrix via its characteristic polynomial."""
    if m.field.kind != "C":
        raise FieldError("complex_eigenvalues needs a complex matrix")
    if not m.is_square:
        raise ValueError("eigenvalues need a square matrix")
    if m.nrows > 64:
        raise ValueError("dimension above 64 is not supported")
    if m.nrows == 0:
        return []
    return durand_kerner(charpoly(m))
