"""Finite-dimensional associative algebras given by structure constants.

An algebra of dimension ``m`` is stored through its left-regular matrices:
``left[a]`` is the ``m x m`` matrix of ``x -> e_a x``. Elements are coordinate
lists over a prime field or the rationals.

The radical is computed by iterated trace forms on the regular
representation. In characteristic 0 this is Dickson's criterion
``Rad A = {x : Tr(L_{xy}) = 0 for all y}``. In characteristic p the trace is
replaced by a sequence of functionals read off integer lifts,

    g_i(z) = (Tr(lift(L_z)^(p^i)) mod p^(i+1)) / p^i,

and ``I_i = {x in I_{i-1} : g_i(x y) = 0 for all basis y}`` for
``i = 0 .. floor(log_p m)``; the last ``I_i`` is the radical.
"""
from __future__ import annotations

from typing import Callable, Sequence

from . import kernels
from .fields import Field, FieldError
from .linalg import Matrix, nullspace, row_reduce


class FiniteAlgebra:
    """Associative algebra over ``field`` with basis ``e_0 .. e_{m-1}``."""

    def __init__(self, field: Field, left: Sequence[Matrix], lifted_power_trace: Callable | None = None):
        if field.kind == "C":
            raise FieldError("structure-constant algebras need an exact field")
        self.field = field
        self.left = list(left)
        self.dim = len(self.left)
        # Optional fast path: (integer vector z, exponent, modulus) -> Tr(L_z^e) mod modulus.
        self._lifted_power_trace = lifted_power_trace

    @classmethod
    def from_product(cls, field: Field, dim: int, mul: Callable[[int, int], Sequence], **kw) -> "FiniteAlgebra":
        """Build from ``mul(a, b)`` returning the coordinates of ``e_a e_b``."""
        cols = [[list(mul(a, b)) for b in range(dim)] for a in range(dim)]
        left = [Matrix(field, [[cols[a][b][c] for b in range(dim)] for c in range(dim)], dim, dim) for a in range(dim)]
        return cls(field, left, **kw)

    # -- elementwise ------------------------------------------------------

    def left_matrix(self, x: Sequence) -> Matrix:
        f = self.field
        m = self.dim
        acc = [[f.zero] * m for _ in range(m)]
        for a, xa in enumerate(x):
            if f.is_zero(xa):
                continue
            la = self.left[a].data
            for i in range(m):
                row, src = acc[i], la[i]
                for j in range(m):
                    if src[j]:
                        row[j] = f.add(row[j], f.mul(xa, src[j]))
        return Matrix(f, acc, m, m)

    def mul(self, x: Sequence, y: Sequence) -> list:
        f = self.field
        out = [f.zero] * self.dim
        for a, xa in enumerate(x):
            if f.is_zero(xa):
                continue
            la = self.left[a].data
            for c in range(self.dim):
                s = f.zero
                for b, yb in enumerate(y):
                    if yb and la[c][b]:
                        s = f.add(s, f.mul(la[c][b], yb))
                out[c] = f.add(out[c], f.mul(xa, s))
        return out

    def basis_vector(self, a: int) -> list:
        v = [self.field.zero] * self.dim
        v[a] = self.field.one
        return v

    def is_nilpotent(self, x: Sequence) -> bool:
        power = list(x)
        for _ in range(self.dim + 1):
            if all(self.field.is_zero(v) for v in power):
                return True
            power = self.mul(power, x)
        return all(self.field.is_zero(v) for v in power)

    # -- subspaces --------------------------------------------------------

    def span(self, vectors: Sequence[Sequence]) -> list[list]:
        if not vectors:
            return []
        rows, piv, _ = row_reduce(Matrix(self.field, vectors, len(vectors), self.dim))
        return [list(rows[i]) for i in range(len(piv))]

    def contains(self, basis: Sequence[Sequence], v: Sequence) -> bool:
        return len(self.span(list(basis) + [list(v)])) == len(self.span(basis))

    def is_two_sided_ideal(self, basis: Sequence[Sequence]) -> bool:
        basis = self.span(basis)
        for x in basis:
            for a in range(self.dim):
                e = self.basis_vector(a)
                if not self.contains(basis, self.mul(e, x)) or not self.contains(basis, self.mul(x, e)):
                    return False
        return True

    def nilpotency_index(self, basis: Sequence[Sequence]) -> int | None:
        """Smallest ``k`` with ``I^k = 0`` for the span ``I`` of ``basis``, or ``None``."""
        base = self.span(basis)
        if not base:
            return 1
        power = base
        for k in range(2, self.dim + 3):
            power = self.span([self.mul(x, y) for x in power for y in base])
            if not power:
                return k
        return None

    def center(self) -> list[list]:
        """Basis of the center."""
        f = self.field
        m = self.dim
        rows = []
        for b in range(m):
            lb = self.left[b].data
            for c in range(m):
                rows.append([f.sub(self.left[a].data[c][b], lb[c][a]) for a in range(m)])
        return nullspace(Matrix(f, rows, m * m, m))

    def quotient(self, ideal: Sequence[Sequence]) -> "FiniteAlgebra":
        """The algebra modulo a two-sided ideal, on complementary standard basis vectors."""
        f = self.field
        red = self.span(ideal)
        pivots = [next(j for j, v in enumerate(r) if not f.is_zero(v)) for r in red]
        comp = [c for c in range(self.dim) if c not in set(pivots)]

        def reduce(v):
            w = list(v)
            for r, pc in zip(red, pivots):
                if not f.is_zero(w[pc]):
                    fac = w[pc]
                    w = [f.sub(x, f.mul(fac, y)) for x, y in zip(w, r)]
            return [w[c] for c in comp]

        def mul(a, b):
            return reduce(self.mul(self.basis_vector(comp[a]), self.basis_vector(comp[b])))

        return FiniteAlgebra.from_product(f, len(comp), mul)

    # -- radical ----------------------------------------------------------

    def _trace_power_lift(self, z: Sequence, exponent: int, modulus: int) -> int:
        if self._lifted_power_trace is not None:
            return self._lifted_power_trace([int(v) for v in z], exponent, modulus)
        lz = [[int(v) % modulus for v in r] for r in self.left_matrix(z).data]
        power = _matpow_mod(lz, exponent, modulus)
        return sum(power[i][i] for i in range(len(power))) % modulus

    def radical(self) -> list[list]:
        """Basis (reduced) of the Jacobson radical."""
        f = self.field
        m = self.dim
        if m == 0:
            return []
        basis = [self.basis_vector(a) for a in range(m)]
        if f.kind == "Q":
            return self._refine(basis, lambda z: self.left_matrix(z).trace())
        p = f.p
        levels = 0
        while p ** (levels + 1) <= m:
            levels += 1
        current = basis
        for i in range(levels + 1):
            mod = p ** (i + 1)
            scale = p ** i

            def g(z, i=i, mod=mod, scale=scale):
                t = self._trace_power_lift(z, p ** i, mod)
                if t % scale:
                    raise ArithmeticError("trace of lifted power not divisible by p^i")
                return (t // scale) % p

            current = self._refine(current, g)
            if not current:
                break
        return current

    def _refine(self, current: list[list], functional: Callable) -> list[list]:
        """Keep ``x`` in span(current) with ``functional(x e_b) = 0`` for every ``b``."""
        f = self.field
        if not current:
            return []
        m = self.dim
        gram = [[functional(self.mul(x, self.basis_vector(b))) for b in range(m)] for x in current]
        coeffs = nullspace(Matrix(f, gram, len(current), m).transpose())
        out = []
        for c in coeffs:
            v = [f.zero] * m
            for cj, x in zip(c, current):
                if not f.is_zero(cj):
                    v = [f.add(a, f.mul(cj, b)) for a, b in zip(v, x)]
            out.append(v)
        return self.span(out)


def _matpow_mod(a, e: int, mod: int):
    n = len(a)
    result = [[int(i == j) % mod for j in range(n)] for i in range(n)]
    base = a
    while e:
        if e & 1:
            result = kernels.matmul_mod(result, base, mod)
        e >>= 1
        if e:
            base = kernels.matmul_mod(base, base, mod)
    return result
