"""Block-DFT diagonalization of joins of ordinary circulants over C.

Conjugating a join of cyclic circulants by the block DFT matrix, followed by a
permutation moving each block's constant column to the end, gives a diagonal
part (the circulant eigenvalues at nonzero frequencies) plus a ``d x d``
reduced matrix acting on the constant columns.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import HypothesisError
from .fields import Field
from .groupring import GroupRingElement
from .groups import Group, cyclic
from .join import JoinElement, expand
from .linalg import Matrix, complex_eigenvalues

C = Field.complex()

#: Tolerance for the block-structure check after conjugation.
STRUCTURE_TOL = 1e-9


def dft_matrix(n: int, normalized: bool = False) -> Matrix:
    """``F_n[j, l] = w^(j l)`` with ``w = exp(2 pi i / n)``; divided by ``sqrt(n)`` if normalized."""
    if n < 1:
        raise ValueError("DFT size must be positive")
    return Matrix.from_numpy(_dft(n, normalized), C)


def _dft(n: int, normalized: bool = False) -> np.ndarray:
    j = np.arange(n)
    # Reduce the exponent mod n first so large products keep full accuracy.
    f = np.exp(2j * np.pi * (np.outer(j, j) % n) / n)
    return f / math.sqrt(n) if normalized else f


def join_dft(orders: Sequence[int], normalized: bool = False) -> Matrix:
    """Block-diagonal matrix of ``F_k`` for each order ``k``."""
    return Matrix.from_numpy(_join_dft(orders, normalized), C)


def _join_dft(orders: Sequence[int], normalized: bool = False) -> np.ndarray:
    n = sum(orders)
    out = np.zeros((n, n), dtype=complex)
    s = 0
    for k in orders:
        out[s:s + k, s:s + k] = _dft(k, normalized)
        s += k
    return out


def bad_column_permutation(orders: Sequence[int]) -> list[int]:
    """New column order: good columns first, then the block-start columns, each in original order."""
    starts = set()
    s = 0
    for k in orders:
        starts.add(s)
        s += k
    good = [c for c in range(s) if c not in starts]
    return good + sorted(starts)


def permutation_matrix(perm: Sequence[int]) -> np.ndarray:
    """``P`` with ``(M P)[:, j] = M[:, perm[j]]``."""
    n = len(perm)
    p = np.zeros((n, n))
    for j, c in enumerate(perm):
        p[c, j] = 1.0
    return p


def _require_cyclic_complex(a: JoinElement):
    if a.field.kind != "C":
        raise HypothesisError("not-complex", "DFT diagonalization works over C")
    for g in a.groups:
        if not _is_cyclic_listing(g):
            raise HypothesisError("not-cyclic", f"group {g.name} is not cyclic in the standard listing")


def _is_cyclic_listing(g: Group) -> bool:
    return g == cyclic(g.order)


def circulant_eigenvalues(x: GroupRingElement) -> list[complex]:
    """``sum_m b_m w^(m l)`` for ``l = 1 .. k-1``."""
    k = x.group.order
    b = np.array(x.coeffs, dtype=complex)
    vals = _dft(k) @ b
    return [complex(v) for v in vals[1:]]


def reduced_matrix(a: JoinElement, normalized: bool = False) -> Matrix:
    """``e(C_i)`` on the diagonal; ``k_j a_ij`` off it, or ``sqrt(k_i k_j) a_ij`` when normalized."""
    d = a.d
    ks = a.orders
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            if i == j:
                row.append(complex(sum(a.blocks[i].coeffs)))
            elif normalized:
                row.append(math.sqrt(ks[i] * ks[j]) * a.off[i][j])
            else:
                row.append(ks[j] * a.off[i][j])
        rows.append(row)
    return Matrix(C, rows, d, d)


def wedderburn_map(a: JoinElement, normalized: bool = False) -> tuple[list[complex], Matrix]:
    """``a -> (circulant eigenvalues, reduced matrix)``; an algebra homomorphism."""
    _require_cyclic_complex(a)
    scalars = [v for b in a.blocks for v in circulant_eigenvalues(b)]
    return scalars, reduced_matrix(a, normalized)


def wedderburn_preimage(scalars: Sequence, reduced: Matrix, orders: Sequence[int], normalized: bool = False) -> JoinElement:
    """The join element with the given image under :func:`wedderburn_map`."""
    orders = list(orders)
    d = len(orders)
    if len(scalars) != sum(orders) - d:
        raise ValueError(f"expected {sum(orders) - d} scalars, got {len(scalars)}")
    if reduced.shape != (d, d):
        raise ValueError(f"reduced matrix must be {d} x {d}")
    m = reduced.to_numpy()
    groups = tuple(cyclic(k) for k in orders)
    blocks = []
    pos = 0
    for i, k in enumerate(orders):
        lam = np.concatenate([[m[i, i]], np.asarray(scalars[pos:pos + k - 1], dtype=complex)])
        pos += k - 1
        coeffs = np.conj(_dft(k)) @ lam / k
        blocks.append(GroupRingElement(groups[i], C, tuple(complex(c) for c in coeffs)))
    off = []
    for i in range(d):
        row = []
        for j in range(d):
            if i == j:
                row.append(0j)
            elif normalized:
                row.append(complex(m[i, j] / math.sqrt(orders[i] * orders[j])))
            else:
                row.append(complex(m[i, j] / orders[j]))
        off.append(tuple(row))
    return JoinElement(groups, C, tuple(blocks), tuple(off))


@dataclass(frozen=True)
class DiagonalizationResult:
    circulant_eigs: tuple
    reduced: Matrix
    conjugator: Matrix
    residual: float

    def spectrum(self) -> list[complex]:
        return sort_spectrum(list(self.circulant_eigs) + complex_eigenvalues(self.reduced))

    def to_json(self) -> dict:
        return {
            "circulant_eigs": [C.to_json(v) for v in snap(self.circulant_eigs)],
            "reduced": Matrix(C, [snap(r) for r in self.reduced.data]).to_json(),
            "residual": float(f"{self.residual:.3g}"),
        }


def diagonalize(a: JoinElement, normalized: bool = False, tol: float = STRUCTURE_TOL) -> DiagonalizationResult:
    """Conjugate ``expand(a)`` by ``F P`` and check it equals ``diag(eigs) + reduced``.

    The residual is the largest entry of the difference, relative to the
    largest entry of ``expand(a)`` when that exceeds one.
    """
    _require_cyclic_complex(a)
    orders = a.orders
    d = a.d
    n = sum(orders)
    fk = _join_dft(orders, normalized)
    if normalized:
        fk_inv = fk.conj().T
    else:
        inv_scale = np.concatenate([np.full(k, 1.0 / k) for k in orders])
        fk_inv = inv_scale[:, None] * fk.conj().T
    p = permutation_matrix(bad_column_permutation(orders))
    dense = expand(a).to_numpy()
    conj = p.T @ fk_inv @ dense @ fk @ p
    scalars, reduced = wedderburn_map(a, normalized)
    target = np.zeros((n, n), dtype=complex)
    target[np.arange(n - d), np.arange(n - d)] = scalars
    target[n - d:, n - d:] = reduced.to_numpy()
    scale = max(1.0, float(np.max(np.abs(dense)))) if n else 1.0
    residual = float(np.max(np.abs(conj - target))) / scale if n else 0.0
    if residual > tol:
        raise ArithmeticError(f"conjugated matrix deviates from block shape by {residual:.3g}")
    return DiagonalizationResult(tuple(scalars), reduced, Matrix.from_numpy(fk @ p, C), residual)


def spectrum(a: JoinElement) -> list[complex]:
    """Eigenvalues of ``expand(a)`` from the block diagonalization."""
    scalars, reduced = wedderburn_map(a)
    return sort_spectrum(scalars + complex_eigenvalues(reduced))


def sort_spectrum(values: Sequence[complex], digits: int = 9) -> list[complex]:
    """Deterministic order by rounded real then imaginary part.

    Components below ``1e-12`` of the largest magnitude are snapped to zero.
    """
    return sorted(snap(values), key=lambda z: (round(z.real, digits), round(z.imag, digits)))


def snap(values: Sequence[complex], rel: float = 1e-12) -> list[complex]:
    """Zero out real or imaginary parts below ``rel`` times the largest magnitude (at least 1)."""
    vals = [complex(v) for v in values]
    floor = rel * max([1.0] + [abs(v) for v in vals])
    return [complex(0.0 if abs(z.real) < floor else z.real, 0.0 if abs(z.imag) < floor else z.imag) for z in vals]


def joined_union(outer: Sequence[Sequence], inner: Sequence[Sequence]) -> JoinElement:
    """Adjacency of the joined union: circulant graphs with first rows ``inner``, joined with weights ``outer``."""
    d = len(inner)
    if len(outer) != d or any(len(r) != d for r in outer):
        raise ValueError("outer weights must be a d x d matrix matching the inner graphs")
    groups = tuple(cyclic(len(r)) for r in inner)
    blocks = tuple(GroupRingElement(g, C, tuple(complex(x) for x in r)) for g, r in zip(groups, inner))
    off = tuple(tuple(0j if i == j else complex(outer[i][j]) for j in range(d)) for i in range(d))
    return JoinElement(groups, C, blocks, off)

