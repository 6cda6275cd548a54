"""Group-ring elements and their G-circulant matrices.

An element ``sum_j b_{g_j} g_j`` of ``R[G]`` is stored by its coefficient
vector; its matrix has ``(i, j)`` entry ``b`` at ``g_i^{-1} g_j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .algebra import FiniteAlgebra
from .fields import Field, FieldError
from .groups import Group, group_from_json
from .linalg import Matrix, det_inverse, rank_nullity


@dataclass(frozen=True)
class GroupRingElement:
    group: Group
    field: Field
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise ValueError(f"expected {self.group.order} coefficients, got {len(self.coeffs)}")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_values(cls, group: Group, field: Field, values: Sequence) -> "GroupRingElement":
        return cls(group, field, tuple(field.coerce(v) for v in values))

    @classmethod
    def zero(cls, group: Group, field: Field) -> "GroupRingElement":
        return cls(group, field, (field.zero,) * group.order)

    @classmethod
    def one(cls, group: Group, field: Field) -> "GroupRingElement":
        return cls.basis(group, field, 0)

    @classmethod
    def basis(cls, group: Group, field: Field, index: int) -> "GroupRingElement":
        c = [field.zero] * group.order
        c[index] = field.one
        return cls(group, field, tuple(c))

    @classmethod
    def all_ones(cls, group: Group, field: Field) -> "GroupRingElement":
        """``sum_g g``, whose matrix is ``J``."""
        return cls(group, field, (field.one,) * group.order)

    @classmethod
    def random(cls, group: Group, field: Field, rng) -> "GroupRingElement":
        return cls(group, field, tuple(field.random(rng) for _ in range(group.order)))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "GroupRingElement"):
        if self.group != other.group or self.field != other.field:
            raise FieldError("group-ring elements over different groups or fields")

    def __add__(self, other):
        self._check(other)
        add = self.field.add
        return GroupRingElement(self.group, self.field, tuple(add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        sub = self.field.sub
        return GroupRingElement(self.group, self.field, tuple(sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return GroupRingElement(self.group, self.field, tuple(self.field.neg(a) for a in self.coeffs))

    def __mul__(self, other):
        return convolve(self, other)

    def scale(self, c) -> "GroupRingElement":
        mul = self.field.mul
        return GroupRingElement(self.group, self.field, tuple(mul(c, a) for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(self.field.is_zero(a) for a in self.coeffs)

    def allclose(self, other: "GroupRingElement", tol: float = 1e-9) -> bool:
        if self.field.is_exact:
            return self == other
        return max(abs(a - b) for a, b in zip(self.coeffs, other.coeffs)) <= tol

    def augment(self):
        return augment(self)

    def to_circulant(self) -> Matrix:
        return to_circulant(self)

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "field": str(self.field),
            "coeffs": [self.field.to_json(a) for a in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GroupRingElement":
        group = group_from_json(obj["group"])
        field = Field.parse(obj["field"])
        return cls(group, field, tuple(field.from_json(c) for c in obj["coeffs"]))


def to_circulant(x: GroupRingElement) -> Matrix:
    g = x.group
    inv, t, b = g.inverse, g.table, x.coeffs
    n = g.order
    return Matrix(x.field, [[b[t[inv[i]][j]] for j in range(n)] for i in range(n)], n, n)


def from_circulant(m: Matrix, group: Group) -> GroupRingElement:
    """Read coefficients off the identity row (no circulance check)."""
    return GroupRingElement(group, m.field, tuple(m.data[0]))


def perm_matrix(group: Group, elem: int, side: str = "left", field: Field | None = None) -> Matrix:
    """``P_g`` (``side="left"``, entry 1 where ``g g_i = g_j``) or ``P'_g`` (``g_i g = g_j``)."""
    field = field or Field.rationals()
    n = group.order
    if not 0 <= elem < n:
        raise IndexError(f"element index {elem} out of range")
    t = group.table
    if side == "left":
        target = [t[elem][i] for i in range(n)]
    elif side == "right":
        target = [t[i][elem] for i in range(n)]
    else:
        raise ValueError("side must be 'left' or 'right'")
    z, o = field.zero, field.one
    return Matrix(field, [[o if target[i] == j else z for j in range(n)] for i in range(n)], n, n)


def is_g_circulant(m: Matrix, group: Group, method: str = "both") -> bool:
    """Whether ``m`` is G-circulant.

    ``method="definition"`` checks ``a[g_i, g_j] == a[g g_i, g g_j]``;
    ``"commutation"`` checks ``P_g m == m P_g`` for all ``g``; ``"both"``
    runs both and raises if they disagree.
    """
    n = group.order
    if m.shape != (n, n):
        raise ValueError(f"matrix shape {m.shape} does not match group order {n}")
    if method == "definition":
        return _circulant_by_definition(m, group)
    if method == "commutation":
        return _circulant_by_commutation(m, group)
    a, b = _circulant_by_definition(m, group), _circulant_by_commutation(m, group)
    if a != b:
        raise AssertionError("circulance characterizations disagree")
    return a


def _circulant_by_definition(m: Matrix, group: Group) -> bool:
    f, t, a = m.field, group.table, m.data
    n = group.order
    for g in range(1, n):
        tg = t[g]
        for i in range(n):
            for j in range(n):
                if not f.eq(a[i][j], a[tg[i]][tg[j]]):
                    return False
    return True


def _circulant_by_commutation(m: Matrix, group: Group) -> bool:
    for g in range(1, group.order):
        p = perm_matrix(group, g, "left", m.field)
        if not (p @ m).allclose(m @ p):
            return False
    return True


def convolve(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """Group-ring product ``(xy)_g = sum_h x_h y_{h^{-1} g}``."""
    x._check(y)
    f, g = x.field, x.group
    if f.kind == "Fp":
        return GroupRingElement(g, f, tuple(kernels.convolve_mod(g.table, x.coeffs, y.coeffs, f.p)))
    n = g.order
    out = [f.zero] * n
    t = g.table
    for h, xh in enumerate(x.coeffs):
        if xh == 0:
            continue
        row = t[h]
        for k, yk in enumerate(y.coeffs):
            if yk != 0:
                out[row[k]] += xh * yk
    return GroupRingElement(g, f, tuple(out))


def augment(x: GroupRingElement):
    s = x.field.zero
    for a in x.coeffs:
        s = x.field.add(s, a)
    return s


def transpose(x: GroupRingElement) -> GroupRingElement:
    inv = x.group.inverse
    return GroupRingElement(x.group, x.field, tuple(x.coeffs[inv[j]] for j in range(x.group.order)))


def unit_inverse(x: GroupRingElement) -> GroupRingElement | None:
    """Inverse in ``R[G]`` if the circulant matrix is invertible, else ``None``."""
    _, inv = det_inverse(to_circulant(x))
    if inv is None:
        return None
    return from_circulant(inv, x.group)


def almost_invertible(x: GroupRingElement) -> bool:
    """Augmentation zero and circulant nullity exactly one."""
    if not x.field.is_zero(augment(x), max(1.0, _scale(x))):
        return False
    return rank_nullity(to_circulant(x))[1] == 1


def _scale(x: GroupRingElement) -> float:
    if x.field.kind != "C":
        return 1.0
    return max((abs(a) for a in x.coeffs), default=0.0)


def idempotent_eG(group: Group, field: Field) -> GroupRingElement:
    """``e_G = |G|^{-1} sum_g g``."""
    if not field.int_is_invertible(group.order):
        raise FieldError(f"|G| = {group.order} is not invertible in {field}")
    c = field.inv(field.from_int(group.order))
    return GroupRingElement(group, field, (c,) * group.order)


def class_sums(group: Group, field: Field) -> list[GroupRingElement]:
    """Conjugacy-class sums; a basis of the center of ``R[G]``."""
    out = []
    for cls in group.conjugacy_classes:
        c = [field.zero] * group.order
        for i in cls:
            c[i] = field.one
        out.append(GroupRingElement(group, field, tuple(c)))
    return out


def group_algebra(group: Group, field: Field) -> FiniteAlgebra:
    """``k[G]`` as a structure-constant algebra on the listing basis."""
    n = group.order
    t = group.table
    z, o = field.zero, field.one
    left = [Matrix(field, [[o if t[a][b] == c else z for b in range(n)] for c in range(n)], n, n) for a in range(n)]

    def trace_power(zvec, exponent, modulus):
        # Tr(L_z) = |G| * z_e, and L is multiplicative over the integers.
        power = [0] * n
        power[0] = 1
        base = [v % modulus for v in zvec]
        e = exponent
        while e:
            if e & 1:
                power = kernels.convolve_mod(t, power, base, modulus)
            e >>= 1
            if e:
                base = kernels.convolve_mod(t, base, base, modulus)
        return n * power[0] % modulus

    return FiniteAlgebra(field, left, lifted_power_trace=trace_power if field.kind == "Fp" else None)


def radical_basis_group_algebra(group: Group, field: Field) -> list[GroupRingElement]:
    """Basis of ``Rad(k[G])``.

    Empty when the characteristic does not divide ``|G|``; the augmentation
    ideal ``{g - e}`` for a p-group in characteristic p; otherwise the
    iterated trace-form algorithm on the regular representation.
    """
    if field.kind == "C":
        return []
    p = field.characteristic()
    n = group.order
    if p == 0 or n % p:
        return []
    if group.is_p_group(p):
        out = []
        for i in range(1, n):
            c = [field.zero] * n
            c[0] = field.neg(field.one)
            c[i] = field.one
            out.append(GroupRingElement(group, field, tuple(c)))
        return out
    basis = group_algebra(group, field).radical()
    return [GroupRingElement(group, field, tuple(v)) for v in basis]


def conjugate_listing(m: Matrix, sigma: Sequence[int]) -> Matrix:
    """``P m P^{-1}`` with ``P = (delta_{i, sigma(j)})``: moves a circulant to a relisted group."""
    n = m.nrows
    f = m.field
    z, o = f.zero, f.one
    p = Matrix(f, [[o if i == sigma[j] else z for j in range(n)] for i in range(n)], n, n)
    return p @ m @ p.transpose()
