"""The join ring of group-circulant blocks, in compact form.

An element is ``d`` group-ring blocks ``C_i`` on the diagonal and scalars
``a_ij`` (``i != j``) standing for the constant blocks ``a_ij J``. Products,
augmentation, units, radical, center, the semisimple splitting and the
Frobenius test all work on this compact data; the dense matrix only appears
through :func:`expand` and :func:`recognize`.

The standard basis, used for coordinates and linear functionals, lists the
group elements of block 0, then block 1, ..., then the off-diagonal slots
``(i, j)`` in row-major order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import FiniteAlgebra
from .errors import HypothesisError, NotAJoinError
from .fields import Field, FieldError
from .groupring import (
    GroupRingElement,
    augment,
    class_sums,
    idempotent_eG,
    radical_basis_group_algebra,
    to_circulant,
)
from .groups import Group, group_from_json
from .linalg import Matrix, det_inverse, nullspace, rank_nullity


@dataclass(frozen=True)
class JoinElement:
    groups: tuple
    field: Field
    blocks: tuple
    off: tuple

    def __post_init__(self):
        d = len(self.groups)
        if d == 0:
            raise ValueError("a join needs at least one group")
        if len(self.blocks) != d or len(self.off) != d or any(len(r) != d for r in self.off):
            raise ValueError("blocks/off do not match the number of groups")
        for g, b in zip(self.groups, self.blocks):
            if b.group != g or b.field != self.field:
                raise ValueError("block group or field mismatch")
        if any(not self.field.is_zero(self.off[i][i]) for i in range(d)):
            raise ValueError("diagonal of the off-diagonal scalar matrix must be zero")

    # -- constructors -------------------------------------------------------

    @classmethod
    def build(cls, groups: Sequence[Group], field: Field, blocks: Sequence, off: Sequence | None = None) -> "JoinElement":
        """Build from raw coefficient lists; ``off`` diagonal entries are ignored."""
        groups = tuple(groups)
        d = len(groups)
        bl = tuple(
            b if isinstance(b, GroupRingElement) else GroupRingElement.from_values(g, field, b)
            for g, b in zip(groups, blocks)
        )
        if off is None:
            off = [[0] * d for _ in range(d)]
        o = tuple(tuple(field.zero if i == j else field.coerce(off[i][j]) for j in range(d)) for i in range(d))
        return cls(groups, field, bl, o)

    @classmethod
    def zero(cls, groups: Sequence[Group], field: Field) -> "JoinElement":
        groups = tuple(groups)
        d = len(groups)
        return cls(groups, field, tuple(GroupRingElement.zero(g, field) for g in groups), _zero_off(field, d))

    @classmethod
    def identity(cls, groups: Sequence[Group], field: Field) -> "JoinElement":
        groups = tuple(groups)
        d = len(groups)
        return cls(groups, field, tuple(GroupRingElement.one(g, field) for g in groups), _zero_off(field, d))

    @classmethod
    def random(cls, groups: Sequence[Group], field: Field, rng) -> "JoinElement":
        groups = tuple(groups)
        d = len(groups)
        blocks = tuple(GroupRingElement.random(g, field, rng) for g in groups)
        off = tuple(tuple(field.zero if i == j else field.random(rng) for j in range(d)) for i in range(d))
        return cls(groups, field, blocks, off)

    # -- shape --------------------------------------------------------------

    @property
    def d(self) -> int:
        return len(self.groups)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(g.order for g in self.groups)

    @property
    def size(self) -> int:
        return sum(self.orders)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "JoinElement"):
        if self.groups != other.groups or self.field != other.field:
            raise FieldError("join elements over different groups or fields")

    def __add__(self, other):
        self._check(other)
        f = self.field
        return JoinElement(
            self.groups,
            f,
            tuple(x + y for x, y in zip(self.blocks, other.blocks)),
            tuple(tuple(f.add(x, y) for x, y in zip(r, s)) for r, s in zip(self.off, other.off)),
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return JoinElement(self.groups, f, tuple(-b for b in self.blocks), tuple(tuple(f.neg(x) for x in r) for r in self.off))

    def __mul__(self, other):
        return mul(self, other)

    def scale(self, c) -> "JoinElement":
        f = self.field
        return JoinElement(
            self.groups, f, tuple(b.scale(c) for b in self.blocks), tuple(tuple(f.mul(c, x) for x in r) for r in self.off)
        )

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks) and all(self.field.is_zero(x) for r in self.off for x in r)

    def allclose(self, other: "JoinElement", tol: float = 1e-9) -> bool:
        if self.field.is_exact:
            return self == other
        if not all(x.allclose(y, tol) for x, y in zip(self.blocks, other.blocks)):
            return False
        return all(abs(x - y) <= tol for r, s in zip(self.off, other.off) for x, y in zip(r, s))

    # -- coordinates --------------------------------------------------------

    def coords(self) -> list:
        out = [c for b in self.blocks for c in b.coeffs]
        out += [self.off[i][j] for i, j in off_slots(self.d)]
        return out

    @classmethod
    def from_coords(cls, groups: Sequence[Group], field: Field, coords: Sequence) -> "JoinElement":
        groups = tuple(groups)
        d = len(groups)
        if len(coords) != join_dimension(groups):
            raise ValueError("coordinate vector has the wrong length")
        pos = 0
        blocks = []
        for g in groups:
            blocks.append(GroupRingElement(g, field, tuple(coords[pos:pos + g.order])))
            pos += g.order
        off = [[field.zero] * d for _ in range(d)]
        for i, j in off_slots(d):
            off[i][j] = coords[pos]
            pos += 1
        return cls(groups, field, tuple(blocks), tuple(tuple(r) for r in off))

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        f = self.field
        return {
            "field": str(f),
            "groups": [g.to_json() for g in self.groups],
            "blocks": [[f.to_json(c) for c in b.coeffs] for b in self.blocks],
            "off": [[f.to_json(x) for x in r] for r in self.off],
        }

    @classmethod
    def from_json(cls, obj: dict, field: Field | None = None, groups: Sequence[Group] | None = None) -> "JoinElement":
        """Parse the JSON form; ``field``/``groups`` fill in missing keys."""
        if not isinstance(obj, dict):
            raise ValueError("join element JSON must be an object")
        f = Field.parse(obj["field"]) if "field" in obj else field
        gs = [group_from_json(g) for g in obj["groups"]] if "groups" in obj else groups
        if f is None or gs is None:
            raise ValueError("join element JSON needs a field and groups")
        d = len(gs)
        blocks = obj.get("blocks")
        if blocks is None or len(blocks) != d:
            raise ValueError("join element JSON needs one block per group")
        bl = []
        for g, b in zip(gs, blocks):
            if len(b) != g.order:
                raise ValueError(f"block of length {len(b)} for a group of order {g.order}")
            bl.append(GroupRingElement(g, f, tuple(f.from_json(c) for c in b)))
        off_raw = obj.get("off", [[0] * d for _ in range(d)])
        if len(off_raw) != d or any(len(r) != d for r in off_raw):
            raise ValueError("off must be a d x d matrix")
        off = tuple(tuple(f.zero if i == j else f.from_json(off_raw[i][j]) for j in range(d)) for i in range(d))
        return cls(tuple(gs), f, tuple(bl), off)


def _zero_off(field: Field, d: int) -> tuple:
    return tuple(tuple(field.zero for _ in range(d)) for _ in range(d))


def off_slots(d: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(d) for j in range(d) if i != j]


def join_dimension(groups: Sequence[Group]) -> int:
    """``sum k_i + d^2 - d``."""
    d = len(groups)
    return sum(g.order for g in groups) + d * d - d


# -- dense boundary -----------------------------------------------------------


def expand(a: JoinElement) -> Matrix:
    """The dense ``n x n`` matrix: circulant diagonal blocks, ``a_ij J`` elsewhere."""
    f = a.field
    ks = a.orders
    starts = _offsets(ks)
    n = a.size
    rows = [[f.zero] * n for _ in range(n)]
    for i in range(a.d):
        circ = to_circulant(a.blocks[i]).data
        for r in range(ks[i]):
            row = rows[starts[i] + r]
            for j in range(a.d):
                if i == j:
                    row[starts[j]:starts[j] + ks[j]] = circ[r]
                else:
                    row[starts[j]:starts[j] + ks[j]] = [a.off[i][j]] * ks[j]
    return Matrix(f, rows, n, n)


def _offsets(ks: Sequence[int]) -> list[int]:
    out, s = [], 0
    for k in ks:
        out.append(s)
        s += k
    return out


def recognize(m: Matrix, groups: Sequence[Group]) -> JoinElement:
    """Compact form of ``m``, which must commute with every ``diag(P_g1, ..., P_gd)``."""
    groups = tuple(groups)
    ks = [g.order for g in groups]
    n = sum(ks)
    if m.shape != (n, n):
        raise ValueError(f"matrix shape {m.shape} does not match total order {n}")
    f = m.field
    scale = max(1.0, m.max_abs()) if f.kind == "C" else 1.0
    data = m.data
    starts = _offsets(ks)
    # diag(P_g1, ..., P_gd) is a product of single-slot ones, so those suffice.
    for i, g in enumerate(groups):
        s0 = starts[i]
        for elem in range(1, g.order):
            row = g.table[elem]
            sigma = list(range(n))
            for r in range(g.order):
                sigma[s0 + r] = s0 + row[r]
            sigma_inv = [0] * n
            for r, s in enumerate(sigma):
                sigma_inv[s] = r
            for r in range(n):
                dr = data[sigma[r]]
                mr = data[r]
                for c in range(n):
                    if not f.eq(dr[c], mr[sigma_inv[c]], scale):
                        raise NotAJoinError()
    d = len(groups)
    blocks = tuple(GroupRingElement(g, f, tuple(data[starts[i]][starts[i]:starts[i] + ks[i]])) for i, g in enumerate(groups))
    off = tuple(tuple(f.zero if i == j else data[starts[i]][starts[j]] for j in range(d)) for i in range(d))
    return JoinElement(groups, f, blocks, off)


# -- ring structure -----------------------------------------------------------


def mul(a: JoinElement, b: JoinElement) -> JoinElement:
    """Compact product.

    Diagonal block ``l`` is ``C_l D_l + (sum_{j != l} k_j a_lj b_jl) J`` and
    off entry ``(s, t)`` is ``a_st e(D_t) + sum_{j != s,t} k_j a_sj b_jt + e(C_s) b_st``.
    """
    a._check(b)
    f = a.field
    d = a.d
    ks = [f.from_int(k) for k in a.orders]
    ea = [augment(c) for c in a.blocks]
    eb = [augment(c) for c in b.blocks]
    A, B = a.off, b.off
    blocks = []
    for l in range(d):
        s = f.zero
        for j in range(d):
            if j != l:
                s = f.add(s, f.mul(ks[j], f.mul(A[l][j], B[j][l])))
        blk = a.blocks[l] * b.blocks[l]
        if not f.is_zero(s):
            blk = blk + GroupRingElement.all_ones(a.groups[l], f).scale(s)
        blocks.append(blk)
    off = [[f.zero] * d for _ in range(d)]
    for s_, t in off_slots(d):
        v = f.add(f.mul(A[s_][t], eb[t]), f.mul(ea[s_], B[s_][t]))
        for j in range(d):
            if j != s_ and j != t:
                v = f.add(v, f.mul(ks[j], f.mul(A[s_][j], B[j][t])))
        off[s_][t] = v
    return JoinElement(a.groups, f, tuple(blocks), tuple(tuple(r) for r in off))


def augment_join(a: JoinElement) -> Matrix:
    """The ``d x d`` matrix of block row sums: ``e(C_i)`` diagonal, ``k_j a_ij`` off."""
    f = a.field
    d = a.d
    rows = [
        [augment(a.blocks[i]) if i == j else f.mul(f.from_int(a.groups[j].order), a.off[i][j]) for j in range(d)]
        for i in range(d)
    ]
    return Matrix(f, rows, d, d)


def standard_basis(groups: Sequence[Group], field: Field) -> list[JoinElement]:
    dim = join_dimension(groups)
    out = []
    for idx in range(dim):
        c = [field.zero] * dim
        c[idx] = field.one
        out.append(JoinElement.from_coords(groups, field, c))
    return out


def join_algebra(groups: Sequence[Group], field: Field) -> FiniteAlgebra:
    """The join ring as a structure-constant algebra on the standard basis."""
    basis = standard_basis(groups, field)
    return FiniteAlgebra.from_product(field, len(basis), lambda x, y: mul(basis[x], basis[y]).coords())


def enumerate_elements(groups: Sequence[Group], field: Field) -> Iterator[JoinElement]:
    """Every element of the join ring over a prime field (in coordinate order)."""
    dim = join_dimension(groups)
    for coords in itertools.product(field.elements(), repeat=dim):
        yield JoinElement.from_coords(groups, field, list(coords))


# -- center -------------------------------------------------------------------


def center_basis(groups: Sequence[Group], field: Field) -> list[JoinElement]:
    """Basis of the center: the identity and ``K - |K| e`` in each block for non-identity classes ``K``.

    Central elements have zero off-diagonal part, central blocks and a common
    block augmentation, so the dimension is ``sum c(G_i) - d + 1``.
    """
    groups = tuple(groups)
    out = [JoinElement.identity(groups, field)]
    zero = JoinElement.zero(groups, field)
    for i, g in enumerate(groups):
        for cls, ksum in zip(g.conjugacy_classes, class_sums(g, field)):
            if cls == (0,):
                continue
            blk = ksum - GroupRingElement.one(g, field).scale(field.from_int(len(cls)))
            blocks = list(zero.blocks)
            blocks[i] = blk
            out.append(JoinElement(groups, field, tuple(blocks), zero.off))
    return out


# -- units --------------------------------------------------------------------


def block_status(x: GroupRingElement) -> str:
    """``"invertible"``, ``"almost"`` (augmentation 0, nullity 1) or ``"singular"``."""
    nullity = rank_nullity(to_circulant(x))[1]
    if nullity == 0:
        return "invertible"
    if nullity == 1:
        scale = max((abs(c) for c in x.coeffs), default=1.0) if x.field.kind == "C" else 1.0
        if x.field.is_zero(augment(x), max(1.0, scale)):
            return "almost"
    return "singular"


def is_unit(a: JoinElement, return_inverse: bool = False):
    """Unit test by the block criterion.

    Every ``C_i`` must be invertible or almost invertible and ``e(a)`` must be
    invertible in ``M_d``. With ``return_inverse`` the result is
    ``(flag, inverse or None)``, the inverse being recognized from the dense one.
    """
    ok = all(block_status(b) != "singular" for b in a.blocks)
    if ok:
        ok = rank_nullity(augment_join(a))[1] == 0
    if not return_inverse:
        return ok
    if not ok:
        return False, None
    _, inv = det_inverse(expand(a))
    if inv is None:
        raise ArithmeticError("block criterion says unit but the dense matrix is singular")
    return True, recognize(inv, a.groups)


def _require_modular(groups: Sequence[Group], field: Field):
    p = field.characteristic()
    if p == 0 or any(g.order % p for g in groups):
        raise HypothesisError("not-modular", f"characteristic of {field} must divide every group order")


@dataclass(frozen=True)
class UnitGroupStructure:
    """``a = s(torus) * psi(offpart) * Phi(principal)`` in the modular case."""

    torus: tuple
    offpart: tuple
    principal: tuple

    def reassemble(self, groups: Sequence[Group], field: Field) -> JoinElement:
        groups = tuple(groups)
        d = len(groups)
        s = torus_element(groups, field, self.torus)
        psi = JoinElement(groups, field, tuple(GroupRingElement.one(g, field) for g in groups), self.offpart)
        phi = JoinElement(groups, field, tuple(self.principal), _zero_off(field, d))
        return s * psi * phi

    def to_json(self, field: Field) -> dict:
        return {
            "torus": [field.to_json(t) for t in self.torus],
            "offpart": [[field.to_json(x) for x in r] for r in self.offpart],
            "principal": [[field.to_json(c) for c in b.coeffs] for b in self.principal],
        }


def torus_element(groups: Sequence[Group], field: Field, t: Sequence) -> JoinElement:
    """``s(t) = diag(t_1 I, ..., t_d I)``."""
    groups = tuple(groups)
    return JoinElement(
        groups,
        field,
        tuple(GroupRingElement.one(g, field).scale(ti) for g, ti in zip(groups, t)),
        _zero_off(field, len(groups)),
    )


def normalize_unit(a: JoinElement) -> tuple[tuple, JoinElement]:
    """Split ``a = s(t) u`` with ``u`` principal (every block augmentation 1)."""
    f = a.field
    t = tuple(augment(b) for b in a.blocks)
    if any(f.is_zero(x) for x in t):
        raise HypothesisError("not-a-unit", "a block has zero augmentation")
    inv = [f.inv(x) for x in t]
    u = JoinElement(
        a.groups,
        f,
        tuple(b.scale(inv[i]) for i, b in enumerate(a.blocks)),
        tuple(tuple(f.mul(inv[i], x) for x in r) for i, r in enumerate(a.off)),
    )
    return t, u


def log_map(a: JoinElement) -> tuple:
    """Off-diagonal part of the principal component; additive on principal units."""
    return normalize_unit(a)[1].off


def modular_unit_structure(a: JoinElement) -> UnitGroupStructure:
    """Factor a unit in the modular case into torus, off-diagonal and principal parts."""
    _require_modular(a.groups, a.field)
    if not is_unit(a):
        raise HypothesisError("not-a-unit", "element is not a unit")
    t, u = normalize_unit(a)
    return UnitGroupStructure(t, u.off, u.blocks)


def count_units(field: Field, groups: Sequence[Group]) -> int:
    """``(|k|-1)^d |k|^(sum |G_i| + d^2 - 2d)`` for p-groups over ``F_p``."""
    if field.kind != "Fp":
        raise HypothesisError("infinite-field", "unit counting needs a finite prime field")
    p = field.p
    if not all(g.is_p_group(p) for g in groups):
        raise HypothesisError("not-p-groups", f"every group must be a {p}-group")
    d = len(groups)
    return (p - 1) ** d * p ** (sum(g.order for g in groups) + d * d - 2 * d)


# -- radical and semisimplicity ----------------------------------------------


def radical_basis_join(groups: Sequence[Group], field: Field) -> list[JoinElement]:
    """Basis of the radical.

    Blocks range over ``Rad(k[G_i])``; the slot ``a_ij`` is free exactly when
    the characteristic divides ``k_i k_j``.
    """
    groups = tuple(groups)
    p = field.characteristic()
    if p == 0:
        return []
    zero = JoinElement.zero(groups, field)
    out = []
    for i, g in enumerate(groups):
        for r in radical_basis_group_algebra(g, field):
            blocks = list(zero.blocks)
            blocks[i] = r
            out.append(JoinElement(groups, field, tuple(blocks), zero.off))
    d = len(groups)
    for i, j in off_slots(d):
        if (groups[i].order * groups[j].order) % p == 0:
            off = [list(r) for r in zero.off]
            off[i][j] = field.one
            out.append(JoinElement(groups, field, zero.blocks, tuple(tuple(r) for r in off)))
    return out


def is_semisimple(groups: Sequence[Group], field: Field) -> bool:
    return all(field.int_is_invertible(g.order) for g in groups)


@dataclass(frozen=True)
class SemisimpleDecomposition:
    """Central idempotents ``f_1..f_d`` (block ``1 - e_Gi`` in slot ``i``) and ``f_{d+1}``."""

    groups: tuple
    field: Field
    idempotents: tuple

    def matrix_component(self, a: JoinElement) -> Matrix:
        """Image in ``M_d``: ``e(f_{d+1} a)``."""
        return augment_join(self.idempotents[-1] * a)

    def group_component(self, a: JoinElement, i: int) -> GroupRingElement:
        """Image in the augmentation-zero part of ``k[G_i]``."""
        return (self.idempotents[i] * a).blocks[i]

    def matrix_preimage(self, m: Matrix) -> JoinElement:
        """The element of ``f_{d+1} J`` whose augmentation is ``m``."""
        f = self.field
        d = len(self.groups)
        if m.shape != (d, d):
            raise ValueError("matrix size does not match d")
        blocks = tuple(GroupRingElement.one(g, f).scale(m[i, i]) for i, g in enumerate(self.groups))
        off = tuple(
            tuple(f.zero if i == j else f.div(m[i, j], f.from_int(self.groups[j].order)) for j in range(d)) for i in range(d)
        )
        return self.idempotents[-1] * JoinElement(self.groups, f, blocks, off)

    def component_dimensions(self) -> list[int]:
        d = len(self.groups)
        return [g.order - 1 for g in self.groups] + [d * d]


def decompose_semisimple(groups: Sequence[Group], field: Field, verify: bool = True) -> SemisimpleDecomposition:
    """Central orthogonal idempotents splitting off ``M_d`` and each augmentation-zero block."""
    groups = tuple(groups)
    if not is_semisimple(groups, field):
        raise HypothesisError("order-not-invertible", f"some group order is zero in {field}")
    one = JoinElement.identity(groups, field)
    zero = JoinElement.zero(groups, field)
    idem = []
    for i, g in enumerate(groups):
        blocks = list(zero.blocks)
        blocks[i] = GroupRingElement.one(g, field) - idempotent_eG(g, field)
        idem.append(JoinElement(groups, field, tuple(blocks), zero.off))
    last = one
    for e in idem:
        last = last - e
    idem.append(last)
    if verify:
        _verify_idempotents(idem, groups, field)
    return SemisimpleDecomposition(groups, field, tuple(idem))


def _verify_idempotents(idem: list[JoinElement], groups: tuple, field: Field):
    total = JoinElement.zero(groups, field)
    for a, e in enumerate(idem):
        total = total + e
        for b, h in enumerate(idem):
            target = e if a == b else JoinElement.zero(groups, field)
            if not (e * h).allclose(target):
                raise ArithmeticError("idempotents are not orthogonal")
    if not total.allclose(JoinElement.identity(groups, field)):
        raise ArithmeticError("idempotents do not sum to one")
    for x in standard_basis(groups, field):
        for e in idem:
            if not (e * x).allclose(x * e):
                raise ArithmeticError("idempotent is not central")


def irreducible_count(groups: Sequence[Group], p: int) -> int:
    """Number of simple modules over an algebraically closed field of characteristic ``p``.

    With ``r`` the number of group orders prime to ``p``: ``sum c(G_i) - d + 1``
    when ``r = d``, ``sum c_p(G_i) - r + 1`` when ``0 < r < d``, and
    ``sum c_p(G_i)`` when ``r = 0`` (no matrix factor survives).
    """
    d = len(groups)
    r = sum(1 for g in groups if p == 0 or g.order % p)
    if r == d:
        return sum(g.class_count() for g in groups) - d + 1
    cp = sum(g.p_regular_class_count(p) for g in groups)
    if r == 0:
        return cp
    return cp - r + 1


# -- Frobenius ----------------------------------------------------------------


@dataclass(frozen=True)
class FrobeniusResult:
    is_frobenius: bool
    groups: tuple
    field: Field
    row: int | None = None

    def witness_vector(self, a: Sequence) -> JoinElement:
        """``v_a``: row ``row`` carries ``a_row J`` on the diagonal and ``a_j`` off it, all else zero."""
        if self.row is None:
            raise HypothesisError("is-frobenius", "no witness: the algebra is Frobenius")
        f = self.field
        d = len(self.groups)
        i0 = self.row
        zero = JoinElement.zero(self.groups, f)
        blocks = list(zero.blocks)
        blocks[i0] = GroupRingElement.all_ones(self.groups[i0], f).scale(a[i0])
        off = [list(r) for r in zero.off]
        for j in range(d):
            if j != i0:
                off[i0][j] = a[j]
        return JoinElement(self.groups, f, tuple(blocks), tuple(tuple(r) for r in off))

    def witness(self, functional: Sequence) -> tuple[list, JoinElement]:
        """Nonzero ``a`` with ``functional(v_a) = 0``; ``span(v_a)`` is a left ideal in its kernel."""
        f = self.field
        d = len(self.groups)
        if len(functional) != join_dimension(self.groups):
            raise ValueError("functional has the wrong length")
        lam = [f.coerce(x) if f.is_exact else complex(x) for x in functional]
        row = []
        for j in range(d):
            e = [f.zero] * d
            e[j] = f.one
            c = self.witness_vector(e).coords()
            s = f.zero
            for x, y in zip(lam, c):
                s = f.add(s, f.mul(x, y))
            row.append(s)
        a = nullspace(Matrix(f, [row], 1, d))[0]
        return a, self.witness_vector(a)


def is_frobenius(groups: Sequence[Group], field: Field) -> FrobeniusResult:
    """``d = 1`` is always Frobenius; otherwise iff every group order is invertible."""
    groups = tuple(groups)
    if len(groups) == 1 or is_semisimple(groups, field):
        return FrobeniusResult(True, groups, field)
    p = field.characteristic()
    row = next(i for i, g in enumerate(groups) if g.order % p == 0)
    return FrobeniusResult(False, groups, field, row)


def classify(groups: Sequence[Group], field: Field) -> dict:
    """Summary invariants of the join ring."""
    groups = tuple(groups)
    return {
        "center_dim": len(center_basis(groups, field)),
        "is_semisimple": is_semisimple(groups, field),
        "is_frobenius": is_frobenius(groups, field).is_frobenius,
        "irreducible_count": irreducible_count(groups, field.characteristic()),
        "radical_dim": len(radical_basis_join(groups, field)),
    }
