"""Finite groups as Cayley tables over a fixed element listing.

Index 0 is always the identity. The listing matters: G-circulance of a matrix
is defined relative to it, so every constructor documents its order.
"""
from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Group:
    """A finite group given by ``table[i][j] = index of g_i * g_j``."""

    table: tuple[tuple[int, ...], ...]
    name: str = "G"
    labels: tuple[str, ...] | None = None
    kind: str = "cayley"
    params: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(int(x) for x in r) for r in self.table))
        validate_table(self.table)

    def __eq__(self, other):
        return isinstance(other, Group) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"Group({self.name}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return self.order

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        return tuple(r.index(0) for r in self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[i][j] == t[j][i] for i in range(n) for j in range(i + 1, n))

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.table[x][i]
            k += 1
        return k

    def is_p_group(self, p: int) -> bool:
        n = self.order
        while n % p == 0:
            n //= p
        return n == 1

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of conjugation, each sorted, ordered by least element."""
        t, inv = self.table, self.inverse
        seen: set[int] = set()
        classes = []
        for x in range(self.order):
            if x in seen:
                continue
            orbit = sorted({t[t[g][x]][inv[g]] for g in range(self.order)})
            seen.update(orbit)
            classes.append(tuple(orbit))
        return tuple(classes)

    def class_count(self) -> int:
        return len(self.conjugacy_classes)

    def p_regular_class_count(self, p: int) -> int:
        """Number of classes whose elements have order coprime to ``p``."""
        if p == 0 or self.order % p:
            return self.class_count()
        return sum(1 for c in self.conjugacy_classes if self.element_order(c[0]) % p)

    def opposite(self) -> "Group":
        t = self.table
        n = self.order
        return Group(
            tuple(tuple(t[j][i] for j in range(n)) for i in range(n)),
            name=f"{self.name}^op",
            labels=self.labels,
        )

    def to_json(self) -> dict:
        if self.kind == "cyclic":
            return {"kind": "cyclic", "n": self.order}
        if self.kind == "dihedral":
            return {"kind": "dihedral", "n": self.order}
        if self.kind == "symmetric":
            return {"kind": "symmetric", "n": self.params[0]}
        return {"kind": "cayley", "n": self.order, "table": [list(r) for r in self.table]}


def validate_table(table) -> None:
    """Raise :class:`GroupError` unless ``table`` is a group with identity at 0."""
    n = len(table)
    if n == 0:
        raise GroupError("empty Cayley table")
    full = set(range(n))
    for i, r in enumerate(table):
        if len(r) != n or set(r) != full:
            raise GroupError(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if {table[i][j] for i in range(n)} != full:
            raise GroupError(f"column {j} is not a permutation of 0..{n - 1}")
    if any(table[0][j] != j for j in range(n)) or any(table[i][0] != i for i in range(n)):
        raise GroupError("index 0 is not the identity")
    for a in range(n):
        ra = table[a]
        for b in range(n):
            ab = ra[b]
            rab = table[ab]
            rb = table[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise GroupError(f"not associative at ({a}, {b}, {c})")


@functools.lru_cache(maxsize=None)
def cyclic(n: int) -> Group:
    """Z/n listed as powers ``g^0, g^1, ..., g^{n-1}`` of a generator."""
    if n < 1:
        raise GroupError("cyclic order must be positive")
    return Group(
        tuple(tuple((i + j) % n for j in range(n)) for i in range(n)),
        name=f"Z/{n}",
        labels=tuple(f"g^{i}" for i in range(n)),
        kind="cyclic",
        params=(n,),
    )


@functools.lru_cache(maxsize=None)
def dihedral(order: int) -> Group:
    """Dihedral group of the given (even) order ``2m``.

    Listing: ``r^0, ..., r^{m-1}, s, s r, ..., s r^{m-1}`` with
    ``r^a s = s r^{-a}``.
    """
    if order < 2 or order % 2:
        raise GroupError("dihedral order must be even and positive")
    m = order // 2

    def idx(f, a):
        return f * m + a % m

    table = []
    for f1 in (0, 1):
        for a in range(m):
            row = []
            for f2 in (0, 1):
                for b in range(m):
                    row.append(idx((f1 + f2) % 2, (-a if f2 else a) + b))
            table.append(row)
    labels = tuple([f"r^{a}" for a in range(m)] + [f"sr^{a}" for a in range(m)])
    return Group(table, name=f"D/{order}", labels=labels, kind="dihedral", params=(order,))


@functools.lru_cache(maxsize=None)
def symmetric(m: int) -> Group:
    """S_m with permutations listed lexicographically; ``(s t)(x) = s(t(x))``."""
    if not 1 <= m <= 5:
        raise GroupError("symmetric groups are supported for 1 <= m <= 5")
    perms = list(itertools.permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(s[t[x]] for x in range(m))] for t in perms] for s in perms]
    labels = tuple("".join(str(x + 1) for x in p) for p in perms)
    return Group(table, name=f"S/{m}", labels=labels, kind="symmetric", params=(m,))


def product(g: Group, h: Group) -> Group:
    """Direct product with lexicographically ordered pairs ``(g_i, h_j)``."""
    ng, nh = g.order, h.order
    table = [
        [g.table[a // nh][b // nh] * nh + h.table[a % nh][b % nh] for b in range(ng * nh)]
        for a in range(ng * nh)
    ]
    return Group(table, name=f"{g.name}x{h.name}")


def from_table(table, name: str = "G") -> Group:
    return Group(tuple(tuple(r) for r in table), name=name)


def make_group(kind: str, n: int | None = None, table=None, factors=None) -> Group:
    """Dispatch on ``kind`` in {cyclic, dihedral, symmetric, product, cayley}."""
    if kind == "cyclic":
        return cyclic(n)
    if kind == "dihedral":
        return dihedral(n)
    if kind == "symmetric":
        return symmetric(n)
    if kind == "product":
        if not factors:
            raise GroupError("product needs factors")
        out = factors[0]
        for f in factors[1:]:
            out = product(out, f)
        return out
    if kind == "cayley":
        if table is None:
            raise GroupError("cayley kind needs a table")
        return from_table(table)
    raise GroupError(f"unknown group kind {kind!r}")


def group_from_json(obj) -> Group:
    if isinstance(obj, str):
        return parse_group_spec(obj)[0]
    if not isinstance(obj, dict) or "kind" not in obj:
        raise GroupError(f"malformed group JSON: {obj!r}")
    kind = obj["kind"]
    if kind == "product":
        return make_group("product", factors=[group_from_json(f) for f in obj.get("factors", [])])
    g = make_group(kind, obj.get("n"), obj.get("table"))
    if kind == "cayley" and "n" in obj and obj["n"] != g.order:
        raise GroupError("cayley table size does not match n")
    return g


def parse_group_spec(spec: str) -> list[Group]:
    """Parse ``"Z/3,D/6,S/4,cayley:file.json"`` into groups."""
    out = []
    for part in (p.strip() for p in spec.split(",")):
        if not part:
            continue
        if part.startswith("cayley:"):
            obj = json.loads(Path(part[7:]).read_text())
            if isinstance(obj, list):
                obj = {"kind": "cayley", "table": obj}
            out.append(group_from_json(obj))
            continue
        head, _, num = part.partition("/")
        try:
            n = int(num)
        except ValueError as exc:
            raise GroupError(f"bad group spec {part!r}") from exc
        kinds = {"Z": "cyclic", "C": "cyclic", "D": "dihedral", "S": "symmetric"}
        if head not in kinds:
            raise GroupError(f"bad group spec {part!r}")
        out.append(make_group(kinds[head], n))
    if not out:
        raise GroupError("empty group spec")
    return out


def conjugacy_classes(g: Group):
    return g.conjugacy_classes


def p_regular_class_count(g: Group, p: int) -> int:
    return g.p_regular_class_count(p)


def opposite(g: Group) -> Group:
    return g.opposite()
