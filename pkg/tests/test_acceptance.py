"""Acceptance criteria, each run at its stated tolerance and runtime limit.

Every criterion records one PASS/FAIL line in ``RESULTS``; the pytest summary
hook in ``conftest.py`` prints them. Run this file directly to get the same
lines without pytest.
"""
from __future__ import annotations

import functools
import itertools
import json
import math
import random
import time
from pathlib import Path

import numpy as np

from joinring.dft import diagonalize, joined_union, spectrum, wedderburn_map
from joinring.fields import Field
from joinring.groupring import GroupRingElement
from joinring.groups import cyclic, dihedral, from_table, symmetric
from joinring.join import (
    JoinElement,
    center_basis,
    enumerate_elements,
    expand,
    irreducible_count,
    is_frobenius,
    is_unit,
    join_algebra,
    join_dimension,
    log_map,
    modular_unit_structure,
    radical_basis_join,
)
from joinring.linalg import Matrix, det_inverse

RESULTS: dict[int, tuple[int, str]] = {}

F2 = Field.prime(2)
F5 = Field.prime(5)
Q = Field.rationals()
C = Field.complex()
Z1, Z2, Z3, Z4 = (cyclic(n) for n in (1, 2, 3, 4))
DATA = Path(__file__).parent / "data"


def criterion(number: int, title: str, limit: float):
    """Time the body, enforce ``limit`` seconds and record a result line."""

    def wrap(fn):
        @functools.wraps(fn)
        def run():
            start = time.perf_counter()
            try:
                detail = fn() or ""
            except Exception as exc:
                elapsed = time.perf_counter() - start
                RESULTS[number] = (number, f"[{number}] FAIL {title} ({elapsed:.2f}s): {type(exc).__name__}: {exc}")
                raise
            elapsed = time.perf_counter() - start
            ok = elapsed < limit
            status = "PASS" if ok else "FAIL"
            note = f"; {detail}" if detail else ""
            RESULTS[number] = (number, f"[{number}] {status} {title} ({elapsed:.2f}s < {limit:g}s){note}")
            assert ok, f"criterion {number} took {elapsed:.2f}s, limit {limit:g}s"

        return run

    return wrap


def _f21():
    return from_table(json.loads((DATA / "f21.json").read_text())["table"], name="F21")


def _zoo():
    return [cyclic(n) for n in range(1, 7)] + [dihedral(6), dihedral(8), symmetric(3)]


@criterion(1, "compact product matches dense product", 10.0)
def test_criterion_1_compact_dense():
    rng = random.Random(1)
    zoo = _zoo()
    worst = 0.0
    for field in (F2, F5, Q, C):
        for _ in range(300):
            gs = [rng.choice(zoo) for _ in range(rng.choice((1, 2, 3)))]
            a = JoinElement.random(gs, field, rng)
            b = JoinElement.random(gs, field, rng)
            lhs, rhs = expand(a * b), expand(a) @ expand(b)
            if field.is_exact:
                assert lhs == rhs
            else:
                err = lhs.max_abs_diff(rhs)
                worst = max(worst, err)
                assert err < 1e-9
    return f"1200 pairs, worst complex residual {worst:.1e}"


@criterion(2, "unit exhaustion over F2 [Z/2, Z/2]", 1.0)
def test_criterion_2_units():
    gs = [Z2, Z2]
    elems = list(enumerate_elements(gs, F2))
    assert len(elems) == 64
    units = 0
    for a in elems:
        det, _ = det_inverse(expand(a))
        assert is_unit(a) == (det != 0)
        units += is_unit(a)
    assert units == 16
    return "16 of 64 units; criterion agrees with determinant"


@criterion(3, "radical of F2 [Z/2, Z/2]", 5.0)
def test_criterion_3_radical():
    gs = [Z2, Z2]
    basis = radical_basis_join(gs, F2)
    assert len(basis) == 4
    rad = set()
    for bits in itertools.product((0, 1), repeat=4):
        x = JoinElement.zero(gs, F2)
        for bit, b in zip(bits, basis):
            if bit:
                x = x + b
        rad.add(x)
    assert len(rad) == 16
    one = JoinElement.identity(gs, F2)
    ys = list(enumerate_elements(gs, F2))
    for x in rad:
        for y in ys:
            assert is_unit(one + x * y)
    quot = join_algebra(gs, F2).quotient([b.coords() for b in basis])
    assert quot.dim == 2
    return "dim 4, 1024 quantifier checks, quotient dim 2"


@criterion(4, "center dimensions", 5.0)
def test_criterion_4_center():
    rng = random.Random(4)
    cases = [([Z2, Z3], 4), ([dihedral(6), Z2], 4), ([symmetric(3)], 3), ([symmetric(4), Z2], 6)]
    for gs, expected in cases:
        basis = center_basis(gs, F5)
        assert len(basis) == expected
        for _ in range(100):
            a = JoinElement.random(gs, F5, rng)
            for z in basis:
                assert z * a == a * z
    return "4, 4, 3, 6"


@criterion(5, "irreducible counts in characteristic 0", 5.0)
def test_criterion_5_irreducibles():
    assert irreducible_count([Z2, Z3], 0) == 4
    assert irreducible_count([dihedral(6), Z2], 0) == 4
    # c(trivial) + c(F21) - d + 1 = 1 + 5 - 2 + 1
    assert irreducible_count([Z1, _f21()], 0) == 5
    return "4, 4, 5"


@criterion(6, "DFT diagonalization and spectra", 10.0)
def test_criterion_6_dft():
    k6 = joined_union([[0, 1], [1, 0]], [[0, 1, 1], [0, 1, 1]])
    k23 = joined_union([[0, 1], [1, 0]], [[0, 0], [0, 0, 0]])
    worst = 0.0
    for a in (k6, k23):
        dense = np.linalg.eigvals(expand(a).to_numpy())
        ours = np.array(spectrum(a))
        assert _multiset_distance(ours, dense) < 1e-7
        worst = max(worst, diagonalize(a).residual)
    assert worst < 1e-9
    assert _multiset_distance(np.array(spectrum(k6)), np.array([5] + [-1] * 5)) < 1e-7
    s6 = math.sqrt(6)
    assert _multiset_distance(np.array(spectrum(k23)), np.array([s6, -s6, 0, 0, 0])) < 1e-7
    rng = random.Random(6)
    hom = 0.0
    for orders in ((2, 3), (3, 4)):
        gs = [cyclic(k) for k in orders]
        for _ in range(50):
            a = JoinElement.random(gs, C, rng)
            b = JoinElement.random(gs, C, rng)
            sa, ra = wedderburn_map(a)
            sb, rb = wedderburn_map(b)
            sab, rab = wedderburn_map(a * b)
            err = max(abs(x - y * z) for x, y, z in zip(sab, sa, sb))
            err = max(err, rab.max_abs_diff(ra @ rb))
            hom = max(hom, err / max(1.0, max(abs(x) for x in sab)))
    assert hom < 1e-9
    return f"conjugation residual {worst:.1e}, homomorphism residual {hom:.1e}"


def _multiset_distance(xs, ys) -> float:
    """Largest gap under the optimal matching, computed greedily on a tiny set."""
    xs, left = list(xs), list(ys)
    assert len(xs) == len(left)
    worst = 0.0
    for x in xs:
        j = min(range(len(left)), key=lambda i: abs(left[i] - x))
        worst = max(worst, abs(left.pop(j) - x))
    return worst


@criterion(7, "Frobenius criterion", 2.0)
def test_criterion_7_frobenius():
    rng = random.Random(7)
    gs = [Z2, Z3]
    res = is_frobenius(gs, F2)
    assert not res.is_frobenius
    lam = [F2.random(rng) for _ in range(join_dimension(gs))]
    if not any(lam):
        lam[0] = 1
    coeffs, v = res.witness(lam)
    assert any(coeffs) and not v.is_zero()
    assert sum(x * y for x, y in zip(lam, v.coords())) % 2 == 0
    for _ in range(100):
        a = JoinElement.random(gs, F2, rng)
        assert a * v == v.scale(a.blocks[res.row].augment())
    assert is_frobenius(gs, C).is_frobenius
    return "F2 witness verified on 100 elements; C is Frobenius"


@criterion(8, "modular unit structure over F2 [Z/2, Z/2]", 2.0)
def test_criterion_8_unit_structure():
    gs = [Z2, Z2]
    units = [a for a in enumerate_elements(gs, F2) if is_unit(a)]
    assert len(units) == 16
    parts = {}
    for u in units:
        s = modular_unit_structure(u)
        assert s.reassemble(gs, F2) == u
        parts[(s.torus, s.offpart, s.principal)] = u
    assert len(parts) == 16
    # every torus x offpart x principal triple occurs and gives a distinct unit
    principal = [GroupRingElement.from_values(Z2, F2, c) for c in ((1, 0), (0, 1))]
    combos = set()
    for a01, a10, p0, p1 in itertools.product((0, 1), (0, 1), principal, principal):
        key = ((1, 1), ((0, a01), (a10, 0)), (p0, p1))
        assert key in parts
        combos.add(parts[key])
    assert len(combos) == 16
    for a, b in itertools.product(units, repeat=2):
        lab, la, lb = log_map(a * b), log_map(a), log_map(b)
        assert lab == tuple(tuple((x + y) % 2 for x, y in zip(r, s)) for r, s in zip(la, lb))
    return "16 units reassembled bijectively, 256 log checks"


ALL = [
    test_criterion_1_compact_dense,
    test_criterion_2_units,
    test_criterion_3_radical,
    test_criterion_4_center,
    test_criterion_5_irreducibles,
    test_criterion_6_dft,
    test_criterion_7_frobenius,
    test_criterion_8_unit_structure,
]


if __name__ == "__main__":
    failed = 0
    for fn in ALL:
        try:
            fn()
        except Exception:
            failed += 1
    for _, line in sorted(RESULTS.values()):
        print(line)
    raise SystemExit(1 if failed else 0)
