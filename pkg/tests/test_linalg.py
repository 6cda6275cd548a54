from __future__ import annotations

import cmath
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from joinring.fields import Field, FieldError
from joinring.linalg import (
    Matrix,
    charpoly,
    complex_eigenvalues,
    det_inverse,
    has_constant_row_sums,
    nullspace,
    rank_nullity,
    row_reduce,
)

Q, C, F2, F5 = Field.rationals(), Field.complex(), Field.prime(2), Field.prime(5)


def cofactor_det(rows):
    """Laplace expansion; slow but independent of elimination."""
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * a * cofactor_det(minor)
    return total


def multiset_close(xs, ys, tol):
    ys = list(ys)
    for x in xs:
        k = min(range(len(ys)), key=lambda i: abs(ys[i] - x))
        if abs(ys[k] - x) > tol:
            return False
        ys.pop(k)
    return not ys


class TestField:
    def test_parse_round_trip(self):
        for text in ("Fp:7", "Q", "C"):
            assert str(Field.parse(text)) == text

    @pytest.mark.parametrize("bad", ["Fp:4", "Fp:1", "R", "Fp:x", "Fp:2147483659"])
    def test_parse_rejects(self, bad):
        with pytest.raises(FieldError):
            Field.parse(bad)

    def test_characteristic(self):
        assert Field.prime(7).characteristic() == 7
        assert Q.characteristic() == 0 and C.characteristic() == 0

    def test_json_scalars(self):
        assert Q.to_json(Fraction(-3, 4)) == "-3/4"
        assert Q.from_json("-3/4") == Fraction(-3, 4)
        assert C.to_json(complex(-0.0, 1 / 3)) == [0.0, 0.333333333333]
        assert F5.from_json(7) == 2
        with pytest.raises(FieldError):
            F5.from_json("1/5")

    def test_large_prime_arithmetic(self):
        f = Field.prime(2147483647)
        a = f.from_int(-1)
        assert f.mul(a, a) == 1
        assert f.mul(f.inv(12345), 12345) == 1


class TestRankNullity:
    def test_identity(self):
        assert rank_nullity(Matrix.identity(Q, 3)) == (3, 0)

    def test_all_ones_f2(self):
        assert rank_nullity(Matrix.ones(F2, 2, 2)) == (1, 1)

    def test_complex_circulant(self):
        m = Matrix(C, [[1, -1], [-1, 1]])
        assert rank_nullity(m) == (1, 1)
        # oracle: the only 2x2 minor vanishes and a 1x1 minor does not
        assert abs(cofactor_det([[1, -1], [-1, 1]])) == 0

    def test_empty_raises(self):
        with pytest.raises(ValueError):
            rank_nullity(Matrix(Q, [], 0, 0))

    def test_complex_threshold_is_relative(self):
        big = Matrix(C, [[1e12, 0], [0, 1e-1]])
        assert rank_nullity(big) == (1, 1)
        small = Matrix(C, [[1e-6, 0], [0, 1e-7]])
        assert rank_nullity(small) == (2, 0)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10**6), st.sampled_from(["Fp:2", "Fp:5", "Q"]), st.integers(1, 6), st.integers(1, 6))
    def test_pivot_order_independent(self, seed, fspec, r, c):
        f = Field.parse(fspec)
        rng = random.Random(seed)
        m = Matrix(f, [[f.random(rng) if rng.random() < 0.6 else f.zero for _ in range(c)] for _ in range(r)])
        first, _, _ = row_reduce(m, "first")
        last, _, _ = row_reduce(m, "last")
        assert rank_nullity(m, "first") == rank_nullity(m, "last")
        assert first == last  # reduced row echelon form is unique

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 6))
    def test_rank_matches_numpy(self, seed, n):
        rng = random.Random(seed)
        rows = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n - 1)]
        rows.append([sum(r[j] for r in rows) for j in range(n)])
        m = Matrix.from_values(Q, rows)
        assert rank_nullity(m)[0] == np.linalg.matrix_rank(np.array(rows, dtype=float))


class TestDetInverse:
    def test_hadamard(self):
        det, inv = det_inverse(Matrix.from_values(Q, [[1, 1], [1, -1]]))
        assert det == -2
        assert inv == Matrix.from_values(Q, [["1/2", "1/2"], ["1/2", "-1/2"]])

    def test_singular(self):
        det, inv = det_inverse(Matrix.ones(Q, 2, 2))
        assert det == 0 and inv is None

    def test_join_determinant(self):
        rows = [[1, -1, 1, 1], [-1, 1, 1, 1], [1, 1, 1, -1], [1, 1, -1, 1]]
        assert cofactor_det(rows) == -16
        assert det_inverse(Matrix.from_values(Q, rows))[0] == -16

    def test_non_square(self):
        with pytest.raises(ValueError):
            det_inverse(Matrix.zeros(Q, 2, 3))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10**6), st.sampled_from(["Fp:2", "Fp:7", "Q", "C"]), st.integers(1, 6))
    def test_inverse_property(self, seed, fspec, n):
        f = Field.parse(fspec)
        rng = random.Random(seed)
        m = Matrix(f, [[f.random(rng) for _ in range(n)] for _ in range(n)])
        det, inv = det_inverse(m)
        if inv is None:
            assert f.is_zero(det, max(1.0, m.max_abs()) ** n)
            return
        assert (m @ inv).allclose(Matrix.identity(f, n), 1e-9)
        if f.kind == "Q":
            assert det == cofactor_det([list(r) for r in m.data])


class TestEigenvalues:
    def test_antidiagonal(self):
        ev = complex_eigenvalues(Matrix(C, [[0, 3], [2, 0]]))
        assert multiset_close(ev, [6**0.5, -(6**0.5)], 1e-9)

    def test_identity_double_root(self):
        assert multiset_close(complex_eigenvalues(Matrix.identity(C, 2)), [1, 1], 1e-9)

    def test_symmetric(self):
        assert multiset_close(complex_eigenvalues(Matrix(C, [[2, 3], [3, 2]])), [5, -1], 1e-9)

    def test_charpoly(self):
        assert charpoly(Matrix.from_values(Q, [[2, 3], [3, 2]])) == [1, -4, -5]

    def test_rejects_exact(self):
        with pytest.raises(ValueError):
            complex_eigenvalues(Matrix.identity(Q, 2))

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 10))
    def test_against_numpy(self, seed, n):
        rng = np.random.default_rng(seed)
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        ev = complex_eigenvalues(Matrix.from_numpy(a))
        assert multiset_close(ev, np.linalg.eigvals(a), 1e-8)

    def test_repeated_roots_of_unity(self):
        # J_4 has eigenvalues 4 and 0 (three times)
        ev = complex_eigenvalues(Matrix.ones(C, 4, 4))
        assert multiset_close(ev, [4, 0, 0, 0], 1e-9)
        w = cmath.exp(2j * cmath.pi / 3)
        perm = Matrix(C, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        assert multiset_close(complex_eigenvalues(perm), [1, w, w * w], 1e-9)


class TestRowSums:
    def test_all_ones(self):
        assert has_constant_row_sums(Matrix.ones(Q, 2, 3)) == 3

    def test_identity(self):
        assert has_constant_row_sums(Matrix.identity(Q, 2)) == 1

    def test_absent(self):
        assert has_constant_row_sums(Matrix.from_values(Q, [[1, 2], [3, 5]])) is None

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 5))
    def test_multiplicative(self, seed, n):
        rng = random.Random(seed)

        def semimagic():
            perms = [rng.sample(range(n), n) for _ in range(3)]
            w = [Fraction(rng.randint(-3, 3)) for _ in perms]
            return Matrix(Q, [[sum(wk for wk, p in zip(w, perms) if p[i] == j) for j in range(n)] for i in range(n)])

        a, b = semimagic(), semimagic()
        ra, rb = has_constant_row_sums(a), has_constant_row_sums(b)
        assert has_constant_row_sums(a @ b) == ra * rb


class TestMatrixJson:
    @pytest.mark.parametrize("f", [F5, Q, C])
    def test_round_trip(self, f):
        rng = random.Random(3)
        m = Matrix(f, [[f.random(rng) for _ in range(3)] for _ in range(2)])
        back = Matrix.from_json(m.to_json())
        assert back.shape == (2, 3)
        assert back.allclose(m, 1e-11)

    def test_shape(self):
        obj = Matrix.identity(Q, 2).to_json()
        assert obj == {"rows": 2, "cols": 2, "field": "Q", "entries": ["1/1", "0/1", "0/1", "1/1"]}


def test_nullspace_kills():
    m = Matrix.from_values(Q, [[1, 2, 3], [2, 4, 6]])
    for v in nullspace(m):
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in m.data)
    assert len(nullspace(m)) == 2
