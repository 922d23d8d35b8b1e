from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superdim.exactlin import (
    Echelon,
    FpElement,
    Matrix,
    PrimeField,
    QQ,
    Subspace,
    field_from_name,
    in_span,
    kernel_basis,
    kernel_of_constraints,
    rank,
    rref,
    solve,
    solve_sparse,
    vec_add_scaled,
    vec_dot,
)

from oracles import naive_rank

scalars = st.integers(min_value=-6, max_value=6)


def dense(rows):
    return Matrix.from_rows([[Fraction(x) for x in r] for r in rows], QQ)


class TestFields:
    def test_field_from_name(self):
        assert field_from_name("q") is QQ
        assert field_from_name("F5").p == 5
        with pytest.raises(ValueError):
            field_from_name("F4")
        with pytest.raises(ValueError):
            field_from_name("zz")

    def test_fp_arithmetic(self):
        F = PrimeField(7)
        a = F.of(3)
        b = F.of(5)
        assert (a + b).val == 1
        assert (a * b).val == 1
        assert (a - b).val == 5
        assert (a / b).val == (3 * pow(5, 5, 7)) % 7
        assert (-a).val == 4
        assert not F.zero
        assert F.of(Fraction(1, 3)) == F.of(3).inverse()

    def test_fp_mixed_ints(self):
        F = PrimeField(5)
        assert F.of(2) + 4 == F.of(1)
        assert 3 * F.of(4) == F.of(2)
        assert 1 - F.of(3) == F.of(3)

    def test_rational_of(self):
        assert QQ.of(2) == Fraction(2)
        assert QQ.of(Fraction(1, 3)) == Fraction(1, 3)


class TestSparseVectors:
    def test_add_scaled_cancels(self):
        v = {0: Fraction(1), 2: Fraction(3)}
        vec_add_scaled(v, {0: Fraction(1), 1: Fraction(2)}, Fraction(-1))
        assert v == {1: Fraction(-2), 2: Fraction(3)}

    def test_dot_none_is_zero(self):
        assert vec_dot({0: Fraction(1)}, {1: Fraction(5)}) is None


class TestEchelonAndRank:
    @given(
        st.lists(
            st.lists(scalars, min_size=4, max_size=4), min_size=1, max_size=6
        )
    )
    @settings(max_examples=60, deadline=None)
    def test_rank_matches_naive(self, rows):
        m = dense(rows)
        assert rank(m) == naive_rank(rows)

    @given(
        st.lists(
            st.lists(scalars, min_size=3, max_size=3), min_size=1, max_size=5
        )
    )
    @settings(max_examples=60, deadline=None)
    def test_rank_nullity(self, rows):
        m = dense(rows)
        assert rank(m) + len(kernel_basis(m)) == m.ncols

    @given(
        st.lists(
            st.lists(scalars, min_size=3, max_size=3), min_size=1, max_size=5
        )
    )
    @settings(max_examples=40, deadline=None)
    def test_kernel_vectors_annihilate(self, rows):
        m = dense(rows)
        for v in kernel_basis(m):
            assert not m.apply({i: x for i, x in enumerate(v) if x})

    def test_echelon_coords_reconstruct(self):
        e = Echelon(QQ)
        assert e.insert({0: Fraction(1), 1: Fraction(2)}) is not None
        assert e.insert({1: Fraction(1), 2: Fraction(1)}) is not None
        assert e.insert({0: Fraction(2), 1: Fraction(5), 2: Fraction(1)}) is None
        target = {0: Fraction(3), 1: Fraction(7), 2: Fraction(1)}
        coords = e.coords(target)
        rebuilt = {}
        for c, row in zip(coords, e.basis_rows()):
            vec_add_scaled(rebuilt, row, c)
        assert rebuilt == target
        assert e.coords({2: Fraction(1)}) is None

    def test_in_span(self):
        vs = [[Fraction(1), Fraction(0), Fraction(0)], [Fraction(0), Fraction(1), Fraction(0)]]
        assert in_span(vs, [Fraction(2), Fraction(-1), Fraction(0)])
        assert not in_span(vs, [Fraction(0), Fraction(0), Fraction(1)])


class TestSolvers:
    def test_solve_consistent(self):
        m = dense([[1, 2], [3, 4]])
        b = [Fraction(5), Fraction(11)]
        x = solve(m, list(b))
        assert x is not None
        image = m.apply({i: c for i, c in enumerate(x) if c})
        assert [image.get(i, Fraction(0)) for i in range(2)] == b

    def test_solve_inconsistent(self):
        m = dense([[1, 1], [2, 2]])
        assert solve(m, [Fraction(1), Fraction(3)]) is None

    @given(
        st.lists(st.lists(scalars, min_size=3, max_size=3), min_size=1, max_size=4),
        st.lists(scalars, min_size=3, max_size=3),
    )
    @settings(max_examples=40, deadline=None)
    def test_solve_sparse_substitutes(self, rows, xs):
        # build a consistent system from a known solution, then solve
        eqs = []
        for r in rows:
            lhs = {i: Fraction(c) for i, c in enumerate(r) if c}
            rhs = sum(Fraction(c) * x for c, x in zip(r, xs))
            eqs.append((lhs, rhs))
        sol = solve_sparse(3, eqs, QQ)
        assert sol is not None
        for lhs, rhs in eqs:
            assert sum(sol[i] * c for i, c in lhs.items()) == rhs

    def test_kernel_of_constraints(self):
        # x0 + x1 = 0 over F3
        F = PrimeField(3)
        basis = kernel_of_constraints(3, [{0: F.one, 1: F.one}], F)
        assert len(basis) == 2
        for v in basis:
            s = (v.get(0, F.zero) + v.get(1, F.zero))
            assert not s


class TestMatrix:
    def test_compose_apply_agree(self):
        a = dense([[1, 2], [0, 1]])
        b = dense([[1, 0], [3, 1]])
        v = {0: Fraction(1), 1: Fraction(1)}
        assert a.compose(b).apply(v) == a.apply(b.apply(v))

    def test_from_cols_sparse_roundtrip(self):
        cols = [{0: Fraction(1)}, {}, {1: Fraction(-2)}]
        m = Matrix.from_cols_sparse(2, cols, QQ)
        assert m.cols_sparse() == cols
        assert m.row(0) == [Fraction(1), Fraction(0), Fraction(0)]

    def test_rref_idempotent(self):
        m = dense([[2, 4], [1, 3]])
        r1, piv = rref(m)
        r2, piv2 = rref(r1)
        assert r1 == r2 and piv == piv2


class TestSubspace:
    def test_parity_split_dims(self):
        S = Subspace([0, 1, 1], QQ)
        S.insert({0: Fraction(1)})
        S.insert({1: Fraction(1), 2: Fraction(1)})
        assert S.dim == 2
        assert S.dims() == (1, 1)

    def test_mixed_parity_splits_into_components(self):
        # graded closure: a mixed vector contributes both its even
        # and odd parts, so the span stays parity-homogeneous
        S = Subspace([0, 1], QQ)
        assert S.insert({0: Fraction(1), 1: Fraction(1)})
        assert S.dim == 2
        assert S.contains({0: Fraction(1)})
        assert S.contains({1: Fraction(1)})

    def test_equality_is_span_equality(self):
        S = Subspace([0, 0], QQ)
        T = Subspace([0, 0], QQ)
        S.insert({0: Fraction(1), 1: Fraction(1)})
        S.insert({0: Fraction(1)})
        T.insert({1: Fraction(1)})
        T.insert({0: Fraction(1), 1: Fraction(2)})
        assert S == T

    def test_contains(self):
        S = Subspace([0, 0, 0], QQ)
        S.insert({0: Fraction(1), 1: Fraction(1)})
        assert S.contains({0: Fraction(2), 1: Fraction(2)})
        assert not S.contains({0: Fraction(1)})
