"""Presentation compilation, superideals and quotients."""

from fractions import Fraction

import pytest

from superdim.algebra import (
    AlgebraError,
    FiniteSuperAlgebra,
    Presentation,
    compile_presentation,
    is_supercommutative,
    odd_power_span,
    odd_radical,
    quotient_algebra,
    superideal_span,
    table_is_associative,
    table_respects_unit,
)
from superdim.exactlin import QQ, PrimeField
from superdim.superpoly import (
    ASSOCIATIVE,
    EVEN,
    ODD,
    SUPERCOMMUTATIVE,
    GeneratorSpec,
    SuperPolynomial,
)

from conftest import random_algebra, random_nilpotent_ideal, rng_for
from oracles import ext_chain_dims, ext_dims_by_degree, ext_mul


def grassmann(s, field=None):
    gens = tuple(GeneratorSpec("z%d" % (i + 1), ODD) for i in range(s))
    pres = Presentation(SUPERCOMMUTATIVE, gens, [], s, field or QQ, "grassmann%d" % s)
    return compile_presentation(pres)


class TestPresentationValidation:
    def test_duplicate_generator(self):
        gens = (GeneratorSpec("x", EVEN), GeneratorSpec("x", ODD))
        with pytest.raises(AlgebraError):
            Presentation(SUPERCOMMUTATIVE, gens, [], 2, QQ)

    def test_bad_flavor(self):
        with pytest.raises(AlgebraError):
            Presentation("weird", (GeneratorSpec("x", EVEN),), [], 2, QQ)

    def test_negative_cap(self):
        with pytest.raises(AlgebraError):
            Presentation(SUPERCOMMUTATIVE, (GeneratorSpec("x", EVEN),), [], -1, QQ)

    def test_zero_relation(self):
        gens = (GeneratorSpec("y", ODD),)
        zero = SuperPolynomial.zero(SUPERCOMMUTATIVE, gens, QQ)
        with pytest.raises(AlgebraError):
            Presentation(SUPERCOMMUTATIVE, gens, [zero], 2, QQ)

    def test_constant_relation(self):
        gens = (GeneratorSpec("x", EVEN),)
        one = SuperPolynomial.one(SUPERCOMMUTATIVE, gens, QQ)
        with pytest.raises(AlgebraError):
            Presentation(SUPERCOMMUTATIVE, gens, [one], 2, QQ)

    def test_inhomogeneous_relation(self):
        gens = (GeneratorSpec("x", EVEN),)
        x = SuperPolynomial.generator(0, SUPERCOMMUTATIVE, gens, QQ)
        with pytest.raises(AlgebraError):
            Presentation(SUPERCOMMUTATIVE, gens, [x * x - x], 3, QQ)

    def test_relation_over_cap(self):
        gens = (GeneratorSpec("x", EVEN),)
        x = SuperPolynomial.generator(0, SUPERCOMMUTATIVE, gens, QQ)
        with pytest.raises(AlgebraError):
            Presentation(SUPERCOMMUTATIVE, gens, [x * x * x], 2, QQ)

    def test_compile_needs_cap(self):
        gens = (GeneratorSpec("x", EVEN),)
        pres = Presentation(SUPERCOMMUTATIVE, gens, [], None, QQ)
        with pytest.raises(AlgebraError):
            compile_presentation(pres)


class TestGrassmannCompilation:
    def test_dimension_and_degrees(self):
        for s in (1, 2, 3, 4):
            A = grassmann(s)
            assert A.dim == 2**s
            by_deg = {}
            for i in range(A.dim):
                by_deg[len(A.basis_word(i))] = by_deg.get(len(A.basis_word(i)), 0) + 1
            assert [by_deg.get(t, 0) for t in range(s + 1)] == ext_dims_by_degree(s)

    def test_products_match_exterior_oracle(self):
        A = grassmann(3)
        # basis positions keyed by the generator subset of their word
        by_subset = {frozenset(A.basis_word(i)): i for i in range(A.dim)}
        for S, i in by_subset.items():
            for T, j in by_subset.items():
                got = A.mul_basis(i, j)
                want = ext_mul(S, T)
                if want is None:
                    assert got == {}
                else:
                    sign, U = want
                    assert got == {by_subset[U]: QQ.of(sign)}

    def test_supercommutative(self):
        assert is_supercommutative(grassmann(3))

    def test_unit_and_parity(self):
        A = grassmann(2)
        u = A.unit_element()
        z1 = A.generator_element("z1")
        assert A.mul(u, z1) == z1
        assert A.element_parity(z1) == ODD
        assert A.element_parity(u) == EVEN
        assert A.element_parity(A.mul(z1, A.generator_element("z2"))) == EVEN

    def test_unknown_generator(self):
        with pytest.raises(AlgebraError):
            grassmann(2).generator_element("w")


class TestRandomCompiledAlgebras:
    def test_tables_associative_and_unital(self):
        rng = rng_for("test_tables_associative_and_unital")
        for _ in range(12):
            A = random_algebra(rng, max_dim=12)
            assert table_is_associative(A)
            assert table_respects_unit(A)
            assert is_supercommutative(A)

    def test_power_of_element(self):
        rng = rng_for("test_power_of_element")
        for _ in range(6):
            A = random_algebra(rng, max_dim=10)
            v = {}
            for i in range(A.dim):
                if rng.random() < 0.5:
                    v[i] = A.field.of(rng.randint(1, 3))
            p3 = A.power_of_element(v, 3)
            assert p3 == A.mul(A.mul(v, v), v)
            assert A.power_of_element(v, 0) == A.unit_element()


class TestSuperideals:
    def test_span_is_closed_under_multiplication(self):
        rng = rng_for("test_span_is_closed_under_multiplication")
        for _ in range(10):
            A = random_algebra(rng, max_dim=12)
            I = random_nilpotent_ideal(rng, A)
            for row in I.basis():
                for i in range(A.dim):
                    b = A.basis_element(i)
                    assert I.contains(A.mul(b, row))
                    assert I.contains(A.mul(row, b))

    def test_inhomogeneous_generator_contributes_components(self):
        A = grassmann(2)
        z1 = A.generator_element("z1")
        v = A.mul(z1, A.generator_element("z2"))  # even
        for i, c in z1.items():
            v[i] = v.get(i, A.field.zero) + c  # mixed parity element
        I = superideal_span(A, [v])
        assert I.contains(z1)

    def test_odd_radical_of_grassmann(self):
        for s in (1, 2, 3):
            A = grassmann(s)
            R1 = odd_radical(A)
            assert R1.dim == 2**s - 1
            assert not R1.contains(A.unit_element())

    def test_odd_power_span_chain(self):
        # dim of the span of l-fold odd products in the exterior algebra
        for s in (2, 3, 4):
            A = grassmann(s)
            want = ext_chain_dims(s)
            got = []
            l = 0
            while True:
                S = odd_power_span(A, l)
                if S.is_zero():
                    break
                got.append(S.dim)
                l += 1
            assert got == want

    def test_odd_power_span_negative(self):
        with pytest.raises(AlgebraError):
            odd_power_span(grassmann(1), -1)


class TestQuotientAlgebra:
    def test_quotient_by_odd_radical(self):
        A = grassmann(3)
        Q = quotient_algebra(A, odd_radical(A))
        assert Q.dim == 1
        assert table_is_associative(Q)
        assert table_respects_unit(Q)

    def test_quotient_dim_and_structure(self):
        rng = rng_for("test_quotient_dim_and_structure")
        for _ in range(8):
            A = random_algebra(rng, max_dim=12)
            I = random_nilpotent_ideal(rng, A)
            if I.contains(A.unit_element()):
                continue
            Q = quotient_algebra(A, I)
            assert Q.dim == A.dim - I.dim
            assert table_is_associative(Q)
            assert table_respects_unit(Q)

    def test_rejects_non_ideal(self):
        A = grassmann(2)
        from superdim.exactlin import Subspace

        S = Subspace(A.parities, A.field)
        S.insert(A.generator_element("z1"))  # not closed under * z2
        with pytest.raises(AlgebraError):
            quotient_algebra(A, S)

    def test_rejects_unit_in_ideal(self):
        A = grassmann(2)
        I = superideal_span(A, [A.unit_element()])
        with pytest.raises(AlgebraError):
            quotient_algebra(A, I)


class TestTableKind:
    def test_dual_numbers_table(self):
        # K[e]/(e^2) assembled directly as a multiplication table
        F = QQ
        table = {(0, 0): {0: F.one}, (0, 1): {1: F.one}, (1, 0): {1: F.one}}
        A = FiniteSuperAlgebra.from_table(
            ["1", "e"], [EVEN, EVEN], F, table, 0, name="dual"
        )
        assert table_is_associative(A)
        e = A.basis_element(1)
        assert A.mul(e, e) == {}

    def test_odd_unit_rejected(self):
        with pytest.raises(AlgebraError):
            FiniteSuperAlgebra.from_table(["1"], [ODD], QQ, {(0, 0): {0: QQ.one}}, 0)
