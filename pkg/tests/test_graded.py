"""Associated graded and bigraded structures of superideal filtrations."""

import pytest

from superdim.algebra import (
    AlgebraError,
    Presentation,
    compile_presentation,
    is_supercommutative,
    odd_radical,
    superideal_span,
    table_is_associative,
)
from superdim.exactlin import QQ
from superdim.graded import (
    bgr,
    bgr_module,
    bgr_to_gr_surjective,
    class_in_degree,
    gr,
    gr_module,
    ideal_powers,
    verify_graded_comparison,
)
from superdim.smodule import check_module, regular_module
from superdim.superpoly import ASSOCIATIVE, EVEN, GeneratorSpec

from conftest import random_algebra, random_module, random_nilpotent_ideal, rng_for
from test_algebra import grassmann


class TestIdealPowers:
    def test_grassmann_odd_radical_powers(self):
        A = grassmann(2)
        assert [S.dim for S in ideal_powers(A, odd_radical(A))] == [4, 3, 1]

    def test_rejects_non_ideal(self):
        A = grassmann(2)
        from superdim.exactlin import Subspace

        S = Subspace(A.parities, A.field)
        S.insert(A.generator_element("z1"))
        with pytest.raises(AlgebraError):
            ideal_powers(A, S)

    def test_rejects_non_nilpotent(self):
        A = grassmann(2)
        I = superideal_span(A, [A.unit_element()])
        with pytest.raises(AlgebraError):
            ideal_powers(A, I)


class TestGr:
    def test_grassmann_components(self):
        A = grassmann(2)
        G = gr(A, odd_radical(A))
        assert G.component_dims() == {0: 1, 1: 2, 2: 1}
        assert G.algebra.dim == A.dim
        assert table_is_associative(G.algebra)
        assert is_supercommutative(G.algebra)

    def test_smaller_ideal(self):
        A = grassmann(2)
        G = gr(A, superideal_span(A, [A.generator_element("z1")]))
        assert G.component_dims() == {0: 2, 1: 2}

    def test_dimension_conservation_random(self):
        rng = rng_for("test_gr_dimension_conservation_random")
        for _ in range(10):
            A = random_algebra(rng, max_dim=12)
            I = random_nilpotent_ideal(rng, A)
            G = gr(A, I)
            assert sum(G.component_dims().values()) == A.dim
            assert table_is_associative(G.algebra)

    def test_class_in_degree(self):
        A = grassmann(2)
        G = gr(A, odd_radical(A))
        z1 = A.generator_element("z1")
        z12 = A.mul(z1, A.generator_element("z2"))
        assert class_in_degree(G, z1, 1) != {}
        # z1*z2 sits one stage deeper, so its degree-1 class vanishes
        assert class_in_degree(G, z12, 1) == {}


class TestGrModule:
    def test_module_axioms_and_conservation(self):
        rng = rng_for("test_gr_module_axioms_and_conservation")
        for _ in range(8):
            A = random_algebra(rng, max_dim=12)
            M = random_module(rng, A)
            I = random_nilpotent_ideal(rng, A)
            GM = gr_module(M, I)
            assert sum(GM.component_dims().values()) == M.dim
            assert check_module(GM.module) == []

    def test_grassmann_regular(self):
        A = grassmann(2)
        GM = gr_module(regular_module(A), odd_radical(A))
        assert GM.component_dims() == {0: 1, 1: 2, 2: 1}


class TestBgr:
    def test_grassmann_lattice_components(self):
        # z1*z2 lies in both I_0 A and I_1^2 A, so it is counted at (1,0)
        # and at (0,2): the bigraded pieces may overlap and only surject
        # onto the graded ones
        A = grassmann(2)
        I = odd_radical(A)
        B = bgr(A, I)
        assert B.component_dims() == {(0, 0): 1, (0, 1): 2, (0, 2): 1, (1, 0): 1}
        assert sum(B.component_dims().values()) == 5
        assert bgr_to_gr_surjective(B, gr(A, I))

    def test_surjectivity_random(self):
        rng = rng_for("test_bgr_surjectivity_random")
        for _ in range(8):
            A = random_algebra(rng, max_dim=12)
            I = random_nilpotent_ideal(rng, A)
            assert bgr_to_gr_surjective(bgr(A, I), gr(A, I))

    def test_bgr_module_matches_algebra_on_regular(self):
        A = grassmann(2)
        I = odd_radical(A)
        BM = bgr_module(regular_module(A), I, bigraded_algebra=bgr(A, I))
        assert BM.component_dims() == {(0, 0): 1, (0, 1): 2, (0, 2): 1, (1, 0): 1}

    def test_rejects_associative_flavor(self):
        pres = Presentation(
            ASSOCIATIVE, (GeneratorSpec("x", EVEN),), [], 2, QQ, "free"
        )
        A = compile_presentation(pres)
        with pytest.raises(AlgebraError):
            bgr(A, superideal_span(A, [A.generator_element("x")]))


class TestComparison:
    def test_odd_radical_gives_equality(self):
        A = grassmann(3)
        out = verify_graded_comparison(regular_module(A), odd_radical(A))
        assert out["ok"]
        ids = [c["id"] for c in out["clauses"]]
        assert "equality-at-odd-radical" in ids
        assert out["sdim"] == out["sdim_graded"] == {"even": 0, "odd": 3}

    def test_random_comparisons_hold(self):
        rng = rng_for("test_random_comparisons_hold")
        for _ in range(10):
            A = random_algebra(rng, max_dim=12)
            M = random_module(rng, A)
            I = random_nilpotent_ideal(rng, A)
            out = verify_graded_comparison(M, I)
            assert out["ok"], out
