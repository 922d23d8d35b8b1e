"""Shared fixtures: cached corpus objects and seeded random instances.

Random algebras are produced as compiled presentations (associativity by
construction), random modules as shifts/quotients of regular modules,
and random nilpotent superideals as spans of non-unit elements.  All
sampling is driven by explicit seeds so failures replay exactly.
"""

import random
from fractions import Fraction

import pytest

from superdim.algebra import compile_presentation, superideal_span
from superdim.corpus import build_c1, build_c2, corpus_report
from superdim.exactlin import QQ, PrimeField
from superdim.smodule import parity_shift, product_span, quotient, regular_module, submodule
from superdim.superpoly import (
    EVEN,
    ODD,
    SUPERCOMMUTATIVE,
    GeneratorSpec,
    SuperPolynomial,
)
from superdim.algebra import Presentation


@pytest.fixture(scope="session")
def c1():
    return build_c1()


@pytest.fixture(scope="session")
def c2():
    return build_c2()


@pytest.fixture(scope="session")
def c1_report():
    return corpus_report("c1")


@pytest.fixture(scope="session")
def c2_report():
    return corpus_report("c2")


_GEN_NAMES = ("a", "b", "c", "d")


def random_presentation(rng, max_gens=3, max_cap=3, field=None):
    """A small random supercommutative presentation that always compiles."""
    field = field or QQ
    ngens = rng.randint(1, max_gens)
    gens = tuple(
        GeneratorSpec(_GEN_NAMES[i], rng.choice((EVEN, ODD))) for i in range(ngens)
    )
    cap = rng.randint(1, max_cap)
    pres0 = Presentation(SUPERCOMMUTATIVE, gens, [], cap, field, "random")
    monos = []
    for deg in range(2, cap + 1):
        monos.extend(
            m
            for m in _monomials_of_degree(gens, deg)
            if m is not None
        )
    relations = []
    for m in monos:
        if rng.random() < 0.3:
            coeff = field.of(Fraction(rng.randint(1, 3)))
            poly = SuperPolynomial(SUPERCOMMUTATIVE, gens, field, {m: coeff})
            other = rng.choice(monos)
            if other != m and rng.random() < 0.5:
                q = SuperPolynomial(
                    SUPERCOMMUTATIVE, gens, field, {other: field.of(rng.randint(1, 2))}
                )
                if (
                    q.degree() == poly.degree()
                    and q.parity() == poly.parity()
                ):
                    poly = poly - q
            if not poly.is_zero():
                relations.append(poly)
    return Presentation(SUPERCOMMUTATIVE, gens, relations, cap, field, "random")


def _monomials_of_degree(gens, deg):
    n = len(gens)
    out = []

    def rec(i, left, exps):
        if i == n:
            if left == 0:
                out.append(tuple(exps))
            return
        top = 1 if gens[i].parity == ODD else left
        for e in range(min(top, left) + 1):
            rec(i + 1, left - e, exps + [e])

    rec(0, deg, [])
    return out


def random_algebra(rng, max_gens=3, max_cap=3, max_dim=None, field=None):
    """Compile random presentations until the dimension bound is met."""
    while True:
        A = compile_presentation(random_presentation(rng, max_gens, max_cap, field))
        if max_dim is None or A.dim <= max_dim:
            return A


def random_module(rng, A):
    """The regular module, possibly parity-shifted, possibly quotiented."""
    M = regular_module(A)
    if rng.random() < 0.3:
        M = parity_shift(M)
    if rng.random() < 0.4 and A.dim > 1:
        picks = [i for i in range(A.dim) if i != A.unit_index and rng.random() < 0.4]
        if picks:
            S = product_span(M, [A.basis_element(i) for i in picks])
            Q = quotient(M, S)
            if Q.dim > 0:
                return Q
    return M


def random_nilpotent_ideal(rng, A):
    """Span of random non-unit elements: nilpotent in a capped algebra."""
    elems = []
    for i in range(A.dim):
        if i == A.unit_index:
            continue
        if rng.random() < 0.5:
            elems.append(A.basis_element(i))
    if not elems and A.dim > 1:
        pick = rng.choice([i for i in range(A.dim) if i != A.unit_index])
        elems.append(A.basis_element(pick))
    return superideal_span(A, elems)


def rng_for(name):
    """Deterministic per-test generator; the seed is the test's name."""
    return random.Random(name)
