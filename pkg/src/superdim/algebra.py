"""Finite-dimensional superalgebras from presentations or multiplication tables.

``compile_presentation`` takes generators, parity/degree-homogeneous
relations and a degree cap, enumerates all normal monomials up to the cap,
closes the relation span into the two-sided graded ideal (degree-truncated:
monomials beyond the cap are zero by fiat) and returns the quotient with
its monomial basis.  Every finite-dimensional superalgebra here is
automatically Artinian, which is what the dimension theory downstream
assumes.

A :class:`FiniteSuperAlgebra` is either monomial-kind (it remembers its
presentation and reduces products of monomials) or table-kind (an explicit
basis-by-basis product, used for square-zero extensions, associated graded
algebras and quotients).  Elements are sparse dicts {basis index: scalar}.
"""

from __future__ import annotations

from . import superpoly
from .exactlin import Echelon, Subspace
from .superpoly import (
    ASSOCIATIVE,
    EVEN,
    ODD,
    SUPERCOMMUTATIVE,
    GeneratorSpec,
    SuperPolynomial,
    monomial_bidegree,
    monomial_degree,
    monomial_name,
    monomial_parity,
    monomial_sort_key,
    monomial_word,
    mul_monomials,
)


class AlgebraError(ValueError):
    pass


class Presentation:
    """Flavor, generators, homogeneous relations, degree cap, base field."""

    def __init__(self, flavor, gens, relations, cap, field, name="algebra"):
        if flavor not in (SUPERCOMMUTATIVE, ASSOCIATIVE):
            raise AlgebraError("unknown flavor %r" % (flavor,))
        gens = tuple(gens)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise AlgebraError("duplicate generator names")
        for g in gens:
            if g.bidegree == (0, 0):
                raise AlgebraError("generator %s has degree 0" % g.name)
        if cap is not None and cap < 0:
            raise AlgebraError("cap must be nonnegative")
        for r in relations:
            if r.flavor != flavor or r.gens != gens:
                raise AlgebraError("relation from a different context")
            if r.is_zero():
                raise AlgebraError("zero relation")
            d = r.degree()
            if d is None:
                raise AlgebraError("relation not degree-homogeneous: %r" % (r,))
            if d == 0:
                raise AlgebraError("constant relation")
            if r.parity() is None:
                raise AlgebraError("relation not parity-homogeneous: %r" % (r,))
            if cap is not None and d > cap:
                raise AlgebraError("relation degree %d exceeds cap %d" % (d, cap))
        self.flavor = flavor
        self.gens = gens
        self.relations = list(relations)
        self.cap = cap
        self.field = field
        self.name = name

    def gen_index(self, name):
        for i, g in enumerate(self.gens):
            if g.name == name:
                return i
        raise AlgebraError("unknown generator %r" % (name,))

    def poly(self, terms):
        return SuperPolynomial(self.flavor, self.gens, self.field, terms)


def _enumerate_monomials(pres):
    """All normal monomial keys of total degree <= cap, degree-lex sorted."""
    gens, cap, flavor = pres.gens, pres.cap, pres.flavor
    out = []
    if flavor == SUPERCOMMUTATIVE:
        n = len(gens)
        exps = [0] * n

        def rec(i, deg):
            if i == n:
                out.append(tuple(exps))
                return
            g = gens[i]
            gdeg = g.bidegree[0] + g.bidegree[1]
            emax = 1 if g.parity == ODD else (cap - deg) // gdeg
            for e in range(min(emax, (cap - deg) // gdeg) + 1):
                exps[i] = e
                rec(i + 1, deg + e * gdeg)
            exps[i] = 0

        rec(0, 0)
    else:
        frontier = [()]
        out.append(())
        while frontier:
            new = []
            for w in frontier:
                d = monomial_degree(w, gens, flavor)
                for i, g in enumerate(gens):
                    gdeg = g.bidegree[0] + g.bidegree[1]
                    if d + gdeg <= cap:
                        new.append(w + (i,))
            out.extend(new)
            frontier = new
    out.sort(key=lambda m: monomial_sort_key(m, gens, flavor))
    return out


def compile_presentation(pres):
    """Quotient of the free (super)algebra by relations and the degree cap."""
    if pres.cap is None:
        raise AlgebraError("compilation needs a degree cap")
    gens, flavor, field, cap = pres.gens, pres.flavor, pres.field, pres.cap
    monomials = _enumerate_monomials(pres)
    index = {m: i for i, m in enumerate(monomials)}

    def poly_vec(p):
        v = {}
        for m, c in p.terms.items():
            if monomial_degree(m, gens, flavor) <= cap:
                v[index[m]] = c
        return v

    def mul_vec_by_gen(vec, gi, side):
        out = {}
        for mi, c in vec.items():
            m = monomials[mi]
            g = (gi,) if flavor == ASSOCIATIVE else tuple(
                1 if j == gi else 0 for j in range(len(gens))
            )
            sm = (
                mul_monomials(g, m, gens, flavor)
                if side == "left"
                else mul_monomials(m, g, gens, flavor)
            )
            if sm is None:
                continue
            sign, mm = sm
            if monomial_degree(mm, gens, flavor) > cap:
                continue
            c2 = -c if sign < 0 else c
            k = index[mm]
            val = out.get(k)
            val = c2 if val is None else val + c2
            if val:
                out[k] = val
            else:
                out.pop(k, None)
        return out

    # two-sided graded ideal closure; for the supercommutative flavor the
    # left side suffices because relations are parity-homogeneous
    sides = ("left",) if flavor == SUPERCOMMUTATIVE else ("left", "right")
    ideal = Echelon(field)
    queue = []
    for r in pres.relations:
        v = poly_vec(r)
        if ideal.insert(v) is not None:
            queue.append(v)
    while queue:
        v = queue.pop()
        for gi in range(len(gens)):
            for side in sides:
                w = mul_vec_by_gen(v, gi, side)
                if w and ideal.insert(w) is not None:
                    queue.append(w)

    pivots = set(ideal.rows)
    if index[monomials[0]] in pivots and monomial_degree(
        monomials[0], gens, flavor
    ) == 0:
        raise AlgebraError("the unit lies in the ideal; the quotient is zero")
    basis_monos = [m for i, m in enumerate(monomials) if i not in pivots]
    A = FiniteSuperAlgebra.__new__(FiniteSuperAlgebra)
    A.kind = "monomial"
    A.field = field
    A.name = pres.name
    A.presentation = pres
    A.cap = cap
    A._monomials = monomials
    A._mono_index = index
    A._ideal = ideal
    A._basis_monos = basis_monos
    A._mono_to_pos = {index[m]: p for p, m in enumerate(basis_monos)}
    A.dim = len(basis_monos)
    A.labels = [monomial_name(m, gens, flavor) for m in basis_monos]
    A.parities = [monomial_parity(m, gens, flavor) for m in basis_monos]
    A.bidegrees = [monomial_bidegree(m, gens, flavor) for m in basis_monos]
    A.degrees = [k + l for k, l in A.bidegrees]
    A.unit_index = 0  # the empty monomial sorts first and is not in the ideal
    assert A.degrees[0] == 0
    A._table = {}
    A._odd_module_generators = None
    A._generators = None
    return A


class FiniteSuperAlgebra:
    """A finite-dimensional superalgebra with an explicit basis.

    Monomial-kind instances come out of :func:`compile_presentation`;
    table-kind instances are built from an explicit basis product via
    :meth:`from_table`.  Both expose the same element interface.
    """

    @classmethod
    def from_table(
        cls,
        labels,
        parities,
        field,
        table,
        unit_index,
        name="algebra",
        odd_module_generators=None,
        bidegrees=None,
        degrees=None,
    ):
        A = cls.__new__(cls)
        A.kind = "table"
        A.field = field
        A.name = name
        A.presentation = None
        A.cap = None
        A.dim = len(labels)
        A.labels = list(labels)
        A.parities = list(parities)
        A.bidegrees = bidegrees
        A.degrees = degrees
        A.unit_index = unit_index
        A._table = {k: {i: c for i, c in v.items() if c} for k, v in table.items()}
        A._odd_module_generators = odd_module_generators
        A._generators = None
        if A.parities[unit_index] != EVEN:
            raise AlgebraError("unit must be even")
        return A

    # -- element plumbing ---------------------------------------------------

    def unit_element(self):
        return {self.unit_index: self.field.one}

    def basis_element(self, i):
        return {i: self.field.one}

    def element_parity(self, vec):
        ps = {self.parities[i] for i, c in vec.items() if c}
        if len(ps) != 1:
            return None
        return ps.pop()

    def mul_basis(self, i, j):
        key = (i, j)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        if self.kind == "table":
            return {}
        pres = self.presentation
        sm = mul_monomials(
            self._basis_monos[i], self._basis_monos[j], pres.gens, pres.flavor
        )
        if sm is None:
            out = {}
        else:
            sign, m = sm
            if monomial_degree(m, pres.gens, pres.flavor) > self.cap:
                out = {}
            else:
                out = self._reduce_mono_vec({self._mono_index[m]: self.field.one})
                if sign < 0:
                    out = {k: -c for k, c in out.items()}
        self._table[key] = out
        return out

    def mul(self, u, v):
        out = {}
        for i, a in u.items():
            if not a:
                continue
            for j, b in v.items():
                if not b:
                    continue
                coeff = a * b
                for k, c in self.mul_basis(i, j).items():
                    val = out.get(k)
                    val = coeff * c if val is None else val + coeff * c
                    if val:
                        out[k] = val
                    else:
                        out.pop(k, None)
        return out

    def power_of_element(self, vec, n):
        out = self.unit_element()
        for _ in range(n):
            out = self.mul(out, vec)
        return out

    def _reduce_mono_vec(self, vec):
        res = self._ideal.reduce(vec)
        return {self._mono_to_pos[i]: c for i, c in res.items()}

    def reduce_poly(self, p):
        """Image of a SuperPolynomial in the algebra, as an element vec."""
        if self.kind != "monomial":
            raise AlgebraError("reduce_poly needs a monomial-kind algebra")
        pres = self.presentation
        if p.flavor != pres.flavor or p.gens != pres.gens:
            raise AlgebraError("polynomial from a different context")
        vec = {}
        for m, c in p.terms.items():
            if monomial_degree(m, pres.gens, pres.flavor) <= self.cap:
                vec[self._mono_index[m]] = c
        return self._reduce_mono_vec(vec)

    def basis_word(self, i):
        """Canonical generator word of a basis monomial (monomial kind)."""
        pres = self.presentation
        return monomial_word(self._basis_monos[i], pres.gens, pres.flavor)

    # -- generators ---------------------------------------------------------

    @property
    def generators(self):
        """(label, parity, element) triples generating the algebra.

        Monomial kind: the presentation's generators.  Table kind: the
        whole basis.
        """
        if self._generators is None:
            if self.kind == "monomial":
                pres = self.presentation
                gs = []
                for gi, g in enumerate(pres.gens):
                    p = SuperPolynomial.generator(
                        gi, pres.flavor, pres.gens, pres.field
                    )
                    gs.append((g.name, g.parity, self.reduce_poly(p)))
                self._generators = gs
            else:
                self._generators = [
                    (self.labels[i], self.parities[i], self.basis_element(i))
                    for i in range(self.dim)
                ]
        return self._generators

    def generator_element(self, name):
        for label, _parity, vec in self.generators:
            if label == name:
                return dict(vec)
        raise AlgebraError("unknown generator %r" % (name,))

    def odd_module_generators(self):
        """Default generating set of A_1 as an A_0-module.

        Monomial kind: the odd presentation generators (any odd monomial
        factors as an even monomial times one of them).  Table kind: a
        designated list if one was provided, otherwise all odd basis
        elements.
        """
        if self._odd_module_generators is not None:
            return list(self._odd_module_generators)
        if self.kind == "monomial":
            return [
                (label, vec)
                for label, parity, vec in self.generators
                if parity == ODD and vec
            ]
        return [
            (self.labels[i], self.basis_element(i))
            for i in range(self.dim)
            if self.parities[i] == ODD
        ]

    # -- structure ----------------------------------------------------------

    def components(self):
        """Basis positions grouped by (bidegree, parity); None bidegrees
        group under the key (None, parity)."""
        groups = {}
        for i in range(self.dim):
            bd = self.bidegrees[i] if self.bidegrees is not None else None
            groups.setdefault((bd, self.parities[i]), []).append(i)
        return groups

    def full_subspace(self):
        S = Subspace(self.parities, self.field)
        for i in range(self.dim):
            S.insert(self.basis_element(i))
        return S

    def element_name(self, vec):
        if not vec:
            return "0"
        parts = []
        for i in sorted(vec):
            c = vec[i]
            parts.append(
                "%s" % (c,) if self.labels[i] == "1" else "%s*%s" % (c, self.labels[i])
            )
        return " + ".join(parts)

    def __repr__(self):
        return "FiniteSuperAlgebra(%s, dim %d over %s)" % (
            self.name,
            self.dim,
            self.field,
        )


def is_supercommutative(A):
    """Sign law on all basis pairs, plus vanishing odd squares.

    Over characteristic 2 the sign law is vacuous and the square condition
    carries the content, so both are always checked.
    """
    for i in range(A.dim):
        if A.parities[i] == ODD:
            if A.mul_basis(i, i):
                return False
        for j in range(A.dim):
            ab = A.mul_basis(i, j)
            ba = A.mul_basis(j, i)
            if A.parities[i] == ODD and A.parities[j] == ODD:
                ba = {k: -c for k, c in ba.items()}
            if ab != ba:
                return False
    return True


def _closure_multipliers(A):
    if A.kind == "monomial":
        return [vec for _n, _p, vec in A.generators]
    return [A.basis_element(i) for i in range(A.dim)]


def superideal_span(A, elements, two_sided=None):
    """Graded ideal generated by the given elements, as a Subspace.

    Inhomogeneous generators contribute both their graded components (a
    graded ideal containing v contains its components).
    """
    if two_sided is None:
        two_sided = not (
            A.kind == "monomial" and A.presentation.flavor == SUPERCOMMUTATIVE
        )
    mults = _closure_multipliers(A)
    span = Subspace(A.parities, A.field)
    queue = []
    for v in elements:
        if span.insert(v):
            queue.append(dict(v))
    while queue:
        v = queue.pop()
        for g in mults:
            prods = [A.mul(g, v)]
            if two_sided:
                prods.append(A.mul(v, g))
            for w in prods:
                if w and span.insert(w):
                    queue.append(w)
    return span


def odd_radical(A):
    """The superideal A*A_1 generated by the whole odd part."""
    odd_basis = [A.basis_element(i) for i in range(A.dim) if A.parities[i] == ODD]
    return superideal_span(A, odd_basis)


def odd_power_span(A, l):
    """Span of all products of l odd elements (l = 0 gives all of A)."""
    if l < 0:
        raise AlgebraError("negative power")
    span = A.full_subspace()
    odd_basis = [A.basis_element(i) for i in range(A.dim) if A.parities[i] == ODD]
    for _ in range(l):
        nxt = Subspace(A.parities, A.field)
        for b in odd_basis:
            for row in span.basis():
                w = A.mul(b, row)
                if w:
                    nxt.insert(w)
        span = nxt
        if span.is_zero():
            break
    return span


def quotient_algebra(A, ideal, name=None):
    """Quotient by a two-sided superideal, as a table-kind algebra.

    Basis classes are the non-pivot coordinates of the echelonized ideal;
    errors out if the ideal is not multiplication-closed or contains the
    unit.
    """
    for row in ideal.basis():
        for i in range(A.dim):
            b = A.basis_element(i)
            if not ideal.contains(A.mul(b, row)) or not ideal.contains(
                A.mul(row, b)
            ):
                raise AlgebraError("subspace is not a two-sided ideal")
    pivset = set(ideal.pivots())
    if not ideal.contains(A.unit_element()):
        pass
    else:
        raise AlgebraError("ideal contains the unit")
    keep = [i for i in range(A.dim) if i not in pivset]
    pos = {i: p for p, i in enumerate(keep)}

    def project(vec):
        red = {}
        ev, od = {}, {}
        for c, x in vec.items():
            (ev if A.parities[c] == 0 else od)[c] = x
        for part, ech in ((ev, ideal.even), (od, ideal.odd)):
            for c, x in ech.reduce(part).items():
                red[pos[c]] = x
        return red

    table = {}
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            prod = project(A.mul_basis(i, j))
            if prod:
                table[(a, b)] = prod
    unit = project(A.unit_element())
    assert list(unit.values()) == [A.field.one]
    omg = None
    if A._odd_module_generators is not None or A.kind == "monomial":
        omg = []
        for label, vec in A.odd_module_generators():
            img = project(vec)
            if img:
                omg.append((label, img))
    return FiniteSuperAlgebra.from_table(
        labels=[A.labels[i] for i in keep],
        parities=[A.parities[i] for i in keep],
        field=A.field,
        table=table,
        unit_index=next(iter(unit)),
        name=name or (A.name + "/ideal"),
        odd_module_generators=omg,
    )


def table_is_associative(A):
    """Check (ab)c = a(bc) on all basis triples."""
    for i in range(A.dim):
        for j in range(A.dim):
            ij = A.mul_basis(i, j)
            for k in range(A.dim):
                left = A.mul(ij, A.basis_element(k))
                right = A.mul(A.basis_element(i), A.mul_basis(j, k))
                if left != right:
                    return False
    return True


def table_respects_unit(A):
    for i in range(A.dim):
        e = A.basis_element(i)
        if A.mul(A.unit_element(), e) != e or A.mul(e, A.unit_element()) != e:
            return False
    return True
