"""Bigraded Hilbert function tables and polynomial fitting.

For a supercommutative presentation whose relations are bihomogeneous,
each bidegree box (k, l) of the quotient is finite dimensional and can be
computed directly: enumerate the box monomials of the free algebra, span
the ideal piece by the products (monomial) * (relation) landing in the
box, and subtract the rank.  No global degree cap is involved.

The cumulative row sums g_l(k) = sum_{t <= k} dim B(t, l) eventually agree
with a polynomial in k of degree at most the number of even generators;
``fit_polynomial`` recovers it exactly from finite differences, and
``sdim_from_hilbert`` reads the super-dimension off the fitted degrees:
the even part is the top degree d, the odd part the largest l whose row
attains d.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import AlgebraError
from .exactlin import Echelon
from .superpoly import (
    ODD,
    SUPERCOMMUTATIVE,
    monomial_sort_key,
    mul_monomials,
)

__all__ = [
    "BigradedTable",
    "PolynomialFit",
    "HilbertPolynomial",
    "bigraded_dims",
    "fit_polynomial",
    "fit_rows",
    "sdim_from_hilbert",
    "evaluate_fit",
    "box_monomials",
]

DEFAULT_KMAX = 12


def box_monomials(gens, k, l):
    """Exponent tuples of the free supercommutative monomials of bidegree
    exactly (k, l), in canonical order."""
    n = len(gens)
    out = []
    acc = [0] * n

    def rec(i, rk, rl):
        if i == n:
            if rk == 0 and rl == 0:
                out.append(tuple(acc))
            return
        gk, gl = gens[i].bidegree
        emax = rk // gk if gk else None
        if gl:
            cap = rl // gl
            emax = cap if emax is None else min(emax, cap)
        if gens[i].parity == ODD:
            emax = min(emax, 1)
        for e in range(emax + 1):
            acc[i] = e
            rec(i + 1, rk - e * gk, rl - e * gl)
        acc[i] = 0

    rec(0, k, l)
    out.sort(key=lambda m: monomial_sort_key(m, gens, SUPERCOMMUTATIVE))
    return out


class BigradedTable:
    """dims[(k, l)] = dim B(k, l) for 0 <= k <= kmax, 0 <= l <= lmax."""

    def __init__(self, dims, kmax, lmax, name, even_count):
        self.dims = dict(dims)
        self.kmax = kmax
        self.lmax = lmax
        self.name = name
        self.even_count = even_count

    def dim(self, k, l):
        return self.dims.get((k, l), 0)

    def row(self, l):
        return [self.dim(k, l) for k in range(self.kmax + 1)]

    def cumulative_row(self, l):
        out = []
        total = 0
        for k in range(self.kmax + 1):
            total += self.dim(k, l)
            out.append(total)
        return out

    def as_json(self):
        return {
            "name": self.name,
            "kmax": self.kmax,
            "lmax": self.lmax,
            "rows": {str(l): self.row(l) for l in range(self.lmax + 1)},
        }

    def __repr__(self):
        return "BigradedTable(%r, kmax=%d, lmax=%d)" % (self.name, self.kmax, self.lmax)


def _natural_lmax(gens):
    """Largest odd weight a monomial can carry, when that is finite."""
    total = 0
    for g in gens:
        _k, l = g.bidegree
        if g.parity == ODD:
            total += l
        elif l:
            return None
    return total


def bigraded_dims(pres, kmax=DEFAULT_KMAX, lmax=None):
    """Bigraded dimension table of the quotient presented by ``pres``.

    Relations must be bihomogeneous; each (k, l) box is echelonized
    independently, so no degree cap enters.
    """
    if pres.flavor != SUPERCOMMUTATIVE:
        raise AlgebraError("bigraded tables need a supercommutative presentation")
    gens = pres.gens
    field = pres.field
    rel_degs = []
    for r in pres.relations:
        bd = r.bidegree()
        if bd is None:
            raise AlgebraError("relation %r is not bihomogeneous" % (r,))
        rel_degs.append(bd)
    if lmax is None:
        lmax = _natural_lmax(gens)
        if lmax is None:
            raise AlgebraError(
                "odd weight is unbounded for these generators; pass lmax"
            )
    dims = {}
    for l in range(lmax + 1):
        for k in range(kmax + 1):
            monos = box_monomials(gens, k, l)
            if not monos:
                dims[(k, l)] = 0
                continue
            index = {m: i for i, m in enumerate(monos)}
            ech = Echelon(field)
            for r, (rk, rl) in zip(pres.relations, rel_degs):
                if rk > k or rl > l:
                    continue
                for m in box_monomials(gens, k - rk, l - rl):
                    vec = {}
                    for m2, c in r.terms.items():
                        sm = mul_monomials(m, m2, gens, SUPERCOMMUTATIVE)
                        if sm is None:
                            continue
                        sign, prod = sm
                        pos = index[prod]
                        val = vec.get(pos)
                        val = sign * c if val is None else val + sign * c
                        if val:
                            vec[pos] = val
                        else:
                            vec.pop(pos, None)
                    if vec:
                        ech.insert(vec)
            dims[(k, l)] = len(monos) - ech.rank
    even_count = sum(1 for g in gens if g.parity != ODD)
    return BigradedTable(dims, kmax, lmax, pres.name, even_count)


class PolynomialFit:
    """Exact polynomial agreeing with a tail of the data.

    ``coeffs`` are Fractions, constant term first; the zero polynomial is
    ``coeffs == []`` with ``degree None``.  ``threshold`` is the smallest
    k from which the data is polynomial through the end of the window.
    """

    __slots__ = ("coeffs", "degree", "threshold")

    def __init__(self, coeffs, threshold):
        self.coeffs = list(coeffs)
        while self.coeffs and self.coeffs[-1] == 0:
            self.coeffs.pop()
        self.degree = len(self.coeffs) - 1 if self.coeffs else None
        self.threshold = threshold

    def __call__(self, k):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def as_json(self):
        return {
            "stabilized": True,
            "degree": self.degree,
            "threshold": self.threshold,
            "coeffs": [{"num": c.numerator, "den": c.denominator} for c in self.coeffs],
        }

    def __repr__(self):
        return "PolynomialFit(deg=%r, k0=%d, %r)" % (
            self.degree,
            self.threshold,
            self.coeffs,
        )


def _difference_rows(tail, upto):
    rows = [[Fraction(v) for v in tail]]
    for _ in range(upto):
        prev = rows[-1]
        if len(prev) < 2:
            break
        rows.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    return rows


def fit_polynomial(values, dmax):
    """Fit an exact polynomial of degree <= dmax to a tail of ``values``.

    Scans thresholds upward; accepts the first tail of length >= dmax + 2
    whose finite differences of order dmax + 1 vanish identically.
    Returns None when no such tail exists in the window (not stabilized).
    """
    values = list(values)
    if dmax < 0:
        raise ValueError("dmax must be nonnegative")
    for k0 in range(len(values)):
        tail = values[k0:]
        if len(tail) < dmax + 2:
            return None
        rows = _difference_rows(tail, dmax + 1)
        if len(rows) <= dmax + 1 or any(rows[dmax + 1]):
            continue
        # Newton form sum_r rows[r][0] * C(x - k0, r), expanded exactly.
        coeffs = [Fraction(0)] * (dmax + 1)
        basis = [Fraction(1)]
        fact = 1
        for r in range(dmax + 1):
            if r:
                # multiply by (x - k0 - (r - 1))
                shift = -Fraction(k0 + r - 1)
                nxt = [Fraction(0)] * (len(basis) + 1)
                for i, b in enumerate(basis):
                    nxt[i] += b * shift
                    nxt[i + 1] += b
                basis = nxt
                fact *= r
            lead = rows[r][0] / fact
            if lead:
                for i, b in enumerate(basis):
                    coeffs[i] += lead * b
        return PolynomialFit(coeffs, k0)
    return None


class HilbertPolynomial:
    """Per-l fit of the cumulative rows of a bigraded table."""

    def __init__(self, table, fits):
        self.table = table
        self.fits = fits

    def all_stabilized(self):
        return all(f is not None for f in self.fits.values())

    def degrees(self):
        """l -> degree of g_l (None for the zero row); stabilized rows only."""
        out = {}
        for l, f in sorted(self.fits.items()):
            if f is not None:
                out[l] = f.degree
        return out

    def as_json(self):
        rows = {}
        for l, f in sorted(self.fits.items()):
            rows[str(l)] = f.as_json() if f is not None else {"stabilized": False}
        return {"table": self.table.as_json(), "fits": rows}


def fit_rows(table, dmax=None):
    """Fit every cumulative row g_l of the table; dmax defaults to the
    number of even generators."""
    if dmax is None:
        dmax = table.even_count
    fits = {}
    for l in range(table.lmax + 1):
        fits[l] = fit_polynomial(table.cumulative_row(l), dmax)
    return HilbertPolynomial(table, fits)


def sdim_from_hilbert(hp):
    """Super-dimension read off the fitted growth polynomials."""
    from .sdim import SuperDimension

    for l, f in sorted(hp.fits.items()):
        if f is None:
            raise AlgebraError("row l=%d did not stabilize; raise kmax" % (l,))
    degs = {l: f.degree for l, f in hp.fits.items() if f.degree is not None}
    if not degs:
        raise AlgebraError("all rows are zero")
    d = max(degs.values())
    odd = max(l for l, dl in degs.items() if dl == d)
    return SuperDimension(d, odd)


def evaluate_fit(fit, k):
    return fit(k)
