"""Exact linear algebra over Q and prime fields.

Scalars are ``fractions.Fraction`` for Q and :class:`FpElement` for GF(p).
Matrices are dense and row-major (the exchange format used across the
package); the workhorses underneath are sparse dict-of-column vectors and a
fully reduced row-echelon accumulator (:class:`Echelon`), which keeps the
closure computations elsewhere in the package near the cost of their actual
support instead of the ambient dimension.

All pivot choices are "first nonzero column", so every reduced object and
every basis this module returns is deterministic.
"""

from __future__ import annotations

from fractions import Fraction


class RationalField:
    """The rational field; scalars are Fraction."""

    name = "Q"
    characteristic = 0

    def of(self, x):
        return Fraction(x)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class FpElement:
    """An element of GF(p), kept reduced to 0..p-1.

    Supports mixed arithmetic with plain ints so sign bookkeeping like
    ``(-1) * x`` works uniformly for both scalar kinds.
    """

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other.val
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.val + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.val - v, self.p)

    def __rsub__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(v - self.val, self.p)

    def __mul__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.val * v, self.p)

    __rmul__ = __mul__

    def inverse(self):
        if self.val == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return FpElement(pow(self.val, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return self * FpElement(v, self.p).inverse()

    def __rtruediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(v, self.p) * self.inverse()

    def __neg__(self):
        return FpElement(-self.val, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return "%d(mod %d)" % (self.val, self.p)


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """GF(p) for a prime p."""

    characteristic = None  # set per instance

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("field order must be prime, got %r" % (p,))
        self.p = p
        self.characteristic = p
        self.name = "F%d" % p

    def of(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise ValueError("mixed prime fields")
            return x
        if isinstance(x, Fraction):
            num = FpElement(x.numerator, self.p)
            return num * FpElement(x.denominator, self.p).inverse()
        return FpElement(x, self.p)

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()


def field_from_name(name):
    """Parse a field tag: "q"/"Q" or "f<p>"/"F<p>" with p prime."""
    s = name.strip()
    if s in ("q", "Q"):
        return QQ
    if s[:1] in ("f", "F") and s[1:].isdigit():
        return PrimeField(int(s[1:]))
    raise ValueError("unknown field %r (expected q or f<p>)" % (name,))


# ---------------------------------------------------------------------------
# sparse vectors: dict index -> nonzero scalar


def vec_add_scaled(target, src, coeff):
    """target += coeff * src, in place, dropping zeros."""
    if not coeff:
        return target
    for c, x in src.items():
        val = target.get(c)
        val = coeff * x if val is None else val + coeff * x
        if val:
            target[c] = val
        else:
            target.pop(c, None)
    return target


def vec_dot(a, b):
    if len(a) > len(b):
        a, b = b, a
    total = None
    for c, x in a.items():
        y = b.get(c)
        if y is not None:
            total = x * y if total is None else total + x * y
    return total  # None means zero


class Echelon:
    """Fully reduced sparse row echelon over a fixed field.

    ``rows`` maps a pivot column to a row (dict) whose pivot entry is 1 and
    which contains no other pivot column in its support.  Insertions keep
    the whole collection reduced, so coordinates with respect to the stored
    basis can be read off pivot entries directly.
    """

    __slots__ = ("field", "rows")

    def __init__(self, field):
        self.field = field
        self.rows = {}

    def copy(self):
        other = Echelon(self.field)
        other.rows = {p: dict(r) for p, r in self.rows.items()}
        return other

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def reduce(self, vec):
        """Residual of vec modulo the stored span (a fresh dict)."""
        v = {c: x for c, x in vec.items() if x}
        for c in sorted(v):
            coef = v.get(c)
            if coef is None or c not in self.rows:
                continue
            row = self.rows[c]
            for c2, x in row.items():
                y = v.get(c2)
                val = -coef * x if y is None else y - coef * x
                if val:
                    v[c2] = val
                else:
                    v.pop(c2, None)
        return v

    def insert(self, vec):
        """Add vec to the span. Returns the new pivot column, or None."""
        v = self.reduce(vec)
        if not v:
            return None
        piv = min(v)
        inv = self.field.one / v[piv]
        row = {c: x * inv for c, x in v.items()}
        for r2 in self.rows.values():
            coef = r2.get(piv)
            if coef:
                for c, x in row.items():
                    y = r2.get(c)
                    val = -coef * x if y is None else y - coef * x
                    if val:
                        r2[c] = val
                    else:
                        r2.pop(c, None)
        self.rows[piv] = row
        return piv

    def contains(self, vec):
        return not self.reduce(vec)

    def coords(self, vec):
        """Coordinates of vec in the stored basis (pivot order), or None."""
        res = self.reduce(vec)
        if res:
            return None
        return [vec.get(p, self.field.zero) for p in self.pivots()]

    def basis_rows(self):
        return [self.rows[p] for p in self.pivots()]


# ---------------------------------------------------------------------------
# dense matrices (exchange type)


class Matrix:
    """Dense exact matrix; entries row-major, length nrows*ncols."""

    __slots__ = ("nrows", "ncols", "entries", "field", "_cols")

    def __init__(self, nrows, ncols, entries, field):
        entries = list(entries)
        if len(entries) != nrows * ncols:
            raise ValueError(
                "entry count %d does not match shape %dx%d"
                % (len(entries), nrows, ncols)
            )
        self.nrows = nrows
        self.ncols = ncols
        self.entries = entries
        self.field = field
        self._cols = None

    @classmethod
    def from_rows(cls, rows, field, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("cannot infer column count from no rows")
            ncols = len(rows[0])
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(field.of(x) for x in r)
        return cls(len(rows), ncols, flat, field)

    @classmethod
    def from_cols_sparse(cls, nrows, cols, field):
        ncols = len(cols)
        zero = field.zero
        flat = [zero] * (nrows * ncols)
        for j, col in enumerate(cols):
            for i, x in col.items():
                flat[i * ncols + j] = x
        return cls(nrows, ncols, flat, field)

    @classmethod
    def identity(cls, n, field):
        cols = [{i: field.one} for i in range(n)]
        return cls.from_cols_sparse(n, cols, field)

    @classmethod
    def zeros(cls, nrows, ncols, field):
        return cls(nrows, ncols, [field.zero] * (nrows * ncols), field)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.ncols + j]

    def row(self, i):
        return self.entries[i * self.ncols : (i + 1) * self.ncols]

    def row_sparse(self, i):
        return {j: x for j, x in enumerate(self.row(i)) if x}

    def cols_sparse(self):
        if self._cols is None:
            cols = [dict() for _ in range(self.ncols)]
            n = self.ncols
            for k, x in enumerate(self.entries):
                if x:
                    cols[k % n][k // n] = x
            self._cols = cols
        return self._cols

    def apply(self, vec):
        """Matrix @ sparse vector (dict col -> scalar) -> sparse dict."""
        cols = self.cols_sparse()
        out = {}
        for j, coeff in vec.items():
            vec_add_scaled(out, cols[j], coeff)
        return out

    def compose(self, other):
        """self @ other."""
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        cols = [self.apply(c) for c in other.cols_sparse()]
        return Matrix.from_cols_sparse(self.nrows, cols, self.field)

    def transpose(self):
        flat = []
        for j in range(self.ncols):
            for i in range(self.nrows):
                flat.append(self.entries[i * self.ncols + j])
        return Matrix(self.ncols, self.nrows, flat, self.field)

    def is_zero(self):
        return not any(self.entries)

    def scaled(self, coeff):
        return Matrix(
            self.nrows, self.ncols, [coeff * x for x in self.entries], self.field
        )

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch")
        return Matrix(
            self.nrows,
            self.ncols,
            [a + b for a, b in zip(self.entries, other.entries)],
            self.field,
        )

    def __sub__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch")
        return Matrix(
            self.nrows,
            self.ncols,
            [a - b for a, b in zip(self.entries, other.entries)],
            self.field,
        )

    def __neg__(self):
        return Matrix(self.nrows, self.ncols, [-x for x in self.entries], self.field)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __repr__(self):
        return "Matrix(%d x %d over %s)" % (self.nrows, self.ncols, self.field)


def rref(m):
    """Reduce m; returns (reduced Matrix, pivot column tuple).

    Pivot columns are first-nonzero, rows of the result are the reduced
    echelon rows in pivot order followed by zero rows.
    """
    ech = Echelon(m.field)
    for i in range(m.nrows):
        ech.insert(m.row_sparse(i))
    pivots = tuple(ech.pivots())
    zero = m.field.zero
    flat = []
    for p in pivots:
        row = ech.rows[p]
        flat.extend(row.get(j, zero) for j in range(m.ncols))
    flat.extend([zero] * ((m.nrows - len(pivots)) * m.ncols))
    return Matrix(m.nrows, m.ncols, flat, m.field), pivots


def rank(m):
    ech = Echelon(m.field)
    for i in range(m.nrows):
        ech.insert(m.row_sparse(i))
    return ech.rank


def kernel_basis(m):
    """Basis of {v : m @ v = 0}, as dense lists, one per free column."""
    red, pivots = rref(m)
    pivset = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivset]
    zero, one = m.field.zero, m.field.one
    basis = []
    for j in free:
        v = [zero] * m.ncols
        v[j] = one
        for r, p in enumerate(pivots):
            x = red[r, j]
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def in_span(vs, v):
    """Is v in the span of the vectors vs (all of equal length)?"""
    vs = [list(u) for u in vs]
    v = list(v)
    for u in vs:
        if len(u) != len(v):
            raise ValueError("dimension mismatch")
    if not vs:
        return not any(v)
    field = _field_of_scalars(vs[0] + v)
    ech = Echelon(field)
    for u in vs:
        ech.insert({i: x for i, x in enumerate(u) if x})
    return ech.contains({i: x for i, x in enumerate(v) if x})


def _field_of_scalars(xs):
    for x in xs:
        if isinstance(x, FpElement):
            return PrimeField(x.p)
    return QQ


def solve(m, b):
    """One solution x of m @ x = b (free variables 0), or None."""
    if len(b) != m.nrows:
        raise ValueError("dimension mismatch")
    n = m.ncols
    ech = Echelon(m.field)
    for i in range(m.nrows):
        row = m.row_sparse(i)
        if b[i]:
            row[n] = b[i]
        ech.insert(row)
    if n in ech.rows:
        return None
    x = [m.field.zero] * n
    for p, row in ech.rows.items():
        x[p] = row.get(n, m.field.zero)
    return x


def solve_sparse(nvars, equations, field):
    """One solution of a sparse linear system (free variables 0), or None.

    ``equations`` yields (coeffs, rhs) pairs with sparse coefficient dicts
    over variable indices < nvars.
    """
    ech = Echelon(field)
    for coeffs, rhs in equations:
        row = {j: c for j, c in coeffs.items() if c}
        if rhs:
            row[nvars] = rhs
        if row:
            ech.insert(row)
    if nvars in ech.rows:
        return None
    x = [field.zero] * nvars
    for p, row in ech.rows.items():
        x[p] = row.get(nvars, field.zero)
    return x


def kernel_of_constraints(n, constraints, field):
    """Common kernel of sparse linear functionals on F^n.

    ``constraints`` yields dicts {index: scalar}. Returns a list of sparse
    basis vectors of the joint kernel, deterministic in the constraint
    order.  Cheap when n is small and the constraint list is long.
    """
    basis = [{i: field.one} for i in range(n)]
    for con in constraints:
        if not con:
            continue
        vals = [vec_dot(con, v) for v in basis]
        pivot = None
        for k, val in enumerate(vals):
            if val:
                pivot = k
                break
        if pivot is None:
            continue
        pv = vals[pivot]
        pvec = basis[pivot]
        new_basis = []
        for k, v in enumerate(basis):
            if k == pivot:
                continue
            if vals[k]:
                v = vec_add_scaled(dict(v), pvec, -vals[k] / pv)
            new_basis.append(v)
        basis = new_basis
    return basis


class Subspace:
    """A parity-graded subspace of a parity-labelled coordinate space.

    Vectors are sparse dicts over coordinates whose parities are given by
    ``parities``.  Inserted vectors are split into even and odd components
    (the graded closure), each tracked in its own echelon.
    """

    __slots__ = ("parities", "field", "even", "odd")

    def __init__(self, parities, field):
        self.parities = parities
        self.field = field
        self.even = Echelon(field)
        self.odd = Echelon(field)

    def copy(self):
        other = Subspace.__new__(Subspace)
        other.parities = self.parities
        other.field = self.field
        other.even = self.even.copy()
        other.odd = self.odd.copy()
        return other

    def insert(self, vec):
        """Insert the graded components of vec; True if the span grew."""
        ev, od = {}, {}
        for c, x in vec.items():
            if not x:
                continue
            (ev if self.parities[c] == 0 else od)[c] = x
        grew = False
        if ev and self.even.insert(ev) is not None:
            grew = True
        if od and self.odd.insert(od) is not None:
            grew = True
        return grew

    def contains(self, vec):
        ev, od = {}, {}
        for c, x in vec.items():
            if not x:
                continue
            (ev if self.parities[c] == 0 else od)[c] = x
        return self.even.contains(ev) and self.odd.contains(od)

    @property
    def dim(self):
        return self.even.rank + self.odd.rank

    def dims(self):
        return (self.even.rank, self.odd.rank)

    def is_zero(self):
        return self.dim == 0

    def pivots(self):
        return sorted(list(self.even.rows) + list(self.odd.rows))

    def basis(self):
        """Homogeneous basis rows, ordered by pivot coordinate."""
        rows = dict(self.even.rows)
        rows.update(self.odd.rows)
        return [rows[p] for p in sorted(rows)]

    def basis_with_parity(self):
        out = []
        for p in self.pivots():
            if p in self.even.rows:
                out.append((0, self.even.rows[p]))
            else:
                out.append((1, self.odd.rows[p]))
        return out

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.dim != other.dim:
            return False
        return all(other.contains(r) for r in self.basis()) and all(
            self.contains(r) for r in other.basis()
        )

    def __repr__(self):
        return "Subspace(dim %d = %d|%d)" % (self.dim, *self.dims())
