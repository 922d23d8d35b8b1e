"""Superized Hochschild cochains, square-zero extensions and SH^n.

Cochains f : A^{(n+1)} -> M are stored as tables on basis tuples; the
multilinear extension is implicit.  Only parity-homogeneous cochains are
first-class, since every sign in the coboundary

    d(f)(a0,...,a_{n+1}) = sum_i (-1)^i f(..., a_i a_{i+1}, ...)
                           - (-1)^{|f||a0|} a0 f(a1,...)
                           + (-1)^{n+1} f(a0,...,a_n) a_{n+1}

depends on |f|.  The right action in the last term is the twisted one,
m.a = (-1)^{|a||m|} a.m, applied per basis coordinate of the value.

The subcomplex C^n(A, M) is cut out by the unit condition in the first
slot, the reversal symmetry with sign (-1)^{n(n-1)/2 + sum_{i<j}|a_i||a_j|},
and, when 2 is not invertible, the vanishing of f on odd diagonals; the
last condition is not multilinear, so over F2 it is enumerated pointwise
over the odd part (size-guarded).

An odd super-skew pi in C^1(A, A) is the datum of a square-zero extension
A_pi on A + PiA; pi is a cocycle exactly when the four product rules give
an associative unital algebra, and two extensions are adaptively
isomorphic exactly when pi' - pi is a coboundary d0(f) with f odd and
f(1) = 0.
"""

from __future__ import annotations

import itertools

from .algebra import AlgebraError, FiniteSuperAlgebra
from .exactlin import Echelon, Matrix, kernel_of_constraints, solve_sparse
from .smodule import regular_module
from .superpoly import EVEN, ODD

__all__ = [
    "Cochain",
    "ExtensionDatum",
    "zero_cochain",
    "cochain_add",
    "cochain_scale",
    "cochain_sub",
    "cochain_parity_violations",
    "coboundary",
    "is_in_C",
    "is_super_skew",
    "is_cocycle_pi",
    "assemble_square_zero",
    "build_A_pi",
    "adapted_equivalence",
    "adapted_isomorphism_matrix",
    "sh_dim",
    "cochain_space_basis",
    "random_scalar",
    "random_cochain",
    "random_in_C",
    "random_super_skew",
]


def _add_scaled(acc, vec, coeff):
    for r, x in vec.items():
        v = acc.get(r)
        t = coeff * x if v is None else v + coeff * x
        if t:
            acc[r] = t
        else:
            acc.pop(r, None)


class Cochain:
    """f : A^{(n+1)} -> M as a table on basis-index tuples.

    Absent tuples are zero.  ``parity`` is the declared parity of f; the
    values on a tuple then must be homogeneous of parity
    |f| + sum of input parities (see :func:`cochain_parity_violations`).
    """

    __slots__ = ("n", "parity", "table")

    def __init__(self, n, parity, table=None):
        if parity not in (EVEN, ODD):
            raise AlgebraError("parity must be 0 or 1")
        self.n = n
        self.parity = parity
        self.table = {}
        if table:
            for tup, vec in table.items():
                tup = tuple(tup)
                if len(tup) != n + 1:
                    raise AlgebraError("tuple length %d, expected %d" % (len(tup), n + 1))
                cleaned = {r: c for r, c in vec.items() if c}
                if cleaned:
                    self.table[tup] = cleaned

    def value(self, tup):
        return self.table.get(tuple(tup), {})

    def is_zero(self):
        return not self.table

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.n == other.n
            and self.parity == other.parity
            and self.table == other.table
        )

    def __repr__(self):
        return "Cochain(n=%d, parity=%d, %d nonzero tuples)" % (
            self.n,
            self.parity,
            len(self.table),
        )


def zero_cochain(n, parity):
    return Cochain(n, parity, {})


def cochain_add(f, g):
    if f.n != g.n or f.parity != g.parity:
        raise AlgebraError("cochain shape mismatch")
    table = {t: dict(v) for t, v in f.table.items()}
    for t, v in g.table.items():
        acc = table.setdefault(t, {})
        for r, c in v.items():
            s = acc.get(r)
            s = c if s is None else s + c
            if s:
                acc[r] = s
            else:
                acc.pop(r, None)
    return Cochain(f.n, f.parity, table)


def cochain_scale(f, coeff):
    return Cochain(
        f.n, f.parity, {t: {r: coeff * c for r, c in v.items()} for t, v in f.table.items()}
    )


def cochain_sub(f, g):
    return cochain_add(f, cochain_scale(g, -1))


def cochain_parity_violations(f, A, target_parities):
    """Tuples whose value is not homogeneous of parity |f| + sum |a_i|."""
    bad = []
    for tup, vec in f.table.items():
        want = (f.parity + sum(A.parities[i] for i in tup)) % 2
        if any(target_parities[r] != want for r in vec):
            bad.append(tup)
    return bad


# ---------------------------------------------------------------------------
# coboundary


def coboundary(f, A, M):
    """d_n(f) as a Cochain of arity n+2 with the same parity."""
    n = f.n
    dim = A.dim
    out = {}
    neg_left = f.parity == EVEN  # -(-1)^{|f||a0|} is -1 unless both odd

    for tup in itertools.product(range(dim), repeat=n + 2):
        acc = {}
        for i in range(n + 1):
            prod = A.mul_basis(tup[i], tup[i + 1])
            if not prod:
                continue
            head, tail = tup[:i], tup[i + 2 :]
            negate = i % 2 == 1
            for k, c in prod.items():
                val = f.table.get(head + (k,) + tail)
                if val:
                    _add_scaled(acc, val, -c if negate else c)
        val = f.table.get(tup[1:])
        if val:
            moved = M.act_basis(tup[0]).apply(val)
            if moved:
                if neg_left or A.parities[tup[0]] == EVEN:
                    moved = {r: -c for r, c in moved.items()}
                _add_scaled(acc, moved, _unit_scalar(M.field))
        val = f.table.get(tup[:-1])
        if val:
            a = tup[-1]
            if A.parities[a] == ODD:
                val = {r: -c if M.parities[r] else c for r, c in val.items()}
            moved = M.act_basis(a).apply(val)
            if moved:
                if n % 2 == 0:  # (-1)^{n+1}
                    moved = {r: -c for r, c in moved.items()}
                _add_scaled(acc, moved, _unit_scalar(M.field))
        acc = {r: c for r, c in acc.items() if c}
        if acc:
            out[tup] = acc
    return Cochain(n + 1, f.parity, out)


def _unit_scalar(field):
    return field.one


# ---------------------------------------------------------------------------
# the subcomplex C^n


def is_in_C(f, A, M, max_pointwise=4096):
    """Membership in C^n(A, M).

    Checks the unit condition in the first slot, the reversal symmetry on
    basis tuples, and over F2 additionally f(a, ..., a) = 0 for every odd
    a, enumerated pointwise (guarded by ``max_pointwise`` vectors).
    """
    n = f.n
    unit = A.unit_index
    for tup, vec in f.table.items():
        if tup[0] == unit and vec:
            return False
    seen = set(f.table) | {t[::-1] for t in f.table}
    for tup in seen:
        rev = tup[::-1]
        pars = [A.parities[i] for i in tup]
        exp = n * (n - 1) // 2 + sum(
            pars[i] * pars[j] for i in range(n + 1) for j in range(i + 1, n + 1)
        )
        want = f.value(tup)
        if exp % 2:
            want = {r: -c for r, c in want.items()}
        if f.value(rev) != want:
            return False
    if A.field.characteristic == 2 and n >= 1:
        odd_idx = [i for i in range(A.dim) if A.parities[i] == ODD]
        if 2 ** len(odd_idx) > max_pointwise:
            raise AlgebraError(
                "odd part too large for the pointwise diagonal check"
            )
        for mask in range(1, 2 ** len(odd_idx)):
            support = [odd_idx[b] for b in range(len(odd_idx)) if mask >> b & 1]
            acc = {}
            for tup in itertools.product(support, repeat=n + 1):
                val = f.table.get(tup)
                if val:
                    _add_scaled(acc, val, A.field.one)
            if acc:
                return False
    return True


# ---------------------------------------------------------------------------
# extension data


def _as_pi(pi):
    return pi.pi if isinstance(pi, ExtensionDatum) else pi


def is_super_skew(pi, A):
    """pi(b,c) = (-1)^{|b||c|} pi(c,b) and pi(a,a) = 0 for odd a.

    Basis pairs suffice: bilinearity makes the symmetry pointwise, and the
    diagonal of any odd vector expands into basis diagonals plus pairs
    that cancel by the symmetry (in every characteristic).
    """
    p = _as_pi(pi)
    if p.n != 1:
        raise AlgebraError("extension data are 2-argument cochains")
    keys = set(p.table) | {t[::-1] for t in p.table}
    for i, j in keys:
        want = p.value((i, j))
        if A.parities[i] and A.parities[j]:
            want = {r: -c for r, c in want.items()}
        if p.value((j, i)) != want:
            return False
    for i in range(A.dim):
        if A.parities[i] == ODD and p.value((i, i)):
            return False
    return True


class ExtensionDatum:
    """A validated square-zero extension datum: odd super-skew pi in
    C~^1(A, A) with parity-homogeneous values."""

    __slots__ = ("A", "pi")

    def __init__(self, A, pi):
        if pi.n != 1:
            raise AlgebraError("pi must take two arguments")
        if pi.parity != ODD:
            raise AlgebraError("pi must be odd")
        bad = cochain_parity_violations(pi, A, A.parities)
        if bad:
            raise AlgebraError("pi value not parity-homogeneous at %r" % (bad[0],))
        if not is_super_skew(pi, A):
            raise AlgebraError("pi is not super-skew")
        self.A = A
        self.pi = pi


def is_cocycle_pi(pi, A):
    """Exactly what associativity of the extension table needs, on basis triples:
    pi(1, a) = 0 and pi(ab, c) - pi(a, bc) + pi(a, b)c - (-1)^{|a|} a pi(b, c) = 0.
    """
    p = _as_pi(pi)
    dim = A.dim
    unit = A.unit_index
    for j in range(dim):
        if p.value((unit, j)) or p.value((j, unit)):
            return False
    for i in range(dim):
        sign_a = A.field.one if A.parities[i] == ODD else -A.field.one
        ei = A.basis_element(i)
        for j in range(dim):
            ab = A.mul_basis(i, j)
            vab = p.value((i, j))
            for k in range(dim):
                acc = {}
                for r, c in ab.items():
                    _add_scaled(acc, p.value((r, k)), c)
                for r, c in A.mul_basis(j, k).items():
                    _add_scaled(acc, p.value((i, r)), -c)
                if vab:
                    _add_scaled(acc, A.mul(vab, A.basis_element(k)), A.field.one)
                vbc = p.value((j, k))
                if vbc:
                    _add_scaled(acc, A.mul(ei, vbc), sign_a)
                if acc:
                    return False
    return True


def assemble_square_zero(A, pi, name=None):
    """The algebra on A + PiA with the four product rules, unchecked.

    a o b = ab + Pi pi(a,b); a o Pib = (-1)^{|a|} Pi(ab); (Pib) o a = Pi(ba);
    (Pia) o (Pib) = 0.  Use :func:`build_A_pi` for the validated build.
    """
    p = _as_pi(pi)
    dim = A.dim
    table = {}
    for i in range(dim):
        odd_i = A.parities[i] == ODD
        for j in range(dim):
            prod = A.mul_basis(i, j)
            vec = dict(prod)
            for r, c in p.value((i, j)).items():
                vec[dim + r] = c
            if vec:
                table[(i, j)] = vec
            if prod:
                table[(i, dim + j)] = {
                    dim + r: -c if odd_i else c for r, c in prod.items()
                }
                table[(dim + i, j)] = {dim + r: c for r, c in prod.items()}
    labels = list(A.labels) + ["Pi(%s)" % lab for lab in A.labels]
    parities = list(A.parities) + [1 - q for q in A.parities]
    odd_gens = [(lab, dict(vec)) for lab, vec in A.odd_module_generators()]
    odd_gens.append(("Pi(1)", {dim + A.unit_index: A.field.one}))
    return FiniteSuperAlgebra.from_table(
        labels=labels,
        parities=parities,
        field=A.field,
        table=table,
        unit_index=A.unit_index,
        name=name or (A.name + "_pi"),
        odd_module_generators=odd_gens,
    )


def build_A_pi(A, pi, name=None):
    """Validated square-zero extension: pi must be an odd super-skew
    cocycle, otherwise the product rules fail associativity."""
    p = _as_pi(pi)
    if p.parity != ODD:
        raise AlgebraError("pi must be odd")
    bad = cochain_parity_violations(p, A, A.parities)
    if bad:
        raise AlgebraError("pi value not parity-homogeneous at %r" % (bad[0],))
    if not is_super_skew(p, A):
        raise AlgebraError("pi is not super-skew")
    if not is_cocycle_pi(p, A):
        raise AlgebraError("pi is not a cocycle")
    return assemble_square_zero(A, p, name=name)


# ---------------------------------------------------------------------------
# adapted isomorphisms


def _odd_map_variables(A):
    """(i, r) slots of an odd f : A -> A with f(1) = 0."""
    out = []
    for i in range(A.dim):
        if i == A.unit_index:
            continue
        want = 1 - A.parities[i]
        for r in range(A.dim):
            if A.parities[r] == want:
                out.append((i, r))
    return out


def adapted_equivalence(pi, pi2, A):
    """A certificate f with d0(f) = pi2 - pi (odd, f(1) = 0), or None.

    Both inputs must be cocycles; when a solution exists the induced map
    a -> a + Pi f(a), Pi a -> Pi a is verified to be an isomorphism of the
    two square-zero extensions.
    """
    p1 = _as_pi(pi)
    p2 = _as_pi(pi2)
    for p in (p1, p2):
        if p.parity != ODD:
            raise AlgebraError("extension data must be odd")
        if not is_super_skew(p, A):
            raise AlgebraError("extension data must be super-skew")
        if not is_cocycle_pi(p, A):
            raise AlgebraError("extension data must be cocycles")
    field = A.field
    dim = A.dim
    unit = A.unit_index
    variables = _odd_map_variables(A)
    vidx = {v: t for t, v in enumerate(variables)}
    allowed = {}
    for i, r in variables:
        allowed.setdefault(i, []).append(r)

    eqs = {}

    def bump(key, var, c):
        row = eqs.setdefault(key, {})
        v = row.get(var)
        t = c if v is None else v + c
        if t:
            row[var] = t
        else:
            row.pop(var, None)

    for i in range(dim):
        left_sign = field.one if A.parities[i] == ODD else -field.one
        for j in range(dim):
            # f(ab)
            for k, c in A.mul_basis(i, j).items():
                for r in allowed.get(k, ()):
                    bump((i, j, r), vidx[(k, r)], c)
            # -(-1)^{|a0|} a0 f(a1)   (|f| = 1)
            for r in allowed.get(j, ()):
                for s, m in A.mul_basis(i, r).items():
                    bump((i, j, s), vidx[(j, r)], left_sign * m)
            # - f(a0).a1 with the twisted right action
            for r in allowed.get(i, ()):
                tw = -field.one
                if A.parities[j] and A.parities[r]:
                    tw = field.one
                for s, m in A.mul_basis(j, r).items():
                    bump((i, j, s), vidx[(i, r)], tw * m)

    diff = cochain_sub(p2, p1)
    keys = set(eqs)
    for (i, j), vec in diff.table.items():
        for s in vec:
            keys.add((i, j, s))
    rows = []
    for key in sorted(keys):
        i, j, s = key
        rows.append((eqs.get(key, {}), diff.value((i, j)).get(s, field.zero)))
    x = solve_sparse(len(variables), rows, field)
    if x is None:
        return None
    table = {}
    for t, (i, r) in enumerate(variables):
        if x[t]:
            table.setdefault((i,), {})[r] = x[t]
    f = Cochain(0, ODD, table)
    reg = regular_module(A)
    if coboundary(f, A, reg) != diff:
        raise AlgebraError("internal error: solved f fails substitution")
    R1 = assemble_square_zero(A, p1)
    R2 = assemble_square_zero(A, p2)
    phi = adapted_isomorphism_matrix(A, f)
    if not _is_algebra_map(R1, R2, phi):
        raise AlgebraError("internal error: adapted map is not multiplicative")
    return f


def adapted_isomorphism_matrix(A, f):
    """Matrix of a -> a + Pi f(a), Pi a -> Pi a on A + PiA."""
    dim = A.dim
    cols = []
    for i in range(dim):
        col = {i: A.field.one}
        for r, c in f.value((i,)).items():
            col[dim + r] = c
        cols.append(col)
    for i in range(dim):
        cols.append({dim + i: A.field.one})
    return Matrix.from_cols_sparse(2 * dim, cols, A.field)


def _is_algebra_map(R1, R2, phi):
    if phi.apply({R1.unit_index: R1.field.one}) != {R2.unit_index: R2.field.one}:
        return False
    for i in range(R1.dim):
        fi = phi.apply({i: R1.field.one})
        for j in range(R1.dim):
            fj = phi.apply({j: R1.field.one})
            if phi.apply(R1.mul_basis(i, j)) != R2.mul(fi, fj):
                return False
    return True


# ---------------------------------------------------------------------------
# cohomology of the subcomplex


def cochain_space_basis(A, M, n, parity):
    """Deterministic basis of C^n(A, M) of the given parity."""
    dim = A.dim
    unit = A.unit_index
    variables = []
    for tup in itertools.product(range(dim), repeat=n + 1):
        want = (parity + sum(A.parities[i] for i in tup)) % 2
        for r in range(M.dim):
            if M.parities[r] == want:
                variables.append((tup, r))
    vidx = {v: t for t, v in enumerate(variables)}
    field = A.field
    constraints = []
    for t, (tup, r) in enumerate(variables):
        if tup[0] == unit:
            constraints.append({t: field.one})
    seen = set()
    for tup, r in variables:
        rev = tup[::-1]
        if (rev, tup) in seen or (tup, rev) in seen:
            continue
        seen.add((tup, rev))
        pars = [A.parities[i] for i in tup]
        exp = n * (n - 1) // 2 + sum(
            pars[i] * pars[j] for i in range(n + 1) for j in range(i + 1, n + 1)
        )
        sign = -field.one if exp % 2 else field.one
        for rr in range(M.dim):
            if (tup, rr) not in vidx:
                continue
            if rev == tup:
                coeff = field.one - sign
                if coeff:
                    constraints.append({vidx[(tup, rr)]: coeff})
            else:
                constraints.append(
                    {vidx[(rev, rr)]: field.one, vidx[(tup, rr)]: -sign}
                )
    if field.characteristic == 2 and n >= 1:
        odd_idx = [i for i in range(dim) if A.parities[i] == ODD]
        if 2 ** len(odd_idx) > 4096:
            raise AlgebraError("odd part too large for the pointwise diagonal check")
        for mask in range(1, 2 ** len(odd_idx)):
            support = [odd_idx[b] for b in range(len(odd_idx)) if mask >> b & 1]
            per_r = {}
            for tup in itertools.product(support, repeat=n + 1):
                for rr in range(M.dim):
                    t = vidx.get((tup, rr))
                    if t is not None:
                        row = per_r.setdefault(rr, {})
                        v = row.get(t)
                        v = field.one if v is None else v + field.one
                        if v:
                            row[t] = v
                        else:
                            row.pop(t, None)
            constraints.extend(row for row in per_r.values() if row)
    kernel = kernel_of_constraints(len(variables), constraints, field)
    out = []
    for vec in kernel:
        table = {}
        for t, c in vec.items():
            tup, r = variables[t]
            table.setdefault(tup, {})[r] = c
        out.append(Cochain(n, parity, table))
    return out


def _flatten(f):
    vec = {}
    for tup, val in f.table.items():
        for r, c in val.items():
            vec[tup + (r,)] = c
    return vec


def sh_dim(A, M, n, max_cells=200000):
    """(even, odd) dimensions of SH^n(A, M) = ker/im inside C^n."""
    if (A.dim ** (n + 2)) * M.dim > max_cells:
        raise AlgebraError("cochain tables exceed the size bound")
    out = []
    for parity in (EVEN, ODD):
        basis_n = cochain_space_basis(A, M, n, parity)
        ech = Echelon(A.field)
        kernel_count = 0
        for f in basis_n:
            img = coboundary(f, A, M)
            if ech.insert(_flatten(img)) is None:
                kernel_count += 1
        image_rank = 0
        if n > 0:
            prev = cochain_space_basis(A, M, n - 1, parity)
            ech_im = Echelon(A.field)
            for g in prev:
                ech_im.insert(_flatten(coboundary(g, A, M)))
            image_rank = ech_im.rank
        out.append(kernel_count - image_rank)
    return tuple(out)


# ---------------------------------------------------------------------------
# random sampling (seeded by the caller)


def random_scalar(field, rng, nonzero=False):
    if field.characteristic == 0:
        lo = 1 if nonzero else -4
        return field.of(rng.randint(lo, 4) if nonzero else rng.randint(-4, 4))
    p = field.characteristic
    return field.of(rng.randrange(1, p) if nonzero else rng.randrange(p))


def random_cochain(A, M, n, parity, rng, density=0.6):
    table = {}
    for tup in itertools.product(range(A.dim), repeat=n + 1):
        want = (parity + sum(A.parities[i] for i in tup)) % 2
        vec = {}
        for r in range(M.dim):
            if M.parities[r] == want and rng.random() < density:
                c = random_scalar(A.field, rng)
                if c:
                    vec[r] = c
        if vec:
            table[tup] = vec
    return Cochain(n, parity, table)


def random_in_C(A, M, n, parity, rng):
    basis = cochain_space_basis(A, M, n, parity)
    out = zero_cochain(n, parity)
    for f in basis:
        c = random_scalar(A.field, rng)
        if c:
            out = cochain_add(out, cochain_scale(f, c))
    return out


def random_super_skew(A, rng, density=0.7):
    """A random odd super-skew pi (not usually a cocycle)."""
    dim = A.dim
    field = A.field
    table = {}
    for i in range(dim):
        for j in range(i, dim):
            if i == j and A.parities[i] == ODD:
                continue
            want = (1 + A.parities[i] + A.parities[j]) % 2
            vec = {}
            for r in range(dim):
                if A.parities[r] == want and rng.random() < density:
                    c = random_scalar(field, rng)
                    if c:
                        vec[r] = c
            if not vec:
                continue
            table[(i, j)] = vec
            if i != j:
                if A.parities[i] and A.parities[j]:
                    table[(j, i)] = {r: -c for r, c in vec.items()}
                else:
                    table[(j, i)] = dict(vec)
    return Cochain(1, ODD, table)
