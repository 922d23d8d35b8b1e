"""Independent ground-truth models used by the tests.

Everything here is computed from first principles (combinatorics, naive
row reduction over Fraction, direct formula evaluation) so that the
package under test is never the judge of its own output.
"""

from fractions import Fraction
from itertools import combinations
from math import comb


def perm_parity(perm):
    """+1 or -1 by counting inversions."""
    inv = 0
    n = len(perm)
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def epsilon(i, j, k):
    """Sign of the permutation sorting (i, j, k); 0 on repeats."""
    if len({i, j, k}) != 3:
        return 0
    return perm_parity((i, j, k))


# ---------------------------------------------------------------------------
# exterior algebra model: subsets of {0..s-1} with crossing signs


def ext_mul(S, T):
    """(sign, union) for disjoint index sets, None when they overlap."""
    if S & T:
        return None
    crossings = sum(1 for a in S for b in T if a > b)
    return (-1 if crossings % 2 else 1, S | T)


def ext_dims_by_degree(s):
    return [comb(s, t) for t in range(s + 1)]


def ext_chain_dims(s):
    """dim of (odd part)^l applied to the full Grassmann algebra on s
    generators, for l = 0.. until zero: every monomial of degree >= l is
    a product of l odd factors and a remainder."""
    out = []
    for l in range(s + 1):
        d = sum(comb(s, t) for t in range(l, s + 1))
        if d == 0:
            break
        out.append(d)
    return out


# ---------------------------------------------------------------------------
# free bigraded counts for K[X_1..X_d | Y_1..Y_s]


def free_bigraded_dim(d, s, k, l):
    """Monomials X^a Y^S with |a| = k and |S| = l."""
    if d == 0 and k > 0:
        return 0
    return comb(d - 1 + k, k) * comb(s, l) if d > 0 else comb(s, l)


def free_cumulative(d, s, k, l):
    """Sum over t <= k of free_bigraded_dim; hockey-stick closed form."""
    if d == 0:
        return comb(s, l)
    return comb(d + k, k) * comb(s, l)


# ---------------------------------------------------------------------------
# naive exact row reduction (used to pin quotient dimensions)


def naive_rank(rows):
    """Rank of a list of dense Fraction rows, by hand."""
    rows = [list(map(Fraction, r)) for r in rows if any(r)]
    rank = 0
    col = 0
    ncols = max((len(r) for r in rows), default=0)
    for r in rows:
        r.extend([Fraction(0)] * (ncols - len(r)))
    while rows and col < ncols:
        pivot = next((i for i, r in enumerate(rows) if r[col]), None)
        if pivot is None:
            col += 1
            continue
        rows[0], rows[pivot] = rows[pivot], rows[0]
        head = rows.pop(0)
        inv = 1 / head[col]
        head = [x * inv for x in head]
        rows = [
            [x - r[col] * h for x, h in zip(r, head)] if r[col] else r for r in rows
        ]
        rows = [r for r in rows if any(r)]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------------------
# c1's coefficient algebra, rebuilt from scratch


def c1_coefficient_algebra_dim():
    """dim of the associative algebra on x1..x3 (odd), e1..e3 (even)
    modulo x_i e_i - e_i x_i, all x_i x_j, and
    e_i x_j - x_i e_j - x_j e_i + e_j x_i (i != j), truncated at word
    length 3.  Words are indexed 0..5: x_i = i, e_i = 3 + i.
    """
    words = [()]
    frontier = [()]
    for _ in range(3):
        frontier = [w + (g,) for w in frontier for g in range(6)]
        words.extend(frontier)
    index = {w: i for i, w in enumerate(words)}

    rels = []
    for i in range(3):
        rels.append({(i, 3 + i): 1, (3 + i, i): -1})
    for i in range(3):
        for j in range(3):
            rels.append({(i, j): 1})
    for i in range(3):
        for j in range(3):
            if i != j:
                rels.append({(3 + i, j): 1, (i, 3 + j): -1, (j, 3 + i): -1, (3 + j, i): 1})

    spans = []
    for rel in rels:
        for left in [()] + [(g,) for g in range(6)]:
            for right in [()] + [(g,) for g in range(6)]:
                if len(left) + len(right) > 1:
                    continue
                row = [Fraction(0)] * len(words)
                for w, c in rel.items():
                    row[index[left + w + right]] += c
                spans.append(row)
    return len(words) - naive_rank(spans)


# ---------------------------------------------------------------------------
# direct three-term coboundary formula (degree 0 only)


def direct_coboundary0(f_table, f_parity, A):
    """delta_0(f)(a, b) = f(ab) - (-1)^{|f||a|} a f(b) - f(a).b evaluated
    naively on basis pairs; the right action is m.b = (-1)^{|b||m|} b m.
    ``f_table`` maps basis index -> sparse vector over A's basis.
    """
    out = {}
    for i in range(A.dim):
        for j in range(A.dim):
            acc = {}

            def add(vec, scale=1):
                for r, c in vec.items():
                    v = acc.get(r)
                    v = scale * c if v is None else v + scale * c
                    if v:
                        acc[r] = v
                    else:
                        acc.pop(r, None)

            for k, c in A.mul_basis(i, j).items():
                add(f_table.get(k, {}), c)
            sign = 1 if (f_parity and A.parities[i]) else -1
            fb = f_table.get(j, {})
            for k, c in A.mul({i: A.field.one}, fb).items():
                add({k: c}, sign)
            fa = f_table.get(i, {})
            for r, c in fa.items():
                twist = 1 if (A.parities[j] and A.parities[r]) else -1
                for k, c2 in A.mul({j: A.field.one}, {r: c}).items():
                    add({k: c2}, twist)
            if acc:
                out[(i, j)] = acc
    return out
