"""Line-oriented text formats: presentations, modules and reports.

The presentation grammar (one directive per line, '#' starts a comment):

    algebra NAME over Q          # or F<p> for a prime field
    flavor supercommutative      # or associative
    even a b(2,0) c              # generators with optional (k,l) bidegrees
    odd  x y
    cap 3
    relations
      a*b - 2*x*y
      x^2
    end

Expressions use integer or rational coefficients (like 1/2), '*', '^',
'+', '-' and parentheses; juxtaposition is not multiplication.  In the
associative flavor the written factor order is kept.  Relations that
normalize to zero (an odd square, say) are dropped as vacuous.  The cap
line is optional: compiling a truncated algebra requires one, bigraded
dimension tables do not.

The module grammar, relative to a compiled algebra A:

    module NAME                  # or exactly:  module regular
    m0 : even                    # basis symbols with parities
    m1 : odd
    Z1 m0 -> m1                  # generator action, omitted images are 0
    Y  m1 -> -1*m0 + 1/2*m1

Reports serialize to JSON with sorted keys; rationals become
{"num": ..., "den": ...} objects and matrices row-major arrays, so two
runs over the same input emit identical bytes.
"""

import json
import re
from fractions import Fraction

from .algebra import AlgebraError, Presentation
from .exactlin import FpElement, Matrix, field_from_name
from .sdim import SuperDimension
from .smodule import SuperModule, regular_module
from .superpoly import (
    ASSOCIATIVE,
    EVEN,
    ODD,
    SUPERCOMMUTATIVE,
    GeneratorSpec,
    SuperPolynomial,
    monomial_sort_key,
)

__all__ = [
    "SourceSpan",
    "ParseError",
    "field_from_name",
    "parse_presentation",
    "parse_module",
    "format_presentation",
    "format_module",
    "emit_report",
    "report_to_data",
]


class SourceSpan:
    """1-based position of a token or directive inside the input text."""

    __slots__ = ("line", "column", "length")

    def __init__(self, line, column, length):
        self.line = line
        self.column = column
        self.length = length

    def __repr__(self):
        return "SourceSpan(%d, %d, %d)" % (self.line, self.column, self.length)

    def __eq__(self, other):
        return (
            isinstance(other, SourceSpan)
            and (self.line, self.column, self.length)
            == (other.line, other.column, other.length)
        )


class ParseError(ValueError):
    """A syntax or resolution error, carrying its source span."""

    def __init__(self, message, span):
        super().__init__(
            "line %d, column %d: %s" % (span.line, span.column, message)
        )
        self.message = message
        self.span = span


# ---------------------------------------------------------------------------
# expression scanner and parser


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()]))"
)


def _tokenize(text, line, column0):
    """Tokens of an expression substring, with spans into the source line."""
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:]
            stripped = rest.lstrip()
            if not stripped:
                break
            offset = pos + (len(rest) - len(stripped))
            raise ParseError(
                "unexpected character %r" % stripped[0],
                SourceSpan(line, column0 + offset + 1, 1),
            )
        start = m.start(m.lastgroup)
        span = SourceSpan(line, column0 + start + 1, m.end() - start)
        if m.lastgroup == "number":
            out.append(("number", Fraction(m.group("number")), span))
        elif m.lastgroup == "ident":
            out.append(("ident", m.group("ident"), span))
        else:
            out.append(("op", m.group("op"), span))
        pos = m.end()
    out.append(("end", None, SourceSpan(line, column0 + len(text) + 1, 1)))
    return out


class _ExprParser:
    """expr := ['-'] term {('+'|'-') term}; term := factor {'*' factor};
    factor := atom ['^' integer]; atom := number | ident | '(' expr ')'."""

    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val, span = self.take()
        if kind != "op" or val != op:
            raise ParseError("expected %r" % op, span)

    def parse(self):
        node = self.expr()
        kind, _val, span = self.peek()
        if kind != "end":
            raise ParseError("unexpected trailing input", span)
        return node

    def expr(self):
        kind, val, _span = self.peek()
        if kind == "op" and val == "-":
            self.take()
            node = ("neg", self.term())
        else:
            node = self.term()
        while True:
            kind, val, _span = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                node = ("add" if val == "+" else "sub", node, rhs)
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, val, _span = self.peek()
            if kind == "op" and val == "*":
                self.take()
                node = ("mul", node, self.factor())
            else:
                return node

    def factor(self):
        node = self.atom()
        kind, val, _span = self.peek()
        if kind == "op" and val == "^":
            self.take()
            ekind, eval_, espan = self.take()
            if ekind != "number" or eval_.denominator != 1:
                raise ParseError("exponent must be a nonnegative integer", espan)
            node = ("pow", node, int(eval_))
        return node

    def atom(self):
        kind, val, span = self.take()
        if kind == "number":
            return ("num", val)
        if kind == "ident":
            return ("ident", val, span)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError("expected a number, a name or '('", span)


def _parse_expression(text, line, column0):
    return _ExprParser(_tokenize(text, line, column0)).parse()


def _poly_eval(node, pres):
    """Evaluate an expression tree to a SuperPolynomial over pres.gens."""
    kind = node[0]
    if kind == "num":
        return SuperPolynomial.one(pres.flavor, pres.gens, pres.field).scaled(
            node[1]
        )
    if kind == "ident":
        name, span = node[1], node[2]
        for i, g in enumerate(pres.gens):
            if g.name == name:
                return SuperPolynomial.generator(
                    i, pres.flavor, pres.gens, pres.field
                )
        raise ParseError("unknown generator %r" % name, span)
    if kind == "neg":
        return -_poly_eval(node[1], pres)
    if kind in ("add", "sub"):
        left = _poly_eval(node[1], pres)
        right = _poly_eval(node[2], pres)
        return left + right if kind == "add" else left - right
    if kind == "mul":
        return _poly_eval(node[1], pres) * _poly_eval(node[2], pres)
    if kind == "pow":
        base = _poly_eval(node[1], pres)
        out = SuperPolynomial.one(pres.flavor, pres.gens, pres.field)
        for _ in range(node[2]):
            out = out * base
        return out
    raise AssertionError("unreachable node kind %r" % (kind,))


def _combo_eval(node, symtab, field, span_of_line):
    """Evaluate to ('scalar', c) or ('vec', sparse dict over basis slots)."""
    kind = node[0]
    if kind == "num":
        return ("scalar", field.of(node[1]))
    if kind == "ident":
        name, span = node[1], node[2]
        if name not in symtab:
            raise ParseError("unknown basis symbol %r" % name, span)
        return ("vec", {symtab[name]: field.one})
    if kind == "neg":
        k, v = _combo_eval(node[1], symtab, field, span_of_line)
        if k == "scalar":
            return ("scalar", -v)
        return ("vec", {r: -c for r, c in v.items()})
    if kind in ("add", "sub"):
        lk, lv = _combo_eval(node[1], symtab, field, span_of_line)
        rk, rv = _combo_eval(node[2], symtab, field, span_of_line)
        if lk != rk:
            raise ParseError(
                "cannot add a scalar and a basis combination", span_of_line
            )
        if lk == "scalar":
            return ("scalar", lv + rv if kind == "add" else lv - rv)
        out = dict(lv)
        for r, c in rv.items():
            c = c if kind == "add" else -c
            val = out.get(r)
            val = c if val is None else val + c
            if val:
                out[r] = val
            else:
                out.pop(r, None)
        return ("vec", out)
    if kind == "mul":
        lk, lv = _combo_eval(node[1], symtab, field, span_of_line)
        rk, rv = _combo_eval(node[2], symtab, field, span_of_line)
        if lk == "scalar" and rk == "scalar":
            return ("scalar", lv * rv)
        if lk == "scalar":
            return ("vec", {r: lv * c for r, c in rv.items() if lv * c})
        if rk == "scalar":
            return ("vec", {r: c * rv for r, c in lv.items() if c * rv})
        raise ParseError("cannot multiply two basis symbols", span_of_line)
    if kind == "pow":
        k, v = _combo_eval(node[1], symtab, field, span_of_line)
        if k != "scalar":
            raise ParseError("cannot raise a basis symbol to a power", span_of_line)
        out = field.one
        for _ in range(node[2]):
            out = out * v
        return ("scalar", out)
    raise AssertionError("unreachable node kind %r" % (kind,))


# ---------------------------------------------------------------------------
# presentation files


def _significant_lines(text):
    """(line_number, stripped_content) pairs, comments and blanks removed."""
    out = []
    for n, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            out.append((n, body))
    return out


_GEN_ITEM_RE = re.compile(
    r"^([A-Za-z_][A-Za-z0-9_]*)(?:\((\d+),(\d+)\))?$"
)


def parse_presentation(text, field=None):
    """Parse the presentation grammar into an uncompiled Presentation.

    A ``field`` argument overrides the header's field; coefficient
    literals are then read in the override field.
    """
    lines = _significant_lines(text)
    if not lines:
        raise ParseError("empty input", SourceSpan(1, 1, 1))

    n0, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "algebra" or parts[2] != "over":
        raise ParseError(
            "expected 'algebra NAME over FIELD'", SourceSpan(n0, 1, len(header))
        )
    name = parts[1]
    if field is None:
        try:
            field = field_from_name(parts[3])
        except ValueError as exc:
            raise ParseError(
                str(exc), SourceSpan(n0, header.rfind(parts[3]) + 1, len(parts[3]))
            )

    flavor = None
    cap = None
    gens = []
    seen = set()
    relations = []
    i = 1
    while i < len(lines):
        n, body = lines[i]
        i += 1
        words = body.split()
        head = words[0]
        if head == "flavor":
            if len(words) != 2 or words[1] not in (SUPERCOMMUTATIVE, ASSOCIATIVE):
                raise ParseError(
                    "expected 'flavor supercommutative' or 'flavor associative'",
                    SourceSpan(n, 1, len(body)),
                )
            flavor = words[1]
        elif head in ("even", "odd"):
            parity = EVEN if head == "even" else ODD
            if len(words) == 1:
                raise ParseError("expected generator names", SourceSpan(n, 1, len(body)))
            for item in words[1:]:
                m = _GEN_ITEM_RE.match(item)
                if m is None:
                    raise ParseError(
                        "bad generator item %r" % item,
                        SourceSpan(n, body.find(item) + 1, len(item)),
                    )
                gname = m.group(1)
                if gname in seen:
                    raise ParseError(
                        "duplicate generator %r" % gname,
                        SourceSpan(n, body.find(item) + 1, len(gname)),
                    )
                seen.add(gname)
                bideg = None
                if m.group(2) is not None:
                    bideg = (int(m.group(2)), int(m.group(3)))
                try:
                    gens.append(GeneratorSpec(gname, parity, bideg))
                except ValueError as exc:
                    raise ParseError(str(exc), SourceSpan(n, body.find(item) + 1, len(item)))
        elif head == "cap":
            if len(words) != 2 or not words[1].isdigit():
                raise ParseError("expected 'cap N'", SourceSpan(n, 1, len(body)))
            cap = int(words[1])
        elif head == "relations":
            if flavor is None:
                raise ParseError(
                    "flavor must come before relations", SourceSpan(n, 1, len(body))
                )
            closed = False
            probe = Presentation(flavor, gens, [], cap, field, name)
            while i < len(lines):
                rn, rbody = lines[i]
                i += 1
                if rbody.strip() == "end":
                    closed = True
                    break
                indent = len(rbody) - len(rbody.lstrip())
                node = _parse_expression(rbody.strip(), rn, indent)
                poly = _poly_eval(node, probe)
                if poly.is_zero():
                    continue
                d = poly.degree()
                if d is None:
                    raise ParseError(
                        "relation is not degree-homogeneous",
                        SourceSpan(rn, indent + 1, len(rbody.strip())),
                    )
                if d == 0:
                    raise ParseError(
                        "relation is a nonzero constant",
                        SourceSpan(rn, indent + 1, len(rbody.strip())),
                    )
                if poly.parity() is None:
                    raise ParseError(
                        "relation is not parity-homogeneous",
                        SourceSpan(rn, indent + 1, len(rbody.strip())),
                    )
                relations.append(poly)
            if not closed:
                raise ParseError("missing 'end'", SourceSpan(n, 1, len(body)))
        else:
            raise ParseError("unknown directive %r" % head, SourceSpan(n, 1, len(head)))

    if flavor is None:
        raise ParseError("missing 'flavor' line", SourceSpan(n0, 1, len(header)))
    try:
        return Presentation(flavor, gens, relations, cap, field, name)
    except AlgebraError as exc:
        raise ParseError(str(exc), SourceSpan(n0, 1, len(header)))


def _scalar_text(c):
    if isinstance(c, FpElement):
        return str(c.val)
    return str(c)


def _poly_text(p):
    """Deterministic expression text for a polynomial; parses back to p."""
    if p.is_zero():
        return "0"
    gens, flavor = p.gens, p.flavor
    items = sorted(p.terms.items(), key=lambda kv: monomial_sort_key(kv[0], gens, flavor))
    chunks = []
    for m, c in items:
        factors = []
        if flavor == SUPERCOMMUTATIVE:
            for gi, e in enumerate(m):
                if e == 1:
                    factors.append(gens[gi].name)
                elif e > 1:
                    factors.append("%s^%d" % (gens[gi].name, e))
        else:
            factors = [gens[gi].name for gi in m]
        body = "*".join(factors)
        negative = isinstance(c, Fraction) and c < 0
        mag = -c if negative else c
        if not body:
            text = _scalar_text(mag)
        elif mag == p.field.one:
            text = body
        else:
            text = "%s*%s" % (_scalar_text(mag), body)
        chunks.append(("-" if negative else "+", text))
    sign, text = chunks[0]
    out = ("-" + text) if sign == "-" else text
    for sign, text in chunks[1:]:
        out += " %s %s" % (sign, text)
    return out


def format_presentation(pres):
    """Render a Presentation in the grammar that parse_presentation reads."""
    lines = ["algebra %s over %s" % (pres.name, pres.field.name)]
    lines.append("flavor %s" % pres.flavor)
    run = []
    run_parity = None
    for g in list(pres.gens) + [None]:
        parity = None if g is None else g.parity
        if parity != run_parity and run:
            lines.append(
                "%s %s" % ("even" if run_parity == EVEN else "odd", " ".join(run))
            )
            run = []
        run_parity = parity
        if g is None:
            break
        default = (1, 0) if g.parity == EVEN else (0, 1)
        item = g.name
        if g.bidegree != default:
            item += "(%d,%d)" % g.bidegree
        run.append(item)
    if pres.cap is not None:
        lines.append("cap %d" % pres.cap)
    lines.append("relations")
    for r in pres.relations:
        lines.append("  " + _poly_text(r))
    lines.append("end")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# module files


def parse_module(text, A):
    """Parse the module grammar against a compiled algebra A."""
    lines = _significant_lines(text)
    if not lines:
        raise ParseError("empty input", SourceSpan(1, 1, 1))
    n0, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "module":
        raise ParseError("expected 'module NAME'", SourceSpan(n0, 1, len(header)))
    if parts[1] == "regular":
        return regular_module(A)
    name = parts[1]

    gen_labels = [label for label, _p, _v in A.generators]
    gen_parity = {}
    for label, p, _v in A.generators:
        gen_parity[label] = p

    symtab = {}
    parities = []
    images = {}
    for n, body in lines[1:]:
        if "->" in body:
            left, right = body.split("->", 1)
            words = left.split()
            if len(words) != 2:
                raise ParseError(
                    "expected 'generator symbol -> combination'",
                    SourceSpan(n, 1, len(body)),
                )
            gname, sym = words
            if gname not in gen_parity:
                raise ParseError(
                    "unknown generator %r" % gname, SourceSpan(n, body.find(gname) + 1, len(gname))
                )
            if sym not in symtab:
                raise ParseError(
                    "unknown basis symbol %r" % sym, SourceSpan(n, body.find(sym) + 1, len(sym))
                )
            col0 = len(body) - len(right)
            span = SourceSpan(n, col0 + 1, max(len(right.strip()), 1))
            node = _parse_expression(right.strip(), n, col0 + (len(right) - len(right.lstrip())))
            kind, val = _combo_eval(node, symtab, A.field, span)
            if kind == "scalar":
                if val:
                    raise ParseError(
                        "a nonzero constant is not a module vector", span
                    )
                vec = {}
            else:
                vec = val
            want = (gen_parity[gname] + parities[symtab[sym]]) % 2
            for r in vec:
                if parities[r] != want:
                    raise ParseError(
                        "action image mixes parities (expected %s)"
                        % ("even" if want == EVEN else "odd"),
                        span,
                    )
            images[(gname, symtab[sym])] = vec
        elif ":" in body:
            left, right = body.split(":", 1)
            sym = left.strip()
            pname = right.strip()
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", sym):
                raise ParseError("bad basis symbol %r" % sym, SourceSpan(n, 1, len(body)))
            if sym in symtab:
                raise ParseError("duplicate basis symbol %r" % sym, SourceSpan(n, 1, len(sym)))
            if pname not in ("even", "odd"):
                raise ParseError(
                    "parity must be 'even' or 'odd'",
                    SourceSpan(n, body.find(":") + 2, max(len(pname), 1)),
                )
            symtab[sym] = len(parities)
            parities.append(EVEN if pname == "even" else ODD)
        else:
            raise ParseError(
                "expected a basis line 'sym : parity' or an action line",
                SourceSpan(n, 1, len(body)),
            )

    dim = len(parities)
    actions = []
    for label in gen_labels:
        cols = [images.get((label, j), {}) for j in range(dim)]
        actions.append(Matrix.from_cols_sparse(dim, cols, A.field))
    return SuperModule(A, parities, actions, name=name)


def _combo_text(vec, names):
    if not vec:
        return "0"
    chunks = []
    for r in sorted(vec):
        c = vec[r]
        negative = isinstance(c, Fraction) and c < 0
        mag = -c if negative else c
        text = names[r] if _is_one(mag) else "%s*%s" % (_scalar_text(mag), names[r])
        chunks.append(("-" if negative else "+", text))
    sign, text = chunks[0]
    out = ("-" + text) if sign == "-" else text
    for sign, text in chunks[1:]:
        out += " %s %s" % (sign, text)
    return out


def _is_one(c):
    if isinstance(c, FpElement):
        return c.val == 1
    return c == 1


def format_module(M, name=None):
    """Render a SuperModule in the grammar that parse_module reads."""
    if name is None:
        own = getattr(M, "name", None)
        # module names must be single identifier tokens in the grammar
        name = own if own and re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", own) else "M"
    names = ["m%d" % i for i in range(M.dim)]
    lines = ["module %s" % name]
    for i in range(M.dim):
        lines.append("%s : %s" % (names[i], "even" if M.parities[i] == EVEN else "odd"))
    labels = [label for label, _p, _v in M.algebra.generators]
    for gi, label in enumerate(labels):
        cols = M.actions[gi].cols_sparse()
        for j in range(M.dim):
            if cols[j]:
                lines.append("%s %s -> %s" % (label, names[j], _combo_text(cols[j], names)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# reports


def report_to_data(value):
    """Recursively convert report values to JSON-serializable data."""
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, FpElement):
        return {"num": value.val, "den": 1}
    if isinstance(value, SuperDimension):
        return value.as_json()
    if isinstance(value, Matrix):
        return [[report_to_data(x) for x in value.row(i)] for i in range(value.nrows)]
    if isinstance(value, dict):
        return {str(k): report_to_data(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [report_to_data(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    raise TypeError("cannot serialize %r in a report" % (value,))


def emit_report(value):
    """Deterministic JSON text for a report structure."""
    return json.dumps(report_to_data(value), sort_keys=True, indent=2) + "\n"
