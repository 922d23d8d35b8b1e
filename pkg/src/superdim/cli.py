"""Command-line driver.

    superdim sdim <alg> [--module FILE]
    superdim odd-params <alg> [--module FILE] [--size L]
    superdim regular <alg> --module FILE --elems y1,y2
    superdim gr <alg> [--module FILE] --ideal ELEMS|odd-radical
                 [--bigraded] [--verify]
    superdim hilbert <alg> --kmax K [--lmax L] [--fit] [--special]
    superdim hochschild <alg> [--module FILE] --n N [--cocycle FILE]
                 [--build-api] [--classify FILE2]
    superdim corpus [--case c1|c2|gr|flat|all]

Global flags on every subcommand: --field q|f<p> overrides the field in
the algebra file, --format text|report selects human text or the JSON
report, --seed N is echoed into the output for reproducibility.

Exit codes: 0 success, 1 a verification clause failed (the failing
clause ids are printed), 2 usage or parse error.

Element lists (--elems, --ideal) are comma-separated expressions in the
algebra's generators, e.g. ``Y1,t123*Y4``.  Cochain files (--cocycle,
--classify) are JSON: {"n": 1, "parity": "odd", "table": {"i,j":
{"r": coeff, ...}, ...}} with coefficients either integers or
{"num": ..., "den": ...} pairs, indices into the algebra's basis.
"""

import argparse
import json
import sys
from fractions import Fraction

from .algebra import AlgebraError, compile_presentation, odd_radical, superideal_span
from .corpus import CASES, corpus_all, corpus_report
from .exactlin import QQ
from .graded import (
    bgr,
    bgr_module,
    bgr_to_gr_surjective,
    gr,
    gr_module,
    verify_graded_comparison,
)
from .hilbert import bigraded_dims, fit_rows, sdim_from_hilbert
from .hochschild import (
    Cochain,
    adapted_equivalence,
    build_A_pi,
    cochain_parity_violations,
    is_cocycle_pi,
    is_in_C,
    is_super_skew,
    sh_dim,
)
from .sdim import odd_parameter_systems, odd_power_spans_of_module, sdim, verify_factoring
from .smodule import ModuleError, regular_module
from .superpoly import EVEN, ODD
from .textio import (
    ParseError,
    _parse_expression,
    emit_report,
    field_from_name,
    parse_module,
    parse_presentation,
    report_to_data,
)


class UsageError(ValueError):
    pass


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc))


def _load_algebra(args):
    field = field_from_name(args.field) if args.field else None
    pres = parse_presentation(_read(args.algebra), field=field)
    return compile_presentation(pres)


def _load_module(args, A):
    if getattr(args, "module", None):
        return parse_module(_read(args.module), A)
    return regular_module(A)


def _eval_element(text, A):
    """One comma-free expression in the generators, as an algebra vector."""
    node = _parse_expression(text, 1, 0)
    return _element_of_node(node, A)


def _element_of_node(node, A):
    kind = node[0]
    if kind == "num":
        c = A.field.of(node[1])
        return {A.unit_index: c} if c else {}
    if kind == "ident":
        return A.generator_element(node[1])
    if kind == "neg":
        return {r: -c for r, c in _element_of_node(node[1], A).items()}
    if kind in ("add", "sub"):
        out = dict(_element_of_node(node[1], A))
        for r, c in _element_of_node(node[2], A).items():
            c = c if kind == "add" else -c
            v = out.get(r)
            v = c if v is None else v + c
            if v:
                out[r] = v
            else:
                out.pop(r, None)
        return out
    if kind == "mul":
        return A.mul(_element_of_node(node[1], A), _element_of_node(node[2], A))
    if kind == "pow":
        out = A.unit_element()
        base = _element_of_node(node[1], A)
        for _ in range(node[2]):
            out = A.mul(out, base)
        return out
    raise AssertionError("unreachable node kind %r" % (kind,))


def _eval_elements(text, A):
    return [_eval_element(chunk.strip(), A) for chunk in text.split(",") if chunk.strip()]


def _sdim_text(sd):
    if isinstance(sd, dict):
        if sd.get("empty"):
            return "empty"
        return "%d|%d" % (sd["even"], sd["odd"])
    if sd.empty:
        return "empty"
    return "%d|%d" % (sd.even, sd.odd)


def _emit(args, report, lines):
    if args.format == "report":
        sys.stdout.write(emit_report(report))
    else:
        for line in lines:
            print(line)


def _seeded(args, report, lines):
    if args.seed is not None:
        report["seed"] = args.seed
        lines.insert(0, "seed: %d" % args.seed)
    return report, lines


def _fail_clauses(clauses, prefix=""):
    """Print failing clause ids to stderr; return True when any failed."""
    bad = [cl["id"] for cl in clauses if not cl["ok"]]
    for cid in bad:
        print("FAIL %s%s" % (prefix, cid), file=sys.stderr)
    return bool(bad)


def _clause_lines(clauses):
    return [("ok   " if cl["ok"] else "FAIL ") + cl["id"] for cl in clauses]


# ---------------------------------------------------------------------------
# subcommands


def _cmd_sdim(args):
    A = _load_algebra(args)
    M = _load_module(args, A)
    sd = sdim(M)
    chain = [s.dim for s in odd_power_spans_of_module(M)]
    report = {
        "command": "sdim",
        "algebra": {"name": A.name, "dim": A.dim},
        "module": {"name": M.name, "dim": M.dim},
        "sdim": sd,
        "odd_chain_dims": chain,
    }
    lines = [
        "algebra %s: dim %d" % (A.name, A.dim),
        "module %s: dim %d" % (M.name, M.dim),
        "super-dimension: %s" % _sdim_text(sd),
        "odd chain dims: %s" % " ".join(str(d) for d in chain),
    ]
    _emit(args, *_seeded(args, report, lines))
    return 0


def _cmd_odd_params(args):
    A = _load_algebra(args)
    M = _load_module(args, A)
    size = args.size
    if size is None:
        sd = sdim(M)
        size = 0 if sd.empty else sd.odd
    systems = odd_parameter_systems(M, size)
    report = {
        "command": "odd-params",
        "algebra": {"name": A.name, "dim": A.dim},
        "module": {"name": M.name, "dim": M.dim},
        "size": size,
        "count": len(systems),
        "systems": [list(s) for s in systems],
    }
    lines = ["size: %d" % size, "count: %d" % len(systems)]
    lines += [" ".join(s) for s in systems]
    _emit(args, *_seeded(args, report, lines))
    return 0


def _cmd_regular(args):
    A = _load_algebra(args)
    M = _load_module(args, A)
    ys = _eval_elements(args.elems, A)
    if not ys:
        raise UsageError("--elems needs at least one element")
    rep = verify_factoring(M, ys)
    report = {
        "command": "regular",
        "algebra": {"name": A.name, "dim": A.dim},
        "module": {"name": M.name, "dim": M.dim},
        "elems": args.elems,
        "clauses": rep["clauses"],
        "ok": rep["ok"],
        "sdim": rep["sdim"],
        "sdim_quotient": rep["sdim_quotient"],
        "extendable": rep["extendable"],
    }
    lines = _clause_lines(rep["clauses"])
    lines += [
        "sdim: %s" % _sdim_text(rep["sdim"]),
        "sdim of quotient: %s" % _sdim_text(rep["sdim_quotient"]),
        "extendable to longest: %s" % ("true" if rep["extendable"] else "false"),
    ]
    _emit(args, *_seeded(args, report, lines))
    if _fail_clauses(rep["clauses"]):
        return 1
    return 0


def _cmd_gr(args):
    A = _load_algebra(args)
    M = _load_module(args, A)
    if args.ideal == "odd-radical":
        ideal = odd_radical(A)
    else:
        ideal = superideal_span(A, _eval_elements(args.ideal, A))
    G = gr(A, ideal)
    GM = gr_module(M, ideal, graded_algebra=G)
    sd = sdim(M)
    gsd = sdim(GM.module)
    comp = GM.component_dims()
    report = {
        "command": "gr",
        "algebra": {"name": A.name, "dim": A.dim},
        "module": {"name": M.name, "dim": M.dim},
        "ideal_dims": {"even": ideal.dims()[0], "odd": ideal.dims()[1]},
        "component_dims": {str(d): n for d, n in sorted(comp.items())},
        "sdim": sd,
        "sdim_graded": gsd,
    }
    lines = [
        "ideal dims: even %d, odd %d" % (ideal.dims()[0], ideal.dims()[1]),
        "graded components: %s"
        % " ".join("%d:%d" % (d, n) for d, n in sorted(comp.items())),
        "super-dimension: %s" % _sdim_text(sd),
        "graded super-dimension: %s" % _sdim_text(gsd),
    ]
    if args.bigraded:
        B = bgr(A, ideal)
        BM = bgr_module(M, ideal, bigraded_algebra=B)
        bcomp = BM.component_dims()
        report["bigraded_component_dims"] = {
            "%d,%d" % kl: n for kl, n in sorted(bcomp.items())
        }
        report["bgr_to_gr_surjective"] = bgr_to_gr_surjective(B, G)
        lines.append(
            "bigraded components: %s"
            % " ".join("(%d,%d):%d" % (kl[0], kl[1], n) for kl, n in sorted(bcomp.items()))
        )
    failed = False
    if args.verify:
        rep = verify_graded_comparison(M, ideal)
        report["clauses"] = rep["clauses"]
        report["ok"] = rep["ok"]
        lines += _clause_lines(rep["clauses"])
        failed = _fail_clauses(rep["clauses"])
    _emit(args, *_seeded(args, report, lines))
    return 1 if failed else 0


def _cmd_hilbert(args):
    field = field_from_name(args.field) if args.field else None
    pres = parse_presentation(_read(args.algebra), field=field)
    table = bigraded_dims(pres, kmax=args.kmax, lmax=args.lmax)
    report = {
        "command": "hilbert",
        "algebra": {"name": pres.name},
        "special": bool(args.special),
        "table": table.as_json(),
    }
    lines = ["bigraded dims of %s (k = 0..%d):" % (pres.name, table.kmax)]
    for l in range(table.lmax + 1):
        lines.append("l=%d: %s" % (l, " ".join(str(v) for v in table.row(l))))
    if args.fit:
        hp = fit_rows(table)
        report["fits"] = hp.as_json()["fits"]
        degs = hp.degrees()
        lines.append(
            "fit degrees: %s"
            % " ".join(
                "l=%d:%s" % (l, "zero" if d is None else d) for l, d in sorted(degs.items())
            )
        )
        if hp.all_stabilized():
            sd = sdim_from_hilbert(hp)
            report["sdim"] = sd
            label = "Krull super-dimension" if args.special else "super-dimension"
            lines.append("%s: %s" % (label, _sdim_text(sd)))
        else:
            bad = [l for l, f in sorted(hp.fits.items()) if f is None]
            report["not_stabilized_rows"] = bad
            lines.append(
                "rows not stabilized: %s (raise --kmax)"
                % " ".join(str(l) for l in bad)
            )
    _emit(args, *_seeded(args, report, lines))
    return 0


def _scalar_from_json(field, c):
    if isinstance(c, dict):
        return field.of(Fraction(int(c["num"]), int(c["den"])))
    if isinstance(c, int):
        return field.of(c)
    raise UsageError("bad coefficient %r in cochain file" % (c,))


def _load_cochain(path, A):
    try:
        data = json.loads(_read(path))
    except ValueError as exc:
        raise UsageError("bad cochain file %s: %s" % (path, exc))
    try:
        n = int(data["n"])
        parity = {"even": EVEN, "odd": ODD}[data["parity"]]
        table = {}
        for key, vec in data.get("table", {}).items():
            tup = tuple(int(x) for x in key.split(","))
            table[tup] = {
                int(r): _scalar_from_json(A.field, c) for r, c in vec.items()
            }
        f = Cochain(n, parity, table)
    except (KeyError, ValueError, TypeError) as exc:
        raise UsageError("bad cochain file %s: %s" % (path, exc))
    for tup in f.table:
        for i in tup:
            if not 0 <= i < A.dim:
                raise UsageError("cochain index %d out of range" % i)
    bad = cochain_parity_violations(f, A, A.parities)
    if bad:
        raise UsageError("cochain values not parity-homogeneous at %r" % (bad[0],))
    return f


def _cochain_json(f):
    table = {}
    for tup, vec in sorted(f.table.items()):
        table[",".join(str(i) for i in tup)] = {
            str(r): report_to_data(vec[r]) for r in sorted(vec)
        }
    return {"n": f.n, "parity": "odd" if f.parity == ODD else "even", "table": table}


def _cmd_hochschild(args):
    A = _load_algebra(args)
    M = _load_module(args, A)
    report = {"command": "hochschild", "algebra": {"name": A.name, "dim": A.dim}}
    lines = []
    clauses = []
    if args.cocycle is None:
        if args.build_api or args.classify:
            raise UsageError("--build-api and --classify need --cocycle")
        even, odd = sh_dim(A, M, args.n)
        report["module"] = {"name": M.name, "dim": M.dim}
        report["n"] = args.n
        report["sh_dim"] = {"even": even, "odd": odd}
        lines.append("sh-dim n=%d: %d|%d" % (args.n, even, odd))
    else:
        if args.n != 1:
            raise UsageError("cocycle checks need --n 1")
        pi = _load_cochain(args.cocycle, A)
        clauses = [
            {"id": "cocycle-is-odd", "ok": pi.parity == ODD and pi.n == 1},
            {"id": "cocycle-super-skew", "ok": is_super_skew(pi, A)},
            {"id": "cocycle-condition", "ok": is_cocycle_pi(pi, A)},
            {"id": "cocycle-in-c1-subcomplex", "ok": is_in_C(pi, A, regular_module(A))},
        ]
        report["n"] = args.n
        report["clauses"] = clauses
        lines += _clause_lines(clauses)
        ok = all(cl["ok"] for cl in clauses)
        if ok and args.build_api:
            R = build_A_pi(A, pi)
            sd = sdim(regular_module(R))
            report["extension"] = {"name": R.name, "dim": R.dim, "sdim": sd}
            lines.append("extension dim %d, super-dimension %s" % (R.dim, _sdim_text(sd)))
        if ok and args.classify:
            pi2 = _load_cochain(args.classify, A)
            f = adapted_equivalence(pi, pi2, A)
            if f is None:
                report["equivalent"] = False
                lines.append("not adapted-equivalent")
            else:
                report["equivalent"] = True
                report["certificate"] = _cochain_json(f)
                lines.append(
                    "adapted-equivalent (certificate with %d nonzero images)"
                    % len(f.table)
                )
    _emit(args, *_seeded(args, report, lines))
    if clauses and _fail_clauses(clauses):
        return 1
    return 0


def _cmd_corpus(args):
    field = _default_field(args)
    if args.case == "all":
        reports = corpus_all(field=field)
    else:
        reports = {args.case: corpus_report(args.case, field=field)}
    lines = []
    failed = False
    for case in sorted(reports):
        rep = reports[case]
        lines.append("--- %s" % case)
        lines += _clause_lines(rep["clauses"])
        lines.append("ok = %s" % ("true" if rep["ok"] else "false"))
        if _fail_clauses(rep["clauses"], prefix=case + "."):
            failed = True
    report = {"command": "corpus", "cases": reports}
    _emit(args, *_seeded(args, report, lines))
    return 1 if failed else 0


def _default_field(args):
    return field_from_name(args.field) if args.field else QQ


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="override field: q or f<p>")
    common.add_argument(
        "--format", choices=("text", "report"), default="text", help="output format"
    )
    common.add_argument("--seed", type=int, help="echoed sampling seed")

    p = argparse.ArgumentParser(
        prog="superdim",
        description="Krull super-dimension computations for finite-dimensional "
        "super-commutative algebras.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("sdim", parents=[common], help="super-dimension of a module")
    sp.add_argument("algebra")
    sp.add_argument("--module", help="module file (default: regular module)")
    sp.set_defaults(func=_cmd_sdim)

    sp = sub.add_parser(
        "odd-params", parents=[common], help="systems of odd parameters"
    )
    sp.add_argument("algebra")
    sp.add_argument("--module")
    sp.add_argument("--size", type=int, help="system length (default: longest)")
    sp.set_defaults(func=_cmd_odd_params)

    sp = sub.add_parser(
        "regular", parents=[common], help="regular-sequence and factoring checks"
    )
    sp.add_argument("algebra")
    sp.add_argument("--module", required=True)
    sp.add_argument("--elems", required=True, help="comma-separated odd elements")
    sp.set_defaults(func=_cmd_regular)

    sp = sub.add_parser(
        "gr", parents=[common], help="associated graded algebra and module"
    )
    sp.add_argument("algebra")
    sp.add_argument("--module")
    sp.add_argument(
        "--ideal", required=True, help="comma-separated elements, or odd-radical"
    )
    sp.add_argument("--bigraded", action="store_true")
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=_cmd_gr)

    sp = sub.add_parser(
        "hilbert", parents=[common], help="bigraded dimension table and growth fits"
    )
    sp.add_argument("algebra")
    sp.add_argument("--kmax", type=int, default=12)
    sp.add_argument("--lmax", type=int)
    sp.add_argument("--fit", action="store_true")
    sp.add_argument(
        "--special",
        action="store_true",
        help="input is a special bigraded algebra; label the result as the "
        "Krull super-dimension",
    )
    sp.set_defaults(func=_cmd_hilbert)

    sp = sub.add_parser(
        "hochschild", parents=[common], help="cochain complex computations"
    )
    sp.add_argument("algebra")
    sp.add_argument("--module")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cocycle", help="JSON cochain file")
    sp.add_argument("--build-api", action="store_true", dest="build_api")
    sp.add_argument("--classify", help="second JSON cochain file")
    sp.set_defaults(func=_cmd_hochschild)

    sp = sub.add_parser(
        "corpus", parents=[common], help="run the built-in verified examples"
    )
    sp.add_argument("--case", choices=CASES + ("all",), default="all")
    sp.set_defaults(func=_cmd_corpus)

    return p


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError, AlgebraError, ModuleError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
