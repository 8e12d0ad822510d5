"""Command-line front end: ``smirnov-trees <command> ...``.

Structured output is JSON on stdout; ``--format text`` gives a compact
human-readable form where one makes sense.  Exit codes: 0 success, 1 a
check failed, 2 usage error or malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .algebra import partitions_of
from .bijection import (
    classify,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
    step_to_json,
    triple_from_json,
    triple_to_json,
    triple_weight,
    weight_to_json,
    wordsteps_from_json,
    wordsteps_to_json,
    wordsteps_weight,
)
from .bleeding import e_coefficient, enumerate_bleeding, g_truncated
from .bleeding import to_json as bleeding_json
from .bleeding import to_text as bleeding_text
from .core import (
    enumerate_smirnov_trees,
    enumerate_smirnov_words,
    enumerate_standard_trees,
    from_json,
    parse_tree,
    principal_data,
    to_json,
    to_text,
    tree_weight,
)
from .specializations import catalan, check_counting_identities, table_csv, table_json


class InputError(Exception):
    pass


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def _load(path):
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def _load_tree(args):
    try:
        if args.tree is not None:
            return parse_tree(args.tree)
        return from_json(_load(args.input))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _parse_partition(text):
    try:
        parts = tuple(int(p) for p in text.replace(" ", "").split(",") if p)
    except ValueError as exc:
        raise InputError(f"bad partition {text!r}") from exc
    if not parts or any(p < 1 for p in parts):
        raise InputError(f"bad partition {text!r}")
    return tuple(sorted(parts, reverse=True))


def _confirm(estimate, args):
    if estimate > checks.CONFIRM_THRESHOLD and not args.yes:
        sys.stderr.write(f"about {estimate} instances; rerun with --yes to proceed\n")
        raise InputError("sweep too large without --yes")


# -- commands --------------------------------------------------------------

def cmd_enumerate(args):
    kind = args.kind
    if kind == "words":
        _confirm(args.k * max(args.k - 1, 1) ** (args.n - 1), args)
        items = enumerate_smirnov_words(args.n, args.k)
        render_json, render_text = list, lambda w: "".join(map(str, w)) if args.k < 10 \
            else " ".join(map(str, w))
    elif kind in ("trees", "standard"):
        if kind == "trees":
            _confirm(catalan(args.n) * args.k ** args.n, args)
            items = enumerate_smirnov_trees(args.n, args.k)
        else:
            from math import factorial
            _confirm(catalan(args.n) * factorial(args.n), args)
            items = enumerate_standard_trees(args.n)
        render_json, render_text = to_json, to_text
    else:
        if args.pi is None:
            raise InputError("enumerate bleeding needs --pi")
        items = enumerate_bleeding(_parse_partition(args.pi))
        render_json, render_text = bleeding_json, bleeding_text
    if args.count:
        _emit({"count": sum(1 for _ in items)})
    elif args.format == "text":
        for it in items:
            sys.stdout.write(render_text(it) + "\n")
    else:
        _emit([render_json(it) for it in items])
    return 0


def _tree_out(t, args, extra=None):
    w = tree_weight(t)
    if args.format == "text":
        sys.stdout.write(to_text(t) + "\n" + str(w) + "\n")
        return
    out = {"tree": to_json(t), "text": to_text(t), "weight": weight_to_json(w),
           "principal_label": principal_data(t).a}
    out.update(extra or {})
    _emit(out)


def cmd_phi(args):
    try:
        T, S, b = triple_from_json(_load(args.input))
        case = classify(T, S, b)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    t = phi(T, S, b)
    _tree_out(t, args, {"case": case})
    return 0 if tree_weight(t) == triple_weight(T, S, b) else 1


def _step_text(S):
    return S if isinstance(S, str) else to_text(S)


def cmd_phi_inverse(args):
    t = _load_tree(args)
    try:
        tr = phi_inverse(t)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.format == "text":
        sys.stdout.write(f"{to_text(tr.T)} {_step_text(tr.S)} {tr.b}\n")
    else:
        out = triple_to_json(tr)
        out["case"] = classify(*tr)
        _emit(out)
    return 0


def cmd_psi(args):
    try:
        w, steps = wordsteps_from_json(_load(args.input))
        t = psi(w, steps)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _tree_out(t, args)
    return 0 if tree_weight(t) == wordsteps_weight(w, steps) else 1


def cmd_psi_inverse(args):
    t = _load_tree(args)
    try:
        ws = psi_inverse(t)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.format == "text":
        sys.stdout.write(" ".join(map(str, ws.w)) + " | "
                         + " ".join(_step_text(s) for s in ws.steps) + "\n")
    else:
        _emit(wordsteps_to_json(ws))
    return 0


def cmd_weight(args):
    if args.tree is not None:
        obj = None
    else:
        obj = _load(args.input)
    try:
        if obj is None or "label" in obj:
            w = tree_weight(_load_tree(args) if obj is None else from_json(obj))
        elif "w" in obj:
            w = wordsteps_weight(*wordsteps_from_json(obj))
        elif "T" in obj:
            w = triple_weight(*triple_from_json(obj))
        else:
            raise InputError("expected a tree, triple or word/steps object")
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from exc
    if args.format == "text":
        sys.stdout.write(str(w) + "\n")
    else:
        _emit(weight_to_json(w))
    return 0


def cmd_e_expansion(args):
    if args.pi is not None:
        parts = [_parse_partition(args.pi)]
    else:
        parts = [pi for n in range(1, args.max_degree + 1) for pi in partitions_of(n)]
    degree = max(sum(pi) for pi in parts)
    direct = g_truncated(degree) if args.method in ("enumerate", "both") else None
    rows, ok = [], True
    for pi in parts:
        row = {"partition": list(pi)}
        if args.method in ("bleeding", "both"):
            row["coeff"] = e_coefficient(pi).to_json()
        if direct is not None:
            c = direct.coefficient(pi)
            c = c.to_json() if c else []
            if args.method == "both":
                row["enumerated"] = c
                row["agree"] = c == row["coeff"]
                ok = ok and row["agree"]
            else:
                row["coeff"] = c
        rows.append(row)
    if args.format == "text":
        from .algebra import WeightPoly
        for row in rows:
            sys.stdout.write(f"e{row['partition']}: {WeightPoly.from_json(row['coeff'])}\n")
    else:
        _emit(rows)
    return 0 if ok else 1


def cmd_char_table(args):
    if args.n == 6 and not args.experimental:
        raise InputError("n = 6 is experimental; pass --experimental")
    if not 1 <= args.n <= 6:
        raise InputError("n must be between 1 and 6")
    omega = not args.no_omega
    grouped = not args.ungrouped
    if args.format == "json":
        sys.stdout.write(table_json(args.n, omega, grouped))
    else:
        sys.stdout.write(table_csv(args.n, omega, grouped))
    return 0


def cmd_identities(args):
    report = check_counting_identities(args.n_max)
    _emit(report)
    return 0 if report["ok"] else 1


def cmd_verify(args):
    which = args.which
    if which in ("bijection", "all"):
        _confirm(checks.bijection_instances(args.max_nodes, args.max_label,
                                            args.max_step_nodes), args)
    if which == "all":
        report = checks.verify_all(args.level, jobs=args.jobs)
    elif which == "bijection":
        report = checks.verify_bijection(args.max_nodes, args.max_label, args.max_step_nodes,
                                         jobs=args.jobs)
    elif which == "functional-eq":
        report = checks.verify_functional_eq(args.max_degree, args.max_label)
        psi_report = checks.verify_psi(args.max_degree, args.max_label)
        report = {"suite": "functional-eq", "ok": report["ok"] and psi_report["ok"],
                  "equation": report, "psi": psi_report}
    elif which == "e-positivity":
        report = checks.verify_e_positivity(args.max_degree)
    elif which == "gessel":
        report = checks.verify_gessel(args.max_degree)
    else:
        report = checks.verify_sw(args.max_degree)
    _emit(report)
    return 0 if report["ok"] else 1


# -- parser ----------------------------------------------------------------

def _add_format(p, choices=("json", "text")):
    p.add_argument("--format", choices=choices, default=choices[0])


def _add_tree_input(p):
    p.add_argument("--in", dest="input", default="-", help="JSON file, '-' for stdin")
    p.add_argument("--tree", help="tree in compact text form, e.g. 1(_,2)")


def build_parser():
    parser = argparse.ArgumentParser(prog="smirnov-trees",
                                     description="Smirnov trees: enumeration, bijections, "
                                                 "e-expansion and verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list words, trees, standard trees or bleeding trees")
    p.add_argument("kind", choices=["words", "trees", "standard", "bleeding"])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--pi", help="partition for bleeding trees, e.g. 3,2,1")
    p.add_argument("--count", action="store_true", help="print only the count")
    p.add_argument("--yes", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("phi", help="apply the insertion map to a triple")
    p.add_argument("--in", dest="input", default="-")
    _add_format(p)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("phi-inverse", help="recover the triple of a tree")
    _add_tree_input(p)
    _add_format(p)
    p.set_defaults(func=cmd_phi_inverse)

    p = sub.add_parser("psi", help="map a word with steps to a tree")
    p.add_argument("--in", dest="input", default="-")
    _add_format(p)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("psi-inverse", help="map a tree to its word with steps")
    _add_tree_input(p)
    _add_format(p)
    p.set_defaults(func=cmd_psi_inverse)

    p = sub.add_parser("weight", help="weight of a tree, triple or word with steps")
    _add_tree_input(p)
    _add_format(p)
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("e-expansion", help="coefficients of G in the e basis")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pi")
    g.add_argument("--max-degree", type=int)
    p.add_argument("--method", choices=["bleeding", "enumerate", "both"], default="bleeding")
    _add_format(p)
    p.set_defaults(func=cmd_e_expansion)

    p = sub.add_parser("char-table", help="character table of a degree-n slice")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--no-omega", action="store_true", help="skip the involution")
    p.add_argument("--ungrouped", action="store_true", help="one row per monomial")
    p.add_argument("--experimental", action="store_true", help="allow n = 6")
    _add_format(p, ("csv", "json"))
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("identities", help="counting identities for multilinear coefficients")
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("which", choices=["bijection", "functional-eq", "e-positivity", "gessel",
                                     "sw", "all"])
    p.add_argument("--level", choices=["desk"], default="desk")
    p.add_argument("--max-nodes", type=int, default=4)
    p.add_argument("--max-label", type=int, default=3)
    p.add_argument("--max-step-nodes", type=int, default=2)
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--yes", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
