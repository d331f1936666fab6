"""Command line entry point: ``globalweyl {dim,tuples,qelem,image,verify}``."""

from __future__ import annotations

import argparse
import json
import sys

from . import basis as wb
from . import verify as V
from .algebra import AlgebraError, algebra_from_literal
from .envelope import u_to_json
from .multiset import MultisetError, parse_literal, parse_tuple
from .qconstruct import q_single, q_tuple
from .symtensor import sym_dim, tensor_to_json


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="globalweyl",
                                description="Bases of global Weyl modules W_A(m omega_1) for sl_n (x) A.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, m=True):
        sp.add_argument("--n", type=int, required=True)
        if m:
            sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--algebra", default="trunc:1", help="trunc:N or file:PATH")
        sp.add_argument("--format", choices=("json", "text"), default="json")

    common(sub.add_parser("dim", help="dimension of S^m(V (x) A)"))
    common(sub.add_parser("tuples", help="index tuples of the basis"))

    q = sub.add_parser("qelem", help="q_i(phi, chi) or q(tuple) as UElement JSON")
    common(q, m=False)
    q.add_argument("--i", type=int)
    q.add_argument("--phi")
    q.add_argument("--chi")
    q.add_argument("--tuple")

    im = sub.add_parser("image", help="q(tuple) applied to (v_1 (x) 1)^m")
    common(im, m=False)
    im.add_argument("--tuple", required=True)

    v = sub.add_parser("verify", help="run lemma suites")
    common(v, m=False)
    v.add_argument("--m", type=int, default=1)
    v.add_argument("--suite", choices=V.SUITES, default="all")
    v.add_argument("--bound", type=int, default=V.DEFAULT_BOUND,
                   help="max |phi|+|chi| for the per-lemma suites")
    v.add_argument("--max-size", type=int, default=None,
                   help=f"sym_dim guard for the basis suite (default {wb.DEFAULT_GUARD})")
    v.add_argument("--timing", action="store_true", help="include duration_ms in reports")
    v.add_argument("--replay", metavar="FILE", help="replay a counterexample payload (JSON)")
    return p


def _emit(obj, fmt: str, text: str | None = None):
    if fmt == "text" and text is not None:
        print(text)
    else:
        print(json.dumps(obj, indent=2))


def _check_n(n):
    if n < 2:
        raise UsageError("--n must be >= 2")


def _cmd_dim(args, spec):
    _check_n(args.n)
    if args.m < 0:
        raise UsageError("--m must be >= 0")
    d = sym_dim(args.n, spec.dim, args.m)
    _emit(d, args.format, str(d))
    return 0


def _cmd_tuples(args, spec):
    _check_n(args.n)
    lits = [wb.tuple_literal(p, spec) for p in wb.enumerate_tuples(args.n, spec, args.m)]
    _emit(lits, args.format, "\n".join(lits))
    return 0


def _parse_parts(text, n, spec):
    parts = parse_tuple(text, spec.label_map())
    if len(parts) != n:
        raise UsageError(f"--tuple has {len(parts)} parts, expected {n}")
    return parts


def _cmd_qelem(args, spec):
    _check_n(args.n)
    if args.tuple is not None:
        u = q_tuple(_parse_parts(args.tuple, args.n, spec), spec)
    else:
        if args.i is None or args.phi is None or args.chi is None:
            raise UsageError("qelem needs --i, --phi and --chi (or --tuple)")
        if not 1 <= args.i <= args.n - 1:
            raise UsageError(f"--i must be in 1..{args.n - 1}")
        labels = spec.label_map()
        u = q_single(args.i, parse_literal(args.phi, labels), parse_literal(args.chi, labels), spec, n=args.n)
    _emit(u_to_json(u), args.format, repr(u))
    return 0


def _cmd_image(args, spec):
    _check_n(args.n)
    parts = _parse_parts(args.tuple, args.n, spec)
    m = sum(p.size for p in parts)
    t = wb.basis_image(parts, args.n, m, spec)
    _emit(tensor_to_json(t), args.format, repr(t))
    return 0


def _report_text(rep: V.SuiteReport) -> str:
    lines = [f"[{'PASS' if rep.passed else 'FAIL'}] {rep.suite} {rep.params} "
             f"({len(rep.cases)} cases, {len(rep.failures())} failed)"]
    for c in sorted(rep.failures(), key=lambda c: c.key):
        lines.append(f"    FAIL {c.key}")
    return "\n".join(lines)


def _cmd_verify(args, spec):
    if args.replay:
        with open(args.replay) as fh:
            payload = json.load(fh)
        ok = V.run_case(payload)
        _emit({"replay": payload.get("suite"), "pass": ok}, args.format, "PASS" if ok else "FAIL")
        return 0 if ok else 1
    _check_n(args.n)
    if args.m < 0:
        raise UsageError("--m must be >= 0")
    reports = V.run_suite(args.suite, args.n, args.m, spec, args.bound, args.max_size)
    ok = all(r.passed for r in reports)
    obj = {"pass": ok, "suites": [r.to_json(timing=args.timing) for r in reports]}
    _emit(obj, args.format, "\n".join(_report_text(r) for r in reports))
    for r in reports:
        if not r.passed:
            print(f"{r.suite}: {len(r.failures())} of {len(r.cases)} cases failed", file=sys.stderr)
    return 0 if ok else 1


COMMANDS = {"dim": _cmd_dim, "tuples": _cmd_tuples, "qelem": _cmd_qelem,
            "image": _cmd_image, "verify": _cmd_verify}


_LITERAL_FLAGS = ("--phi", "--chi", "--tuple")


def _attach_literals(argv):
    """Rewrite ``--tuple -;t:1`` as ``--tuple=-;t:1`` so argparse does not read a flag."""
    out, it = [], iter(argv)
    for tok in it:
        if tok in _LITERAL_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run_cli(argv=None) -> int:
    parser = _parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_attach_literals(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        spec = algebra_from_literal(args.algebra)
        return COMMANDS[args.command](args, spec)
    except (UsageError, MultisetError, AlgebraError, wb.GuardError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
