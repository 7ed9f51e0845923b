"""Command-line entry point.

Exit status: 0 when the property holds or the task completed, 1 when it
fails (certificate on stdout), 2 for usage or format errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import bounds, family, holtklee, pairseq, shelling
from ._parallel import THREADS_ENV, default_threads, parallel_map
from .polytope import FormatError, parse_orientation
from .realize import (
    BadSequence,
    induced_sequence,
    parse_realization,
    realize,
    verify_crosspolytope,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _fraction(p, q):
    f = Fraction(p, q) if q else Fraction(0)
    return f"{f.numerator}/{f.denominator}"


# ---------------------------------------------------------------------------
# subcommands; each returns (exit status, text)
# ---------------------------------------------------------------------------

def cmd_check_hk(args):
    o = parse_orientation(_read(args.file))
    v = holtklee.is_holt_klee(o)
    return (0 if v.passed else 1), v.line(o) + "\n"


def _family_passes(args):
    n, index = args
    o = family.build_family_orientation(family.FamilyAssignment.from_index(n, index))
    return holtklee.is_holt_klee(o).passed


def cmd_family(args):
    n = args.n
    if args.sweep:
        total = 1 << family.family_size_log2(n)
        res = parallel_map(_family_passes, [(n, i) for i in range(total)], args.threads)
        ok = sum(res)
        return (0 if ok == total else 1), f"{ok}/{total}\n"
    bits = args.bits.strip()
    if set(bits) - {"0", "1"}:
        raise UsageError("--bits takes a 0/1 string")
    try:
        a = family.FamilyAssignment(n, tuple(int(b) for b in bits))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0, family.build_family_orientation(a).to_text()


def cmd_pairseq(args):
    if args.action == "encode":
        o = parse_orientation(_read(args.arg))
        try:
            return 0, f"{pairseq.encode(o)}\n"
        except pairseq.CyclicOrientationError as exc:
            cyc = ",".join(str(v) for v in exc.cycle.vertices)
            return 1, f"cyclic cycle={cyc}\n"
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.action == "good":
        s = pairseq.parse_sequence(args.arg)
        v = pairseq.is_good(s)
        return (0, "good\n") if v.good else (1, f"bad break k={v.break_k}\n")
    d = _int(args.arg)
    if args.action == "count":
        return 0, f"{pairseq.count_good(d)}\n"
    if not 1 <= d <= pairseq.CENSUS_MAX_D:
        raise UsageError(f"census needs 1 <= d <= {pairseq.CENSUS_MAX_D}")
    return 0, pairseq.count_lp_orientations_bruteforce(d, args.threads).report()


def _int(text):
    try:
        v = int(text)
    except ValueError:
        raise UsageError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise UsageError("expected a positive integer")
    return v


def cmd_realize(args):
    s = pairseq.parse_sequence(args.seq)
    try:
        rz = realize(s)
    except BadSequence as exc:
        return 1, f"BadSequence break k={exc.break_k}\n"
    text = rz.to_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        return 0, f"wrote {args.out}\n"
    return 0, text


def cmd_verify(args):
    rz = parse_realization(_read(args.file))
    res = verify_crosspolytope(rz.points)
    if not res:
        tr = ",".join(str(j) for j in res.failure)
        return 1, f"FAIL reason={res.reason.replace(' ', '_')} transversal={tr}\n"
    try:
        seq = induced_sequence(rz)
    except ValueError:
        return 0, f"OK facets={len(res.facets)} sequence=tied\n"
    return 0, f"OK facets={len(res.facets)} sequence={seq}\n"


def _shelling_chunk(args):
    return shelling.count_shellings(*args)


def cmd_shelling(args):
    if args.action == "census":
        n = _int(args.arg)
        facets = [s * i for i in range(1, n + 1) for s in (1, -1)]
        parts = parallel_map(_shelling_chunk, [(n, f) for f in facets], args.threads)
        acc = sum(a for a, _ in parts)
        tot = sum(t for _, t in parts)
        return 0, f"accepted total\n{acc} {tot}\n"
    fo = shelling.parse_ordering(args.arg)
    if args.action == "check":
        s = shelling.ordering_to_sequence(fo)
        v = pairseq.is_good(s)
        if v.good:
            return 0, f"shelling sequence={s}\n"
        return 1, f"not_shelling sequence={s} break k={v.break_k}\n"
    try:
        return 0, shelling.line_shelling_witness(fo).to_text()
    except shelling.NotAShelling as exc:
        return 1, f"{exc}\n"


def cmd_bounds(args):
    try:
        c = Fraction(args.c)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad constant {args.c!r}") from None
    if c <= 0:
        raise UsageError("--c must be positive")
    lines = [f"# c={c}",
             "# note: upper bound counts 2n*2^n sign polynomials, twice the edge count; the slack is immaterial",
             "n lower_log2 upper_log2 gap"]
    for rep in bounds.scan(c, _int(str(args.scan))):
        lines.append(f"{rep.n} {rep.lower_log2} {float(rep.upper_log2):.6f} {float(rep.gap):.6f}")
    return 0, "\n".join(lines) + "\n"


def build_parser():
    p = _Parser(prog="lporient", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=None,
                   help=f"worker processes (default ${THREADS_ENV} or 1)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("check-hk", help="Holt-Klee check of an orientation file")
    q.add_argument("file")
    q.set_defaults(func=cmd_check_hk)

    q = sub.add_parser("family", help="cube family orientation or sweep")
    q.add_argument("--n", type=int, required=True)
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--bits")
    g.add_argument("--sweep", action="store_true")
    q.set_defaults(func=cmd_family)

    q = sub.add_parser("pairseq", help="encode, good, count, census")
    q.add_argument("action", choices=["encode", "good", "count", "census"])
    q.add_argument("arg")
    q.set_defaults(func=cmd_pairseq)

    q = sub.add_parser("realize", help="exact realization of a good pair sequence")
    q.add_argument("seq")
    q.add_argument("--out")
    q.set_defaults(func=cmd_realize)

    q = sub.add_parser("verify", help="verify a realization file")
    q.add_argument("file")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("shelling", help="check, census, witness")
    q.add_argument("action", choices=["check", "census", "witness"])
    q.add_argument("arg")
    q.set_defaults(func=cmd_shelling)

    q = sub.add_parser("bounds", help="bound table")
    q.add_argument("--c", default="1")
    q.add_argument("--scan", type=int, required=True)
    q.set_defaults(func=cmd_bounds)
    return p


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.threads is None:
            args.threads = default_threads()
        elif args.threads < 1:
            raise UsageError("--threads must be positive")
        status, text = args.func(args)
    except (UsageError, FormatError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    out.write(text)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
