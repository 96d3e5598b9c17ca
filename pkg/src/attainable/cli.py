"""Command line front end.

Every subcommand prints one JSON object per result (default) or tab separated
lines with ``--tsv``.  Exact integers and rationals are emitted as decimal
strings; heuristic floats only ever appear under a ``heuristic`` key.
Precondition violations exit with status 2 and a one-line message on stderr.
"""

import argparse
import json
import os
import sys

from . import bijection, class_group, enumeration, group_invariants, series
from .errors import PreconditionError
from .partitions import Partition, cyclicity_index

ENUMERATION_WARN_N = 60


def _fmt(lam):
    return ",".join(map(str, lam))


def _ints(tokens):
    out = []
    for tok in tokens:
        for piece in str(tok).replace(",", " ").split():
            try:
                out.append(int(piece))
            except ValueError:
                raise PreconditionError(f"not an integer: {piece!r}") from None
    return out


def _partition(tokens):
    parts = _ints(tokens)
    if not parts:
        raise PreconditionError("no partition parts given")
    bad = [x for x in parts if x < 1]
    if bad:
        raise PreconditionError(f"partition parts must be positive, got {bad[0]}")
    if parts != sorted(parts, reverse=True):
        lam = Partition(parts)
        print(f"warning: parts reordered to {_fmt(lam)}", file=sys.stderr)
        return lam
    return Partition(parts)


def _warn_enumeration(n):
    if n > ENUMERATION_WARN_N:
        print(
            f"warning: n={n} enumerates every partition of n; this grows exponentially",
            file=sys.stderr,
        )


def _constant(args):
    if args.constant is not None:
        return args.constant
    env = os.environ.get("ATTAINABLE_CONSTANT")
    if env:
        try:
            return float(env)
        except ValueError:
            raise PreconditionError(f"ATTAINABLE_CONSTANT is not a number: {env!r}") from None
    return group_invariants.DEFAULT_CONSTANT


class Emitter:
    def __init__(self, tsv, out=None):
        self.tsv = tsv
        self.out = out or sys.stdout

    def record(self, command, params, tsv_lines, **fields):
        if self.tsv:
            for line in tsv_lines:
                print(line, file=self.out)
        else:
            obj = {"command": command, "params": params}
            obj.update(fields)
            print(json.dumps(obj), file=self.out)


def cmd_cyclicity(args, emit):
    lam = _partition(args.parts)
    c = cyclicity_index(lam)
    emit.record(
        "cyclicity", {"partition": _fmt(lam)}, [str(c)],
        result=str(c), attainable=c >= 0,
    )


def cmd_attainable(args, emit):
    _warn_enumeration(args.n)
    found = enumeration.attainable_partitions(args.n) if args.n > 0 else []
    count = len(found) if args.n > 0 else 1
    fields = {"result": str(count)}
    lines = [str(count)]
    if args.list:
        fields["partitions"] = [_fmt(lam) for lam in found]
        lines = [_fmt(lam) for lam in found]
    emit.record("attainable", {"n": str(args.n), "list": args.list}, lines, **fields)


COUNTERS = {
    "a": enumeration.count_attainable,
    "z0": enumeration.count_zero_cyclicity,
    "z": enumeration.z,
}


def cmd_count(args, emit):
    _warn_enumeration(2 * args.n if args.sequence == "z" else args.n)
    value = COUNTERS[args.sequence](args.n)
    emit.record("count", {"sequence": args.sequence, "n": str(args.n)}, [str(value)], result=str(value))


SERIES = {
    "a": series.attainable_series,
    "z": series.triangular_series,
    "z0": series.zero_cyclicity_series,
}


def cmd_series(args, emit):
    s = SERIES[args.sequence](args.upto)
    emit.record(
        "series", {"sequence": args.sequence, "upto": str(args.upto)},
        [f"{i}\t{c}" for i, c in enumerate(s)],
        coefficients=[str(c) for c in s],
    )


def cmd_map(args, emit):
    if args.direction == "to-triangular":
        lam = _partition(args.values)
        T = bijection.zero_to_triangular(lam)
        text = _fmt(sorted(T.parts()))
        emit.record(
            "map", {"direction": args.direction, "partition": _fmt(lam)}, [text],
            result=text, total=str(T.total),
        )
    else:
        values = _ints(args.values)
        T = bijection.TriangularMultiset.from_parts(values)
        lam = bijection.triangular_to_zero(T)
        emit.record(
            "map", {"direction": args.direction, "triangulars": _fmt(sorted(values))},
            [_fmt(lam)], result=_fmt(lam), n=str(lam.n),
        )


def cmd_aut(args, emit):
    lam = _partition(args.parts)
    fac = group_invariants.aut_order_factored(args.p, lam)
    value = fac.value
    emit.record(
        "aut", {"p": str(args.p), "partition": _fmt(lam)}, [str(value)],
        result=str(value), exponent=str(fac.exponent),
        multiplicities=[[str(part), str(m)] for part, m in fac.unit_factors],
    )


def cmd_weight(args, emit):
    lam = _partition(args.parts)
    _warn_enumeration(lam.n)
    w = group_invariants.cohen_lenstra_weight(args.p, lam)
    emit.record(
        "weight", {"p": str(args.p), "partition": _fmt(lam)}, [str(w)],
        result=str(w), asymptotic_exponent=str(group_invariants.weight_asymptotic_exponent(lam)),
    )


def cmd_predict(args, emit):
    lam = _partition(args.parts)
    constant = _constant(args)
    c = cyclicity_index(lam)
    params = {"p": str(args.p), "partition": _fmt(lam), "constant": constant}
    if args.cumulative is not None:
        params["cumulative"] = args.cumulative
        pred = group_invariants.predicted_cumulative(lam, args.cumulative, constant)
    elif c == 0:
        raise PreconditionError("c(lambda) = 0: a prediction needs --cumulative x")
    else:
        pred = group_invariants.predicted_count(args.p, lam, constant)
    heuristic = {"kind": pred.kind, "value": pred.value}
    if pred.kind == "finite":
        heuristic["note"] = "finitely many primes expected"
    value_text = "finitely many expected" if pred.value is None else repr(pred.value)
    emit.record(
        "predict", params, [f"heuristic\t{pred.kind}\t{value_text}"],
        cyclicity=str(c), heuristic=heuristic,
    )


def cmd_classgroup(args, emit):
    D = args.D
    if D > 0:
        if not args.abs:
            raise PreconditionError(f"positive discriminant {D}; pass --abs to mean -{D}")
        D = -D
    structure = class_group.class_group_structure(D, fundamental=not args.nonfundamental)
    sylow = {str(q): _fmt(lam) for q, lam in structure.sylow.items()}
    lines = [f"{D}\t{structure.h}\t{q}\t{lam}" for q, lam in sylow.items()] or [f"{D}\t{structure.h}\t\t"]
    emit.record(
        "classgroup", {"D": str(D)}, lines,
        h=str(structure.h), sylow=sylow,
        invariants=[str(x) for x in structure.invariants()],
    )


def cmd_survey(args, emit):
    primes = _ints([args.primes])
    for p in primes:
        if p < 3 or not group_invariants.is_prime(p):
            raise PreconditionError(f"p must be an odd prime, got {p}")
    report = class_group.survey(args.D_from, args.D_to, primes, args.nmax, jobs=args.jobs)
    if emit.tsv:
        emit.out.write(report.to_tsv())
    else:
        obj = {"command": "survey", "params": {"from": str(args.D_from), "to": str(args.D_to)}}
        obj.update(report.to_json())
        print(json.dumps(obj), file=emit.out)


def _nonneg_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument("--json", dest="tsv", action="store_false", help="JSON lines (default)")
    group.add_argument("--tsv", dest="tsv", action="store_true", help="tab separated output")
    fmt.set_defaults(tsv=False)

    parser = argparse.ArgumentParser(
        prog="attainable", description="Attainable partitions and imaginary quadratic class groups."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cyclicity", parents=[fmt], help="cyclicity index of a partition")
    p.add_argument("parts", nargs="+")
    p.set_defaults(func=cmd_cyclicity)

    p = sub.add_parser("attainable", parents=[fmt], help="attainable partitions of n")
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_attainable)

    p = sub.add_parser("count", parents=[fmt], help="a(n), z0(n) or z(m) by enumeration")
    p.add_argument("sequence", choices=sorted(COUNTERS))
    p.add_argument("n", type=_nonneg_int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", parents=[fmt], help="generating function coefficients")
    p.add_argument("sequence", choices=sorted(SERIES))
    p.add_argument("--upto", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("map", parents=[fmt], help="cyclicity-0 partitions <-> triangular partitions")
    p.add_argument("direction", choices=["to-triangular", "to-zero"])
    p.add_argument("values", nargs="+")
    p.set_defaults(func=cmd_map)

    for name, func, text in [
        ("aut", cmd_aut, "order of Aut(G_lambda(p))"),
        ("weight", cmd_weight, "Cohen-Lenstra weight P(G_lambda(p))"),
        ("predict", cmd_predict, "heuristic count of fields with p-part G_lambda(p)"),
    ]:
        p = sub.add_parser(name, parents=[fmt], help=text)
        p.add_argument("p", type=int)
        p.add_argument("parts", nargs="+")
        p.set_defaults(func=func)
        if name == "predict":
            p.add_argument("--constant", type=float, default=None)
            p.add_argument("--cumulative", type=float, default=None, metavar="X")

    p = sub.add_parser("classgroup", parents=[fmt], help="class group of Q(sqrt(D)), D < 0")
    p.add_argument("D", type=int)
    p.add_argument("--abs", action="store_true", help="read a positive D as -D")
    p.add_argument("--nonfundamental", action="store_true", help="allow non-fundamental D")
    p.set_defaults(func=cmd_classgroup)

    p = sub.add_parser("survey", parents=[fmt], help="tally class groups over a discriminant range")
    p.add_argument("--from", dest="D_from", type=int, required=True)
    p.add_argument("--to", dest="D_to", type=int, required=True)
    p.add_argument("--primes", default="3")
    p.add_argument("--nmax", type=_nonneg_int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, Emitter(args.tsv))
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
