"""Command-line front end.

Commands: info, weights, betti, ip, eqseries, koszul-tables, deligne,
example, validate.  Fan arguments accept a JSON file path or the
``example:<name>`` scheme for catalogue fans.  Exit codes: 0 success,
1 validation error, 2 internal inconsistency.
"""

import argparse
import json
import sys

from .catalogue import BASE_NAMES, builtin_example
from .deligne import (CompletionPair, e1_table, euler_consistency,
                      pair_from_dict, pair_to_dict)
from .errors import (InternalInconsistency, NotSimplicial, ValidationError)
from .fan import fan_from_dict, fan_to_dict
from .koszul import weight_table
from .poincare import ip_cld, ip_equivariant_series
from .render import (render_betti, render_consistency, render_e1_table,
                     render_info, render_koszul_tables, render_polynomial,
                     render_series, render_weight_table)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage problems are user errors, not internal ones
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from exc


def _load_fan(spec):
    if spec.startswith("example:"):
        obj = builtin_example(spec[len("example:"):])
        if isinstance(obj, CompletionPair):
            raise ValidationError(
                f"{spec} names a completion pair; use the deligne command")
        return obj
    return fan_from_dict(_load_json(spec))


def _load_pair(spec):
    if spec.startswith("example:"):
        obj = builtin_example(spec[len("example:"):])
        if not isinstance(obj, CompletionPair):
            raise ValidationError(f"{spec} is a fan, not a completion pair")
        return obj
    return pair_from_dict(_load_json(spec))


def build_parser():
    parser = _Parser(prog="toricweights",
                     description="Weight-graded cohomology of toric varieties "
                                 "from rational fans, in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default="text")
        return p

    p = add("info", "classification and f-vector of a fan")
    p.add_argument("fan")
    p = add("weights", "weight table Gr^W of the fan's variety")
    p.add_argument("fan")
    p.add_argument("--prime", type=int, default=None,
                   help="also print the eigenvalue p^l per entry")
    p = add("betti", "Betti numbers (row sums of the weight table)")
    p.add_argument("fan")
    p = add("ip", "virtual Poincare polynomial")
    p.add_argument("fan")
    p = add("eqseries", "equivariant Betti series")
    p.add_argument("fan")
    p.add_argument("--cutoff", type=int, default=10)
    p = add("koszul-tables", "second and third page of the weight "
                             "spectral sequence")
    p.add_argument("fan")
    p.add_argument("--cutoff", type=int, default=8,
                   help="largest displayed column")
    p = add("deligne", "boundary spectral sequence first page of a "
                       "completion pair, with consistency check")
    p.add_argument("pair")
    p = add("example", "print a catalogue fan (or pair) as JSON")
    p.add_argument("name", help="one of: " + ", ".join(BASE_NAMES))
    p = add("validate", "validate a fan file")
    p.add_argument("fan")
    return parser


def run(args):
    fmt = args.format
    if args.command == "info":
        print(render_info(_load_fan(args.fan), fmt))
    elif args.command == "weights":
        fan = _load_fan(args.fan)
        if args.prime is not None and args.prime <= 1:
            raise ValidationError("--prime must exceed 1")
        try:
            table = weight_table(fan)
        except NotSimplicial:
            raise NotSimplicial(
                "fan is not simplicial; the weight table model does not "
                "apply (use the ip command for the Euler characteristic)")
        print(render_weight_table(table, fmt, prime=args.prime))
    elif args.command == "betti":
        fan = _load_fan(args.fan)
        try:
            table = weight_table(fan)
        except NotSimplicial:
            raise NotSimplicial(
                "fan is not simplicial; Betti numbers need the weight "
                "table (use the ip command instead)")
        print(render_betti(table, fmt))
    elif args.command == "ip":
        print(render_polynomial(ip_cld(_load_fan(args.fan)), fmt))
    elif args.command == "eqseries":
        if args.cutoff < 0:
            raise ValidationError("--cutoff must be nonnegative")
        print(render_series(ip_equivariant_series(_load_fan(args.fan),
                                                  args.cutoff), fmt))
    elif args.command == "koszul-tables":
        fan = _load_fan(args.fan)
        if args.cutoff < 0:
            raise ValidationError("--cutoff must be nonnegative")
        print(render_koszul_tables(fan, fmt, max_column=args.cutoff))
    elif args.command == "deligne":
        pair = _load_pair(args.pair)
        table = e1_table(pair)
        reports = euler_consistency(pair)
        if fmt == "text":
            print("E1")
            print(render_e1_table(table, fmt))
            print("euler consistency:")
            print(render_consistency(reports, fmt))
        elif fmt == "json":
            e1_json = json.loads(render_e1_table(table, fmt))
            cons = json.loads(render_consistency(reports, fmt))
            e1_json["consistency"] = cons["weights"]
            print(json.dumps(e1_json, sort_keys=True))
        else:
            print(render_e1_table(table, fmt))
            print(render_consistency(reports, fmt))
        if not all(r.ok for r in reports):
            raise InternalInconsistency(
                "per-weight Euler characteristics disagree")
    elif args.command == "example":
        obj = builtin_example(args.name)
        if isinstance(obj, CompletionPair):
            print(json.dumps(pair_to_dict(obj), sort_keys=True))
        else:
            print(json.dumps(fan_to_dict(obj), sort_keys=True))
    elif args.command == "validate":
        fan = _load_fan(args.fan)
        print("valid fan: " + render_info(fan, "text"))
    return 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return run(args)
    except InternalInconsistency as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
