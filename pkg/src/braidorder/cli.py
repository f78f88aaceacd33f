"""Command-line entry point.

Braid words are passed as one quoted argument of whitespace-separated
integers. Words starting with a negative letter need ``--`` before them so
they are not read as options, e.g. ``braidorder sign --strands 3 -- "-1 2"``.

Exit codes: 0 success, 1 malformed arguments or input, 2 computation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import parse_braid
from .cluster import laurent_audit, mutate_sequence, positivity_audit, surface_preset
from .dehornoy import dehornoy_compare, dehornoy_sign, handle_reduce
from .experiments import SCHEMA_VERSION, experiment_order_positivity, lo_dimension
from .garside import left_normal_form, positive_decompose
from .invariants import braid_closure, braid_to_laurent, homfly, jones, writhe
from .laurent import canonical_text

__all__ = ["main", "build_parser", "UsageError"]


class UsageError(Exception):
    """Malformed command line; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidorder", description=__doc__.splitlines()[0])
    parser.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def braid_command(name, help, words=1):
        p = sub.add_parser(name, help=help)
        p.add_argument("--strands", type=int, required=True)
        for i in range(words):
            p.add_argument(f"word{i}" if words > 1 else "word", metavar="WORD")
        p.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)
        return p

    braid_command("sign", "Dehornoy sign of a braid")
    braid_command("compare", "compare two braids in the Dehornoy order", words=2)
    braid_command("normal-form", "Garside left normal form and positive decomposition")
    braid_command("jones", "Jones polynomial of the closure")
    braid_command("homfly", "HOMFLY polynomial of the closure")
    inv = braid_command("invariant", "closure invariant attached to a surface type")
    inv.add_argument("--surface", required=True, choices=["0,2", "1,1"])

    cluster = sub.add_parser("cluster", help="cluster seed mutation")
    csub = cluster.add_subparsers(dest="cluster_command", required=True, parser_class=_Parser)
    mut = csub.add_parser("mutate", help="mutate a surface seed along a sequence")
    mut.add_argument("--surface", required=True)
    mut.add_argument("--seq", default="", help="comma-separated 1-based directions")
    mut.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)
    aud = csub.add_parser("audit", help="Laurent / positivity audit of a surface seed")
    aud.add_argument("--surface", required=True)
    aud.add_argument("--depth", type=int, required=True)
    aud.add_argument("--check", choices=["laurent", "positivity"], default="laurent")
    aud.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)

    exp = sub.add_parser("experiment", help="empirical experiments")
    esub = exp.add_subparsers(dest="experiment", required=True, parser_class=_Parser)
    op = esub.add_parser("order-positivity", help="Dehornoy sign vs invariant positivity")
    op.add_argument("--strands", type=int, required=True, choices=[2, 3])
    op.add_argument("--max-len", type=int, required=True)
    op.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)

    lo = sub.add_parser("lo-dim", help="ambient dimension of LO(F_m)")
    lo.add_argument("m", type=int)
    lo.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)
    return parser


def _invariant_json(b, value) -> dict:
    d = braid_closure(b)
    return {
        "schema": SCHEMA_VERSION,
        "kind": value.kind,
        "poly": canonical_text(value.poly),
        "writhe": writhe(d),
        "components": d.component_count,
    }


def _parse_seq(text: str) -> list[int]:
    try:
        return [int(s) for s in text.replace(" ", "").split(",") if s]
    except ValueError:
        raise UsageError(f"malformed mutation sequence {text!r}") from None


def _run(args) -> dict | int:
    cmd = args.command
    if cmd in ("sign", "normal-form", "jones", "homfly", "invariant"):
        try:
            b = parse_braid(args.word, args.strands)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if cmd == "sign":
            s = dehornoy_sign(b)
            return {"schema": SCHEMA_VERSION, "verdict": s.verdict.value, "witness": s.witness.text()}
        if cmd == "normal-form":
            nf = left_normal_form(b)
            beta1, beta2 = positive_decompose(b)
            return {
                "schema": SCHEMA_VERSION,
                "strands": b.strands,
                "delta_power": nf.delta_power,
                "factors": [" ".join(map(str, f)) for f in nf.factors],
                "beta1": beta1.text(),
                "beta2": beta2.text(),
                "handle_reduced": handle_reduce(b).text(),
            }
        if cmd == "jones":
            return _invariant_json(b, jones(b))
        if cmd == "homfly":
            return _invariant_json(b, homfly(b))
        if b.strands != {"0,2": 2, "1,1": 3}[args.surface]:
            raise UsageError(f"surface {args.surface} needs {2 if args.surface == '0,2' else 3} strands")
        return _invariant_json(b, braid_to_laurent(b, args.surface))
    if cmd == "compare":
        try:
            a = parse_braid(args.word0, args.strands)
            b = parse_braid(args.word1, args.strands)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return {"schema": SCHEMA_VERSION, "relation": dehornoy_compare(a, b).value}
    if cmd == "cluster":
        try:
            seed = surface_preset(args.surface)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.cluster_command == "mutate":
            seq = _parse_seq(args.seq)
            if any(not 1 <= k <= seed.rank for k in seq):
                raise UsageError(f"directions must lie in 1..{seed.rank}")
            trace = mutate_sequence(seed, seq, source=args.surface)
            return {"schema": SCHEMA_VERSION, "surface": args.surface, "sequence": seq, **trace.seeds[-1].to_json()}
        if args.depth < 0:
            raise UsageError("depth must be >= 0")
        audit = positivity_audit if args.check == "positivity" else laurent_audit
        return {"schema": SCHEMA_VERSION, "surface": args.surface, **audit(seed, args.depth).to_json()}
    if cmd == "experiment":
        if args.max_len < 0:
            raise UsageError("--max-len must be >= 0")
        return experiment_order_positivity(args.strands, args.max_len).to_json()
    if cmd == "lo-dim":
        if args.m < 2:
            raise UsageError("m must be >= 2")
        return lo_dimension(args.m)
    raise UsageError(f"unknown command {cmd}")  # pragma: no cover


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result = _run(args)
    except UsageError as exc:
        print(f"braidorder: error: {exc}", file=sys.stderr)
        return 1
    except (RuntimeError, ArithmeticError, ValueError) as exc:
        print(f"braidorder: computation failed: {exc}", file=sys.stderr)
        return 2
    text = str(result) if isinstance(result, int) else json.dumps(result, indent=2)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
