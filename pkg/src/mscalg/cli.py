"""Command-line front end: every capability on MSC JSON files.

Results go to stdout (or ``--out``) as JSON.  Negative mathematical verdicts
are successful runs; exit codes signal only usage (2), validation (3) and
budget (4) failures.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .algebra import Msc, multiply
from .automorphisms import are_isomorphic, decide_trivial_aut
from .derivations import derivation_report
from .errors import BudgetExceeded, MscError, NotFiniteField, SearchExhausted, ValidationError
from .field import FieldSpec
from .simplicity import SimpleMethod, decide_simple

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_BUDGET = 0, 2, 3, 4
DEFAULT_BUDGET = 10**7


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _field(args) -> FieldSpec | None:
    return FieldSpec.from_name(args.field) if args.field else None


def _require_field(args) -> FieldSpec:
    F = _field(args)
    if F is None:
        raise UsageError("--field is required")
    return F


def _load(path: str | None, F: FieldSpec | None, flag: str = "--in") -> Msc:
    if not path:
        raise UsageError(f"{flag} is required")
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return Msc.loads(text, F)


def _vector(text: str | None, A: Msc, flag: str) -> list:
    if text is None:
        raise UsageError(f"{flag} is required")
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != A.n:
        raise ValidationError(f"{flag} needs {A.n} comma-separated scalars")
    return [A.F.parse(s) for s in parts]


def _samples(args):
    from .experiments import EXHAUSTIVE

    if args.samples is None or args.samples.lower() == EXHAUSTIVE:
        return EXHAUSTIVE
    try:
        return int(args.samples)
    except ValueError as exc:
        raise UsageError(f"--samples must be a count or {EXHAUSTIVE!r}") from exc


def _seed_required(args, why: str) -> int:
    if args.seed is None:
        raise UsageError(f"{why} needs an explicit --seed")
    return args.seed


def cmd_mul(args) -> dict:
    A = _load(args.inp, _field(args))
    u, v = _vector(args.u, A, "--u"), _vector(args.v, A, "--v")
    return {"product": [A.F.format(x) for x in multiply(A, u, v)]}


def cmd_der(args) -> dict:
    return derivation_report(_load(args.inp, _field(args)))


def cmd_aut(args) -> dict:
    return decide_trivial_aut(_load(args.inp, _field(args)), args.budget).to_json()


def cmd_simple(args) -> dict:
    A = _load(args.inp, _field(args))
    method = SimpleMethod(args.method) if args.method else None
    return decide_simple(A, method, args.budget).to_json()


def cmd_iso(args) -> dict:
    F = _field(args)
    A, B = _load(args.inp, F), _load(args.in2, F, "--in2")
    g = are_isomorphic(A, B, args.budget)
    return {"isomorphic": g is not None, "g": g.to_strings() if g is not None else None}


def cmd_construct(args) -> dict:
    from .construct import build_chain, tower_json

    F = _require_field(args)
    c = [F.parse(s.strip()) for s in args.c.split(",")]
    if len(c) != 4:
        raise ValidationError("--c needs four scalars a1,a2,a4,b1")
    rng = random.Random(args.seed) if args.seed is not None else None
    stages = build_chain(c, F, args.target_n, args.mode, rng, args.max_attempts, args.budget)
    return {"field": F.to_json(), "mode": args.mode, "stages": tower_json(stages)}


def _param_values(text: str | None) -> dict:
    out = {}
    for item in filter(None, (s.strip() for s in (text or "").split(","))):
        if "=" not in item:
            raise UsageError(f"--params items look like name=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def cmd_classify(args) -> dict:
    from .classify2d import instantiate, lookup, table

    F = _require_field(args)
    if args.property is None:
        raise UsageError("--property is required")
    try:
        if args.family:
            fam = lookup(args.family, F, args.property)
            values = {k: F.parse(v) for k, v in _param_values(args.params).items()}
            return {"family": fam.to_json(), "msc": instantiate(fam, values, F).to_json()}
        return {"field": F.to_json(), "property": args.property, "families": [f.to_json() for f in table(F, args.property)]}
    except LookupError as exc:
        raise UsageError(str(exc.args[0])) from exc


def cmd_audit(args) -> dict:
    from .classify2d import audit_completeness

    F = _require_field(args)
    if args.property is None:
        raise UsageError("--property is required")
    try:
        return audit_completeness(F, args.property, workers=args.workers, budget=args.budget).to_json()
    except LookupError as exc:
        raise UsageError(str(exc.args[0])) from exc


def cmd_density(args) -> dict:
    from .experiments import EXHAUSTIVE, density_scan, write_csv

    if not args.field:
        raise UsageError("--field is required")
    fields = [FieldSpec.from_name(s) for s in args.field.split(",")]
    samples = _samples(args)
    seed = None if samples == EXHAUSTIVE else _seed_required(args, "sampling")
    reports = [density_scan(F, args.n, samples, seed, workers=args.workers, budget=args.budget) for F in fields]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_csv(reports, fh)
    if len(reports) == 1:
        return reports[0].to_json()
    return {"reports": [r.to_json() for r in reports]}


def cmd_inclusion(args) -> dict:
    from .experiments import EXHAUSTIVE, inclusion_scan

    F = _require_field(args)
    samples = _samples(args)
    seed = None if samples == EXHAUSTIVE else _seed_required(args, "sampling")
    return inclusion_scan(F, args.n, samples, seed, workers=args.workers, budget=args.budget).to_json()


COMMANDS = {
    "mul": (cmd_mul, "product of two vectors"),
    "der": (cmd_der, "derivation algebra"),
    "aut": (cmd_aut, "trivial-automorphism verdict"),
    "simple": (cmd_simple, "simplicity verdict with certificate"),
    "iso": (cmd_iso, "isomorphism test with witness"),
    "construct": (cmd_construct, "extension chain from a 2-dim seed"),
    "classify": (cmd_classify, "2-dim classification tables and instances"),
    "audit": (cmd_audit, "exhaustive audit of a 2-dim table over GF(p)"),
    "density": (cmd_density, "property fractions over GF(p)"),
    "inclusion": (cmd_inclusion, "trivial-Aut versus trivial-Der scan over GF(p)"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mscalg", description="Exact computations on algebras given by structure constants.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--in", dest="inp", help="MSC JSON file")
        p.add_argument("--field", help="Q or GFp; overrides the field stored in the MSC file")
        p.add_argument("--seed", type=int)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--out", help="write the JSON result here instead of stdout")
        if name == "mul":
            p.add_argument("--u", help="comma-separated left factor")
            p.add_argument("--v", help="comma-separated right factor")
        if name == "simple":
            p.add_argument("--method", choices=[m.value for m in SimpleMethod])
        if name == "iso":
            p.add_argument("--in2", help="second MSC JSON file")
        if name == "construct":
            p.add_argument("--target-n", type=int, default=3)
            p.add_argument("--mode", choices=["TrivialOnly", "SimpleToo"], default="TrivialOnly")
            p.add_argument("--c", default="0,0,0,0", help="seed parameters a1,a2,a4,b1")
            p.add_argument("--max-attempts", type=int, default=1000)
        if name in ("classify", "audit"):
            p.add_argument("--property", help="TrivDer, TrivAut, Simple, Star, DerNotAut or AutNotDer")
        if name == "classify":
            p.add_argument("--family", help="family id, e.g. A_8 or A_{10,3}")
            p.add_argument("--params", help="name=value pairs, e.g. b1=2")
        if name in ("density", "inclusion"):
            p.add_argument("--samples", help="sample count or 'exhaustive' (default)")
            p.add_argument("--n", type=int, default=2)
        if name == "density":
            p.add_argument("--csv", help="also write a plot-ready CSV here")
    return parser


def _emit(result: dict, out: str | None) -> None:
    text = json.dumps(result, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Sequence[str] | None = None) -> int:
    """Execute one subcommand and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        func = COMMANDS[args.command][0]
        _emit(func(args), args.out)
        return EXIT_OK
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotFiniteField as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SearchExhausted as exc:
        print(f"search exhausted: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (MscError, ValueError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
