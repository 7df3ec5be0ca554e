"""Command-line entry point: `peaklab verify`, `peaklab list-checks` and a few
subcommands that expose the underlying computations."""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .combinatorics import Partition, format_partition, parse_partition
from .group_algebra import ClassFunction, left_ideal_character
from .idempotents import eulerian_A, eulerian_B, peak_idempotents
from .series import equivariant_series, format_series
from .symfunc import character, schur_to_json, to_schur
from .vg.characters import component_basis, flat_orbit, sign_averaged_character, subspace_character
from .vg.fixed import NotStandard, fixed_basis, gamma_monomial, pairing_factors, pairing_steps
from .vg.polynomial import format_monomial, mono_mul, parse_monomial
from .vg.rings import RingSpec, bigraded_hilbert_series, hilbert_series, standard_basis

EXIT_USAGE = 2


def _add_verify(sub) -> None:
    p = sub.add_parser("verify", help="run verification checks and write a report")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--all", action="store_true", help="run every registered check over its default range")
    which.add_argument("--check", metavar="ID", help="run one check")
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--out", default="-", help="report path ('-' for stdout)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--threads", type=int, help="worker threads (default: $PEAKLAB_THREADS or 1)")
    p.add_argument("--no-timing", action="store_true", help="record 0 ms so reports are byte-identical")


def _cmd_verify(args) -> int:
    timing = not args.no_timing
    if args.all:
        if args.n_min is not None or args.n_max is not None:
            print("--n-min/--n-max need --check", file=sys.stderr)
            return EXIT_USAGE
        records = checks.run_all(threads=args.threads, timing=timing)
    else:
        records = checks.run_check(args.check, args.n_min, args.n_max, threads=args.threads, timing=timing)
    return checks.emit_report(records, args.out, args.format)


def _cmd_list(args) -> int:
    for spec in checks.list_checks():
        print(f"{spec.id:28} crit {spec.criterion:<2} n={spec.n_min}..{spec.n_max} cap {spec.cap:<2} {spec.description}")
    return 0


def _spec(args) -> RingSpec:
    return RingSpec.parse(args.n, args.spec)


def _cmd_basis(args) -> int:
    if args.spec == "fixed":
        basis = fixed_basis(args.n)
    else:
        basis = standard_basis(_spec(args))
    for m in basis:
        print(format_monomial(m))
    return 0


def _cmd_hilb(args) -> int:
    spec = _spec(args)
    if args.bigraded:
        series = bigraded_hilbert_series(spec)
        print(format_series(series, t="t", q="s"))
    else:
        coeffs = hilbert_series(spec)
        print(" + ".join(_term(c, k) for k, c in enumerate(coeffs) if c))
    return 0


def _term(c: int, k: int) -> str:
    if k == 0:
        return str(c)
    power = "t" if k == 1 else f"t^{k}"
    return power if c == 1 else f"{c}{power}"


def _cmd_idem(args) -> int:
    if args.family == "eulerian-a":
        fam = eulerian_A(args.n)
    elif args.family == "eulerian-b":
        fam = eulerian_B(args.n)
    else:
        fam = peak_idempotents(args.n)
    out = {}
    for k, e in enumerate(fam):
        if args.k is not None and k != args.k:
            continue
        entry = e.to_json()
        if args.character and e.group == "S":
            entry["character"] = left_ideal_character(e, check=False).to_json()
        out[str(k)] = entry
    print(json.dumps(out, indent=2))
    return 0


def _cmd_char(args) -> int:
    n = args.n
    if args.lie is not None:
        # k = n - odd(lam) is the total degree, l = n - len(lam) the vw-degree
        k, l = args.lie
        f = equivariant_series(n).as_dict().get((k // 2, l)) if k % 2 == 0 else None
        chi = character(f, n) if f is not None else ClassFunction(n, {})
        coeffs = to_schur(f) if f is not None else {}
        print(json.dumps({"bidegree": [k, l], "character": chi.to_json(), **schur_to_json(coeffs)}, indent=2))
        return 0
    spec = RingSpec.parse(n, args.spec)
    mu = parse_partition(args.flat) if args.flat else None
    if mu is None:
        print("char needs --flat or --lie", file=sys.stderr)
        return EXIT_USAGE
    basis = component_basis(spec, flat_orbit(mu))
    if args.fixed:
        chi = sign_averaged_character(basis, spec)
    else:
        chi = subspace_character(basis, spec)
    print(json.dumps({"flat": format_partition(Partition(mu)), "character": chi.to_json()}, indent=2))
    return 0


def _cmd_pairing(args) -> int:
    m = parse_monomial(args.monomial)
    if any(v[0] != "t" or max(v[1:]) > args.n for v, _ in m):
        print(f"error: {args.monomial} is not a monomial in t_ij with indices at most {args.n}", file=sys.stderr)
        return EXIT_USAGE
    try:
        factors = pairing_factors(m)
    except NotStandard as exc:
        print(f"error: {exc}", file=sys.stderr)
        if args.steps:
            for case, pair, q in pairing_steps(m):
                print(f"  {case} {pair} {format_monomial(q)}", file=sys.stderr)
        return 1
    image = gamma_monomial(_product(factors))
    print(" * ".join(format_monomial(f) for f in factors))
    if args.steps:
        for case, pair, q in pairing_steps(m):
            print(f"  {case} {pair} {format_monomial(q)}")
    if image != m:
        print(f"gamma does not invert: {format_monomial(image)}", file=sys.stderr)
        return 1
    return 0


def _product(factors):
    out = ()
    for f in factors:
        out = mono_mul(out, f)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="peaklab", description="Exact checks for peak idempotents and Varchenko-Gelfand rings.")
    sub = parser.add_subparsers(dest="command", required=True)
    _add_verify(sub)
    sub.add_parser("list-checks", help="list registered checks and their caps")

    p = sub.add_parser("basis", help="print a standard monomial basis")
    p.add_argument("--spec", required=True, help="a-t, b-u, b-vw, b-vw-gr or fixed")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("hilb", help="print a Hilbert series")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bigraded", action="store_true", help="(total degree t, vw-degree s); vw presentations only")

    p = sub.add_parser("idem", help="print an idempotent family as JSON")
    p.add_argument("--family", choices=("eulerian-a", "eulerian-b", "peak"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--character", action="store_true", help="add the left ideal character (S_n families)")

    p = sub.add_parser("char", help="characters of ring components or of the equivariant series")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--spec", default="b-vw")
    p.add_argument("--flat", help="flat orbit partition, e.g. 3,1")
    p.add_argument("--fixed", action="store_true", help="sign-change-invariant part (type B)")
    p.add_argument("--lie", type=int, nargs=2, metavar=("K", "L"), help="bidegree (k, l) of the equivariant series")

    p = sub.add_parser("pairing", help="apply the pairing map to a standard type A monomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--monomial", required=True, help="e.g. t12*t23")
    p.add_argument("--steps", action="store_true")
    return parser


_COMMANDS = {
    "verify": _cmd_verify,
    "list-checks": _cmd_list,
    "basis": _cmd_basis,
    "hilb": _cmd_hilb,
    "idem": _cmd_idem,
    "char": _cmd_char,
    "pairing": _cmd_pairing,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except checks.UnknownCheck as exc:
        print(f"error: unknown check {exc.args[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    except (checks.CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
