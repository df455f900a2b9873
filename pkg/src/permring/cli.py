"""Command-line entry point: ``permring <command> --group S4 --subgroup stab:4 ...``."""
from __future__ import annotations

import argparse
import sys
from collections import Counter

from .config import load_config
from .errors import PermRingError
from .groups import all_subgroups, normal_core
from .gsets import coset_gset, count_equivariant_maps, product
from .oracle import (
    oracle_degree_stable,
    oracle_gmap_count,
    oracle_normal_core,
    oracle_product_orbits,
)
from .report import (
    SUBCOMMAND_FIELDS,
    emit,
    parse_group_spec,
    parse_subgroup_spec,
    run_report,
    select,
)
from .rings import Category, coset_ring, degree

DEFAULT_BATTERY = ["S3", "S4", "D4", "A4", "C2xC2"]


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", required=True, help="group spec, e.g. S4, C2xC2, perm:(1 2 3),(1 2)")
    p.add_argument("--subgroup", default="trivial",
                   help="gens:<cycles>, stab:<k>, sylow:<p>, core:<spec>, trivial, whole")
    p.add_argument("--prime", type=int, default=None)
    p.add_argument("--category", choices=["mod", "derived", "stable"], default="derived")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permring",
                                     description="Quasi-Galois analysis of permutation rings k(G/H).")
    parser.add_argument("--budget", type=int, default=None,
                        help="group order bound (default 10080, or $PERMRING_BUDGET)")
    parser.add_argument("--config", default=None, help="JSON file with order_bound / battery")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMAND_FIELDS:
        _add_common(sub.add_parser(name))
    sub.add_parser("selftest", help="run the oracle cross-check battery")
    return parser


def selftest(battery: list[str], order_bound: int | None, out=None) -> bool:
    """Cross-check primary computations against the oracles on every subgroup."""
    out = sys.stdout if out is None else out
    ok = True

    def line(name: str, passed: bool) -> None:
        nonlocal ok
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {name}", file=out)

    for text in battery:
        G = parse_group_spec(text, order_bound=order_bound).group
        subs = all_subgroups(G)
        core_ok = all(normal_core(G, H) == oracle_normal_core(G, H) for H in subs)
        line(f"{text}: normal core vs subgroup enumeration", core_ok)

        deg_ok = True
        for p in (2, 3):
            if G.order % p:
                continue
            for H in subs:
                R = coset_ring(Category.stable(p), G, H)
                deg_ok &= degree(R) == oracle_degree_stable(G, H, p)
        line(f"{text}: stable degree vs coset subset search", deg_ok)

        endo_ok = True
        for H in subs:
            X = coset_gset(G, H)
            if X.size ** X.size <= 10**6:
                endo_ok &= count_equivariant_maps(X, X) == oracle_gmap_count(X, X)
        line(f"{text}: endomorphism count vs map enumeration", endo_ok)

        mackey_ok = True
        for K in subs:
            for H in subs:
                XK, XH = coset_gset(G, K), coset_gset(G, H)
                P = product(XK, XH)
                mine = Counter((o.size, o.stabilizer.order) for o in P.orbits())
                mackey_ok &= mine == oracle_product_orbits(XK, XH)
        line(f"{text}: product orbits vs union-find scan", mackey_ok)
    return ok


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config) if args.config else {}
    except (OSError, ValueError) as exc:
        print(f"permring: error: cannot read config: {exc}", file=sys.stderr)
        return 2
    order_bound = args.budget if args.budget is not None else config.get("order_bound")

    try:
        if args.command == "selftest":
            ok = selftest(config.get("battery", DEFAULT_BATTERY), order_bound)
            return 0 if ok else 1
        spec = parse_group_spec(args.group, order_bound=order_bound)
        H = parse_subgroup_spec(args.subgroup, spec.group)
        if args.command == "endos" and args.category == "stable":
            raise PermRingError("endos: ring morphisms are only counted in mod and derived")
        report = run_report(spec, H, args.prime, args.category, with_oracle=args.oracle)
    except PermRingError as exc:
        print(f"permring: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(emit(select(report, args.command), args.format))
    if report.oracle is not None and not report.oracle["all_agree"]:
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
