"""Command-line entry point.

Exit codes: 0 success, 1 a verification failed (report on stdout), 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from spbrsk import bridge
from spbrsk.brsk import NotchedTableauPair, brsk, brsk_inverse
from spbrsk.errors import InvalidInputError, NotInvertibleError
from spbrsk.grid import GRID_KINDS, Monomial, build_grids, grid_cells, iter_corpus
from spbrsk.order import IndexSet, StandardTableau, iter_I_d, iter_I_rn
from spbrsk.peel import pi_tilde
from spbrsk import verify


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def parse_index_set(text: str, d: int | None) -> IndexSet:
    try:
        entries = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse index set {text!r}") from exc
    d = d or len(entries)
    if len(entries) != d:
        raise InvalidInputError(f"{text!r} does not have {d} entries")
    return IndexSet.of(entries, 2 * d)


def _read_json(text: str):
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"malformed JSON: {exc}") from exc


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    return value


def _v(args) -> IndexSet:
    return parse_index_set(_need(args, "v"), args.d)


def _monomial(args) -> Monomial:
    data = _read_json(_need(args, "monomial"))
    v = parse_index_set(args.v, args.d) if args.v is not None else None
    return Monomial.from_json(data, v)


def cmd_grid(args) -> int:
    v = _v(args)
    if args.grid == "all":
        grids = build_grids(v)
    else:
        grids = {args.grid: grid_cells(v, args.grid)}
    print(_dump({k: [list(c) for c in cells] for k, cells in grids.items()}))
    return 0


def cmd_brsk(args) -> int:
    if args.inverse:
        v = _v(args)
        t = NotchedTableauPair.from_json(_read_json(_need(args, "tableau")))
        print(_dump(brsk_inverse(t, v).to_json()))
    else:
        print(_dump(brsk(_monomial(args)).to_json()))
    return 0


def cmd_pitilde(args) -> int:
    print(_dump(pi_tilde(_monomial(args)).to_json()))
    return 0


def cmd_eta(args) -> int:
    v = _v(args)
    T = StandardTableau.from_json(_read_json(_need(args, "tableau")), len(v))
    print(_dump(bridge.eta(T, v).to_json()))
    return 0


def _max_degree(args) -> int:
    value = args.max_m if args.max_m is not None else args.max_degree
    if value is None:
        raise UsageError("--max-m (or --max-degree) is required")
    return value


def cmd_hilbert(args) -> int:
    v = _v(args)
    w = parse_index_set(_need(args, "w"), len(v))
    table = bridge.hilbert_function(w, v, _max_degree(args), all_chains=args.all_chains)
    if args.format == "csv":
        sys.stdout.write(table.to_csv())
    else:
        print(_dump(table.to_json()))
    return 0


def cmd_enumerate(args) -> int:
    v = _v(args)
    if args.what == "monomials":
        items = (U.to_json() for U in iter_corpus(v, _need(args, "max_size")))
    elif args.what == "S":
        w = parse_index_set(_need(args, "w"), len(v))
        items = (S.to_json() for S in bridge.iter_S_w_v(w, v, _need(args, "m"), args.all_chains))
    elif args.what == "SM":
        w = parse_index_set(_need(args, "w"), len(v))
        items = (T.to_json() for T in bridge.enumerate_SM_w_v(w, v, _need(args, "m")))
    else:
        items = (T.to_json() for T in bridge.enumerate_SM_vv(v, _max_degree(args)))
    for item in items:
        sys.stdout.write(_dump(item) + "\n")
    return 0


def _targets(args, symplectic: bool) -> list[IndexSet]:
    if _need(args, "v") != "all":
        return [_v(args)]
    d = _need(args, "d")
    return list(iter_I_d(d) if symplectic else iter_I_rn(d, 2 * d))


def cmd_verify(args) -> int:
    if args.what in ("main", "roundtrip"):
        run = verify.verify_main_theorem if args.what == "main" else verify.verify_round_trip
        size = _need(args, "max_size")
        reports = [run(v, size, jobs=args.jobs) for v in _targets(args, symplectic=False)]
    elif args.what == "eta":
        reports = [verify.verify_eta_bijection(v, _max_degree(args)) for v in _targets(args, True)]
    else:
        reports = []
        for v in _targets(args, True):
            if args.w is not None:
                ws = [parse_index_set(args.w, len(v))]
            else:
                ws = [w for w in iter_I_d(len(v)) if v <= w]
            reports.extend(
                verify.verify_counting(v, w, _max_degree(args), all_chains=args.all_chains)
                for w in ws
            )
    for r in reports:
        print(f"# {r.kind} v={r.parameters['v']} elapsed {r.elapsed:.3f}s", file=sys.stderr)
    ok = all(r.passed for r in reports)
    if len(reports) == 1:
        print(_dump(reports[0].to_json()))
    else:
        print(_dump({"pass": ok, "reports": [r.to_json() for r in reports]}))
    return 0 if ok else 1


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--v", help="comma-separated index set, e.g. 1,3 ('all' for verify)")
    common.add_argument("--d", type=_positive, help="rank d; defaults to the size of --v")
    common.add_argument("--w", help="comma-separated index set w")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    common.add_argument("--all-chains", action="store_true",
                        help="check domination on every chain instead of maximal chains")
    common.add_argument("--max-size", type=_non_negative)
    common.add_argument("--max-degree", type=_non_negative)
    common.add_argument("--max-m", type=_non_negative)
    common.add_argument("--m", type=_non_negative)
    common.add_argument("--monomial", help="monomial JSON, '-' for stdin or @path")
    common.add_argument("--tableau", help="tableau JSON, '-' for stdin or @path")

    parser = argparse.ArgumentParser(prog="spbrsk", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("grid", parents=[common], help="list the cell grids of v")
    p.add_argument("--grid", choices=("all",) + GRID_KINDS, default="all")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("brsk", parents=[common], help="bounded RSK of a monomial")
    p.add_argument("--inverse", action="store_true", help="invert a tableau pair given by --tableau")
    p.set_defaults(func=cmd_brsk)

    sub.add_parser("pitilde", parents=[common], help="iterated peeling").set_defaults(func=cmd_pitilde)
    sub.add_parser("eta", parents=[common], help="standard tableau to folded monomial").set_defaults(func=cmd_eta)
    sub.add_parser("hilbert", parents=[common], help="Hilbert function counts").set_defaults(func=cmd_hilbert)

    p = sub.add_parser("enumerate", parents=[common], help="stream objects as JSON lines")
    p.add_argument("what", choices=("monomials", "S", "SM", "SMvv"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run a verification harness")
    p.add_argument("what", choices=("main", "roundtrip", "eta", "counting"))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "csv" and args.command != "hilbert":
        parser.error("--format csv is only available for hilbert")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (InvalidInputError, NotInvertibleError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
