"""Command-line interface: spectra, sweeps, verification suites, tables.

Exit codes are CI-friendly: 0 all good, 1 a verification-style check
failed, 2 usage or domain error.  All element I/O is lowercase hex of the
little-endian bit-vector integer; for pairs (a0, a1) representing
a0 + a1*theta the integer is a0 + a1 * 2^e.  Reports are byte-identical
for identical arguments (timing goes to stderr only).
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__, perm, reduction, suites, walsh
from . import report as report_mod
from .field import FieldCtx, ctx_new

_ENCODING_HELP = (
    "Field elements are written as lowercase hex of the little-endian "
    "bit-vector integer: bit i is the coefficient of x^i in the modulus "
    "basis of GF(2^e). Extension elements a0 + a1*theta encode as the "
    "integer a0 + a1*2^e, again in hex. Example (e=2): 'b' is the pair "
    "(3, 2) = 3 + 2*theta."
)


def _parse_elem(ctx: FieldCtx, text: str, name: str) -> int:
    try:
        val = int(text, 16)
    except ValueError:
        raise ValueError(f"{name} must be hex, got {text!r}") from None
    if not 0 <= val < ctx.q:
        raise ValueError(f"{name} must encode a base-field element below {ctx.q:#x}")
    return val


def _parse_code(ctx: FieldCtx, text: str, name: str) -> int:
    try:
        val = int(text, 16)
    except ValueError:
        raise ValueError(f"{name} must be hex, got {text!r}") from None
    if not 0 <= val < ctx.order2:
        raise ValueError(f"{name} must encode an extension element below {ctx.order2:#x}")
    return val


def _spectrum_record(ctx: FieldCtx, alpha: int) -> dict:
    tt = perm.inverse_cube_table(ctx, alpha)
    spec = walsh.walsh_full(ctx, tt)
    cube = ctx.is_cube(alpha)
    return {
        "alpha": ctx.fmt(alpha),
        "cube": cube,
        "bent": walsh.is_bent(spec),
        "matches_predicted": spec.histogram == suites.predicted_distribution(ctx.e, cube),
        "histogram": report_mod.ascending(spec.histogram),
        "inner": report_mod.ascending(spec.inner),
        "outer": report_mod.ascending(spec.outer),
    }


def _sweep_block(e: int, alphas: list[int]) -> list[dict]:
    ctx = ctx_new(e)
    return [_spectrum_record(ctx, a) for a in alphas]


def _sweep_records(ctx: FieldCtx, jobs: int) -> list[dict]:
    alphas = list(ctx.nonzero())
    if jobs <= 1 or len(alphas) < 2 * jobs:
        return [_spectrum_record(ctx, a) for a in alphas]
    blocks = [list(alphas[k::jobs]) for k in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_sweep_block, [ctx.e] * jobs, blocks))
    merged = [rec for block in results for rec in block]
    merged.sort(key=lambda r: int(r["alpha"], 16))
    return merged


def _emit(args, rep: dict) -> None:
    if args.format == "csv":
        sys.stdout.write(report_mod.emit_csv(rep["records"]))
    else:
        sys.stdout.write(report_mod.emit_json(rep))


def _config_echo(args, fields: tuple[str, ...]) -> dict:
    cfg = {"command": args.command}
    for f in fields:
        cfg[f] = getattr(args, f)
    return cfg


def cmd_spectrum(args) -> int:
    ctx = ctx_new(args.e)
    alpha = _parse_elem(ctx, args.alpha, "alpha")
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    records = [_spectrum_record(ctx, alpha)]
    header = report_mod.make_header(ctx, __version__, _config_echo(args, ("e", "alpha", "format")))
    summary = {"records": 1, "bent": int(records[0]["bent"])}
    _emit(args, report_mod.make_report(header, records, summary))
    return 0


def cmd_sweep(args) -> int:
    ctx = ctx_new(args.e)
    records = _sweep_records(ctx, args.jobs)
    cube = sum(1 for r in records if r["cube"])
    mismatches = sum(1 for r in records if not r["matches_predicted"])
    header = report_mod.make_header(ctx, __version__, _config_echo(args, ("e", "format", "jobs")))
    summary = {
        "records": len(records),
        "cube_records": cube,
        "noncube_records": len(records) - cube,
        "bent_records": sum(1 for r in records if r["bent"]),
        "mismatches": mismatches,
    }
    _emit(args, report_mod.make_report(header, records, summary))
    return 0 if mismatches == 0 else 1


def cmd_verify(args) -> int:
    ctx = ctx_new(args.e)
    records = suites.run_suite(ctx, args.suite, args.seed)
    failed = sum(1 for r in records if r["status"] != "pass")
    header = report_mod.make_header(
        ctx, __version__, _config_echo(args, ("e", "suite", "seed", "format"))
    )
    summary = {
        "checks": len(records),
        "passed": len(records) - failed,
        "failed": failed,
        "instances": sum(r["checked"] for r in records),
    }
    _emit(args, report_mod.make_report(header, records, summary))
    return 0 if failed == 0 else 1


def cmd_inverse(args) -> int:
    ctx = ctx_new(args.e)
    code = _parse_code(ctx, args.x, "x")
    x = ctx.dec2(code)
    closed = perm.perm_inverse(ctx, x)
    table = ctx.dec2(int(perm.perm_tables(ctx).backward[code]))
    forward = perm.perm_eval(ctx, closed)
    records = [{
        "x": format(code, "x"),
        "closed": format(ctx.enc2(closed), "x"),
        "table": format(ctx.enc2(table), "x"),
        "match": closed == table and forward == x,
    }]
    header = report_mod.make_header(ctx, __version__, _config_echo(args, ("e", "x", "format")))
    _emit(args, report_mod.make_report(header, records, {"records": 1}))
    return 0 if records[0]["match"] else 1


def cmd_truth_table(args) -> int:
    ctx = ctx_new(args.e)
    alpha = _parse_elem(ctx, args.alpha, "alpha")
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    tt = perm.inverse_cube_table(ctx, alpha)
    records = [{
        "alpha": ctx.fmt(alpha),
        "points": ctx.order2,
        "weight": tt.weight(),
        "bits_hex": tt.to_hex(),
    }]
    header = report_mod.make_header(ctx, __version__, _config_echo(args, ("e", "alpha", "format")))
    _emit(args, report_mod.make_report(header, records, {"records": 1}))
    return 0


def cmd_table(args) -> int:
    """Corollary multiplicity table, computed and predicted side by side."""
    ctx = ctx_new(args.e)
    sweep = _sweep_records(ctx, args.jobs)
    observed: dict[bool, dict[int, int]] = {}
    for rec in sweep:
        hist = rec["histogram"]
        prev = observed.setdefault(rec["cube"], hist)
        if prev != hist:
            raise RuntimeError("histograms differ within one cubic branch")
    records = []
    mismatches = 0
    for cube in (False, True):
        predicted = suites.predicted_distribution(ctx.e, cube)
        computed = observed.get(cube, {})
        for value in sorted(set(predicted) | set(computed)):
            p = predicted.get(value, 0)
            c = computed.get(value, 0)
            mismatches += p != c
            records.append({
                "branch": "cube" if cube else "noncube",
                "value": value,
                "predicted": p,
                "computed": c,
                "match": p == c,
            })
    header = report_mod.make_header(ctx, __version__, _config_echo(args, ("e", "format", "jobs")))
    summary = {"rows": len(records), "mismatches": mismatches}
    _emit(args, report_mod.make_report(header, records, summary))
    return 0 if mismatches == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permbent",
        description="Exact Walsh spectra of cubic functions twisted by an inverse permutation.",
        epilog=_ENCODING_HELP,
    )
    parser.add_argument("--version", action="version", version=f"permbent {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        p.add_argument("--e", type=int, required=True, help="even extension degree (2..16)")
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("spectrum", help="full Walsh spectrum of one function")
    common(p)
    p.add_argument("--alpha", required=True, help="nonzero base-field element, hex")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("sweep", help="spectra for every nonzero alpha")
    common(p)
    p.add_argument("--jobs", type=int, default=1, help="worker processes over alpha")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("--suite", choices=suites.SUITES, default="all")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled regimes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("inverse", help="invert the permutation at one point")
    common(p)
    p.add_argument("--x", required=True, help="extension element, hex encoding")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("truth-table", help="packed truth table of one function")
    common(p)
    p.add_argument("--alpha", required=True, help="nonzero base-field element, hex")
    p.set_defaults(func=cmd_truth_table)

    p = sub.add_parser("table", help="multiplicity table, computed vs predicted")
    common(p)
    p.add_argument("--jobs", type=int, default=1, help="worker processes over alpha")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.monotonic()
    try:
        code = args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"elapsed {time.monotonic() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
