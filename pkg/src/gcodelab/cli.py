"""Command-line front end.

Exit codes: 0 when the command (and any checks it ran) succeeded, 1 when a
verification failed, 2 on usage errors, infeasible requests, or malformed
inputs.  All machine output goes through --json as canonical single-line
JSON (sorted keys, no whitespace) so reports are byte-comparable across
runs and worker counts.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import constructions, gcode as gc, groups, schur, theorems
from .errors import GuardExceeded, UnsupportedCover, VerificationError
from .ffield import PrimeField
from .galg import AlgElem
from .gcode import GCode

_FEASIBLE_ENUM = 1 << 20


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _default_threads() -> int:
    return max(1, os.cpu_count() or 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcodelab",
        description="Group-algebra codes: construction, parameters, Schur "
        "products, and exhaustive verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=None, help="worker threads")
    common.add_argument("--seed", type=int, default=0, help="randomness seed")
    common.add_argument("--guard", type=int, default=None, help="codeword enumeration cap")

    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("--group", help="builtin spec (cyclic:8, elemabelian:2,3, ...) or JSON path")
    src.add_argument("--p", "--field", dest="p", type=int, help="prime field modulus")
    src.add_argument("--gen", help="generator coefficients, ';'-separated for several")
    src.add_argument("--code", help="code JSON file")
    src.add_argument("--out", help="write the resulting object to this path")

    p_group = sub.add_parser("group", help="build or inspect groups")
    g_sub = p_group.add_subparsers(dest="subcommand", required=True)
    for name in ("make", "show"):
        gp = g_sub.add_parser(name, parents=[common, src])
        gp.set_defaults(handler=_cmd_group, subcommand=name)

    p_code = sub.add_parser("code", help="ideals and their parameters")
    c_sub = p_code.add_subparsers(dest="subcommand", required=True)
    for name in ("ideal", "params", "dual", "induced"):
        cp = c_sub.add_parser(name, parents=[common, src])
        if name == "induced":
            cp.add_argument("--subgroup", required=True, help="member indices, e.g. 0,2")
        cp.set_defaults(handler=_cmd_code, subcommand=name)

    p_con = sub.add_parser("construct", help="named code families")
    n_sub = p_con.add_subparsers(dest="subcommand", required=True)
    rm = n_sub.add_parser("rm", parents=[common, src])
    rm.add_argument("--r", type=int, required=True)
    rm.add_argument("--m", type=int, required=True)
    rm.add_argument("--check-square", action="store_true")
    rm.set_defaults(handler=_cmd_construct_rm)

    p_schur = sub.add_parser("schur", help="componentwise products and powers")
    s_sub = p_schur.add_subparsers(dest="subcommand", required=True)
    sp = s_sub.add_parser("product", parents=[common, src])
    sp.add_argument("--with", dest="with_gen", required=True, help="second factor coefficients")
    sp.set_defaults(handler=_cmd_schur, subcommand="product")
    pw = s_sub.add_parser("power", parents=[common, src])
    pw.add_argument("--max-t", type=int, default=None)
    pw.set_defaults(handler=_cmd_schur, subcommand="power")
    fp = s_sub.add_parser("fixed-point", parents=[common, src])
    fp.set_defaults(handler=_cmd_schur, subcommand="fixed-point")

    p_verify = sub.add_parser("verify", help="exhaustive theorem sweeps")
    v_sub = p_verify.add_subparsers(dest="subcommand", required=True)
    for name in ("up", "bound", "equality", "schur", "all"):
        vp = v_sub.add_parser(name, parents=[common, src])
        vp.add_argument("--exhaustive", action="store_true",
                        help="force full enumeration past the feasibility cap")
        vp.add_argument("--sample", type=int, default=None,
                        help="check a seeded sample of this many generators")
        vp.set_defaults(handler=_cmd_verify, subcommand=name)

    p_search = sub.add_parser("search", help="randomized searches and sweeps")
    e_sub = p_search.add_subparsers(dest="subcommand", required=True)
    sg = e_sub.add_parser("golay", parents=[common, src])
    sg.add_argument("--budget", type=int, required=True)
    sg.set_defaults(handler=_cmd_search_golay)
    sw = e_sub.add_parser("sweep", parents=[common, src])
    sw.add_argument("--sample", type=int, default=None)
    sw.set_defaults(handler=_cmd_search_sweep)

    return parser


# --- shared resolution -------------------------------------------------------


def _require(args, parser, *names) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        parser.error(f"missing required options: {', '.join('--' + m for m in missing)}")


def _resolve_group(args) -> groups.Group:
    return groups.from_spec(args.group)


def _resolve_field(args) -> PrimeField:
    return PrimeField(args.p)


def _resolve_code(args, parser) -> GCode:
    if args.code:
        return gc.load_code(args.code)
    _require(args, parser, "group", "p", "gen")
    group = _resolve_group(args)
    field = _resolve_field(args)
    gens = [
        AlgElem.from_text(group, field, part)
        for part in args.gen.split(";")
        if part.strip()
    ]
    if not gens:
        parser.error("--gen must contain at least one coefficient vector")
    return gc.ideal_from_generators(group, field, gens)


def _emit_code(args, code: GCode, extra: dict | None = None) -> None:
    if args.out:
        gc.save_code(code, args.out)
    payload = {
        "group": code.group.name,
        "p": code.field.p,
        "dim": code.dim,
        "basis": code.basis.matrix.tolist(),
    }
    if extra:
        payload.update(extra)
    if args.json:
        print(_dump(payload))
    else:
        print(f"group={code.group.name} p={code.field.p} dim={code.dim}")
        for row in code.basis.matrix.tolist():
            print(" ".join(str(x) for x in row))
        for key, val in (extra or {}).items():
            print(f"{key}: {val}")


# --- handlers ----------------------------------------------------------------


def _cmd_group(args, parser) -> int:
    _require(args, parser, "group")
    g = _resolve_group(args)
    if args.out:
        groups.save_group(g, args.out)
    if args.json:
        print(_dump(groups.group_to_dict(g)))
        return 0
    print(f"{g.name}: order {g.order}")
    print("labels:", " ".join(g.labels))
    if args.subcommand == "show" and g.order <= 24:
        width = max(len(lab) for lab in g.labels)
        for i in range(g.order):
            row = " ".join(g.labels[g.table[i, j]].rjust(width) for j in range(g.order))
            print(row)
    return 0


def _cmd_code(args, parser) -> int:
    threads = args.threads or _default_threads()
    if args.subcommand == "induced":
        _require(args, parser, "group", "p", "subgroup")
        group = _resolve_group(args)
        field = _resolve_field(args)
        members = [int(x) for x in args.subgroup.split(",")]
        code = gc.trivial_induced(group, field, groups.Subgroup(group, members))
    else:
        code = _resolve_code(args, parser)
    if args.subcommand == "dual":
        code = code.dual()
    if args.subcommand == "params":
        rep = code.params(guard=args.guard, threads=threads)
        if args.json:
            print(_dump({"group": code.group.name, "p": code.field.p, **rep.as_dict()}))
        else:
            print(
                f"n={rep.length} k={rep.dimension} d={rep.distance} "
                f"product={rep.product} bound_ok={rep.bound_ok} equality={rep.equality}"
            )
        return 0
    _emit_code(args, code)
    return 0


def _cmd_construct_rm(args, parser) -> int:
    code = constructions.reed_muller(args.r, args.m)
    extra = {}
    if args.check_square:
        extra = constructions.rm_schur_square_check(args.r, args.m)
    rep = code.params(guard=args.guard, threads=args.threads or _default_threads())
    _emit_code(args, code, extra={**rep.as_dict(), **extra})
    return 0


def _cmd_schur(args, parser) -> int:
    code = _resolve_code(args, parser)
    if args.subcommand == "product":
        group, field = code.group, code.field
        other_gens = [
            AlgElem.from_text(group, field, part)
            for part in args.with_gen.split(";")
            if part.strip()
        ]
        other = gc.ideal_from_generators(group, field, other_gens)
        _emit_code(args, schur.schur_product(code, other))
        return 0
    if args.subcommand == "power":
        report = schur.schur_power_chain(code, max_t=args.max_t)
        payload = {
            "dims": report.dims,
            "regularity": report.regularity,
            "period": report.period,
            "complete": report.complete,
            "stabilizer": list(report.stabilizer_subgroup.members)
            if report.stabilizer_subgroup
            else None,
            "stabilized_dim": report.stabilized_code.dim
            if report.stabilized_code
            else None,
        }
        print(_dump(payload) if args.json else payload)
        return 0
    sub = schur.fixed_point_structure(code)
    payload = {"subgroup": list(sub.members), "order": len(sub)}
    print(_dump(payload) if args.json else payload)
    return 0


_VERIFY_DRIVERS = {
    "up": theorems.verify_uncertainty,
    "bound": theorems.verify_bound,
    "equality": theorems.verify_equality,
    "schur": theorems.verify_schur,
    "all": theorems.verify_all,
}


def _cmd_verify(args, parser) -> int:
    _require(args, parser, "group", "p")
    group = _resolve_group(args)
    field = _resolve_field(args)
    threads = args.threads or _default_threads()
    total = field.p**group.order
    if total > _FEASIBLE_ENUM and not args.exhaustive and args.sample is None:
        parser.error(
            f"{field.p}^{group.order} generators exceed the feasibility cap; "
            "pass --exhaustive or --sample N"
        )
    kwargs: dict = {"threads": threads}
    if args.subcommand == "up":
        if args.sample is not None:
            kwargs.update(sample=args.sample, sample_seed=args.seed)
    elif args.sample is not None:
        parser.error("--sample applies only to 'verify up' and 'search sweep'")
    if args.subcommand != "up":
        kwargs["guard"] = args.guard
    report = _VERIFY_DRIVERS[args.subcommand](group, field, **kwargs)
    if args.json:
        print(_dump(report))
    else:
        print(
            f"verify {args.subcommand}: group={report['group']} p={report['p']} "
            f"checked={report['checked']} failures={len(report['failures'])}"
        )
        for f in report["failures"]:
            print(f"  FAIL {f}")
    return 1 if report["failures"] else 0


def _cmd_search_golay(args, parser) -> int:
    threads = args.threads or _default_threads()
    result = constructions.golay_search(args.budget, args.seed, threads=threads)
    if result is None:
        payload = {"found": False, "budget": args.budget, "seed": args.seed}
        print(_dump(payload) if args.json else f"no hit within {args.budget} trials")
        return 0
    rep = result.code.params()
    payload = {
        "found": True,
        "trial": result.trial,
        "seed": args.seed,
        "generator": result.generator.to_text(),
        **rep.as_dict(),
        "self_dual": result.code.dual() == result.code,
    }
    if args.out:
        gc.save_code(result.code, args.out)
    print(_dump(payload) if args.json else payload)
    return 0


def _cmd_search_sweep(args, parser) -> int:
    _require(args, parser, "group", "p")
    group = _resolve_group(args)
    field = _resolve_field(args)
    threads = args.threads or _default_threads()
    total = field.p**group.order
    if total > _FEASIBLE_ENUM and args.sample is None:
        parser.error(
            f"{field.p}^{group.order} generators exceed the feasibility cap; "
            "pass --sample N"
        )
    rows = sweep_report(
        group,
        field,
        threads=threads,
        sample=args.sample,
        seed=args.seed,
        guard=args.guard,
    )
    if args.json:
        for row in rows:
            print(_dump(row))
    else:
        print(f"{'k':>4} {'d':>4} {'d*k':>5} {'ratio':>8} {'selforth':>9} {'sqdim':>6}")
        for row in rows:
            print(
                f"{row['k']:>4} {row['d']:>4} {row['product']:>5} "
                f"{row['ratio']:>8.4f} {str(row['self_orthogonal']):>9} "
                f"{row['square_dim']:>6}"
            )
    return 0


def sweep_report(
    group,
    field,
    threads: int = 1,
    sample: int | None = None,
    seed: int = 0,
    guard: int | None = None,
) -> list[dict]:
    """One row per distinct cyclic ideal: parameters, bound ratio,
    self-orthogonality, and the Schur-square dimension; sorted by descending
    ratio with deterministic tie-breaks."""
    ideals = theorems.enumerate_cyclic_ideals(
        group, field, threads=threads, sample=sample, sample_seed=seed
    )
    rows = []
    for fidx, code in ideals:
        rep = code.params(guard=guard, threads=threads)
        if rep.product is not None and rep.product < group.order:
            raise VerificationError("sweep row violates the product bound")
        square = schur.schur_product(code, code)
        rows.append(
            {
                "generator_index": fidx,
                "k": rep.dimension,
                "d": rep.distance,
                "product": rep.product,
                "ratio": rep.product / group.order,
                "self_orthogonal": code.is_self_orthogonal(),
                "square_dim": square.dim,
            }
        )
    rows.sort(key=lambda r: (-r["ratio"], r["k"], r["generator_index"]))
    return rows


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args, parser)
    except SystemExit as exc:  # parser.error inside handlers
        return int(exc.code or 0)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except GuardExceeded as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 2
    except UnsupportedCover as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
