"""Command-line surface for reproducible experiments.

Exit codes: 0 success (or family free), 1 violation found by `check`,
2 malformed input, 3 optimum not reached within budget when
--require-optimal is set.  All results are deterministic for identical
flags; only the reported timings vary.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .acceptance import run_all
from .classify import count_copies, is_free, parse_forbidden
from .constructions import FAMILIES, FORMULAS, build_family, load_design
from .core import as_triple, load_cgh, save_cgh
from .geometry import oracle_classify, realization_for
from .search import SearchStatus, enumerate_extremal, ex_number
from .tournaments import (
    count_directed_triangles,
    load_tournament,
    max_triangle_tournament,
    save_tournament,
    triangles_by_formula,
    verify_d1_bound,
)


def _parse_triple(text: str):
    try:
        return as_triple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad triple {text!r}: {exc}") from None


def _parse_bits(text: str) -> tuple[int, ...]:
    parts = text.replace(",", "").strip()
    if not parts or any(c not in "01" for c in parts):
        raise ValueError(f"bad side bits {text!r}; expected e.g. 0,1,0 or 010")
    return tuple(int(c) for c in parts)


def _parse_diagonals(text: str) -> list[tuple[int, int]]:
    diags = []
    for chunk in text.split(","):
        u, _, v = chunk.partition("-")
        try:
            diags.append((int(u), int(v)))
        except ValueError:
            raise ValueError(f"bad diagonal {chunk!r}; expected i-j") from None
    return diags


def _parse_swaps(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"bad swap list {text!r}") from None


def _solver_workers() -> int:
    """Parallelism cap from CGX_THREADS; the search itself is sequential."""
    raw = os.environ.get("CGX_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"CGX_THREADS must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"CGX_THREADS must be >= 1, got {cap}")
    return cap


def _search_json(n: int, forbidden, result) -> dict:
    return {
        "n": n,
        "forbidden": sorted(c.value for c in forbidden),
        "ex": result.size,
        "status": result.status.value,
        "witness": result.witness.to_json_dict(),
        "nodes": result.nodes,
        "ms": round(result.elapsed_s * 1000.0, 3),
    }


def _cmd_classify(args) -> int:
    a = _parse_triple(args.a)
    b = _parse_triple(args.b)
    from .classify import classify_pair

    kind = classify_pair(args.n, a, b)
    print(kind.value)
    if args.oracle:
        oracle = oracle_classify(realization_for(args.n), a, b)
        print(f"oracle={oracle.value}")
        print(f"agree={'true' if oracle is kind else 'false'}")
    return 0


def _cmd_construct(args) -> int:
    fid = args.family.strip().upper()
    if fid not in FAMILIES:
        raise ValueError(f"unknown family {args.family!r}; choose from {sorted(FAMILIES)}")
    design = load_design(args.design) if args.design else None
    fam = build_family(
        fid,
        args.n,
        side_bits=_parse_bits(args.bits) if args.bits else None,
        start=args.start,
        swaps=_parse_swaps(args.swaps) if args.swaps else (),
        diagonals=_parse_diagonals(args.diagonals) if args.diagonals else None,
        design=design,
    )
    expected = FAMILIES[fid].expected_size(args.n)
    match = fam.size == expected
    print(f"family={fid} n={args.n} size={fam.size} expected={expected} "
          f"match={'true' if match else 'false'}")
    if args.out:
        save_cgh(fam, args.out)
        print(f"wrote {args.out}")
    return 0


def _cmd_check(args) -> int:
    fam = load_cgh(args.infile)
    forbidden = parse_forbidden(args.forbid)
    report = is_free(fam, forbidden)
    if report.free:
        print(json.dumps({"free": True}))
        return 0
    print(json.dumps({
        "free": False,
        "violation": report.violation.value,
        "witness": [list(report.witness[0]), list(report.witness[1])],
    }))
    return 1


def _cmd_count(args) -> int:
    fam = load_cgh(args.infile)
    print(json.dumps(count_copies(fam).to_json_dict()))
    return 0


def _cmd_solve(args) -> int:
    forbidden = parse_forbidden(args.forbid)
    _solver_workers()
    result = ex_number(args.n, forbidden, args.budget)
    print(json.dumps(_search_json(args.n, forbidden, result)))
    if args.out:
        save_cgh(result.witness, args.out)
    if args.require_optimal and result.status is not SearchStatus.OPTIMAL:
        return 3
    return 0


def _cmd_enumerate(args) -> int:
    forbidden = parse_forbidden(args.forbid)
    _solver_workers()
    enum = enumerate_extremal(
        args.n, forbidden, cap=args.cap, up_to_symmetry=args.canonical,
        budget_s=args.budget,
    )
    print(json.dumps({
        "n": args.n,
        "forbidden": sorted(c.value for c in forbidden),
        "ex": enum.size,
        "count": len(enum.families),
        "truncated": enum.truncated,
        "families": [fam.to_json_dict() for fam in enum.families],
    }))
    return 0


def _cmd_table(args) -> int:
    forbidden = parse_forbidden(args.forbid)
    if args.formula is not None and args.formula not in FORMULAS:
        raise ValueError(f"unknown formula {args.formula!r}; choose from {sorted(FORMULAS)}")
    if args.n_from < 4 or args.n_to < args.n_from:
        raise ValueError(f"bad range {args.n_from}..{args.n_to}")
    label = "+".join(sorted(c.value for c in forbidden))
    print("n,forbidden,ex_computed,formula,match,ms")
    for n in range(args.n_from, args.n_to + 1):
        result = ex_number(n, forbidden, args.budget)
        ms = round(result.elapsed_s * 1000.0, 3)
        if args.formula is None:
            print(f"{n},{label},{result.size},,,{ms}")
        else:
            value = FORMULAS[args.formula](n)
            match = "true" if value == result.size else "false"
            print(f"{n},{label},{result.size},{value},{match},{ms}")
    return 0


def _cmd_tournament(args) -> int:
    modes = [m for m in (args.build, args.count is not None, args.orient is not None) if m]
    if len(modes) != 1:
        raise ValueError("choose exactly one of --build, --count, --orient")
    if args.build:
        if args.n is None:
            raise ValueError("--build needs --n")
        t = max_triangle_tournament(args.n)
        if args.out:
            save_tournament(t, args.out)
            print(f"wrote {args.out}")
        else:
            print(json.dumps(t.to_json_dict()))
        return 0
    if args.count is not None:
        t = load_tournament(args.count)
        print(json.dumps({
            "n": t.n,
            "triangles": count_directed_triangles(t),
            "by_formula": triangles_by_formula(t.outdegrees()),
        }))
        return 0
    fam = load_cgh(args.orient)
    report = verify_d1_bound(fam)
    print(json.dumps({"n": fam.n, **report.to_json_dict()}))
    return 0


def _cmd_verify_all(args) -> int:
    results = run_all(max_n=args.max_n, budget_s=args.budget)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cghlab",
        description="Exact extremal problems for pairs of triangles in convex position.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a pair of triples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True, help="first triple, e.g. 0,1,3")
    p.add_argument("--b", required=True, help="second triple, e.g. 2,4,5")
    p.add_argument("--oracle", action="store_true", help="cross-check geometrically")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("construct", help="generate a named family")
    p.add_argument("--family", required=True, help="/".join(sorted(FAMILIES)))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bits", help="side bits for HSTAR at even n, e.g. 0,1,0")
    p.add_argument("--start", type=int, help="start index for HPLUS at odd n")
    p.add_argument("--swaps", help="swap indices for M3X, e.g. 1,2")
    p.add_argument("--diagonals", help="diagonals for D2TRI, e.g. 0-2,0-3")
    p.add_argument("--design", help="design JSON file for D2DESIGN")
    p.add_argument("--out", help="write the family as Cgh JSON")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("check", help="test a family file for forbidden configurations")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--forbid", required=True, help="comma-separated types, e.g. M1,S1")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("count", help="census of configurations in a family file")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("solve", help="compute ex(n, F) exactly")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", required=True)
    p.add_argument("--budget", type=float, default=300.0, help="seconds (default 300)")
    p.add_argument("--out", help="write the witness as Cgh JSON")
    p.add_argument("--require-optimal", action="store_true")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("enumerate", help="list all extremal families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", required=True)
    p.add_argument("--cap", type=int, help="stop after this many families")
    p.add_argument("--canonical", action="store_true", help="one per dihedral orbit")
    p.add_argument("--budget", type=float, default=300.0)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("table", help="CSV of solver values vs a closed form")
    p.add_argument("--forbid", required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--formula", help="/".join(sorted(FORMULAS)))
    p.add_argument("--budget", type=float, default=300.0)
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("tournament", help="build, count, or orient")
    p.add_argument("--n", type=int)
    p.add_argument("--build", action="store_true", help="near-regular max tournament")
    p.add_argument("--count", metavar="FILE", help="count directed triangles in FILE")
    p.add_argument("--orient", metavar="FILE", help="orient the shadow of a Cgh file")
    p.add_argument("--out", help="write tournament JSON (with --build)")
    p.set_defaults(fn=_cmd_tournament)

    p = sub.add_parser("verify-all", help="run the full verification suite")
    p.add_argument("--max-n", type=int, help="cap the ground-set size (faster, weaker)")
    p.add_argument("--budget", type=float, default=300.0)
    p.set_defaults(fn=_cmd_verify_all)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
