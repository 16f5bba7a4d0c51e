"""Command-line front end.

Subcommands: construct, analyze, bounds, verify, search, matchings.
Every run prints a JSON report to stdout unless --quiet. Exit codes:
0 success / claims hold, 1 a checked claim failed (counterexample
written next to the output), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import bounds as bounds_mod
from . import matchings as matchings_mod
from . import search as search_mod
from .constructions import (
    f2_extremal,
    projective_construction,
    split_w,
    three_part,
    verify_construction,
)
from .geometry import projective_plane
from .hypergraph import FormatError, Hypergraph


def _rational(text: str) -> Fraction:
    """Accept 'p/q' or integer strings; decimals are rejected for exactness."""
    text = text.strip()
    if "." in text:
        raise argparse.ArgumentTypeError(
            f"expected an exact rational like 1/3, got {text!r}"
        )
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational {text!r}") from None


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    return str(obj)


def _emit(report: dict, quiet: bool) -> None:
    if not quiet:
        print(json.dumps(report, default=_json_default, indent=2))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tightcomp",
        description="Generate, analyze, and verify extremal 3-graph constructions.",
    )
    parser.add_argument("--quiet", action="store_true", help="suppress the JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="generate an extremal hypergraph family")
    c.add_argument("--family", required=True,
                   choices=["three-part", "split-w", "projective", "f2"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, help="projective: step parameter r >= 3")
    c.add_argument("--m", type=int, help="f2: number of cliques")
    c.add_argument("--k", type=int, help="split-w: uniformity (default 3)")
    c.add_argument("-o", "--output", help="write the hypergraph text file here")
    c.add_argument("--colors-csv", help="projective only: dump the pair coloring")

    a = sub.add_parser("analyze", help="report statistics of a hypergraph file")
    a.add_argument("file")
    a.add_argument("--json", action="store_true",
                   help="include the per-component breakdown")

    b = sub.add_parser("bounds", help="emit the bound curves as CSV (and SVG)")
    b.add_argument("--xmin", type=_rational, required=True)
    b.add_argument("--xmax", type=_rational, required=True)
    b.add_argument("--samples", type=int, required=True)
    b.add_argument("--csv", required=True)
    b.add_argument("--svg")

    v = sub.add_parser("verify", help="run a verification target")
    v.add_argument("--target", required=True,
                   choices=["construction", "mycroft", "connectivity", "furedi", "curves"])
    v.add_argument("--n", type=int)
    v.add_argument("--r", type=int)
    v.add_argument("--k", type=int, default=3)
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--shards", type=int, default=1)
    v.add_argument("--artifact", help="where to write a counterexample (on failure)")

    s = sub.add_parser("search", help="brute-force extremal search over tiny 3-graphs")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, required=True,
                   help="require every tight component to meet fewer than t vertices")
    s.add_argument("--shards", type=int, default=1)
    s.add_argument("--shard", type=int, help="run only this shard")
    s.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    s.add_argument("--samples", type=int, help="random mode: number of sampled graphs")
    s.add_argument("--seed", type=int)
    s.add_argument("-o", "--output", help="witness file (default witness_n<N>_t<T>.txt)")

    m = sub.add_parser("matchings", help="matching numbers and intersecting checks")
    m.add_argument("file")
    return parser


# -- subcommand handlers -----------------------------------------------------


def _cmd_construct(args) -> tuple[dict, int]:
    fam = args.family
    coloring = None
    if fam == "three-part":
        h = three_part(args.n)
        params = {"n": args.n}
    elif fam == "split-w":
        k = args.k if args.k is not None else 3
        h = split_w(args.n, k)
        params = {"n": args.n, "k": k}
    elif fam == "f2":
        if args.m is None:
            raise ValueError("--family f2 requires --m")
        h = f2_extremal(args.n, args.m)
        params = {"n": args.n, "m": args.m}
    else:
        if args.r is None:
            raise ValueError("--family projective requires --r")
        h, coloring = projective_construction(args.n, args.r)
        params = {"n": args.n, "r": args.r}
    if args.colors_csv:
        if coloring is None:
            raise ValueError("--colors-csv only applies to --family projective")
        with open(args.colors_csv, "w") as fh:
            fh.write(coloring.to_csv())
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(h.serialize())
    report = {
        "command": "construct",
        "family": fam,
        "params": params,
        "k": h.k,
        "n": h.n,
        "m_edges": h.num_edges,
        "output": args.output,
    }
    if coloring is not None:
        report["num_classes"] = len(coloring.classes)
        report["class_sizes"] = [len(c) for c in coloring.classes]
    return report, 0


def _cmd_analyze(args) -> tuple[dict, int]:
    with open(args.file) as fh:
        h = Hypergraph.parse(fh.read())
    decomp = h.tight_components()
    report = {
        "command": "analyze",
        "file": args.file,
        "k": h.k,
        "n": h.n,
        "m": h.num_edges,
        "min_codegree": h.min_codegree() if h.n >= h.k else None,
        "num_components": len(decomp),
        "tc": h.tc(),
        "connected": h.is_hypergraph_connected() if h.n >= h.k else None,
    }
    if args.json:
        report["components"] = [
            {"edges": len(c.edge_indices), "vertices": c.vertex_count}
            for c in decomp.components
        ]
    return report, 0


def _cmd_bounds(args) -> tuple[dict, int]:
    csv_text = bounds_mod.emit_curve_csv(args.xmin, args.xmax, args.samples)
    with open(args.csv, "w") as fh:
        fh.write(csv_text)
    svg_path = None
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(bounds_mod.emit_curve_svg(args.xmin, args.xmax, args.samples))
        svg_path = args.svg
    report = {
        "command": "bounds",
        "xmin": args.xmin,
        "xmax": args.xmax,
        "samples": args.samples,
        "rows": args.samples,
        "csv": args.csv,
        "svg": svg_path,
    }
    return report, 0


def _require(args, names: list[str]) -> None:
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise ValueError(f"--target {args.target} requires {' '.join(missing)}")


def _write_artifact(args, text: str) -> str:
    path = args.artifact or f"counterexample_{args.target}.txt"
    with open(path, "w") as fh:
        fh.write(text)
    return path


def _cmd_verify(args) -> tuple[dict, int]:
    target = args.target
    if target == "construction":
        _require(args, ["n", "r"])
        report = verify_construction(args.n, args.r)
        report["command"] = "verify construction"
        if not report["passed"]:
            h, _ = projective_construction(args.n, args.r)
            report["artifact"] = _write_artifact(args, h.serialize())
            return report, 1
        return report, 0

    if target == "mycroft":
        _require(args, ["n"])
        report = search_mod.verify_mycroft(args.n, shards=args.shards)
        report["command"] = "verify mycroft"
        if not report["passed"]:
            report["artifact"] = _write_artifact(args, report["counterexample_text"])
            return report, 1
        return report, 0

    if target == "connectivity":
        _require(args, ["n"])
        samples = args.samples if args.samples is not None else 100
        report = search_mod.verify_connectivity_prop(args.n, args.k, samples, args.seed)
        report["command"] = "verify connectivity"
        if not report["passed"]:
            if report["failure_text"]:
                report["artifact"] = _write_artifact(args, report["failure_text"])
            return report, 1
        return report, 0

    if target == "furedi":
        samples = args.samples if args.samples is not None else 200
        return _verify_furedi(args, samples)

    # curves
    samples = args.samples if args.samples is not None else 10_000
    return _verify_curves(samples)


def _verify_furedi(args, samples: int) -> tuple[dict, int]:
    fano = projective_plane(2).to_hypergraph()
    nu_star, _ = matchings_mod.fractional_matching_number(fano)
    fano_report = matchings_mod.check_intersecting_corollary(fano)
    fano_ok = (
        nu_star == Fraction(7, 3)
        and fano_report["passed"]
        and fano_report["delta1"] == fano_report["bound"] == 3
        and fano_report["plane_check"].get("passed") is True
    )

    rng_seed = args.seed if args.seed is not None else 0
    bad = None
    checked = 0
    rng = random.Random(rng_seed)
    for i in range(samples):
        n = 5 + (i % 5)  # n cycles over 5..9
        fam = matchings_mod.random_maximal_intersecting_family(n, 3, rng=rng)
        rep = matchings_mod.check_intersecting_corollary(fam)
        value, _ = matchings_mod.fractional_matching_number(fam)
        checked += 1
        if not rep["passed"] or value > Fraction(7, 3):
            bad = {"sample": i, "n": n, "nu_star": value, "report": rep}
            bad_text = fam.serialize()
            break
    report = {
        "command": "verify furedi",
        "fano": {
            "nu_star": nu_star,
            "corollary": fano_report,
            "equality_case": fano_ok,
        },
        "random_families": {"samples": checked, "seed": rng_seed, "violation": bad},
        "passed": fano_ok and bad is None,
    }
    if bad is not None:
        report["artifact"] = _write_artifact(args, bad_text)
    return report, 0 if report["passed"] else 1


def _verify_curves(samples: int) -> tuple[dict, int]:
    third = Fraction(1, 3)
    xs = sorted(
        {Fraction(j, 3 * samples) for j in range(1, samples + 1)}
        | {Fraction(5, 21), Fraction(8, 27), third}
    )
    meet_point = Fraction(5, 21)
    plateau = Fraction(8, 27)
    dominance_bad = None
    equality_bad = None
    prev_lower = prev_upper = None
    monotone_bad = None
    for x in xs:
        lo = bounds_mod.f3_lower(x)
        hi = bounds_mod.f3_upper(x)
        if lo > hi and dominance_bad is None:
            dominance_bad = {"x": x, "lower": lo, "upper": hi}
        expect_equal = x == meet_point or x >= plateau
        if (lo == hi) != expect_equal and equality_bad is None:
            equality_bad = {"x": x, "lower": lo, "upper": hi}
        if prev_lower is not None and (lo < prev_lower or hi < prev_upper):
            if monotone_bad is None:
                monotone_bad = {"x": x}
        prev_lower, prev_upper = lo, hi
    spots = {
        "f3_upper(3/10)": bounds_mod.f3_upper(Fraction(3, 10)) == Fraction(2, 3),
        "f3_lower(1/5)": bounds_mod.f3_lower(Fraction(1, 5)) == Fraction(1, 3),
        "f3_lower(5/21)": bounds_mod.f3_lower(Fraction(5, 21)) == Fraction(3, 7),
        "f2(3/10)": bounds_mod.f2(Fraction(3, 10)) == Fraction(1, 3),
    }
    passed = (
        dominance_bad is None
        and equality_bad is None
        and monotone_bad is None
        and all(spots.values())
    )
    report = {
        "command": "verify curves",
        "samples": len(xs),
        "range": ["(0", "1/3]"],
        "dominance_violation": dominance_bad,
        "equality_set_violation": equality_bad,
        "monotonicity_violation": monotone_bad,
        "spot_values": spots,
        "passed": passed,
    }
    return report, 0 if passed else 1


def _cmd_search(args) -> tuple[dict, int]:
    started = time.perf_counter()
    if args.shard is not None:
        outcomes = [
            search_mod.search_max_codegree_with_tc_below(
                args.n, args.t, shards=args.shards, shard=args.shard,
                mode=args.mode, samples=args.samples, seed=args.seed,
            )
        ]
    else:
        outcomes = [
            search_mod.search_max_codegree_with_tc_below(
                args.n, args.t, shards=args.shards, shard=s,
                mode=args.mode, samples=args.samples, seed=args.seed,
            )
            for s in range(args.shards)
        ]
    merged = search_mod.merge_search_outcomes(outcomes)
    witness = merged.witness()
    witness_file = None
    if witness is not None:
        witness_file = args.output or f"witness_n{args.n}_t{args.t}.txt"
        with open(witness_file, "w") as fh:
            fh.write(witness.serialize())
    report = {
        "command": "search",
        **merged.task.to_dict(),
        "filter": f"tc<{args.t}",
        "value": merged.value,
        "witness_mask": merged.witness_mask,
        "witness_file": witness_file,
        "graphs_checked": merged.checked,
        "elapsed": round(time.perf_counter() - started, 3),
    }
    return report, 0


def _cmd_matchings(args) -> tuple[dict, int]:
    with open(args.file) as fh:
        h = Hypergraph.parse(fh.read())
    nu = matchings_mod.matching_number(h)
    nu_star, _ = matchings_mod.fractional_matching_number(h)
    intersecting = matchings_mod.is_intersecting(h)
    report = {
        "command": "matchings",
        "file": args.file,
        "k": h.k,
        "n": h.n,
        "m": h.num_edges,
        "e_with_multiplicity": h.total_multiplicity,
        "nu": nu,
        "nu_star": nu_star,
        "delta1": matchings_mod.max_degree(h),
        "intersecting": intersecting,
    }
    code = 0
    if intersecting:
        corollary = matchings_mod.check_intersecting_corollary(h)
        report["corollary"] = corollary
        if not corollary["passed"]:
            code = 1
    return report, code


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    handlers = {
        "construct": _cmd_construct,
        "analyze": _cmd_analyze,
        "bounds": _cmd_bounds,
        "verify": _cmd_verify,
        "search": _cmd_search,
        "matchings": _cmd_matchings,
    }
    try:
        report, code = handlers[args.command](args)
    except (ValueError, FormatError, OSError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    _emit(report, args.quiet)
    return code


if __name__ == "__main__":
    sys.exit(main())
