"""Command-line front end: generate fields, run checks, sweep dimensions.

Commands: dims, sweep, gen, analyze, reduce-odd.  Exit codes are a stable
contract: 0 all checks pass, 1 a verification failed, 2 usage/input error.
Inputs and outputs go through paths, with "-" meaning stdin/stdout; JSON
output is sorted and indented so identical runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .curves import (
    build_plane_curve,
    involution_check,
    ramification_degree_affine,
    smoothness_check,
    so_even_singularity_pattern,
    twisted_curve,
)
from .dimensions import CSV_HEADER, CurveParams, DimensionReport, identity_suite
from .groups import GROUP_KINDS, GroupError, GroupSpec, check_lie_membership
from .higgs import (
    HiggsField,
    NonGenericFieldError,
    PoleOrderError,
    parity_classify,
    pfaffian_square_check,
    random_strongly_parabolic_higgs,
    so_odd_reduce,
    strong_parabolic_check,
)
from .linalg import char_poly
from .poly import RationalFunction, q_to_str

OK, CHECK_FAILED, USAGE_ERROR = 0, 1, 2

ALL_CHECKS = ("membership", "charpoly", "parity", "strong-parabolic", "pfaffian", "spectral")


@dataclass
class RunConfig:
    """Parsed invocation: which tuples to sweep, seeds, and output routing."""

    command: str
    groups: tuple[str, ...] = ()
    ms: range = range(1, 2)
    gs: range = range(2, 3)
    ns: range = range(1, 2)
    deg_m: int = 0
    seed: int = 0
    degree_bound: int = 1
    marked: tuple[Fraction, ...] = ()
    checks: tuple[str, ...] = ALL_CHECKS
    fmt: str = "csv"
    inp: str = "-"
    out: str = "-"


def _parse_range(text: str) -> range:
    """"3" -> 3..3, "1:4" -> 1..4 inclusive."""
    parts = text.split(":")
    if len(parts) == 1:
        lo = hi = int(parts[0])
    elif len(parts) == 2:
        lo, hi = int(parts[0]), int(parts[1])
    else:
        raise ValueError(f"bad range {text!r}")
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _parse_marked(text: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(part) for part in text.split(",") if part != "")


def _read_input(path: str) -> dict:
    raw = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return json.loads(raw)


def _write_output(path: str, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _format_reports(reports: list[DimensionReport], fmt: str) -> str:
    if fmt == "json":
        return _dump_json([r.to_dict() for r in reports])
    if fmt == "csv":
        return "\n".join([CSV_HEADER] + [r.to_csv_row() for r in reports])
    header = "| " + CSV_HEADER.replace(",", " | ") + " |"
    rule = "|" + "---|" * 9
    return "\n".join([header, rule] + [r.to_markdown_row() for r in reports])


# -- dims / sweep ---------------------------------------------------------------


def _run_suite(cfg: RunConfig) -> int:
    reports = [
        identity_suite(GroupSpec(kind, m), CurveParams(g, n, cfg.deg_m))
        for kind in sorted(cfg.groups)
        for m in cfg.ms
        for g in cfg.gs
        for n in cfg.ns
    ]
    _write_output(cfg.out, _format_reports(reports, cfg.fmt))
    return OK if all(r.passed for r in reports) else CHECK_FAILED


# -- gen --------------------------------------------------------------------------


def cmd_gen(cfg: RunConfig) -> int:
    group = GroupSpec(cfg.groups[0], cfg.ms[0])
    fld = random_strongly_parabolic_higgs(group, cfg.marked, cfg.degree_bound, cfg.seed)
    doc = fld.to_dict()
    doc["seed"] = cfg.seed
    doc["degree_bound"] = cfg.degree_bound
    _write_output(cfg.out, _dump_json(doc))
    return OK


# -- analyze ----------------------------------------------------------------------


def _spectral_section(fld: HiggsField) -> dict:
    group = fld.group
    char = fld.char_data()
    if group.kind == "so-odd":
        parity = parity_classify(char, group)
        if not parity.passed:
            return {"pass": False, "reason": "char polynomial is not x * even"}
        sections = [char.s(i) for i in range(1, group.rank_size)]
        curve = twisted_curve(sections, fld.marked_points)
    else:
        curve = build_plane_curve(fld)
    out: dict = {"involution": involution_check(curve)}
    smooth = smoothness_check(curve)
    out["smoothness"] = smooth.to_dict()
    out["affine_ramification_degree"] = ramification_degree_affine(curve)
    ok = out["involution"]
    if group.kind == "so-even":
        pf = pfaffian_square_check(fld).pfaffian
        twisted = pf * RationalFunction.make(curve.twist) ** group.m
        pattern = so_even_singularity_pattern(curve, twisted.as_poly())
        out["singularity_pattern"] = {
            "pass": pattern.passed,
            "count": pattern.count,
            "witnesses": [[str(a), str(b)] for a, b in pattern.witnesses],
        }
        ok = ok and pattern.passed
    out["pass"] = ok
    return out


def _analyze_field(fld: HiggsField, checks: tuple[str, ...]) -> dict:
    report: dict = {
        "group": fld.group.kind,
        "m": fld.group.m,
        "marked_points": [q_to_str(a) for a in fld.marked_points],
        "checks": {},
    }
    for name in checks:
        if name == "membership":
            section = {"pass": check_lie_membership(fld.matrix, fld.gram)}
        elif name == "charpoly":
            section = {
                "pass": True,
                "coefficients": [c.to_json() for c in fld.char_data().coeffs],
            }
        elif name == "parity":
            parity = parity_classify(fld.char_data(), fld.group)
            section = {"pass": parity.passed}
            if not parity.passed:
                section["first_odd_index"] = parity.first_odd_index
        elif name == "strong-parabolic":
            strong = strong_parabolic_check(fld)
            section = {"pass": strong.passed, "failures": list(strong.failures)}
        elif name == "pfaffian":
            pf = pfaffian_square_check(fld)
            section = {
                "pass": pf.passed,
                "pfaffian": pf.pfaffian.to_json(),
                "unit": pf.unit.to_json(),
            }
        elif name == "spectral":
            section = _spectral_section(fld)
        else:
            raise ValueError(f"unknown check {name!r}")
        report["checks"][name] = section
    report["all_pass"] = all(sec["pass"] for sec in report["checks"].values())
    return report


def _format_analysis(report: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(report)
    lines = [f"field: {report['group']} m={report['m']} marked={report['marked_points']}"]
    for name, sec in report["checks"].items():
        lines.append(f"{name}: {'PASS' if sec['pass'] else 'FAIL'}")
        for failure in sec.get("failures", []):
            lines.append(f"  - {failure}")
    lines.append("overall: " + ("PASS" if report["all_pass"] else "FAIL"))
    return "\n".join(lines)


def cmd_analyze(cfg: RunConfig) -> int:
    fld = HiggsField.from_dict(_read_input(cfg.inp))
    checks = list(cfg.checks)
    if "pfaffian" in checks and fld.group.kind != "so-even":
        if cfg.checks != ALL_CHECKS:
            raise GroupError("pfaffian check applies to so-even fields only")
        checks.remove("pfaffian")
    report = _analyze_field(fld, tuple(checks))
    _write_output(cfg.out, _format_analysis(report, cfg.fmt))
    return OK if report["all_pass"] else CHECK_FAILED


# -- reduce-odd ---------------------------------------------------------------------


def cmd_reduce_odd(cfg: RunConfig) -> int:
    fld = HiggsField.from_dict(_read_input(cfg.inp))
    if fld.group.kind != "so-odd":
        raise GroupError("wrong group: reduce-odd needs an so-odd field")
    red = so_odd_reduce(fld)
    reduced_field = HiggsField(
        GroupSpec.sp(fld.group.m), red.induced_gram, red.reduced, fld.marked_points
    )
    full = list(fld.char_data().coeffs)
    reduced_char = char_poly(red.reduced)
    char_ok = full[-1].is_zero and full[:-1] == reduced_char
    doc = reduced_field.to_dict()
    doc["reduction_report"] = {
        "kernel_vector": [p.to_json() for p in red.kernel_vector],
        "removed_index": red.removed_index,
        "char_identity": "PASS" if char_ok else "FAIL",
        "induced_gram_skew": "PASS",  # enforced by construction, or we'd have raised
    }
    _write_output(cfg.out, _dump_json(doc))
    return OK if char_ok else CHECK_FAILED


# -- argument parsing -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parahiggs",
        description="Exact checks for symplectic/orthogonal parabolic Higgs fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dims = sub.add_parser("dims", help="dimension identity chain for one group")
    dims.add_argument("--group", required=True, choices=GROUP_KINDS)
    dims.add_argument("-m", required=True, help="m or m-range lo:hi")
    dims.add_argument("-g", required=True, help="genus or range lo:hi")
    dims.add_argument("-n", required=True, help="marked-point count or range lo:hi")
    dims.add_argument("--deg-m", type=int, default=0, help="degree of the twisting bundle M")
    dims.add_argument("--format", default="csv", choices=("json", "csv", "md"))
    dims.add_argument("-o", "--output", default="-")

    sweep = sub.add_parser("sweep", help="identity chain over a parameter box")
    sweep.add_argument("--groups", default="sp,so-even,so-odd")
    sweep.add_argument("-m", default="1:4")
    sweep.add_argument("-g", default="2:6")
    sweep.add_argument("-n", default="1:4")
    sweep.add_argument("--deg-m", type=int, default=0)
    sweep.add_argument("--format", default="csv", choices=("json", "csv", "md"))
    sweep.add_argument("-o", "--output", default="-")

    gen = sub.add_parser("gen", help="generate a random strongly parabolic field")
    gen.add_argument("--group", required=True, choices=GROUP_KINDS)
    gen.add_argument("-m", required=True, help="group parameter m")
    gen.add_argument("--marked", required=True, help="comma-separated rational points")
    gen.add_argument("--deg-bound", type=int, default=1)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", default="-")

    analyze = sub.add_parser("analyze", help="run checkers on a field JSON")
    analyze.add_argument("input", nargs="?", default="-")
    analyze.add_argument("--checks", default=None, help=f"subset of {','.join(ALL_CHECKS)}")
    analyze.add_argument("--format", default="text", choices=("json", "text"))
    analyze.add_argument("-o", "--output", default="-")

    reduce_odd = sub.add_parser("reduce-odd", help="kernel-quotient reduction of an so-odd field")
    reduce_odd.add_argument("input", nargs="?", default="-")
    reduce_odd.add_argument("-o", "--output", default="-")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    if args.command in ("dims", "sweep"):
        cfg.groups = (
            (args.group,) if args.command == "dims" else tuple(args.groups.split(","))
        )
        for kind in cfg.groups:
            if kind not in GROUP_KINDS:
                raise ValueError(f"unknown group {kind!r}")
        cfg.ms = _parse_range(args.m)
        cfg.gs = _parse_range(args.g)
        cfg.ns = _parse_range(args.n)
        if cfg.ms[0] < 1 or cfg.gs[0] < 2 or cfg.ns[0] < 1:
            raise ValueError("need m >= 1, g >= 2, n >= 1")
        cfg.deg_m = args.deg_m
        cfg.fmt = args.format
        cfg.out = args.output
    elif args.command == "gen":
        cfg.groups = (args.group,)
        cfg.ms = _parse_range(args.m)
        cfg.marked = _parse_marked(args.marked)
        if not cfg.marked:
            raise ValueError("need at least one marked point")
        if args.deg_bound < 0:
            raise ValueError("degree bound must be >= 0")
        if not 0 <= args.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        cfg.degree_bound = args.deg_bound
        cfg.seed = args.seed
        cfg.out = args.output
    else:
        cfg.inp = args.input
        cfg.out = args.output
        if args.command == "analyze":
            cfg.fmt = args.format
            if args.checks is not None:
                cfg.checks = tuple(args.checks.split(","))
                bad = [c for c in cfg.checks if c not in ALL_CHECKS]
                if bad:
                    raise ValueError(f"unknown checks: {','.join(bad)}")
    return cfg


_HANDLERS = {
    "dims": _run_suite,
    "sweep": _run_suite,
    "gen": cmd_gen,
    "analyze": cmd_analyze,
    "reduce-odd": cmd_reduce_odd,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _HANDLERS[args.command](cfg)
    except NonGenericFieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CHECK_FAILED
    except (ValueError, KeyError, OSError, ArithmeticError, PoleOrderError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
