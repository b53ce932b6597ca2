"""Command line front end: the ``pbn`` tool.

Subcommands expose the dimension reports, class formulas, point counts,
limit-series solver and the cross-module verification suites.  Output is a
canonical machine-readable record (json, csv or md): keys sorted, rationals
serialized as reduced "p/q" strings, integers unquoted.  Exit codes: 0 for
success (including proven-empty loci), 1 for invariant violations, 2 for
usage errors.  No configuration files and no environment variables, so a
fixed command line always reproduces the same bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import formulas, lagrangian, theta_ring, verify
from .bn_numerics import (
    DimReport,
    VanishingSequence,
    expected_dim_V,
    expected_dim_V_divisor,
    expected_dim_V_eta,
    expected_dim_V_eta_divisor,
    expected_dim_V_eta_pointed,
)
from .errors import InvariantViolationError, PrymBNError
from .limit_series import (
    RAMIFIED_X_PLUS_Y,
    UNRAMIFIED_DELTA1,
    LimitProblem,
    enumerate_candidates,
    solve_unique,
)
from .theta_ring import THETA_PRIME, ThetaClass

USAGE_ERROR = 2
INVARIANT_ERROR = 1


class UsageError(Exception):
    pass


def _rat(x) -> Any:
    """Canonical rational: unquoted integer or reduced "p/q" string."""
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _theta_json(c: ThetaClass) -> Dict[str, Any]:
    name = "theta'" if c.generator == THETA_PRIME else "xi"
    return {"coeff": _rat(c.coeff), "exponent": c.exponent, "generator": name}


def _dim_json(rep: DimReport) -> Dict[str, Any]:
    return {
        "value": rep.value,
        "exactness": rep.exactness,
        "emptiness": rep.emptiness,
    }


def _parse_sequence(text: str) -> VanishingSequence:
    try:
        entries = tuple(int(t) for t in text.split(","))
        return VanishingSequence(entries)
    except (ValueError, PrymBNError) as exc:
        raise UsageError(f"invalid vanishing sequence {text!r}: {exc}") from exc


def _record(command: str, params: Dict[str, Any], result: Dict[str, Any],
            citations: List[str]) -> Dict[str, Any]:
    return {
        "command": command,
        "params": params,
        "result": result,
        "citations": citations,
    }


def _cmd_dim(args) -> Dict[str, Any]:
    locus = args.locus
    params: Dict[str, Any] = {"locus": locus, "g": args.g, "k": args.k}
    try:
        if locus == "V":
            if args.r is None:
                raise UsageError("--r is required for locus V")
            params["r"] = args.r
            rep = expected_dim_V(args.g, args.k, args.r)
        elif locus == "V_eta":
            if args.r is None:
                raise UsageError("--r is required for locus V_eta")
            params["r"] = args.r
            rep = expected_dim_V_eta(args.g, args.k, args.r)
        elif locus == "V_eta_pointed":
            if args.a is None:
                raise UsageError("--a is required for locus V_eta_pointed")
            seq = _parse_sequence(args.a)
            params["a"] = list(seq.entries)
            rep = expected_dim_V_eta_pointed(args.g, args.k, seq)
        elif locus == "V_div":
            if args.r is None or args.d is None:
                raise UsageError("--r and --d are required for locus V_div")
            params["r"], params["d"] = args.r, args.d
            rep = expected_dim_V_divisor(args.g, args.k, args.r, args.d)
        else:  # V_eta_div
            if args.r is None or args.d is None:
                raise UsageError("--r and --d are required for locus V_eta_div")
            params["r"], params["d"] = args.r, args.d
            rep = expected_dim_V_eta_divisor(args.g, args.k, args.r, args.d)
    except PrymBNError as exc:
        raise UsageError(str(exc)) from exc
    return _record("dim", params, _dim_json(rep), [rep.source])


def _cmd_class(args) -> Dict[str, Any]:
    locus = args.locus
    params: Dict[str, Any] = {"locus": locus}
    citations: List[str]
    try:
        if locus == "V_unramified":
            if args.r is None:
                raise UsageError("--r is required for locus V_unramified")
            params["r"] = args.r
            cls = formulas.unramified_class(args.r)
            citations = ["closed-form class of the norm-omega locus on P+/P-"]
        elif locus == "V_eta":
            if args.r is None:
                raise UsageError("--r is required for locus V_eta")
            params["r"] = args.r
            cls = formulas.twisted_class(args.r)
            citations = ["closed-form class of the twisted locus"]
        else:  # V_eta_pointed
            if args.a is None:
                raise UsageError("--a is required for locus V_eta_pointed")
            seq = _parse_sequence(args.a)
            params["a"] = list(seq.entries)
            cls = formulas.twisted_pointed_class(seq)
            citations = ["closed-form class of the pointed twisted locus"]
    except PrymBNError as exc:
        raise UsageError(str(exc)) from exc

    result: Dict[str, Any] = {"class": _theta_json(cls)}
    if args.engine:
        params["engine"] = True
        if locus == "V_unramified":
            lam = lagrangian.staircase(args.r) if args.r >= 1 else None
            if lam is None:
                engine = ThetaClass(Fraction(1), 0, theta_ring.XI)
            else:
                engine = theta_ring.substitute_theta_prime_as_2xi(
                    lagrangian.p_tilde(lam, formulas.chern_series_W(lam.weight))
                )
            citations.append("P-tilde Pfaffian evaluation at c_i = theta'^i/i!")
        elif locus == "V_eta":
            lam = lagrangian.staircase(args.r + 1)
            engine = lagrangian.q_tilde(lam, formulas.chern_series_W(lam.weight))
            citations.append("Q-tilde Pfaffian evaluation at c_i = theta'^i/i!")
        else:
            engine = lagrangian.lagrangian_class_pointed(seq)
            citations.append("Q-tilde Pfaffian evaluation at c_i = theta'^i/i!")
        result["engine"] = _theta_json(engine)
        result["engine_agrees"] = engine == cls
        if engine.exponent == cls.exponent and cls.coeff != 0:
            result["engine_ratio"] = _rat(engine.coeff / cls.coeff)
    return _record("class", params, result, citations)


def _cmd_count(args) -> Dict[str, Any]:
    params = {"g": args.g, "k": args.k, "r": args.r}
    if args.k not in (1, 2):
        raise UsageError("counts are only calibrated for k = 1 or 2")
    try:
        rep = expected_dim_V_eta(args.g, args.k, args.r)
        if rep.value != 0:
            raise UsageError(
                f"expected dimension is {rep.value}, not 0; no finite count"
            )
        space = theta_ring.make_space(theta_ring.RAMIFIED_TWISTED, args.g, args.k)
        n = formulas.count_points(formulas.twisted_class(args.r), space)
    except InvariantViolationError:
        raise
    except PrymBNError as exc:
        raise UsageError(str(exc)) from exc
    return _record(
        "count",
        params,
        {"count": n, "theta_top": space.theta_top},
        ["cardinality of the zero-dimensional twisted locus"],
    )


_FLAVOR_MAP = {
    "unramified": UNRAMIFIED_DELTA1,
    "ramified": RAMIFIED_X_PLUS_Y,
}


def _cmd_limits(args) -> Dict[str, Any]:
    params: Dict[str, Any] = {"flavor": args.flavor, "g": args.g, "r": args.r}
    try:
        problem = LimitProblem(_FLAVOR_MAP[args.flavor], args.g, args.r)
    except PrymBNError as exc:
        raise UsageError(str(exc)) from exc
    citations = ["vanishing orders of aspects of Prym limit linear series"]
    if problem.s < 0:
        result: Dict[str, Any] = {"empty": True, "s": problem.s}
        return _record("limits", params, result, citations)
    solution = solve_unique(problem)
    result = {"empty": False, "s": problem.s, "solution": list(solution.entries)}
    if args.show_candidates:
        params["show_candidates"] = True
        result["candidates"] = [
            list(a.entries) for a in enumerate_candidates(problem)
        ]
    return _record("limits", params, result, citations)


def _cmd_verify(args) -> Dict[str, Any]:
    params = {"max_weight": args.max_weight, "max_g": args.max_g, "max_r": args.max_r}
    if min(params.values()) < 0:
        raise UsageError("verification bounds must be non-negative")
    results = verify.run_all(args.max_weight, args.max_g, args.max_r)
    suites = []
    for res in results:
        entry: Dict[str, Any] = {
            "name": res.name,
            "cases": res.cases,
            "passed": res.passed,
        }
        if res.counterexample:
            entry["counterexample"] = res.counterexample
        suites.append(entry)
    all_passed = all(res.passed for res in results)
    return _record(
        "verify",
        params,
        {"suites": suites, "all_passed": all_passed},
        ["cross-module identity suites"],
    )


def _flatten_record(record: Dict[str, Any]) -> Dict[str, str]:
    flat: Dict[str, str] = {}

    def walk(value: Any, key: str) -> None:
        if isinstance(value, dict):
            for k in sorted(value):
                walk(value[k], f"{key}.{k}" if key else k)
        elif isinstance(value, list):
            flat[key] = json.dumps(value, sort_keys=True, separators=(",", ":"))
        else:
            flat[key] = "" if value is None else str(value)

    walk(record, "")
    return flat


def _render(record: Dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, sort_keys=True, indent=2) + "\n"
    flat = _flatten_record(record)
    keys = sorted(flat)
    if fmt == "csv":
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(keys)
        writer.writerow([flat[k] for k in keys])
        return buf.getvalue()
    # md
    lines = ["| key | value |", "| --- | --- |"]
    lines += [f"| {k} | {flat[k]} |" for k in keys]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pbn",
        description="Exact numerical invariants of Prym-Brill-Noether loci.",
    )
    parser.add_argument(
        "--format", choices=("json", "csv", "md"), default="json",
        help="output format (default: json)",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_dim = sub.add_parser("dim", help="expected-dimension report for a locus")
    p_dim.add_argument(
        "--locus", required=True,
        choices=("V", "V_eta", "V_eta_pointed", "V_div", "V_eta_div"),
    )
    p_dim.add_argument("--g", type=int, required=True)
    p_dim.add_argument("--k", type=int, required=True)
    p_dim.add_argument("--r", type=int)
    p_dim.add_argument("--d", type=int)
    p_dim.add_argument("--a", help="comma-separated vanishing sequence, e.g. 0,2")
    p_dim.set_defaults(func=_cmd_dim)

    p_class = sub.add_parser("class", help="cohomology class as a theta multiple")
    p_class.add_argument(
        "--locus", required=True,
        choices=("V_unramified", "V_eta", "V_eta_pointed"),
    )
    p_class.add_argument("--r", type=int)
    p_class.add_argument("--a", help="comma-separated vanishing sequence")
    p_class.add_argument(
        "--engine", action="store_true",
        help="also run the Pfaffian engine and report agreement",
    )
    p_class.set_defaults(func=_cmd_class)

    p_count = sub.add_parser("count", help="point count of a zero-dimensional locus")
    p_count.add_argument("--g", type=int, required=True)
    p_count.add_argument("--k", type=int, required=True)
    p_count.add_argument("--r", type=int, required=True)
    p_count.set_defaults(func=_cmd_count)

    p_limits = sub.add_parser("limits", help="limit-series vanishing orders")
    p_limits.add_argument(
        "--flavor", required=True, choices=tuple(_FLAVOR_MAP),
    )
    p_limits.add_argument("--g", type=int, required=True)
    p_limits.add_argument("--r", type=int, required=True)
    p_limits.add_argument("--show-candidates", action="store_true")
    p_limits.set_defaults(func=_cmd_limits)

    p_verify = sub.add_parser("verify", help="run the cross-module identity suites")
    p_verify.add_argument("--max-weight", type=int, default=24)
    p_verify.add_argument("--max-g", type=int, default=12)
    p_verify.add_argument("--max-r", type=int, default=4)
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record = args.func(args)
    except UsageError as exc:
        print(f"pbn: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except InvariantViolationError as exc:
        print(f"pbn: invariant violation: {exc}", file=sys.stderr)
        return INVARIANT_ERROR
    sys.stdout.write(_render(record, args.format))
    if args.subcommand == "verify" and not record["result"]["all_passed"]:
        return INVARIANT_ERROR
    return 0


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
