"""Command-line front end: problem files in, canonical (optionally JSON) listings out.

Problem files are UTF-8 ``key = value`` lines; ``#`` starts a comment:

    coeffs = 0 -4 0 1        # ascending: coeffs[k] multiplies x^k y^(n-k)
    m = 3
    K = 1                    # rational, e.g. 3/2
    epsilon = 1/2            # optional, default 1/2
    ymax = 20                # optional enumeration height, default 100
    oracle_height = 4        # optional box half-width, default 4

Exit status: 0 success (all cross-checks pass), 1 usage/validation error,
2 cross-check discrepancy.  Identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

from .abssolver import solve_abs
from .forms import BinaryForm, InadmissibleFormError, check_admissible
from .oracle import brute_force
from .quadfield import QuadraticField, RingElement
from .reducer import RelativeSolutionSet, solve_relative
from .rootbounds import stable_constants, thresholds
from .theorem import full_report


class CliError(Exception):
    """Usage or validation failure; maps to exit status 1."""


@dataclass
class ProblemSpec:
    coeffs: tuple[int, ...]
    m: int
    K: Fraction
    epsilon: Fraction = Fraction(1, 2)
    ymax: int = 100
    oracle_height: int = 4

    def form(self) -> BinaryForm:
        return BinaryForm(self.coeffs)

    def field(self) -> QuadraticField:
        return QuadraticField(self.m)


def _parse_rational(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"field '{name}': not a rational number: {text!r}") from exc


def _parse_int(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise CliError(f"field '{name}': not an integer: {text!r}") from exc


def parse_problem_text(text: str) -> ProblemSpec:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key in values:
            raise CliError(f"line {lineno}: duplicate field '{key}'")
        values[key] = value.strip()
    known = {"coeffs", "m", "K", "epsilon", "ymax", "oracle_height"}
    for key in values:
        if key not in known:
            raise CliError(f"unknown field '{key}' (known: {', '.join(sorted(known))})")
    for required in ("coeffs", "m", "K"):
        if required not in values:
            raise CliError(f"missing required field '{required}'")
    try:
        coeffs = tuple(int(tok) for tok in values["coeffs"].split())
    except ValueError as exc:
        raise CliError(f"field 'coeffs': expected integers, got {values['coeffs']!r}") from exc
    if len(coeffs) < 2:
        raise CliError("field 'coeffs': need at least two coefficients (ascending order)")
    spec = ProblemSpec(
        coeffs=coeffs,
        m=_parse_int(values["m"], "m"),
        K=_parse_rational(values["K"], "K"),
    )
    if "epsilon" in values:
        spec.epsilon = _parse_rational(values["epsilon"], "epsilon")
    if "ymax" in values:
        spec.ymax = _parse_int(values["ymax"], "ymax")
    if "oracle_height" in values:
        spec.oracle_height = _parse_int(values["oracle_height"], "oracle_height")
    _validate(spec)
    return spec


def _validate(spec: ProblemSpec) -> None:
    if spec.m < 1:
        raise CliError("field 'm': must be a positive integer")
    try:
        spec.field()
    except ValueError as exc:
        raise CliError(f"field 'm': {exc}") from exc
    try:
        spec.form()
    except ValueError as exc:
        raise CliError(f"field 'coeffs': {exc}") from exc
    if spec.K < 1:
        raise CliError("field 'K': must be >= 1")
    if not (0 < spec.epsilon < 1):
        raise CliError("field 'epsilon': must lie strictly between 0 and 1")
    if spec.ymax < 0:
        raise CliError("field 'ymax': must be nonnegative")
    if spec.oracle_height < 0:
        raise CliError("field 'oracle_height': must be nonnegative")


def load_problem(path: str) -> ProblemSpec:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CliError(f"cannot read problem file {path!r}: {exc}") from exc
    return parse_problem_text(text)


def _frac_str(x: Fraction) -> str:
    return str(Fraction(x))


def decimal_str(x: Fraction, digits: int = 10) -> str:
    """Truncated fixed-point decimal rendering of an exact rational."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole, rest = divmod(x.numerator, x.denominator)
    frac = (rest * 10**digits) // x.denominator
    return f"{sign}{whole}.{frac:0{digits}d}"


def _solution_rows(result: RelativeSolutionSet) -> list[dict]:
    return [
        {"x1": s.x.u1, "x2": s.x.u2, "y1": s.y.u1, "y2": s.y.u2, "norm": s.value_norm}
        for s in result.solutions
    ]


def _family_rows(result: RelativeSolutionSet) -> list[dict]:
    return [
        {"root": f.root, "x_step": [f.x_step.u1, f.x_step.u2], "y_step": [f.y_step.u1, f.y_step.u2]}
        for f in result.families
    ]


def solve_payload(spec: ProblemSpec, result: RelativeSolutionSet) -> dict:
    return {
        "command": "solve",
        "coeffs": list(spec.coeffs),
        "m": spec.m,
        "s": spec.field().s,
        "K": _frac_str(spec.K),
        "epsilon": _frac_str(spec.epsilon),
        "ymax": result.search_height,
        "solutions": _solution_rows(result),
        "families": _family_rows(result),
        "cross_check_ok": result.cross_check_ok,
    }


def oracle_payload(spec: ProblemSpec, height: int, result) -> dict:
    return {
        "command": "oracle",
        "coeffs": list(spec.coeffs),
        "m": spec.m,
        "K": _frac_str(spec.K),
        "height": height,
        "solutions": [
            {"x1": q[0], "x2": q[1], "y1": q[2], "y2": q[3], "norm": nv}
            for q, nv in result.solutions
        ],
    }


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _solution_lines(rows: list[dict]) -> list[str]:
    return [f"{r['x1']} {r['x2']} {r['y1']} {r['y2']} {r['norm']}" for r in rows]


def cmd_solve(args) -> int:
    spec = load_problem(args.problem)
    if args.epsilon:
        spec = replace(spec, epsilon=_parse_rational(args.epsilon, "--epsilon"))
    ymax = args.ymax if args.ymax is not None else spec.ymax
    result = solve_relative(spec.field(), spec.form(), spec.K, spec.epsilon, ymax)
    payload = solve_payload(spec, result)
    lines = [
        f"form {spec.form()}",
        f"m {spec.m} (s={spec.field().s})",
        f"K {_frac_str(spec.K)}",
        f"ymax {ymax}",
        f"solutions {len(result.solutions)}",
        *_solution_lines(payload["solutions"]),
    ]
    if args.families:
        lines.append(f"families {len(result.families)}")
        for fam in result.families:
            lines.append(f"family root={fam.root} x_step={fam.x_step} y_step={fam.y_step}")
    lines.append("cross-check ok" if result.cross_check_ok else "cross-check FAILED")
    _emit(args, payload, lines)
    return 0 if result.cross_check_ok else 2


def cmd_oracle(args) -> int:
    spec = load_problem(args.problem)
    height = args.height if args.height is not None else spec.oracle_height
    result = brute_force(spec.field(), spec.form(), spec.K, height)
    payload = oracle_payload(spec, height, result)
    lines = [
        f"form {spec.form()}",
        f"m {spec.m} (s={spec.field().s})",
        f"K {_frac_str(spec.K)}",
        f"height {height}",
        f"solutions {len(result.solutions)}",
        *_solution_lines(payload["solutions"]),
    ]
    _emit(args, payload, lines)
    return 0


def cmd_abs(args) -> int:
    try:
        coeffs = tuple(int(tok) for tok in args.coeffs.split())
    except ValueError as exc:
        raise CliError(f"--coeffs: expected integers, got {args.coeffs!r}") from exc
    try:
        form = BinaryForm(coeffs)
    except ValueError as exc:
        raise CliError(f"--coeffs: {exc}") from exc
    bound = _parse_rational(args.kprime, "--kprime")
    if bound < 0:
        raise CliError("--kprime: must be nonnegative")
    if args.ymax < 0:
        raise CliError("--ymax: must be nonnegative")
    report = check_admissible(form)
    if not report.ok:
        raise CliError(f"form inadmissible: {report.reason}")
    result = solve_abs(form, bound, args.ymax)
    payload = {
        "command": "abs",
        "coeffs": list(coeffs),
        "bound": _frac_str(result.bound),
        "ymax": result.height,
        "complete_within_height": result.complete_within_height,
        "solutions": [[a, b, v] for a, b, v in result.solutions],
    }
    lines = [
        f"form {form}",
        f"bound {_frac_str(result.bound)}",
        f"ymax {result.height}",
        f"solutions {len(result.solutions)}",
        *[f"{a} {b} {v}" for a, b, v in result.solutions],
    ]
    _emit(args, payload, lines)
    return 0


def cmd_constants(args) -> int:
    spec = load_problem(args.problem)
    epsilon = _parse_rational(args.epsilon, "--epsilon") if args.epsilon else spec.epsilon
    try:
        _, consts = stable_constants(spec.form(), spec.K, epsilon, spec.field())
    except (ValueError, InadmissibleFormError) as exc:
        raise CliError(str(exc)) from exc
    gates = thresholds(consts, spec.field())
    disp = gates.display()
    payload = {
        "command": "constants",
        "coeffs": list(spec.coeffs),
        "m": spec.m,
        "degree": consts.degree,
        "K": _frac_str(consts.K),
        "epsilon": _frac_str(consts.epsilon),
        "min_gap": [_frac_str(consts.min_gap_lower), _frac_str(consts.min_gap_upper)],
        "gap_product": [_frac_str(consts.gap_product_lower), _frac_str(consts.gap_product_upper)],
        "approx_coeff": [_frac_str(consts.approx_coeff_lower), _frac_str(consts.approx_coeff_upper)],
        "gate": [_frac_str(consts.gate_lower), _frac_str(consts.gate_upper)],
        "thresholds": {
            "proportionality": _frac_str(disp[0]),
            "real_vanish": _frac_str(disp[1]),
            "imag_vanish": _frac_str(disp[2]),
        },
        "thresholds_sq": {
            "proportionality": _frac_str(gates.proportionality_sq),
            "real_vanish": _frac_str(gates.real_vanish_sq),
            "imag_vanish": _frac_str(gates.imag_vanish_sq),
        },
    }

    def span(lo: Fraction, hi: Fraction) -> str:
        return f"[{_frac_str(lo)}, {_frac_str(hi)}] ~ [{decimal_str(lo)}, {decimal_str(hi)}]"

    lines = [
        f"form {spec.form()}",
        f"m {spec.m} (s={spec.field().s})",
        f"K {_frac_str(consts.K)}  epsilon {_frac_str(consts.epsilon)}",
        f"A (min root gap)       in {span(consts.min_gap_lower, consts.min_gap_upper)}",
        f"B (min gap product)    in {span(consts.gap_product_lower, consts.gap_product_upper)}",
        f"C (approx coefficient) in {span(consts.approx_coeff_lower, consts.approx_coeff_upper)}",
        f"G (gate radius)        in {span(consts.gate_lower, consts.gate_upper)}",
        f"threshold proportionality <= {_frac_str(disp[0])} ~ {decimal_str(disp[0])}",
        f"threshold real-vanish     <= {_frac_str(disp[1])} ~ {decimal_str(disp[1])}",
        f"threshold imag-vanish     <= {_frac_str(disp[2])} ~ {decimal_str(disp[2])}",
    ]
    _emit(args, payload, lines)
    return 0


def _parse_candidate(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise CliError(f"candidate {text!r}: expected four comma-separated integers x1,x2,y1,y2")
    try:
        x1, x2, y1, y2 = (int(p) for p in parts)
    except ValueError as exc:
        raise CliError(f"candidate {text!r}: expected integers") from exc
    return x1, x2, y1, y2


def _flag(applicable: bool, holds: bool) -> str:
    if not applicable:
        return "n/a"
    return "holds" if holds else "VIOLATED"


def cmd_verify(args) -> int:
    spec = load_problem(args.problem)
    field = spec.field()
    form = spec.form()
    try:
        _, consts = stable_constants(form, spec.K, spec.epsilon, field)
    except (ValueError, InadmissibleFormError) as exc:
        raise CliError(str(exc)) from exc
    rows = []
    lines = []
    status = 0
    for text in args.candidates:
        x1, x2, y1, y2 = _parse_candidate(text)
        x = RingElement(x1, x2)
        y = RingElement(y1, y2)
        value_norm = field.norm(field.evaluate_form(form, x, y))
        is_solution = value_norm <= spec.K**2
        report = full_report(field, form, consts, x, y, spec.K)
        if is_solution and not report.ok:
            status = 2
        rows.append(
            {
                "x1": x1,
                "x2": x2,
                "y1": y1,
                "y2": y2,
                "norm_value": value_norm,
                "is_solution": is_solution,
                "real_bound_ok": report.real_bound_ok,
                "imag_bound_ok": report.imag_bound_ok,
                "joint_bound_ok": report.joint_bound_ok,
                "proportional_applicable": report.proportional_applicable,
                "proportional_holds": report.proportional_holds,
                "real_vanish_applicable": report.real_vanish_applicable,
                "real_vanish_holds": report.real_vanish_holds,
                "imag_vanish_applicable": report.imag_vanish_applicable,
                "imag_vanish_holds": report.imag_vanish_holds,
                "all_ok": report.ok,
            }
        )
        kind = "solution" if is_solution else "non-solution"
        lines.append(
            f"candidate {x1},{x2},{y1},{y2} {kind} norm={value_norm} "
            f"real_bound={'pass' if report.real_bound_ok else 'FAIL'} "
            f"imag_bound={'pass' if report.imag_bound_ok else 'FAIL'} "
            f"joint={'pass' if report.joint_bound_ok else 'FAIL'} "
            f"proportionality={_flag(report.proportional_applicable, report.proportional_holds)} "
            f"real-vanish={_flag(report.real_vanish_applicable, report.real_vanish_holds)} "
            f"imag-vanish={_flag(report.imag_vanish_applicable, report.imag_vanish_holds)}"
        )
    payload = {
        "command": "verify",
        "coeffs": list(spec.coeffs),
        "m": spec.m,
        "K": _frac_str(spec.K),
        "epsilon": _frac_str(spec.epsilon),
        "candidates": rows,
    }
    _emit(args, payload, lines)
    return status


def cmd_check(args) -> int:
    spec = load_problem(args.problem)
    epsilon = _parse_rational(args.epsilon, "--epsilon") if args.epsilon else spec.epsilon
    ymax = args.ymax if args.ymax is not None else spec.ymax
    height = args.height if args.height is not None else spec.oracle_height
    solved = solve_relative(spec.field(), spec.form(), spec.K, epsilon, ymax)
    oracle = brute_force(spec.field(), spec.form(), spec.K, height)
    box = {
        quad
        for quad in solved.quadruples()
        if max(abs(quad[0]), abs(quad[1]), abs(quad[2]), abs(quad[3])) <= height
    }
    oracle_set = oracle.quadruples()
    solver_only = sorted(box - oracle_set)
    oracle_only = sorted(oracle_set - box)
    match = not solver_only and not oracle_only and solved.cross_check_ok
    payload = {
        "command": "check",
        "coeffs": list(spec.coeffs),
        "m": spec.m,
        "K": _frac_str(spec.K),
        "epsilon": _frac_str(epsilon),
        "ymax": ymax,
        "height": height,
        "match": match,
        "common": len(box & oracle_set),
        "solver_only": [list(q) for q in solver_only],
        "oracle_only": [list(q) for q in oracle_only],
        "cross_check_ok": solved.cross_check_ok,
    }
    lines = [
        f"form {spec.form()}",
        f"m {spec.m} (s={spec.field().s})",
        f"K {_frac_str(spec.K)}",
        f"ymax {ymax} height {height}",
        f"common {len(box & oracle_set)}",
    ]
    for quad in solver_only:
        lines.append(f"solver-only {quad[0]} {quad[1]} {quad[2]} {quad[3]}")
    for quad in oracle_only:
        lines.append(f"oracle-only {quad[0]} {quad[1]} {quad[2]} {quad[3]}")
    lines.append("MATCH" if match else "MISMATCH")
    _emit(args, payload, lines)
    return 0 if match else 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep usage failures at exit status 1
        raise CliError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="relthue", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="structured output with the same fields")

    p = sub.add_parser("solve", help="solve the relative inequality within the height bound")
    p.add_argument("problem")
    p.add_argument("--epsilon", help="override epsilon from the problem file")
    p.add_argument("--ymax", type=int, help="override the enumeration height")
    p.add_argument("--families", action="store_true", help="also print parametric zero families")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("abs", help="enumerate an absolute inequality |F(a,b)| <= K'")
    p.add_argument("--coeffs", required=True, help="ascending coefficients, space separated")
    p.add_argument("--kprime", required=True, help="rational bound K'")
    p.add_argument("--ymax", type=int, required=True, help="height bound on |b|")
    common(p)
    p.set_defaults(func=cmd_abs)

    p = sub.add_parser("constants", help="print certified constant enclosures and thresholds")
    p.add_argument("problem")
    p.add_argument("--epsilon", help="override epsilon from the problem file")
    common(p)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("verify", help="run the structure predicates on candidate quadruples")
    p.add_argument("problem")
    p.add_argument("candidates", nargs="+", help="candidates as x1,x2,y1,y2")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force all solutions in a coordinate box")
    p.add_argument("problem")
    p.add_argument("--height", type=int, help="box half-width (default from problem file)")
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="solve, brute-force, and diff the two solution sets")
    p.add_argument("problem")
    p.add_argument("--epsilon", help="override epsilon")
    p.add_argument("--ymax", type=int, help="override the enumeration height")
    p.add_argument("--height", type=int, help="override the oracle box half-width")
    common(p)
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InadmissibleFormError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
