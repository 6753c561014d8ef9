"""Command-line front end.

Six subcommands: ``phi`` and ``fib`` expose the exact kernel, ``solve``
and ``verify`` the golden-configuration machinery, ``sweep`` writes the
two beta curves to CSV, and ``diagram`` renders a scene as SVG.

Exit codes: 0 on success, 1 for domain or runtime failures (invalid
lengths, no root, unwritable output file), 2 for usage errors (argparse's
own convention).
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from typing import Sequence

from .diagram import render_svg
from .exactfield import ONE, PHI, fib_ratio, fibonacci, golden_identity_check
from .geometry import (
    GeometryError,
    TangentSecantConfig,
    golden_config,
    measure_chords,
    realize,
    theorem_check,
)
from .solver import DEFAULT_TOL, SolverError, solve_alpha, sweep, validate_ratio

#: Significant digits used in sweep CSV files and the printed bracket.
_SWEEP_FORMAT = "{:.9g}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goldensecant",
        description=(
            "Golden-ratio tools: exact arithmetic in Q(sqrt 5), the "
            "tangent-secant equivalence, and the golden-configuration solver."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("phi", help="print the golden ratio and its defining identity")

    fib = sub.add_parser("fib", help="Fibonacci number and consecutive ratio")
    fib.add_argument("--n", type=int, required=True, help="index, n >= 0")

    solve = sub.add_parser(
        "solve", help="solve the golden configuration for a chord/diameter ratio"
    )
    solve.add_argument(
        "--rho", type=float, required=True, help="chord/diameter ratio in (0, 1]"
    )
    solve.add_argument(
        "--radians", action="store_true", help="report angles in radians"
    )
    solve.add_argument(
        "--tol", type=float, default=DEFAULT_TOL, help="bisection tolerance (radians)"
    )

    verify = sub.add_parser(
        "verify", help="check the chord=tangent <-> golden-ratio equivalence"
    )
    verify.add_argument(
        "--b", type=float, required=True, help="outside stretch of the secant"
    )
    verify.add_argument("--c", type=float, required=True, help="chord length")
    verify.add_argument("--r", type=float, required=True, help="circle radius")
    verify.add_argument(
        "--tol",
        type=float,
        default=1e-6,
        help=(
            "relative comparison tolerance (default 1e-6, matching "
            "6-significant-digit decimal inputs)"
        ),
    )

    sweep_cmd = sub.add_parser(
        "sweep", help="write both beta curves across the alpha bracket as CSV"
    )
    sweep_cmd.add_argument("--rho", type=float, required=True)
    sweep_cmd.add_argument("--n", type=int, required=True, help="number of samples")
    sweep_cmd.add_argument("--out", required=True, help="output CSV path")

    diagram_cmd = sub.add_parser(
        "diagram", help="render the golden scene for a ratio as SVG"
    )
    diagram_cmd.add_argument("--rho", type=float, required=True)
    diagram_cmd.add_argument("--out", required=True, help="output SVG path")

    return parser


def _phi_report() -> str:
    identity_holds = golden_identity_check(PHI)
    inverse_matches = ONE / PHI == PHI - 1
    lines = [
        "phi = (1+sqrt 5)/2",
        f"phi = {float(PHI)!r}",
        "phi^2 - phi - 1 = 0 (exact)"
        if identity_holds
        else "phi^2 - phi - 1 != 0 (kernel bug!)",
        "1/phi = phi - 1 (exact)"
        if inverse_matches
        else "1/phi != phi - 1 (kernel bug!)",
        f"phi^2 = {float(PHI * PHI)!r}",
    ]
    return "\n".join(lines)


def _fib_report(n: int) -> str:
    lines = [f"F({n}) = {fibonacci(n)}"]
    if n >= 1:
        ratio = fib_ratio(n)
        lines.append(f"F({n + 1})/F({n}) = {ratio} = {float(ratio)!r}")
    return "\n".join(lines)


def _solve_report(rho: float, radians: bool, tol: float) -> str:
    result = solve_alpha(rho, tol=tol)
    # Realize the scene at unit chord; radius follows from rho.
    config = golden_config(1.0, 0.5 / rho)
    scene = realize(config)
    chords = measure_chords(scene)
    lines = [f"rho={rho:g}"]
    if radians:
        lines += [
            f"alpha={result.alpha:.5f}",
            f"beta={result.beta:.5f}",
            f"gamma={result.gamma:.5f}",
        ]
    else:
        lines += [
            f"alpha_deg={math.degrees(result.alpha):.3f}",
            f"beta_deg={math.degrees(result.beta):.3f}",
            f"gamma_deg={math.degrees(result.gamma):.3f}",
        ]
    lines += [
        f"a_over_b={config.tangent_length / config.outside_secant:.9f}",
        f"s_over_a={config.secant_length / config.tangent_length:.9f}",
        f"a={config.tangent_length:.6f}",
        f"b={config.outside_secant:.6f}",
        f"s={config.secant_length:.6f}",
        f"m={chords.near:.6f}",
        f"n={chords.far:.6f}",
        f"curve_gap={result.curve_gap:.3e}",
        f"phi_residual={result.phi_residual:.3e}",
        f"iterations={result.iterations}",
    ]
    return "\n".join(lines)


def _verify_report(b: float, c: float, r: float, tol: float) -> tuple[str, int]:
    config = TangentSecantConfig(b, c, r)
    check = theorem_check(config, tol=tol)
    tangent = config.tangent_length
    power_residual = abs(tangent * tangent - b * config.secant_length) / (
        tangent * tangent
    )
    agree = check.chord_equals_tangent == check.ratio_is_golden
    lines = [
        f"b={b:g} c={c:g} r={r:g}",
        f"a={tangent:.9f}",
        f"s={config.secant_length:.9f}",
        f"a_over_b={tangent / b:.9f}",
        f"power_residual={power_residual:.3e}",
        f"chord_equals_tangent={'true' if check.chord_equals_tangent else 'false'}",
        f"ratio_is_golden={'true' if check.ratio_is_golden else 'false'}",
        f"equivalence={'agree' if agree else 'DISAGREE'}",
    ]
    return "\n".join(lines), 0 if agree else 1


def _run_sweep(rho: float, n_points: int, out_path: str) -> str:
    series = sweep(rho, n_points)
    with open(out_path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["alpha_deg", "beta1_deg", "beta2_deg", "gap_deg"])
        for sample in series.samples:
            row = [
                _SWEEP_FORMAT.format(math.degrees(sample.alpha)),
                _SWEEP_FORMAT.format(math.degrees(sample.beta1)),
            ]
            if sample.beta2 is None:
                row += ["", ""]
            else:
                row += [
                    _SWEEP_FORMAT.format(math.degrees(sample.beta2)),
                    _SWEEP_FORMAT.format(math.degrees(sample.gap)),
                ]
            writer.writerow(row)
    lines = [f"wrote {out_path} ({n_points} samples)"]
    brackets = series.sign_change_brackets()
    for left, right in brackets:
        lines.append(
            "sign change of beta1-beta2 in alpha_deg interval ["
            + _SWEEP_FORMAT.format(math.degrees(left.alpha))
            + ", "
            + _SWEEP_FORMAT.format(math.degrees(right.alpha))
            + "]"
        )
    if not brackets:
        lines.append("no sign change found")
    return "\n".join(lines)


def _run_diagram(rho: float, out_path: str) -> str:
    config = golden_config(1.0, 0.5 / validate_ratio(rho))
    document = render_svg(realize(config))
    with open(out_path, "w", encoding="utf-8", newline="") as handle:
        handle.write(document)
    return f"wrote {out_path}"


def main(argv: "Sequence[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "phi":
            print(_phi_report())
        elif args.command == "fib":
            print(_fib_report(args.n))
        elif args.command == "solve":
            print(_solve_report(args.rho, radians=args.radians, tol=args.tol))
        elif args.command == "verify":
            report, code = _verify_report(args.b, args.c, args.r, tol=args.tol)
            print(report)
            if code != 0:
                print(
                    "error: theorem sides disagree, this configuration exposes a bug",
                    file=sys.stderr,
                )
                return code
        elif args.command == "sweep":
            print(_run_sweep(args.rho, args.n, args.out))
        elif args.command == "diagram":
            print(_run_diagram(args.rho, args.out))
    except (GeometryError, SolverError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
