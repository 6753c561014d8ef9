"""Angle analysis of the golden tangent-secant configuration.

Fix the circle and a chord, described by the single shape parameter
rho = chord/diameter in (0, 1].  Slide the external point along the
tangent-secant family and two independent expressions give the inscribed
angle beta in terms of the tangent-secant angle alpha:

* from the chord geometry, the secant's inscribed angle forces
  alpha + 2*beta = arcsin(rho), so beta = (arcsin(rho) - alpha)/2;
* from the golden section of the secant, sin(beta)^2 = (rho/phi)*sin(alpha).

Both are strictly monotone in alpha in opposite directions, so the curves
cross exactly once; that crossing is the golden configuration.  The solver
brackets it and bisects; :func:`alpha_closed_form` reaches the same angle
through a direct geometric construction and serves as the independent
cross-check.

Only the principal arcsine branch is modeled.  The reflected branch
(alpha + 2*beta = pi - arcsin(rho), the secant meeting the far arc) is an
intentional non-goal throughout the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactfield import PHI_FLOAT
from .geometry import GeometryError

#: Radians trimmed off both ends of the search interval (0, arcsin rho) so
#: the bracket stays strictly inside the domain of both curves.
BRACKET_MARGIN = 1e-6

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 200


class SolverError(RuntimeError):
    """Bisection could not locate a golden configuration."""


def validate_ratio(rho: float) -> float:
    """Check a chord/diameter ratio: positive, finite, and at most 1."""
    rho = float(rho)
    if not math.isfinite(rho) or not rho > 0.0:
        raise GeometryError(
            f"invalid length: chord/diameter ratio {rho!r} must be positive and finite"
        )
    if rho > 1.0:
        raise GeometryError(f"chord exceeds diameter: chord/diameter ratio {rho} > 1")
    return rho


def beta_from_chord(alpha: float, rho: float) -> float:
    """Inscribed-angle route: beta = (arcsin(rho) - alpha)/2.

    Defined for 0 <= alpha <= arcsin(rho); the right endpoint is the
    degenerate scene where the inscribed angle closes to zero.
    """
    rho = validate_ratio(rho)
    limit = math.asin(rho)
    if not 0.0 <= alpha <= limit:
        raise GeometryError(
            f"empty bracket: alpha={alpha!r} outside [0, arcsin(rho)={limit!r}]"
        )
    return 0.5 * (limit - alpha)


def beta_from_ratio(alpha: float, rho: float) -> float:
    """Golden-section route: beta = arcsin(sqrt((rho/phi) * sin(alpha))).

    Values on the principal branch [0, pi/2].  For rho <= 1 the radicand
    stays below 1 automatically (rho/phi < 1); the guard remains for
    defensive clarity.
    """
    rho = validate_ratio(rho)
    if not 0.0 <= alpha <= 0.5 * math.pi:
        raise GeometryError(
            f"outside domain: alpha={alpha!r} not in [0, pi/2]"
        )
    radicand = (rho / PHI_FLOAT) * math.sin(alpha)
    if radicand > 1.0:
        raise GeometryError(
            f"outside domain: sin(beta)^2 = {radicand} exceeds 1"
        )
    return math.asin(math.sqrt(radicand))


def curve_gap(alpha: float, rho: float) -> float:
    """Signed gap between the two beta expressions; its root is the solution."""
    return beta_from_chord(alpha, rho) - beta_from_ratio(alpha, rho)


def phi_residual(alpha: float, beta: float) -> float:
    """How far a pair of angles is from golden: sin(alpha+beta)/sin(beta) - phi.

    The law of sines turns the secant/chord length ratio into exactly this
    sine ratio, so the residual vanishes precisely at golden configurations.
    """
    denom = math.sin(beta)
    if denom == 0.0:
        raise ZeroDivisionError(
            "division by zero: sin(beta) vanishes, the triangle is degenerate"
        )
    return math.sin(alpha + beta) / denom - PHI_FLOAT


@dataclass(frozen=True)
class GoldenSolveResult:
    """Solved golden configuration for one chord/diameter ratio.

    ``curve_gap`` is |beta_from_chord - beta_from_ratio| at the returned
    alpha and ``phi_residual`` the sine-ratio residual there; both are
    convergence evidence, not inputs.
    """

    alpha: float
    beta: float
    gamma: float
    iterations: int
    curve_gap: float
    phi_residual: float


def solve_alpha(rho: float, tol: float = DEFAULT_TOL) -> GoldenSolveResult:
    """Bisect the gap between the two beta curves to the golden alpha.

    The bracket is (margin, arcsin(rho) - margin); the chord curve starts
    above the ratio curve and ends below it, so a sign change is guaranteed
    for every valid rho and the root is unique (the gap is strictly
    decreasing).  Iteration continues until the bracket width *and* the
    gap magnitude both fall below ``tol``, so the reported curve_gap
    honestly meets the tolerance.
    """
    rho = validate_ratio(rho)
    if not tol > 0.0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    limit = math.asin(rho)
    lo = BRACKET_MARGIN
    hi = limit - BRACKET_MARGIN
    if hi <= lo:
        raise SolverError(
            f"no golden configuration found: arcsin(rho)={limit} leaves no "
            f"bracket inside the {BRACKET_MARGIN} margins"
        )
    gap_lo = curve_gap(lo, rho)
    gap_hi = curve_gap(hi, rho)
    if (gap_lo > 0.0) == (gap_hi > 0.0):
        raise SolverError(
            "no golden configuration found: gap does not change sign on the bracket"
        )
    mid, gap_mid = lo, gap_lo
    for iterations in range(1, MAX_ITERATIONS + 1):
        mid = 0.5 * (lo + hi)
        gap_mid = curve_gap(mid, rho)
        if (gap_mid > 0.0) == (gap_lo > 0.0):
            lo, gap_lo = mid, gap_mid
        else:
            hi, gap_hi = mid, gap_mid
        if hi - lo <= tol and abs(gap_mid) <= tol:
            break
    else:
        raise SolverError(
            f"no golden configuration found: not converged after "
            f"{MAX_ITERATIONS} bisections at tol={tol}"
        )
    alpha = mid
    beta = beta_from_chord(alpha, rho)
    gamma = math.pi - alpha - beta
    return GoldenSolveResult(
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        iterations=iterations,
        curve_gap=abs(gap_mid),
        phi_residual=phi_residual(alpha, beta),
    )


def alpha_closed_form(rho: float) -> float:
    """Golden alpha by direct construction, independent of the bisection.

    Build the golden scene at unit radius: chord 2*rho, tangent equal to
    it, center at distance d = sqrt(1 + 4*rho^2) from the external point
    and offset h = sqrt(1 - rho^2) from the secant line.  The tangent ray
    then leaves the secant at arcsin(1/d) - arcsin(h/d).
    """
    rho = validate_ratio(rho)
    hyp = math.sqrt(1.0 + 4.0 * rho * rho)
    return math.asin(1.0 / hyp) - math.asin(math.sqrt(1.0 - rho * rho) / hyp)


@dataclass(frozen=True)
class SweepSample:
    """One row of a sweep: both beta routes at a single alpha.

    ``beta2`` and ``gap`` are None where the golden-section expression is
    undefined (cannot happen for rho <= 1, but the file format reserves the
    slot).
    """

    alpha: float
    beta1: float
    beta2: float | None
    gap: float | None


@dataclass(frozen=True)
class SweepSeries:
    """Evenly spaced samples of both beta curves across the alpha bracket."""

    rho: float
    samples: tuple[SweepSample, ...]

    def sign_change_brackets(self) -> list[tuple[SweepSample, SweepSample]]:
        """Consecutive sample pairs whose gap changes sign.

        For a valid rho there is exactly one such pair and it brackets the
        solver's root; the monotone gap makes more than one impossible.
        """
        brackets: list[tuple[SweepSample, SweepSample]] = []
        previous: SweepSample | None = None
        for sample in self.samples:
            if sample.gap is None:
                continue
            if previous is not None and (previous.gap > 0.0) != (sample.gap > 0.0):
                brackets.append((previous, sample))
            previous = sample
        return brackets


def sweep(rho: float, n_points: int) -> SweepSeries:
    """Sample both beta curves at n_points evenly spaced alphas.

    The grid spans the same margin-trimmed interval the solver brackets, so
    the sweep's sign change always encloses the solver's answer.
    """
    rho = validate_ratio(rho)
    if n_points < 2:
        raise ValueError(f"need at least 2 sweep points, got {n_points}")
    limit = math.asin(rho)
    lo = BRACKET_MARGIN
    hi = limit - BRACKET_MARGIN
    if hi <= lo:
        raise SolverError(
            f"no golden configuration found: arcsin(rho)={limit} leaves no "
            f"bracket inside the {BRACKET_MARGIN} margins"
        )
    step = (hi - lo) / (n_points - 1)
    samples: list[SweepSample] = []
    for i in range(n_points):
        alpha = lo + i * step
        beta1 = beta_from_chord(alpha, rho)
        try:
            beta2 = beta_from_ratio(alpha, rho)
        except GeometryError:
            samples.append(SweepSample(alpha=alpha, beta1=beta1, beta2=None, gap=None))
        else:
            samples.append(
                SweepSample(alpha=alpha, beta1=beta1, beta2=beta2, gap=beta1 - beta2)
            )
    return SweepSeries(rho=rho, samples=tuple(samples))
