"""Golden-ratio arithmetic and the tangent-secant configuration.

Three layers: :mod:`goldensecant.exactfield` does exact arithmetic in
Q(sqrt 5) (the golden ratio's home field), :mod:`goldensecant.geometry`
builds and measures tangent-secant circle scenes whose special case is the
golden configuration, and :mod:`goldensecant.solver` finds that
configuration's angles for any chord/diameter ratio, with an independent
closed form to check the root-finder.  ``goldensecant.cli`` wraps it all
for the command line.
"""

from .exactfield import (
    ONE,
    PHI,
    PHI_FLOAT,
    ZERO,
    NoRealRootsError,
    OutsideFieldError,
    QuadExt,
    QuadraticRoots,
    Rational,
    cf_convergent,
    fib_ratio,
    fibonacci,
    golden_identity_check,
    solve_monic_quadratic,
)
from .geometry import (
    AngleTriple,
    ChordPair,
    GeometryError,
    Realization,
    TangentSecantConfig,
    TheoremCheck,
    golden_config,
    measure_angles,
    measure_chords,
    realize,
    theorem_check,
)
from .solver import (
    GoldenSolveResult,
    SolverError,
    SweepSample,
    SweepSeries,
    alpha_closed_form,
    beta_from_chord,
    beta_from_ratio,
    curve_gap,
    phi_residual,
    solve_alpha,
    sweep,
    validate_ratio,
)

__version__ = "0.1.0"

__all__ = [
    "ONE",
    "PHI",
    "PHI_FLOAT",
    "ZERO",
    "NoRealRootsError",
    "OutsideFieldError",
    "QuadExt",
    "QuadraticRoots",
    "Rational",
    "cf_convergent",
    "fib_ratio",
    "fibonacci",
    "golden_identity_check",
    "solve_monic_quadratic",
    "AngleTriple",
    "ChordPair",
    "GeometryError",
    "Realization",
    "TangentSecantConfig",
    "TheoremCheck",
    "golden_config",
    "measure_angles",
    "measure_chords",
    "realize",
    "theorem_check",
    "GoldenSolveResult",
    "SolverError",
    "SweepSample",
    "SweepSeries",
    "alpha_closed_form",
    "beta_from_chord",
    "beta_from_ratio",
    "curve_gap",
    "phi_residual",
    "solve_alpha",
    "sweep",
    "validate_ratio",
    "__version__",
]
