"""Fuzzy-probabilistic return analytics and effectiveness screening.

Securities whose future value is a random variable and whose present
value is a fuzzy number get a fuzzy expected return, a behavioural
variance, energy/entropy imprecision measures, and Pareto-style
effectiveness scores over a finite universe.
"""

from .distribution import FutureValueDist, QuadratureNodes
from .effectiveness import (
    EffectivenessReport,
    Universe,
    build_report,
    effectiveness_scores,
    outranking_degree,
    strict_effectiveness_scores,
    strict_outranking_degree,
)
from .membership import (
    MembershipFn,
    dominance,
    energy_measure,
    entropy_measure,
    trapezoid,
    triangle,
)
from .returns import (
    LOGARITHMIC,
    SIMPLE,
    DegenerateMembershipError,
    EngineSettings,
    ReturnConvention,
    ReturnGrid,
    SecurityProfile,
    convention,
    expected_return,
    expected_return_distribution,
    from_return_cdf,
    profile,
    return_variance,
    state_membership,
    variance_span,
)

__all__ = [
    "DegenerateMembershipError",
    "EffectivenessReport",
    "EngineSettings",
    "FutureValueDist",
    "LOGARITHMIC",
    "MembershipFn",
    "QuadratureNodes",
    "ReturnConvention",
    "ReturnGrid",
    "SIMPLE",
    "SecurityProfile",
    "Universe",
    "build_report",
    "convention",
    "dominance",
    "effectiveness_scores",
    "energy_measure",
    "entropy_measure",
    "expected_return",
    "expected_return_distribution",
    "from_return_cdf",
    "outranking_degree",
    "profile",
    "return_variance",
    "state_membership",
    "strict_effectiveness_scores",
    "strict_outranking_degree",
    "trapezoid",
    "triangle",
    "variance_span",
]
