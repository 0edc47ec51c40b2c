"""Fuzzy-probabilistic return analytics.

The present value of a security is a fuzzy number (membership ``mu`` over
prices), its future value a random variable.  Pushing ``mu`` through the
return map state by state and averaging over the future-value law yields
the fuzzy expected return: a membership ``rho`` over return rates.  From
``rho`` come the expected return (its center of mass), the behavioural
return variance, and the energy/entropy imprecision measures.

Two return conventions are shipped: the simple rate (V_t / V_0 - 1, only
defined for rates above -1) and the logarithmic rate (ln(V_t / V_0)).
Both are strictly decreasing in the present value, so the per-state
membership of rate r is ``mu`` evaluated at the unique present value that
produces r, and rates outside a convention's domain carry membership 0.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from . import quadrature
from .distribution import FutureValueDist, QuadratureNodes
from .membership import MembershipFn, energy_measure, entropy_measure


class DegenerateMembershipError(ArithmeticError):
    """Raised when an identically-zero fuzzy return leaves a statistic undefined."""


@dataclass(frozen=True)
class ReturnConvention:
    """A return map r(V0, Vt), increasing in Vt, decreasing in V0."""

    kind: str  # "simple" | "logarithmic"

    def rate(self, present: float, future: float) -> float:
        if present <= 0.0 or future <= 0.0:
            raise ValueError("present and future values must be positive")
        if self.kind == "simple":
            return future / present - 1.0
        return math.log(future / present)

    def present_value_for(self, rate: float, future: float) -> float:
        """The unique present value producing ``rate`` from ``future``."""
        if future <= 0.0:
            raise ValueError("future value must be positive")
        if self.kind == "simple":
            if rate <= -1.0:
                raise ValueError("simple return rate is undefined at or below -1")
            return future / (1.0 + rate)
        return future * math.exp(-rate)

    def future_value_for(self, rate: float, present: float) -> float:
        """The unique future value producing ``rate`` from ``present``."""
        if present <= 0.0:
            raise ValueError("present value must be positive")
        if self.kind == "simple":
            if rate <= -1.0:
                raise ValueError("simple return rate is undefined at or below -1")
            return present * (1.0 + rate)
        return present * math.exp(rate)

    def rate_bounds(self, pv_support: tuple[float, float], node_range: tuple[float, float]) -> tuple[float, float]:
        """Smallest rate interval outside which every state membership is 0."""
        s_lo, s_hi = pv_support
        y_lo, y_hi = node_range
        if s_lo <= 0.0:
            raise ValueError("present-value membership support must be positive")
        if self.kind == "simple":
            return y_lo / s_hi - 1.0, y_hi / s_lo - 1.0
        return math.log(y_lo / s_hi), math.log(y_hi / s_lo)


SIMPLE = ReturnConvention("simple")
LOGARITHMIC = ReturnConvention("logarithmic")


def convention(name: str) -> ReturnConvention:
    if name == "simple":
        return SIMPLE
    if name == "logarithmic":
        return LOGARITHMIC
    raise ValueError(f"unknown return convention {name!r}")


def state_membership(mu: MembershipFn, conv: ReturnConvention, rate: float, future: float) -> float:
    """Membership of ``rate`` in one market state with future value ``future``."""
    return float(mu(conv.present_value_for(rate, future)))


def _state_values(mu: MembershipFn, conv: ReturnConvention, rates, futures) -> np.ndarray:
    """Matrix of state memberships, rates down the rows, future values across.

    Rates outside the convention's domain give membership 0: for the
    simple convention a rate at or below -1 maps to a nonpositive or
    infinite present value, which lies outside any membership support.
    """
    r = np.asarray(rates, dtype=float).reshape(-1, 1)
    y = np.asarray(futures, dtype=float).reshape(1, -1)
    if conv.kind == "simple":
        with np.errstate(divide="ignore"):
            pv = y / (1.0 + r)
    else:
        pv = y * np.exp(-r)
    return mu(pv)


@dataclass(frozen=True, eq=False)
class ReturnGrid:
    """Return-rate abscissae on which the fuzzy expected return is sampled."""

    r_values: np.ndarray

    def __post_init__(self):
        r_values = np.array(self.r_values, dtype=float, copy=True)
        if r_values.ndim != 1 or r_values.size < 4:
            raise ValueError("return grid needs at least four points")
        if not np.all(np.diff(r_values) > 0.0):
            raise ValueError("return grid must be strictly increasing")
        r_values.flags.writeable = False
        object.__setattr__(self, "r_values", r_values)

    @classmethod
    def spanning(
        cls,
        mu: MembershipFn,
        nodes: QuadratureNodes,
        conv: ReturnConvention,
        count: int = 801,
    ) -> "ReturnGrid":
        """Uniform grid covering every rate with positive state membership.

        The raw bounds make the fuzzy expected return vanish outside
        the closed interval; one extra grid step of padding makes it
        vanish strictly inside the endpoints, so all knot-based integrals
        are exact over the grid.  For the simple convention the padded
        lower end is kept above -1.
        """
        r_lo, r_hi = conv.rate_bounds(mu.support, (float(nodes.nodes[0]), float(nodes.nodes[-1])))
        pad = (r_hi - r_lo) / (count - 1)
        lower = r_lo - pad
        if conv.kind == "simple":
            lower = max(lower, (r_lo - 1.0) / 2.0)
        return cls(np.linspace(lower, r_hi + pad, count))


@dataclass(frozen=True, eq=False)
class SecurityProfile:
    """Per-security screening results."""

    rho: MembershipFn
    expected_return: float
    variance: float
    energy: float
    entropy: float

    def __post_init__(self):
        if self.variance < 0.0:
            raise ValueError("variance must be nonnegative")
        if not (0.0 <= self.energy < 1.0 and 0.0 <= self.entropy < 1.0):
            raise ValueError("energy and entropy must lie in [0, 1)")
        if self.entropy > self.energy + 1e-12:
            raise ValueError("entropy cannot exceed energy")


def expected_return_distribution(
    mu: MembershipFn, conv: ReturnConvention, nodes: QuadratureNodes, grid: ReturnGrid
) -> MembershipFn:
    """Fuzzy expected return: state memberships averaged over the future-value law.

    For a discrete future-value law the node weights are the exact atom
    probabilities and the result carries no quadrature error at all.
    """
    values = _state_values(mu, conv, grid.r_values, nodes.nodes) @ nodes.weights
    return MembershipFn(grid.r_values, np.clip(values, 0.0, 1.0))


def expected_return(rho: MembershipFn) -> float:
    """Center of mass of the fuzzy expected return (knot-exact integrals)."""
    denominator = quadrature.integrate(rho.grid, rho.values)
    if denominator == 0.0:
        raise DegenerateMembershipError("degenerate membership: expected return undefined")
    return quadrature.first_moment(rho.grid, rho.values) / denominator


def variance_span(grid: ReturnGrid, center: float) -> float:
    """Squared-deviation bound beyond which the variance kernel vanishes."""
    return max((float(grid.r_values[-1]) - center) ** 2, (float(grid.r_values[0]) - center) ** 2)


def return_variance(
    mu: MembershipFn,
    conv: ReturnConvention,
    nodes: QuadratureNodes,
    center: float,
    x_span: float,
    panels: int,
) -> float:
    """Behavioural variance of the return rate around ``center``.

    The kernel at squared deviation x is the larger of the two state
    memberships at center +/- sqrt(x), averaged over the future-value
    law; the variance is the kernel-weighted mean of x.  The x axis is
    the one place a sampled trapezoid rule is used (the kernel is not
    piecewise linear in x); ``panels`` controls its resolution.  Any
    ``x_span`` at or beyond ``variance_span`` gives the same result
    because the kernel is identically zero out there.
    """
    if x_span <= 0.0:
        raise ValueError("x_span must be positive")
    if panels < 1:
        raise ValueError("panels must be a positive integer")
    xs = np.linspace(0.0, x_span, panels + 1)
    steps = np.sqrt(xs)
    upper = _state_values(mu, conv, center + steps, nodes.nodes)
    lower = _state_values(mu, conv, center - steps, nodes.nodes)
    kernel = np.maximum(upper, lower) @ nodes.weights
    denominator = quadrature.integrate(xs, kernel)
    if denominator == 0.0:
        raise DegenerateMembershipError("degenerate membership: variance undefined")
    return quadrature.integrate(xs, xs * kernel) / denominator


@dataclass(frozen=True)
class EngineSettings:
    """Resolution knobs for profile computation."""

    grid_points: int = 801
    nodes: int = 256
    variance_panels: int = 1024

    def __post_init__(self):
        if self.grid_points < 4:
            raise ValueError("grid_points must be at least 4")
        if self.nodes < 1:
            raise ValueError("nodes must be positive")
        if self.variance_panels < 1:
            raise ValueError("variance_panels must be positive")


def profile(
    mu: MembershipFn,
    dist: FutureValueDist,
    conv: ReturnConvention,
    settings: EngineSettings = EngineSettings(),
) -> SecurityProfile:
    """Full screening profile of one security.

    Raises DegenerateMembershipError when the fuzzy expected return is
    identically zero (e.g. an all-zero present-value membership).
    """
    nodes = dist.make_nodes(settings.nodes)
    grid = ReturnGrid.spanning(mu, nodes, conv, settings.grid_points)
    rho = expected_return_distribution(mu, conv, nodes, grid)
    center = expected_return(rho)
    variance = return_variance(
        mu, conv, nodes, center, variance_span(grid, center), settings.variance_panels
    )
    return SecurityProfile(
        rho=rho,
        expected_return=center,
        variance=variance,
        energy=energy_measure(rho),
        entropy=entropy_measure(rho),
    )


def from_return_cdf(
    return_cdf,
    price: float,
    conv: ReturnConvention,
    n: int = 256,
    rate_bounds: tuple[float, float] | None = None,
) -> FutureValueDist:
    """Future-value law implied by a return-rate distribution at a crisp price.

    The return CDF is inverted at the n probability midpoints and each
    rate is mapped to its future value at ``price``, giving an
    equal-weight empirical law.  ``rate_bounds`` must bracket the
    quantiles; when omitted a bracket is grown automatically.
    """
    if price <= 0.0:
        raise ValueError("price must be positive")
    if n < 1:
        raise ValueError("n must be positive")
    midpoints = (np.arange(n) + 0.5) / n
    if rate_bounds is None:
        lo = -0.5 if conv.kind == "simple" else -1.0
        hi = 1.0
        for _ in range(200):
            if return_cdf(lo) <= midpoints[0]:
                break
            lo = (lo - 1.0) / 2.0 if conv.kind == "simple" else lo * 2.0
        for _ in range(200):
            if return_cdf(hi) >= midpoints[-1]:
                break
            hi *= 2.0
        rate_bounds = (lo, hi)
    lo, hi = rate_bounds
    if return_cdf(lo) > midpoints[0] or return_cdf(hi) < midpoints[-1]:
        raise ValueError("rate_bounds do not bracket the required quantiles")
    rates = np.array(
        [optimize.brentq(lambda r, t=t: return_cdf(r) - t, lo, hi, xtol=1e-13) for t in midpoints]
    )
    values = np.array([conv.future_value_for(r, price) for r in rates])
    atoms, inverse = np.unique(values, return_inverse=True)
    probs = np.zeros(atoms.size)
    np.add.at(probs, inverse, 1.0 / n)
    return FutureValueDist.discrete(atoms, probs)
