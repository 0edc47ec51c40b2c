"""Shared generators and independent oracles for the test suite.

Everything here deliberately avoids the package's own integration and
sup-min code paths: integrals are sampled Riemann/trapezoid sums, the
dominance oracle is a masked double loop over grid pairs, and the
trapezoid membership is re-derived from its corner formulas.
"""

import numpy as np

from bpv_effect.membership import MembershipFn, trapezoid

ORACLE_GRID = 2000  # dominance brute-force resolution per axis


def riemann(ys, xs) -> float:
    """Plain sampled trapezoid sum, independent of the package."""
    ys = np.asarray(ys, dtype=float)
    xs = np.asarray(xs, dtype=float)
    return float(np.sum(np.diff(xs) * (ys[:-1] + ys[1:])) / 2.0)


def refine(m: MembershipFn) -> MembershipFn:
    """Insert segment midpoints with interpolated values (same function)."""
    mids = (m.grid[:-1] + m.grid[1:]) / 2.0
    grid = np.sort(np.concatenate((m.grid, mids)))
    return MembershipFn(grid, m(grid))


# ---------------------------------------------------------------------------
# dominance oracle


def lattice_trapezoid_pair(rng, n: int = ORACLE_GRID):
    """Random trapezoid pair whose sup-min attainment points all lie on the
    n-point uniform grid over [0, 1].

    Corners sit on the grid, the joint support is exactly [0, 1], and the
    right ramp of k shares width and corner parity with the left ramp of
    l, which places their crossing on the grid.  The brute-force oracle is
    then exact, so comparisons can be asserted at tight tolerance.
    """
    h = 1.0 / (n - 1)
    width = int(rng.integers(40, 400))
    i_b = int(rng.integers(1, 1200))
    i_c = int(rng.integers(i_b + 1, min(i_b + 600, n - width - 1)))
    i_d = i_c + width
    j_a = int(rng.integers(1, n - width - 2))
    if (i_d + j_a) % 2 == 1:
        j_a += 1 if j_a + 1 <= n - width - 2 else -1
    j_b = j_a + width
    j_c = int(rng.integers(j_b + 1, n))
    k = trapezoid(0.0, i_b * h, i_c * h, i_d * h)
    l = trapezoid(j_a * h, j_b * h, j_c * h, (n - 1) * h)
    return k, l


def brute_dominance(k: MembershipFn, l: MembershipFn, xs, feasible) -> float:
    """max over grid pairs (u, v) with u >= v of min(k(u), l(v))."""
    pairs = np.minimum.outer(k(xs), l(xs))
    pairs *= feasible
    return float(pairs.max())


def dominance_oracle_setup(n: int = ORACLE_GRID):
    xs = np.linspace(0.0, 1.0, n)
    feasible = np.tri(n, dtype=bool)  # row u index >= column v index
    return xs, feasible


# ---------------------------------------------------------------------------
# direct-summation profile oracle (discrete future values, trapezoid mu)


def oracle_profile_discrete(corners, atoms, probs, kind, n_r=10_000, n_x=20_001):
    """Evaluate every profile statistic by direct summation on fine grids.

    Returns (rates, rho, expected_return, variance, energy, entropy); the
    expected return uses the full double-sum form (rate integral of the
    per-atom sums), not the reduced single-integral form.
    """
    a, b, c, d = corners
    atoms = np.asarray(atoms, dtype=float)
    probs = np.asarray(probs, dtype=float)

    def mu(x):
        x = np.asarray(x, dtype=float)
        rising = np.clip((x - a) / (b - a), 0.0, 1.0) if b > a else (x >= a).astype(float)
        falling = np.clip((d - x) / (d - c), 0.0, 1.0) if d > c else (x <= d).astype(float)
        return np.minimum(rising, falling)

    def present_values(r, y):
        r = np.asarray(r, dtype=float)
        if kind == "simple":
            with np.errstate(divide="ignore"):
                return y / (1.0 + r)
        return y * np.exp(-r)

    if kind == "simple":
        r_lo, r_hi = atoms.min() / d - 1.0, atoms.max() / a - 1.0
    else:
        r_lo, r_hi = np.log(atoms.min() / d), np.log(atoms.max() / a)
    pad = 0.05 * (r_hi - r_lo)
    lower = r_lo - pad
    if kind == "simple":
        lower = max(lower, (r_lo - 1.0) / 2.0)
    rates = np.linspace(lower, r_hi + pad, n_r)

    rho = np.zeros(n_r)
    for y, p in zip(atoms, probs):
        rho += p * mu(present_values(rates, y))

    expected = riemann(rates * rho, rates) / riemann(rho, rates)
    area = riemann(rho, rates)
    blur = riemann(np.minimum(rho, 1.0 - rho), rates)

    x_max = max((rates[-1] - expected) ** 2, (rates[0] - expected) ** 2)
    xs = np.linspace(0.0, x_max, n_x)
    deviations = np.sqrt(xs)
    kernel = np.zeros(n_x)
    for y, p in zip(atoms, probs):
        kernel += p * np.maximum(
            mu(present_values(expected + deviations, y)),
            mu(present_values(expected - deviations, y)),
        )
    variance = riemann(xs * kernel, xs) / riemann(kernel, xs)
    return rates, rho, expected, variance, area / (1.0 + area), blur / (1.0 + blur)


# ---------------------------------------------------------------------------
# Pareto oracle


def direct_pareto(matrix) -> list[float]:
    """Pure-python inf-max evaluation of Pareto memberships from a matrix."""
    n = len(matrix)
    scores = []
    for i in range(n):
        terms = [max(matrix[i][j], 1.0 - matrix[j][i]) for j in range(n)]
        scores.append(min(terms))
    return scores


# ---------------------------------------------------------------------------
# randomized portfolios


def random_security(rng):
    """Random (membership, distribution, convention-name) triple."""
    from bpv_effect.distribution import FutureValueDist

    center = float(rng.uniform(60, 140))
    half = float(rng.uniform(3, 18))
    left = float(rng.uniform(0.1, 0.9)) * half
    right = float(rng.uniform(0.1, 0.9)) * half
    mu = trapezoid(center - half, center - left, center + right, center + half)
    kind = "simple" if rng.random() < 0.5 else "logarithmic"
    if rng.random() < 0.6:
        count = int(rng.integers(2, 6))
        points = np.sort(rng.uniform(0.7 * center, 1.4 * center, count))
        while np.any(np.diff(points) <= 1e-9):
            points = np.sort(rng.uniform(0.7 * center, 1.4 * center, count))
        dist = FutureValueDist.discrete(points, rng.dirichlet(np.ones(count)))
    else:
        dist = FutureValueDist.lognormal(
            float(np.log(center) + rng.uniform(-0.1, 0.15)),
            float(rng.uniform(0.05, 0.3)),
            (0.005, 0.995),
        )
    return mu, dist, kind


def random_membership(rng, span=(-5.0, 5.0), max_knots=8):
    """Sampled-grid membership with bounded slopes (segments >= 0.1 wide)."""
    count = int(rng.integers(2, max_knots + 1))
    while True:
        grid = np.sort(rng.uniform(span[0], span[1], count))
        if np.all(np.diff(grid) >= 0.1):
            break
    return MembershipFn(grid, rng.uniform(0.0, 1.0, count))
