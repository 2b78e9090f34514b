"""Median/mean/variance relations for degree distributions.

Covers three things:

* summary statistics of a degree sequence and the Mallows bound
  ``|mean - median| <= sigma``;
* the one-sided tail bound ``P(X >= 2*mean - median) <= sigma**2 / (mean - median)**2 - 0.5``,
  a Chebyshev bound with the mass below the median removed, clamped to [0, 1];
* small equal-weight "point models" that stand in for a full distribution
  while matching its median and mean (and optionally sigma).

Statistics here are floating point; the exact rational versions used for
graph metrics live in :mod:`friendstats.paradox`.
"""

from __future__ import annotations

import enum
import math
import statistics
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import InfeasibleModelError, ParameterError, PreconditionError, UndefinedStatisticError

# Relative tolerance used when deciding whether mean == median.
SYMMETRY_RTOL = 1e-12
# Absolute slack allowed in the Mallows check to absorb float rounding.
MALLOWS_ATOL = 1e-9


class Skew(str, enum.Enum):
    RIGHT = "right"
    LEFT = "left"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class DistributionSummary:
    count: int
    mean: float
    median: float
    std_dev: float
    mallows_slack: float
    skew_direction: Skew

    @property
    def gap(self) -> float:
        """Signed ``mean - median``."""
        return self.mean - self.median


@dataclass(frozen=True)
class MallowsResult:
    holds: bool
    slack: float
    sigma_lower_bound: float


@dataclass(frozen=True)
class TailBoundReport:
    alpha: float
    threshold: float
    bound: float
    empirical: float | None = None
    respected: bool | None = None

    @property
    def vacuous(self) -> bool:
        return self.bound >= 1.0


@dataclass(frozen=True)
class PointDistribution:
    points: tuple[float, ...]

    def __post_init__(self) -> None:
        pts = tuple(float(p) for p in self.points)
        if not pts:
            raise ParameterError("a point model needs at least one value")
        if any(b < a for a, b in zip(pts, pts[1:])):
            raise ParameterError("point model values must be sorted ascending")
        object.__setattr__(self, "points", pts)

    @property
    def k(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class PointModelValidation:
    median: float
    mean: float
    std_dev: float
    median_ok: bool
    mean_ok: bool
    sigma_ok: bool | None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.median_ok and self.mean_ok and self.sigma_ok is not False


def _skew(mean: float, median: float) -> Skew:
    diff = mean - median
    if abs(diff) <= SYMMETRY_RTOL * max(1.0, abs(mean), abs(median)):
        return Skew.SYMMETRIC
    return Skew.RIGHT if diff > 0 else Skew.LEFT


def summarize(values: Sequence[float]) -> DistributionSummary:
    """Count, mean, median (midpoint convention), population sigma, skew."""
    data = list(values)
    if not data:
        raise UndefinedStatisticError("cannot summarize an empty sequence")
    if not all(math.isfinite(v) for v in data):
        raise ParameterError("values must be finite")
    mean = float(statistics.mean(data))
    median = float(statistics.median(data))
    sigma = float(statistics.pstdev(data))
    return DistributionSummary(
        count=len(data),
        mean=mean,
        median=median,
        std_dev=sigma,
        mallows_slack=sigma - abs(mean - median),
        skew_direction=_skew(mean, median),
    )


def mallows_sigma_lower_bound(mean: float, median: float) -> float:
    """Smallest sigma compatible with the given mean and median."""
    return abs(mean - median)


def mallows_check(s: DistributionSummary) -> MallowsResult:
    slack = s.std_dev - abs(s.mean - s.median)
    return MallowsResult(
        holds=slack >= -MALLOWS_ATOL * max(1.0, s.std_dev),
        slack=slack,
        sigma_lower_bound=mallows_sigma_lower_bound(s.mean, s.median),
    )


def tail_bound(
    mean: float, median: float, std_dev: float, values: Sequence[float] | None = None
) -> TailBoundReport:
    """Upper-tail bound at ``2*mean - median`` for a right-skewed distribution.

    Raises :class:`PreconditionError` unless ``mean > median`` and ``std_dev > 0``;
    the derivation only makes sense for right skew.
    """
    if not mean > median:
        raise PreconditionError(
            f"tail bound needs mean > median (right skew); got mean={mean}, median={median}"
        )
    if not std_dev > 0:
        raise PreconditionError("tail bound needs a positive standard deviation")
    a = mean - median
    raw = std_dev**2 / a**2 - 0.5
    bound = min(1.0, max(0.0, raw))
    threshold = 2 * mean - median
    empirical = respected = None
    if values is not None:
        data = np.asarray(values, dtype=float)
        if data.size == 0:
            raise UndefinedStatisticError("empirical exceedance needs at least one value")
        empirical = float(np.count_nonzero(data >= threshold) / data.size)
        respected = empirical <= bound
    return TailBoundReport(
        alpha=a / std_dev, threshold=threshold, bound=bound, empirical=empirical, respected=respected
    )


def chebyshev_tail_bound(
    s: DistributionSummary, values: Sequence[float] | None = None
) -> TailBoundReport:
    return tail_bound(s.mean, s.median, s.std_dev, values)


def validate_point_model(
    p: PointDistribution,
    target_median: float,
    target_mean: float,
    target_sigma: float | None = None,
    *,
    mean_rtol: float = 0.02,
    sigma_rtol: float = 0.10,
    quoted_sigma: float | None = None,
) -> PointModelValidation:
    """Compare a point model's median, mean and sigma against targets.

    Median must match exactly, mean within ``mean_rtol``, sigma within
    ``sigma_rtol`` when a target is given.  ``quoted_sigma`` is a sigma
    figure that accompanied the model in its source; a mismatch with the
    computed value is recorded in ``notes`` but does not fail validation.
    """
    median = float(statistics.median(p.points))
    mean = float(statistics.mean(p.points))
    sigma = float(statistics.pstdev(p.points))
    notes = []
    sigma_ok = None
    if target_sigma is not None:
        sigma_ok = abs(sigma - target_sigma) <= sigma_rtol * target_sigma
    if quoted_sigma is not None and abs(sigma - quoted_sigma) > sigma_rtol * quoted_sigma:
        sample = float(statistics.stdev(p.points)) if p.k > 1 else 0.0
        notes.append(
            f"quoted sigma {quoted_sigma:g} does not match the computed value "
            f"{sigma:.1f} (population) / {sample:.1f} (sample)"
        )
    return PointModelValidation(
        median=median,
        mean=mean,
        std_dev=sigma,
        median_ok=median == target_median,
        mean_ok=abs(mean - target_mean) <= mean_rtol * abs(target_mean),
        sigma_ok=sigma_ok,
        notes=notes,
    )


@dataclass(frozen=True)
class ReferenceModel:
    name: str
    points: tuple[int, ...]
    median: float
    mean: float
    quoted_sigma: float

    def distribution(self) -> PointDistribution:
        return PointDistribution(self.points)


REFERENCE_MODELS = {
    "7-point": ReferenceModel("7-point", (1, 5, 20, 100, 200, 200, 900), 100, 200, 375),
    "9-point": ReferenceModel("9-point", (1, 2, 5, 20, 100, 300, 300, 300, 800), 100, 200, 290),
}


def fit_point_model(
    target_median: float,
    target_mean: float,
    target_sigma: float | None = None,
    k: int = 7,
    *,
    sweeps: int = 200,
) -> PointDistribution:
    """Fit ``k`` sorted equal-weight values to a target median, mean and sigma.

    The middle value is pinned to ``target_median``; values below it are
    boxed in ``[0, median]`` and values above it in ``[median, cap]``, so the
    median cannot move.  Values start on a geometric progression over
    ``[1, 10 * target_mean]`` and are refined by deterministic cyclic
    coordinate descent:

    1. single coordinates, largest first, minimise the mean error;
    2. if a sigma target is given, pairs ``(i, j)`` move along
       ``x_i + t, x_j - t``, which leaves the mean unchanged, minimising the
       sigma error.

    An unreachable sigma target is not an error; the closest sigma found is
    kept and can be read off with :func:`validate_point_model`.
    """
    if k < 3 or k % 2 == 0:
        raise ParameterError(f"k must be an odd integer >= 3, got {k}")
    if not target_median > 0:
        raise ParameterError("target median must be positive")
    if target_mean < target_median:
        raise PreconditionError("point models are built for right skew: need mean >= median")
    if target_sigma is not None:
        floor = mallows_sigma_lower_bound(target_mean, target_median)
        if target_sigma < floor:
            raise InfeasibleModelError(
                f"target sigma {target_sigma:g} violates the Mallows bound "
                f"sigma >= |mean - median| = {floor:g}"
            )
    if target_mean == target_median and not target_sigma:
        return PointDistribution((float(target_median),) * k)

    mid = k // 2
    cap = k * target_mean + (target_sigma or 0.0) * math.sqrt(k)
    lo = np.array([0.0] * mid + [target_median] * (mid + 1))
    hi = np.array([target_median] * (mid + 1) + [cap] * mid)
    x = np.clip(np.geomspace(1.0, 10.0 * target_mean, k), lo, hi)
    x[mid] = target_median
    free = [i for i in range(k - 1, -1, -1) if i != mid]

    def mean_err(vals: np.ndarray) -> float:
        return abs(vals.mean() - target_mean) / target_mean

    for _ in range(sweeps):
        for i in free:
            if mean_err(x) <= 1e-12:
                break
            # The mean is linear in x_i, so the best value is closed-form.
            x[i] = np.clip(x[i] + k * target_mean - x.sum(), lo[i], hi[i])
        else:
            continue
        break

    if target_sigma:
        def sigma_err(vals: np.ndarray) -> float:
            return abs(vals.std() - target_sigma) / target_sigma

        pairs = [(i, j) for i in free for j in free if i < j]
        best = sigma_err(x)
        for _ in range(sweeps):
            before = best
            for i, j in pairs:
                t_lo = max(lo[i] - x[i], x[j] - hi[j])
                t_hi = min(hi[i] - x[i], x[j] - lo[j])
                if t_hi - t_lo <= 0:
                    continue

                def f(t: float, i: int = i, j: int = j) -> float:
                    trial = x.copy()
                    trial[i] += t
                    trial[j] -= t
                    return sigma_err(trial)

                res = minimize_scalar(f, bounds=(t_lo, t_hi), method="bounded", options={"xatol": 1e-9})
                if res.fun < best:
                    x[i] += res.x
                    x[j] -= res.x
                    best = res.fun
            if before - best <= 1e-12:
                break

    model = PointDistribution(tuple(sorted(x)))
    if mean_err(np.asarray(model.points)) > 0.01:
        raise InfeasibleModelError(
            f"could not reach mean {target_mean:g} within 1% (got {np.mean(model.points):g})"
        )
    return model
