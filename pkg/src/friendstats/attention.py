"""Linear attention (demand) and information (supply) curves over friend count.

Demand falls with friend count: attention is spread over more people.
Supply rises: more friends bring more information.  The friend count at
which they cross is the equilibrium.  Lowering the information each
friend contributes (a flatter supply curve) moves the equilibrium to a
larger friend count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import InvalidCurveError, NoEquilibriumError, ParameterError


@dataclass(frozen=True)
class LinearCurve:
    intercept: float
    slope: float

    def __call__(self, n: float) -> float:
        return evaluate(self, n)


@dataclass(frozen=True)
class Equilibrium:
    friend_count: float
    cost: float


def evaluate(curve: LinearCurve, n: float) -> float:
    if n < 0:
        raise ParameterError(f"friend count must be non-negative, got {n}")
    return curve.intercept + curve.slope * n


def demand_curve(intercept: float, slope: float) -> LinearCurve:
    if not slope < 0:
        raise InvalidCurveError(f"attention demand must slope downward, got slope {slope}")
    return LinearCurve(intercept, slope)


def supply_curve(intercept: float, slope: float) -> LinearCurve:
    if not slope > 0:
        raise InvalidCurveError(f"information supply must slope upward, got slope {slope}")
    return LinearCurve(intercept, slope)


def institutional_demand(level: float) -> LinearCurve:
    """Flat demand: an institution's attention does not thin out with more links."""
    return LinearCurve(level, 0.0)


def equilibrium(demand: LinearCurve, supply: LinearCurve) -> Equilibrium:
    """Intersection of the two curves at a positive friend count.

    Flat demand (slope 0) is accepted so institutional curves can be solved.
    """
    if demand.slope > 0:
        raise InvalidCurveError(f"demand slope must be negative, got {demand.slope}")
    if not supply.slope > 0:
        raise InvalidCurveError(f"supply slope must be positive, got {supply.slope}")
    if not demand.intercept > supply.intercept:
        raise NoEquilibriumError(
            "curves do not cross at a positive friend count: demand intercept "
            f"{demand.intercept} must exceed supply intercept {supply.intercept}"
        )
    n_star = (demand.intercept - supply.intercept) / (supply.slope - demand.slope)
    return Equilibrium(n_star, demand.intercept + demand.slope * n_star)


def shift_supply(supply: LinearCurve, per_friend_info_factor: float) -> LinearCurve:
    """Scale the information each additional friend brings; intercept unchanged."""
    if not 0 < per_friend_info_factor <= 1:
        raise ParameterError(
            f"per-friend information factor must lie in (0, 1], got {per_friend_info_factor}"
        )
    return LinearCurve(supply.intercept, supply.slope * per_friend_info_factor)


def translate_supply(supply: LinearCurve, offset: float) -> LinearCurve:
    """Shift the supply line right by ``offset`` friends (alternative shift mode)."""
    if offset < 0:
        raise ParameterError(f"offset must be non-negative, got {offset}")
    return LinearCurve(supply.intercept - supply.slope * offset, supply.slope)


def sample_curves(
    demand: LinearCurve, supply: LinearCurve, n_max: float, points: int = 101
) -> Iterator[tuple[float, float, float]]:
    """``(n, demand(n), supply(n))`` triples on an even grid over ``[0, n_max]``."""
    if points < 2:
        raise ParameterError("need at least two sample points")
    for n in np.linspace(0.0, n_max, points):
        n = float(n)
        yield n, evaluate(demand, n), evaluate(supply, n)
