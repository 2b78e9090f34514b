"""Friendship-paradox metrics computed in exact rational arithmetic.

For node ``i`` with degree ``x_i``:

* ``FF(i)`` is the sum of the degrees of i's neighbours.  Every 2-step walk
  is counted, including walks that come straight back to ``i``.
* the local mean is ``FF(i) / x_i``.
* the global mean is ``sum(x_i**2) / sum(x_i)``, the degree-weighted mean
  degree.  It always equals ``mu_F + var / mu_F`` (population variance),
  so it never falls below the plain mean degree ``mu_F``.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import UndefinedStatisticError
from .graph import Graph, degrees


class Verdict(str, enum.Enum):
    GREATER = "greater"
    EQUAL = "equal"
    LESS = "less"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class ParadoxRow:
    node: int
    f: int
    ff: int
    local_ff_mean: Fraction | None
    verdict: Verdict


@dataclass(frozen=True)
class ParadoxSummary:
    mu_f: Fraction
    mu_ff_global: Fraction
    degree_variance: Fraction
    gap: Fraction
    counts: dict[Verdict, int]
    # Arithmetic mean of the defined local means; None if no node has a friend.
    mean_local_ff: Fraction | None

    @property
    def identity_holds(self) -> bool:
        return self.mu_ff_global == self.mu_f + self.degree_variance / self.mu_f


def friends_of_friends(g: Graph, i: int) -> int:
    deg = degrees(g)
    return sum(deg[j] for j in g.neighbors(i))


def local_ff_mean(g: Graph, i: int) -> Fraction | None:
    """``FF(i) / F(i)``, or ``None`` for an isolated node."""
    f = g.degree(i)
    if f == 0:
        return None
    return Fraction(friends_of_friends(g, i), f)


def _require_edges(g: Graph) -> tuple[int, ...]:
    deg = degrees(g)
    if not g.edges:
        raise UndefinedStatisticError("statistic is undefined on a graph without edges")
    return deg


def global_ff_mean(g: Graph) -> Fraction:
    deg = _require_edges(g)
    return Fraction(sum(d * d for d in deg), sum(deg))


def mean_friends(g: Graph) -> Fraction:
    if g.n == 0:
        raise UndefinedStatisticError("mean degree is undefined on an empty graph")
    return Fraction(sum(degrees(g)), g.n)


def degree_variance(g: Graph) -> Fraction:
    """Population variance of the degree sequence."""
    if g.n == 0:
        raise UndefinedStatisticError("degree variance is undefined on an empty graph")
    deg = degrees(g)
    mu = Fraction(sum(deg), g.n)
    return Fraction(sum(d * d for d in deg), g.n) - mu * mu


def structural_information(g: Graph) -> Fraction:
    """Degree variance, used as the measure of information held in the structure.

    Zero exactly for regular graphs.  The paradox gap ``var / mu_F`` is the
    same quantity rescaled and is reported by :func:`paradox_summary`.
    """
    _require_edges(g)
    return degree_variance(g)


def _verdict(f: int, mean: Fraction | None) -> Verdict:
    if mean is None:
        return Verdict.UNDEFINED
    if mean > f:
        return Verdict.GREATER
    if mean < f:
        return Verdict.LESS
    return Verdict.EQUAL


def paradox_table(g: Graph) -> list[ParadoxRow]:
    deg = degrees(g)
    rows = []
    for i in range(g.n):
        ff = sum(deg[j] for j in g.neighbors(i))
        mean = Fraction(ff, deg[i]) if deg[i] else None
        rows.append(ParadoxRow(i, deg[i], ff, mean, _verdict(deg[i], mean)))
    return rows


def paradox_summary(g: Graph) -> ParadoxSummary:
    deg = _require_edges(g)
    total = sum(deg)
    mu_f = Fraction(total, g.n)
    variance = Fraction(sum(d * d for d in deg), g.n) - mu_f * mu_f
    mu_ff = Fraction(sum(d * d for d in deg), total)

    rows = paradox_table(g)
    tally = Counter(r.verdict for r in rows)
    counts = {v: tally.get(v, 0) for v in Verdict}
    defined = [r.local_ff_mean for r in rows if r.local_ff_mean is not None]
    mean_local = sum(defined, Fraction(0)) / len(defined) if defined else None
    return ParadoxSummary(
        mu_f=mu_f,
        mu_ff_global=mu_ff,
        degree_variance=variance,
        gap=mu_ff - mu_f,
        counts=counts,
        mean_local_ff=mean_local,
    )
