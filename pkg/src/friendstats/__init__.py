"""Friendship-paradox statistics, degree-distribution bounds and attention models."""

from .attention import (
    Equilibrium,
    LinearCurve,
    demand_curve,
    equilibrium,
    evaluate,
    institutional_demand,
    shift_supply,
    supply_curve,
    translate_supply,
)
from .degree_stats import (
    DistributionSummary,
    PointDistribution,
    TailBoundReport,
    chebyshev_tail_bound,
    fit_point_model,
    mallows_check,
    summarize,
    tail_bound,
    validate_point_model,
)
from .generators import GeneratorConfig, LabeledGraph, Role, degree_cap, generate, skew_report
from .graph import Graph, degrees, parse_edge_list, to_edge_list, validate
from .paradox import (
    ParadoxRow,
    ParadoxSummary,
    Verdict,
    friends_of_friends,
    global_ff_mean,
    local_ff_mean,
    mean_friends,
    paradox_summary,
    paradox_table,
    structural_information,
)

__version__ = "0.1.0"
