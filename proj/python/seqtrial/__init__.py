"""Distribution of the sample average after a two-stage sequential trial."""

from ._seqtrial import (
    StoppingRule,
    TrialParams,
    exact_coverage,
    exact_kolmogorov,
    exact_tv_distance,
    expected_estimate,
    joint_density,
    marginal_stop_probability,
    simulate,
    statistic_cdf,
    statistic_density,
    stop_probability,
    table,
    tv_bound,
)

__all__ = [
    "StoppingRule",
    "TrialParams",
    "exact_coverage",
    "exact_kolmogorov",
    "exact_tv_distance",
    "expected_estimate",
    "joint_density",
    "marginal_stop_probability",
    "simulate",
    "statistic_cdf",
    "statistic_density",
    "stop_probability",
    "table",
    "tv_bound",
]
