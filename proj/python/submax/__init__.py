"""Python surface of the large-average submatrix toolkit."""

from ._core import (
    anova,
    ave,
    b_n,
    brute_force,
    critical_alphas,
    f_overlap,
    gen_gaussian,
    greedy_for_k,
    gumbel_cdf,
    is_local_max,
    overlap,
    overlap_exponent_numeric,
    predicted_ave,
    region_summary,
    run_greedy,
    run_igp,
    run_las,
    sample_max_normalized,
    theta_n,
)

__all__ = [
    "anova",
    "ave",
    "b_n",
    "brute_force",
    "critical_alphas",
    "f_overlap",
    "gen_gaussian",
    "greedy_for_k",
    "gumbel_cdf",
    "is_local_max",
    "overlap",
    "overlap_exponent_numeric",
    "predicted_ave",
    "region_summary",
    "run_greedy",
    "run_igp",
    "run_las",
    "sample_max_normalized",
    "theta_n",
]

__version__ = "0.1.0"
