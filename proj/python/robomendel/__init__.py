"""Information-metric experiment planning over a simulated pea world.

Thin wrapper around the compiled extension; everything public lives there.
"""

from ._robomendel import (  # noqa: F401
    IpEstimate,
    RobomendelError,
    bayes_update,
    control_information,
    disambiguation_value,
    empirical_entropy,
    empirical_information,
    empirical_log_likelihood,
    entropy,
    env_factor_curve,
    expectation_ip,
    gaussian_entropy,
    initial_scores,
    localize,
    mutual_information,
    potential_information,
    relative_entropy,
    run_design,
    run_sequence,
    targeted_ip,
    technical_failure_mi,
    yield_curve,
)

__all__ = [
    "IpEstimate",
    "RobomendelError",
    "bayes_update",
    "control_information",
    "disambiguation_value",
    "empirical_entropy",
    "empirical_information",
    "empirical_log_likelihood",
    "entropy",
    "env_factor_curve",
    "expectation_ip",
    "gaussian_entropy",
    "initial_scores",
    "localize",
    "mutual_information",
    "potential_information",
    "relative_entropy",
    "run_design",
    "run_sequence",
    "targeted_ip",
    "technical_failure_mi",
    "yield_curve",
]
