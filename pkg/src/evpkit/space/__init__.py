from evpkit.space.instance import Instance, build_instance, check_scale, distance, require_valid, validate
from evpkit.space.metric import FiniteMetricSpace, Objective

__all__ = [
    "FiniteMetricSpace",
    "Instance",
    "Objective",
    "build_instance",
    "check_scale",
    "distance",
    "require_valid",
    "validate",
]
