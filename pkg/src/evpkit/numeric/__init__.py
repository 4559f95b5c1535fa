from evpkit.numeric.rational import NormTag, RationalVector, combine, format_rational, to_rational
from evpkit.numeric.simplex import lp_feasible, lp_minimize
from evpkit.numeric.system import INFEASIBLE, Feasibility, LinearSystem, Outcome, OutcomeStatus, SystemBuilder

__all__ = [
    "INFEASIBLE",
    "Feasibility",
    "LinearSystem",
    "NormTag",
    "Outcome",
    "OutcomeStatus",
    "RationalVector",
    "SystemBuilder",
    "combine",
    "format_rational",
    "lp_feasible",
    "lp_minimize",
    "to_rational",
]
