from evpkit.geometry.conditions import RolewiczOutcome, RolewiczVerdict, bishop_phelps_contains, rolewicz_check
from evpkit.geometry.cone import PolyhedralCone, cone_contains, leq_K
from evpkit.geometry.directions import DirectionSet, Scalarizer, gap, separating_functional

__all__ = [
    "DirectionSet",
    "PolyhedralCone",
    "RolewiczOutcome",
    "RolewiczVerdict",
    "Scalarizer",
    "bishop_phelps_contains",
    "cone_contains",
    "gap",
    "leq_K",
    "rolewicz_check",
    "separating_functional",
]
