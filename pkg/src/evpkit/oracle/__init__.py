from evpkit.oracle.audit import audit
from evpkit.oracle.fourier_motzkin import fm_feasible
from evpkit.oracle.scan import fm_relation, related_targets, relation_system, scan_maximal

__all__ = [
    "audit",
    "fm_feasible",
    "fm_relation",
    "related_targets",
    "relation_system",
    "scan_maximal",
]
