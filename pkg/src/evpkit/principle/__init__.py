from evpkit.principle.approximate import BoundReport, ekeland_with_bound, is_approx_solution
from evpkit.principle.ekeland import (
    ChainStep,
    EkelandCertificate,
    ekeland_point,
    maximal_via_relation,
    scalar_reduction_holds,
)
from evpkit.principle.perturbation import (
    check_unique_minimal,
    direction_from_weights,
    perturbed_objective,
    vertex_weights,
)
from evpkit.principle.relation import (
    RelationWitness,
    attainable_set,
    decompose,
    relation_matrix,
    relation_r,
    relation_r_dk,
)

__all__ = [
    "BoundReport",
    "ChainStep",
    "EkelandCertificate",
    "RelationWitness",
    "attainable_set",
    "check_unique_minimal",
    "decompose",
    "direction_from_weights",
    "ekeland_point",
    "ekeland_with_bound",
    "is_approx_solution",
    "maximal_via_relation",
    "perturbed_objective",
    "relation_matrix",
    "relation_r",
    "relation_r_dk",
    "scalar_reduction_holds",
    "vertex_weights",
]
