from evpkit.relations.finite import FiniteRelation, find_maximal, is_maximal, transitive_closure

__all__ = ["FiniteRelation", "find_maximal", "is_maximal", "transitive_closure"]
