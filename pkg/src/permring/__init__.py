"""Separable permutation rings ``k(G/H)`` over finite permutation groups.

Splitting towers, degrees, quasi-Galois tests and closures, supports and
splitting rings in mod G, D^b(G) and stab G, computed from G-set
combinatorics.
"""
from .errors import *  # noqa: F401,F403
from .errors import __all__ as _error_names
from .families import alternating, cyclic, dihedral, symmetric
from .groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    are_conjugate,
    centralizer,
    conjugate_subgroup,
    double_cosets,
    elementary_abelian_classes,
    generate_group,
    intersect_subgroups,
    left_transversal,
    is_strongly_p_embedded,
    is_subconjugate,
    normal_core,
    normalizer,
    subgroup_closure,
    sylow_subgroup,
)
from .gsets import (
    GSet,
    coset_gset,
    count_equivariant_maps,
    disjoint_union,
    distinct_tuples,
    orbits,
    product,
)
from .perm import Permutation, format_cycles, parse_cycles
from .rings import (
    Category,
    Kind,
    PermRing,
    coset_ring,
    count_ring_endomorphisms,
    degree,
    has_constant_degree,
    indecomposable_factors,
    is_quasi_galois,
    is_unit,
    is_zero,
    mackey_stabilizers,
    perm_ring,
    quasi_galois_closure,
    splits,
    splitting_rings,
    splitting_tower,
    support,
)

__version__ = "0.1.0"

__all__ = [
    "Permutation", "parse_cycles", "format_cycles",
    "FiniteGroup", "Subgroup", "generate_group", "subgroup_closure", "all_subgroups",
    "conjugate_subgroup", "intersect_subgroups", "left_transversal", "normal_core", "normalizer",
    "centralizer", "double_cosets", "are_conjugate", "is_subconjugate",
    "elementary_abelian_classes", "sylow_subgroup", "is_strongly_p_embedded",
    "symmetric", "alternating", "cyclic", "dihedral",
    "GSet", "coset_gset", "disjoint_union", "product", "orbits", "distinct_tuples",
    "count_equivariant_maps",
    "Kind", "Category", "PermRing", "perm_ring", "coset_ring", "is_zero", "is_unit",
    "indecomposable_factors", "splitting_tower", "degree", "count_ring_endomorphisms",
    "is_quasi_galois", "support", "has_constant_degree", "quasi_galois_closure",
    "mackey_stabilizers", "splits", "splitting_rings",
    *_error_names,
]
