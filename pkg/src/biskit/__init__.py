"""Finite inverse semigroups and Boolean inverse monoids from tables."""

from .boolean import (
    BoolInvSgp,
    Morphism,
    analyze_morphism,
    as_boolean,
    atoms_groupoid,
    check_boolean,
    direct_product,
    enumerate_additive_ideals,
    epsilon_quotient,
    ideal_closure,
    is_simple,
    is_zero_simplifying,
    k_of_groupoid,
    orthogonalize,
    preceq,
    relative_complement,
    theta_iso,
)
from .booleanization import (
    booleanization_iso,
    booleanize,
    enumerate_filters,
    filter_groupoid,
    gamma_extension,
)
from .core import (
    InvSgp,
    adjoin_zero,
    all_congruences,
    from_table,
    is_fundamental,
    mu_and_quotient,
    natural_order,
    parse_semigroup,
    relations,
    restricted_groupoid,
    semigroup_iso,
    table_product,
)
from .corpus import corpus_groupoid, corpus_semigroup, corpus_text, write_corpus
from .errors import BiskitError
from .groupoid import (
    Gpd,
    component_form,
    coordinatize,
    group_name,
    groupoid_iso,
    parse_groupoid,
    reconstruct,
)
from .laws import run_laws
from .rook import (
    RookMatrix,
    build_Mn_G0,
    decompose,
    rook_matrix,
    rook_mul,
    rook_star,
)
from .typemon import (
    ideal_triple,
    mu_type_invariance,
    product_type_check,
    refinement_check,
    type_monoid,
    type_via_matrices,
)

__version__ = "0.1.0"

__all__ = [
    "BiskitError",
    "BoolInvSgp",
    "Gpd",
    "InvSgp",
    "Morphism",
    "RookMatrix",
    "adjoin_zero",
    "all_congruences",
    "analyze_morphism",
    "as_boolean",
    "atoms_groupoid",
    "booleanization_iso",
    "booleanize",
    "build_Mn_G0",
    "check_boolean",
    "component_form",
    "coordinatize",
    "corpus_groupoid",
    "corpus_semigroup",
    "corpus_text",
    "decompose",
    "direct_product",
    "enumerate_additive_ideals",
    "enumerate_filters",
    "epsilon_quotient",
    "filter_groupoid",
    "from_table",
    "gamma_extension",
    "group_name",
    "groupoid_iso",
    "ideal_closure",
    "ideal_triple",
    "is_fundamental",
    "is_simple",
    "is_zero_simplifying",
    "k_of_groupoid",
    "mu_and_quotient",
    "mu_type_invariance",
    "natural_order",
    "orthogonalize",
    "parse_groupoid",
    "parse_semigroup",
    "preceq",
    "product_type_check",
    "reconstruct",
    "refinement_check",
    "relations",
    "relative_complement",
    "restricted_groupoid",
    "rook_matrix",
    "rook_mul",
    "rook_star",
    "run_laws",
    "semigroup_iso",
    "table_product",
    "theta_iso",
    "type_monoid",
    "type_via_matrices",
    "write_corpus",
]
