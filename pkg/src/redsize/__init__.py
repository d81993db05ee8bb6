"""Quiver mutation with principal coefficients, green sequences and red sizes."""

from .constructions import (
    CatalogEntry,
    catalog,
    delete_vertex,
    disjoint_union,
    induced_subquiver,
    is_connected,
    triangular_extension,
)
from .core import (
    Color,
    ExtendedQuiver,
    Quiver,
    are_isomorphic,
    arrows_of,
    canonical_key,
    frame,
    mutate,
    quiver_from_arrows,
    relabel,
    vertex_color,
)
from .mutclass import enumerate_mutation_class, is_finite_mutation_type
from .search import exhaustive_red_search, last_green_achievability, random_green_walk, walk_ensemble
from .sequences import Mode, MutationSequence, apply_sequence, classify_sequence, verify_paper_tables

__version__ = "0.1.0"
