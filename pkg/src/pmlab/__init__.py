"""Finite commutative pseudorings: axioms, von Neumann inverses, ideals,
decomposition into fields, and localization."""

from .core import (
    AxiomReport,
    FinitePseudoring,
    build_chain_monoid_ring,
    build_product,
    build_sub,
    build_zero_mul,
    build_zmod,
    check_axioms,
    field_power,
    find_identity,
)
from .embeddings import embed_reduced, is_subdirect_product_of_fields, quotient_field_check, subdirect_embed
from .fileformat import AlgebraDocument, parse_algebra, serialize_algebra
from .idempotents import decompose, idempotent_as_sum, idempotent_poset, submeadow_Re
from .ideals import Ideal, characterize, enumerate_ideals, is_maximal, is_prime, radicals
from .quotients import (
    local_global_eq,
    local_global_zero,
    localize,
    localize_ideal,
    quotient,
    verify_localization_theorem,
)
from .regularity import e_of, is_meadow, is_pseudomeadow, is_reduced, nilpotents, vn_inverse, vn_profile



def clear_caches() -> None:
    """Drop memoized ideal lists, profiles, quotients and localizations."""
    from . import idempotents, ideals, quotients, regularity

    for fn in (ideals._enumerate, ideals._radicals, idempotents.idempotent_poset,
               quotients._quotient, quotients._localize, regularity.vn_profile):
        fn.cache_clear()


__all__ = [
    "AlgebraDocument",
    "AxiomReport",
    "FinitePseudoring",
    "Ideal",
    "build_chain_monoid_ring",
    "build_product",
    "build_sub",
    "build_zero_mul",
    "build_zmod",
    "characterize",
    "check_axioms",
    "clear_caches",
    "decompose",
    "e_of",
    "embed_reduced",
    "enumerate_ideals",
    "field_power",
    "find_identity",
    "idempotent_as_sum",
    "idempotent_poset",
    "is_maximal",
    "is_meadow",
    "is_prime",
    "is_pseudomeadow",
    "is_reduced",
    "is_subdirect_product_of_fields",
    "local_global_eq",
    "local_global_zero",
    "localize",
    "localize_ideal",
    "nilpotents",
    "parse_algebra",
    "quotient",
    "quotient_field_check",
    "radicals",
    "serialize_algebra",
    "subdirect_embed",
    "submeadow_Re",
    "verify_localization_theorem",
    "vn_inverse",
    "vn_profile",
]
