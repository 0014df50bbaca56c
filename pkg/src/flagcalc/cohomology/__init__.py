"""Cohomology rings of type-A flag varieties on Schubert bases."""

from .cache import CacheCorruptError, InvariantViolation, STORE, cache_dir
from .classes import (
    CohomClass,
    NamedCycle,
    basis_key,
    class_partitions,
    cup_product,
    cycle,
    divisor,
    dynkin_involution,
    dynkin_permutation,
    grassmannian_class,
    monk_step,
    named_cycle,
    parse_class,
    pieri_product,
    product_on_space,
    schubert_basis,
)
from .lemmas import LemmaCheck, verify_lemmas
from .spaces import FlagSpace, parse_space

__all__ = [
    "CacheCorruptError", "CohomClass", "FlagSpace", "InvariantViolation", "LemmaCheck",
    "NamedCycle", "STORE", "basis_key", "cache_dir", "class_partitions", "cup_product",
    "cycle", "divisor", "dynkin_involution", "dynkin_permutation", "grassmannian_class",
    "monk_step", "named_cycle", "parse_class", "parse_space", "pieri_product", "product_on_space",
    "schubert_basis", "verify_lemmas",
]
