"""Cohomological obstructions to morphisms from projective space to flag varieties."""

from .certificates import Branch, Certificate, CertificateError, Leaf, verify_certificate
from .decide import DEFAULT_BOUND, NoObstructionFound, NonexistenceCertified, Undetermined, certify, decide
from .library import ALPHA_END_CUBIC, FULL_FLAG_QUADRATIC, Family, default_library, solve_equalities
from .search import search_witness
from .system import PullbackSystem, build_pullback_system, effectivity_key, var_name


def verdict_payload(verdict, sys: PullbackSystem, include_system: bool = False) -> dict:
    out = {"verdict": verdict.kind, **verdict.payload()}
    if include_system:
        out["system"] = sys.to_json()
    return out


__all__ = [
    "ALPHA_END_CUBIC", "Branch", "Certificate", "CertificateError", "DEFAULT_BOUND",
    "FULL_FLAG_QUADRATIC", "Family", "Leaf", "NoObstructionFound", "NonexistenceCertified",
    "PullbackSystem", "Undetermined", "build_pullback_system", "certify", "decide",
    "default_library", "effectivity_key", "search_witness", "solve_equalities", "var_name",
    "verdict_payload", "verify_certificate",
]
