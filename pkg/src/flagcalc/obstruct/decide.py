"""Verdicts for the question: is there a nonconstant morphism ``P^m -> G/P_J``?

Nonexistence is only ever claimed through a verified certificate.  An
exhausted search proves nothing about larger assignments and is reported
as undetermined.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..cohomology import FlagSpace
from .certificates import Certificate, verify_certificate
from .library import default_library
from .search import search_witness
from .system import PullbackSystem, build_pullback_system

DEFAULT_BOUND = 10


@dataclass(frozen=True)
class NoObstructionFound:
    witness: dict[str, int]
    kind = "NoObstructionFound"

    def payload(self):
        return {"witness": dict(sorted(self.witness.items()))}


@dataclass(frozen=True)
class NonexistenceCertified:
    certificate: Certificate
    kind = "NonexistenceCertified"

    def payload(self):
        return {"certificate": self.certificate.to_json()}


@dataclass(frozen=True)
class Undetermined:
    bound: int
    kind = "Undetermined"

    def payload(self):
        return {"bound": self.bound}


Verdict = NoObstructionFound | NonexistenceCertified | Undetermined


def certify(sys: PullbackSystem, library=None) -> Certificate | None:
    for family in default_library() if library is None else library:
        if isinstance(family, Certificate):
            cert = family if family.target == sys.target.spec() and family.m == sys.m else None
        else:
            cert = family.generate(sys)
        if cert is not None and verify_certificate(sys, cert):
            return cert
    return None


def decide(source_m: int, target: FlagSpace, bound: int = DEFAULT_BOUND, cert_library=None, system=None):
    """Return ``(verdict, system)``; ``cert_library`` mixes families and stored certificates."""
    sys = system or build_pullback_system(target, source_m)
    cert = certify(sys, cert_library)
    if cert is not None:
        return NonexistenceCertified(cert), sys
    witness = search_witness(sys, bound)
    if witness is not None:
        return NoObstructionFound(witness), sys
    return Undetermined(bound), sys
