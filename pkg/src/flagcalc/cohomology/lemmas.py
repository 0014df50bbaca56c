"""Incidence-cycle identities in Grassmannians and two-step flag varieties.

Each check multiplies named cycles with :func:`cup_product` and compares
with the expected combination exactly.  Identities involving ``D_k`` and
``D_{k+1}`` together are checked on the two-step flag ``G(k, k+1, n)`` and
again on ``G/B``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import CohomClass, cup_product, cycle
from .spaces import FlagSpace


@dataclass(frozen=True)
class LemmaCheck:
    identity: str
    n: int
    k: int
    space: str
    lhs: str
    rhs: str
    passed: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _record(identity, n, k, space, lhs: CohomClass, rhs: CohomClass):
    return LemmaCheck(identity, n, k, space.spec(), lhs.to_text(), rhs.to_text(), lhs == rhs)


def check_square(n: int, k: int) -> LemmaCheck:
    """``D_k . D_k = D_{k,k-1} + D_{k,k+1}`` in ``Gr(k, n)``."""
    g = FlagSpace.grassmannian(k, n)
    d = cycle(f"D({k})", g)
    lhs = cup_product(d, d)
    rhs = cycle(f"D({k},{k - 1})", g) + cycle(f"D({k},{k + 1})", g)
    return _record("D_k.D_k = D_{k,k-1} + D_{k,k+1}", n, k, g, lhs, rhs)


def check_adjacent(n: int, k: int, space: FlagSpace) -> LemmaCheck:
    """``D_k . D_{k+1} = D_{k,k+1} + D_{k+1,k}`` on ``space`` (needs dims ``k, k+1``)."""
    lhs = cup_product(cycle(f"D({k})", space), cycle(f"D({k + 1})", space))
    rhs = cycle(f"D({k},{k + 1})", space) + cycle(f"D({k + 1},{k})", space)
    return _record("D_k.D_{k+1} = D_{k,k+1} + D_{k+1,k}", n, k, space, lhs, rhs)


def check_e_cycles(n: int) -> list[LemmaCheck]:
    """``D_{2,1} . D_2 = E_1`` and ``D_{2,3} . D_2 = E_1 + E_2`` in ``Gr(2, n)``."""
    g = FlagSpace.grassmannian(2, n)
    d2 = cycle("D(2)", g)
    e1, e2 = cycle("E1", g), cycle("E2", g)
    return [
        _record("D_{2,1}.D_2 = E_1", n, 2, g, cup_product(cycle("D(2,1)", g), d2), e1),
        _record("D_{2,3}.D_2 = E_1 + E_2", n, 2, g, cup_product(cycle("D(2,3)", g), d2), e1 + e2),
    ]


def verify_lemmas(n_values) -> list[LemmaCheck]:
    rows = []
    for n in n_values:
        for k in range(1, n):
            rows.append(check_square(n, k))
        for k in range(1, n - 1):
            rows.append(check_adjacent(n, k, FlagSpace.partial((k, k + 1), n)))
            rows.append(check_adjacent(n, k, FlagSpace.full_flag(n)))
        if n >= 4:
            rows.extend(check_e_cycles(n))
    return rows
