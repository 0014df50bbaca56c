"""Exhaustive integer search for admissible pullback assignments.

Assignments are scanned shell by shell in the max-norm (``max |v| = 1``,
then ``2``, ...), lexicographically inside a shell, so small witnesses are
found first and the scan order is deterministic.  A constraint is tested as
soon as every variable it mentions has a value.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from ..polyring import Polynomial, kernel
from .system import PullbackSystem


def _compile(p: Polynomial, position: dict[int, int]):
    den = 1
    for c in p.packed.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    terms = []
    top = -1
    for m, c in p.packed.items():
        factors = []
        for k, e in enumerate(kernel.exponents(m), start=1):
            if e:
                factors.append((position[k], e))
                top = max(top, position[k])
        terms.append((int(c * den), tuple(factors)))
    return top, terms


def _value(terms, vals):
    total = 0
    for c, factors in terms:
        t = c
        for pos, e in factors:
            t *= vals[pos] ** e
            if not t:
                break
        total += t
    return total


def search_witness(sys: PullbackSystem, bound: int = 10) -> dict[str, int] | None:
    """First admissible assignment with entries in ``0..bound`` (divisors not all zero), or None."""
    if bound < 1:
        return None
    order = list(sys.vars)
    position = {sys.index[v]: i for i, v in enumerate(order)}
    width = len(order)
    eq_at = [[] for _ in range(width)]
    ge_at = [[] for _ in range(width)]
    for eq in sys.consistency:
        top, terms = _compile(eq, position)
        if top < 0:
            if terms:
                return None
            continue
        eq_at[top].append(terms)
    for g in sys.effectivity.values():
        top, terms = _compile(g, position)
        if top < 0:
            if _value(terms, []) < 0:
                return None
            continue
        ge_at[top].append(terms)
    divisor_pos = [position[sys.index[v]] for v in sys.divisor_vars]

    vals = [0] * width

    def ok(level):
        for terms in eq_at[level]:
            if _value(terms, vals):
                return False
        for terms in ge_at[level]:
            if _value(terms, vals) < 0:
                return False
        return True

    def dfs(level, shell, hit):
        if level == width:
            return hit and any(vals[p] for p in divisor_pos)
        lo = shell if (level == width - 1 and not hit) else 0
        for v in range(lo, shell + 1):
            vals[level] = v
            if ok(level) and dfs(level + 1, shell, hit or v == shell):
                return True
        vals[level] = 0
        return False

    for shell in range(1, bound + 1):
        if dfs(0, shell, False):
            return dict(zip(order, vals))
    return None
