"""Parametric certificate families, generated for each ``n``.

A family fixes the case tree, the effectivity multipliers and the squares
of every leaf; the polynomial multipliers of the equalities are then found
by exact linear algebra (an ideal-membership solve), so the result does not
depend on how the system normalizes its consistency equations.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable

from ..cohomology import dynkin_involution, dynkin_permutation
from ..linalg import solve_linear
from ..polyring import Polynomial
from ..weyl import Permutation, grassmannian_permutation
from .certificates import Branch, Certificate, Leaf, leaf_sum
from .system import PullbackSystem, effectivity_key, var_name


def _monomials(variables: list[int], degree: int):
    for combo in combinations_with_replacement(variables, degree):
        exps = [0] * (max(variables) if variables else 0)
        for v in combo:
            exps[v - 1] += 1
        yield Polynomial.monomial(exps)


def solve_equalities(sys: PullbackSystem, zeros, pos, leaf: Leaf) -> Leaf | None:
    """Fill in ``leaf.equalities`` so that the leaf identity holds, or return None."""
    base = leaf_sum(sys, zeros, pos, replace(leaf, equalities=()))
    if base.is_zero():
        return replace(leaf, equalities=())
    if not base.is_homogeneous():
        return None
    target_deg = base.degree()
    cands = [(f"zero:{v}", sys.var(v)) for v in zeros]
    cands += [(f"eq:{i}", e) for i, e in enumerate(sys.consistency)]
    variables = sorted(sys.index.values())
    unknowns = []  # (key, monomial multiplier, product polynomial)
    for key, e in cands:
        if e.is_zero() or not e.is_homogeneous() or e.degree() > target_deg:
            continue
        for mono in _monomials(variables, target_deg - e.degree()):
            unknowns.append((key, mono, mono * e))
    if not unknowns:
        return None
    monos = sorted({m for _, _, p in unknowns for m in p.packed} | set(base.packed))
    row_of = {m: i for i, m in enumerate(monos)}
    matrix = [[0] * len(unknowns) for _ in monos]
    for j, (_, _, p) in enumerate(unknowns):
        for m, c in p.packed.items():
            matrix[row_of[m]][j] = c
    rhs = [Fraction(-base.packed.get(m, 0)) for m in monos]
    pivots, _, reduced = solve_linear(matrix, rhs)
    if any(reduced[r] for r in range(len(pivots), len(monos))):
        return None
    lam: dict[str, Polynomial] = {}
    for r, col in enumerate(pivots):
        c = reduced[r]
        if c:
            key, mono, _ = unknowns[col]
            lam[key] = lam.get(key, Polynomial()) + mono * c
    eqs = tuple(sorted((k, p) for k, p in lam.items() if not p.is_zero()))
    return replace(leaf, equalities=eqs)


def complete(sys: PullbackSystem, family: str, root) -> Certificate | None:
    """Solve the equality multipliers of every leaf of a skeleton tree."""

    def walk(node, zeros, pos):
        if isinstance(node, Leaf):
            return solve_equalities(sys, zeros, pos, node)
        z = walk(node.zero, zeros + (node.var,), pos)
        p = walk(node.positive, zeros, pos + (node.var,))
        if z is None or p is None:
            return None
        return Branch(node.var, z, p)

    filled = walk(root, (), ())
    if filled is None:
        return None
    return Certificate(family, sys.target.spec(), sys.m, tuple(sorted(sys.index.items())), filled)


def _lin(sys, coeffs: dict[str, int]) -> Polynomial:
    total = Polynomial()
    for v, c in coeffs.items():
        total = total + sys.var(v) * c
    return total


# full flag, m = 2 --------------------------------------------------------------

def full_flag_skeleton(sys: PullbackSystem):
    """Single leaf: ``p_2`` of ``x_i = y_i - y_{i-1}`` (``y_0 = y_n = 0``) is a sum of squares."""
    n = sys.target.n
    squares = []
    for i in range(1, n + 1):
        q = {}
        if i <= n - 1:
            q[var_name(i)] = 1
        if i >= 2:
            q[var_name(i - 1)] = -1
        squares.append((Fraction(1), _lin(sys, q)))
    return Leaf(squares=tuple(squares))


# minimal parabolic at alpha_1, m = 3 -------------------------------------------

def alpha1_skeleton(sys: PullbackSystem):
    """Branch on ``a2``.

    ``a2 = 0``: ``b_{D(2,3)} = -1/2 [a3^2 + sum (a_i - a_{i+1})^2 + a_{n-1}^2]``.
    ``a2 > 0``: ``b_{E2} + a2 [sum_{i>=2} (a_i - a_{i+1})^2 + a_{n-1}^2]`` lies in the
    ideal of the consistency equations.
    """
    n = sys.target.n
    half = Fraction(1, 2)
    d23 = grassmannian_permutation((2,), 2, n)
    zero_sq = [(half, _lin(sys, {var_name(i): 1, var_name(i + 1): -1})) for i in range(3, n - 1)]
    zero_sq += [(half, sys.var(var_name(3))), (half, sys.var(var_name(n - 1)))]
    zero_leaf = Leaf(nonneg=((effectivity_key(d23, n), Fraction(1)),), squares=tuple(zero_sq))
    pos_sq = [(Fraction(1), _lin(sys, {var_name(i): 1, var_name(i + 1): -1})) for i in range(2, n - 1)]
    pos_sq.append((Fraction(1), sys.var(var_name(n - 1))))
    nonneg = ()
    if 3 <= n - 2:
        e2 = grassmannian_permutation((3,), 2, n)
        nonneg = ((effectivity_key(e2, n), Fraction(1)),)
    pos_leaf = Leaf(nonneg=nonneg, positive=(var_name(2),), squares=tuple(pos_sq))
    return Branch(var_name(2), zero_leaf, pos_leaf)


def transport(node, n: int, rename: Callable[[str], str], remap: Callable[[Polynomial], Polynomial]):
    """Carry a skeleton across the Dynkin involution."""
    if isinstance(node, Branch):
        return Branch(rename(node.var), transport(node.zero, n, rename, remap), transport(node.positive, n, rename, remap))

    def key(k):
        if not k.startswith("b:"):
            return k
        w = Permutation.parse(k[2:])
        return effectivity_key(dynkin_permutation(w, n), n)

    return Leaf(
        nonneg=tuple((key(k), mu) for k, mu in node.nonneg),
        equalities=(),
        positive=tuple(rename(v) for v in node.positive),
        squares=tuple((s, remap(q)) for s, q in node.squares),
    )


@dataclass(frozen=True)
class Family:
    name: str
    applies: Callable[[PullbackSystem], bool]
    skeleton: Callable[[PullbackSystem], object]

    def generate(self, sys: PullbackSystem) -> Certificate | None:
        if not self.applies(sys):
            return None
        return complete(sys, self.name, self.skeleton(sys))


def _full_flag_applies(sys):
    return sys.target.is_full_flag() and sys.m == 2


def _alpha_end_applies(sys):
    n = sys.target.n
    return sys.m == 3 and n >= 4 and sys.target.J in ((1,), (n - 1,))


def _alpha_end_skeleton(sys):
    n = sys.target.n
    if sys.target.J == (1,):
        return alpha1_skeleton(sys)
    from .system import build_pullback_system

    mirror = build_pullback_system(dynkin_involution(sys.target), sys.m)
    rename = lambda v: var_name(n - int(v[1:]))
    images = {mirror.index[v]: sys.var(rename(v)) for v in mirror.divisor_vars}
    return transport(alpha1_skeleton(mirror), n, rename, lambda q: q.substitute(images))


FULL_FLAG_QUADRATIC = Family("full-flag-power-sum", _full_flag_applies, full_flag_skeleton)
ALPHA_END_CUBIC = Family("alpha-end-cubic", _alpha_end_applies, _alpha_end_skeleton)


def default_library() -> list[Family]:
    """The shipped families; each applies only at the exact source dimension it proves."""
    return [FULL_FLAG_QUADRATIC, ALPHA_END_CUBIC]
