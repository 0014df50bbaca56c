"""Cohomological constraints on a morphism ``P^m -> SL(n)/P_J``.

A morphism ``phi`` induces a ring map ``H*(G/P_J) -> Z[t]/(t^{m+1})`` with
``phi^*(sigma_{s_r}) = a_r t`` for each divisor ``r``.  Writing
``phi^*(sigma_w) = b_w t^{l(w)}``, every product
``sigma_u sigma_v = sum c_{uv}^w sigma_w`` yields the linear relation
``sum_w c_{uv}^w b_w = b_u b_v``.  Solving degree by degree expresses the
``b_w`` through the ``a_r`` (plus an extra unknown for each class the lower
degrees leave undetermined); relations with zero left-hand side become
consistency equations.  Effectivity asks ``b_w >= 0`` and ``a_r >= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..cohomology import FlagSpace, product_on_space, schubert_basis
from ..linalg import solve_linear
from ..polyring import Polynomial
from ..weyl import Permutation


@dataclass
class PullbackSystem:
    target: FlagSpace
    m: int
    vars: list[str]
    index: dict[str, int]
    divisor_vars: list[str]
    derived: dict[Permutation, Polynomial]
    consistency: list[Polynomial]
    effectivity: dict[str, Polynomial]
    free_classes: dict[str, Permutation] = field(default_factory=dict)
    weights: dict[str, int] = field(default_factory=dict)

    @property
    def names(self) -> dict[int, str]:
        return {i: v for v, i in self.index.items()}

    def var(self, name: str) -> Polynomial:
        return Polynomial.variable(self.index[name])

    def text(self, p: Polynomial) -> str:
        return p.to_text(names=self.names)

    def b(self, w: Permutation) -> Polynomial:
        return self.derived[w.extended(self.target.n)]

    def constraint(self, key: str) -> Polynomial:
        """Look up ``eq:<i>`` (consistency) or an effectivity key."""
        if key.startswith("eq:"):
            i = int(key[3:])
            if not 0 <= i < len(self.consistency):
                raise KeyError(key)
            return self.consistency[i]
        return self.effectivity[key]

    def check(self, assignment: dict[str, int]) -> bool:
        """Exact admissibility of a full assignment (zero vector excluded)."""
        values = {self.index[v]: Fraction(assignment.get(v, 0)) for v in self.vars}
        if not any(values[self.index[v]] for v in self.divisor_vars):
            return False
        if any(eq.evaluate(values) != 0 for eq in self.consistency):
            return False
        return all(g.evaluate(values) >= 0 for g in self.effectivity.values())

    def to_json(self) -> dict:
        n = self.target.n
        return {
            "target": self.target.spec(),
            "m": self.m,
            "vars": list(self.vars),
            "free_classes": {k: list(w.entries) for k, w in self.free_classes.items()},
            "derived": {",".join(map(str, w.extended(n).entries)): self.text(p) for w, p in self.derived.items()},
            "consistency": [self.text(p) for p in self.consistency],
            "effectivity": {k: self.text(p) for k, p in self.effectivity.items()},
        }


def var_name(r: int) -> str:
    return f"a{r}"


def effectivity_key(w: Permutation, n: int) -> str:
    return "b:" + ",".join(map(str, w.extended(n).entries))


def build_pullback_system(target: FlagSpace, m: int) -> PullbackSystem:
    if m < 1:
        raise ValueError("m must be a positive integer")
    n = target.n
    top = min(m, target.dimension)
    vars_ = [var_name(r) for r in target.divisors]
    index = {v: r for v, r in zip(vars_, target.divisors)}
    weights = {v: 1 for v in vars_}
    next_index = n
    free_classes: dict[str, Permutation] = {}

    ident = Permutation.identity(n)
    derived: dict[Permutation, Polynomial] = {ident: Polynomial(1)}
    bases = {0: [ident]}
    for r in target.divisors:
        derived[Permutation.simple(r, n)] = Polynomial.variable(r)
    bases[1] = schubert_basis(target, 1) if top >= 1 else []

    consistency: list[Polynomial] = []
    for d in range(2, m + 1):
        basis = schubert_basis(target, d) if d <= top else []
        col = {w: i for i, w in enumerate(basis)}
        rows, rhs = [], []
        for du in range(1, d // 2 + 1):
            dv = d - du
            left, right = bases.get(du, []), bases.get(dv, [])
            for i, u in enumerate(left):
                for j, v in enumerate(right):
                    if du == dv and j < i:
                        continue
                    row = [0] * len(basis)
                    if basis:
                        for w, c in product_on_space(target, u, v).items():
                            row[col[w]] = c
                    rows.append(row)
                    rhs.append(derived[u] * derived[v])
        if not rows:
            bases[d] = basis
            continue
        if basis:
            pivots, red, reduced = solve_linear(rows, rhs)
        else:
            pivots, red, reduced = [], rows, rhs
        free = [c for c in range(len(basis)) if c not in pivots]
        free_poly = {}
        for c in free:
            name = f"f{len(free_classes) + 1}"
            free_classes[name] = basis[c]
            index[name] = next_index
            weights[name] = d
            vars_.append(name)
            free_poly[c] = Polynomial.variable(next_index)
            next_index += 1
        for c, p in free_poly.items():
            derived[basis[c]] = p
        for r, c in enumerate(pivots):
            value = reduced[r]
            for fc, p in free_poly.items():
                coef = red[r][fc]
                if coef:
                    value = value - p * coef
            derived[basis[c]] = value
        for r in range(len(pivots), len(rows)):
            eq = reduced[r]
            if not eq.is_zero():
                consistency.append(eq.content_normalized())
        bases[d] = basis

    consistency = _dedupe(consistency)
    effectivity: dict[str, Polynomial] = {}
    for w, p in sorted(derived.items(), key=lambda wp: (wp[0].length, wp[0].entries)):
        if w.length >= 1:
            effectivity[effectivity_key(w, n)] = p
    return PullbackSystem(
        target=target,
        m=m,
        vars=vars_,
        index=index,
        divisor_vars=[var_name(r) for r in target.divisors],
        derived={w: derived[w] for w in sorted(derived, key=lambda w: (w.length, w.entries))},
        consistency=consistency,
        effectivity=effectivity,
        free_classes=free_classes,
        weights=weights,
    )


def _dedupe(polys):
    seen = set()
    out = []
    for p in polys:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out
