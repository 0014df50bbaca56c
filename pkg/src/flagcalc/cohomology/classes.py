"""Cohomology classes on Schubert bases and their products.

A class of codimension ``d`` on ``SL(n)/P_J`` is an integer combination of
``sigma_w`` with ``w`` in ``W^J`` and ``l(w) = d``.  Through the pullback
``H*(G/P_J) -> H*(G/B)`` these are the same ``sigma_w`` as on ``G/B``, so
products are computed on ``G/B`` (Borel's presentation) and the support is
checked to stay inside ``W^J``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from ..polyring import DomainError
from ..weyl import Permutation, PermutationError, grassmannian_permutation, partition_of
from .cache import STORE, InvariantViolation, product_in_sn
from .spaces import FlagSpace


def basis_key(w: Permutation, n: int):
    """Sort key: ascending reverse-lex leading monomial ``x^code(w)``."""
    return tuple(reversed(w.extended(n).code))


def schubert_basis(space: FlagSpace, d: int) -> list[Permutation]:
    """The ``w`` in ``W^J`` of length ``d``, ordered by :func:`basis_key`."""
    if not 0 <= d <= space.dimension:
        raise DomainError(f"degree {d} exceeds dimension {space.dimension} of {space.describe()}" if d > 0 else f"degree {d} is negative")
    reps = [w for w in space.coset_reps(max_length=d) if w.length == d]
    return sorted(reps, key=lambda w: basis_key(w, space.n))


class CohomClass:
    """Homogeneous element of ``H^{2d}(SL(n)/P_J)`` in the Schubert basis."""

    __slots__ = ("space", "coeffs", "grade")

    def __init__(self, space: FlagSpace, coeffs: Mapping[Permutation, int], grade: int | None = None):
        clean = {}
        for w, c in coeffs.items():
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            if c == 0:
                continue
            if not space.contains(w):
                raise DomainError(f"{w} does not index a Schubert class of {space.describe()}")
            clean[w.extended(space.n)] = clean.get(w.extended(space.n), 0) + c
        clean = {w: c for w, c in clean.items() if c}
        lengths = {w.length for w in clean}
        if len(lengths) > 1:
            raise DomainError(f"inhomogeneous class with codimensions {sorted(lengths)}")
        if grade is None:
            if not lengths:
                raise DomainError("the grade of a zero class must be given")
            grade = lengths.pop()
        elif lengths and lengths != {grade}:
            raise DomainError(f"grade {grade} does not match codimension {lengths.pop()}")
        self.space = space
        self.coeffs = dict(sorted(clean.items(), key=lambda wc: basis_key(wc[0], space.n)))
        self.grade = grade

    @classmethod
    def sigma(cls, space: FlagSpace, w: Permutation) -> "CohomClass":
        return cls(space, {w: 1})

    @classmethod
    def zero(cls, space: FlagSpace, grade: int) -> "CohomClass":
        return cls(space, {}, grade)

    @classmethod
    def unit(cls, space: FlagSpace) -> "CohomClass":
        return cls(space, {Permutation.identity(space.n): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other):
        if not isinstance(other, CohomClass):
            return NotImplemented
        if other.space != self.space:
            raise DomainError(f"classes live on different spaces: {self.space.describe()} vs {other.space.describe()}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        if self.grade != other.grade:
            raise DomainError("adding classes of different codimension")
        merged = dict(self.coeffs)
        for w, c in other.coeffs.items():
            merged[w] = merged.get(w, 0) + c
        return CohomClass(self.space, merged, self.grade)

    def __neg__(self):
        return CohomClass(self.space, {w: -c for w, c in self.coeffs.items()}, self.grade)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CohomClass(self.space, {w: c * other for w, c in self.coeffs.items()}, self.grade)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return cup_product(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CohomClass):
            return NotImplemented
        return self.space == other.space and self.grade == other.grade and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.space, self.grade, tuple(self.coeffs.items())))

    def terms(self) -> list[tuple[Permutation, int]]:
        return list(self.coeffs.items())

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for w, c in self.coeffs.items():
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            sign = "-" if c < 0 else "+"
            parts.append((sign, f"{mag}s{w}"))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        return {
            "space": self.space.spec(),
            "grade": self.grade,
            "terms": [[list(w.entries), c] for w, c in self.coeffs.items()],
        }

    def dual_view(self) -> str:
        """Dimension-indexed form ``[X(w0 w)]`` used in print."""
        if not self.coeffs:
            return "0"
        w0 = Permutation.longest(self.space.n)
        return " + ".join(f"{c}*[X{w0 * w}]" for w, c in self.coeffs.items())

    def __repr__(self):
        return f"CohomClass({self.space.spec()}, {self.to_text()})"


def product_on_space(space: FlagSpace, u: Permutation, v: Permutation, fresh: bool = False) -> dict[Permutation, int]:
    """``sigma_u sigma_v`` on ``space`` as ``{w: c}``; aborts if ``W^J`` closure fails.

    ``fresh`` bypasses the store (and so any table on disk).
    """
    prod = product_in_sn(u, v, space.n) if fresh else STORE.product(u, v, space.n)
    for w in prod:
        if not space.contains(w):
            raise InvariantViolation(f"{u}*{v} on {space.describe()} leaves W^J at {w}")
    return prod


def cup_product(a: CohomClass, b: CohomClass) -> CohomClass:
    """Product through Borel's presentation; zero once the codimension exceeds the dimension."""
    if a.space != b.space:
        raise DomainError(f"classes live on different spaces: {a.space.describe()} vs {b.space.describe()}")
    space = a.space
    grade = a.grade + b.grade
    out: dict[Permutation, int] = {}
    if grade <= space.dimension:
        for u, cu in a.coeffs.items():
            for v, cv in b.coeffs.items():
                for w, c in product_on_space(space, u, v).items():
                    out[w] = out.get(w, 0) + cu * cv * c
    return CohomClass(space, out, grade)


def monk_step(u: Permutation, r: int, space: FlagSpace) -> CohomClass:
    """Monk's rule: ``sigma_{s_r} sigma_u = sum sigma_{u t_ab}`` over ``a <= r < b`` with length up by one."""
    n = space.n
    if not 1 <= r <= n - 1:
        raise DomainError(f"r must lie in 1..{n - 1}, got {r}")
    if r in space.J:
        raise DomainError(f"s_{r} is not a divisor class of {space.describe()}")
    if not space.contains(u):
        raise DomainError(f"{u} does not index a Schubert class of {space.describe()}")
    u = u.extended(n)
    target = u.length + 1
    out = {}
    for a in range(1, r + 1):
        for b in range(r + 1, n + 1):
            if u(a) < u(b):
                w = u.swap_positions(a, b)
                if w.length == target:
                    if not space.contains(w):
                        raise InvariantViolation(f"Monk term {w} leaves W^J")
                    out[w] = out.get(w, 0) + 1
    return CohomClass(space, out, target)


def divisor(space: FlagSpace, r: int) -> CohomClass:
    if r not in space.divisors:
        raise DomainError(f"s_{r} is not a divisor class of {space.describe()}")
    return CohomClass.sigma(space, Permutation.simple(r, space.n))


# named cycles ----------------------------------------------------------------

_NAME = re.compile(r"^\s*(?:D\s*\(?\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)?|D_?\{?(\d+)(?:,(\d+))?\}?|(E[12]))\s*$")


@dataclass(frozen=True)
class NamedCycle:
    """A named incidence cycle: ``D(k)``, ``D(k,k+1)``, ``D(k,k-1)``, ``E1`` or ``E2``."""

    name: str
    ambient: FlagSpace

    def resolve(self) -> tuple[tuple[int, ...], int]:
        """The (partition, Grassmannian index ``k``) describing the cycle."""
        m = _NAME.match(self.name)
        if not m:
            raise DomainError(f"unknown cycle name {self.name!r}")
        if m.group(5):
            return ((2, 1) if m.group(5) == "E1" else (3,)), 2
        k = int(m.group(1) or m.group(3))
        second = m.group(2) or m.group(4)
        if second is None:
            return (1,), k
        second = int(second)
        if second == k + 1:
            return (2,), k
        if second == k - 1:
            return (1, 1), k
        raise DomainError(f"{self.name}: second index must be k+1 or k-1")


def named_cycle(nc: NamedCycle) -> CohomClass:
    """Pull the cycle back from ``Gr(k, n)`` to ``nc.ambient`` (zero when its partition leaves the box)."""
    lam, k = nc.resolve()
    space = nc.ambient
    n = space.n
    if not 1 <= k <= n - 1:
        raise DomainError(f"{nc.name}: k={k} outside 1..{n - 1}")
    if k in space.J:
        raise DomainError(f"{nc.name} is not defined on {space.describe()}: it needs dimension {k} in the flag")
    grade = sum(lam)
    if len(lam) > k or lam[0] > n - k:
        return CohomClass.zero(space, grade)
    return CohomClass.sigma(space, grassmannian_permutation(lam, k, n))


def cycle(name: str, space: FlagSpace) -> CohomClass:
    return named_cycle(NamedCycle(name, space))


# Grassmannian oracle ----------------------------------------------------------

def _check_box(lam, k, n):
    lam = tuple(p for p in lam if p)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(p < 0 for p in lam):
        raise DomainError(f"not a partition: {lam}")
    if len(lam) > k or (lam and lam[0] > n - k):
        raise DomainError(f"partition {lam} is outside the {k}x{n - k} box")
    return lam


def pieri_product(lam, k: int, n: int) -> list[tuple[int, ...]]:
    """Partitions in the ``k x (n-k)`` box obtained from ``lam`` by adding one box."""
    if not 1 <= k <= n - 1:
        raise DomainError(f"k must lie in 1..{n - 1}")
    lam = list(_check_box(lam, k, n))
    padded = lam + [0]
    out = []
    for i in range(min(len(padded), k)):
        if padded[i] < n - k and (i == 0 or padded[i - 1] > padded[i]):
            mu = padded.copy()
            mu[i] += 1
            out.append(tuple(p for p in mu if p))
    return sorted(out, reverse=True)


def grassmannian_class(lam, k: int, n: int) -> CohomClass:
    lam = _check_box(lam, k, n)
    space = FlagSpace.grassmannian(k, n)
    return CohomClass(space, {grassmannian_permutation(lam, k, n): 1}, sum(lam))


def class_partitions(c: CohomClass, k: int) -> dict[tuple[int, ...], int]:
    return {partition_of(w, k): coef for w, coef in c.coeffs.items()}


# Dynkin symmetry --------------------------------------------------------------

def dynkin_permutation(w: Permutation, n: int) -> Permutation:
    """``w0 w w0``: conjugation realizing ``alpha_i -> alpha_{n-i}``."""
    e = w.extended(n).entries
    return Permutation(tuple(n + 1 - e[n - i] for i in range(1, n + 1)))


def dynkin_involution(obj):
    """Apply the diagram automorphism to a :class:`FlagSpace` or :class:`CohomClass`."""
    if isinstance(obj, FlagSpace):
        return FlagSpace(obj.n, tuple(obj.n - j for j in obj.J))
    if isinstance(obj, CohomClass):
        space = dynkin_involution(obj.space)
        return CohomClass(space, {dynkin_permutation(w, obj.space.n): c for w, c in obj.coeffs.items()}, obj.grade)
    raise TypeError(f"cannot apply the Dynkin involution to {type(obj).__name__}")


def parse_class(text: str, space: FlagSpace) -> CohomClass:
    """Parse ``(1,3,2,4)``, ``2*(1,3,2,4) + (2,1,3,4)``, ``s(1,3,2)`` or a cycle name like ``D(2)``."""
    text = text.strip()
    if not text:
        raise DomainError("empty class")
    if text[0] in "DE":
        return cycle(text, space)
    total = None
    for sign, body in re.findall(r"([+-]?)\s*([^+-]+)", text):
        body = body.strip()
        m = re.fullmatch(r"(?:(\d+)\s*\*\s*)?s?\s*(\([\d,\s]+\)|[\d,]+)", body)
        if not m:
            raise DomainError(f"cannot parse class term {body!r}")
        coef = int(m.group(1) or 1) * (-1 if sign == "-" else 1)
        try:
            w = Permutation.parse(m.group(2))
        except PermutationError as exc:
            raise DomainError(str(exc)) from None
        if not w.in_sn(space.n):
            raise DomainError(f"{w} is not in S_{space.n}")
        term = CohomClass(space, {w: coef})
        total = term if total is None else total + term
    return total
