"""Explicit morphisms ``P^3 -> G(1,3,4) -> G/P_{alpha_j}`` in exact arithmetic.

A point of ``P^3`` is a line ``L`` in ``V = Q^4``.  A nondegenerate
alternating form gives ``L -> (L, L^perp, V)``, a flag of type ``(1,3,4)``.
Fixing a partial flag ``L_1 < ... < L_{j-2} < L_{j+2} < ... < L_n`` of
``Q^n`` and identifying ``L_{j+2}/L_{j-2}`` with ``V`` lifts such a flag to
a point of ``G/P_{alpha_j}`` (every dimension except ``j``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .linalg import canonical_basis, determinant, nullspace, rank
from .polyring import Polynomial

DEFAULT_SEED = 20240601
COORD_RANGE = 9


class GeometryError(ValueError):
    pass


def _vec(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


class RationalSubspace:
    """Subspace of ``Q^n`` given by a basis of independent vectors."""

    __slots__ = ("ambient_dim", "basis", "_canon")

    def __init__(self, ambient_dim: int, basis: Sequence[Sequence] = ()):
        basis = [_vec(v) for v in basis]
        if any(len(v) != ambient_dim for v in basis):
            raise GeometryError(f"basis vectors must have length {ambient_dim}")
        if basis and rank(basis) != len(basis):
            raise GeometryError("basis vectors are linearly dependent")
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        self._canon = tuple(tuple(r) for r in canonical_basis(basis)) if basis else ()

    @classmethod
    def span(cls, ambient_dim: int, vectors: Sequence[Sequence]) -> "RationalSubspace":
        """Span of arbitrary vectors (dependent ones are dropped)."""
        vectors = [_vec(v) for v in vectors if any(v)]
        return cls(ambient_dim, canonical_basis(vectors) if vectors else [])

    @classmethod
    def coordinate(cls, i: int, n: int) -> "RationalSubspace":
        """``M_i = span(e_1, ..., e_i)``."""
        return cls(n, [unit(k, n) for k in range(1, i + 1)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains_vector(self, v) -> bool:
        v = _vec(v)
        if not any(v):
            return True
        return rank(list(self.basis) + [v]) == self.dim

    def contains(self, other: "RationalSubspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            return False
        return all(self.contains_vector(v) for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, RationalSubspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._canon == other._canon

    def __hash__(self):
        return hash((self.ambient_dim, self._canon))

    def __repr__(self):
        rows = ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in self._canon)
        return f"RationalSubspace({self.ambient_dim}, [{rows}])"


def unit(k: int, n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1 if i == k else 0) for i in range(1, n + 1))


@dataclass(frozen=True)
class FlagPoint:
    dims: tuple[int, ...]
    subspaces: tuple[RationalSubspace, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "subspaces", tuple(self.subspaces))

    @property
    def ambient_dim(self) -> int:
        return self.subspaces[0].ambient_dim if self.subspaces else 0

    def __getitem__(self, dim: int) -> RationalSubspace:
        return self.subspaces[self.dims.index(dim)]

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient_dim,
            "dims": list(self.dims),
            "subspaces": [[[_frac_text(x) for x in v] for v in s._canon] for s in self.subspaces],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FlagPoint":
        n = int(data["ambient"])
        subs = [RationalSubspace(n, [[Fraction(x) for x in v] for v in s]) for s in data["subspaces"]]
        return cls(tuple(data["dims"]), tuple(subs))


def _frac_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def validate_flag(pt: FlagPoint) -> bool:
    """Dimensions strictly increase, match the subspaces, and each subspace contains the previous."""
    if len(pt.dims) != len(pt.subspaces) or not pt.subspaces:
        return False
    n = pt.ambient_dim
    if any(s.ambient_dim != n for s in pt.subspaces):
        return False
    if any(a >= b for a, b in zip(pt.dims, pt.dims[1:])) or pt.dims[0] < 0 or pt.dims[-1] > n:
        return False
    if any(d != s.dim for d, s in zip(pt.dims, pt.subspaces)):
        return False
    return all(big.contains(small) for small, big in zip(pt.subspaces, pt.subspaces[1:]))


class SymplecticForm:
    """Nondegenerate alternating bilinear form ``omega(u, v) = u^T M v`` on ``Q^4``."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Sequence[Sequence]):
        m = [_vec(row) for row in matrix]
        if len(m) != 4 or any(len(r) != 4 for r in m):
            raise GeometryError("a symplectic form on V needs a 4x4 matrix")
        if any(m[i][j] != -m[j][i] for i in range(4) for j in range(4)):
            raise GeometryError("matrix is not antisymmetric")
        if determinant(m) == 0:
            raise GeometryError("form is degenerate")
        self.matrix = tuple(m)

    @classmethod
    def standard(cls) -> "SymplecticForm":
        """``omega(e1, e3) = omega(e2, e4) = 1``."""
        m = [[0] * 4 for _ in range(4)]
        m[0][2], m[2][0] = 1, -1
        m[1][3], m[3][1] = 1, -1
        return cls(m)

    def __call__(self, u, v) -> Fraction:
        u, v = _vec(u), _vec(v)
        return sum(u[i] * self.matrix[i][j] * v[j] for i in range(4) for j in range(4))

    def covector(self, u) -> list[Fraction]:
        """The row ``u^T M`` (so ``omega(u, v) = row . v``)."""
        u = _vec(u)
        return [sum(u[i] * self.matrix[i][j] for i in range(4)) for j in range(4)]


def symplectic_perp(L: RationalSubspace, omega: SymplecticForm | None = None) -> RationalSubspace:
    if not isinstance(omega, SymplecticForm) and omega is not None:
        omega = SymplecticForm(omega)
    omega = omega or SymplecticForm.standard()
    if L.ambient_dim != 4 or L.dim != 1:
        raise GeometryError("symplectic_perp expects a line in a 4-dimensional space")
    return RationalSubspace(4, nullspace([omega.covector(L.basis[0])], 4))


def p3_to_g134(L: RationalSubspace, omega: SymplecticForm | None = None) -> FlagPoint:
    """``L -> (L, L^perp, V)``."""
    perp = symplectic_perp(L, omega)
    return FlagPoint((1, 3, 4), (L, perp, RationalSubspace.coordinate(4, 4)))


def coordinate_flag(dims: Sequence[int], n: int) -> FlagPoint:
    dims = tuple(dims)
    return FlagPoint(dims, tuple(RationalSubspace.coordinate(d, n) for d in dims))


def fixed_dims(n: int, j: int) -> tuple[int, ...]:
    """Dimensions of the fixed partial flag: all but ``j-1, j, j+1`` (and ``0``)."""
    return tuple(d for d in range(1, n + 1) if d not in (j - 1, j, j + 1))


def embed_fiber(pt: FlagPoint, n: int, j: int, fixed: FlagPoint | None = None) -> FlagPoint:
    """Lift a ``(1,3,4)`` flag through ``L_{j+2}/L_{j-2}`` to a flag of every dimension but ``j``."""
    if not 2 <= j <= n - 2:
        raise GeometryError(f"j must lie in 2..{n - 2}")
    if pt.dims != (1, 3, 4) or pt.ambient_dim != 4 or not validate_flag(pt):
        raise GeometryError("expected a valid flag of type (1,3,4) in Q^4")
    want = fixed_dims(n, j)
    if fixed is None:
        fixed = coordinate_flag(want, n)
    if fixed.dims != want or fixed.ambient_dim != n or not validate_flag(fixed):
        raise GeometryError(f"fixed flag must be a valid flag of dimensions {want} in Q^{n}")
    low = fixed[j - 2].basis if j - 2 >= 1 else ()
    high = fixed[j + 2]
    # complement of L_{j-2} inside L_{j+2}, picked greedily from a basis of L_{j+2}
    frame = list(low)
    comp = []
    for v in canonical_basis(list(high.basis)):
        if rank(frame + [v]) > len(frame):
            frame.append(tuple(v))
            comp.append(tuple(v))
    if len(comp) != 4:
        raise GeometryError("dim L_{j+2} - dim L_{j-2} must be 4")

    def lift(sub: RationalSubspace) -> RationalSubspace:
        vecs = list(low)
        for coords in sub.basis:
            vecs.append(tuple(sum(c * w[i] for c, w in zip(coords, comp)) for i in range(n)))
        return RationalSubspace.span(n, vecs)

    new = {j - 1: lift(pt[1]), j + 1: lift(pt[3])}
    dims = tuple(sorted(set(want) | set(new)))
    subs = tuple(new[d] if d in new else fixed[d] for d in dims)
    return FlagPoint(dims, subs)


def random_line(rng: random.Random) -> RationalSubspace:
    while True:
        v = [rng.randint(-COORD_RANGE, COORD_RANGE) for _ in range(4)]
        if any(v):
            return RationalSubspace(4, [v])


def sample_lines(count: int, seed: int = DEFAULT_SEED) -> list[RationalSubspace]:
    rng = random.Random(seed)
    return [random_line(rng) for _ in range(count)]


def nonconstancy_witness(fn: Callable[[RationalSubspace], FlagPoint], samples: Sequence[RationalSubspace]):
    """First pair of samples with different images, or None if constant over the sample."""
    if len(samples) < 2:
        raise GeometryError("need at least two samples")
    images = [fn(s) for s in samples]
    for i in range(len(samples)):
        for k in range(i + 1, len(samples)):
            if images[i] != images[k]:
                return samples[i], samples[k]
    return None


def pencil_divisor_degrees(p, q, omega: SymplecticForm | None = None) -> tuple[int, int]:
    """Intersection numbers of the line ``{s p + t q}`` in ``P^3`` with the two Schubert divisors.

    The divisors of ``G(1,3,4)`` are ``{L in M_3}`` and ``{M_1 in L^perp}``.
    Along the pencil each is cut out by a binary form in ``(s, t)``; its
    degree counts the intersection points with multiplicity.
    """
    omega = omega or SymplecticForm.standard()
    p, q = _vec(p), _vec(q)
    if rank([p, q]) != 2:
        raise GeometryError("p and q must span a line of P^3")
    s, t = Polynomial.variable(1), Polynomial.variable(2)
    point = [s * p[i] + t * q[i] for i in range(4)]
    first = point[3]  # L inside M_3 = {x4 = 0}
    row = omega.covector(unit(1, 4))
    second = Polynomial()
    for i in range(4):
        second = second - point[i] * row[i]  # omega(point, e1) = -omega(e1, point)
    degrees = []
    for form in (first, second):
        if form.is_zero():
            raise GeometryError("the pencil lies inside a divisor; choose another line")
        degrees.append(form.degree())
    return tuple(degrees)
