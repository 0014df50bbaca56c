"""Type-A flag spaces ``SL(n)/P_J``.

``J`` always lists the simple reflections *inside* the Levi factor of
``P_J``.  So ``J = ()`` is the full flag variety ``G/B``, ``J = S - {k}`` is
the Grassmannian ``Gr(k, n)``, and the minimal parabolic ``P_{alpha_j}`` has
``J = (j,)``: ``G/P_{alpha_j}`` is the variety of flags with every dimension
except ``j``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from ..weyl import ParabolicSet, Permutation, PermutationError, longest_in_parabolic, minimal_coset_reps
from ..polyring import DomainError


@dataclass(frozen=True)
class FlagSpace:
    n: int
    J: tuple[int, ...] = ()

    def __post_init__(self):
        try:
            p = ParabolicSet(self.n, tuple(self.J))
        except PermutationError as exc:
            raise DomainError(str(exc)) from None
        object.__setattr__(self, "J", p.J)

    # constructors ----------------------------------------------------------

    @classmethod
    def full_flag(cls, n: int) -> "FlagSpace":
        return cls(n, ())

    @classmethod
    def grassmannian(cls, k: int, n: int) -> "FlagSpace":
        if not 1 <= k <= n - 1:
            raise DomainError(f"Gr({k},{n}) needs 1 <= k <= n-1")
        return cls(n, tuple(i for i in range(1, n) if i != k))

    @classmethod
    def minimal(cls, j: int, n: int) -> "FlagSpace":
        """``G/P_{alpha_j}``: the minimal parabolic containing ``s_j``."""
        if not 1 <= j <= n - 1:
            raise DomainError(f"alpha_{j} is not a simple root of SL({n})")
        return cls(n, (j,))

    @classmethod
    def partial(cls, dims, n: int) -> "FlagSpace":
        """Flags ``L_{i1} < ... < L_{ik}`` with the given dimensions (``n`` optional)."""
        dims = sorted(set(d for d in dims if d != n))
        if any(not 1 <= d <= n - 1 for d in dims):
            raise DomainError(f"dimensions must lie in 1..{n - 1}")
        return cls(n, tuple(i for i in range(1, n) if i not in dims))

    # structure -------------------------------------------------------------

    @property
    def parabolic(self) -> ParabolicSet:
        return ParabolicSet(self.n, self.J)

    @property
    def simple_roots(self) -> tuple[int, ...]:
        return tuple(range(1, self.n))

    @cached_property
    def divisors(self) -> tuple[int, ...]:
        """Indices ``r`` of the Schubert divisors ``sigma_{s_r}`` (``r`` not in ``J``)."""
        return tuple(r for r in range(1, self.n) if r not in self.J)

    @property
    def dimension_vector(self) -> tuple[int, ...]:
        return self.divisors + (self.n,)

    @cached_property
    def dimension(self) -> int:
        return self.n * (self.n - 1) // 2 - longest_in_parabolic(self.parabolic).length

    @property
    def picard_rank(self) -> int:
        return self.n - 1 - len(self.J)

    def is_full_flag(self) -> bool:
        return not self.J

    def contains(self, w: Permutation) -> bool:
        """Whether ``w`` indexes a Schubert class here (``w`` in ``W^J`` within ``S_n``)."""
        return w.in_sn(self.n) and all(w(j) < w(j + 1) for j in self.J)

    def coset_reps(self, max_length: int | None = None) -> list[Permutation]:
        return minimal_coset_reps(self.parabolic, max_length)

    def describe(self) -> str:
        if not self.J:
            return f"G/B (n={self.n})"
        if len(self.divisors) == 1:
            return f"Gr({self.divisors[0]},{self.n})"
        if len(self.J) == 1:
            return f"G/P_alpha{self.J[0]} (n={self.n})"
        return "G(" + ",".join(map(str, self.dimension_vector)) + ")"

    def spec(self) -> str:
        """Round-trippable text form accepted by :func:`parse_space`."""
        if not self.J:
            return f"full-flag:{self.n}"
        if len(self.divisors) == 1:
            return f"gr:{self.divisors[0]},{self.n}"
        if len(self.J) == 1:
            return f"minimal:{self.J[0]},{self.n}"
        return "levi:{" + ",".join(map(str, self.J)) + "}," + str(self.n)

    @property
    def key(self) -> str:
        return f"n{self.n}-J" + ("_".join(map(str, self.J)) or "none")


_LEVI = re.compile(r"^levi:\{([\d,\s]*)\}(?:,(\d+))?$")


def parse_space(text: str, n: int | None = None) -> FlagSpace:
    """Parse ``full-flag``, ``gr:K,N``, ``minimal:J,N`` or ``levi:{j1,...},N``.

    A missing ``N`` is taken from ``n``; a conflicting one is an error.
    """
    text = text.strip()

    def pick(found):
        if found is None:
            if n is None:
                raise DomainError(f"space {text!r} needs an explicit n")
            return n
        found = int(found)
        if n is not None and found != n:
            raise DomainError(f"space {text!r} conflicts with n={n}")
        return found

    if text in ("full-flag", "G/B") or text.startswith("full-flag:"):
        _, _, tail = text.partition(":")
        return FlagSpace.full_flag(pick(tail or None))
    m = _LEVI.match(text)
    if m:
        J = tuple(int(t) for t in m.group(1).replace(" ", "").split(",") if t)
        return FlagSpace(pick(m.group(2)), J)
    kind, _, args = text.partition(":")
    parts = [p for p in args.replace(" ", "").split(",") if p]
    if kind in ("gr", "minimal") and parts and 1 <= len(parts) <= 2:
        try:
            idx = int(parts[0])
            size = pick(parts[1] if len(parts) == 2 else None)
        except ValueError:
            raise DomainError(f"malformed space {text!r}") from None
        return FlagSpace.grassmannian(idx, size) if kind == "gr" else FlagSpace.minimal(idx, size)
    raise DomainError(f"unknown space syntax {text!r}")
