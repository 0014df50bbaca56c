"""Symmetric-group combinatorics in one-line notation.

Permutations are elements of ``S_inf``: appending fixed points does not change
a permutation, so ``Permutation(2, 1)`` and ``Permutation(2, 1, 3)`` compare
equal and hash alike.  Everything here is immutable and side-effect free.

>>> w = Permutation(4, 3, 2, 1)
>>> length_and_code(w)
(6, [3, 2, 1, 0])
>>> minimal_coset_reps(ParabolicSet(3, (1,)))
[Permutation(1, 2, 3), Permutation(1, 3, 2), Permutation(2, 3, 1)]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence


class PermutationError(ValueError):
    """Malformed one-line notation or out-of-range combinatorial data."""


class Permutation:
    """A permutation in one-line notation ``(w(1), ..., w(n))``."""

    __slots__ = ("entries", "_trim", "_length", "_code")

    def __init__(self, *entries: int):
        if len(entries) == 1 and not isinstance(entries[0], int):
            entries = tuple(entries[0])
        entries = tuple(entries)
        if sorted(entries) != list(range(1, len(entries) + 1)) or not all(type(e) is int for e in entries):
            raise PermutationError(f"not a permutation of 1..{len(entries)}: {entries}")
        self.entries = entries
        end = len(entries)
        while end and entries[end - 1] == end:
            end -= 1
        self._trim = entries[:end]
        self._length = None
        self._code = None

    # basic protocol --------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, i: int) -> int:
        return self.entries[i - 1] if i <= len(self.entries) else i

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._trim == other._trim

    def __hash__(self):
        return hash(self._trim)

    def __repr__(self):
        return f"Permutation{self.entries!r}" if len(self.entries) != 1 else f"Permutation({self.entries[0]})"

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"

    def sort_key(self, n: int | None = None):
        """``(length, entries)`` with entries padded to a common size."""
        size = max(n or 0, len(self._trim))
        return (self.length, self.extended(size).entries)

    def __lt__(self, other: "Permutation"):
        size = max(len(self._trim), len(other._trim))
        return self.sort_key(size) < other.sort_key(size)

    # structure -------------------------------------------------------------

    @property
    def length(self) -> int:
        if self._length is None:
            self._length = sum(self.code)
        return self._length

    @property
    def code(self) -> tuple[int, ...]:
        """Lehmer code: ``code[i] = #{j > i : w(j) < w(i)}``."""
        if self._code is None:
            e = self.entries
            self._code = tuple(sum(1 for b in e[i + 1:] if b < a) for i, a in enumerate(e))
        return self._code

    def trimmed(self) -> "Permutation":
        return Permutation(self._trim) if len(self._trim) != len(self.entries) else self

    @property
    def support_size(self) -> int:
        """Smallest ``m`` with ``w`` in ``S_m``."""
        return len(self._trim)

    def in_sn(self, n: int) -> bool:
        return len(self._trim) <= n

    def extended(self, m: int) -> "Permutation":
        if m < len(self._trim):
            raise PermutationError(f"{self} does not lie in S_{m}")
        if m == len(self.entries):
            return self
        base = self._trim
        return Permutation(base + tuple(range(len(base) + 1, m + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.entries)
        for i, a in enumerate(self.entries, start=1):
            inv[a - 1] = i
        return Permutation(inv)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``(u * v)(i) = u(v(i))``."""
        if not isinstance(other, Permutation):
            return NotImplemented
        m = max(len(self.entries), len(other.entries))
        return Permutation(tuple(self(other(i)) for i in range(1, m + 1)))

    def descents(self) -> list[int]:
        e = self.entries
        return [i for i in range(1, len(e)) if e[i - 1] > e[i]]

    def swap_positions(self, a: int, b: int) -> "Permutation":
        """Right multiplication by the transposition ``t_ab``."""
        m = max(len(self.entries), a, b)
        e = list(self.extended(m).entries)
        e[a - 1], e[b - 1] = e[b - 1], e[a - 1]
        return Permutation(e)

    def reduced_word(self) -> list[int]:
        """A reduced word ``[i1, ..., ik]`` with ``w = s_i1 ... s_ik``.

        Computed on demand by bubbling out right descents.
        """
        e = list(self.entries)
        word = []
        while True:
            for i in range(len(e) - 1):
                if e[i] > e[i + 1]:
                    e[i], e[i + 1] = e[i + 1], e[i]
                    word.append(i + 1)
                    break
            else:
                break
        word.reverse()
        return word

    # constructors ----------------------------------------------------------

    @classmethod
    def identity(cls, n: int = 1) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, i: int, n: int | None = None) -> "Permutation":
        n = max(n or 0, i + 1)
        if i < 1:
            raise PermutationError("simple reflections are indexed from 1")
        e = list(range(1, n + 1))
        e[i - 1], e[i] = e[i], e[i - 1]
        return cls(e)

    @classmethod
    def from_code(cls, code: Sequence[int], n: int | None = None) -> "Permutation":
        """Decode a Lehmer code (any length; extends as needed)."""
        code = list(code)
        if any(c < 0 for c in code):
            raise PermutationError(f"negative code entry in {code}")
        size = max([len(code)] + [i + 1 + c for i, c in enumerate(code)] + [n or 0])
        avail = list(range(1, size + 1))
        out = []
        for c in code:
            out.append(avail.pop(c))
        out.extend(avail)
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``1,3,2``, ``(1,3,2)`` or ``132`` (single digits)."""
        body = text.strip().strip("()[]").strip()
        try:
            if "," in body or " " in body:
                items = [int(t) for t in body.replace(",", " ").split()]
            else:
                items = [int(ch) for ch in body]
        except ValueError as exc:
            raise PermutationError(f"malformed one-line notation {text!r}") from exc
        return cls(items)


def length_and_code(w: Permutation) -> tuple[int, list[int]]:
    if not isinstance(w, Permutation):
        w = Permutation(w)
    return w.length, list(w.code)


@dataclass(frozen=True)
class ParabolicSet:
    """The simple reflections ``J`` (subset of ``1..n-1``) generating ``W_J``."""

    n: int
    J: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise PermutationError(f"rank parameter must be positive, got {self.n}")
        J = tuple(sorted(set(self.J)))
        bad = [j for j in J if not 1 <= j <= self.n - 1]
        if bad:
            raise PermutationError(f"J must lie in 1..{self.n - 1}, got {bad}")
        object.__setattr__(self, "J", J)


def is_minimal_coset_rep(w: Permutation, J: Iterable[int]) -> bool:
    """``w(j) < w(j+1)`` for every ``j`` in ``J``."""
    return all(w(j) < w(j + 1) for j in J)


@lru_cache(maxsize=None)
def _all_perms(n: int) -> tuple[Permutation, ...]:
    perms = [Permutation(p) for p in permutations(range(1, n + 1))]
    perms.sort(key=lambda w: (w.length, w.entries))
    return tuple(perms)


def all_permutations(n: int) -> list[Permutation]:
    """All of ``S_n`` sorted by ``(length, lexicographic)``."""
    return list(_all_perms(n))


def _codes(n: int, J: frozenset[int], budget: int) -> Iterator[list[int]]:
    code = [0] * n

    def rec(i, left):
        if i == n:
            yield code
            return
        lo = code[i - 1] if i >= 1 and i in J else 0
        for c in range(lo, min(n - 1 - i, left) + 1):
            code[i] = c
            yield from rec(i + 1, left - c)
        code[i] = 0

    yield from rec(0, budget)


@lru_cache(maxsize=None)
def _coset_reps(n: int, J: tuple[int, ...], max_length: int | None) -> tuple[Permutation, ...]:
    if max_length is None and n <= 9:
        return tuple(w for w in _all_perms(n) if is_minimal_coset_rep(w, J))
    budget = n * (n - 1) // 2 if max_length is None else max_length
    # w(j) < w(j+1) exactly when code[j] <= code[j+1]
    out = [Permutation.from_code(c, n) for c in _codes(n, frozenset(J), budget)]
    out.sort(key=lambda w: (w.length, w.entries))
    return tuple(out)


def minimal_coset_reps(p: ParabolicSet, max_length: int | None = None) -> list[Permutation]:
    """``W^J`` sorted by ``(length, lexicographic)``, optionally length-bounded."""
    if max_length is not None and max_length < 0:
        raise PermutationError("max_length must be nonnegative")
    return list(_coset_reps(p.n, p.J, max_length))


def parabolic_subgroup(p: ParabolicSet) -> list[Permutation]:
    """Elements of ``W_J``: permutations preserving the blocks cut out by ``J``."""
    out = []
    for w in _all_perms(p.n):
        if all(j in p.J for j in range(1, p.n) if _crosses(w, j)):
            out.append(w)
    return out


def _crosses(w: Permutation, j: int) -> bool:
    # w maps {1..j} somewhere other than itself
    return set(w.entries[:j]) != set(range(1, j + 1))


def longest_in_parabolic(p: ParabolicSet) -> Permutation:
    """The longest element ``w0(J)`` of ``W_J`` (reverses each block)."""
    entries = list(range(1, p.n + 1))
    start = 0
    for i in range(1, p.n + 1):
        if i == p.n or i not in p.J:
            entries[start:i] = reversed(entries[start:i])
            start = i
    return Permutation(entries)


def grassmannian_permutation(partition: Sequence[int], k: int, n: int) -> Permutation:
    """The permutation with descent only at ``k`` indexing ``partition`` in ``Gr(k, n)``.

    Its code is ``(lam_k, ..., lam_1, 0, ..., 0)``, so its length is ``|lam|``.
    """
    lam = [p for p in partition if p]
    if not 1 <= k <= n - 1:
        raise PermutationError(f"k must lie in 1..{n - 1}, got {k}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise PermutationError(f"not a partition: {tuple(partition)}")
    if len(lam) > k or (lam and lam[0] > n - k):
        raise PermutationError(f"partition {tuple(partition)} is outside the {k}x{n - k} box")
    lam = lam + [0] * (k - len(lam))
    return Permutation.from_code(list(reversed(lam)), n)


def partition_of(w: Permutation, k: int) -> tuple[int, ...]:
    """Inverse of :func:`grassmannian_permutation` (``w`` must have no descent but ``k``)."""
    if any(d != k for d in w.descents()):
        raise PermutationError(f"{w} is not Grassmannian at {k}")
    code = list(w.code[:k]) + [0] * max(0, k - len(w.code))
    return tuple(c for c in reversed(code) if c)
