"""Divided differences, Schubert polynomials and the coinvariant normal form."""

from __future__ import annotations

import threading
from typing import Iterable, Iterator, Mapping

from ..weyl import Permutation
from . import kernel
from .polynomial import IntPolynomial, Polynomial


class DomainError(ValueError):
    """Arguments outside the mathematical domain of an operation."""


def divided_difference(i: int, f: Polynomial) -> Polynomial:
    """``(f - s_i f) / (x_i - x_{i+1})``."""
    if i < 1:
        raise DomainError("divided differences are indexed from 1")
    return f._result(f, kernel.divdiff(f.packed, i))


def divided_difference_word(word: Iterable[int], f: Polynomial) -> Polynomial:
    """Apply ``d_{i1} d_{i2} ... d_{ik}`` (rightmost operator first)."""
    for i in reversed(list(word)):
        f = divided_difference(i, f)
    return f


class _SchubertTable:
    """Memo of Schubert polynomials keyed by trimmed Lehmer code.

    Entries are built by divided differences down from a dominant monomial;
    concurrent inserts of the same key store equal values, so the table
    behaves as a single map.
    """

    def __init__(self):
        self._by_code: dict[tuple[int, ...], dict] = {}
        self._lock = threading.Lock()

    def packed(self, code: tuple[int, ...]) -> dict:
        hit = self._by_code.get(code)
        if hit is not None:
            return hit
        chain = []
        c = code
        while c not in self._by_code:
            i = next((k for k in range(len(c) - 1) if c[k] < c[k + 1]), None)
            if i is None:
                with self._lock:
                    self._by_code.setdefault(c, {kernel.pack(c): 1})
                break
            chain.append((c, i + 1))
            lst = list(c)
            lst[i], lst[i + 1] = c[i + 1] + 1, c[i]
            c = _trim(lst)
        poly = self._by_code[c]
        for c, i in reversed(chain):
            poly = kernel.divdiff(poly, i)
            with self._lock:
                poly = self._by_code.setdefault(c, poly)
        return poly

    def __len__(self):
        return len(self._by_code)

    def clear(self):
        with self._lock:
            self._by_code.clear()


def _trim(seq) -> tuple[int, ...]:
    end = len(seq)
    while end and seq[end - 1] == 0:
        end -= 1
    return tuple(seq[:end])


_TABLE = _SchubertTable()


def schubert_polynomial(w: Permutation) -> IntPolynomial:
    """The Schubert polynomial ``S_w`` (memoized).

    Uses ``S_w = d_i S_{w s_i}`` whenever ``w(i) < w(i+1)``, stopping at a
    dominant permutation whose Schubert polynomial is the monomial
    ``x^code``.  For ``w0`` that monomial is the staircase.
    """
    if not isinstance(w, Permutation):
        w = Permutation(w)
    return IntPolynomial._from_packed(_TABLE.packed(_trim(w.code)))


def schubert_from_staircase(w: Permutation, n: int | None = None, word: Iterable[int] | None = None) -> IntPolynomial:
    """``S_w`` computed literally as ``d_{w^-1 w0} x1^{n-1} x2^{n-2} ... x_{n-1}``.

    ``word`` may be any reduced word for ``w^-1 w0``; the result does not
    depend on which one.  Exponential in ``n``; meant for cross-checks.
    """
    n = max(n or 0, w.support_size, 1)
    w = w.extended(n)
    stair = IntPolynomial.monomial([n - 1 - k for k in range(n)])
    if word is None:
        word = (w.inverse() * Permutation.longest(n)).reduced_word()
    return divided_difference_word(word, stair)


def symmetric_generator(kind: str, k: int, n: int) -> IntPolynomial:
    """``p_k(x1..xn)`` (``kind="power_sum"``) or ``e_k(x1..xn)`` (``"elementary"``)."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    if kind == "power_sum":
        return IntPolynomial({(0,) * (i - 1) + (k,): 1 for i in range(1, n + 1)})
    if kind == "elementary":
        from itertools import combinations

        terms = {}
        for subset in combinations(range(n), k):
            exps = [0] * n
            for s in subset:
                exps[s] = 1
            terms[tuple(exps)] = 1
        return IntPolynomial(terms)
    raise DomainError(f"unknown symmetric generator kind {kind!r}")


class SchubertExpansion(Mapping):
    """Finite combination ``sum coeffs[w] * S_w`` (zero coefficients dropped)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[Permutation, object] | None = None):
        c = {}
        for w, v in (coeffs or {}).items():
            if not isinstance(w, Permutation):
                w = Permutation(w)
            if v:
                c[w] = c.get(w, 0) + v
        self._c = {w: v for w, v in c.items() if v}

    def __getitem__(self, w):
        if not isinstance(w, Permutation):
            w = Permutation(w)
        return self._c[w]

    def __iter__(self) -> Iterator[Permutation]:
        return iter(sorted(self._c, key=lambda w: w.sort_key()))

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, SchubertExpansion):
            return self._c == other._c
        if isinstance(other, Mapping):
            return self == SchubertExpansion(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def recombine(self) -> Polynomial:
        acc: dict = {}
        for w, v in self._c.items():
            kernel.add_scaled(acc, schubert_polynomial(w).packed, v)
        poly = Polynomial._from_packed(acc)
        return IntPolynomial._from_packed(acc) if poly.is_integral() else poly

    def degree_parts(self) -> dict[int, "SchubertExpansion"]:
        parts: dict[int, dict] = {}
        for w, v in self._c.items():
            parts.setdefault(w.length, {})[w] = v
        return {d: SchubertExpansion(p) for d, p in sorted(parts.items())}

    def __repr__(self):
        inner = ", ".join(f"{w}: {self._c[w]}" for w in self)
        return "{" + inner + "}"


def _lookup(m: int) -> dict:
    return _TABLE.packed(kernel.exponents(m))


def _leading_to_perm(m: int) -> Permutation:
    return Permutation.from_code(kernel.exponents(m)).trimmed()


def expand_packed(packed: dict) -> dict[int, object]:
    """Schubert coefficients keyed by packed leading monomial (``x^code``)."""
    return kernel.peel(packed, _lookup)


def expand_in_schubert_basis(f: Polynomial) -> SchubertExpansion:
    """Unique expansion ``f = sum c_w S_w`` over ``w`` in ``S_inf``.

    Peels off the reverse-lex leading monomial ``x^a`` with the Schubert
    polynomial of code ``a``.
    """
    return SchubertExpansion({_leading_to_perm(m): c for m, c in expand_packed(f.packed).items()})


def coinvariant_normal_form(f: Polynomial, n: int) -> SchubertExpansion:
    """Class of ``f`` in ``Z[x1..xn] / (symmetric polynomials of positive degree)``.

    The Schubert expansion of ``f`` with every ``w`` outside ``S_n`` dropped;
    permutations are reported in ``S_n``.
    """
    if n < 1:
        raise DomainError("n must be positive")
    if f.nvars() > n:
        raise DomainError(f"polynomial involves x{f.nvars()} but n={n}")
    out = {}
    for m, c in expand_packed(f.packed).items():
        code = kernel.exponents(m)
        w = Permutation.from_code(code)
        if w.in_sn(n):
            out[w.extended(n)] = c
    return SchubertExpansion(out)


def clear_cache():
    _TABLE.clear()


def cache_size() -> int:
    return len(_TABLE)
