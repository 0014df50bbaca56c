"""Exact sparse multivariate polynomials in ``x1, x2, ...``.

Coefficients are Python integers or :class:`fractions.Fraction`; no floating
point is ever used.  :class:`IntPolynomial` is the integer-coefficient ring
``Z[x1, x2, ...]`` that houses Schubert polynomials; :class:`Polynomial`
additionally admits rational coefficients (needed for pullback systems).

Textual format (round-trips through :func:`parse_polynomial` /
:meth:`Polynomial.to_text`)::

    3*x1^2*x2 - x3 + 1/2*x4
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from . import kernel

Exponents = tuple[int, ...]


def _normalize_coeff(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _normalize_coeff(Fraction(c.numerator, c.denominator))
    raise TypeError(f"inexact or unsupported coefficient {c!r}")


def _trim(exps: Iterable[int]) -> Exponents:
    exps = tuple(exps)
    end = len(exps)
    while end and exps[end - 1] == 0:
        end -= 1
    return exps[:end]


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_p", "_deg", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], object] | int | Fraction | None = None):
        packed: dict[int, object] = {}
        if terms is None:
            pass
        elif isinstance(terms, Mapping):
            for exps, c in terms.items():
                exps = tuple(exps)
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if any(e > kernel.MAX_EXPONENT for e in exps):
                    raise OverflowError(f"exponent exceeds {kernel.MAX_EXPONENT}")
                c = _normalize_coeff(c)
                if c:
                    m = kernel.pack(exps)
                    v = packed.get(m, 0) + c
                    if v:
                        packed[m] = v
                    else:
                        packed.pop(m, None)
        else:
            c = _normalize_coeff(terms)
            if c:
                packed[0] = c
        self._check(packed)
        self._p = packed
        self._deg = None
        self._hash = None

    # construction helpers -------------------------------------------------

    def _check(self, packed):
        pass

    @classmethod
    def _from_packed(cls, packed: dict):
        obj = object.__new__(cls)
        obj._p = packed
        obj._deg = None
        obj._hash = None
        return obj

    @classmethod
    def variable(cls, i: int):
        if i < 1:
            raise ValueError("variables are indexed from 1")
        return cls._from_packed({1 << (kernel.BITS * (i - 1)): 1})

    @classmethod
    def constant(cls, c):
        return cls(c)

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff=1):
        return cls({tuple(exps): coeff})

    # inspection ------------------------------------------------------------

    @property
    def packed(self) -> dict:
        """The underlying packed form (read-only by convention)."""
        return self._p

    def terms(self) -> dict[Exponents, object]:
        return {kernel.exponents(m): c for m, c in self._p.items()}

    def coefficient(self, exps: Iterable[int]):
        return self._p.get(kernel.pack(_trim(exps)), 0)

    def __len__(self):
        return len(self._p)

    def __bool__(self):
        return bool(self._p)

    def is_zero(self) -> bool:
        return not self._p

    def degree(self) -> int:
        """Total (algebraic) degree; ``-1`` for the zero polynomial."""
        if self._deg is None:
            self._deg = max((kernel.degree(m) for m in self._p), default=-1)
        return self._deg

    def is_homogeneous(self) -> bool:
        return len({kernel.degree(m) for m in self._p}) <= 1

    def nvars(self) -> int:
        """Largest variable index that occurs (0 for constants)."""
        return max((len(kernel.exponents(m)) for m in self._p), default=0)

    def variables(self) -> set[int]:
        out = set()
        for m in self._p:
            for k, e in enumerate(kernel.exponents(m), start=1):
                if e:
                    out.add(k)
        return out

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._p.values())

    def leading_monomial(self) -> Exponents:
        """Leading exponent vector in reverse lexicographic order."""
        if not self._p:
            raise ValueError("zero polynomial has no leading monomial")
        return kernel.exponents(max(self._p))

    def constant_term(self):
        return self._p.get(0, 0)

    # arithmetic ------------------------------------------------------------

    def _result(self, other, packed):
        integral = all(isinstance(c, int) for c in packed.values())
        if not integral:
            packed = {m: _normalize_coeff(c) for m, c in packed.items()}
            integral = all(isinstance(c, int) for c in packed.values())
        if integral and isinstance(self, IntPolynomial) and isinstance(other, IntPolynomial):
            return IntPolynomial._from_packed(packed)
        return Polynomial._from_packed(packed)

    def __add__(self, other):
        other = self._coerce_scalar_aware(other)
        if other is None:
            return NotImplemented
        return self._result(other, kernel.add_scaled(dict(self._p), other._p, 1))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_scalar_aware(other)
        if other is None:
            return NotImplemented
        return self._result(other, kernel.add_scaled(dict(self._p), other._p, -1))

    def __rsub__(self, other):
        other = self._coerce_scalar_aware(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return type(self)._from_packed({m: -c for m, c in self._p.items()})

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.degree() + other.degree() > kernel.MAX_EXPONENT:
                raise OverflowError("product degree exceeds the packed exponent width")
            return self._result(other, kernel.mul(self._p, other._p))
        try:
            c = _normalize_coeff(other)
        except TypeError:
            return NotImplemented
        if not c:
            return type(self)()
        packed = {m: v * c for m, v in self._p.items()}
        if isinstance(self, IntPolynomial) and isinstance(c, int):
            return IntPolynomial._from_packed(packed)
        return Polynomial._from_packed({m: _normalize_coeff(v) for m, v in packed.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _normalize_coeff(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return self * _inverse(c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = type(self)(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def _coerce_scalar_aware(self, other):
        if isinstance(other, Polynomial):
            return other
        try:
            c = _normalize_coeff(other)
        except TypeError:
            return None
        cls = IntPolynomial if isinstance(c, int) else Polynomial
        return cls(c)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._p == other._p
        try:
            c = _normalize_coeff(other)
        except TypeError:
            return NotImplemented
        return self._p == ({0: c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._p.items()))
        return self._hash

    # evaluation ------------------------------------------------------------

    def evaluate(self, values):
        """Exact value at a point.

        ``values`` is a mapping from variable index to number, or a sequence
        whose ``k``-th entry (0-based) is the value of ``x_{k+1}``.  Missing
        variables are an error.
        """
        if not isinstance(values, Mapping):
            values = {k: v for k, v in enumerate(values, start=1)}
        total = 0
        for m, c in self._p.items():
            term = c
            for k, e in enumerate(kernel.exponents(m), start=1):
                if e:
                    term *= values[k] ** e
            total += term
        return _normalize_coeff(total) if isinstance(total, (int, Fraction)) else total

    def substitute(self, images: Mapping[int, "Polynomial"]) -> "Polynomial":
        """Replace ``x_k`` by ``images[k]`` (variables not listed are kept)."""
        result = Polynomial()
        powers: dict[tuple[int, int], Polynomial] = {}
        for m, c in self._p.items():
            term = Polynomial(c)
            for k, e in enumerate(kernel.exponents(m), start=1):
                if not e:
                    continue
                img = images.get(k)
                if img is None:
                    img = Polynomial.variable(k)
                key = (k, e)
                if key not in powers:
                    powers[key] = img ** e
                term = term * powers[key]
            result = result + term
        if all(isinstance(c, int) for c in result._p.values()):
            return IntPolynomial._from_packed(result._p)
        return result

    def swap_variables(self, i: int, j: int) -> "Polynomial":
        """The polynomial with ``x_i`` and ``x_j`` exchanged."""
        out = {}
        for m, c in self._p.items():
            exps = list(kernel.exponents(m))
            need = max(i, j)
            exps.extend([0] * (need - len(exps)))
            exps[i - 1], exps[j - 1] = exps[j - 1], exps[i - 1]
            out[kernel.pack(exps)] = c
        return type(self)._from_packed(out)

    def content_normalized(self) -> "IntPolynomial":
        """Primitive integer multiple with positive leading coefficient."""
        if not self._p:
            return IntPolynomial()
        from math import gcd, lcm

        den = 1
        for c in self._p.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        ints = {m: int(c * den) for m, c in self._p.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, c)
        lead = ints[max(ints)]
        if lead < 0:
            g = -g
        return IntPolynomial._from_packed({m: c // g for m, c in ints.items()})

    # text ------------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, object]]:
        """Terms in printing order: by total degree, then lexicographically, descending."""
        items = [(kernel.exponents(m), c) for m, c in self._p.items()]
        items.sort(key=lambda t: (sum(t[0]), t[0]), reverse=True)
        return items

    def to_text(self, var: str = "x", names: Mapping[int, str] | None = None) -> str:
        if not self._p:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            factors = []
            for k, e in enumerate(exps, start=1):
                if e:
                    name = names[k] if names and k in names else f"{var}{k}"
                    factors.append(name if e == 1 else f"{name}^{e}")
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if factors:
                body = "*".join(factors)
                if a != 1:
                    body = f"{a}*{body}"
            else:
                body = str(a)
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"{type(self).__name__}({self.to_text()!r})"


def _inverse(c):
    return Fraction(1, c) if isinstance(c, int) else 1 / c


class IntPolynomial(Polynomial):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    def _check(self, packed):
        for c in packed.values():
            if not isinstance(c, int):
                raise TypeError(f"IntPolynomial coefficient must be an integer, got {c!r}")


def x(i: int) -> IntPolynomial:
    """The variable ``x_i``."""
    return IntPolynomial.variable(i)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z_]+)(?P<idx>\d+)|(?P<op>[-+*^()]))")


class PolynomialSyntaxError(ValueError):
    pass


def parse_polynomial(text: str, var: str | None = "x", names: Mapping[str, int] | None = None) -> Polynomial:
    """Parse the ASCII polynomial format.

    Variables are ``<prefix><index>``; with ``var=None`` any alphabetic
    prefix is accepted.  ``names`` maps whole variable names to indices and
    takes precedence over the prefix rule.  Returns an
    :class:`IntPolynomial` when every coefficient is an integer.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", m.group("num")))
        elif m.group("var"):
            name = m.group("var") + m.group("idx")
            if names and name in names:
                tokens.append(("var", names[name]))
            elif var is None or m.group("var") == var:
                idx = int(m.group("idx"))
                if idx < 1:
                    raise PolynomialSyntaxError(f"variable index must be positive: {name}")
                tokens.append(("var", idx))
            else:
                raise PolynomialSyntaxError(f"unknown variable {name!r}")
        else:
            tokens.append(("op", m.group("op")))
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial")
    parser = _Parser(tokens)
    result = parser.expr()
    if parser.i != len(tokens):
        raise PolynomialSyntaxError(f"trailing input near token {parser.i}")
    if result.is_integral():
        return IntPolynomial._from_packed(result.packed)
    return result


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        total = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                total = total + t if val == "+" else total - t
            else:
                return total

    def term(self):
        value = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                value = value * self.factor()
            else:
                return value

    def factor(self):
        kind, val = self.take()
        if kind == "num":
            num, _, den = val.partition("/")
            base = Polynomial(Fraction(int(num), int(den)) if den else int(num))
        elif kind == "var":
            base = Polynomial.variable(val)
        elif kind == "op" and val == "(":
            base = self.expr()
            k2, v2 = self.take()
            if v2 != ")":
                raise PolynomialSyntaxError("missing closing parenthesis")
        elif kind == "op" and val == "-":
            return -self.factor()
        else:
            raise PolynomialSyntaxError(f"unexpected token {val!r}")
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k2, v2 = self.take()
            if k2 != "num" or "/" in v2:
                raise PolynomialSyntaxError("exponent must be a nonnegative integer")
            base = base ** int(v2)
        return base
