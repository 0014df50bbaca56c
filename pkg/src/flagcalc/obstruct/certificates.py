"""Nonexistence certificates: case trees whose leaves are exact identities.

A leaf asserts the polynomial identity

    sum mu_g * g  +  sum lambda_e * e  +  p * sum s_k * q_k^2  ==  0

where the ``g`` are effectivity constraints (``g >= 0``, ``mu_g >= 0``
rational), the ``e`` are equalities (consistency equations or variables
assumed zero on the path, ``lambda_e`` arbitrary polynomials), ``p`` is a
product of variables assumed positive on the path and ``s_k > 0``.  Every
summand is then nonnegative on the feasible set, hence zero, so each
``q_k`` vanishes.  The ``q_k`` must be linear and, together with the
variables assumed zero, force every divisor variable to ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..linalg import rank
from ..polyring import Polynomial, parse_polynomial
from .system import PullbackSystem

FORMAT_VERSION = 1


class CertificateError(ValueError):
    """The certificate is malformed (as opposed to: its identity is false)."""


@dataclass(frozen=True)
class Leaf:
    nonneg: tuple[tuple[str, Fraction], ...] = ()
    equalities: tuple[tuple[str, Polynomial], ...] = ()
    positive: tuple[str, ...] = ()
    squares: tuple[tuple[Fraction, Polynomial], ...] = ()


@dataclass(frozen=True)
class Branch:
    var: str
    zero: "Node"
    positive: "Node"


Node = Union[Leaf, Branch]


@dataclass(frozen=True)
class Certificate:
    family: str
    target: str
    m: int
    index: tuple[tuple[str, int], ...]
    root: Node

    def leaves(self):
        """Yield ``(assumed_zero, assumed_positive, leaf)`` for every leaf."""
        stack = [(self.root, (), ())]
        while stack:
            node, zeros, pos = stack.pop()
            if isinstance(node, Leaf):
                yield zeros, pos, node
            else:
                stack.append((node.positive, zeros, pos + (node.var,)))
                stack.append((node.zero, zeros + (node.var,), pos))

    # serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        names = {i: v for v, i in self.index}

        def text(p):
            return p.to_text(names=names)

        def enc(node):
            if isinstance(node, Leaf):
                return {
                    "leaf": {
                        "nonneg": {k: str(v) for k, v in node.nonneg},
                        "equalities": {k: text(p) for k, p in node.equalities},
                        "positive": list(node.positive),
                        "squares": [[str(s), text(q)] for s, q in node.squares],
                    }
                }
            return {"branch": node.var, "zero": enc(node.zero), "positive": enc(node.positive)}

        return {
            "format_version": FORMAT_VERSION,
            "family": self.family,
            "target": self.target,
            "m": self.m,
            "vars": dict(self.index),
            "tree": enc(self.root),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        try:
            if data.get("format_version") != FORMAT_VERSION:
                raise CertificateError(f"unsupported certificate format {data.get('format_version')!r}")
            index = {str(k): int(v) for k, v in data["vars"].items()}

            def poly(s):
                return parse_polynomial(s, var=None, names=index)

            def dec(node):
                if "leaf" in node:
                    lf = node["leaf"]
                    return Leaf(
                        nonneg=tuple((k, Fraction(v)) for k, v in lf.get("nonneg", {}).items()),
                        equalities=tuple((k, poly(v)) for k, v in lf.get("equalities", {}).items()),
                        positive=tuple(lf.get("positive", ())),
                        squares=tuple((Fraction(s), poly(q)) for s, q in lf.get("squares", ())),
                    )
                if "branch" in node:
                    if "zero" not in node or "positive" not in node:
                        raise CertificateError(f"branch on {node['branch']} does not cover both cases")
                    return Branch(node["branch"], dec(node["zero"]), dec(node["positive"]))
                raise CertificateError("node is neither a leaf nor a branch")

            return cls(data["family"], data["target"], int(data["m"]), tuple(sorted(index.items())), dec(data["tree"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, CertificateError):
                raise
            raise CertificateError(f"malformed certificate: {exc}") from None


def leaf_sum(sys: PullbackSystem, zeros, pos, leaf: Leaf) -> Polynomial:
    """The left-hand side of a leaf identity (validates every reference)."""
    total = Polynomial()
    for key, mu in leaf.nonneg:
        mu = Fraction(mu)
        if mu < 0:
            raise CertificateError(f"negative multiplier {mu} on {key}")
        if key not in sys.effectivity:
            raise CertificateError(f"unknown effectivity constraint {key!r}")
        total = total + sys.effectivity[key] * mu
    for key, lam in leaf.equalities:
        if key.startswith("zero:"):
            v = key[5:]
            if v not in zeros:
                raise CertificateError(f"{v} is not assumed zero on this path")
            e = sys.var(v)
        else:
            try:
                e = sys.constraint(key)
            except (KeyError, ValueError):
                raise CertificateError(f"unknown equality {key!r}") from None
            if not key.startswith("eq:"):
                raise CertificateError(f"{key!r} is not an equality")
        total = total + lam * e
    p = Polynomial(1)
    for v in leaf.positive:
        if v not in pos:
            raise CertificateError(f"{v} is not assumed positive on this path")
        p = p * sys.var(v)
    sos = Polynomial()
    for s, q in leaf.squares:
        s = Fraction(s)
        if s <= 0:
            raise CertificateError(f"square weight {s} is not positive")
        sos = sos + q * q * s
    return total + p * sos


def _forces_zero(sys: PullbackSystem, zeros, leaf: Leaf) -> bool:
    cols = sorted(sys.index.values())
    pos_of = {c: i for i, c in enumerate(cols)}
    rows = []
    for _, q in leaf.squares:
        if q.is_zero():
            continue
        if q.degree() == 0:
            return True  # a nonzero constant square: the leaf is infeasible
        if q.degree() != 1 or q.constant_term():
            return False
        row = [Fraction(0)] * len(cols)
        for exps, c in q.terms().items():
            k = next(i for i, e in enumerate(exps, start=1) if e)
            row[pos_of[k]] = Fraction(c)
        rows.append(row)
    for v in zeros:
        row = [Fraction(0)] * len(cols)
        row[pos_of[sys.index[v]]] = Fraction(1)
        rows.append(row)
    base = rank(rows) if rows else 0
    for v in sys.divisor_vars:
        unit = [Fraction(0)] * len(cols)
        unit[pos_of[sys.index[v]]] = Fraction(1)
        if rank(rows + [unit]) != base:
            return False
    return True


def _check_tree(sys: PullbackSystem, node, seen=()):
    if isinstance(node, Leaf):
        return
    if not isinstance(node, Branch):
        raise CertificateError(f"unexpected node {node!r}")
    if node.var not in sys.index:
        raise CertificateError(f"branch on unknown variable {node.var!r}")
    if node.var in seen:
        raise CertificateError(f"{node.var} branched twice on one path")
    if node.zero is None or node.positive is None:
        raise CertificateError(f"branch on {node.var} does not cover both cases")
    _check_tree(sys, node.zero, seen + (node.var,))
    _check_tree(sys, node.positive, seen + (node.var,))


def verify_certificate(sys: PullbackSystem, cert: Certificate) -> bool:
    """True iff every leaf identity holds exactly and forces all divisor variables to zero.

    Raises :class:`CertificateError` for structural defects.
    """
    if cert.target != sys.target.spec() or cert.m != sys.m:
        raise CertificateError(f"certificate is for {cert.target} m={cert.m}, system is {sys.target.spec()} m={sys.m}")
    if dict(cert.index) != sys.index:
        raise CertificateError("certificate variables do not match the system")
    _check_tree(sys, cert.root)
    ok = True
    for zeros, pos, leaf in cert.leaves():
        if not leaf_sum(sys, zeros, pos, leaf).is_zero():
            ok = False
        elif not _forces_zero(sys, zeros, leaf):
            ok = False
    return ok
