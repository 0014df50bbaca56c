"""Pure-Python reference kernels on packed polynomials.

A packed polynomial is a ``dict`` mapping a packed monomial to a nonzero
exact coefficient.  A packed monomial stores the exponent of ``x_i`` in bits
``[BITS*(i-1), BITS*i)``, so ``x1`` sits in the lowest byte.  With this layout
ordinary integer comparison of two packed monomials is the reverse
lexicographic term order (compare the exponent of the highest variable
first), which is the order whose leading monomial of a Schubert polynomial is
``x^code(w)``.

The compiled module ``_ckernel`` implements exactly the same functions; this
file is the fallback and the oracle it is benchmarked against.
"""

from heapq import heapify, heappop, heappush

BITS = 8
MASK = (1 << BITS) - 1
MAX_EXPONENT = MASK


def mul(f, g):
    """Product of two packed polynomials."""
    if len(f) < len(g):
        f, g = g, f
    out = {}
    get = out.get
    for mg, cg in g.items():
        for mf, cf in f.items():
            m = mf + mg
            v = get(m, 0) + cf * cg
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def add_scaled(acc, g, c):
    """In place ``acc += c * g``; returns ``acc``."""
    get = acc.get
    for m, cg in g.items():
        v = get(m, 0) + c * cg
        if v:
            acc[m] = v
        elif m in acc:
            del acc[m]
    return acc


def divdiff(f, i):
    """Divided difference ``(f - s_i f) / (x_i - x_{i+1})`` on packed form.

    Each monomial ``x_i^p x_{i+1}^q`` contributes a geometric sum, so the
    division is exact term by term.
    """
    si = BITS * (i - 1)
    sj = BITS * i
    ui = 1 << si
    uj = 1 << sj
    step = uj - ui
    out = {}
    get = out.get
    for m, c in f.items():
        p = (m >> si) & MASK
        q = (m >> sj) & MASK
        if p == q:
            continue
        if p > q:
            lo, d = q, p - q
        else:
            lo, d = p, q - p
            c = -c
        t = m - p * ui - q * uj + lo * (ui + uj) + (d - 1) * ui
        for _ in range(d):
            v = get(t, 0) + c
            if v:
                out[t] = v
            else:
                del out[t]
            t += step
    return out


def exponents(m):
    """Unpack a monomial into its exponent tuple (trailing zeros trimmed)."""
    out = []
    while m:
        out.append(m & MASK)
        m >>= BITS
    return tuple(out)


def pack(exps):
    m = 0
    for k, e in enumerate(exps):
        if e:
            m |= e << (BITS * k)
    return m


def degree(m):
    d = 0
    while m:
        d += m & MASK
        m >>= BITS
    return d


def peel(f, lookup):
    """Expand ``f`` greedily by leading monomials.

    ``lookup(m)`` must return a packed polynomial whose leading monomial is
    ``m`` with coefficient 1 and whose other monomials are all smaller.  The
    result maps each leading monomial used to its coefficient, so that
    ``f == sum(c * lookup(m))``.
    """
    work = dict(f)
    heap = [-m for m in work]
    heapify(heap)
    out = {}
    while heap:
        m = -heappop(heap)
        c = work.get(m)
        if c is None:
            continue
        out[m] = c
        for mm, sc in lookup(m).items():
            v = work.get(mm)
            if v is None:
                work[mm] = -c * sc
                heappush(heap, -mm)
            else:
                v -= c * sc
                if v:
                    work[mm] = v
                else:
                    del work[mm]
        if m in work:
            raise ArithmeticError("peel-off did not cancel the leading monomial")
    return out
