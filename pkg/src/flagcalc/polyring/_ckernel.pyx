# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the functions in ``_pykernel``.

Coefficients stay Python integers (or Fractions); only the loop machinery is
compiled.  Results are identical to the pure-Python kernels.
"""

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem, PyDict_DelItem
from cpython.ref cimport PyObject
from heapq import heapify, heappop, heappush

cdef enum:
    BITS = 8
    MASK = 255


cdef inline void _accumulate(dict out, object m, object c):
    cdef PyObject* old = PyDict_GetItem(out, m)
    if old is NULL:
        if c:
            PyDict_SetItem(out, m, c)
    else:
        v = <object>old + c
        if v:
            PyDict_SetItem(out, m, v)
        else:
            PyDict_DelItem(out, m)


def mul(dict f, dict g):
    cdef dict out = {}
    cdef list fm, fc
    cdef Py_ssize_t k, nf
    if len(f) < len(g):
        f, g = g, f
    fm = list(f.keys())
    fc = list(f.values())
    nf = len(fm)
    for mg, cg in g.items():
        for k in range(nf):
            _accumulate(out, fm[k] + mg, fc[k] * cg)
    return out


def add_scaled(dict acc, dict g, c):
    for m, cg in g.items():
        _accumulate(acc, m, c * cg)
    return acc


def divdiff(dict f, int i):
    cdef int si = BITS * (i - 1)
    cdef int sj = BITS * i
    cdef int p, q, lo, d, r
    cdef dict out = {}
    ui = (<object>1) << si
    uj = (<object>1) << sj
    step = uj - ui
    both = ui + uj
    for m, c in f.items():
        p = (m >> si) & MASK
        q = (m >> sj) & MASK
        if p == q:
            continue
        if p > q:
            lo = q
            d = p - q
        else:
            lo = p
            d = q - p
            c = -c
        t = m - p * ui - q * uj + lo * both + (d - 1) * ui
        for r in range(d):
            _accumulate(out, t, c)
            t = t + step
    return out


def peel(dict f, lookup):
    cdef dict work = dict(f)
    cdef dict out = {}
    cdef dict s
    cdef list heap = [-m for m in work]
    cdef PyObject* old
    heapify(heap)
    while heap:
        m = -heappop(heap)
        old = PyDict_GetItem(work, m)
        if old is NULL:
            continue
        c = <object>old
        out[m] = c
        s = lookup(m)
        for mm, sc in s.items():
            old = PyDict_GetItem(work, mm)
            if old is NULL:
                PyDict_SetItem(work, mm, -c * sc)
                heappush(heap, -mm)
            else:
                v = <object>old - c * sc
                if v:
                    PyDict_SetItem(work, mm, v)
                else:
                    PyDict_DelItem(work, mm)
        if m in work:
            raise ArithmeticError("peel-off did not cancel the leading monomial")
    return out
