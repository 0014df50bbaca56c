"""Backend selection for the packed-polynomial kernels.

The compiled ``_ckernel`` extension is used when it imports; setting
``FLAGCALC_PURE_PYTHON=1`` forces the pure-Python fallback.  Both backends
expose the same functions with identical results.
"""

import os

from . import _pykernel

BITS = _pykernel.BITS
MASK = _pykernel.MASK
MAX_EXPONENT = _pykernel.MAX_EXPONENT

_impl = _pykernel
BACKEND = "python"

if not os.environ.get("FLAGCALC_PURE_PYTHON"):
    try:
        from . import _ckernel as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernel

mul = _impl.mul
add_scaled = _impl.add_scaled
divdiff = _impl.divdiff
peel = _impl.peel
exponents = _pykernel.exponents
pack = _pykernel.pack
degree = _pykernel.degree

__all__ = [
    "BACKEND", "BITS", "MASK", "MAX_EXPONENT",
    "mul", "add_scaled", "divdiff", "peel", "exponents", "pack", "degree",
]
