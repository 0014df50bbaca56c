"""Build the optional compiled polynomial kernel.

    pip install -e . --no-build-isolation     # or: python3 setup.py build_ext --inplace

Without Cython (or a C compiler) the package installs without the extension
and falls back to the pure-Python kernel at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        ["src/flagcalc/polyring/_ckernel.pyx"],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
