"""Build script: compiles the optional Cython kernel for exact row reduction.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so any
failure to cythonize or compile is downgraded to a warning.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/trideco/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    sys.stderr.write(f"warning: building without compiled kernels ({exc})\n")

setup(ext_modules=ext_modules)
