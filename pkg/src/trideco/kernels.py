"""Selects the linear-algebra kernel backend at import time.

The compiled extension is preferred when present; set ``TRIDECO_PURE_PYTHON=1``
to force the pure-Python kernels (used by the benchmark and the backend
equivalence tests).
"""

import os

from . import _kernels_py

if os.environ.get("TRIDECO_PURE_PYTHON") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
vec_mul = _impl.vec_mul
row_eliminate = _impl.row_eliminate
mat_mul = _impl.mat_mul


def backends():
    """All available kernel implementations, keyed by name."""
    out = {_kernels_py.BACKEND: _kernels_py}
    try:
        from . import _speedups

        out[_speedups.BACKEND] = _speedups
    except ImportError:
        pass
    return out
