"""Backend selection for the hot code-map kernel.

Prefers the compiled Cython extension; falls back to the pure-numpy
implementation when the extension is missing or when the environment
variable ``ROCKTEX_FORCE_NUMPY`` is set (useful for benchmarking and for
the backend-equality tests).  Both backends take float64 C-contiguous
planes and produce identical int32 code maps.
"""

import os

import numpy as np

from . import _codemap_np

if os.environ.get("ROCKTEX_FORCE_NUMPY"):
    _impl = _codemap_np
    BACKEND = "numpy"
else:
    try:
        from . import _codemap_cy as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _codemap_np
        BACKEND = "numpy"


def code_map(neighbor, center, off_y, off_x, margin):
    neighbor = np.ascontiguousarray(neighbor, dtype=np.float64)
    center = np.ascontiguousarray(center, dtype=np.float64)
    off_y = np.ascontiguousarray(off_y, dtype=np.float64)
    off_x = np.ascontiguousarray(off_x, dtype=np.float64)
    return _impl.code_map(neighbor, center, off_y, off_x, margin)
