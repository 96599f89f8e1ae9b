"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise, or when
``INDPOLY_PURE_PYTHON`` is set to a non-empty value, the pure-Python
implementation is used.  Both expose the same functions.
"""
from __future__ import annotations

import os

from . import _kernels_py as python_backend

compiled_backend = None
try:
    from . import _ckernels as compiled_backend  # type: ignore[no-redef]
except ImportError:  # extension not built
    pass

if compiled_backend is not None and not os.environ.get("INDPOLY_PURE_PYTHON"):
    active = compiled_backend
    BACKEND = "cython"
else:
    active = python_backend
    BACKEND = "python"

canonical_code = active.canonical_code
stable_set_counts = active.stable_set_counts


def available_backends() -> dict:
    out = {"python": python_backend}
    if compiled_backend is not None:
        out["cython"] = compiled_backend
    return out
