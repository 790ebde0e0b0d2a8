"""Picks the tableau kernel at import time.

The compiled kernel is used when it was built; set ``OCMEANING_PURE_PYTHON=1``
to force the pure-Python one.
"""
import os

from . import _kernel_py

if os.environ.get("OCMEANING_PURE_PYTHON"):
    _kernel_c = None
else:
    try:
        from . import _kernel_c
    except ImportError:
        _kernel_c = None

BACKENDS = {"python": _kernel_py.satisfiable}
if _kernel_c is not None:
    BACKENDS["cython"] = _kernel_c.satisfiable

BACKEND = "cython" if "cython" in BACKENDS else "python"
satisfiable = BACKENDS[BACKEND]
