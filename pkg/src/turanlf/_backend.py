"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``TURANLF_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("TURANLF_PURE_PYTHON") == "1":
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:  # extension not built
        from . import _pykernels as kernels

BACKEND: str = kernels.NAME
