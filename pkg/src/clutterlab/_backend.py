"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module.  Setting ``CLUTTERLAB_PURE_PYTHON=1`` forces the
fallback.
"""
import os

from . import _pykernels as python_kernels

compiled_kernels = None
if not os.environ.get("CLUTTERLAB_PURE_PYTHON"):
    try:
        from . import _kernels as compiled_kernels
    except ImportError:  # extension not built
        compiled_kernels = None

kernels = compiled_kernels if compiled_kernels is not None else python_kernels
BACKEND = kernels.BACKEND
