"""Kernel selection: compiled extension if available, pure Python otherwise.

Set QAFFINE_PURE=1 to force the pure-Python kernels.
"""

import os

if os.environ.get("QAFFINE_PURE"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

IMPLEMENTATION = kernels.IMPLEMENTATION
