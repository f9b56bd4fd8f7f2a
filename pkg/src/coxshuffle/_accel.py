"""Kernel backend selection: compiled extension if built, else pure Python.

Import ``kernels`` from here; ``BACKEND`` names the active implementation.
Set COXSHUFFLE_NO_EXT=1 to force the pure-Python kernels (used by the
benchmark and by the equivalence tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("COXSHUFFLE_NO_EXT"):
    kernels = _kernels_py
    BACKEND = "pure-python (forced)"
else:
    try:
        from . import _kernels as _ext

        kernels = _ext
        BACKEND = "compiled"
    except ImportError:
        kernels = _kernels_py
        BACKEND = "pure-python"
