"""Kernel backend selection.

The compiled extension is used when importable; otherwise the pure-Python
module is loaded. Setting ``BRAIDMINORS_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("BRAIDMINORS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend  # type: ignore[no-redef]
    except ImportError:
        compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend
BACKEND_NAME = "compiled" if compiled_backend is not None else "python"

greedy_embed = backend.greedy_embed
embeds = backend.embeds
transposition_product = backend.transposition_product
count_cycles = backend.count_cycles

__all__ = [
    "BACKEND_NAME",
    "backend",
    "compiled_backend",
    "python_backend",
    "greedy_embed",
    "embeds",
    "transposition_product",
    "count_cycles",
]
