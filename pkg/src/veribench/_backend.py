"""Kernel selection: compiled extension when importable, else pure Python.

Set ``VERIBENCH_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels


def _load_compiled() -> ModuleType | None:
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels


compiled = _load_compiled()
python = _pykernels

if compiled is not None and os.environ.get("VERIBENCH_PURE_PYTHON", "0") in ("", "0"):
    kernels: ModuleType = compiled
    BACKEND = "compiled"
else:
    kernels = _pykernels
    BACKEND = "python"


def available() -> dict[str, ModuleType]:
    out = {"python": python}
    if compiled is not None:
        out["compiled"] = compiled
    return out
