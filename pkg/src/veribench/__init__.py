"""Verification workbench: exact solvers paired with brute-force oracles.

Hot loops live in a compiled extension (``veribench._kernels``) with a
pure-Python twin (``veribench._pykernels``) selected when the extension is
missing or ``VERIBENCH_PURE_PYTHON=1`` is set.
"""
__version__ = "0.1.0"

from ._backend import BACKEND  # noqa: E402

__all__ = ["BACKEND", "__version__"]
