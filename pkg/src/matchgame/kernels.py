"""Backend selection for the hot search kernels.

Prefers the compiled extension, falls back to the pure-Python twin.  Both
expose the same classes and must return identical numbers; a test suite runs
them side by side whenever the extension is importable.
"""

from __future__ import annotations

VARIANT_STAR = 0
VARIANT_STRIPE = 1
VARIANT_UNROOTED = 2

try:
    from ._speed import BACKEND, P3Packing, P3Solver
except ImportError:  # pragma: no cover - depends on the build environment
    from ._kernel_py import BACKEND, P3Packing, P3Solver

__all__ = [
    "BACKEND",
    "P3Solver",
    "P3Packing",
    "VARIANT_STAR",
    "VARIANT_STRIPE",
    "VARIANT_UNROOTED",
]
