"""Kernel backend selection.

The compiled extension is preferred when importable; set
HYPERLIE_KERNELS=py to force the pure-Python twin (useful for the benchmark
and for debugging) or HYPERLIE_KERNELS=c to fail loudly when the extension
is missing.
"""

from __future__ import annotations

import os

_choice = os.environ.get("HYPERLIE_KERNELS", "auto")

if _choice not in ("auto", "c", "py"):
    raise RuntimeError(f"HYPERLIE_KERNELS must be auto, c or py, not {_choice!r}")

if _choice == "py":
    from . import _windows_py as kernels
elif _choice == "c":
    from . import _windows_cy as kernels  # type: ignore[no-redef]
else:
    try:
        from . import _windows_cy as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _windows_py as kernels

BACKEND = kernels.BACKEND_NAME

identity_window = kernels.identity_window
apply_window = kernels.apply_window
compose = kernels.compose
inverse = kernels.inverse
power = kernels.power
cycle_type = kernels.cycle_type
window_chi = kernels.window_chi
window_chi_prime = kernels.window_chi_prime
