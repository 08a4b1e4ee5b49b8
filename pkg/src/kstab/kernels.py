"""Kernel backend selection.

The conjugation solvers dominate the runtime of the geodesic quadrature, so
they exist twice: a Cython extension (built by setup.py) and a pure-numpy
fallback with identical semantics.  The compiled one is used when importable;
set KSTAB_KERNEL=python or =compiled to force a choice (benchmarks and parity
tests do).
"""

from __future__ import annotations

import os

from . import _kernels_py

_choice = os.environ.get("KSTAB_KERNEL", "").strip().lower()

if _choice == "python":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise
        _impl = _kernels_py
        BACKEND = "python"

invert_gradient = _impl.invert_gradient
crease_solve = _impl.crease_solve
