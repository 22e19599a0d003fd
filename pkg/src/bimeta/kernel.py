"""Kernel selection: compiled extension when available, numpy fallback otherwise.

Set ``BIMETA_PURE=1`` to force the pure-Python kernels (used by the benchmark
and by tests that exercise both implementations).
"""

from __future__ import annotations

import os

from . import _pykernel

if os.environ.get("BIMETA_PURE"):
    impl = _pykernel
else:
    try:
        from . import _native as impl  # type: ignore[no-redef]
    except ImportError:
        impl = _pykernel

ACTIVE = getattr(impl, "NAME", "native")


def active_kernel() -> str:
    """Name of the kernel implementation selected at import ("native" or "python")."""
    return ACTIVE

butterfly_total = impl.butterfly_total
butterflies_per_edge = impl.butterflies_per_edge
