"""Backend selection for the fixed-point series kernels.

The compiled extension is preferred when importable; set ZETAODD_KERNELS=pure
to force the pure-Python implementation (any other value, or an import
failure, also falls back to pure).  Both backends produce identical integers.
"""

from __future__ import annotations

import os

from . import _purekernels

_requested = os.environ.get("ZETAODD_KERNELS", "auto").strip().lower()

if _requested in ("auto", "compiled"):
    try:
        from . import _speedups as _backend  # type: ignore[attr-defined]
    except ImportError:
        if _requested == "compiled":
            raise
        _backend = _purekernels
else:
    _backend = _purekernels

BACKEND = _backend.BACKEND
alt_series_sum = _backend.alt_series_sum
recip_power_sum = _backend.recip_power_sum
arctan_recip = _backend.arctan_recip
