"""Kernel backend selection.

Imports the compiled fast-scan extension when it is available and not
disabled, falling back to the pure-Python reference implementation.
Set DISJHULL_PURE=1 to force the fallback (used by the benchmark and
by the cross-checking tests).
"""

from __future__ import annotations

import os

from . import reference

if os.environ.get("DISJHULL_PURE"):
    _backend = reference
else:
    try:
        from . import _fastscan as _backend  # type: ignore[no-redef]
    except ImportError:
        _backend = reference

IMPLEMENTATION: str = _backend.IMPLEMENTATION
int_rank = _backend.int_rank
hyperplane_ints = _backend.hyperplane_ints
scan_candidates = _backend.scan_candidates

__all__ = ["IMPLEMENTATION", "int_rank", "hyperplane_ints", "scan_candidates", "reference"]
