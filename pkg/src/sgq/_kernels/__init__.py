"""Kernel lane selection.

The compiled lane (_fast, Cython) is preferred when importable; the pure
lane is the always-available reference. Setting SGQ_PURE=1 forces the pure
lane. Both lanes expose the same functions with identical outputs for
identical inputs, including RNG streams.
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("SGQ_PURE") == "1":
    _impl = pure
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

ACTIVE_LANE: str = _impl.LANE

census_counts = _impl.census_counts
perm_order = _impl.perm_order
pr_order_histogram = _impl.pr_order_histogram

SplitMix64 = pure.SplitMix64
derive_stream_seed = pure.derive_stream_seed

__all__ = [
    "ACTIVE_LANE",
    "census_counts",
    "perm_order",
    "pr_order_histogram",
    "SplitMix64",
    "derive_stream_seed",
]
