"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
module is used.  Setting ``ZASTAVA_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _purepy

if os.environ.get("ZASTAVA_PURE_PYTHON", "") not in ("", "0"):
    _impl = _purepy
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _purepy

BACKEND = "cython" if _impl is not _purepy else "python"

graded_knapsack = _impl.graded_knapsack
knapsack_count = _impl.knapsack_count


def backends():
    """All importable kernel modules, keyed by name (for tests and benchmarks)."""
    found = {"python": _purepy}
    try:
        from . import _speedups
    except ImportError:
        pass
    else:
        found["cython"] = _speedups
    return found
