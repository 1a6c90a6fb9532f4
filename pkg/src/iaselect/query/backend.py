"""Selects the structural matching kernel at import time.

The compiled kernel is preferred when its extension module built; the
pure-Python twin is the fallback. Set ``IASELECT_PURE_MATCH=1`` to force the
fallback (used by the benchmark and the parity tests).
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("IASELECT_PURE_MATCH"):
    _impl = _pure
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pure

enumerate_bindings = _impl.enumerate_bindings
BACKEND_NAME: str = _impl.BACKEND_NAME
