"""Hot search kernels with a compiled core and a pure-Python fallback.

The compiled Cython extension is preferred when present; set
SPECTOUGH_PURE=1 to force the reference implementation (useful for the
backend-agreement tests and the benchmark).
"""

import os

if os.environ.get("SPECTOUGH_PURE"):
    from . import _ref as _impl
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _ref as _impl

BACKEND = _impl.BACKEND_NAME
toughness_search = _impl.toughness_search
hamilton_cycle = _impl.hamilton_cycle
