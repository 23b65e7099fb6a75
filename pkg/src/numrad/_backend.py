"""Pick the compiled kernel when it is importable, the numpy fallback otherwise.

Set ``NUMRAD_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _fallback

if os.environ.get("NUMRAD_PURE_PYTHON", "").strip() not in ("", "0"):
    kernels = _fallback
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        kernels = _fallback
        BACKEND = "python"
    else:
        BACKEND = "compiled"


def available():
    """Names and modules of every backend that can be imported here."""
    out = {"python": _fallback}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        out["compiled"] = _kernels
    return out
