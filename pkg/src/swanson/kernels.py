"""Backend selection for the hot integration kernel.

Imports the compiled Numerov sweep when the extension built, otherwise
the pure-Python twin.  Set SWANSON_PURE_PYTHON=1 to force the fallback
(used by the benchmark and the backend-equivalence tests).
"""

import os

__all__ = ["numerov_sweep", "BACKEND"]

_forced = os.environ.get("SWANSON_PURE_PYTHON", "").strip() not in ("", "0")

if _forced:
    from ._numerov_py import numerov_sweep

    BACKEND = "python"
else:
    try:
        from ._numerov import numerov_sweep  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from ._numerov_py import numerov_sweep

        BACKEND = "python"
