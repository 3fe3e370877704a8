"""Kernel backend selection.

The compiled extension is preferred when it was built; otherwise the pure
NumPy implementation is used.  Set ``SYMGAUSS_BACKEND=python`` or
``SYMGAUSS_BACKEND=compiled`` to force a choice (forcing ``compiled``
raises at import time when the extension is missing).
"""

import os

_forced = os.environ.get("SYMGAUSS_BACKEND", "")
if _forced not in ("", "python", "compiled"):
    raise ImportError(
        f"SYMGAUSS_BACKEND must be 'python' or 'compiled', got {_forced!r}"
    )

if _forced == "python":
    from . import _kernels_py as kernels
elif _forced == "compiled":
    try:
        from . import _kernels_cy as kernels
    except ImportError as exc:
        raise ImportError(
            "SYMGAUSS_BACKEND=compiled but the extension is not built; "
            "reinstall the package with Cython and a C compiler available"
        ) from exc
else:
    try:
        from . import _kernels_cy as kernels
    except ImportError:
        from . import _kernels_py as kernels


def backend_name():
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return kernels.BACKEND_NAME
