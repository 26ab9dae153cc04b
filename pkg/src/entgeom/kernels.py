"""Backend selection for the wedge-product kernels.

The compiled ``_wedge`` extension is used when it imports; otherwise the
numpy fallback in ``_wedge_py``. Setting ``ENTGEOM_PURE_PYTHON=1`` forces
the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _wedge_py

_compiled = None
if os.environ.get("ENTGEOM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _wedge as _compiled
    except ImportError:
        _compiled = None

BACKENDS = {"python": _wedge_py}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

BACKEND = "compiled" if _compiled is not None else "python"
_impl = BACKENDS[BACKEND]


def use_backend(name: str) -> None:
    """Switch the active backend (``"compiled"`` or ``"python"``) process-wide."""
    global BACKEND, _impl
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    BACKEND, _impl = name, BACKENDS[name]


def wedge_norm_sq(u, v) -> float:
    return _impl.wedge_norm_sq(
        np.ascontiguousarray(u, dtype=np.complex128), np.ascontiguousarray(v, dtype=np.complex128)
    )


def pairwise_wedge_sum(m) -> float:
    return _impl.pairwise_wedge_sum(np.ascontiguousarray(m, dtype=np.complex128))
