"""Numpy implementation of the wedge kernels, used when the extension is absent."""

from __future__ import annotations

import numpy as np


def wedge_norm_sq(u, v) -> float:
    u = np.ascontiguousarray(u, dtype=np.complex128)
    v = np.ascontiguousarray(v, dtype=np.complex128)
    if u.shape != v.shape or u.ndim != 1:
        raise ValueError(f"vectors have dimensions {u.shape} and {v.shape}")
    outer = np.outer(u, v)
    i, j = np.triu_indices(u.shape[0], k=1)
    minors = outer[i, j] - outer[j, i]
    return float(np.sum(minors.real**2 + minors.imag**2))


def pairwise_wedge_sum(m) -> float:
    """Sum of ``|col_j ^ col_k|^2`` over column pairs ``j < k`` of ``m``."""
    m = np.ascontiguousarray(m, dtype=np.complex128)
    rows, cols = m.shape
    if rows < 2 or cols < 2:
        return 0.0
    a, b = np.triu_indices(rows, k=1)
    j, k = np.triu_indices(cols, k=1)
    # every 2x2 minor: rows (a, b) against columns (j, k)
    minors = m[a][:, j] * m[b][:, k] - m[b][:, j] * m[a][:, k]
    return float(np.sum(minors.real**2 + minors.imag**2))
