# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled wedge-product kernels. Same contract as ``_wedge_py``."""

cdef inline double _abs2(double complex z) nogil:
    return z.real * z.real + z.imag * z.imag


def wedge_norm_sq(const double complex[::1] u, const double complex[::1] v):
    cdef Py_ssize_t n = u.shape[0]
    if v.shape[0] != n:
        raise ValueError(f"vectors have dimensions {n} and {v.shape[0]}")
    cdef Py_ssize_t i, j
    cdef double total = 0.0
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                total += _abs2(u[i] * v[j] - u[j] * v[i])
    return total


def pairwise_wedge_sum(const double complex[:, ::1] m):
    """Sum of ``|col_j ^ col_k|^2`` over column pairs ``j < k`` of ``m``."""
    cdef Py_ssize_t rows = m.shape[0], cols = m.shape[1]
    cdef Py_ssize_t a, b, j, k
    cdef double complex maj, mbj
    cdef double total = 0.0
    with nogil:
        for j in range(cols):
            for k in range(j + 1, cols):
                for a in range(rows):
                    maj = m[a, j]
                    for b in range(a + 1, rows):
                        mbj = m[b, j]
                        total += _abs2(maj * m[b, k] - mbj * m[a, k])
    return total
