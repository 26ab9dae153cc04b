"""Wedge-product geometry of post-measurement vectors.

Measuring the complement B of a bipartition in its computational basis leaves
side A with one un-normalized vector per outcome ``j``. These are the columns
of the ``d_A x d_B`` state matrix. The state is separable across A|B exactly
when all of them are parallel, and the concurrence is twice the root of the
summed squared parallelogram areas spanned by every pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .core import DEFAULT_TOL, Bipartition, PureState, Tolerances, as_bipartition, matricize
from .errors import DimensionMismatch, NotThreeParty, NotThreeQubit


def state_matrix(state: PureState, bipartition) -> np.ndarray:
    """Amplitude ``<i|_A <j|_B |psi>`` at row ``i``, column ``j``.

    Both indices are mixed-radix over their parties in ascending party order.
    This is the transpose of filling columns first for some states; singular
    values and ``|det|`` do not care.
    """
    split = as_bipartition(bipartition, state.n_parties)
    return matricize(state, split.focus)


@dataclass(frozen=True, eq=False)
class PostMeasurementFamily:
    """The ``d_B`` vectors left on side A after measuring side B.

    ``vectors[j]`` is the (un-normalized) vector for outcome ``j`` of B.
    """

    bipartition: Bipartition
    vectors: np.ndarray

    def __len__(self) -> int:
        return self.vectors.shape[0]

    def __getitem__(self, j: int) -> np.ndarray:
        return self.vectors[j]

    def nonzero(self, atol: float = 1e-12) -> list[int]:
        """Outcomes whose vector does not vanish."""
        return [j for j in range(len(self)) if np.linalg.norm(self.vectors[j]) > atol]


def post_measurement_vectors(state: PureState, bipartition) -> PostMeasurementFamily:
    split = as_bipartition(bipartition, state.n_parties)
    m = matricize(state, split.focus)
    vecs = np.ascontiguousarray(m.T)
    vecs.setflags(write=False)
    return PostMeasurementFamily(split, vecs)


def wedge_norm_sq(u, v) -> float:
    """Squared norm of ``u ^ v``: ``sum_{i<j} |u_i v_j - u_j v_i|^2``."""
    u = np.asarray(u, dtype=np.complex128).ravel()
    v = np.asarray(v, dtype=np.complex128).ravel()
    if u.shape != v.shape:
        raise DimensionMismatch(f"vectors have dimensions {u.shape[0]} and {v.shape[0]}")
    return kernels.wedge_norm_sq(u, v)


def concurrence_wedge(state: PureState, bipartition) -> float:
    """``2 * sqrt(sum_{j<k} |chi_j ^ chi_k|^2)`` over the post-measurement vectors.

    No rescaling for local dimension above two, so a qutrit GHZ state gives
    ``2/sqrt(3)``.
    """
    m = state_matrix(state, bipartition)
    return 2.0 * math.sqrt(kernels.pairwise_wedge_sum(m))


def concurrence_purity(state: PureState, bipartition) -> float:
    """Independent check on :func:`concurrence_wedge`: ``sqrt(2 (1 - Tr rho_A^2))``."""
    from .entropy import partial_trace

    split = as_bipartition(bipartition, state.n_parties)
    rho = partial_trace(state, split.focus).entries
    purity = float(np.real(np.vdot(rho, rho)))
    return math.sqrt(max(0.0, 2.0 * (1.0 - purity)))


@dataclass(frozen=True)
class ConcurrenceReport:
    bipartition: Bipartition
    c_wedge: float
    c_oracle: float

    @property
    def discrepancy(self) -> float:
        return abs(self.c_wedge - self.c_oracle)

    def accepted(self, tol: Tolerances = DEFAULT_TOL) -> bool:
        return self.discrepancy <= tol.equality_tol


def concurrence_report(state: PureState, bipartition) -> ConcurrenceReport:
    split = as_bipartition(bipartition, state.n_parties)
    return ConcurrenceReport(split, concurrence_wedge(state, split), concurrence_purity(state, split))


class Separability(NamedTuple):
    separable: bool
    rank: int


def schmidt_coefficients(state: PureState, bipartition) -> np.ndarray:
    """Singular values of the state matrix, largest first."""
    return np.linalg.svd(state_matrix(state, bipartition), compute_uv=False)


def is_separable(state: PureState, bipartition, tol: Tolerances = DEFAULT_TOL) -> Separability:
    """Rank-one test on the state matrix, relative to its largest singular value."""
    sv = schmidt_coefficients(state, bipartition)
    cutoff = tol.rank_tol * sv[0]
    rank = int(np.sum(sv > cutoff))
    return Separability(rank <= 1, rank)


# --- three-party relations ----------------------------------------------------


@dataclass(frozen=True)
class PolygonReport:
    """Single-party concurrences ``(C_0, C_1, C_2)`` and raw inequality slacks.

    ``linear_slacks[i] = C_j + C_k - C_i`` and ``squared_slacks[i]`` the same
    with squares; both are nonnegative for valid states, but are reported
    unclamped.
    """

    concurrences: tuple[float, float, float]
    linear_slacks: tuple[float, float, float]
    squared_slacks: tuple[float, float, float]

    @property
    def min_linear_slack(self) -> float:
        return min(self.linear_slacks)

    @property
    def min_squared_slack(self) -> float:
        return min(self.squared_slacks)


def polygon_check(state: PureState) -> PolygonReport:
    if state.n_parties != 3:
        raise NotThreeParty(f"polygon inequalities need 3 parties, state has {state.n_parties}")
    c = tuple(concurrence_wedge(state, [k]) for k in range(3))
    lin, sq = [], []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        lin.append(c[j] + c[k] - c[i])
        sq.append(c[j] ** 2 + c[k] ** 2 - c[i] ** 2)
    return PolygonReport(c, tuple(lin), tuple(sq))


def three_qubit_identity_residual(state: PureState) -> tuple[float, float]:
    """Both sides of ``C_B^2 + C_C^2 - C_A^2 = 4[2|ad-bc|^2 + 2|ps-qr|^2 + |as+pd-br-qc|^2]``.

    Amplitudes are labelled ``a b c d p q r s`` for ``|000>`` ... ``|111>``.
    The right side is exact for real amplitudes; for complex input the moduli
    keep it real but equality is not guaranteed. Nothing is asserted here.
    """
    if state.dims != (2, 2, 2):
        raise NotThreeQubit(f"identity is for three qubits, got dims {list(state.dims)}")
    a, b, c, d, p, q, r, s = state.amps
    c_a, c_b, c_c = (concurrence_wedge(state, [k]) for k in range(3))
    lhs = c_b**2 + c_c**2 - c_a**2
    rhs = 4.0 * (2 * abs(a * d - b * c) ** 2 + 2 * abs(p * s - q * r) ** 2 + abs(a * s + p * d - b * r - q * c) ** 2)
    return float(lhs), float(rhs)
