"""Reduced density matrices and von Neumann entropies of pure states."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import DEFAULT_TOL, PureState, Tolerances, matricize
from .errors import InvalidSubset, NotDensityMatrix, OverlappingSubsets


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.entries)

    def validate(self, tol: Tolerances = DEFAULT_TOL) -> "DensityMatrix":
        rho = self.entries
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise NotDensityMatrix(f"expected a square matrix, got shape {rho.shape}")
        if np.max(np.abs(rho - rho.conj().T), initial=0.0) > 1e-10:
            raise NotDensityMatrix("matrix is not Hermitian")
        tr = np.trace(rho).real
        if abs(tr - 1.0) > tol.norm_tol:
            raise NotDensityMatrix(f"trace is {tr!r}, expected 1")
        if self.eigenvalues()[0] < -tol.eig_clip:
            raise NotDensityMatrix("matrix has a negative eigenvalue")
        return self


def density_matrix(entries, tol: Tolerances = DEFAULT_TOL) -> DensityMatrix:
    rho = np.array(entries, dtype=np.complex128)
    rho.setflags(write=False)
    return DensityMatrix(rho).validate(tol)


def _keep_list(state: PureState, keep) -> list[int]:
    if isinstance(keep, (int, np.integer)):
        keep = [keep]
    try:
        idx = sorted({int(k) for k in keep})
    except (TypeError, ValueError):
        raise InvalidSubset(f"party subset must be integers, got {keep!r}") from None
    if not idx or idx[0] < 0 or idx[-1] >= state.n_parties:
        raise InvalidSubset(f"subset {idx} invalid for {state.n_parties} parties")
    return idx


def partial_trace(state: PureState, keep) -> DensityMatrix:
    """Reduced state on ``keep``, computed as ``M M^dagger`` of the state matrix.

    Keeping every party returns the full projector ``|psi><psi|``.
    """
    idx = _keep_list(state, keep)
    m = matricize(state, idx)
    rho = m @ m.conj().T
    rho = (rho + rho.conj().T) / 2
    rho.setflags(write=False)
    return DensityMatrix(rho)


def _log(x: np.ndarray, base) -> np.ndarray:
    if base == 2:
        return np.log2(x)
    if base in ("e", math.e):
        return np.log(x)
    raise ValueError(f"log base must be 2 or 'e', got {base!r}")


def von_neumann_entropy(rho: DensityMatrix, base=2, tol: Tolerances = DEFAULT_TOL) -> float:
    """``-sum lambda log lambda`` over eigenvalues above ``tol.eig_clip``."""
    if not isinstance(rho, DensityMatrix):
        rho = density_matrix(rho, tol)
    else:
        rho.validate(tol)
    lam = rho.eigenvalues()
    lam = lam[lam > tol.eig_clip]
    s = float(-np.sum(lam * _log(lam, base)))
    return max(s, 0.0)


def entanglement_entropy(state: PureState, keep, base=2, tol: Tolerances = DEFAULT_TOL) -> float:
    return von_neumann_entropy(partial_trace(state, keep), base, tol)


@dataclass(frozen=True)
class EntropyReport:
    """Entropies keyed by the sorted tuple of parties kept."""

    entropies: dict[tuple[int, ...], float]
    base: object = 2

    def single(self, party: int) -> float:
        return self.entropies[(party,)]

    @property
    def full(self) -> float:
        return self.entropies[max(self.entropies, key=len)]


def entropy_report(state: PureState, base=2, tol: Tolerances = DEFAULT_TOL) -> EntropyReport:
    out = {(k,): entanglement_entropy(state, [k], base, tol) for k in range(state.n_parties)}
    everyone = tuple(range(state.n_parties))
    out[everyone] = entanglement_entropy(state, everyone, base, tol)
    return EntropyReport(out, base)


class ArakiLieb(NamedTuple):
    s_a: float
    s_b: float
    s_ab: float
    lower_slack: float
    upper_slack: float


def araki_lieb_check(state: PureState, a, b, base=2, tol: Tolerances = DEFAULT_TOL) -> ArakiLieb:
    """Slacks of ``|S_A - S_B| <= S_AB <= S_A + S_B``, unclamped."""
    a_idx, b_idx = _keep_list(state, a), _keep_list(state, b)
    if set(a_idx) & set(b_idx):
        raise OverlappingSubsets(f"subsets {a_idx} and {b_idx} overlap")
    s_a = entanglement_entropy(state, a_idx, base, tol)
    s_b = entanglement_entropy(state, b_idx, base, tol)
    s_ab = entanglement_entropy(state, a_idx + b_idx, base, tol)
    return ArakiLieb(s_a, s_b, s_ab, s_ab - abs(s_a - s_b), s_a + s_b - s_ab)
