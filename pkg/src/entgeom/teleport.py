"""One-qubit teleportation through a shared two-qubit resource.

Party 0 holds the unknown input, parties 1 and 2 share the resource (Alice
has 1, Bob has 2). Alice measures parties 0 and 1 in the Bell basis and Bob
applies the correction for the announced outcome. The correction table is
fixed for the resource ``|phi+>``; any other resource runs through the same
table, which is how degraded fidelity shows up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import DEFAULT_TOL, PureState, Tolerances, _frozen, bell, matricize
from .errors import BadOutcomeIndex, DimensionMismatch, NotThreeQubit

OUTCOME_NAMES = ("PhiPlus", "PhiMinus", "PsiPlus", "PsiMinus")
CORRECTION_NAMES = ("I", "Z", "X", "iY")

_CORRECTIONS = (
    np.eye(2, dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, 1], [-1, 0]], dtype=np.complex128),  # i * sigma_y
)
for _u in _CORRECTIONS:
    _u.setflags(write=False)


def bell_basis() -> tuple[PureState, PureState, PureState, PureState]:
    """``(phi+, phi-, psi+, psi-)`` in that order."""
    return tuple(bell(name) for name in OUTCOME_NAMES)


def correction_for_outcome(k: int) -> np.ndarray:
    """Bob's unitary for outcome ``k``: I, Z, X, iY for phi+, phi-, psi+, psi-."""
    if not isinstance(k, (int, np.integer)) or not 0 <= k < 4:
        raise BadOutcomeIndex(f"Bell outcome index must be 0..3, got {k!r}")
    return _CORRECTIONS[k]


@dataclass(frozen=True)
class BellOutcome:
    probability: float
    collapsed: Optional[PureState]  # None when the outcome cannot occur


def bell_measurement(state: PureState, measured_parties=(0, 1), tol: Tolerances = DEFAULT_TOL) -> list[BellOutcome]:
    """Project two parties of a three-qubit state onto each Bell vector.

    Returns one entry per Bell state with the outcome probability and the
    normalized state left on the remaining qubit.
    """
    if state.dims != (2, 2, 2):
        raise NotThreeQubit(f"Bell measurement needs three qubits, got dims {list(state.dims)}")
    pair = tuple(int(p) for p in measured_parties)
    if len(pair) != 2 or len(set(pair)) != 2 or not set(pair) <= {0, 1, 2}:
        raise DimensionMismatch(f"need two distinct parties out of 0..2, got {measured_parties!r}")
    # rows: measured pair (in the given order), columns: the remaining qubit
    m = matricize(state, list(pair))
    out = []
    for b in bell_basis():
        residual = b.amps.conj() @ m
        p = float(np.vdot(residual, residual).real)
        if p <= tol.norm_tol**2:
            out.append(BellOutcome(0.0, None))
        else:
            out.append(BellOutcome(p, PureState((2,), _frozen(residual / math.sqrt(p)))))
    return out


@dataclass(frozen=True)
class TeleportationTranscript:
    outcome: int
    probability: float
    correction: np.ndarray
    bob_state: Optional[PureState]
    fidelity: Optional[float]

    @property
    def outcome_name(self) -> str:
        return OUTCOME_NAMES[self.outcome]

    @property
    def correction_name(self) -> str:
        return CORRECTION_NAMES[self.outcome]


@dataclass(frozen=True)
class TeleportResult:
    transcripts: tuple[TeleportationTranscript, ...]

    @property
    def average_fidelity(self) -> float:
        return sum(t.probability * t.fidelity for t in self.transcripts if t.fidelity is not None)

    @property
    def total_probability(self) -> float:
        return sum(t.probability for t in self.transcripts)


def _check_inputs(payload: PureState, resource: PureState) -> None:
    if payload.dims != (2,):
        raise DimensionMismatch(f"input must be a single qubit, got dims {list(payload.dims)}")
    if resource.dims != (2, 2):
        raise DimensionMismatch(f"resource must be two qubits, got dims {list(resource.dims)}")


def teleport(payload: PureState, resource: Optional[PureState] = None, tol: Tolerances = DEFAULT_TOL) -> TeleportResult:
    resource = bell("PhiPlus") if resource is None else resource
    _check_inputs(payload, resource)
    joint = payload.kron(resource)
    transcripts = []
    for k, outcome in enumerate(bell_measurement(joint, (0, 1), tol)):
        u = correction_for_outcome(k)
        if outcome.collapsed is None:
            transcripts.append(TeleportationTranscript(k, 0.0, u, None, None))
            continue
        fixed = PureState((2,), _frozen(u @ outcome.collapsed.amps))
        fid = min(1.0, float(abs(np.vdot(payload.amps, fixed.amps)) ** 2))
        transcripts.append(TeleportationTranscript(k, outcome.probability, u, fixed, fid))
    return TeleportResult(tuple(transcripts))


def decoupling_check(payload: PureState, resource: Optional[PureState] = None, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True when every possible post-measurement state factors as Bell pair x Bob qubit.

    The collapsed three-qubit state is built with the full projector
    ``|b_k><b_k| (x) I`` rather than reused from :func:`bell_measurement`.
    """
    resource = bell("PhiPlus") if resource is None else resource
    _check_inputs(payload, resource)
    joint = payload.kron(resource).amps
    outcomes = bell_measurement(payload.kron(resource), (0, 1), tol)
    for b, outcome in zip(bell_basis(), outcomes):
        if outcome.collapsed is None:
            continue
        projector = np.kron(np.outer(b.amps, b.amps.conj()), np.eye(2))
        post = projector @ joint
        post = post / np.linalg.norm(post)
        expected = np.kron(b.amps, outcome.collapsed.amps)
        if np.max(np.abs(post - expected)) > tol.equality_tol:
            return False
    return True
