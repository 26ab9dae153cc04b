"""State representation, named-state catalog and random sampling."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    InvalidBipartition,
    InvalidDims,
    InvalidParameters,
    LengthMismatch,
    NotNormalized,
    UnknownName,
    ZeroVector,
)


@dataclass(frozen=True)
class Tolerances:
    """Numeric thresholds used across the package.

    norm_tol
        Allowed deviation of the squared norm from one.
    rank_tol
        Singular values below ``rank_tol * sigma_max`` count as zero.
    equality_tol
        Agreement threshold for two independently computed quantities.
    eig_clip
        Eigenvalues at or below this are treated as zero in entropies.
    """

    norm_tol: float = 1e-9
    rank_tol: float = 1e-9
    equality_tol: float = 1e-9
    eig_clip: float = 1e-12

    def __post_init__(self):
        for name in ("norm_tol", "rank_tol", "equality_tol", "eig_clip"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise InvalidParameters(f"{name} must be a positive finite number, got {value!r}")


DEFAULT_TOL = Tolerances()


def _check_dims(dims: Iterable[int]) -> tuple[int, ...]:
    try:
        dims = tuple(int(d) for d in dims)
    except (TypeError, ValueError) as exc:
        raise InvalidDims(f"dims must be a sequence of integers: {exc}") from None
    if not dims:
        raise InvalidDims("dims must name at least one party")
    if any(d < 2 for d in dims):
        raise InvalidDims(f"every local dimension must be >= 2, got {list(dims)}")
    return dims


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized pure state on ``len(dims)`` parties.

    Amplitudes are stored big-endian: party 0 is the most significant digit,
    so for three qubits index 1 is ``|001>`` and index 4 is ``|100>``.
    Construct through :func:`make_state` unless the input is already trusted.
    """

    dims: tuple[int, ...]
    amps: np.ndarray = field(repr=False)

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    @property
    def dim(self) -> int:
        return self.amps.shape[0]

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to one axis per party."""
        return self.amps.reshape(self.dims)

    def kron(self, other: "PureState") -> "PureState":
        return PureState(self.dims + other.dims, _frozen(np.kron(self.amps, other.amps)))

    def allclose(self, other: "PureState", atol: float = 1e-9) -> bool:
        return self.dims == other.dims and bool(np.allclose(self.amps, other.amps, rtol=0, atol=atol))

    def __repr__(self) -> str:
        from .parser import format_state

        return f"PureState(dims={list(self.dims)}, {format_state(self)!r})"


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.complex128, copy=True)
    a.setflags(write=False)
    return a


def make_state(
    dims: Sequence[int],
    amps: Sequence[complex] | np.ndarray,
    normalize: bool = False,
    tol: Tolerances = DEFAULT_TOL,
) -> PureState:
    """Validate ``amps`` against ``dims`` and wrap them in a :class:`PureState`.

    With ``normalize`` the vector is rescaled to unit norm; otherwise its
    squared norm must already be within ``tol.norm_tol`` of one and the
    amplitudes are kept verbatim.
    """
    dims = _check_dims(dims)
    vec = np.asarray(amps, dtype=np.complex128).ravel()
    expected = math.prod(dims)
    if vec.shape[0] != expected:
        raise LengthMismatch(f"dims {list(dims)} need {expected} amplitudes, got {vec.shape[0]}")
    if not np.all(np.isfinite(vec)):
        raise InvalidParameters("amplitudes must be finite")
    norm_sq = float(np.vdot(vec, vec).real)
    if norm_sq <= tol.norm_tol**2:
        raise ZeroVector("all amplitudes are (numerically) zero")
    if normalize:
        vec = vec / math.sqrt(norm_sq)
    elif abs(norm_sq - 1.0) > tol.norm_tol:
        raise NotNormalized(f"squared norm is {norm_sq!r}; pass normalize=True to rescale")
    return PureState(dims, _frozen(vec))


def basis_state(dims: Sequence[int], digits: Sequence[int]) -> PureState:
    dims = _check_dims(dims)
    digits = tuple(int(x) for x in digits)
    if len(digits) != len(dims):
        raise InvalidParameters(f"{len(digits)} digits given for {len(dims)} parties")
    for k, (x, d) in enumerate(zip(digits, dims)):
        if not 0 <= x < d:
            raise InvalidParameters(f"digit {x} at party {k} is outside 0..{d - 1}")
    vec = np.zeros(math.prod(dims), dtype=np.complex128)
    vec[np.ravel_multi_index(digits, dims)] = 1.0
    return PureState(dims, _frozen(vec))


# --- bipartitions -----------------------------------------------------------


@dataclass(frozen=True)
class Bipartition:
    """Split of ``n_parties`` parties into a focus side A and its complement B."""

    focus: tuple[int, ...]
    n_parties: int

    def __init__(self, focus: Iterable[int], n_parties: int):
        try:
            idx = sorted({int(i) for i in focus})
        except (TypeError, ValueError):
            raise InvalidBipartition(f"focus must be integer party indices, got {focus!r}") from None
        if not idx:
            raise InvalidBipartition("focus side is empty")
        if idx[0] < 0 or idx[-1] >= n_parties:
            raise InvalidBipartition(f"party indices {idx} out of range for {n_parties} parties")
        if len(idx) == n_parties:
            raise InvalidBipartition("focus side contains every party; complement would be empty")
        object.__setattr__(self, "focus", tuple(idx))
        object.__setattr__(self, "n_parties", int(n_parties))

    @property
    def complement(self) -> tuple[int, ...]:
        return tuple(k for k in range(self.n_parties) if k not in self.focus)

    def label(self) -> str:
        """``A|B`` text such as ``0|12``; parties above 9 are comma separated."""
        sep = "," if self.n_parties > 10 else ""
        return sep.join(map(str, self.focus)) + "|" + sep.join(map(str, self.complement))

    @classmethod
    def parse(cls, text: str, n_parties: int) -> "Bipartition":
        """Read ``"0|12"`` (or just ``"0"``); only the focus side is binding."""
        head, _, tail = text.partition("|")
        try:
            focus = [int(c) for c in (head.split(",") if "," in head else head.strip())]
        except ValueError:
            raise InvalidBipartition(f"cannot read bipartition {text!r}") from None
        split = cls(focus, n_parties)
        if tail.strip():
            try:
                rest = sorted(int(c) for c in (tail.split(",") if "," in tail else tail.strip()))
            except ValueError:
                raise InvalidBipartition(f"cannot read bipartition {text!r}") from None
            if tuple(rest) != split.complement:
                raise InvalidBipartition(
                    f"{text!r}: right side must be the complement {split.complement} of the focus"
                )
        return split


def as_bipartition(split, n_parties: int) -> Bipartition:
    if isinstance(split, Bipartition):
        if split.n_parties != n_parties:
            raise InvalidBipartition(f"bipartition is for {split.n_parties} parties, state has {n_parties}")
        return split
    if isinstance(split, str):
        return Bipartition.parse(split, n_parties)
    if isinstance(split, (int, np.integer)):
        return Bipartition([int(split)], n_parties)
    return Bipartition(split, n_parties)


def all_bipartitions(n_parties: int) -> list[Bipartition]:
    """Every nonempty proper subset of the parties as a focus side."""
    out = []
    for mask in range(1, 2**n_parties - 1):
        out.append(Bipartition([k for k in range(n_parties) if mask >> k & 1], n_parties))
    return out


def single_party_splits(n_parties: int) -> list[Bipartition]:
    return [Bipartition([k], n_parties) for k in range(n_parties)]


def matricize(state: PureState, focus: Sequence[int]) -> np.ndarray:
    """Rows indexed by the focus parties, columns by the rest, both big-endian."""
    focus = list(focus)
    rest = [k for k in range(state.n_parties) if k not in focus]
    d_a = math.prod(state.dims[k] for k in focus)
    return np.transpose(state.tensor(), focus + rest).reshape(d_a, -1)


# --- catalog ----------------------------------------------------------------


def bell(which: str = "PhiPlus") -> PureState:
    r = 1 / math.sqrt(2)
    table = {
        "PhiPlus": (r, 0, 0, r),
        "PhiMinus": (r, 0, 0, -r),
        "PsiPlus": (0, r, r, 0),
        "PsiMinus": (0, r, -r, 0),
    }
    if which not in table:
        raise UnknownName(f"unknown Bell state {which!r}")
    return PureState((2, 2), _frozen(table[which]))


def ghz(n: int = 3, d: int = 2) -> PureState:
    if n < 2 or d < 2:
        raise InvalidParameters(f"GHZ needs n >= 2 and d >= 2, got n={n}, d={d}")
    dims = (d,) * n
    vec = np.zeros(d**n, dtype=np.complex128)
    # |kk...k> sits at k * (d^n - 1) / (d - 1)
    step = (d**n - 1) // (d - 1)
    vec[np.arange(d) * step] = 1 / math.sqrt(d)
    return PureState(dims, _frozen(vec))


def w3() -> PureState:
    vec = np.zeros(8, dtype=np.complex128)
    vec[[1, 2, 4]] = 1 / math.sqrt(3)
    return PureState((2, 2, 2), _frozen(vec))


@dataclass(frozen=True)
class NamedState:
    """A catalog entry: ``kind`` plus the parameters it needs.

    Text forms accepted by :meth:`parse`: ``PhiPlus``, ``PhiMinus``,
    ``PsiPlus``, ``PsiMinus``, ``W3``, ``GHZ`` / ``GHZ(n,d)`` and
    ``ProductBasis(010)`` / ``ProductBasis(012;3,3,3)``.
    """

    kind: str
    n: int = 3
    d: int = 2
    dims: tuple[int, ...] = ()
    digits: tuple[int, ...] = ()

    KINDS = ("PhiPlus", "PhiMinus", "PsiPlus", "PsiMinus", "GHZ", "W3", "ProductBasis")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise UnknownName(f"unknown catalog state {self.kind!r}; known: {', '.join(self.KINDS)}")

    def label(self) -> str:
        if self.kind == "GHZ":
            return f"GHZ({self.n},{self.d})"
        if self.kind == "ProductBasis":
            return f"ProductBasis({''.join(map(str, self.digits))};{','.join(map(str, self.dims))})"
        return self.kind

    _PATTERN = re.compile(r"^\s*([A-Za-z0-9]+)\s*(?:\((.*)\))?\s*$")

    @classmethod
    def parse(cls, text: str) -> "NamedState":
        m = cls._PATTERN.match(text)
        if not m:
            raise UnknownName(f"cannot read catalog name {text!r}")
        kind, args = m.group(1), m.group(2)
        if kind == "GHZ":
            if args is None or not args.strip():
                return cls("GHZ")
            try:
                n, d = (int(x) for x in args.split(","))
            except ValueError:
                raise InvalidParameters(f"GHZ expects GHZ(n,d), got {text!r}") from None
            return cls("GHZ", n=n, d=d)
        if kind == "ProductBasis":
            if not args:
                raise InvalidParameters("ProductBasis needs digits, e.g. ProductBasis(010)")
            digit_part, _, dim_part = args.partition(";")
            digit_part = digit_part.strip()
            if not digit_part.isdigit():
                raise InvalidParameters(f"ProductBasis digits must be 0-9, got {digit_part!r}")
            digits = tuple(int(c) for c in digit_part)
            if dim_part.strip():
                try:
                    dims = tuple(int(x) for x in dim_part.split(","))
                except ValueError:
                    raise InvalidParameters(f"cannot read dims in {text!r}") from None
            else:
                dims = tuple(max(2, x + 1) for x in digits)
            return cls("ProductBasis", dims=dims, digits=digits)
        if args is not None:
            raise InvalidParameters(f"{kind} takes no parameters")
        return cls(kind)


def catalog_names() -> list[str]:
    """Representative catalog labels, one per line of ``entgeom catalog list``."""
    return [
        "PhiPlus",
        "PhiMinus",
        "PsiPlus",
        "PsiMinus",
        "GHZ(2,2)",
        "GHZ(3,2)",
        "GHZ(4,2)",
        "GHZ(3,3)",
        "W3",
        "ProductBasis(000;2,2,2)",
    ]


def catalog(name: str | NamedState) -> PureState:
    if isinstance(name, str):
        name = NamedState.parse(name)
    if name.kind == "GHZ":
        return ghz(name.n, name.d)
    if name.kind == "W3":
        return w3()
    if name.kind == "ProductBasis":
        return basis_state(name.dims, name.digits)
    return bell(name.kind)


# --- sampling ---------------------------------------------------------------


def random_pure(dims: Sequence[int], seed: int | np.random.Generator | None = None) -> PureState:
    """Haar-random pure state from i.i.d. standard complex Gaussians."""
    dims = _check_dims(dims)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    n = math.prod(dims)
    vec = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return PureState(dims, _frozen(vec / np.linalg.norm(vec)))


def random_real_pure(dims: Sequence[int], seed: int | np.random.Generator | None = None) -> PureState:
    """Uniformly random point on the real unit sphere."""
    dims = _check_dims(dims)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    vec = rng.standard_normal(math.prod(dims))
    return PureState(dims, _frozen(vec / np.linalg.norm(vec)))


def random_unitary(d: int, seed: int | np.random.Generator | None = None) -> np.ndarray:
    """Haar unitary via QR of a complex Ginibre matrix with the phase fix."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def apply_local(state: PureState, unitaries: Sequence[np.ndarray]) -> PureState:
    """Apply one operator per party (``U_0 ⊗ U_1 ⊗ ...``) to ``state``."""
    if len(unitaries) != state.n_parties:
        raise InvalidParameters(f"need {state.n_parties} local operators, got {len(unitaries)}")
    t = state.tensor()
    for k, u in enumerate(unitaries):
        u = np.asarray(u, dtype=np.complex128)
        if u.shape != (state.dims[k], state.dims[k]):
            raise InvalidParameters(f"operator for party {k} has shape {u.shape}")
        t = np.moveaxis(np.tensordot(u, t, axes=([1], [k])), 0, k)
    return PureState(state.dims, _frozen(t.ravel()))
