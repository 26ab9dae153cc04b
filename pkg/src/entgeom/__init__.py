"""Entanglement of multipartite pure states from the geometry of post-measurement vectors."""

from .core import (
    DEFAULT_TOL,
    Bipartition,
    NamedState,
    PureState,
    Tolerances,
    all_bipartitions,
    apply_local,
    basis_state,
    bell,
    catalog,
    catalog_names,
    ghz,
    make_state,
    random_pure,
    random_real_pure,
    random_unitary,
    single_party_splits,
    w3,
)
from .entropy import (
    DensityMatrix,
    EntropyReport,
    araki_lieb_check,
    entanglement_entropy,
    entropy_report,
    partial_trace,
    von_neumann_entropy,
)
from .errors import *  # noqa: F401,F403
from .geometry import (
    ConcurrenceReport,
    PolygonReport,
    PostMeasurementFamily,
    concurrence_purity,
    concurrence_report,
    concurrence_wedge,
    is_separable,
    polygon_check,
    post_measurement_vectors,
    schmidt_coefficients,
    state_matrix,
    three_qubit_identity_residual,
    wedge_norm_sq,
)
from .kernels import BACKEND
from .parser import format_state, parse_ket_expr
from .teleport import (
    TeleportationTranscript,
    bell_basis,
    bell_measurement,
    correction_for_outcome,
    decoupling_check,
    teleport,
)

__version__ = "0.1.0"
