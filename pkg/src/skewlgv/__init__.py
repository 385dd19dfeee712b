"""Exact verification of the h/e determinant duality on skew-diagram
lattices, with brute-force path-counting oracles for every claimed count."""

from .poly import (
    MissingVariableError,
    Polynomial,
    VarRange,
    e_poly,
    h_poly,
    newton_residual,
    qbinom,
    substitute,
)
from .detring import (
    DimensionGuardError,
    NonSquareMatrixError,
    PolyMatrix,
    SizeMismatchError,
    det,
    det_naive,
    int_det,
    jacobi_check,
    matmul,
)
from .shape import (
    IndexSelection,
    Partition,
    ShapeError,
    SkewShape,
    is_row_connected,
    line_runs,
    make_skew,
    near_staircase_check,
    parallelogram_clause,
    parallelogram_hypothesis,
    rectangle,
    staircase,
)
from .lattice import (
    Edge,
    Lattice,
    Node,
    build_L,
    build_R,
    render,
    with_line_extreme_endpoints,
    with_selection,
)
from .connectors import (
    ComplementError,
    Connector,
    EnumerationCapError,
    Path,
    complementary,
    complementary_inverse,
    connector_sum,
    enumerate_connectors,
    enumerate_paths,
    intersection_nodes,
    weighted_path_count,
)
from .identity import (
    VerificationReport,
    build_e_matrix,
    build_full_E,
    build_full_H,
    build_h_matrix,
    run_sweep,
    verify_aitken,
    verify_binomial,
    verify_main,
    verify_qbinomial,
    verify_sympoly_binomial,
)

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "VarRange",
    "h_poly",
    "e_poly",
    "qbinom",
    "newton_residual",
    "substitute",
    "MissingVariableError",
    "PolyMatrix",
    "det",
    "det_naive",
    "int_det",
    "jacobi_check",
    "matmul",
    "NonSquareMatrixError",
    "DimensionGuardError",
    "SizeMismatchError",
    "Partition",
    "SkewShape",
    "IndexSelection",
    "ShapeError",
    "make_skew",
    "near_staircase_check",
    "parallelogram_clause",
    "parallelogram_hypothesis",
    "is_row_connected",
    "line_runs",
    "staircase",
    "rectangle",
    "Node",
    "Edge",
    "Lattice",
    "build_L",
    "build_R",
    "render",
    "with_selection",
    "with_line_extreme_endpoints",
    "Path",
    "Connector",
    "enumerate_paths",
    "weighted_path_count",
    "enumerate_connectors",
    "connector_sum",
    "complementary",
    "complementary_inverse",
    "intersection_nodes",
    "EnumerationCapError",
    "ComplementError",
    "VerificationReport",
    "build_h_matrix",
    "build_e_matrix",
    "build_full_H",
    "build_full_E",
    "verify_main",
    "verify_binomial",
    "verify_qbinomial",
    "verify_sympoly_binomial",
    "verify_aitken",
    "run_sweep",
]
