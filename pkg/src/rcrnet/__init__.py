"""Generator and analyzer for recursive-cube-of-rings (RCR and RCR-II) networks."""

from .analysis import (
    INFINITE,
    bisection_upper_bound,
    connected_components,
    coverage_check,
    degree_distribution,
    diameter,
    diameter_bound,
    distance,
    exact_bisection,
    num_table,
    predicted_connected,
    verify_cut,
)
from .report import AnalysisReport, analyze
from .symmetry import is_automorphism, is_vertex_transitive, theorem9_transform
from .topology import (
    NetworkParams,
    NodeCoord,
    Topology,
    Variant,
    build,
    cube_bit_indices,
    format_coord,
    parse_coord,
)

__version__ = "0.1.0"
