"""Enhanced hypercube Q(n,k): topology, routing, and robustness certification.

The package builds provably disjoint, length-bounded path families between
any two vertices and certifies, by exhaustive search at desk scale, how
the network diameter degrades under vertex or edge faults.
"""

from .errors import DomainError, ResourceLimitError
from .metric import (
    HammingSplit,
    breakpoint_omega,
    diameter,
    distance,
    hamming_split,
    predicted_wide_diameter,
    shortest_path,
)
from .oracle import (
    FaultDiameterReport,
    VerificationResult,
    WideDiameterReport,
    bfs_distance,
    fault_diameter_exact,
    fault_diameter_witness,
    verify_path_set,
    vertex_connectivity,
    wide_diameter_exact,
)
from .pathgen import Guarantee, PathSet, disjoint_paths
from .symmetry import Automorphism, normalize_pair
from .topology import (
    EnhancedHypercube,
    apply_dimension,
    edge_class,
    format_vertex,
    neighbors,
    parse_vertex,
)

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "DomainError",
    "EnhancedHypercube",
    "FaultDiameterReport",
    "Guarantee",
    "HammingSplit",
    "PathSet",
    "ResourceLimitError",
    "VerificationResult",
    "WideDiameterReport",
    "apply_dimension",
    "bfs_distance",
    "breakpoint_omega",
    "diameter",
    "disjoint_paths",
    "distance",
    "edge_class",
    "fault_diameter_exact",
    "fault_diameter_witness",
    "format_vertex",
    "hamming_split",
    "neighbors",
    "normalize_pair",
    "parse_vertex",
    "predicted_wide_diameter",
    "shortest_path",
    "verify_path_set",
    "vertex_connectivity",
    "wide_diameter_exact",
]
