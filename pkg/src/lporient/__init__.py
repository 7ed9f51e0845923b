"""LP-orientations and Holt-Klee orientations of cubes and crosspolytopes."""

from .holtklee import HKVerdict, disjoint_monotone_paths, face_source_sink, is_acyclic, is_holt_klee
from .pairseq import (
    PairSequence,
    count_good,
    count_lp_orientations_bruteforce,
    eliminate,
    encode,
    is_good,
    is_lp_orientation,
    parse_sequence,
    sequence_to_orientation,
)
from .polytope import (
    CROSS,
    CUBE,
    CrossFace,
    CubeFace,
    Orientation,
    build_cross_edges,
    build_cube_edges,
    enumerate_faces,
    face_subdigraph,
    parse_orientation,
    topological_order,
)
from .realize import Realization, induced_sequence, realize, verify_crosspolytope

__version__ = "0.1.0"
