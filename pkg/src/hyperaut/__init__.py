"""Hypergraph automorphism groups and graph isomorphism via ring determinants.

The pipeline: edges of a hypergraph index a square matrix over the ring
of partial injections; the determinant of that matrix *is* the
automorphism group (each determinant term is a partial whose extensions
are automorphisms), and the cross-graph variant is the isomorphism set.
Everything is desk-scale exact arithmetic, verified against brute force.
"""

from .errors import (
    ArityMismatch,
    ArityTooLarge,
    CapExceeded,
    DimensionMismatch,
    DimensionTooLarge,
    DuplicateDomain,
    DuplicateEdge,
    DuplicateImage,
    ExpansionTooLarge,
    GroundSetTooLarge,
    HyperautError,
    LengthMismatch,
    MixedDomainSizes,
    NotAGraph,
    NotAnAutomorphism,
    NotHomogeneous,
    ParseError,
    SizeMismatch,
    UnknownLabel,
)
from .groups import (
    AutResult,
    IsoResult,
    KernelInfo,
    aut,
    coset,
    edge_action,
    iso,
    kernel,
    quotient_embedding,
    radicals,
    stabilizer,
)
from .matrix import (
    Hypergraph,
    PolyMatrix,
    block_matrix,
    canonical_matrix,
    canonical_transformation,
    det_initiators,
    det_leibniz,
    edge_bracket,
    greedy_row_order,
    identity_matrix,
    initiator,
    matmul,
    scalar_mul,
    terminator,
    transpose,
)
from .oracle import OracleConfig, brute_aut, brute_iso, brute_join_min
from .partials import (
    EMPTY_PARTIAL,
    GroundSet,
    MAX_EXPANSION,
    Partial,
    ZERO,
    compose,
    enumerate_class,
    extend_to_permutation,
    identity_perm,
    invert,
    is_group,
    is_uniform,
    join,
    leq,
    make_partial,
    transversal,
)
from .ring import Polypartial, one, pp_add, pp_eval, pp_mul, pp_order, zero

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
