"""Cayley graphs on alternating groups: spectra, equitable partitions, and
isoperimetric bounds.

The three graph families live on the even permutations of {1..n}:

- AG_n:  generators (1,2,i) and (1,i,2), degree 2n-4;
- EAG_n: all 3-cycles through the point 1, degree (n-1)(n-2);
- CAG_n: all 3-cycles, degree 2*C(n,3).

The library builds these graphs, checks their equitable partitions against
closed-form divisor matrices, computes spectral gaps densely and
iteratively, and brackets their isoperimetric numbers.
"""

from .cayley import (
    CayleyGraph,
    GeneratingSet,
    Graph,
    VertexMap,
    build_cayley,
    build_family,
    custom_generating_set,
    export_edges,
    generating_set,
    induced_subgraph,
    is_connected,
    phi_isomorphism,
)
from .cheeger import (
    CutReport,
    boundary_size,
    brute_force_h,
    canonical_cut,
    cheeger_bounds,
    corollary_bounds,
    cut_ratio,
)
from .errors import ConvergenceError, OrderCapError
from .partition import (
    DivisorMatrix,
    EquitableWitness,
    VertexPartition,
    blocks_AG,
    blocks_Xij,
    check_equitable,
    divisor_closed_form,
    divisor_spectrum,
)
from .perm import (
    Permutation,
    compose,
    enumerate_alternating,
    from_cycle,
    identity,
    inverse,
    parse_cycles,
    rank,
    sign,
    unrank,
)
from .spectra import (
    SpectrumReport,
    dense_spectrum,
    integrality_check,
    lambda2_iterative,
    predicted,
    rayleigh,
    spectral_gap,
)
from .verify import VerificationReport, verify_family

__version__ = "0.1.0"

__all__ = [
    "CayleyGraph",
    "ConvergenceError",
    "CutReport",
    "DivisorMatrix",
    "EquitableWitness",
    "GeneratingSet",
    "Graph",
    "OrderCapError",
    "Permutation",
    "SpectrumReport",
    "VerificationReport",
    "VertexMap",
    "VertexPartition",
    "blocks_AG",
    "blocks_Xij",
    "boundary_size",
    "brute_force_h",
    "build_cayley",
    "build_family",
    "canonical_cut",
    "check_equitable",
    "cheeger_bounds",
    "compose",
    "corollary_bounds",
    "custom_generating_set",
    "cut_ratio",
    "dense_spectrum",
    "divisor_closed_form",
    "divisor_spectrum",
    "enumerate_alternating",
    "export_edges",
    "from_cycle",
    "generating_set",
    "identity",
    "induced_subgraph",
    "integrality_check",
    "inverse",
    "is_connected",
    "lambda2_iterative",
    "parse_cycles",
    "phi_isomorphism",
    "predicted",
    "rank",
    "rayleigh",
    "sign",
    "spectral_gap",
    "unrank",
    "verify_family",
]
