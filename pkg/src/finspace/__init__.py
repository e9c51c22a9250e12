"""Computations with finite Alexandroff spaces (finite T0 posets).

Cores via beat-point dismantling, homotopy-equivalence decisions,
function-space topology checks, order-complex homology and brute-force
oracles, plus a small CLI (``finspace``).
"""

from .errors import (
    CycleError,
    DuplicateLabel,
    EmptyPoset,
    FinspaceError,
    GuardExceeded,
    HeightExceeded,
    NotABeatPoint,
    NotATopology,
    NotDownSet,
    ParseError,
    UnknownLabel,
    ValidationError,
)
from .generators import antichain, chain, crown, fence, khalimsky_interval, random_poset, spider
from .homotopy import (
    IsoWitness,
    are_homotopy_equivalent,
    are_isomorphic,
    brute_force_homotopy_equivalent,
    contains_crown,
    contractible_height1,
    is_contractible,
    unique_spath_condition,
)
from .maps import (
    FunctionPoset,
    MonotoneMap,
    compose,
    constant,
    enumerate_monotone,
    has_fpp,
    homotopy_classes,
    identity,
    is_homotopic,
    is_retraction,
    min_contraction_chain,
)
from .poset import (
    ClassifyRecord,
    PointedPoset,
    Poset,
    Preorder,
    classify,
    kolmogorov_quotient,
)
from .reduction import (
    DismantlingTrace,
    RetractionStep,
    beat_points,
    bulk_down,
    bulk_up,
    core,
    down_beat_points,
    is_core,
    remove_beat_point,
    standard_sequence,
    up_beat_points,
    verify_strong_deformation,
)
from .simplicial import (
    HomologyProfile,
    SimplicialComplex,
    homology,
    homology_invariant_under_reduction,
    is_gamma_point,
    link,
    order_complex,
    poset_homology,
)
from .topology import (
    SetFamily,
    alexandroff_topology,
    compact_open_subbasis,
    families_equal,
    generate_topology,
    hom_set_interval,
    is_compact_shape,
    minimal_nbhd,
    specialization_order,
)

__version__ = "0.1.0"
