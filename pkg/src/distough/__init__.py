"""Distance spectral radius, toughness and the extremal join-of-cliques families."""

from __future__ import annotations

from .distance import diameter, distance_matrix, wiener2_index, wiener_index
from .errors import (
    CapabilityError,
    ConnectivityError,
    DistoughError,
    EmptyRemainderError,
    Graph6ParseError,
    GraphSizeError,
    MatrixValidityError,
    ParameterError,
    PartitionError,
    RootError,
    UndefinedToughnessError,
)
from .extremal import (
    FAMILIES,
    FamilyParams,
    NotEquitable,
    Partition,
    QuotientMatrix,
    build_family,
    detect_equitable,
    eval_P_Rdelta,
    eval_P_Rsdelta,
    eval_P_Rtaus,
    quotient_Rdelta,
    quotient_Rsdelta,
    quotient_Rtaus,
)
from .graph import (
    Graph,
    are_isomorphic,
    complete_graph,
    components_after_deletion,
    disjoint_union,
    format_graph6,
    join,
    parse_graph6,
)
from .inequalities import Grid, proof_inequality_suite
from .poly import Polynomial, largest_real_root
from .spectral import (
    SpectralResult,
    char_poly,
    rayleigh_lower_bound,
    spectral_radius,
    wiener2_lower_bound,
    wiener2_upper_bound,
)
from .toughness import ToughnessReport, classic_toughness, is_tau_tough, tau_toughness

__version__ = "0.1.0"
