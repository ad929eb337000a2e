"""Betti numbers of type A Springer fibers from inversions of row-standard tableaux."""

from .errors import (
    BoundsError,
    CapExceededError,
    ChainError,
    CrossCheckError,
    NotApplicableError,
    ParseError,
    RhoValidationError,
    ShapeError,
    SpringerError,
    TableauError,
)
from .kappa import (
    PQStatistics,
    chi_T,
    decode,
    encode,
    inversion_distribution,
    pq_statistics,
)
from .kernels import BACKEND
from .moves import (
    MoveGraph,
    build_move_graph,
    delta,
    geodesic_to_standard,
    greedy_reduction,
    is_applicable,
)
from .partitions import Partition, conjugate, partitions_of, springer_dimension
from .poincare import (
    BettiTable,
    betti_numbers,
    chi_enumeration,
    chi_recursive,
    chi_sum,
    chi_tmin,
    closed_form,
)
from .poly import BettiPolynomial, q_factorial, q_int
from .rho import (
    RhoSequence,
    SkewTableau,
    jdt_rectify,
    relabel_component,
    rho_star,
    validate_rho,
)
from .tableau import (
    StandardTableau,
    Tableau,
    dominance_leq,
    enumerate_row_standard,
    enumerate_standard,
    inversions,
    n_inv,
    parse_tableau,
    prefix_composition_chain,
    standardize,
    t_min,
)

__version__ = "0.1.0"
