"""Betti tables over the homogeneous coordinate ring of a rational normal curve.

Exact rational arithmetic throughout.  The main entry points:

- :mod:`rncbetti.tables`: Betti tables over S = k[x,y] and over B, pure diagrams, Hilbert numerators
- :mod:`rncbetti.cone`: the map phi and greedy pure decompositions
- :mod:`rncbetti.resolver`: Gröbner bases and minimal resolutions over S
- :mod:`rncbetti.veronese`: passing between B and S
- :mod:`rncbetti.totalcone`: the cone of total Betti vectors
"""

__version__ = "0.1.0"

from .cone import (
    Decomposition,
    PhiClass,
    greedy_decompose_b,
    greedy_decompose_s,
    phi,
    phi_representative,
    reconstruct,
    s_class,
)
from .errors import (
    BettiError,
    InfeasibleClass,
    NotFiniteColength,
    NotFiniteLength,
    NotInCone,
    ParseError,
    UnsupportedShape,
)
from .resolver import GradedIdeal, groebner_basis, is_finite_colength, minimal_resolution, random_forms
from .tableio import TableDocument, parse_table, render_betti
from .tables import (
    BBettiTable,
    PureTypeB,
    PureTypeS,
    SBettiTable,
    apply_redundancy,
    hilbert_numerator,
    hilbert_polynomial,
    linear_combination,
    pure_betti_b,
    pure_betti_s,
    pure_leq,
    tail_expand,
    validate_b_table,
)
from .totalcone import TotalVector, limit_vector, tot_membership, tot_rays, total_vector
from .veronese import veronese_substitute, veronese_transfer
