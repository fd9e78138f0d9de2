"""orbiqc: exact cubic Gromov-Witten coefficients of the elliptic orbifold
projective lines (cone orders (3,3,3), (2,3,6) and (2,4,4)) by lattice-point
counting, cross-verified against eta quotients, Jacobi theta factorizations,
divisor-class formulas and a Frobenius consistency relation.

All arithmetic is exact: coefficients are rationals, exponents live on a
fractional grid dividing 1/24, and every series carries its truncation
boundary explicitly.
"""

from .arith import (
    DivisorClassCount,
    Factorization,
    coeff_F_closed,
    coeff_G_closed,
    coeff_f0_factored,
    divisor_class_counts,
    factorize,
)
from .gw import (
    AdmissibleTriple,
    CorrelatorKey,
    CorrelatorSeries,
    FrobeniusReport,
    InadmissibleKey,
    LiftingReport,
    admissible_triples,
    classical_term,
    correlator,
    correlator_by_name,
    frobenius_check,
    lifting_correspondence_check,
    potential_cubic_table,
)
from .insertions import Insertion, canonical_triple, twisted
from .lattice import (
    ClassificationFailure,
    CosetClass,
    LatticeKind,
    LatticePoint,
    classify_236,
    classify_244,
    classify_333,
    classify_366_rhombus,
    geometric_classify,
    geometric_insertions,
    norm,
    solutions_of_norm,
    unit_orbit,
)
from .modforms import (
    EtaQuotientSpec,
    GridMismatch,
    NonIntegralValuation,
    ResidueDecomposition,
    eta_quotient,
    eta_series,
    residue_decompose,
    theta2,
    theta3,
    theta_F,
    theta_G,
)
from .qseries import (
    QSeries,
    QueryBeyondTruncation,
    Rat,
    compare_series,
    qs_add,
    qs_coefficient,
    qs_mul,
    qs_scale,
    qs_substitute_power,
)

__version__ = "0.1.0"
