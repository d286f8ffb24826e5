"""Higher preprojective algebras from quivers with quadratic relations."""

from .catalog import beilinson_p2, free_algebra, polynomial_quiver
from .grading import (
    Finite,
    GradingVerdict,
    Inconclusive,
    Infinite,
    SearchLimitExceeded,
    WeightGrading,
    degree_zero_part,
    finiteness_check,
    gorenstein_parameter,
    grading_search,
    validate_grading,
)
from .koszul import koszul_basis, koszul_dims, koszul_space, top_form
from .linalg import RationalMatrix, Subspace, kernel, rref
from .mckay import (
    CyclicGroupSpec,
    air_grading,
    classify_group,
    mckay_presentation,
    skew_superpotential,
)
from .preprojective import (
    PreconditionError,
    PreprojectivePresentation,
    build_preprojective,
    preprojective_superpotential,
)
from .quadratic import (
    QuadraticPresentation,
    graded_dim,
    hilbert_table,
    is_zero_in_quotient,
    koszulity_probe,
    quadratic_dual,
    relation_span,
    same_relation_span,
)
from .quiver import Path, PathVector, Quiver, compose, enumerate_paths, find_cycles
from .superpotential import (
    Superpotential,
    check_superpotential,
    derivation_quotient,
    derive,
    shuffle_product,
    signed_cyclic_shift,
)
from .tensor import TensorMap, lift_grading_sum, tensor_presentation

__version__ = "0.1.0"
