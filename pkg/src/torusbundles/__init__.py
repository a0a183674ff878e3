"""Exact-arithmetic classification of symplectic torus bundles over genus >= 2 surfaces."""

from .bundle import (
    Lattice,
    ParseError,
    SL2Z,
    TorusBundle,
    ValidationError,
    conjugate_bundle,
    fixed_sublattice,
    parse_bundle,
    relation_sublattice,
    serialize_bundle,
)
from .classify import (
    ClassificationReport,
    CrossChecks,
    InternalInconsistencyError,
    ProductH1Class,
    ProductH2Class,
    RationaleEntry,
    cup_product_annihilator,
    fiber_class_nonzero,
    invariant_symplectic_exists,
    is_symplectic,
    thurston_norm_product,
)
from .exactla import (
    AbelianGroup,
    IntMatrix,
    binomial,
    cokernel_structure,
    determinant,
    integer_kernel,
    rank,
    snf,
    xgcd,
)
from .homology import (
    NotFlatError,
    Trichotomy,
    betti,
    h1_circle_bundle,
    h1_total_space,
    has_fiber_circle_action,
    trichotomy,
)
from .spectral import (
    E2Ranks,
    e2_ranks,
    fiber_class_via_spectral,
    fox_boundary_matrices,
    surface_relator,
)
from .swcalc import (
    ResidueSet,
    SweepCounterexample,
    SweepReport,
    SWPolynomial,
    UnsupportedParityError,
    cyclic_subgroup,
    fold_product_poly,
    parity_sweep,
    product_sw_coefficients,
    sw4_zero_closed,
    sw4_zero_coset,
    sw4_zero_nonpullback,
    sw_poly_circle_bundle,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "ClassificationReport",
    "CrossChecks",
    "E2Ranks",
    "IntMatrix",
    "InternalInconsistencyError",
    "Lattice",
    "NotFlatError",
    "ParseError",
    "ProductH1Class",
    "ProductH2Class",
    "RationaleEntry",
    "ResidueSet",
    "SL2Z",
    "SWPolynomial",
    "SweepCounterexample",
    "SweepReport",
    "TorusBundle",
    "Trichotomy",
    "UnsupportedParityError",
    "ValidationError",
    "betti",
    "binomial",
    "cokernel_structure",
    "conjugate_bundle",
    "cup_product_annihilator",
    "cyclic_subgroup",
    "determinant",
    "e2_ranks",
    "fiber_class_nonzero",
    "fiber_class_via_spectral",
    "fixed_sublattice",
    "fold_product_poly",
    "fox_boundary_matrices",
    "h1_circle_bundle",
    "h1_total_space",
    "has_fiber_circle_action",
    "integer_kernel",
    "invariant_symplectic_exists",
    "is_symplectic",
    "parity_sweep",
    "parse_bundle",
    "product_sw_coefficients",
    "rank",
    "relation_sublattice",
    "serialize_bundle",
    "snf",
    "surface_relator",
    "sw4_zero_closed",
    "sw4_zero_coset",
    "sw4_zero_nonpullback",
    "sw_poly_circle_bundle",
    "thurston_norm_product",
    "trichotomy",
    "xgcd",
]
