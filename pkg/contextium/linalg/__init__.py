"""Dense complex linear algebra for small Hilbert spaces."""

from .operators import (
    HermitianOperator,
    JointEigenspaceFamily,
    SpectralDecomposition,
    as_hermitian,
    as_matrix,
    check_commute,
    commutator,
    eigendecompose,
    fix_global_phase,
    hs_norm,
    joint_eigenprojectors,
    max_norm,
    op_norm,
    random_hermitian,
    random_projector,
    random_unitary,
    trace_norm,
)
from .schema import ComplexMatrix, complex_pairs, from_pairs
from .states import (
    DensityMatrix,
    density_from_vector,
    expectation,
    fidelity,
    maximally_mixed,
    normalize,
    purity,
    random_mixed,
    random_pure,
    variance,
)

__all__ = [
    "ComplexMatrix",
    "DensityMatrix",
    "HermitianOperator",
    "JointEigenspaceFamily",
    "SpectralDecomposition",
    "as_hermitian",
    "as_matrix",
    "check_commute",
    "commutator",
    "complex_pairs",
    "density_from_vector",
    "eigendecompose",
    "expectation",
    "fidelity",
    "fix_global_phase",
    "from_pairs",
    "hs_norm",
    "joint_eigenprojectors",
    "max_norm",
    "maximally_mixed",
    "normalize",
    "op_norm",
    "purity",
    "random_hermitian",
    "random_mixed",
    "random_projector",
    "random_pure",
    "random_unitary",
    "trace_norm",
    "variance",
]
