"""Jacobian groups and spanning-tree counts of generalized Petersen graphs."""
from .graph import GPGraph, build_gp, circulant, laplacian
from .intmatrix import (
    AbelianGroup,
    IntegerMatrix,
    cokernel,
    det_bareiss,
    mat_pow,
    smith_normal_form,
)
from .jacobian import jacobian, jacobian_via_companion, jacobian_via_laplacian
from .poly import (
    LaurentPolynomial,
    LinearRecurrence,
    build_h,
    build_P,
    cheb_T,
    cheb_U,
    companion_matrix,
    recurrence_product,
    recurrence_terms,
    resultant,
)
from .trees import (
    QuadExtElement,
    tau,
    tau_k2_quadratic,
    tau_k2_recurrence,
    tau_k3_recurrence,
    tau_k4_recurrence,
    tau_kirchhoff,
    tau_prism,
    tau_theorem1,
)

__version__ = "0.1.0"
