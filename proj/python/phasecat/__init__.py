"""Phase-space machinery for generalized Gaussian cat states.

Thin wrapper over the compiled ``_phasecat`` extension: symplectic linear
algebra, closed-form cat-state Wigner functions, Lindblad covariance
evolution, Kerr fractional-revival mixed cats and the Fock-space oracles.
"""

from ._phasecat import (  # noqa: F401
    ComplexGaussianTerm,
    GaussianSumState,
    PhasecatError,
    __version__,
    binary_kerr_wigner,
    cat_wigner,
    cayley,
    euler_decompose,
    evolve_damped_cat,
    fock_gaussian,
    fock_wigner,
    gauss_eval,
    interference_matrices,
    is_symplectic,
    kerr_cat,
    kerr_coefficients,
    normal_form,
    run_verify,
    signature,
    symplectic_form,
    wedge,
)
