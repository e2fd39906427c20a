//! Every tolerance used by the verification suites, in one place, with its
//! justification. No magic numbers inside the checks.

/// Commutator residuals on polynomial coefficients. The check carries the
/// index k as a formal variable, so every float operation acts on small
/// dyadic rationals and is exact: the required residual is literal zero.
pub const COMMUTATOR_EXACT: f64 = 0.0;

/// Structural matrix identities (adjoint pairs, lowest-weight conditions)
/// that hold entry-by-entry by construction.
pub const MATRIX_STRUCTURAL_EXACT: f64 = 0.0;

/// Assembled-matrix values that combine a handful of rounded products
/// (diagonal entries, boundary commutators, ladder normalizations).
pub const MATRIX_ASSEMBLY: f64 = 1e-11;

/// Linearity of the generator action on generic (non-dyadic) data, where
/// distributivity of float products leaves a few ulps.
pub const LINEARITY_FLOAT: f64 = 1e-14;

/// Recurrence vs direct-sum evaluation of P_n up to n = 25 over the sample
/// box |z| <= 2, |w| <= 0.9; both routes are stable there, the gap is a
/// few ulps amplified by cancellation.
pub const PN_ROUTE_REL: f64 = 1e-10;

/// Hermite-function route of P_n for n <= 8 on moderate arguments.
pub const PN_HERMITE_REL: f64 = 1e-12;

/// Homogeneity P_n(az, a^2 w) = a^n P_n(z, w), relative.
pub const PN_HOMOGENEITY_REL: f64 = 1e-11;

/// Exact special lines of P_n (w = 0, z = 0) and basis-function spot
/// values made of a handful of float operations.
pub const SPOT_VALUE: f64 = 1e-13;

/// Truncated generating-function tail at 40 terms on |t| <= 1, |z| <= 1,
/// |w| <= 0.5 (coefficients decay factorially).
pub const GENERATING_TAIL: f64 = 1e-10;

/// Mehler and binomial partial sums on their stated domains.
pub const CLASSICAL_SUM: f64 = 1e-10;

/// Weight PDE residuals relative to rho: the closed-form partials cancel
/// to rounding.
pub const WEIGHT_PDE_REL: f64 = 1e-10;

/// Central finite differences at step 1e-5 carry O(step^2) truncation
/// error; 1e-6 relative is the meaningful comparison scale.
pub const WEIGHT_FD_REL: f64 = 1e-6;

/// Quadrature normalization (1,1) = 1 at orders (12, 24, 24).
pub const NORMALIZATION_ABS: f64 = 1e-12;

/// Orthonormality of the basis functions under the grid, n,m <= 4,
/// s,r <= 3.
pub const ORTHONORMALITY_ABS: f64 = 1e-8;

/// Radial moments against the Beta-function oracle.
pub const RADIAL_MOMENT_REL: f64 = 1e-12;

/// z-plane Gaussian moments against the Isserlis oracle.
pub const Z_MOMENT_REL: f64 = 1e-13;

/// Integral vs series scalar product on the P_n w^r basis (factorial
/// convention), and the factorial-discrepancy resolution value.
pub const INTEGRAL_VS_SERIES_ABS: f64 = 1e-8;

/// Adjointness pairs under the quadrature for degree <= 4 polynomials.
pub const ADJOINT_ABS: f64 = 1e-9;

/// Grid stability when all orders double beyond exactness.
pub const GRID_CONVERGENCE_ABS: f64 = 1e-12;

/// Closed form vs bilinear series of the kernel at N = S = 40 on
/// |z| <= 1, |w| <= 0.5.
pub const KERNEL_SERIES_REL: f64 = 1e-8;

/// Hermitian symmetry of the kernel on random pairs.
pub const KERNEL_SYMMETRY_REL: f64 = 1e-12;

/// Lower bound for the minimum Gram eigenvalue (dense eigensolve noise on
/// an exactly positive-semidefinite matrix).
pub const GRAM_MIN_EIG: f64 = -1e-8;

/// Group axioms (identity, inverse, associativity) on random elements.
pub const GROUP_AXIOM_ABS: f64 = 1e-10;

/// Multiplier cocycle residual, relative.
pub const COCYCLE_REL: f64 = 1e-9;

/// Point-map compatibility act(h1, act(h2, x)) = act(h1 h2, x).
pub const ACTION_COMPAT_ABS: f64 = 1e-10;

/// Kernel transformation law, relative.
pub const KERNEL_TRANSFORM_REL: f64 = 1e-9;

/// |J(h,x)|^2 against the kernel diagonal ratio, relative.
pub const MULTIPLIER_MODULUS_REL: f64 = 1e-9;

/// Principal-branch power vs repeated multiplication for 2k integer and
/// half-integer with Re kappa > 0.
pub const BRANCH_ABS: f64 = 1e-12;

/// Squeezed-vs-coherent state relation at N = 60, M = 40 over
/// |alpha| <= 0.5, |w| <= 0.3.
pub const PROP1_ABS: f64 = 1e-6;

/// Special cases of the state relation that reduce to single identities
/// (alpha = 0 disentangling on e_0; w = 0 Glauber).
pub const PROP1_ALPHA0_ABS: f64 = 1e-10;
pub const PROP1_W0_ABS: f64 = 1e-12;

/// Disentangled product vs single exponential squeeze on truncation-clean
/// columns at N = M = 40, |w| <= 0.3.
pub const DISENTANGLE_ABS: f64 = 1e-8;

/// Boundary-cleanliness threshold (L2 mass of the trailing two rows of a
/// column) defining where truncated operators represent the untruncated
/// ones; one order below DISENTANGLE_ABS keeps the comparison meaningful.
pub const CLEAN_COLUMN_MASS: f64 = 1e-9;

/// Displacement identities (inverse pair, exponential route, composition
/// phase) on clean columns.
pub const DISPLACEMENT_INV_ABS: f64 = 1e-10;
pub const DISPLACEMENT_EXP_ABS: f64 = 1e-9;
pub const DISPLACEMENT_PHASE_ABS: f64 = 1e-9;

/// Norm of squeezed states at comfortable truncation.
pub const STATE_NORM_ABS: f64 = 1e-8;

/// Truncated coherent-vector overlaps against the closed-form kernel at
/// N = M = 60 on |z| <= 0.5, |w| <= 0.3.
pub const OVERLAP_KERNEL_REL: f64 = 1e-7;

/// Coherent vector: closed-form coefficients vs terminating exponential
/// series (both exact up to rounding).
pub const COHERENT_ROUTES_ABS: f64 = 1e-13;
