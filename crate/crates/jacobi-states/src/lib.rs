//! Coherent and squeezed states of the one-mode Jacobi group.
//!
//! The Jacobi group is the semidirect product of the Heisenberg-Weyl group
//! with SU(1,1); its coherent states over C x D_1 (D_1 the unit disk) are
//! the squeezed states of quantum optics. This crate provides the working
//! apparatus around them:
//!
//! - [`algebra`]: the generators as differential operators on bivariate
//!   polynomials, with machine-checkable commutation relations, and their
//!   truncated matrix realization on Fock x ladder space;
//! - [`special`]: the polynomials P_n(z, w), their Hermite form, the basis
//!   functions f_{nks}, the generating function, Mehler and binomial sums;
//! - [`kernel`]: the reproducing kernel in closed form, its bilinear series
//!   expansion, Gram positivity, and its transformation law;
//! - [`measure`]: the weight rho(z, w), the adjointness PDE system it
//!   satisfies, and a Gauss quadrature that integrates polynomials exactly
//!   against the measure, plus the series form of the scalar product;
//! - [`group`]: SU(1,1) and Jacobi group arithmetic, the action on the
//!   domain, the holomorphic multiplier with its cocycle;
//! - [`states`]: displacement and squeeze operators, coherent and squeezed
//!   vectors on the truncated space, overlaps.
//!
//! Everything is generic over the real scalar type through [`Real`]
//! (num-traits); `f64` aliases are exported at the crate root.
//!
//! ```
//! use jacobi_states::{BargmannIndex, PhasePoint, C64};
//! use jacobi_states::kernel::kernel;
//! use jacobi_states::special::pn;
//!
//! // P_2(z, w) = z^2 + w
//! let p = pn(2, C64::new(0.0, 1.0), C64::new(1.0, 0.0));
//! assert!(p.norm() < 1e-15);
//!
//! // the kernel at coincident arguments is real and at least 1
//! let k = BargmannIndex::new(1.0).unwrap();
//! let x = PhasePoint::new(C64::new(0.3, 0.1), C64::new(0.4, 0.0)).unwrap();
//! let diag = kernel(k, &x, &x);
//! assert!(diag.im.abs() < 1e-14 && diag.re >= 1.0);
//! ```

pub mod algebra;
pub mod error;
pub mod group;
pub mod kernel;
pub mod linalg;
pub mod measure;
pub mod phase;
pub mod poly;
pub mod quadrature;
pub mod special;
pub mod states;

mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

pub use algebra::{BargmannIndex, GeneratorName, OperatorSet};
pub use group::{JacobiElement, SU11Element};
pub use linalg::CMatrix;
pub use measure::{Quadrature, WeightParams};
pub use phase::PhasePoint;
pub use poly::BivarPoly;
pub use states::{FockState, OperatorMatrix};

/// Complex scalar over `f64`.
pub type C64 = num_complex::Complex<f64>;
/// Complex scalar over `f32`.
pub type C32 = num_complex::Complex<f32>;

pub type PhasePoint64 = PhasePoint<f64>;
pub type BivarPoly64 = BivarPoly<f64>;
pub type BargmannIndex64 = BargmannIndex<f64>;
pub type OperatorSet64 = OperatorSet<f64>;
pub type SU11Element64 = SU11Element<f64>;
pub type JacobiElement64 = JacobiElement<f64>;
pub type Quadrature64 = Quadrature<f64>;
pub type FockState64 = FockState<f64>;
pub type OperatorMatrix64 = OperatorMatrix<f64>;
pub type CMatrix64 = CMatrix<f64>;
