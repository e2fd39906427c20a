use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A point x = (z, w) of the phase space C x D_1, where D_1 is the open
/// unit disk |w| < 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint<T: Real> {
    pub z: Complex<T>,
    pub w: Complex<T>,
}

impl<T: Real> PhasePoint<T> {
    /// Construct a point, enforcing |w| < 1.
    pub fn new(z: Complex<T>, w: Complex<T>) -> Result<Self> {
        if w.norm() < T::one() {
            Ok(Self { z, w })
        } else {
            Err(Error::OutsideDisk(w.norm().to_f64().unwrap_or(f64::NAN)))
        }
    }

    /// Construct without the disk check.
    ///
    /// Only meaningful for quantities that are entire in w (the polynomials
    /// P_n); everything involving the kernel, weight or group action needs
    /// |w| < 1.
    pub fn new_unchecked(z: Complex<T>, w: Complex<T>) -> Self {
        Self { z, w }
    }

    /// Build from real coordinates (Re z, Im z, Re w, Im w).
    pub fn from_parts(zr: T, zi: T, wr: T, wi: T) -> Result<Self> {
        Self::new(Complex::new(zr, zi), Complex::new(wr, wi))
    }

    pub fn origin() -> Self {
        Self {
            z: Complex::new(T::zero(), T::zero()),
            w: Complex::new(T::zero(), T::zero()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = PhasePoint<f64>;

    #[test]
    fn disk_membership_enforced() {
        assert!(P::from_parts(3.0, 0.0, 0.5, 0.4).is_ok());
        assert!(matches!(
            P::from_parts(0.0, 0.0, 1.0, 0.0),
            Err(Error::OutsideDisk(_))
        ));
        assert!(P::from_parts(0.0, 0.0, 0.8, 0.7).is_err());
    }
}
