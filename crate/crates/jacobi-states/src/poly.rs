//! Sparse bivariate polynomials in (z, w) with complex coefficients.
//!
//! These are the carrier space of the differential realization of the
//! Jacobi algebra. All arithmetic is plain coefficient arithmetic: sums and
//! products of stored coefficients, no quadrature and no evaluation error.

use std::collections::BTreeMap;

use num_complex::Complex;

use crate::scalar::Real;

/// A finite polynomial sum_{i,j} c_{ij} z^i w^j, stored sparsely.
///
/// Invariant: no exact-zero coefficients are stored (entries whose real and
/// imaginary parts are both literal 0.0 are dropped on insertion).
#[derive(Debug, Clone, PartialEq)]
pub struct BivarPoly<T: Real> {
    terms: BTreeMap<(u32, u32), Complex<T>>,
}

impl<T: Real> Default for BivarPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Real> BivarPoly<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Complex::new(T::one(), T::zero()))
    }

    pub fn constant(c: Complex<T>) -> Self {
        Self::monomial(0, 0, c)
    }

    /// c z^i w^j
    pub fn monomial(deg_z: u32, deg_w: u32, c: Complex<T>) -> Self {
        let mut p = Self::zero();
        p.add_term(deg_z, deg_w, c);
        p
    }

    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Complex<T>)>,
    {
        let mut p = Self::zero();
        for ((i, j), c) in iter {
            p.add_term(i, j, c);
        }
        p
    }

    #[inline]
    fn is_exact_zero(c: Complex<T>) -> bool {
        c.re == T::zero() && c.im == T::zero()
    }

    /// Accumulate c into the (i, j) slot, dropping the slot if the sum is
    /// exactly zero.
    pub fn add_term(&mut self, deg_z: u32, deg_w: u32, c: Complex<T>) {
        if Self::is_exact_zero(c) {
            return;
        }
        let slot = self.terms.entry((deg_z, deg_w)).or_insert_with(|| {
            Complex::new(T::zero(), T::zero())
        });
        *slot += c;
        if Self::is_exact_zero(*slot) {
            self.terms.remove(&(deg_z, deg_w));
        }
    }

    pub fn coeff(&self, deg_z: u32, deg_w: u32) -> Complex<T> {
        self.terms
            .get(&(deg_z, deg_w))
            .copied()
            .unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Complex<T>)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_z(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn degree_w(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), &c) in rhs.terms.iter() {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        let minus_one = Complex::new(-T::one(), T::zero());
        for (&(i, j), &c) in rhs.terms.iter() {
            out.add_term(i, j, c * minus_one);
        }
        out
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in self.terms.iter() {
            out.add_term(i, j, c * s);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), &c1) in self.terms.iter() {
            for (&(i2, j2), &c2) in rhs.terms.iter() {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    /// Evaluate at (z, w).
    pub fn eval(&self, z: Complex<T>, w: Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for (&(i, j), &c) in self.terms.iter() {
            acc += c * z.powu(i) * w.powu(j);
        }
        acc
    }

    /// Max absolute value over all stored coefficients; 0 for the zero
    /// polynomial.
    pub fn max_abs_coeff(&self) -> T {
        self.terms
            .values()
            .map(|c| c.norm())
            .fold(T::zero(), |a, b| if b > a { b } else { a })
    }

    /// Polynomial with every coefficient conjugated (so that
    /// conj(p)(z, w) = conj(p(conj z, conj w))).
    pub fn conj_coeffs(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in self.terms.iter() {
            out.add_term(i, j, c.conj());
        }
        out
    }
}
