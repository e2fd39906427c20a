//! The weight rho(z, w) of the scalar product, the adjointness PDE system
//! that determines it, a Gauss quadrature realizing the measure
//! Lambda rho d2z d2w exactly on polynomials, and the series form of the
//! scalar product on the P_n w^r basis.
//!
//! Quadrature layout: for each w-node the z-plane carries a Gaussian rule
//! adapted to the quadratic form in the exponent of
//! F(z, w) = exp(-(2|z|^2 + z^2 conj(w) + conj(z)^2 w)/(2(1-|w|^2))).
//! Rotating z by half the phase of w diagonalizes the form to
//! xi^2/(1-|w|) + eta^2/(1+|w|), so scaled Gauss-Hermite nodes integrate it
//! exactly; the Jacobian sqrt(1-|w|^2) is folded into the radial weight
//! exponent. The w-disk carries a Gauss-Jacobi rule in x = r^2 with weight
//! (1-x)^{2k-5/2} and a uniform angular rule.

use std::collections::BTreeMap;

use num_complex::Complex;

use crate::algebra::{apply_generator, BargmannIndex, GeneratorName};
use crate::error::{Error, Result};
use crate::poly::BivarPoly;
use crate::quadrature::{gauss_hermite, gauss_jacobi01};
use crate::scalar::{tf, tu, Real};

/// Derived parameters of the weight: p = 2k - 3 and the normalization
/// Lambda = (4k - 3)/(2 pi^2). Lambda > 0 needs k > 3/4.
#[derive(Debug, Clone, Copy)]
pub struct WeightParams<T: Real> {
    pub k: BargmannIndex<T>,
    pub p: T,
    pub lambda: T,
}

impl<T: Real> WeightParams<T> {
    pub fn new(k: BargmannIndex<T>) -> Self {
        let two = tf::<T>(2.0);
        let p = two * k.k() - tf::<T>(3.0);
        let lambda = (tf::<T>(4.0) * k.k() - tf::<T>(3.0))
            / (two * tf::<T>(core::f64::consts::PI * core::f64::consts::PI));
        Self { k, p, lambda }
    }
}

/// The weight rho(z, w) = (1-|w|^2)^{2k-3} F(z, w); real and positive on
/// the domain.
pub fn weight<T: Real>(k: BargmannIndex<T>, z: Complex<T>, w: Complex<T>) -> Result<T> {
    let nw = w.norm_sqr();
    if nw >= T::one() {
        return Err(Error::OutsideDisk(nw.sqrt().to_f64().unwrap_or(f64::NAN)));
    }
    let params = WeightParams::new(k);
    let one_minus = T::one() - nw;
    // 2|z|^2 + z^2 conj(w) + conj(z)^2 w = 2(|z|^2 + Re(z^2 conj(w)))
    let exponent = -(z.norm_sqr() + (z * z * w.conj()).re) / one_minus;
    Ok(one_minus.powf(params.p) * exponent.exp())
}

/// Closed-form Wirtinger partials (d rho/d w, d rho/d z). The conjugate
/// partials follow from rho being real: d_zbar rho = conj(d_z rho) and
/// likewise for w.
pub fn weight_partials<T: Real>(
    k: BargmannIndex<T>,
    z: Complex<T>,
    w: Complex<T>,
) -> Result<(Complex<T>, Complex<T>)> {
    let rho = weight(k, z, w)?;
    let params = WeightParams::new(k);
    let one = Complex::new(T::one(), T::zero());
    let two = Complex::new(tf::<T>(2.0), T::zero());
    let rho_c = Complex::new(rho, T::zero());
    let p = Complex::new(params.p, T::zero());
    let wb = w.conj();
    let zb = z.conj();
    let denom = one - w * wb;
    // d rho/d w = -(2 p wb (1-w wb) + zb^2 + 2 wb |z|^2 + wb^2 z^2)
    //             / (2 (1-w wb)^2) * rho
    let num_w = two * p * wb * denom + zb * zb + two * wb * Complex::new(z.norm_sqr(), T::zero())
        + wb * wb * z * z;
    let dw = -num_w / (two * denom * denom) * rho_c;
    // d rho/d z = -(zb + z wb)/(1-|w|^2) * rho
    let dz = -(zb + z * wb) / denom * rho_c;
    Ok((dw, dz))
}

/// Residuals of the three adjointness conditions, evaluated with the
/// closed-form partials:
///
///   r1 = (w d_z - d_zbar) rho - z rho
///   r2 = (w^2 d_w - d_wbar) rho - (z^2/2 + p w - z w d_z) rho
///   r3 = 2 (w d_w - wb d_wbar) rho - (zb d_zbar - z d_z) rho
pub fn pde_residuals<T: Real>(
    k: BargmannIndex<T>,
    z: Complex<T>,
    w: Complex<T>,
) -> Result<(Complex<T>, Complex<T>, Complex<T>)> {
    let rho = Complex::new(weight(k, z, w)?, T::zero());
    let (dw, dz) = weight_partials(k, z, w)?;
    let dzbar = dz.conj();
    let dwbar = dw.conj();
    let params = WeightParams::new(k);
    let half = Complex::new(tf::<T>(0.5), T::zero());
    let p = Complex::new(params.p, T::zero());

    let r1 = w * dz - dzbar - z * rho;
    let r2 = w * w * dw - dwbar - (z * z * half + p * w) * rho + z * w * dz;
    let two = Complex::new(tf::<T>(2.0), T::zero());
    let r3 = two * (w * dw - w.conj() * dwbar) - (z.conj() * dzbar - z * dz);
    Ok((r1, r2, r3))
}

/// One evaluation point of the product rule with its total weight
/// (measure normalization, weight function and Jacobians folded in).
#[derive(Debug, Clone, Copy)]
pub struct QuadNode<T: Real> {
    pub z: Complex<T>,
    pub w: Complex<T>,
    pub weight: T,
}

/// Warning emitted when an integrand exceeds the exactness degrees of a
/// grid. The value is still computed; it is just no longer exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeOverflow {
    pub axis: &'static str,
    pub degree: u32,
    pub max: u32,
}

/// Gauss-type grid realizing the measure Lambda rho d2z d2w on C x D_1.
#[derive(Debug, Clone)]
pub struct Quadrature<T: Real> {
    pub k: BargmannIndex<T>,
    pub n_z: usize,
    pub n_r: usize,
    pub n_theta: usize,
    nodes: Vec<QuadNode<T>>,
}

impl<T: Real> Quadrature<T> {
    /// Build the grid. Requires k > 3/4 so that the normalization is
    /// positive and the radial weight exponent 2k - 5/2 stays integrable.
    pub fn build(k: BargmannIndex<T>, n_z: usize, n_r: usize, n_theta: usize) -> Result<Self> {
        if k.k() <= tf::<T>(0.75) {
            return Err(Error::ConvergenceGuard(k.k().to_f64().unwrap_or(f64::NAN)));
        }
        assert!(n_z >= 1 && n_r >= 1 && n_theta >= 1);
        let params = WeightParams::new(k);
        let alpha = params.p + tf::<T>(0.5); // 2k - 5/2 > -1
        let (x_nodes, x_weights) = gauss_jacobi01(n_r, alpha)?;
        let (xi, gh) = gauss_hermite::<T>(n_z)?;

        let pi = tf::<T>(core::f64::consts::PI);
        let w_prefactor = params.lambda * pi / tu::<T>(n_theta);
        let mut nodes = Vec::with_capacity(n_r * n_theta * n_z * n_z);
        for (xc, wc) in x_nodes.iter().zip(x_weights.iter()) {
            let r = xc.sqrt();
            let sig_minus = (T::one() - r).sqrt();
            let sig_plus = (T::one() + r).sqrt();
            for d in 0..n_theta {
                let theta = tf::<T>(2.0) * pi * tu::<T>(d) / tu::<T>(n_theta);
                let w = Complex::from_polar(r, theta);
                let half_phase = Complex::from_polar(T::one(), theta / tf::<T>(2.0));
                let w_weight = w_prefactor * *wc;
                for (xa, wa) in xi.iter().zip(gh.iter()) {
                    for (xb, wb) in xi.iter().zip(gh.iter()) {
                        let zeta = Complex::new(sig_minus * *xa, sig_plus * *xb);
                        nodes.push(QuadNode {
                            z: half_phase * zeta,
                            w,
                            weight: w_weight * *wa * *wb,
                        });
                    }
                }
            }
        }
        Ok(Self {
            k,
            n_z,
            n_r,
            n_theta,
            nodes,
        })
    }

    pub fn nodes(&self) -> &[QuadNode<T>] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrate an arbitrary function of (z, w) against the measure.
    pub fn integrate(&self, mut f: impl FnMut(Complex<T>, Complex<T>) -> Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for node in &self.nodes {
            acc += f(node.z, node.w) * Complex::new(node.weight, T::zero());
        }
        acc
    }

    /// Evaluate a polynomial on every node (cached projections make
    /// repeated pairings cheap).
    pub fn project(&self, f: &BivarPoly<T>) -> Vec<Complex<T>> {
        self.nodes.iter().map(|n| f.eval(n.z, n.w)).collect()
    }

    /// Weighted pairing sum_i W_i conj(fa_i) fb_i of two projections.
    pub fn pairing(&self, fa: &[Complex<T>], fb: &[Complex<T>]) -> Complex<T> {
        debug_assert_eq!(fa.len(), self.nodes.len());
        debug_assert_eq!(fb.len(), self.nodes.len());
        let mut acc = Complex::new(T::zero(), T::zero());
        for ((a, b), node) in fa.iter().zip(fb.iter()).zip(self.nodes.iter()) {
            acc += a.conj() * *b * Complex::new(node.weight, T::zero());
        }
        acc
    }

    /// The scalar product (f, g) = Lambda int conj(f) g rho; conjugate
    /// linear in the first argument.
    pub fn inner_product(&self, f: &BivarPoly<T>, g: &BivarPoly<T>) -> Complex<T> {
        self.pairing(&self.project(f), &self.project(g))
    }

    /// Exactness degree in (z, zbar) total degree of conj(f) g.
    pub fn exact_z_degree(&self) -> u32 {
        (2 * self.n_z - 1) as u32
    }

    /// Exactness bound for the (w, wbar) total degree of the integrand,
    /// including the w-harmonics generated by the z-integral.
    pub fn exact_w_degree(&self) -> u32 {
        let radial = (4 * self.n_r - 2) as u32;
        let angular = (self.n_theta - 1) as u32;
        radial.min(angular)
    }

    /// Degree bookkeeping for a product integrand conj(f) g.
    pub fn degree_warnings(&self, f: &BivarPoly<T>, g: &BivarPoly<T>) -> Vec<DegreeOverflow> {
        let mut warnings = Vec::new();
        let dz = f.degree_z() + g.degree_z();
        if dz > self.exact_z_degree() {
            warnings.push(DegreeOverflow {
                axis: "z",
                degree: dz,
                max: self.exact_z_degree(),
            });
        }
        // the z-integral of a z-degree-d monomial block contributes w-powers
        // up to d/2 on top of the explicit w-degrees
        let dw = f.degree_w() + g.degree_w() + dz.div_ceil(2);
        if dw > self.exact_w_degree() {
            warnings.push(DegreeOverflow {
                axis: "w",
                degree: dw,
                max: self.exact_w_degree(),
            });
        }
        warnings
    }

    /// Scalar product together with any degree-overflow warnings.
    pub fn inner_product_checked(
        &self,
        f: &BivarPoly<T>,
        g: &BivarPoly<T>,
    ) -> (Complex<T>, Vec<DegreeOverflow>) {
        (self.inner_product(f, g), self.degree_warnings(f, g))
    }
}

/// Residuals of the three adjointness pairs measured with the quadrature:
/// |(a f, g) - (f, a+ g)|, |(K- f, g) - (f, K+ g)|, |(K0 f, g) - (f, K0 g)|.
pub fn adjoint_residuals<T: Real>(
    k: BargmannIndex<T>,
    f: &BivarPoly<T>,
    g: &BivarPoly<T>,
    grid: &Quadrature<T>,
) -> (T, T, T) {
    let pair = |left: &BivarPoly<T>, right: &BivarPoly<T>| grid.inner_product(left, right);
    let r_a = (pair(&apply_generator(GeneratorName::A, k, f), g)
        - pair(f, &apply_generator(GeneratorName::ADag, k, g)))
    .norm();
    let r_k = (pair(&apply_generator(GeneratorName::KMinus, k, f), g)
        - pair(f, &apply_generator(GeneratorName::KPlus, k, g)))
    .norm();
    let r_0 = (pair(&apply_generator(GeneratorName::KZero, k, f), g)
        - pair(f, &apply_generator(GeneratorName::KZero, k, g)))
    .norm();
    (r_a, r_k, r_0)
}

/// Finite expansion over the P_n w^r basis, the inputs of the series form
/// of the scalar product.
#[derive(Debug, Clone, PartialEq)]
pub struct PnwExpansion<T: Real> {
    terms: BTreeMap<(u32, u32), Complex<T>>,
}

impl<T: Real> PnwExpansion<T> {
    pub fn new() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// The single basis element P_n w^r.
    pub fn basis(n: u32, r: u32) -> Self {
        let mut e = Self::new();
        e.add_term(n, r, Complex::new(T::one(), T::zero()));
        e
    }

    pub fn add_term(&mut self, n: u32, r: u32, c: Complex<T>) {
        if c.re == T::zero() && c.im == T::zero() {
            return;
        }
        let slot = self
            .terms
            .entry((n, r))
            .or_insert_with(|| Complex::new(T::zero(), T::zero()));
        *slot += c;
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Complex<T>)> {
        self.terms.iter()
    }

    /// Expand into an ordinary polynomial in (z, w).
    pub fn to_bivar_poly(&self) -> BivarPoly<T> {
        let mut out = BivarPoly::zero();
        for (&(n, r), &c) in self.terms.iter() {
            let w_pow = BivarPoly::monomial(0, r, Complex::new(T::one(), T::zero()));
            out = out.add(&crate::special::pn_poly(n).mul(&w_pow).scale(c));
        }
        out
    }
}

impl<T: Real> Default for PnwExpansion<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// Normalization convention of the series scalar product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesNorm {
    /// The diagonal factor r! Gamma(2k-1/2)/Gamma(r+2k-1/2) alone.
    AsWritten,
    /// The same factor times n!, the convention that matches the
    /// quadrature scalar product and the basis normalization.
    FactorialWeighted,
}

/// Diagonal factor r! Gamma(q)/Gamma(r+q) with q = 2k - 1/2, as the finite
/// product prod_{t<r} (t+1)/(q+t). Valid (and possibly negative) for any
/// real k with q not a nonpositive integer.
pub fn series_diagonal_factor<T: Real>(k: T, r: u32) -> Result<T> {
    let q = tf::<T>(2.0) * k - tf::<T>(0.5);
    if q <= T::zero() && q.fract() == T::zero() {
        return Err(Error::GammaPole(q.to_f64().unwrap_or(f64::NAN)));
    }
    let mut factor = T::one();
    for t in 0..r {
        let qt = q + tu::<T>(t as usize);
        if qt == T::zero() {
            return Err(Error::GammaPole(q.to_f64().unwrap_or(f64::NAN)));
        }
        factor = factor * tu::<T>(t as usize + 1) / qt;
    }
    Ok(factor)
}

/// Series scalar product sum_{n,r} conj(a_nr) b_nr r! Gamma(2k-1/2)/Gamma(r+2k-1/2),
/// optionally carrying the extra n! of the quadrature convention. Defined
/// for real k (including k <= 3/4 where the integral form diverges); for
/// 2k - 1/2 < 0 some diagonal factors are negative and the pairing is
/// indefinite.
pub fn inner_product_series_with<T: Real>(
    f: &PnwExpansion<T>,
    g: &PnwExpansion<T>,
    k: T,
    norm: SeriesNorm,
) -> Result<Complex<T>> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for (&(n, r), &a) in f.terms() {
        for (&(m, s), &b) in g.terms() {
            if n != m || r != s {
                continue;
            }
            let mut factor = series_diagonal_factor(k, r)?;
            if norm == SeriesNorm::FactorialWeighted {
                let mut fact = T::one();
                for t in 1..=n {
                    fact *= tu::<T>(t as usize);
                }
                factor *= fact;
            }
            acc += a.conj() * b * Complex::new(factor, T::zero());
        }
    }
    Ok(acc)
}

/// The series scalar product in the verbatim (no n!) convention.
pub fn inner_product_series<T: Real>(
    f: &PnwExpansion<T>,
    g: &PnwExpansion<T>,
    k: T,
) -> Result<Complex<T>> {
    inner_product_series_with(f, g, k, SeriesNorm::AsWritten)
}

/// Independent reference computations used to validate the closed forms
/// and the grid.
pub mod reference {
    use super::*;

    /// Wirtinger partials of the weight by central finite differences:
    /// d_z = (d_x - i d_y)/2 on the real coordinates of z (and likewise w).
    /// Returns (d rho/d w, d rho/d z).
    pub fn weight_partials_fd<T: Real>(
        k: BargmannIndex<T>,
        z: Complex<T>,
        w: Complex<T>,
        step: T,
    ) -> Result<(Complex<T>, Complex<T>)> {
        let h = Complex::new(step, T::zero());
        let ih = Complex::new(T::zero(), step);
        let two = tf::<T>(2.0);
        let dx_z = (weight(k, z + h, w)? - weight(k, z - h, w)?) / (two * step);
        let dy_z = (weight(k, z + ih, w)? - weight(k, z - ih, w)?) / (two * step);
        let dz = Complex::new(dx_z / two, -dy_z / two);
        let dx_w = (weight(k, z, w + h)? - weight(k, z, w - h)?) / (two * step);
        let dy_w = (weight(k, z, w + ih)? - weight(k, z, w - ih)?) / (two * step);
        let dw = Complex::new(dx_w / two, -dy_w / two);
        Ok((dw, dz))
    }

    /// Exact integral of z^a zbar^b exp(-Q_w(z)) over the plane, by
    /// Isserlis moments of the 2D Gaussian with covariance
    /// [[ (1-u)/2, -v/2 ], [ -v/2, (1+u)/2 ]], w = u + iv. Includes the
    /// normalization pi sqrt(1-|w|^2).
    pub fn gaussian_z_moment<T: Real>(a: u32, b: u32, w: Complex<T>) -> Complex<T> {
        let u = w.re;
        let v = w.im;
        let half = tf::<T>(0.5);
        let sxx = (T::one() - u) * half;
        let syy = (T::one() + u) * half;
        let sxy = -v * half;

        // E[x^p y^q] for the centered Gaussian, by the moment recursion
        let max = (a + b) as usize;
        let mut table = vec![vec![T::zero(); max + 2]; max + 2];
        table[0][0] = T::one();
        for total in 1..=max {
            for p in 0..=total {
                let q = total - p;
                let val = if p >= 1 {
                    let mut acc = T::zero();
                    if p >= 2 {
                        acc += tu::<T>(p - 1) * sxx * table[p - 2][q];
                    }
                    if q >= 1 {
                        acc += tu::<T>(q) * sxy * table[p - 1][q - 1];
                    }
                    acc
                } else {
                    let mut acc = T::zero();
                    if q >= 2 {
                        acc += tu::<T>(q - 1) * syy * table[p][q - 2];
                    }
                    acc
                };
                table[p][q] = val;
            }
        }

        // expand z^a zbar^b = (x+iy)^a (x-iy)^b
        let i_unit = Complex::new(T::zero(), T::one());
        let mut moment = Complex::new(T::zero(), T::zero());
        let binom = |n: u32, k: u32| -> T {
            let mut c = T::one();
            for t in 0..k {
                c = c * tu::<T>((n - t) as usize) / tu::<T>(t as usize + 1);
            }
            c
        };
        for i in 0..=a {
            for j in 0..=b {
                let coeff = Complex::new(binom(a, i) * binom(b, j), T::zero())
                    * i_unit.powu(a - i)
                    * (-i_unit).powu(b - j);
                let p = (i + j) as usize;
                let q = ((a - i) + (b - j)) as usize;
                moment += coeff * Complex::new(table[p][q], T::zero());
            }
        }

        let norm = tf::<T>(core::f64::consts::PI) * (T::one() - w.norm_sqr()).sqrt();
        moment * Complex::new(norm, T::zero())
    }

    /// Radial moment oracle: (P_0 w^r, P_0 w^r) = B(r+1, 2k-3/2)/B(1, 2k-3/2),
    /// computed through log-Gamma. Needs k > 3/4.
    pub fn radial_moment_oracle<T: Real>(k: BargmannIndex<T>, r: u32) -> T {
        use crate::special::ln_gamma;
        let y = tf::<T>(2.0) * k.k() - tf::<T>(1.5);
        let ln_b = |x: T| ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y);
        (ln_b(tu::<T>(r as usize + 1)) - ln_b(T::one())).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C64;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn k(v: f64) -> BargmannIndex<f64> {
        BargmannIndex::new(v).unwrap()
    }

    fn random_disk(rng: &mut ChaCha8Rng, max: f64) -> C64 {
        loop {
            let w = c(rng.gen_range(-max..max), rng.gen_range(-max..max));
            if w.norm() < max {
                return w;
            }
        }
    }

    #[test]
    fn weight_spot_values() {
        assert!((weight(k(1.3), c(0.0, 0.0), c(0.0, 0.0)).unwrap() - 1.0).abs() < 1e-15);
        // k = 1, z = 1, w = 0: e^{-1}
        assert!(
            (weight(k(1.0), c(1.0, 0.0), c(0.0, 0.0)).unwrap() - (-1.0f64).exp()).abs() < 1e-15
        );
        // k = 1, z = 0, w = 0.5: (0.75)^{-1}
        assert!((weight(k(1.0), c(0.0, 0.0), c(0.5, 0.0)).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!(weight(k(1.0), c(0.0, 0.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn weight_limit_cases_are_exact() {
        // w = 0: pure Gaussian e^{-|z|^2}
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let z = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let rho = weight(k(1.7), z, c(0.0, 0.0)).unwrap();
            assert!((rho - (-z.norm_sqr()).exp()).abs() <= 1e-15 * rho.max(1e-300));
            // z = 0: pure power (1-|w|^2)^{2k-3}
            let w = random_disk(&mut rng, 0.95);
            let rho = weight(k(1.7), c(0.0, 0.0), w).unwrap();
            let expected = (1.0 - w.norm_sqr()).powf(2.0 * 1.7 - 3.0);
            assert!((rho - expected).abs() <= 1e-15 * expected);
        }
    }

    #[test]
    fn weight_is_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let z = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let w = random_disk(&mut rng, 0.9);
            assert!(weight(k(0.9), z, w).unwrap() > 0.0);
        }
    }

    #[test]
    fn partials_match_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for kv in [0.9, 1.0, 2.0] {
            for _ in 0..30 {
                let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                let w = random_disk(&mut rng, 0.7);
                let (dw, dz) = weight_partials(k(kv), z, w).unwrap();
                let (dw_fd, dz_fd) =
                    reference::weight_partials_fd(k(kv), z, w, 1e-5).unwrap();
                assert!(
                    (dw - dw_fd).norm() <= 1e-6 * dw.norm().max(1e-6),
                    "dw {dw} vs {dw_fd}"
                );
                assert!(
                    (dz - dz_fd).norm() <= 1e-6 * dz.norm().max(1e-6),
                    "dz {dz} vs {dz_fd}"
                );
            }
        }
        // spot value: k = 1, z = 1, w = 0 gives d rho/dz = -e^{-1}
        let (_, dz) = weight_partials(k(1.0), c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!((dz - c(-(-1.0f64).exp(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn pde_residuals_vanish() {
        // origin: every term vanishes
        let (r1, r2, r3) = pde_residuals(k(1.2), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!(r1.norm() < 1e-15 && r2.norm() < 1e-15 && r3.norm() < 1e-15);

        // the spot from the calculation notes
        let rho = weight(k(1.0), c(0.7, 0.2), c(0.3, -0.1)).unwrap();
        let (r1, r2, r3) = pde_residuals(k(1.0), c(0.7, 0.2), c(0.3, -0.1)).unwrap();
        assert!(r1.norm() < 1e-12 * rho);
        assert!(r2.norm() < 1e-12 * rho);
        assert!(r3.norm() < 1e-12 * rho);

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for kv in [0.9, 1.0, 2.0, 3.25] {
            for _ in 0..250 {
                let z = c(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
                let w = random_disk(&mut rng, 0.85);
                let rho = weight(k(kv), z, w).unwrap();
                let (r1, r2, r3) = pde_residuals(k(kv), z, w).unwrap();
                for r in [r1, r2, r3] {
                    assert!(r.norm() <= 1e-10 * rho, "k={kv} z={z} w={w}");
                }
            }
        }
    }

    #[test]
    fn grid_guard_rejects_small_k() {
        assert!(matches!(
            Quadrature::build(k(0.75), 4, 4, 4),
            Err(Error::ConvergenceGuard(_))
        ));
        assert!(matches!(
            Quadrature::build(k(0.6), 4, 4, 4),
            Err(Error::ConvergenceGuard(_))
        ));
        assert!(Quadrature::build(k(0.76), 4, 4, 4).is_ok());
    }

    #[test]
    fn normalization_is_one() {
        let grid = Quadrature::build(k(1.0), 8, 16, 16).unwrap();
        let one = BivarPoly::one();
        let v = grid.inner_product(&one, &one);
        assert!((v - c(1.0, 0.0)).norm() < 1e-12, "got {v}");
        // and for other k
        for kv in [0.9, 2.0, 3.25] {
            let grid = Quadrature::build(k(kv), 6, 12, 8).unwrap();
            let v = grid.inner_product(&one, &one);
            assert!((v - c(1.0, 0.0)).norm() < 1e-12, "k={kv}: {v}");
        }
    }

    #[test]
    fn radial_moment_matches_beta_oracle() {
        // (w^r, w^r) = B(r+1, 2k-3/2)/B(1, 2k-3/2); at k = 1, r = 1 this is 2/3
        let grid = Quadrature::build(k(1.0), 8, 16, 16).unwrap();
        for r in 0..=3u32 {
            let wr = BivarPoly::monomial(0, r, c(1.0, 0.0));
            let v = grid.inner_product(&wr, &wr);
            let oracle = reference::radial_moment_oracle(k(1.0), r);
            assert!((v - c(oracle, 0.0)).norm() < 1e-12, "r={r}: {v} vs {oracle}");
        }
        assert!((reference::radial_moment_oracle(k(1.0), 1) - 2.0 / 3.0).abs() < 1e-13);
        // matches the series diagonal factor as well
        for r in 0..=3u32 {
            let a = reference::radial_moment_oracle(k(1.3), r);
            let b = series_diagonal_factor(1.3f64, r).unwrap();
            assert!((a - b).abs() <= 1e-12 * b.abs());
        }
    }

    #[test]
    fn z_monomials_match_gaussian_moment_oracle() {
        // fix a few w values and compare the z-subrule against Isserlis
        // moments; the grid integrates conj(f) g with f = z^b..., here we
        // integrate the bare monomial z^a zbar^b F(z, w) d2z via a grid
        // with the w-part stripped off by direct summation over a z-slice.
        let n_z = 8;
        let (xi, gh) = gauss_hermite::<f64>(n_z).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let w = random_disk(&mut rng, 0.8);
            let r = w.norm();
            let phase = C64::from_polar(1.0, w.arg() / 2.0);
            let jac = (1.0 - r * r).sqrt();
            for a in 0..=3u32 {
                for b in 0..=3u32 {
                    let mut acc = c(0.0, 0.0);
                    for (xa, wa) in xi.iter().zip(gh.iter()) {
                        for (xb, wb) in xi.iter().zip(gh.iter()) {
                            let z = phase
                                * c((1.0 - r).sqrt() * xa, (1.0 + r).sqrt() * xb);
                            acc += z.powu(a) * z.conj().powu(b) * (wa * wb * jac);
                        }
                    }
                    let oracle = reference::gaussian_z_moment(a, b, w);
                    let scale = oracle.norm().max(1.0);
                    assert!(
                        (acc - oracle).norm() <= 1e-13 * scale,
                        "a={a} b={b} w={w}: {acc} vs {oracle}"
                    );
                }
            }
        }
    }

    #[test]
    fn orthonormality_of_the_basis() {
        use crate::special::basis_poly;
        let kk = k(1.0);
        let grid = Quadrature::build(kk, 10, 16, 16).unwrap();
        let mut polys = Vec::new();
        for n in 0..=3u32 {
            for s in 0..=2u32 {
                polys.push(((n, s), grid.project(&basis_poly(n, kk, s).unwrap())));
            }
        }
        for (idx_a, pa) in &polys {
            for (idx_b, pb) in &polys {
                let v = grid.pairing(pa, pb);
                let expected = if idx_a == idx_b { 1.0 } else { 0.0 };
                assert!(
                    (v - c(expected, 0.0)).norm() < 1e-9,
                    "({idx_a:?}, {idx_b:?}) -> {v}"
                );
            }
        }
    }

    #[test]
    fn conjugate_symmetry_and_sesquilinearity() {
        let kk = k(1.0);
        let grid = Quadrature::build(kk, 8, 12, 12).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let mut f = BivarPoly::zero();
            let mut g = BivarPoly::zero();
            for i in 0..=2u32 {
                for j in 0..=2u32 {
                    f.add_term(i, j, c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
                    g.add_term(i, j, c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
                }
            }
            let fg = grid.inner_product(&f, &g);
            let gf = grid.inner_product(&g, &f);
            assert!((fg - gf.conj()).norm() < 1e-12);
            // sesquilinearity against a random scalar
            let s = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let left = grid.inner_product(&f.scale(s), &g);
            assert!((left - s.conj() * fg).norm() <= 1e-12 * fg.norm().max(1.0));
        }
    }

    #[test]
    fn grid_convergence_once_exact() {
        let kk = k(1.0);
        use crate::special::basis_poly;
        let f = basis_poly(3, kk, 2).unwrap();
        let g = basis_poly(3, kk, 2).unwrap();
        let grid1 = Quadrature::build(kk, 8, 12, 12).unwrap();
        let grid2 = Quadrature::build(kk, 16, 24, 24).unwrap();
        let v1 = grid1.inner_product(&f, &g);
        let v2 = grid2.inner_product(&f, &g);
        assert!((v1 - v2).norm() < 1e-12, "{v1} vs {v2}");
    }

    #[test]
    fn degree_warnings_fire_only_on_overflow() {
        let kk = k(1.0);
        let grid = Quadrature::build(kk, 4, 6, 6).unwrap();
        let low = BivarPoly::monomial(2, 1, c(1.0, 0.0));
        assert!(grid.degree_warnings(&low, &low).is_empty());
        let high_z = BivarPoly::monomial(6, 0, c(1.0, 0.0));
        let warnings = grid.degree_warnings(&high_z, &high_z);
        assert!(warnings.iter().any(|w| w.axis == "z"));
        let high_w = BivarPoly::monomial(0, 4, c(1.0, 0.0));
        let warnings = grid.degree_warnings(&high_w, &high_w);
        assert!(warnings.iter().any(|w| w.axis == "w"));
    }

    #[test]
    fn series_product_examples() {
        // (P_0 w^0, P_0 w^0) = 1 for any convention
        let e00 = PnwExpansion::<f64>::basis(0, 0);
        let v = inner_product_series(&e00, &e00, 0.4).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-15);
        // (P_0 w, P_0 w) at k = 0.4: 1/(2k - 1/2) = 10/3
        let e01 = PnwExpansion::<f64>::basis(0, 1);
        let v = inner_product_series(&e01, &e01, 0.4).unwrap();
        assert!((v - c(10.0 / 3.0, 0.0)).norm() < 1e-13);
        // k = 0: Gamma(-1/2)/Gamma(1/2) = -2, an indefinite direction
        let v = inner_product_series(&e01, &e01, 0.0).unwrap();
        assert!((v - c(-2.0, 0.0)).norm() < 1e-14);
        // pole at 2k - 1/2 = 0
        assert!(matches!(
            inner_product_series(&e01, &e01, 0.25),
            Err(Error::GammaPole(_))
        ));
        // off-diagonal pairs vanish
        let v = inner_product_series(&e00, &e01, 1.0).unwrap();
        assert!(v.norm() == 0.0);
    }

    #[test]
    fn series_matches_quadrature_with_the_factorial_convention() {
        let kk = k(1.0);
        let grid = Quadrature::build(kk, 10, 16, 16).unwrap();
        for n in 0..=3u32 {
            for r in 0..=2u32 {
                let e = PnwExpansion::<f64>::basis(n, r);
                let poly = e.to_bivar_poly();
                let q = grid.inner_product(&poly, &poly);
                let s_fact =
                    inner_product_series_with(&e, &e, 1.0, SeriesNorm::FactorialWeighted)
                        .unwrap();
                assert!(
                    (q - s_fact).norm() <= 1e-8 * s_fact.norm().max(1.0),
                    "n={n} r={r}: quad {q} vs series {s_fact}"
                );
            }
        }
        // and the n! really is required: P_2 against itself is 2, not 1
        let e2 = PnwExpansion::<f64>::basis(2, 0);
        let poly = e2.to_bivar_poly();
        let q = grid.inner_product(&poly, &poly);
        assert!((q - c(2.0, 0.0)).norm() < 1e-8);
        let verbatim = inner_product_series(&e2, &e2, 1.0).unwrap();
        assert!((verbatim - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn adjoint_residuals_small_on_polynomials() {
        let kk = k(1.0);
        let grid = Quadrature::build(kk, 10, 16, 16).unwrap();
        // f = g = 1: parity makes everything vanish to grid accuracy
        let one = BivarPoly::one();
        let (ra, rk, r0) = adjoint_residuals(kk, &one, &one, &grid);
        assert!(ra < 1e-13 && rk < 1e-13 && r0 < 1e-13);

        // f = z, g = z^2
        let f = BivarPoly::monomial(1, 0, c(1.0, 0.0));
        let g = BivarPoly::monomial(2, 0, c(1.0, 0.0));
        let (ra, rk, r0) = adjoint_residuals(kk, &f, &g, &grid);
        assert!(ra < 1e-10 && rk < 1e-10 && r0 < 1e-10);

        // random degree <= 4 polynomials at two k values
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for kv in [1.0, 2.0] {
            let kk = k(kv);
            let grid = Quadrature::build(kk, 10, 16, 16).unwrap();
            for _ in 0..10 {
                let mut f = BivarPoly::zero();
                let mut g = BivarPoly::zero();
                for i in 0..=2u32 {
                    for j in 0..=2u32 {
                        if i + j <= 4 {
                            f.add_term(
                                i,
                                j,
                                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                            );
                            g.add_term(
                                i,
                                j,
                                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                            );
                        }
                    }
                }
                let (ra, rk, r0) = adjoint_residuals(kk, &f, &g, &grid);
                assert!(ra < 1e-9 && rk < 1e-9 && r0 < 1e-9, "k={kv}");
            }
        }
    }
}
