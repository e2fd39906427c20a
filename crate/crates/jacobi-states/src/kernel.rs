//! The reproducing kernel of the coherent-state Hilbert space, in closed
//! form and as a bilinear series over the orthonormal basis, together with
//! its transformation law under the group action.
//!
//! Convention: `kernel(k, x, x2)` is holomorphic in the coordinates of `x`
//! and antiholomorphic in those of `x2` (the second argument enters
//! conjugated). Gram matrices built this way are Hermitian.

use num_complex::Complex;

use crate::algebra::BargmannIndex;
use crate::error::{Error, Result};
use crate::group::{act, multiplier, JacobiElement};
use crate::linalg::{hermitian_min_eigenvalue, CMatrix};
use crate::phase::PhasePoint;
use crate::scalar::{tf, Real};
use crate::special::pn_over_sqrt_factorial_all;

/// Closed form of the kernel:
/// K(x, conj x2) = (1 - w conj(w2))^{-2k}
///     exp((2 conj(z2) z + z^2 conj(w2) + conj(z2)^2 w) / (2 (1 - w conj(w2)))).
///
/// At coincident arguments the value is real and >= 1, with equality only
/// at the origin.
pub fn kernel<T: Real>(k: BargmannIndex<T>, x: &PhasePoint<T>, x2: &PhasePoint<T>) -> Complex<T> {
    let zb = x2.z.conj();
    let wb = x2.w.conj();
    let one = Complex::new(T::one(), T::zero());
    let two = Complex::new(tf::<T>(2.0), T::zero());
    let denom = one - x.w * wb;
    let exponent = (two * zb * x.z + x.z * x.z * wb + zb * zb * x.w) / (two * denom);
    let two_k = Complex::new(tf::<T>(2.0) * k.k(), T::zero());
    (exponent - denom.ln() * two_k).exp()
}

/// Truncated bilinear expansion sum_{n<N} sum_{m<S} f_{nkm}(x) conj(f_{nkm}(x2)).
///
/// The basis functions factor as (P_n/sqrt n!)(z,w) times norm_m w^m, so the
/// double sum is computed as a product of two single sums. Converges to
/// [`kernel`] on compact subsets as N, S grow. Requires 2k - 1/2 > 0.
pub fn kernel_series<T: Real>(
    k: BargmannIndex<T>,
    x: &PhasePoint<T>,
    x2: &PhasePoint<T>,
    n_terms: u32,
    s_terms: u32,
) -> Result<Complex<T>> {
    let q = tf::<T>(2.0) * k.k() - tf::<T>(0.5);
    if q <= T::zero() {
        return Err(Error::GammaPole(q.to_f64().unwrap_or(f64::NAN)));
    }
    if n_terms == 0 || s_terms == 0 {
        return Err(Error::Domain("kernel_series needs N, S >= 1"));
    }

    let c1 = pn_over_sqrt_factorial_all(n_terms - 1, x.z, x.w);
    let c2 = pn_over_sqrt_factorial_all(n_terms - 1, x2.z, x2.w);
    let mut fock_sum = Complex::new(T::zero(), T::zero());
    for n in 0..n_terms as usize {
        fock_sum += c1[n] * c2[n].conj();
    }

    // sum_m Gamma(q+m)/(m! Gamma(q)) (w conj(w2))^m
    let ww = x.w * x2.w.conj();
    let mut ladder_sum = Complex::new(T::zero(), T::zero());
    let mut term = Complex::new(T::one(), T::zero());
    for m in 0..s_terms {
        ladder_sum += term;
        let ratio = (q + tf::<T>(m as f64)) / tf::<T>((m + 1) as f64);
        term = term * ww * Complex::new(ratio, T::zero());
    }

    Ok(fock_sum * ladder_sum)
}

/// Minimum eigenvalue of the Gram matrix G_ij = kernel(k, x_i, x_j); the
/// positivity witness of the kernel.
pub fn gram_min_eigenvalue<T: Real>(
    k: BargmannIndex<T>,
    points: &[PhasePoint<T>],
) -> Result<T> {
    let n = points.len();
    if n == 0 {
        return Err(Error::Domain("gram matrix needs at least one point"));
    }
    let g = CMatrix::from_fn(n, n, |i, j| kernel(k, &points[i], &points[j]));
    hermitian_min_eigenvalue(&g)
}

/// Relative residual of the transformation law
/// K(h x, h x2) = J(h, x) K(x, x2) conj(J(h, x2)).
///
/// Orientation note: in this crate's convention the kernel is holomorphic
/// in the first argument, so the multiplier attaches holomorphically there
/// and conjugated on the second; verified numerically (the reverse
/// attachment only agrees on the diagonal x = x2). The Heisenberg center
/// phase cancels between the two J factors, so the bare multiplier is the
/// right object here.
pub fn kernel_transform_residual<T: Real>(
    k: BargmannIndex<T>,
    h: &JacobiElement<T>,
    x: &PhasePoint<T>,
    x2: &PhasePoint<T>,
) -> T {
    let hx = act(h, x);
    let hx2 = act(h, x2);
    let lhs = kernel(k, &hx, &hx2);
    let rhs = multiplier(k, h, x) * kernel(k, x, x2) * multiplier(k, h, x2).conj();
    (lhs - rhs).norm() / lhs.norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::SU11Element;
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

    fn pt(zr: f64, zi: f64, wr: f64, wi: f64) -> PhasePoint<f64> {
        PhasePoint::from_parts(zr, zi, wr, wi).unwrap()
    }

    fn random_point(rng: &mut ChaCha8Rng, z_max: f64, w_max: f64) -> PhasePoint<f64> {
        loop {
            let p = PhasePoint::from_parts(
                rng.gen_range(-z_max..z_max),
                rng.gen_range(-z_max..z_max),
                rng.gen_range(-w_max..w_max),
                rng.gen_range(-w_max..w_max),
            );
            if let Ok(p) = p {
                if p.w.norm() < w_max {
                    return p;
                }
            }
        }
    }

    #[test]
    fn closed_form_spot_values() {
        let origin = PhasePoint::origin();
        assert!((kernel(k(0.8), &origin, &origin) - c(1.0, 0.0)).norm() < 1e-15);
        // x = x2 = (0, 0.5), k = 1: (1 - 0.25)^{-2} = 16/9
        let x = pt(0.0, 0.0, 0.5, 0.0);
        assert!((kernel(k(1.0), &x, &x) - c(16.0 / 9.0, 0.0)).norm() < 1e-14);
        // x = x2 = (1, 0): exponent 2/2 = 1
        let x = pt(1.0, 0.0, 0.0, 0.0);
        assert!((kernel(k(2.3), &x, &x) - c(1.0f64.exp(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn hermitian_symmetry_and_diagonal_positivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let kk = k(1.0);
        for _ in 0..100 {
            let x = random_point(&mut rng, 1.0, 0.8);
            let y = random_point(&mut rng, 1.0, 0.8);
            let kxy = kernel(kk, &x, &y);
            let kyx = kernel(kk, &y, &x);
            assert!((kxy - kyx.conj()).norm() <= 1e-12 * kxy.norm());
            let diag = kernel(kk, &x, &x);
            assert!(diag.im.abs() <= 1e-12 * diag.re);
            assert!(diag.re >= 1.0);
        }
        // equality at the origin only
        let near = pt(1e-3, 0.0, 0.0, 0.0);
        assert!(kernel(kk, &near, &near).re > 1.0);
    }

    #[test]
    fn reduces_to_the_two_factors() {
        let kk = k(1.4);
        // w = w2 = 0: exp(z conj(z2))
        let x = pt(0.7, -0.4, 0.0, 0.0);
        let y = pt(-0.3, 0.9, 0.0, 0.0);
        let expected = (x.z * y.z.conj()).exp();
        assert!((kernel(kk, &x, &y) - expected).norm() < 1e-14);
        // z = z2 = 0: (1 - w conj(w2))^{-2k}
        let x = pt(0.0, 0.0, 0.3, 0.2);
        let y = pt(0.0, 0.0, -0.1, 0.4);
        let base = c(1.0, 0.0) - x.w * y.w.conj();
        let expected = (-base.ln() * 2.8).exp();
        assert!((kernel(kk, &x, &y) - expected).norm() < 1e-14);
    }

    #[test]
    fn series_examples() {
        let kk = k(1.0);
        // only f_{0k0} survives at the origin
        let origin = PhasePoint::origin();
        let v = kernel_series(kk, &origin, &origin, 1, 1).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-15);
        let v = kernel_series(kk, &origin, &origin, 7, 9).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-15);

        // z = 0: odd-n terms vanish, the even-n tail sums to (1-|w|^2)^{-1/2}
        // and the ladder sum is binomial; together (1-|w|^2)^{-2k}
        let x = pt(0.0, 0.0, 0.4, 0.0);
        let v = kernel_series(kk, &x, &x, 60, 60).unwrap();
        let expected = (1.0 - 0.16f64).powi(-2);
        assert!((v - c(expected, 0.0)).norm() < 1e-8);

        // generic point at moderate truncation
        let x = pt(0.5, 0.0, 0.3, 0.0);
        let v = kernel_series(kk, &x, &x, 40, 40).unwrap();
        let closed = kernel(kk, &x, &x);
        assert!((v - closed).norm() <= 1e-8 * closed.norm());
    }

    #[test]
    fn series_needs_positive_q() {
        let x = pt(0.1, 0.0, 0.2, 0.0);
        assert!(kernel_series(k(0.25), &x, &x, 4, 4).is_err());
        assert!(kernel_series(k(0.26), &x, &x, 4, 4).is_ok());
    }

    #[test]
    fn series_partial_sums_monotone_on_the_diagonal() {
        let kk = k(1.0);
        let x = pt(0.6, 0.2, 0.3, -0.2);
        let mut prev = 0.0;
        for n in [1u32, 2, 4, 8, 16, 32] {
            let v = kernel_series(kk, &x, &x, n, n).unwrap().re;
            assert!(v >= prev - 1e-13, "partial sums must not decrease");
            prev = v;
        }
    }

    #[test]
    fn gram_matrices_are_positive() {
        let kk = k(1.0);
        // single point (0,0): 1x1 Gram = [1]
        let v = gram_min_eigenvalue(kk, &[PhasePoint::origin()]).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
        // two points
        let pts = [PhasePoint::origin(), pt(0.3, 0.0, 0.1, 0.0)];
        let v = gram_min_eigenvalue(kk, &pts).unwrap();
        assert!(v >= -1e-10);
        // ten random points
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let pts: Vec<_> = (0..10).map(|_| random_point(&mut rng, 1.0, 0.6)).collect();
        let v = gram_min_eigenvalue(kk, &pts).unwrap();
        assert!(v >= -1e-8, "min eigenvalue {v}");
    }

    #[test]
    fn transform_law() {
        let kk = k(1.0);
        let id = JacobiElement::<f64>::identity();
        let x = pt(0.2, 0.1, 0.3, 0.0);
        let y = pt(-0.4, 0.2, 0.1, 0.2);
        assert!(kernel_transform_residual(kk, &id, &x, &y) < 1e-15);

        // pure translation at the origin
        let h = JacobiElement::translation(c(1.0, 0.0), 0.0);
        let o = PhasePoint::origin();
        assert!(kernel_transform_residual(kk, &h, &o, &o) < 1e-10);

        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..100 {
            let b = c(rng.gen_range(-0.7..0.7), rng.gen_range(-0.7..0.7));
            let phase = rng.gen_range(0.0..std::f64::consts::TAU);
            let g = SU11Element::new(C64::from_polar((1.0 + b.norm_sqr()).sqrt(), phase), b)
                .unwrap();
            let h = JacobiElement::new(
                g,
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                rng.gen_range(-1.0..1.0),
            );
            let x = random_point(&mut rng, 1.0, 0.6);
            let y = random_point(&mut rng, 1.0, 0.6);
            assert!(kernel_transform_residual(kk, &h, &x, &y) < 1e-9);
        }
    }

    #[test]
    fn multiplier_modulus_matches_kernel_diagonal() {
        // |J(h,x)|^2 = K(hx, hx)/K(x, x), the diagonal of the transform law
        let kk = k(1.0);
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..100 {
            let b = c(rng.gen_range(-0.7..0.7), rng.gen_range(-0.7..0.7));
            let phase = rng.gen_range(0.0..std::f64::consts::TAU);
            let g = SU11Element::new(C64::from_polar((1.0 + b.norm_sqr()).sqrt(), phase), b)
                .unwrap();
            let h = JacobiElement::new(
                g,
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                rng.gen_range(-1.0..1.0),
            );
            let x = random_point(&mut rng, 1.0, 0.6);
            let j = multiplier(kk, &h, &x).norm_sqr();
            let hx = act(&h, &x);
            let ratio = kernel(kk, &hx, &hx).re / kernel(kk, &x, &x).re;
            assert!((j - ratio).abs() <= 1e-9 * ratio);
        }
    }
}
