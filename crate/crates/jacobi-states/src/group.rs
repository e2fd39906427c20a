//! SU(1,1) and Jacobi group arithmetic, the action on C x D_1, and the
//! holomorphic multiplier.
//!
//! Conventions, fixed once and verified by the cocycle tests:
//!
//! - group elements act on points from the left:
//!   act(h1, act(h2, x)) = act(compose(h1, h2), x);
//! - the multiplier J(h, x) = kappa^{2k} exp(lambda_1) closes under
//!   composition only after the phase of the Heisenberg center is included:
//!   J_c(h, x) = J(h, x) exp(-i t) satisfies
//!   J_c(h1 h2, x) = J_c(h1, h2 x) J_c(h2, x).
//!   The bare J is what enters the kernel transformation law, where the
//!   center phase cancels between J and its conjugate.

use num_complex::Complex;

use crate::algebra::BargmannIndex;
use crate::error::{Error, Result};
use crate::phase::PhasePoint;
use crate::scalar::{tf, Real};

/// Element (a, b) of SU(1,1), the matrix [[a, b], [conj b, conj a]] with
/// |a|^2 - |b|^2 = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SU11Element<T: Real> {
    a: Complex<T>,
    b: Complex<T>,
}

impl<T: Real> SU11Element<T> {
    /// Build from (a, b), renormalizing so that |a|^2 - |b|^2 = 1. Fails if
    /// the defect is not positive.
    pub fn new(a: Complex<T>, b: Complex<T>) -> Result<Self> {
        let det = a.norm_sqr() - b.norm_sqr();
        if det <= T::zero() || !det.is_finite() {
            return Err(Error::Domain("|a|^2 - |b|^2 must be positive for SU(1,1)"));
        }
        let scale = Complex::new(T::one() / det.sqrt(), T::zero());
        Ok(Self {
            a: a * scale,
            b: b * scale,
        })
    }

    pub fn identity() -> Self {
        Self {
            a: Complex::new(T::one(), T::zero()),
            b: Complex::new(T::zero(), T::zero()),
        }
    }

    #[inline]
    pub fn a(&self) -> Complex<T> {
        self.a
    }

    #[inline]
    pub fn b(&self) -> Complex<T> {
        self.b
    }

    /// Matrix product restricted to the (a, b) parametrization.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            a: self.a * rhs.a + self.b * rhs.b.conj(),
            b: self.a * rhs.b + self.b * rhs.a.conj(),
        }
    }

    /// Group inverse (conj a, -b).
    pub fn inverse(&self) -> Self {
        Self {
            a: self.a.conj(),
            b: -self.b,
        }
    }

    /// The antiholomorphic-linear map g^{-1} . alpha = conj(a) alpha - b conj(alpha)
    /// that appears in the semidirect composition law.
    pub fn inv_act_alpha(&self, alpha: Complex<T>) -> Complex<T> {
        self.a.conj() * alpha - self.b * alpha.conj()
    }

    /// Defect of the determinant constraint, |a|^2 - |b|^2 - 1.
    pub fn constraint_defect(&self) -> T {
        self.a.norm_sqr() - self.b.norm_sqr() - T::one()
    }
}

/// Element (g, alpha, t) of the Jacobi group, g in SU(1,1), alpha the
/// Heisenberg translation, t the center coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiElement<T: Real> {
    pub g: SU11Element<T>,
    pub alpha: Complex<T>,
    pub t: T,
}

impl<T: Real> JacobiElement<T> {
    pub fn new(g: SU11Element<T>, alpha: Complex<T>, t: T) -> Self {
        Self { g, alpha, t }
    }

    pub fn identity() -> Self {
        Self {
            g: SU11Element::identity(),
            alpha: Complex::new(T::zero(), T::zero()),
            t: T::zero(),
        }
    }

    /// Pure Heisenberg translation (g = e).
    pub fn translation(alpha: Complex<T>, t: T) -> Self {
        Self {
            g: SU11Element::identity(),
            alpha,
            t,
        }
    }

    /// Pure SU(1,1) element.
    pub fn rotation(g: SU11Element<T>) -> Self {
        Self {
            g,
            alpha: Complex::new(T::zero(), T::zero()),
            t: T::zero(),
        }
    }
}

/// Composition law of the semidirect product:
/// (g1, a1, t1) o (g2, a2, t2) =
///   (g1 g2, g2^{-1}.a1 + a2, t1 + t2 + Im(g2^{-1}.a1 conj(a2))).
pub fn compose<T: Real>(h1: &JacobiElement<T>, h2: &JacobiElement<T>) -> JacobiElement<T> {
    let moved = h2.g.inv_act_alpha(h1.alpha);
    JacobiElement {
        g: h1.g.mul(&h2.g),
        alpha: moved + h2.alpha,
        t: h1.t + h2.t + (moved * h2.alpha.conj()).im,
    }
}

/// Group inverse with respect to [`compose`].
pub fn inverse<T: Real>(h: &JacobiElement<T>) -> JacobiElement<T> {
    // alpha' = -(a alpha + b conj(alpha)) undoes the translation after the
    // SU(1,1) part is inverted; the center simply negates.
    let g_inv = h.g.inverse();
    let alpha_inv = -(h.g.a() * h.alpha + h.g.b() * h.alpha.conj());
    JacobiElement {
        g: g_inv,
        alpha: alpha_inv,
        t: -h.t,
    }
}

/// The intermediate quantities of the action and multiplier:
/// kappa = conj(a) + w conj(b), gamma = z + alpha - conj(alpha) w,
/// 2 lambda_1 = (conj(b)/kappa) gamma^2 + conj(alpha)(z + gamma).
#[derive(Debug, Clone, Copy)]
pub struct ActionData<T: Real> {
    pub kappa: Complex<T>,
    pub gamma: Complex<T>,
    pub lambda1: Complex<T>,
}

impl<T: Real> ActionData<T> {
    pub fn new(h: &JacobiElement<T>, x: &PhasePoint<T>) -> Self {
        let kappa = h.g.a().conj() + x.w * h.g.b().conj();
        let gamma = x.z + h.alpha - h.alpha.conj() * x.w;
        let half = Complex::new(tf::<T>(0.5), T::zero());
        let lambda1 = half * ((h.g.b().conj() / kappa) * gamma * gamma + h.alpha.conj() * (x.z + gamma));
        Self {
            kappa,
            gamma,
            lambda1,
        }
    }
}

/// The point map (z, w) -> (gamma/kappa, (a w + b)/kappa). Preserves the
/// disk since |a| > |b|.
pub fn act<T: Real>(h: &JacobiElement<T>, x: &PhasePoint<T>) -> PhasePoint<T> {
    let d = ActionData::new(h, x);
    PhasePoint::new_unchecked(d.gamma / d.kappa, (h.g.a() * x.w + h.g.b()) / d.kappa)
}

/// The holomorphic multiplier J(h, x) = kappa^{2k} exp(lambda_1), with the
/// principal branch of kappa^{2k} for non-integer 2k.
pub fn multiplier<T: Real>(
    k: BargmannIndex<T>,
    h: &JacobiElement<T>,
    x: &PhasePoint<T>,
) -> Complex<T> {
    let d = ActionData::new(h, x);
    let two_k = Complex::new(tf::<T>(2.0) * k.k(), T::zero());
    (d.kappa.ln() * two_k + d.lambda1).exp()
}

/// Multiplier with the Heisenberg center phase attached,
/// J_c(h, x) = J(h, x) exp(-i t). This is the version that satisfies the
/// plain cocycle identity under [`compose`].
pub fn multiplier_centered<T: Real>(
    k: BargmannIndex<T>,
    h: &JacobiElement<T>,
    x: &PhasePoint<T>,
) -> Complex<T> {
    multiplier(k, h, x) * Complex::new(T::zero(), -h.t).exp()
}

/// Residuals of the cocycle identity and of action compatibility.
#[derive(Debug, Clone, Copy)]
pub struct CocycleResidual<T: Real> {
    /// |J_c(h1 h2, x) - J_c(h1, h2 x) J_c(h2, x)| / |J_c(h1 h2, x)|
    pub multiplier: T,
    /// max-coordinate distance between act(h1, act(h2, x)) and act(h1 h2, x)
    pub action: T,
}

pub fn cocycle_residual<T: Real>(
    k: BargmannIndex<T>,
    h1: &JacobiElement<T>,
    h2: &JacobiElement<T>,
    x: &PhasePoint<T>,
) -> CocycleResidual<T> {
    let h12 = compose(h1, h2);
    let x2 = act(h2, x);
    let lhs = multiplier_centered(k, &h12, x);
    let rhs = multiplier_centered(k, h1, &x2) * multiplier_centered(k, h2, x);
    let mult = (lhs - rhs).norm() / lhs.norm();

    let via_pair = act(h1, &x2);
    let via_product = act(&h12, x);
    let dz = (via_pair.z - via_product.z).norm();
    let dw = (via_pair.w - via_product.w).norm();
    CocycleResidual {
        multiplier: mult,
        action: if dz > dw { dz } else { dw },
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

    fn random_su11(rng: &mut ChaCha8Rng, b_max: f64) -> SU11Element<f64> {
        let b = c(rng.gen_range(-b_max..b_max), rng.gen_range(-b_max..b_max));
        let phase = rng.gen_range(0.0..std::f64::consts::TAU);
        let a_mag = (1.0 + b.norm_sqr()).sqrt();
        SU11Element::new(C64::from_polar(a_mag, phase), b).unwrap()
    }

    fn random_jacobi(rng: &mut ChaCha8Rng, b_max: f64, alpha_max: f64) -> JacobiElement<f64> {
        JacobiElement::new(
            random_su11(rng, b_max),
            c(
                rng.gen_range(-alpha_max..alpha_max),
                rng.gen_range(-alpha_max..alpha_max),
            ),
            rng.gen_range(-1.0..1.0),
        )
    }

    fn random_point(rng: &mut ChaCha8Rng) -> PhasePoint<f64> {
        let (wr, wi) = loop {
            let wr = rng.gen_range(-0.7..0.7);
            let wi = rng.gen_range(-0.7..0.7);
            if wr * wr + wi * wi < 0.8 * 0.8 {
                break (wr, wi);
            }
        };
        PhasePoint::from_parts(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), wr, wi)
            .unwrap()
    }

    #[test]
    fn su11_inverse_and_action() {
        let g = SU11Element::new(c(2.0f64.sqrt(), 0.0), c(1.0, 0.0)).unwrap();
        let gg = g.mul(&g.inverse());
        assert!((gg.a() - c(1.0, 0.0)).norm() < 1e-14);
        assert!(gg.b().norm() < 1e-14);
        // identity acts trivially
        let e = SU11Element::<f64>::identity();
        assert_eq!(e.inv_act_alpha(c(0.3, 0.4)), c(0.3, 0.4));
        // g = (sqrt 2, 1): g^{-1}.i = sqrt(2) i - conj(i) = (sqrt 2 + 1) i
        let moved = g.inv_act_alpha(c(0.0, 1.0));
        assert!((moved - c(0.0, 2.0f64.sqrt() + 1.0)).norm() < 1e-14);
    }

    #[test]
    fn su11_renormalizes_on_construction() {
        let g = SU11Element::new(c(3.0, 1.0), c(1.0, -2.0)).unwrap();
        assert!(g.constraint_defect().abs() < 1e-12);
        assert!(SU11Element::new(c(1.0, 0.0), c(2.0, 0.0)).is_err());
    }

    #[test]
    fn compose_examples() {
        let h = JacobiElement::translation(c(1.0, 0.0), 0.0);
        let h2 = JacobiElement::translation(c(0.0, 1.0), 0.0);
        // (e,1,0) o (e,i,0) = (e, 1+i, -1) since Im(1 * conj(i)) = -1
        let prod = compose(&h, &h2);
        assert!((prod.alpha - c(1.0, 1.0)).norm() < 1e-15);
        assert!((prod.t + 1.0).abs() < 1e-15);

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let id = JacobiElement::<f64>::identity();
        for _ in 0..20 {
            let h = random_jacobi(&mut rng, 1.0, 1.0);
            let left = compose(&id, &h);
            let right = compose(&h, &id);
            for v in [left, right] {
                assert!((v.alpha - h.alpha).norm() < 1e-14);
                assert!((v.t - h.t).abs() < 1e-14);
                assert!((v.g.a() - h.g.a()).norm() < 1e-14);
                assert!((v.g.b() - h.g.b()).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn group_axioms_hold_numerically() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let h1 = random_jacobi(&mut rng, 1.0, 1.0);
            let h2 = random_jacobi(&mut rng, 1.0, 1.0);
            let h3 = random_jacobi(&mut rng, 1.0, 1.0);
            // associativity
            let left = compose(&compose(&h1, &h2), &h3);
            let right = compose(&h1, &compose(&h2, &h3));
            assert!((left.g.a() - right.g.a()).norm() < 1e-10);
            assert!((left.g.b() - right.g.b()).norm() < 1e-10);
            assert!((left.alpha - right.alpha).norm() < 1e-10);
            assert!((left.t - right.t).abs() < 1e-10);
            // inverse
            let e = compose(&h1, &inverse(&h1));
            assert!((e.g.a() - c(1.0, 0.0)).norm() < 1e-12);
            assert!(e.g.b().norm() < 1e-12);
            assert!(e.alpha.norm() < 1e-12);
            assert!(e.t.abs() < 1e-12);
        }
    }

    #[test]
    fn action_examples_and_disk_preservation() {
        // identity fixes every point
        let id = JacobiElement::<f64>::identity();
        let x = PhasePoint::from_parts(0.3, -0.2, 0.4, 0.1).unwrap();
        let y = act(&id, &x);
        assert!((y.z - x.z).norm() < 1e-15);
        assert!((y.w - x.w).norm() < 1e-15);

        // pure translation by 1 moves the origin to (1, 0)
        let h = JacobiElement::translation(c(1.0, 0.0), 0.0);
        let y = act(&h, &PhasePoint::origin());
        assert!((y.z - c(1.0, 0.0)).norm() < 1e-15);
        assert!(y.w.norm() < 1e-15);

        // g = (sqrt 2, 1) moves the origin to (0, 1/sqrt 2)
        let g = SU11Element::new(c(2.0f64.sqrt(), 0.0), c(1.0, 0.0)).unwrap();
        let y = act(&JacobiElement::rotation(g), &PhasePoint::origin());
        assert!(y.z.norm() < 1e-15);
        assert!((y.w - c(1.0 / 2.0f64.sqrt(), 0.0)).norm() < 1e-14);

        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let h = random_jacobi(&mut rng, 1.5, 1.0);
            let x = random_point(&mut rng);
            assert!(act(&h, &x).w.norm() < 1.0);
        }
    }

    #[test]
    fn multiplier_examples() {
        let kk = k(1.0);
        let id = JacobiElement::<f64>::identity();
        let x = PhasePoint::from_parts(0.3, 0.5, -0.2, 0.1).unwrap();
        assert!((multiplier(kk, &id, &x) - c(1.0, 0.0)).norm() < 1e-15);

        // alpha = 0 at the origin: J = conj(a)^{2k}
        let g = random_su11(&mut ChaCha8Rng::seed_from_u64(3), 1.0);
        let j = multiplier(kk, &JacobiElement::rotation(g), &PhasePoint::origin());
        let expected = g.a().conj().powu(2); // 2k = 2
        assert!((j - expected).norm() < 1e-13);

        // pure translation: J = exp(conj(alpha)(z + gamma)/2)
        let alpha = c(0.4, -0.3);
        let h = JacobiElement::translation(alpha, 0.0);
        let gamma = x.z + alpha - alpha.conj() * x.w;
        let expected = (alpha.conj() * (x.z + gamma) * 0.5).exp();
        assert!((multiplier(kk, &h, &x) - expected).norm() < 1e-14);
    }

    #[test]
    fn left_action_and_cocycle() {
        let kk = k(1.0);
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let h1 = random_jacobi(&mut rng, 1.0, 1.0);
            let h2 = random_jacobi(&mut rng, 1.0, 1.0);
            let x = random_point(&mut rng);
            let r = cocycle_residual(kk, &h1, &h2, &x);
            assert!(r.action < 1e-12, "action compatibility broke: {}", r.action);
            assert!(r.multiplier < 1e-9, "cocycle broke: {}", r.multiplier);
        }
    }

    #[test]
    fn heisenberg_cocycle_is_exact_in_closed_form() {
        // on the Heisenberg subgroup the multipliers are pure exponentials
        // and the exponent mismatch is exactly the center shift
        let kk = k(1.7);
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..50 {
            let h1 = JacobiElement::translation(
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                rng.gen_range(-1.0..1.0),
            );
            let h2 = JacobiElement::translation(
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                rng.gen_range(-1.0..1.0),
            );
            let x = random_point(&mut rng);
            let r = cocycle_residual(kk, &h1, &h2, &x);
            assert!(r.multiplier < 1e-12);
            assert!(r.action < 1e-14);
        }
    }

    #[test]
    fn branch_coherence_for_integer_and_half_integer_2k() {
        // for 2k integer the principal power equals repeated multiplication
        // whenever Re kappa > 0
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let h = random_jacobi(&mut rng, 0.8, 1.0);
            let x = random_point(&mut rng);
            let d = ActionData::new(&h, &x);
            if d.kappa.re <= 0.0 {
                continue;
            }
            // 2k integer: kappa^{2k} by repeated multiplication
            for two_k in [1u32, 2, 3, 4] {
                let kk = k(two_k as f64 / 2.0);
                let j = multiplier(kk, &h, &x);
                let direct = d.kappa.powu(two_k) * d.lambda1.exp();
                assert!(
                    (j - direct).norm() <= 1e-12 * direct.norm(),
                    "2k = {two_k}"
                );
            }
            // 2k half-integer: integer part times the principal square root
            for int_part in [0u32, 1, 2] {
                let kk = k((int_part as f64 + 0.5) / 2.0);
                let j = multiplier(kk, &h, &x);
                let direct = d.kappa.powu(int_part) * d.kappa.sqrt() * d.lambda1.exp();
                assert!(
                    (j - direct).norm() <= 1e-12 * direct.norm(),
                    "2k = {int_part} + 1/2"
                );
            }
        }
    }
}
