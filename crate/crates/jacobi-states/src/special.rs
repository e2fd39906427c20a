//! Special functions: the polynomials P_n(z, w), their Hermite-function
//! form, the orthonormal basis functions f_{nks}, the generating function
//! exp(zt + w t^2/2), and the classical summation identities (Mehler,
//! binomial) that the kernel expansion rests on.

use num_complex::Complex;

use crate::algebra::BargmannIndex;
use crate::error::{Error, Result};
use crate::phase::PhasePoint;
use crate::poly::BivarPoly;
use crate::scalar::{tf, tu, Real};

/// Lanczos approximation to ln Gamma(x) for x > 0.
///
/// Nine-term fit (g = 7), accurate to about 1e-13 relative in double
/// precision over the range used here.
pub fn ln_gamma<T: Real>(x: T) -> T {
    const LANCZOS: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    debug_assert!(x > T::zero(), "ln_gamma defined here for positive arguments");
    let g = tf::<T>(7.0);
    let half = tf::<T>(0.5);
    let x = x - T::one();
    let mut acc = tf::<T>(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += tf::<T>(c) / (x + tu::<T>(i));
    }
    let t = x + g + half;
    let sqrt_two_pi = tf::<T>((2.0 * core::f64::consts::PI).sqrt());
    sqrt_two_pi.ln() + (x + half) * t.ln() - t + acc.ln()
}

/// Hermite polynomial H_n at a complex argument, by the three-term
/// recurrence H_{n+1} = 2 x H_n - 2 n H_{n-1}.
pub fn hermite<T: Real>(n: u32, x: Complex<T>) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    if n == 0 {
        return one;
    }
    let two = tf::<T>(2.0);
    let mut prev = one;
    let mut cur = x * two;
    for m in 1..n {
        let next = x * two * cur - prev * tf::<T>(2.0 * m as f64);
        prev = cur;
        cur = next;
    }
    cur
}

/// P_n(z, w) by the recurrence P_{n+1} = z P_n + n w P_{n-1}, P_0 = 1,
/// P_1 = z. Entire in both arguments.
///
/// ```
/// use jacobi_states::{special::pn, C64};
/// // P_3 = z^3 + 3 z w
/// let (z, w) = (C64::new(2.0, 0.0), C64::new(-1.0, 0.0));
/// assert_eq!(pn(3, z, w), C64::new(2.0, 0.0));
/// ```
pub fn pn<T: Real>(n: u32, z: Complex<T>, w: Complex<T>) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    if n == 0 {
        return one;
    }
    let mut prev = one;
    let mut cur = z;
    for m in 1..n {
        let next = z * cur + w * prev * tf::<T>(m as f64);
        prev = cur;
        cur = next;
    }
    cur
}

/// All of P_0 .. P_{nmax} at once.
pub fn pn_all<T: Real>(nmax: u32, z: Complex<T>, w: Complex<T>) -> Vec<Complex<T>> {
    let mut out = Vec::with_capacity(nmax as usize + 1);
    out.push(Complex::new(T::one(), T::zero()));
    if nmax == 0 {
        return out;
    }
    out.push(z);
    for m in 1..nmax {
        let next = z * out[m as usize] + w * out[m as usize - 1] * tf::<T>(m as f64);
        out.push(next);
    }
    out
}

/// The scaled sequence c_n = P_n(z, w)/sqrt(n!), computed stably by
/// c_{n+1} = (z c_n + sqrt(n) w c_{n-1}) / sqrt(n+1).
///
/// These are the Fock coefficients of the coherent vectors.
pub fn pn_over_sqrt_factorial_all<T: Real>(
    nmax: u32,
    z: Complex<T>,
    w: Complex<T>,
) -> Vec<Complex<T>> {
    let mut out = Vec::with_capacity(nmax as usize + 1);
    out.push(Complex::new(T::one(), T::zero()));
    if nmax == 0 {
        return out;
    }
    out.push(z);
    for m in 1..nmax {
        let sqrt_m = tf::<T>(m as f64).sqrt();
        let sqrt_m1 = tf::<T>((m + 1) as f64).sqrt();
        let next = (z * out[m as usize] + w * out[m as usize - 1] * sqrt_m) / sqrt_m1;
        out.push(next);
    }
    out
}

/// P_n(z, w) through the Hermite polynomials:
/// P_n = (i/sqrt(2))^n w^{n/2} H_n(-i z / sqrt(2 w)), principal branch of
/// sqrt(w). The value is branch independent because H_n has parity n.
pub fn pn_via_hermite<T: Real>(n: u32, z: Complex<T>, w: Complex<T>) -> Result<Complex<T>> {
    if w.re == T::zero() && w.im == T::zero() {
        return Err(Error::Domain("pn_via_hermite undefined at w = 0; use pn"));
    }
    let sqrt_w = w.sqrt();
    let sqrt2 = tf::<T>(core::f64::consts::SQRT_2);
    let i = Complex::new(T::zero(), T::one());
    // (i/sqrt 2)^n w^{n/2} = (i sqrt(w) / sqrt 2)^n
    let prefactor = (i * sqrt_w / Complex::new(sqrt2, T::zero())).powu(n);
    let arg = -i * z / (sqrt_w * Complex::new(sqrt2, T::zero()));
    Ok(prefactor * hermite(n, arg))
}

/// P_n as an explicit polynomial in (z, w); coefficients are the integers
/// n!/(p! (n-2p)! 2^p), exact in double precision at desk scale.
pub fn pn_poly<T: Real>(n: u32) -> BivarPoly<T> {
    let mut p = BivarPoly::zero();
    let mut coeff = 1.0f64; // n!/(0! n! 2^0)
    let mut pow = 0u32;
    loop {
        p.add_term(n - 2 * pow, pow, Complex::new(tf::<T>(coeff), T::zero()));
        if 2 * (pow + 1) > n {
            break;
        }
        // ratio of successive terms: (n-2p)(n-2p-1) / (2 (p+1))
        let np = (n - 2 * pow) as f64;
        coeff = coeff * np * (np - 1.0) / (2.0 * (pow as f64 + 1.0));
        pow += 1;
    }
    p
}

/// Normalization sqrt(Gamma(s + 2k - 1/2) / (s! Gamma(2k - 1/2))) of the
/// basis functions.
pub fn basis_norm<T: Real>(k: BargmannIndex<T>, s: u32) -> Result<T> {
    let q = tf::<T>(2.0) * k.k() - tf::<T>(0.5);
    if q <= T::zero() && (q.fract() == T::zero()) {
        return Err(Error::GammaPole(q.to_f64().unwrap_or(f64::NAN)));
    }
    if q > T::zero() {
        let ln = ln_gamma(tu::<T>(s as usize) + q) - ln_gamma(q) - ln_gamma(tu::<T>(s as usize + 1));
        Ok((tf::<T>(0.5) * ln).exp())
    } else {
        // Gamma ratio as the finite product q (q+1) ... (q+s-1) over s!,
        // which stays meaningful for negative non-integer q.
        let mut ratio = T::one();
        for t in 0..s {
            ratio = ratio * (q + tu::<T>(t as usize)) / tu::<T>(t as usize + 1);
        }
        if ratio < T::zero() {
            return Err(Error::NegativeNorm(ratio.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(ratio.sqrt())
    }
}

/// Basis function f_{nks}(z, w) = norm(k, s) w^s P_n(z, w)/sqrt(n!).
pub fn basis_fn<T: Real>(
    n: u32,
    k: BargmannIndex<T>,
    s: u32,
    x: PhasePoint<T>,
) -> Result<Complex<T>> {
    let norm = basis_norm(k, s)?;
    let scaled = pn_over_sqrt_factorial_all(n, x.z, x.w);
    Ok(x.w.powu(s) * scaled[n as usize] * norm)
}

/// f_{nks} as an explicit polynomial in (z, w).
pub fn basis_poly<T: Real>(n: u32, k: BargmannIndex<T>, s: u32) -> Result<BivarPoly<T>> {
    let norm = basis_norm(k, s)?;
    let mut ln_fact = T::zero();
    for m in 1..=n {
        ln_fact += tu::<T>(m as usize).ln();
    }
    let scale = Complex::new(norm * (-tf::<T>(0.5) * ln_fact).exp(), T::zero());
    let w_s = BivarPoly::monomial(0, s, Complex::new(T::one(), T::zero()));
    Ok(pn_poly(n).mul(&w_s).scale(scale))
}

/// The generating function G_t(z, w) = exp(z t + w t^2 / 2), whose Taylor
/// coefficients in t are P_n(z, w)/n!.
pub fn generating_fn<T: Real>(t: Complex<T>, z: Complex<T>, w: Complex<T>) -> Complex<T> {
    (z * t + w * t * t * Complex::new(tf::<T>(0.5), T::zero())).exp()
}

/// Absolute defect of the truncated Mehler sum
/// sum_{n < n_terms} (s/2)^n H_n(x) H_n(y) / n!
/// against its closed form (1-s^2)^{-1/2} exp((2xys - (x^2+y^2)s^2)/(1-s^2)).
pub fn mehler_residual<T: Real>(x: T, y: T, s: T, n_terms: u32) -> T {
    debug_assert!(s.abs() < T::one());
    debug_assert!(n_terms >= 1);
    let half_s = s * tf::<T>(0.5);
    let mut sum = T::zero();
    // term_n = (s/2)^n / n!, updated multiplicatively
    let mut term = T::one();
    let (mut hx_prev, mut hx) = (T::zero(), T::one());
    let (mut hy_prev, mut hy) = (T::zero(), T::one());
    for n in 0..n_terms {
        sum += term * hx * hy;
        // advance Hermite values and the factorial term
        let two = tf::<T>(2.0);
        let nn = tf::<T>(n as f64);
        let hx_next = two * x * hx - two * nn * hx_prev;
        hx_prev = hx;
        hx = hx_next;
        let hy_next = two * y * hy - two * nn * hy_prev;
        hy_prev = hy;
        hy = hy_next;
        term = term * half_s / tf::<T>((n + 1) as f64);
    }
    let one = T::one();
    let denom = one - s * s;
    let closed = (one / denom.sqrt())
        * ((tf::<T>(2.0) * x * y * s - (x * x + y * y) * s * s) / denom).exp();
    (sum - closed).abs()
}

/// Absolute defect of the truncated binomial series
/// sum_{m < terms} x^m Gamma(q+m)/(m! Gamma(q)) against (1-x)^{-q}.
pub fn binomial_series_residual<T: Real>(x: Complex<T>, q: T, terms: u32) -> T {
    let mut sum = Complex::new(T::zero(), T::zero());
    let mut term = Complex::new(T::one(), T::zero());
    for m in 0..terms {
        sum += term;
        let ratio = (q + tf::<T>(m as f64)) / tf::<T>((m + 1) as f64);
        term = term * x * Complex::new(ratio, T::zero());
    }
    let one = Complex::new(T::one(), T::zero());
    let closed = ((one - x).ln() * Complex::new(-q, T::zero())).exp();
    (sum - closed).norm()
}

/// Reference implementations kept deliberately separate from the
/// production paths so the two can check each other.
pub mod reference {
    use super::*;

    /// P_n by the explicit finite sum
    /// n! sum_p (w/2)^p z^{n-2p} / (p! (n-2p)!).
    pub fn pn_direct_sum<T: Real>(n: u32, z: Complex<T>, w: Complex<T>) -> Complex<T> {
        let half_w = w * Complex::new(tf::<T>(0.5), T::zero());
        let mut acc = Complex::new(T::zero(), T::zero());
        // term at p: coefficient n!/(p!(n-2p)!) as a running product
        let mut coeff = T::one();
        let mut pow = 0u32;
        loop {
            acc += z.powu(n - 2 * pow) * half_w.powu(pow) * Complex::new(coeff, T::zero());
            if 2 * (pow + 1) > n {
                break;
            }
            let np = tf::<T>((n - 2 * pow) as f64);
            coeff = coeff * np * (np - T::one()) / tf::<T>(pow as f64 + 1.0);
            pow += 1;
        }
        acc
    }
}
