//! Truncated Fock-space realization of displacement and squeeze operators,
//! coherent and squeezed state vectors, and their overlaps.
//!
//! The joint space is Fock(N) (x) ladder(M) with flat index n*M + m. Every
//! operator built here is a Kronecker product of a Fock factor and a ladder
//! factor: the two summands of each generator split as X (x) 1 + 1 (x) Y,
//! and such summands commute even after truncation, so the exponentials
//! factor exactly. Ordered-product forms (normal-ordered displacement,
//! disentangled squeeze) are computed by terminating series of nilpotent
//! triangular matrices and therefore reproduce the infinite-dimensional
//! matrix elements exactly on the truncated block; single-exponential forms
//! go through the dense matrix exponential and feel the truncation boundary.
//! Near-boundary columns of the two routes consequently disagree at order
//! one for every truncation size; [`budget_clean_columns`] selects the
//! columns on which comparison is meaningful.

use num_complex::Complex;

use crate::algebra::BargmannIndex;
use crate::error::{Error, Result};
use crate::linalg::{expm, CMatrix};
use crate::scalar::{tf, tu, Real};
use crate::special::{ln_gamma, pn_over_sqrt_factorial_all};

/// Coefficient tensor over the basis phi_n (x) phi_m.
#[derive(Debug, Clone)]
pub struct FockState<T: Real> {
    coeffs: Vec<Complex<T>>,
    n_fock: usize,
    m_ladder: usize,
    k: BargmannIndex<T>,
}

/// L2 mass sitting on the truncation boundary of a state.
#[derive(Debug, Clone, Copy)]
pub struct TruncationMass<T: Real> {
    /// Norm of the last Fock row (n = N-1).
    pub fock_tail: T,
    /// Norm of the last ladder column (m = M-1).
    pub ladder_tail: T,
}

impl<T: Real> FockState<T> {
    pub fn new(
        coeffs: Vec<Complex<T>>,
        n_fock: usize,
        m_ladder: usize,
        k: BargmannIndex<T>,
    ) -> Result<Self> {
        if coeffs.len() != n_fock * m_ladder {
            return Err(Error::ShapeMismatch(format!(
                "coefficient tensor of length {} cannot be {} x {}",
                coeffs.len(),
                n_fock,
                m_ladder
            )));
        }
        Ok(Self {
            coeffs,
            n_fock,
            m_ladder,
            k,
        })
    }

    /// The cyclic vector e_0 = phi_0 (x) phi_0.
    pub fn e0(k: BargmannIndex<T>, n_fock: usize, m_ladder: usize) -> Self {
        let mut coeffs = vec![Complex::new(T::zero(), T::zero()); n_fock * m_ladder];
        coeffs[0] = Complex::new(T::one(), T::zero());
        Self {
            coeffs,
            n_fock,
            m_ladder,
            k,
        }
    }

    /// Separable state from factor vectors.
    pub fn from_factors(
        k: BargmannIndex<T>,
        fock: &[Complex<T>],
        ladder: &[Complex<T>],
    ) -> Self {
        let n_fock = fock.len();
        let m_ladder = ladder.len();
        let mut coeffs = Vec::with_capacity(n_fock * m_ladder);
        for f in fock {
            for l in ladder {
                coeffs.push(*f * *l);
            }
        }
        Self {
            coeffs,
            n_fock,
            m_ladder,
            k,
        }
    }

    #[inline]
    pub fn get(&self, n: usize, m: usize) -> Complex<T> {
        self.coeffs[n * self.m_ladder + m]
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub fn n_fock(&self) -> usize {
        self.n_fock
    }

    pub fn m_ladder(&self) -> usize {
        self.m_ladder
    }

    pub fn bargmann_index(&self) -> BargmannIndex<T> {
        self.k
    }

    pub fn norm(&self) -> T {
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, c| acc + c.norm_sqr())
            .sqrt()
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| *c * s).collect(),
            ..self.clone()
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        self.check_same_shape(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), |a, b| if b > a { b } else { a }))
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.n_fock != other.n_fock || self.m_ladder != other.m_ladder {
            return Err(Error::ShapeMismatch(format!(
                "{} x {} vs {} x {}",
                self.n_fock, self.m_ladder, other.n_fock, other.m_ladder
            )));
        }
        if self.k.k() != other.k.k() {
            return Err(Error::ShapeMismatch(
                "states carry different Bargmann indices".into(),
            ));
        }
        Ok(())
    }

    pub fn truncation_mass(&self) -> TruncationMass<T> {
        let mut fock = T::zero();
        for m in 0..self.m_ladder {
            fock += self.get(self.n_fock - 1, m).norm_sqr();
        }
        let mut ladder = T::zero();
        for n in 0..self.n_fock {
            ladder += self.get(n, self.m_ladder - 1).norm_sqr();
        }
        TruncationMass {
            fock_tail: fock.sqrt(),
            ladder_tail: ladder.sqrt(),
        }
    }
}

/// Hermitian inner product of coefficient tensors, conjugate linear in the
/// first argument. For coherent vectors this reproduces the closed-form
/// kernel: overlap(e_{x1}, e_{x2}) = K(x2, conj x1).
pub fn overlap<T: Real>(v1: &FockState<T>, v2: &FockState<T>) -> Result<Complex<T>> {
    v1.check_same_shape(v2)?;
    let mut acc = Complex::new(T::zero(), T::zero());
    for (a, b) in v1.coeffs.iter().zip(v2.coeffs.iter()) {
        acc += a.conj() * *b;
    }
    Ok(acc)
}

/// What an [`OperatorMatrix`] was built as.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OperatorKind<T: Real> {
    Displacement { alpha: Complex<T> },
    Squeeze { w: Complex<T> },
    SqueezeSingleExponential { zeta: Complex<T> },
}

/// Dense operator on the joint truncated space, with provenance metadata.
#[derive(Debug, Clone)]
pub struct OperatorMatrix<T: Real> {
    pub matrix: CMatrix<T>,
    pub n_fock: usize,
    pub m_ladder: usize,
    pub kind: OperatorKind<T>,
}

impl<T: Real> OperatorMatrix<T> {
    pub fn apply(&self, state: &FockState<T>) -> Result<FockState<T>> {
        if state.n_fock != self.n_fock || state.m_ladder != self.m_ladder {
            return Err(Error::ShapeMismatch(format!(
                "operator is {} x {}, state is {} x {}",
                self.n_fock, self.m_ladder, state.n_fock, state.m_ladder
            )));
        }
        Ok(FockState {
            coeffs: self.matrix.matvec(&state.coeffs),
            ..state.clone()
        })
    }
}

// ---------------------------------------------------------------------------
// factor-level building blocks
// ---------------------------------------------------------------------------

/// exp(X) for nilpotent X by the terminating series; exact up to rounding.
fn nilpotent_exp<T: Real>(x: &CMatrix<T>) -> CMatrix<T> {
    let n = x.rows();
    let mut acc = CMatrix::identity(n);
    let mut term = CMatrix::identity(n);
    for j in 1..=n {
        term = term.mul(x).scale(Complex::new(T::one() / tu::<T>(j), T::zero()));
        if term.max_abs() == T::zero() {
            break;
        }
        acc = acc.add(&term);
    }
    acc
}

fn diag_matrix<T: Real>(entries: impl Iterator<Item = T>) -> CMatrix<T> {
    let vals: Vec<T> = entries.collect();
    let mut m = CMatrix::zeros(vals.len(), vals.len());
    for (i, v) in vals.into_iter().enumerate() {
        m[(i, i)] = Complex::new(v, T::zero());
    }
    m
}

/// Fock factor of D(alpha): e^{-|alpha|^2/2} e^{alpha a+} e^{-conj(alpha) a},
/// the normal-ordered product, as an N x N matrix with exact truncated
/// matrix elements.
pub fn displacement_fock_factor<T: Real>(alpha: Complex<T>, n: usize) -> CMatrix<T> {
    let raise = crate::algebra::boson_raising::<T>(n);
    let lower = crate::algebra::boson_lowering::<T>(n);
    let e_raise = nilpotent_exp(&raise.scale(alpha));
    let e_lower = nilpotent_exp(&lower.scale(-alpha.conj()));
    let prefactor = Complex::new((-alpha.norm_sqr() / tf::<T>(2.0)).exp(), T::zero());
    e_raise.mul(&e_lower).scale(prefactor)
}

/// Fock factor of D(alpha) through the dense matrix exponential of
/// alpha a+ - conj(alpha) a.
pub fn displacement_fock_factor_exp<T: Real>(alpha: Complex<T>, n: usize) -> Result<CMatrix<T>> {
    let raise = crate::algebra::boson_raising::<T>(n);
    let lower = crate::algebra::boson_lowering::<T>(n);
    expm(&raise.scale(alpha).sub(&lower.scale(alpha.conj())))
}

/// Upper bound on the vacuum-column coefficient that the truncation cuts:
/// e^{-|alpha|^2/2} |alpha|^N / sqrt(N!).
pub fn displacement_truncation_budget<T: Real>(alpha: Complex<T>, n: usize) -> T {
    let a = alpha.norm();
    if a == T::zero() {
        return T::zero();
    }
    (-a * a / tf::<T>(2.0) + tu::<T>(n) * a.ln() - tf::<T>(0.5) * ln_gamma(tu::<T>(n + 1)))
        .exp()
}

/// Displacement operator on the joint space: D(alpha) acts on the Fock
/// factor, identity on the ladder factor.
pub fn displacement<T: Real>(alpha: Complex<T>, n_fock: usize, m_ladder: usize) -> OperatorMatrix<T> {
    let d = displacement_fock_factor(alpha, n_fock);
    OperatorMatrix {
        matrix: d.kron(&CMatrix::identity(m_ladder)),
        n_fock,
        m_ladder,
        kind: OperatorKind::Displacement { alpha },
    }
}

fn check_disk<T: Real>(w: Complex<T>) -> Result<()> {
    if w.norm() >= T::one() {
        return Err(Error::OutsideDisk(w.norm().to_f64().unwrap_or(f64::NAN)));
    }
    Ok(())
}

/// Fock factor of the disentangled squeeze:
/// e^{(w/2)(a+)^2} e^{eta (a+ a + 1/2)/2} e^{-(conj w/2) a^2},
/// eta = ln(1 - |w|^2).
pub fn squeeze_fock_factor<T: Real>(w: Complex<T>, n: usize) -> Result<CMatrix<T>> {
    check_disk(w)?;
    let one_minus = T::one() - w.norm_sqr();
    let raise = crate::algebra::boson_raising::<T>(n);
    let lower = crate::algebra::boson_lowering::<T>(n);
    let half = Complex::new(tf::<T>(0.5), T::zero());
    let up = nilpotent_exp(&raise.mul(&raise).scale(w * half));
    let down = nilpotent_exp(&lower.mul(&lower).scale(-w.conj() * half));
    // exp(eta (n + 1/2)/2) = (1-|w|^2)^{n/2 + 1/4}
    let mid = diag_matrix((0..n).map(|r| one_minus.powf(tf::<T>(r as f64 / 2.0 + 0.25))));
    Ok(up.mul(&mid).mul(&down))
}

/// Ladder factor of the disentangled squeeze:
/// e^{w K'+} e^{eta K'0} e^{-conj(w) K'-} with K'0 = k' + m.
pub fn squeeze_ladder_factor<T: Real>(
    w: Complex<T>,
    k: BargmannIndex<T>,
    m: usize,
) -> Result<CMatrix<T>> {
    check_disk(w)?;
    let kp = k.k_prime();
    if kp <= T::zero() {
        return Err(Error::KPrimeOutOfRange(k.k().to_f64().unwrap_or(f64::NAN)));
    }
    let one_minus = T::one() - w.norm_sqr();
    let up = nilpotent_exp(&crate::algebra::su11_raising(kp, m).scale(w));
    let down = nilpotent_exp(&crate::algebra::su11_lowering(kp, m).scale(-w.conj()));
    let mid = diag_matrix((0..m).map(|r| one_minus.powf(kp + tu::<T>(r))));
    Ok(up.mul(&mid).mul(&down))
}

/// The squeeze parameter zeta with w = (zeta/|zeta|) tanh|zeta|, i.e.
/// zeta = artanh(|w|) w/|w|.
pub fn squeeze_parameter<T: Real>(w: Complex<T>) -> Complex<T> {
    let a = w.norm();
    if a == T::zero() {
        return w;
    }
    w * Complex::new(a.atanh() / a, T::zero())
}

/// Inverse of [`squeeze_parameter`].
pub fn squeeze_disk_parameter<T: Real>(zeta: Complex<T>) -> Complex<T> {
    let a = zeta.norm();
    if a == T::zero() {
        return zeta;
    }
    zeta * Complex::new(a.tanh() / a, T::zero())
}

/// Fock factor of the single-exponential squeeze exp(zeta (a+)^2/2 - conj(zeta) a^2/2).
pub fn squeeze_fock_factor_exp<T: Real>(zeta: Complex<T>, n: usize) -> Result<CMatrix<T>> {
    let raise = crate::algebra::boson_raising::<T>(n);
    let lower = crate::algebra::boson_lowering::<T>(n);
    let half = Complex::new(tf::<T>(0.5), T::zero());
    expm(
        &raise
            .mul(&raise)
            .scale(zeta * half)
            .sub(&lower.mul(&lower).scale(zeta.conj() * half)),
    )
}

/// Ladder factor of the single-exponential squeeze exp(zeta K'+ - conj(zeta) K'-).
pub fn squeeze_ladder_factor_exp<T: Real>(
    zeta: Complex<T>,
    k: BargmannIndex<T>,
    m: usize,
) -> Result<CMatrix<T>> {
    let kp = k.k_prime();
    if kp <= T::zero() {
        return Err(Error::KPrimeOutOfRange(k.k().to_f64().unwrap_or(f64::NAN)));
    }
    expm(
        &crate::algebra::su11_raising(kp, m)
            .scale(zeta)
            .sub(&crate::algebra::su11_lowering(kp, m).scale(zeta.conj())),
    )
}

/// Disentangled squeeze operator S(w) = e^{w K+} e^{eta K0} e^{-conj(w) K-}
/// on the joint space.
pub fn squeeze<T: Real>(
    w: Complex<T>,
    k: BargmannIndex<T>,
    n_fock: usize,
    m_ladder: usize,
) -> Result<OperatorMatrix<T>> {
    let sf = squeeze_fock_factor(w, n_fock)?;
    let sl = squeeze_ladder_factor(w, k, m_ladder)?;
    Ok(OperatorMatrix {
        matrix: sf.kron(&sl),
        n_fock,
        m_ladder,
        kind: OperatorKind::Squeeze { w },
    })
}

/// Single-exponential squeeze exp(zeta K+ - conj(zeta) K-) with
/// zeta = artanh(|w|) w / |w|; must agree with [`squeeze`] away from the
/// truncation boundary.
pub fn squeeze_single_exponential<T: Real>(
    w: Complex<T>,
    k: BargmannIndex<T>,
    n_fock: usize,
    m_ladder: usize,
) -> Result<OperatorMatrix<T>> {
    check_disk(w)?;
    let zeta = squeeze_parameter(w);
    let sf = squeeze_fock_factor_exp(zeta, n_fock)?;
    let sl = squeeze_ladder_factor_exp(zeta, k, m_ladder)?;
    Ok(OperatorMatrix {
        matrix: sf.kron(&sl),
        n_fock,
        m_ladder,
        kind: OperatorKind::SqueezeSingleExponential { zeta },
    })
}

// ---------------------------------------------------------------------------
// state constructors
// ---------------------------------------------------------------------------

/// Coherent vector e_{z,w} = e^{z a+ + w K+} e_0 in its separable closed
/// form: Fock coefficients P_n(z,w)/sqrt(n!), ladder coefficients
/// w^m sqrt(Gamma(2k'+m)/(m! Gamma(2k'))).
pub fn coherent_vector<T: Real>(
    k: BargmannIndex<T>,
    z: Complex<T>,
    w: Complex<T>,
    n_fock: usize,
    m_ladder: usize,
) -> Result<FockState<T>> {
    check_disk(w)?;
    let kp = k.k_prime();
    if kp <= T::zero() {
        return Err(Error::KPrimeOutOfRange(k.k().to_f64().unwrap_or(f64::NAN)));
    }
    let fock = pn_over_sqrt_factorial_all(n_fock as u32 - 1, z, w);
    let mut ladder = Vec::with_capacity(m_ladder);
    let mut cur = Complex::new(T::one(), T::zero());
    for m in 0..m_ladder {
        ladder.push(cur);
        // l_{m+1} = l_m w sqrt((2k'+m)/(m+1))
        let ratio = ((tf::<T>(2.0) * kp + tu::<T>(m)) / tu::<T>(m + 1)).sqrt();
        cur = cur * w * Complex::new(ratio, T::zero());
    }
    Ok(FockState::from_factors(k, &fock, &ladder))
}

/// Coherent vector by the terminating exponential series of z a+ + w K+
/// applied to e_0 on the coefficient tensor. Exact (the operator is
/// nilpotent on the truncated space); cross-checks [`coherent_vector`].
pub fn coherent_vector_exp<T: Real>(
    k: BargmannIndex<T>,
    z: Complex<T>,
    w: Complex<T>,
    n_fock: usize,
    m_ladder: usize,
) -> Result<FockState<T>> {
    check_disk(w)?;
    let kp = k.k_prime();
    if kp <= T::zero() {
        return Err(Error::KPrimeOutOfRange(k.k().to_f64().unwrap_or(f64::NAN)));
    }
    let dim = n_fock * m_ladder;
    let idx = |n: usize, m: usize| n * m_ladder + m;
    let half = Complex::new(tf::<T>(0.5), T::zero());
    // one application of z a+ + w ((a+)^2/2 + K'+)
    let apply = |v: &[Complex<T>]| {
        let mut out = vec![Complex::new(T::zero(), T::zero()); dim];
        for n in 0..n_fock {
            for m in 0..m_ladder {
                let mut acc = Complex::new(T::zero(), T::zero());
                if n >= 1 {
                    let amp = tu::<T>(n).sqrt();
                    acc += z * Complex::new(amp, T::zero()) * v[idx(n - 1, m)];
                }
                if n >= 2 {
                    let amp = (tu::<T>(n) * tu::<T>(n - 1)).sqrt();
                    acc += w * half * Complex::new(amp, T::zero()) * v[idx(n - 2, m)];
                }
                if m >= 1 {
                    let amp = (tu::<T>(m) * (tf::<T>(2.0) * kp + tu::<T>(m - 1))).sqrt();
                    acc += w * Complex::new(amp, T::zero()) * v[idx(n, m - 1)];
                }
                out[idx(n, m)] = acc;
            }
        }
        out
    };

    let mut acc = vec![Complex::new(T::zero(), T::zero()); dim];
    acc[0] = Complex::new(T::one(), T::zero());
    let mut term = acc.clone();
    for j in 1..=(n_fock + m_ladder + 1) {
        term = apply(&term);
        let scale = Complex::new(T::one() / tu::<T>(j), T::zero());
        let mut all_zero = true;
        for t in term.iter_mut() {
            *t *= scale;
            if !(t.re == T::zero() && t.im == T::zero()) {
                all_zero = false;
            }
        }
        if all_zero {
            break;
        }
        for (a, t) in acc.iter_mut().zip(term.iter()) {
            *a += *t;
        }
    }
    FockState::new(acc, n_fock, m_ladder, k)
}

/// Squeezed coherent state Psi_{alpha,w} = D(alpha) S(w) e_0, computed on
/// the tensor factors (never materializing the joint operators).
pub fn squeezed_vector<T: Real>(
    k: BargmannIndex<T>,
    alpha: Complex<T>,
    w: Complex<T>,
    n_fock: usize,
    m_ladder: usize,
) -> Result<FockState<T>> {
    check_disk(w)?;
    let kp = k.k_prime();
    if kp <= T::zero() {
        return Err(Error::KPrimeOutOfRange(k.k().to_f64().unwrap_or(f64::NAN)));
    }
    let one_minus = T::one() - w.norm_sqr();
    let half = Complex::new(tf::<T>(0.5), T::zero());

    // S_F phi_0: the a^2 leg annihilates the vacuum, the diagonal leg gives
    // (1-|w|^2)^{1/4}, then the (a+)^2 series
    let mut vf = vec![Complex::new(T::zero(), T::zero()); n_fock];
    vf[0] = Complex::new(one_minus.powf(tf::<T>(0.25)), T::zero());
    vf = exp_series_on_vec(&vf, |v| {
        let mut out = vec![Complex::new(T::zero(), T::zero()); v.len()];
        for n in 2..v.len() {
            let amp = (tu::<T>(n) * tu::<T>(n - 1)).sqrt();
            out[n] = w * half * Complex::new(amp, T::zero()) * v[n - 2];
        }
        out
    });

    // D(alpha) on the Fock factor: e^{-|a|^2/2} e^{alpha a+} e^{-conj a}
    let prefactor = Complex::new((-alpha.norm_sqr() / tf::<T>(2.0)).exp(), T::zero());
    vf = exp_series_on_vec(&vf, |v| {
        let mut out = vec![Complex::new(T::zero(), T::zero()); v.len()];
        for n in 0..v.len() - 1 {
            let amp = tu::<T>(n + 1).sqrt();
            out[n] = -alpha.conj() * Complex::new(amp, T::zero()) * v[n + 1];
        }
        out
    });
    vf = exp_series_on_vec(&vf, |v| {
        let mut out = vec![Complex::new(T::zero(), T::zero()); v.len()];
        for n in 1..v.len() {
            let amp = tu::<T>(n).sqrt();
            out[n] = alpha * Complex::new(amp, T::zero()) * v[n - 1];
        }
        out
    });
    for c in vf.iter_mut() {
        *c *= prefactor;
    }

    // S_L phi_0: diagonal leg (1-|w|^2)^{k'}, then the K'+ series
    let mut vl = vec![Complex::new(T::zero(), T::zero()); m_ladder];
    vl[0] = Complex::new(one_minus.powf(kp), T::zero());
    vl = exp_series_on_vec(&vl, |v| {
        let mut out = vec![Complex::new(T::zero(), T::zero()); v.len()];
        for m in 1..v.len() {
            let amp = (tu::<T>(m) * (tf::<T>(2.0) * kp + tu::<T>(m - 1))).sqrt();
            out[m] = w * Complex::new(amp, T::zero()) * v[m - 1];
        }
        out
    });

    Ok(FockState::from_factors(k, &vf, &vl))
}

/// exp of a nilpotent operator applied to a vector through its terminating
/// series.
fn exp_series_on_vec<T: Real>(
    v: &[Complex<T>],
    apply: impl Fn(&[Complex<T>]) -> Vec<Complex<T>>,
) -> Vec<Complex<T>> {
    let mut acc = v.to_vec();
    let mut term = v.to_vec();
    for j in 1..=v.len() {
        term = apply(&term);
        let scale = Complex::new(T::one() / tu::<T>(j), T::zero());
        let mut all_zero = true;
        for t in term.iter_mut() {
            *t *= scale;
            if !(t.re == T::zero() && t.im == T::zero()) {
                all_zero = false;
            }
        }
        if all_zero {
            break;
        }
        for (a, t) in acc.iter_mut().zip(term.iter()) {
            *a += *t;
        }
    }
    acc
}

/// Max coefficient difference between Psi_{alpha,w} and
/// (1-|w|^2)^k exp(-conj(alpha) z / 2) e_{z,w} with z = alpha - w conj(alpha).
pub fn proposition1_residual<T: Real>(
    k: BargmannIndex<T>,
    alpha: Complex<T>,
    w: Complex<T>,
    n_fock: usize,
    m_ladder: usize,
) -> Result<T> {
    let psi = squeezed_vector(k, alpha, w, n_fock, m_ladder)?;
    let z = alpha - w * alpha.conj();
    let coherent = coherent_vector(k, z, w, n_fock, m_ladder)?;
    let prefactor = Complex::new((T::one() - w.norm_sqr()).powf(k.k()), T::zero())
        * (-alpha.conj() * z * Complex::new(tf::<T>(0.5), T::zero())).exp();
    psi.max_abs_diff(&coherent.scale(prefactor))
}

/// Columns on which two truncated operators can be compared meaningfully:
/// those whose trailing rows (`tail` of them, in both matrices) carry less
/// than `tol` in L2 norm, i.e. columns whose image does not touch the
/// truncation boundary.
pub fn budget_clean_columns<T: Real>(
    a: &CMatrix<T>,
    b: &CMatrix<T>,
    tail: usize,
    tol: T,
) -> Vec<usize> {
    let rows = a.rows();
    let mut cols = Vec::new();
    for c in 0..a.cols() {
        let mut mass = T::zero();
        for r in rows.saturating_sub(tail)..rows {
            mass = mass + a[(r, c)].norm_sqr() + b[(r, c)].norm_sqr();
        }
        if mass.sqrt() < tol {
            cols.push(c);
        }
    }
    cols
}

/// Max entry difference restricted to the given columns.
pub fn max_abs_diff_on_columns<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>, cols: &[usize]) -> T {
    let mut worst = T::zero();
    for &c in cols {
        for r in 0..a.rows() {
            let d = (a[(r, c)] - b[(r, c)]).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fock_operator_matrices;
    use crate::kernel::kernel;
    use crate::phase::PhasePoint;
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

    #[test]
    fn lowest_weight_conditions_hold_exactly() {
        let kk = k(1.0);
        let ops = fock_operator_matrices(kk, 6, 5).unwrap();
        let e0 = FockState::e0(kk, 6, 5);
        let a_e0 = ops.a.matvec(e0.coeffs());
        let km_e0 = ops.k_minus.matvec(e0.coeffs());
        let k0_e0 = ops.k_zero.matvec(e0.coeffs());
        assert!(a_e0.iter().all(|v| v.norm() == 0.0));
        assert!(km_e0.iter().all(|v| v.norm() == 0.0));
        for (i, v) in k0_e0.iter().enumerate() {
            if i == 0 {
                assert_eq!(*v, c(1.0, 0.0));
            } else {
                assert_eq!(v.norm(), 0.0);
            }
        }
    }

    #[test]
    fn displacement_vacuum_column() {
        let alpha = c(0.7, -0.4);
        let n = 30;
        let d = displacement_fock_factor(alpha, n);
        let norm = (-alpha.norm_sqr() / 2.0).exp();
        let mut expect = c(norm, 0.0);
        for r in 0..n {
            assert!(
                (d[(r, 0)] - expect).norm() < 1e-14,
                "row {r}: {} vs {expect}",
                d[(r, 0)]
            );
            expect = expect * alpha / ((r + 1) as f64).sqrt();
        }
        // alpha = 0 gives the identity
        let id = displacement_fock_factor(c(0.0, 0.0), 8);
        assert!(id.max_abs_diff(&CMatrix::identity(8)) == 0.0);
    }

    #[test]
    fn displacement_inverse_on_clean_columns() {
        let n = 60;
        let alpha = c(0.8, 0.6); // |alpha| = 1
        let dtable = displacement_fock_factor(alpha, n);
        let dinv = displacement_fock_factor(-alpha, n);
        let prod = dtable.mul(&dinv);
        let id = CMatrix::identity(n);
        let cols = budget_clean_columns(&dtable, &dinv, 2, 1e-12);
        assert!(cols.len() >= 20, "expected a sizable clean block");
        let diff = max_abs_diff_on_columns(&prod, &id, &cols);
        assert!(diff < 1e-10, "D(a)D(-a) != 1 on clean columns: {diff}");
    }

    #[test]
    fn displacement_matches_matrix_exponential() {
        let n = 40;
        let alpha = c(0.5, -0.3);
        let product_form = displacement_fock_factor(alpha, n);
        let exp_form = displacement_fock_factor_exp(alpha, n).unwrap();
        let cols = budget_clean_columns(&product_form, &exp_form, 2, 1e-12);
        let diff = max_abs_diff_on_columns(&product_form, &exp_form, &cols);
        assert!(diff < 1e-10, "normal-ordered vs exponential: {diff}");

        // and on the joint space against the assembled generators
        let kk = k(1.0);
        let ops = fock_operator_matrices(kk, 10, 3).unwrap();
        let gen = ops
            .a_dag
            .scale(alpha)
            .sub(&ops.a.scale(alpha.conj()));
        let joint_exp = expm(&gen).unwrap();
        let joint_product = displacement(alpha, 10, 3).matrix;
        let cols = budget_clean_columns(&joint_exp, &joint_product, 3, 1e-10);
        let diff = max_abs_diff_on_columns(&joint_exp, &joint_product, &cols);
        assert!(diff < 1e-9, "joint-space displacement mismatch: {diff}");
    }

    #[test]
    fn displacement_composition_phase() {
        // D(a) D(b) = exp(i Im(a conj b)) D(a+b)
        let n = 50;
        let a = c(0.4, 0.2);
        let b = c(-0.1, 0.5);
        let left = displacement_fock_factor(a, n).mul(&displacement_fock_factor(b, n));
        let phase = c(0.0, (a * b.conj()).im).exp();
        let right = displacement_fock_factor(a + b, n).scale(phase);
        let cols = budget_clean_columns(&left, &right, 2, 1e-12);
        assert!(max_abs_diff_on_columns(&left, &right, &cols) < 1e-9);
    }

    #[test]
    fn squeeze_identity_at_zero() {
        let kk = k(1.0);
        let s = squeeze(c(0.0, 0.0), kk, 6, 6).unwrap();
        assert!(s.matrix.max_abs_diff(&CMatrix::identity(36)) == 0.0);
    }

    #[test]
    fn squeeze_ladder_column_closed_form() {
        // S_L phi_0 has coefficients (1-|w|^2)^{k'} w^m sqrt(Gamma(2k'+m)/(m! Gamma(2k')))
        let kk = k(1.0);
        let kp = kk.k_prime();
        let w = c(0.2, 0.15);
        let m = 20;
        let sl = squeeze_ladder_factor(w, kk, m).unwrap();
        let pre = (1.0 - w.norm_sqr()).powf(kp);
        let mut expect = c(pre, 0.0);
        for r in 0..m {
            assert!(
                (sl[(r, 0)] - expect).norm() < 1e-13,
                "m={r}: {} vs {expect}",
                sl[(r, 0)]
            );
            expect = expect * w * ((2.0 * kp + r as f64) / (r as f64 + 1.0)).sqrt();
        }
        // joint prefactor on e_0 is (1-|w|^2)^{k' + 1/4} = (1-|w|^2)^k
        let sf = squeeze_fock_factor(w, 8).unwrap();
        let joint00 = sf[(0, 0)] * sl[(0, 0)];
        let expected = (1.0 - w.norm_sqr()).powf(kk.k());
        assert!((joint00 - c(expected, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn disentangling_identity_on_clean_columns() {
        // squeezing spreads column c multiplicatively (levels ~ c e^{2r}),
        // so at |w| = 0.3 and 40 levels only low columns stay away from the
        // truncation boundary; those are where the two routes must agree
        let kk = k(1.0);
        for wv in [c(0.3, 0.0), c(-0.2, 0.2), c(0.0, 0.28)] {
            let m = 40;
            let zeta = squeeze_parameter(wv);
            assert!((squeeze_disk_parameter(zeta) - wv).norm() < 1e-14);

            let fact_f = squeeze_fock_factor(wv, m).unwrap();
            let exp_f = squeeze_fock_factor_exp(zeta, m).unwrap();
            let cols = budget_clean_columns(&fact_f, &exp_f, 2, 1e-9);
            assert!(!cols.is_empty(), "no clean columns at w={wv}");
            let diff = max_abs_diff_on_columns(&fact_f, &exp_f, &cols);
            assert!(
                diff < 1e-8,
                "fock factor mismatch {diff} on {} columns at w={wv}",
                cols.len()
            );

            let fact_l = squeeze_ladder_factor(wv, kk, m).unwrap();
            let exp_l = squeeze_ladder_factor_exp(zeta, kk, m).unwrap();
            let cols = budget_clean_columns(&fact_l, &exp_l, 2, 1e-9);
            assert!(!cols.is_empty());
            let diff = max_abs_diff_on_columns(&fact_l, &exp_l, &cols);
            assert!(diff < 1e-8, "ladder factor mismatch {diff} at w={wv}");
        }
        // at gentler squeezing a wide block is clean
        let wv = c(0.1, 0.0);
        let zeta = squeeze_parameter(wv);
        let fact_f = squeeze_fock_factor(wv, 40).unwrap();
        let exp_f = squeeze_fock_factor_exp(zeta, 40).unwrap();
        let cols = budget_clean_columns(&fact_f, &exp_f, 2, 1e-9);
        assert!(cols.len() >= 8, "clean block at w=0.1: {}", cols.len());
        assert!(max_abs_diff_on_columns(&fact_f, &exp_f, &cols) < 1e-8);
    }

    #[test]
    fn squeeze_vector_is_normalized() {
        let kk = k(1.0);
        for wv in [c(0.3, 0.0), c(-0.1, 0.25)] {
            let s = squeezed_vector(kk, c(0.0, 0.0), wv, 60, 40).unwrap();
            assert!((s.norm() - 1.0).abs() < 1e-8, "norm {}", s.norm());
        }
    }

    #[test]
    fn coherent_vector_examples() {
        let kk = k(1.0);
        // (z, w) = (0, 0) is e_0
        let v = coherent_vector(kk, c(0.0, 0.0), c(0.0, 0.0), 5, 4).unwrap();
        let e0 = FockState::e0(kk, 5, 4);
        assert!(v.max_abs_diff(&e0).unwrap() == 0.0);
        // w = 0: c_{n,0} = z^n/sqrt(n!), no ladder excitation
        let z = c(0.4, 0.3);
        let v = coherent_vector(kk, z, c(0.0, 0.0), 20, 4).unwrap();
        let mut expect = c(1.0, 0.0);
        for n in 0..20 {
            assert!((v.get(n, 0) - expect).norm() < 1e-14);
            for m in 1..4 {
                assert_eq!(v.get(n, m).norm(), 0.0);
            }
            expect = expect * z / ((n + 1) as f64).sqrt();
        }
    }

    #[test]
    fn coherent_routes_agree() {
        let kk = k(1.0);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let z = c(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
            let w = c(rng.gen_range(-0.3..0.3), rng.gen_range(-0.2..0.2));
            let analytic = coherent_vector(kk, z, w, 25, 20).unwrap();
            let series = coherent_vector_exp(kk, z, w, 25, 20).unwrap();
            let diff = analytic.max_abs_diff(&series).unwrap();
            assert!(diff < 1e-13, "routes disagree by {diff}");
        }
        // z = 0: the coupling runs purely through K+ = (a+)^2/2 + K'+, and
        // the series route is the direct expansion of e^{w K+} e_0
        for w in [c(0.25, 0.0), c(-0.1, 0.2)] {
            let analytic = coherent_vector(kk, c(0.0, 0.0), w, 30, 20).unwrap();
            let series = coherent_vector_exp(kk, c(0.0, 0.0), w, 30, 20).unwrap();
            assert!(analytic.max_abs_diff(&series).unwrap() < 1e-13);
            // odd Fock rows stay empty at z = 0
            for n in (1..30).step_by(2) {
                for m in 0..20 {
                    assert_eq!(analytic.get(n, m).norm(), 0.0);
                }
            }
        }
    }

    #[test]
    fn proposition1_residual_cases() {
        let kk = k(1.0);
        // alpha = 0 reduces to the disentangling identity on e_0
        let r = proposition1_residual(kk, c(0.0, 0.0), c(0.25, -0.1), 40, 30).unwrap();
        assert!(r < 1e-10, "alpha=0 residual {r}");
        // w = 0 is the Glauber relation
        let r = proposition1_residual(kk, c(0.5, 0.2), c(0.0, 0.0), 50, 10).unwrap();
        assert!(r < 1e-12, "w=0 residual {r}");
        // generic
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let alpha = c(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
            let w = c(rng.gen_range(-0.3..0.3), rng.gen_range(-0.2..0.2));
            let r = proposition1_residual(kk, alpha, w, 60, 40).unwrap();
            assert!(r < 1e-6, "alpha={alpha} w={w}: residual {r}");
        }
    }

    #[test]
    fn proposition1_residual_decreases_as_truncation_doubles() {
        let kk = k(1.0);
        let alpha = c(0.45, -0.2);
        let w = c(0.22, 0.18);
        let r1 = proposition1_residual(kk, alpha, w, 15, 10).unwrap();
        let r2 = proposition1_residual(kk, alpha, w, 30, 20).unwrap();
        let r3 = proposition1_residual(kk, alpha, w, 60, 40).unwrap();
        assert!(r1 > r2 && r2 > r3, "{r1} -> {r2} -> {r3}");
    }

    #[test]
    fn overlap_matches_kernel() {
        let kk = k(1.0);
        // overlap(e0, e0) = 1
        let e0 = FockState::e0(kk, 4, 4);
        assert!((overlap(&e0, &e0).unwrap() - c(1.0, 0.0)).norm() == 0.0);

        // pure Fock coherent states: exp(conj(z1) z2)
        let v1 = coherent_vector(kk, c(0.4, 0.1), c(0.0, 0.0), 60, 4).unwrap();
        let v2 = coherent_vector(kk, c(-0.2, 0.3), c(0.0, 0.0), 60, 4).unwrap();
        let ov = overlap(&v1, &v2).unwrap();
        let expect = (c(0.4, 0.1).conj() * c(-0.2, 0.3)).exp();
        assert!((ov - expect).norm() < 1e-10);

        // general points against the closed-form kernel, with the second
        // argument of the kernel conjugated: overlap(v1, v2) = K(x2, x1)
        let x1 = PhasePoint::new(c(0.4, 0.0), c(0.2, 0.0)).unwrap();
        let x2 = PhasePoint::new(c(0.1, 0.0), c(0.3, 0.0)).unwrap();
        let v1 = coherent_vector(kk, x1.z, x1.w, 60, 60).unwrap();
        let v2 = coherent_vector(kk, x2.z, x2.w, 60, 60).unwrap();
        let ov = overlap(&v1, &v2).unwrap();
        let kv = kernel(kk, &x2, &x1);
        assert!(
            (ov - kv).norm() <= 1e-7 * kv.norm(),
            "overlap {ov} vs kernel {kv}"
        );

        // shape mismatch is rejected
        let small = FockState::e0(kk, 3, 3);
        assert!(overlap(&e0, &small).is_err());
    }

    #[test]
    fn truncation_budget_diagnostics() {
        // comfortable truncation: tiny boundary mass
        let kk = k(1.0);
        let v = coherent_vector(kk, c(0.5, 0.0), c(0.3, 0.0), 60, 40).unwrap();
        let mass = v.truncation_mass();
        assert!(mass.fock_tail < 1e-8);
        assert!(mass.ladder_tail < 1e-8);
        // cramped truncation: boundary mass is visible
        let v = coherent_vector(kk, c(2.0, 0.0), c(0.5, 0.0), 6, 4).unwrap();
        let mass = v.truncation_mass();
        assert!(mass.fock_tail > 1e-3);
        // displacement budget bound behaves like the vacuum-column tail
        let b = displacement_truncation_budget(c(1.0, 0.0), 60);
        assert!(b < 1e-30);
        let b = displacement_truncation_budget(c(2.0, 0.0), 8);
        assert!(b > 1e-6);
    }

    #[test]
    fn operator_apply_checks_shapes() {
        let kk = k(1.0);
        let d = displacement(c(0.3, 0.0), 6, 4);
        let st = FockState::e0(kk, 6, 4);
        assert!(d.apply(&st).is_ok());
        let st_bad = FockState::e0(kk, 4, 6);
        assert!(d.apply(&st_bad).is_err());
    }

    #[test]
    fn squeezed_vector_equals_operator_product_route() {
        let kk = k(1.0);
        let alpha = c(0.3, -0.2);
        let w = c(0.2, 0.1);
        let (n, m) = (20, 14);
        let via_factors = squeezed_vector(kk, alpha, w, n, m).unwrap();
        let d = displacement(alpha, n, m);
        let s = squeeze(w, kk, n, m).unwrap();
        let via_ops = d.apply(&s.apply(&FockState::e0(kk, n, m)).unwrap()).unwrap();
        let diff = via_factors.max_abs_diff(&via_ops).unwrap();
        assert!(diff < 1e-13, "factor route vs operator route: {diff}");
    }
}
