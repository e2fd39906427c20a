//! Differential realization of the Jacobi algebra on bivariate polynomials
//! and its truncated matrix realization on Fock x ladder space.
//!
//! The generators act on polynomials in (z, w) as
//!
//!   a   = d/dz
//!   a+  = z + w d/dz
//!   K-  = d/dw
//!   K0  = k + (1/2) z d/dz + w d/dw
//!   K+  = z^2/2 + 2kw + z w d/dz + w^2 d/dw
//!
//! Commutator checks run with k kept as a formal variable (coefficients are
//! degree <= 2 polynomials in k). Every number that then appears is a small
//! integer or half-integer, so double-precision arithmetic on them is exact
//! and the commutation relations close with literally zero residual, for
//! every value of k at once. Evaluating k numerically first would instead
//! leak rounding from sums like k + m into the residuals.

use std::collections::BTreeMap;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::poly::BivarPoly;
use crate::scalar::{tf, tu, Real};

/// Lowest K0-eigenvalue labeling the representation. Requires k > 0; the
/// split k = k' + 1/4 gives the ladder-sector index k'.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BargmannIndex<T: Real> {
    k: T,
}

impl<T: Real> BargmannIndex<T> {
    pub fn new(k: T) -> Result<Self> {
        if k > T::zero() && k.is_finite() {
            Ok(Self { k })
        } else {
            Err(Error::NonPositiveIndex(k.to_f64().unwrap_or(f64::NAN)))
        }
    }

    #[inline]
    pub fn k(&self) -> T {
        self.k
    }

    /// k' = k - 1/4, the index of the ladder tensor factor.
    #[inline]
    pub fn k_prime(&self) -> T {
        self.k - tf::<T>(0.25)
    }
}

/// The five generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorName {
    A,
    ADag,
    KMinus,
    KZero,
    KPlus,
}

/// Coefficient ring the generator action is generic over: either plain
/// complex numbers (k evaluated) or polynomials in k (k formal).
trait GenCoeff<T: Real>: Copy {
    /// How the Bargmann index enters multiplication.
    type K: Copy;
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(self, rhs: Self) -> Self;
    /// Multiply by a plain numeric factor.
    fn scale(self, s: T) -> Self;
    /// Multiply by the Bargmann index.
    fn times_k(self, k: Self::K) -> Self;
}

impl<T: Real> GenCoeff<T> for Complex<T> {
    type K = T;
    fn zero() -> Self {
        Complex::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.re == T::zero() && self.im == T::zero()
    }
    fn add(self, rhs: Self) -> Self {
        self + rhs
    }
    fn scale(self, s: T) -> Self {
        self * Complex::new(s, T::zero())
    }
    fn times_k(self, k: T) -> Self {
        self * Complex::new(k, T::zero())
    }
}

/// Degree <= 2 polynomial in k with complex coefficients: c0 + c1 k + c2 k^2.
/// Two generator applications multiply by at most one power of k each.
#[derive(Debug, Clone, Copy)]
struct KQuad<T: Real>([Complex<T>; 3]);

impl<T: Real> KQuad<T> {
    fn one() -> Self {
        let zero = Complex::new(T::zero(), T::zero());
        KQuad([Complex::new(T::one(), T::zero()), zero, zero])
    }

    fn eval(&self, k: T) -> Complex<T> {
        let kc = Complex::new(k, T::zero());
        self.0[0] + kc * (self.0[1] + kc * self.0[2])
    }
}

impl<T: Real> GenCoeff<T> for KQuad<T> {
    type K = ();
    fn zero() -> Self {
        let zero = Complex::new(T::zero(), T::zero());
        KQuad([zero; 3].map(|_| zero))
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.re == T::zero() && c.im == T::zero())
    }
    fn add(self, rhs: Self) -> Self {
        KQuad([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
        ])
    }
    fn scale(self, s: T) -> Self {
        let sc = Complex::new(s, T::zero());
        KQuad([self.0[0] * sc, self.0[1] * sc, self.0[2] * sc])
    }
    fn times_k(self, _: ()) -> Self {
        debug_assert!(
            self.0[2].re == T::zero() && self.0[2].im == T::zero(),
            "k-degree overflow in commutator bookkeeping"
        );
        KQuad([Complex::new(T::zero(), T::zero()), self.0[0], self.0[1]])
    }
}

type TermMap<C> = BTreeMap<(u32, u32), C>;

fn emit<T: Real, C: GenCoeff<T>>(map: &mut TermMap<C>, slot: (u32, u32), c: C) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(slot).or_insert_with(C::zero);
    *entry = entry.add(c);
    if entry.is_zero() {
        map.remove(&slot);
    }
}

fn apply_gen_terms<T: Real, C: GenCoeff<T>>(
    gen: GeneratorName,
    k: C::K,
    terms: &TermMap<C>,
) -> TermMap<C> {
    let mut out = TermMap::new();
    for (&(i, j), &c) in terms.iter() {
        match gen {
            GeneratorName::A => {
                if i >= 1 {
                    emit(&mut out, (i - 1, j), c.scale(tu::<T>(i as usize)));
                }
            }
            GeneratorName::ADag => {
                emit(&mut out, (i + 1, j), c);
                if i >= 1 {
                    emit(&mut out, (i - 1, j + 1), c.scale(tu::<T>(i as usize)));
                }
            }
            GeneratorName::KMinus => {
                if j >= 1 {
                    emit(&mut out, (i, j - 1), c.scale(tu::<T>(j as usize)));
                }
            }
            GeneratorName::KZero => {
                emit(&mut out, (i, j), c.times_k(k));
                emit(&mut out, (i, j), c.scale(tf::<T>(i as f64 / 2.0 + j as f64)));
            }
            GeneratorName::KPlus => {
                emit(&mut out, (i + 2, j), c.scale(tf::<T>(0.5)));
                emit(&mut out, (i, j + 1), c.times_k(k).scale(tf::<T>(2.0)));
                emit(&mut out, (i, j + 1), c.scale(tf::<T>((i + j) as f64)));
            }
        }
    }
    out
}

/// Apply one generator to a polynomial. Pure coefficient arithmetic.
pub fn apply_generator<T: Real>(
    gen: GeneratorName,
    k: BargmannIndex<T>,
    p: &BivarPoly<T>,
) -> BivarPoly<T> {
    let terms: TermMap<Complex<T>> = p.terms().map(|(&s, &c)| (s, c)).collect();
    let out = apply_gen_terms::<T, Complex<T>>(gen, k.k(), &terms);
    BivarPoly::from_terms(out)
}

/// Right-hand side of a commutation relation.
#[derive(Debug, Clone, Copy)]
enum CommutatorRhs {
    Zero,
    Identity(f64),
    Gen(GeneratorName, f64),
}

/// The full relation list: the Heisenberg block, the mixed block, and the
/// su(1,1) block.
const RELATIONS: [(&str, GeneratorName, GeneratorName, CommutatorRhs); 10] = [
    ("[a, a+] = 1", GeneratorName::A, GeneratorName::ADag, CommutatorRhs::Identity(1.0)),
    ("[a, K+] = a+", GeneratorName::A, GeneratorName::KPlus, CommutatorRhs::Gen(GeneratorName::ADag, 1.0)),
    ("[K-, a+] = a", GeneratorName::KMinus, GeneratorName::ADag, CommutatorRhs::Gen(GeneratorName::A, 1.0)),
    ("[K+, a+] = 0", GeneratorName::KPlus, GeneratorName::ADag, CommutatorRhs::Zero),
    ("[K-, a] = 0", GeneratorName::KMinus, GeneratorName::A, CommutatorRhs::Zero),
    ("[K0, a+] = a+/2", GeneratorName::KZero, GeneratorName::ADag, CommutatorRhs::Gen(GeneratorName::ADag, 0.5)),
    ("[K0, a] = -a/2", GeneratorName::KZero, GeneratorName::A, CommutatorRhs::Gen(GeneratorName::A, -0.5)),
    ("[K0, K+] = K+", GeneratorName::KZero, GeneratorName::KPlus, CommutatorRhs::Gen(GeneratorName::KPlus, 1.0)),
    ("[K0, K-] = -K-", GeneratorName::KZero, GeneratorName::KMinus, CommutatorRhs::Gen(GeneratorName::KMinus, -1.0)),
    ("[K-, K+] = 2 K0", GeneratorName::KMinus, GeneratorName::KPlus, CommutatorRhs::Gen(GeneratorName::KZero, 2.0)),
];

/// Residual of one relation, per relation name.
#[derive(Debug, Clone)]
pub struct RelationResidual<T: Real> {
    pub relation: &'static str,
    pub max_residual: T,
}

/// Report of all commutation relations applied to every monomial up to a
/// total degree.
#[derive(Debug, Clone)]
pub struct CommutationReport<T: Real> {
    pub relations: Vec<RelationResidual<T>>,
    pub max_residual: T,
}

/// Check every commutation relation on every monomial z^i w^j with
/// i + j <= max_degree. Residual coefficients are computed with k formal,
/// then evaluated at the given k; the expected outcome is exact zero.
pub fn commutation_residuals<T: Real>(
    k: BargmannIndex<T>,
    max_degree: u32,
) -> CommutationReport<T> {
    let kv = k.k();
    let mut relations = Vec::with_capacity(RELATIONS.len());
    let mut overall = T::zero();
    for (name, x, y, rhs) in RELATIONS {
        let mut worst = T::zero();
        for i in 0..=max_degree {
            for j in 0..=(max_degree - i) {
                let mut mono: TermMap<KQuad<T>> = TermMap::new();
                mono.insert((i, j), KQuad::one());
                let xy = apply_gen_terms::<T, _>(x, (), &apply_gen_terms::<T, _>(y, (), &mono));
                let yx = apply_gen_terms::<T, _>(y, (), &apply_gen_terms::<T, _>(x, (), &mono));
                let mut residual = xy;
                for (&slot, &c) in yx.iter() {
                    emit(&mut residual, slot, c.scale(-T::one()));
                }
                match rhs {
                    CommutatorRhs::Zero => {}
                    CommutatorRhs::Identity(f) => {
                        emit(&mut residual, (i, j), KQuad::one().scale(-tf::<T>(f)));
                    }
                    CommutatorRhs::Gen(g, f) => {
                        let image = apply_gen_terms::<T, _>(g, (), &mono);
                        for (&slot, &c) in image.iter() {
                            emit(&mut residual, slot, c.scale(-tf::<T>(f)));
                        }
                    }
                }
                for c in residual.values() {
                    let mag = c.eval(kv).norm();
                    if mag > worst {
                        worst = mag;
                    }
                }
            }
        }
        if worst > overall {
            overall = worst;
        }
        relations.push(RelationResidual {
            relation: name,
            max_residual: worst,
        });
    }
    CommutationReport {
        relations,
        max_residual: overall,
    }
}

// ---------------------------------------------------------------------------
// Truncated matrix realization
// ---------------------------------------------------------------------------

fn boson_coeff<T: Real>(r: usize) -> T {
    tu::<T>(r + 1).sqrt()
}

/// Single-mode annihilation operator on the N-dimensional Fock truncation:
/// a |n> = sqrt(n) |n-1>.
pub fn boson_lowering<T: Real>(n: usize) -> CMatrix<T> {
    let mut m = CMatrix::zeros(n, n);
    for r in 0..n.saturating_sub(1) {
        m[(r, r + 1)] = Complex::new(boson_coeff::<T>(r), T::zero());
    }
    m
}

/// Single-mode creation operator, the exact conjugate transpose of
/// [`boson_lowering`].
pub fn boson_raising<T: Real>(n: usize) -> CMatrix<T> {
    boson_lowering::<T>(n).adjoint()
}

fn ladder_coeff<T: Real>(k_prime: T, r: usize) -> T {
    // sqrt((r+1)(2k' + r)); shared by raising and lowering so the two are
    // exact adjoints entry by entry
    (tu::<T>(r + 1) * (tf::<T>(2.0) * k_prime + tu::<T>(r))).sqrt()
}

/// Ladder raising operator of the weight-k' lowest-weight representation:
/// K'+ |m> = sqrt((m+1)(2k'+m)) |m+1>.
pub fn su11_raising<T: Real>(k_prime: T, m: usize) -> CMatrix<T> {
    let mut out = CMatrix::zeros(m, m);
    for r in 0..m.saturating_sub(1) {
        out[(r + 1, r)] = Complex::new(ladder_coeff(k_prime, r), T::zero());
    }
    out
}

/// Ladder lowering operator: K'- |m> = sqrt(m(2k'+m-1)) |m-1>.
pub fn su11_lowering<T: Real>(k_prime: T, m: usize) -> CMatrix<T> {
    let mut out = CMatrix::zeros(m, m);
    for r in 0..m.saturating_sub(1) {
        out[(r, r + 1)] = Complex::new(ladder_coeff(k_prime, r), T::zero());
    }
    out
}

/// Diagonal weight operator: K'0 |m> = (k' + m) |m>.
pub fn su11_weight<T: Real>(k_prime: T, m: usize) -> CMatrix<T> {
    let mut out = CMatrix::zeros(m, m);
    for r in 0..m {
        out[(r, r)] = Complex::new(k_prime + tu::<T>(r), T::zero());
    }
    out
}

/// The five generators as dense matrices on the truncated tensor space
/// Fock(N) x ladder(M), with basis index row = n*M + m.
#[derive(Debug, Clone)]
pub struct OperatorSet<T: Real> {
    pub a: CMatrix<T>,
    pub a_dag: CMatrix<T>,
    pub k_plus: CMatrix<T>,
    pub k_minus: CMatrix<T>,
    pub k_zero: CMatrix<T>,
    pub n_fock: usize,
    pub m_ladder: usize,
    pub k: BargmannIndex<T>,
}

impl<T: Real> OperatorSet<T> {
    /// Flat index of the basis vector phi_n (x) phi_m.
    #[inline]
    pub fn index(&self, n: usize, m: usize) -> usize {
        n * self.m_ladder + m
    }

    pub fn dim(&self) -> usize {
        self.n_fock * self.m_ladder
    }
}

/// Assemble the truncated generator matrices:
/// K+ = (a+)^2/2 + K'+, K- = a^2/2 + K'-, K0 = (a+ a + 1/2)/2 + K'0,
/// with the primed part acting on the second tensor factor.
pub fn fock_operator_matrices<T: Real>(
    k: BargmannIndex<T>,
    n_fock: usize,
    m_ladder: usize,
) -> Result<OperatorSet<T>> {
    if n_fock < 2 {
        return Err(Error::TruncationOrder {
            needed: "n_fock",
            minimum: 2,
        });
    }
    if m_ladder < 2 {
        return Err(Error::TruncationOrder {
            needed: "m_ladder",
            minimum: 2,
        });
    }
    let kp = k.k_prime();
    if kp <= T::zero() {
        return Err(Error::KPrimeOutOfRange(k.k().to_f64().unwrap_or(f64::NAN)));
    }
    let id_f = CMatrix::<T>::identity(n_fock);
    let id_l = CMatrix::<T>::identity(m_ladder);
    let low = boson_lowering::<T>(n_fock);
    let raise = low.adjoint();
    let half = Complex::new(tf::<T>(0.5), T::zero());

    let a = low.kron(&id_l);
    let a_dag = a.adjoint();

    let raise_sq_half = raise.mul(&raise).scale(half);
    let low_sq_half = low.mul(&low).scale(half);
    let k_plus = raise_sq_half.kron(&id_l).add(&id_f.kron(&su11_raising(kp, m_ladder)));
    let k_minus = low_sq_half.kron(&id_l).add(&id_f.kron(&su11_lowering(kp, m_ladder)));

    // Fock part of K0 is diagonal (n/2 + 1/4)
    let mut k0_f = CMatrix::<T>::zeros(n_fock, n_fock);
    for n in 0..n_fock {
        k0_f[(n, n)] = Complex::new(tf::<T>(n as f64 / 2.0 + 0.25), T::zero());
    }
    let k_zero = k0_f.kron(&id_l).add(&id_f.kron(&su11_weight(kp, m_ladder)));

    Ok(OperatorSet {
        a,
        a_dag,
        k_plus,
        k_minus,
        k_zero,
        n_fock,
        m_ladder,
        k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C64;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn k(v: f64) -> BargmannIndex<f64> {
        BargmannIndex::new(v).unwrap()
    }

    #[test]
    fn generator_images_of_the_constant() {
        let kk = k(0.7);
        let one = BivarPoly::one();
        // a 1 = 0
        assert!(apply_generator(GeneratorName::A, kk, &one).is_zero());
        // K0 1 = k
        let k0 = apply_generator(GeneratorName::KZero, kk, &one);
        assert_eq!(k0.coeff(0, 0), c(0.7, 0.0));
        assert_eq!(k0.num_terms(), 1);
        // K+ 1 = z^2/2 + 2k w
        let kp = apply_generator(GeneratorName::KPlus, kk, &one);
        assert_eq!(kp.coeff(2, 0), c(0.5, 0.0));
        assert_eq!(kp.coeff(0, 1), c(1.4, 0.0));
        assert_eq!(kp.num_terms(), 2);
    }

    #[test]
    fn generator_images_of_a_monomial() {
        let kk = k(1.0);
        // p = z^2 w
        let p = BivarPoly::monomial(2, 1, c(1.0, 0.0));
        // a p = 2 z w
        let ap = apply_generator(GeneratorName::A, kk, &p);
        assert_eq!(ap.coeff(1, 1), c(2.0, 0.0));
        // a+ p = z^3 w + 2 z w^2
        let adp = apply_generator(GeneratorName::ADag, kk, &p);
        assert_eq!(adp.coeff(3, 1), c(1.0, 0.0));
        assert_eq!(adp.coeff(1, 2), c(2.0, 0.0));
        // K- p = z^2
        let km = apply_generator(GeneratorName::KMinus, kk, &p);
        assert_eq!(km.coeff(2, 0), c(1.0, 0.0));
        // K0 p = (k + 1 + 1) p
        let k0 = apply_generator(GeneratorName::KZero, kk, &p);
        assert_eq!(k0.coeff(2, 1), c(3.0, 0.0));
        // K+ p = z^4 w/2 + (2k + 3) z^2 w^2
        let kp = apply_generator(GeneratorName::KPlus, kk, &p);
        assert_eq!(kp.coeff(4, 1), c(0.5, 0.0));
        assert_eq!(kp.coeff(2, 2), c(5.0, 0.0));
    }

    #[test]
    fn degree_bookkeeping() {
        let kk = k(1.5);
        let p = BivarPoly::monomial(3, 2, c(1.0, -2.0));
        let kp = apply_generator(GeneratorName::KPlus, kk, &p);
        assert!(kp.total_degree() <= p.total_degree() + 2);
        let ap = apply_generator(GeneratorName::A, kk, &p);
        assert_eq!(ap.degree_z(), 2);
    }

    #[test]
    fn commutators_vanish_identically() {
        for kv in [0.3, 1.0, 2.75] {
            let report = commutation_residuals(k(kv), 8);
            for rel in &report.relations {
                assert_eq!(
                    rel.max_residual, 0.0,
                    "relation {} at k={kv}",
                    rel.relation
                );
            }
            assert_eq!(report.max_residual, 0.0);
        }
        // degree-0 and an off-beat k
        assert_eq!(commutation_residuals(k(1.0), 0).max_residual, 0.0);
        assert_eq!(commutation_residuals(k(0.3), 4).max_residual, 0.0);
    }

    #[test]
    fn linearity_exact_for_dyadic_data() {
        // dyadic k, scalars, and coefficients: every float operation in the
        // generator action is exact, so linearity holds with equality
        let kk = k(2.75);
        let p = BivarPoly::from_terms([((2, 1), c(1.0, -0.5)), ((0, 3), c(0.25, 2.0))]);
        let q = BivarPoly::from_terms([((1, 0), c(3.0, 0.0)), ((4, 2), c(-0.5, 0.125))]);
        let alpha = c(0.5, -0.25);
        let beta = c(2.0, 1.5);
        for gen in [
            GeneratorName::A,
            GeneratorName::ADag,
            GeneratorName::KMinus,
            GeneratorName::KZero,
            GeneratorName::KPlus,
        ] {
            let combined = apply_generator(gen, kk, &p.scale(alpha).add(&q.scale(beta)));
            let separate = apply_generator(gen, kk, &p)
                .scale(alpha)
                .add(&apply_generator(gen, kk, &q).scale(beta));
            assert!(combined.sub(&separate).is_zero(), "{gen:?}");
        }
    }

    #[test]
    fn linearity_within_roundoff_for_general_k() {
        let kk = k(0.3);
        let p = BivarPoly::from_terms([((2, 1), c(0.3, -0.7)), ((1, 3), c(0.11, 0.9))]);
        let q = BivarPoly::from_terms([((0, 0), c(1.7, 0.0)), ((3, 2), c(-0.2, 0.61))]);
        let alpha = c(0.37, -1.21);
        let beta = c(-0.64, 0.55);
        for gen in [GeneratorName::KZero, GeneratorName::KPlus] {
            let combined = apply_generator(gen, kk, &p.scale(alpha).add(&q.scale(beta)));
            let separate = apply_generator(gen, kk, &p)
                .scale(alpha)
                .add(&apply_generator(gen, kk, &q).scale(beta));
            assert!(combined.sub(&separate).max_abs_coeff() < 1e-14);
        }
    }

    #[test]
    fn bargmann_index_guards() {
        assert!(BargmannIndex::new(1.0f64).is_ok());
        assert!(matches!(
            BargmannIndex::new(0.0f64),
            Err(Error::NonPositiveIndex(_))
        ));
        assert!(BargmannIndex::new(-1.0f64).is_err());
        assert!((k(1.0).k_prime() - 0.75).abs() == 0.0);
    }

    #[test]
    fn operator_set_shapes_and_adjoints() {
        let ops = fock_operator_matrices(k(1.0), 6, 5).unwrap();
        assert_eq!(ops.dim(), 30);
        // exact adjoint pairs
        assert_eq!(ops.a_dag, ops.a.adjoint());
        assert_eq!(ops.k_minus, ops.k_plus.adjoint());
        // K0 real diagonal with entries k + n/2 + m
        for n in 0..6 {
            for m in 0..5 {
                let idx = ops.index(n, m);
                let v = ops.k_zero[(idx, idx)];
                assert_eq!(v.im, 0.0);
                assert!((v.re - (1.0 + n as f64 / 2.0 + m as f64)).abs() < 1e-14);
            }
        }
        // lowest-weight eigenvalue: K0 e0 = k e0 exactly
        assert_eq!(ops.k_zero[(0, 0)], c(1.0, 0.0));
    }

    #[test]
    fn k_prime_guard() {
        assert!(matches!(
            fock_operator_matrices(k(0.25), 4, 4),
            Err(Error::KPrimeOutOfRange(_))
        ));
        assert!(matches!(
            fock_operator_matrices(k(0.2), 4, 4),
            Err(Error::KPrimeOutOfRange(_))
        ));
        assert!(fock_operator_matrices(k(0.26), 4, 4).is_ok());
    }

    #[test]
    fn ccr_holds_away_from_the_fock_boundary() {
        let n_fock = 7;
        let m_ladder = 3;
        let ops = fock_operator_matrices(k(1.0), n_fock, m_ladder).unwrap();
        let comm = ops.a.mul(&ops.a_dag).sub(&ops.a_dag.mul(&ops.a));
        let dim = ops.dim();
        for r in 0..dim {
            for cidx in 0..dim {
                let v = comm[(r, cidx)];
                let n = r / m_ladder;
                if r == cidx {
                    if n < n_fock - 1 {
                        assert!((v - c(1.0, 0.0)).norm() < 1e-14);
                    } else {
                        // truncation artifact on the last Fock level
                        assert!((v - c(-((n_fock - 1) as f64), 0.0)).norm() < 1e-12);
                    }
                } else {
                    assert!(v.norm() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn primed_casimir_is_scalar_away_from_boundary() {
        let kp = k(1.0).k_prime();
        let m = 8;
        let plus = su11_raising(kp, m);
        let minus = su11_lowering(kp, m);
        let zero = su11_weight(kp, m);
        let half = c(0.5, 0.0);
        let casimir = zero
            .mul(&zero)
            .sub(&plus.mul(&minus).add(&minus.mul(&plus)).scale(half));
        let expected = kp * (kp - 1.0);
        for r in 0..m - 1 {
            for cc in 0..m - 1 {
                let v = casimir[(r, cc)];
                if r == cc {
                    assert!((v - c(expected, 0.0)).norm() < 1e-12, "r={r}");
                } else {
                    assert!(v.norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn ladder_matrix_elements_reproduce_the_normalized_basis() {
        // Building (K'+)^m e0 and normalizing per the canonical basis
        // phi_m = sqrt(Gamma(2k')/(m! Gamma(2k'+m))) (K'+)^m phi_0 must give
        // unit vectors, which pins the ladder coefficients used above.
        use crate::special::ln_gamma;
        let kp = k(1.3).k_prime();
        let m = 7;
        let plus = su11_raising(kp, m);
        let mut v = vec![c(0.0, 0.0); m];
        v[0] = c(1.0, 0.0);
        let mut ln_fact = 0.0;
        for step in 1..m {
            v = plus.matvec(&v);
            ln_fact += (step as f64).ln();
            let ln_norm =
                0.5 * (ln_gamma(2.0 * kp) - ln_fact - ln_gamma(2.0 * kp + step as f64));
            let scaled: Vec<C64> = v.iter().map(|x| x * ln_norm.exp()).collect();
            // scaled must be exactly the basis vector e_step
            for (idx, val) in scaled.iter().enumerate() {
                if idx == step {
                    assert!((val - c(1.0, 0.0)).norm() < 1e-12);
                } else {
                    assert!(val.norm() < 1e-14);
                }
            }
        }
    }
}
