//! One-dimensional Gauss rules built by Golub-Welsch: eigenvalues of the
//! symmetric tridiagonal recurrence matrix give the nodes, squared first
//! eigenvector components scaled by the zeroth moment give the weights.

use crate::error::Result;
use crate::linalg::symtridiag_eigen;
use crate::scalar::{tf, tu, Real};

/// Gauss-Hermite rule: integrates exp(-x^2) f(x) over the real line exactly
/// for polynomial f of degree <= 2n - 1.
pub fn gauss_hermite<T: Real>(n: usize) -> Result<(Vec<T>, Vec<T>)> {
    assert!(n >= 1);
    let diag = vec![T::zero(); n];
    let offdiag: Vec<T> = (1..n).map(|m| (tu::<T>(m) / tf::<T>(2.0)).sqrt()).collect();
    let (nodes, firsts) = symtridiag_eigen(&diag, &offdiag)?;
    let mu0 = tf::<T>(core::f64::consts::PI).sqrt();
    let weights = firsts.iter().map(|&v| mu0 * v * v).collect();
    Ok((nodes, weights))
}

/// Gauss-Jacobi rule on [0, 1] with weight (1 - x)^alpha (and no power of
/// x): integrates (1-x)^alpha f(x) exactly for polynomial f of degree
/// <= 2n - 1. Needs alpha > -1.
pub fn gauss_jacobi01<T: Real>(n: usize, alpha: T) -> Result<(Vec<T>, Vec<T>)> {
    assert!(n >= 1);
    assert!(alpha > -T::one(), "Jacobi weight needs alpha > -1");
    let two = tf::<T>(2.0);
    // three-term recurrence of Jacobi(alpha, 0) polynomials on [-1, 1]
    let diag: Vec<T> = (0..n)
        .map(|m| {
            if m == 0 {
                -alpha / (alpha + two)
            } else {
                let tm = tu::<T>(2 * m) + alpha;
                -(alpha * alpha) / (tm * (tm + two))
            }
        })
        .collect();
    let offdiag: Vec<T> = (1..n)
        .map(|m| {
            let mf = tu::<T>(m);
            let tm = tu::<T>(2 * m) + alpha;
            let num = tf::<T>(4.0) * mf * mf * (mf + alpha) * (mf + alpha);
            let den = tm * tm * (tm + T::one()) * (tm - T::one());
            (num / den).sqrt()
        })
        .collect();
    let (t_nodes, firsts) = symtridiag_eigen(&diag, &offdiag)?;
    // map t in [-1,1] to x = (1+t)/2; the 2^{-alpha-1} substitution factor
    // cancels against mu0 = 2^{alpha+1}/(alpha+1)
    let half = tf::<T>(0.5);
    let nodes = t_nodes.iter().map(|&t| (T::one() + t) * half).collect();
    let weights = firsts
        .iter()
        .map(|&v| v * v / (alpha + T::one()))
        .collect();
    Ok((nodes, weights))
}
