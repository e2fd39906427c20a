//! Small dense complex linear algebra: just enough for truncated operator
//! matrices at desk scale (dimensions up to a few thousand).

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{tf, Real};

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix<T: Real> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> CMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        // ikj loop order keeps the inner loop contiguous in both operands.
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                let row = i * rhs.cols;
                let rrow = k * rhs.cols;
                for j in 0..rhs.cols {
                    out.data[row + j] += a * rhs.data[rrow + j];
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (o, r) in out.data.iter_mut().zip(rhs.data.iter()) {
            *o += *r;
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (o, r) in out.data.iter_mut().zip(rhs.data.iter()) {
            *o -= *r;
        }
        out
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        let mut out = self.clone();
        for o in out.data.iter_mut() {
            *o *= s;
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(self.cols, v.len(), "matvec shape mismatch");
        let mut out = Vec::with_capacity(self.rows);
        for row in self.data.chunks_exact(self.cols) {
            let mut acc = Complex::new(T::zero(), T::zero());
            for (a, b) in row.iter().zip(v.iter()) {
                acc += *a * *b;
            }
            out.push(acc);
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Kronecker product: (A kron B)[(ia*rb + ib), (ja*cb + jb)] = A[ia,ja] B[ib,jb].
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let a = self[(ia, ja)];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for ib in 0..rhs.rows {
                    for jb in 0..rhs.cols {
                        out[(ia * rhs.rows + ib, ja * rhs.cols + jb)] = a * rhs[(ib, jb)];
                    }
                }
            }
        }
        out
    }

    /// Max column sum of absolute values (the induced 1-norm).
    pub fn one_norm(&self) -> T {
        let mut best = T::zero();
        for j in 0..self.cols {
            let mut s = T::zero();
            for i in 0..self.rows {
                s += self[(i, j)].norm();
            }
            if s > best {
                best = s;
            }
        }
        best
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> T {
        self.data
            .iter()
            .map(|c| c.norm())
            .fold(T::zero(), |a, b| if b > a { b } else { a })
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> T {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.data
            .iter()
            .zip(rhs.data.iter())
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), |a, b| if b > a { b } else { a })
    }

    /// Solve A X = B by LU with partial pivoting, consuming a copy of A.
    pub fn lu_solve(&self, b: &Self) -> Result<Self> {
        assert!(self.is_square(), "lu_solve needs a square matrix");
        assert_eq!(self.rows, b.rows, "lu_solve shape mismatch");
        let n = self.rows;
        let nrhs = b.cols;
        let mut a = self.clone();
        let mut x = b.clone();
        for col in 0..n {
            // pivot
            let mut piv = col;
            let mut best = a[(col, col)].norm();
            for r in col + 1..n {
                let v = a[(r, col)].norm();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best == T::zero() {
                return Err(Error::Domain("singular matrix in lu_solve"));
            }
            if piv != col {
                for j in 0..n {
                    a.data.swap(col * n + j, piv * n + j);
                }
                for j in 0..nrhs {
                    x.data.swap(col * nrhs + j, piv * nrhs + j);
                }
            }
            let d = a[(col, col)];
            for r in col + 1..n {
                let factor = a[(r, col)] / d;
                if factor.re == T::zero() && factor.im == T::zero() {
                    continue;
                }
                for j in col..n {
                    let v = a[(col, j)];
                    a[(r, j)] -= factor * v;
                }
                for j in 0..nrhs {
                    let v = x[(col, j)];
                    x[(r, j)] -= factor * v;
                }
            }
        }
        // back substitution
        for col in (0..n).rev() {
            let d = a[(col, col)];
            for j in 0..nrhs {
                let mut acc = x[(col, j)];
                for kk in col + 1..n {
                    acc -= a[(col, kk)] * x[(kk, j)];
                }
                x[(col, j)] = acc / d;
            }
        }
        Ok(x)
    }
}

impl<T: Real> core::ops::Index<(usize, usize)> for CMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T: Real> core::ops::IndexMut<(usize, usize)> for CMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.cols + j]
    }
}

/// Padé coefficients of the order-13 diagonal approximant to exp.
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

/// 1-norm threshold below which the order-13 approximant is accurate to
/// double precision without scaling.
const THETA13: f64 = 5.371920351148152;

/// Matrix exponential by scaling and squaring with the order-13 Padé
/// approximant.
pub fn expm<T: Real>(a: &CMatrix<T>) -> Result<CMatrix<T>> {
    assert!(a.is_square(), "expm needs a square matrix");
    let n = a.rows();
    let norm = a.one_norm().to_f64().unwrap_or(f64::INFINITY);
    if !norm.is_finite() {
        return Err(Error::Domain("non-finite matrix in expm"));
    }
    let s = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as u32
    } else {
        0
    };
    let scale = Complex::new(tf::<T>(0.5f64.powi(s as i32)), T::zero());
    let a = a.scale(scale);

    let a2 = a.mul(&a);
    let a4 = a2.mul(&a2);
    let a6 = a4.mul(&a2);
    let id = CMatrix::<T>::identity(n);
    let b = |i: usize| Complex::new(tf::<T>(PADE13[i]), T::zero());

    // u = A (A6 (b13 A6 + b11 A4 + b9 A2) + b7 A6 + b5 A4 + b3 A2 + b1 I)
    let inner_u = a6
        .scale(b(13))
        .add(&a4.scale(b(11)))
        .add(&a2.scale(b(9)));
    let u = a.mul(
        &a6.mul(&inner_u)
            .add(&a6.scale(b(7)))
            .add(&a4.scale(b(5)))
            .add(&a2.scale(b(3)))
            .add(&id.scale(b(1))),
    );
    // v = A6 (b12 A6 + b10 A4 + b8 A2) + b6 A6 + b4 A4 + b2 A2 + b0 I
    let inner_v = a6
        .scale(b(12))
        .add(&a4.scale(b(10)))
        .add(&a2.scale(b(8)));
    let v = a6
        .mul(&inner_v)
        .add(&a6.scale(b(6)))
        .add(&a4.scale(b(4)))
        .add(&a2.scale(b(2)))
        .add(&id.scale(b(0)));

    let mut r = v.sub(&u).lu_solve(&v.add(&u))?;
    for _ in 0..s {
        r = r.mul(&r);
    }
    Ok(r)
}

/// Eigenvalues of a symmetric tridiagonal matrix together with the first
/// component of each normalized eigenvector (all that Gauss quadrature
/// needs). QL iteration with implicit shifts.
///
/// `diag` has length n, `offdiag` length n-1.
pub fn symtridiag_eigen<T: Real>(diag: &[T], offdiag: &[T]) -> Result<(Vec<T>, Vec<T>)> {
    let n = diag.len();
    assert_eq!(offdiag.len(), n.saturating_sub(1));
    let mut d = diag.to_vec();
    let mut e = vec![T::zero(); n];
    e[..n - 1].copy_from_slice(offdiag);
    // first row of the accumulated orthogonal transform
    let mut z = vec![T::zero(); n];
    if n > 0 {
        z[0] = T::one();
    }

    let eps = T::epsilon();
    for l in 0..n {
        let mut iter = 0;
        loop {
            // find a small off-diagonal element
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::NoConvergence);
            }
            let two = tf::<T>(2.0);
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(T::one());
            let sign_r = if g >= T::zero() { r.abs() } else { -r.abs() };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let mut s = T::one();
            let mut c = T::one();
            let mut p = T::zero();
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] -= p;
                    e[m] = T::zero();
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                // rotate the tracked first row
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if r == T::zero() && m > l + 1 {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = T::zero();
        }
    }

    // sort ascending by eigenvalue
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let vals = idx.iter().map(|&i| d[i]).collect();
    let firsts = idx.iter().map(|&i| z[i]).collect();
    Ok((vals, firsts))
}

/// Eigenvalues of a real symmetric matrix by the cyclic Jacobi method.
/// Input is given as a dense row-major slice of size n*n.
pub fn symmetric_eigenvalues<T: Real>(mat: &[T], n: usize) -> Result<Vec<T>> {
    assert_eq!(mat.len(), n * n);
    let mut a = mat.to_vec();
    let idx = |i: usize, j: usize| i * n + j;
    for _sweep in 0..100 {
        let mut off = T::zero();
        for i in 0..n {
            for j in i + 1..n {
                off += a[idx(i, j)] * a[idx(i, j)];
            }
        }
        if off.sqrt() <= tf::<T>(1e-30) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let app = a[idx(p, p)];
                let aqq = a[idx(q, q)];
                let tau = (aqq - app) / (tf::<T>(2.0) * apq);
                let t = {
                    let sign = if tau >= T::zero() { T::one() } else { -T::one() };
                    sign / (tau.abs() + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut vals: Vec<T> = (0..n).map(|i| a[idx(i, i)]).collect();
    vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(vals)
}

/// Smallest eigenvalue of a complex Hermitian matrix, via the real
/// symmetric embedding [[Re A, -Im A], [Im A, Re A]] whose spectrum is the
/// spectrum of A with doubled multiplicity.
pub fn hermitian_min_eigenvalue<T: Real>(a: &CMatrix<T>) -> Result<T> {
    assert!(a.is_square());
    let n = a.rows();
    let m = 2 * n;
    let mut real = vec![T::zero(); m * m];
    for i in 0..n {
        for j in 0..n {
            let v = a[(i, j)];
            real[i * m + j] = v.re;
            real[i * m + (j + n)] = -v.im;
            real[(i + n) * m + j] = v.im;
            real[(i + n) * m + (j + n)] = v.re;
        }
    }
    let vals = symmetric_eigenvalues(&real, m)?;
    Ok(vals[0])
}
