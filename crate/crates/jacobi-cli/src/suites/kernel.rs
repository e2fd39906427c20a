//! Checks of the reproducing kernel: closed form, series expansion, Gram
//! positivity, and the transformation law.

use num_complex::Complex64 as C64;

use jacobi_states::algebra::BargmannIndex;
use jacobi_states::group::{act, multiplier};
use jacobi_states::kernel::{
    gram_min_eigenvalue, kernel, kernel_series, kernel_transform_residual,
};
use jacobi_states::PhasePoint;

use crate::config::SuiteConfig;
use crate::report::CheckRecord;
use crate::suites::{random_jacobi, random_point, rng_for};
use crate::tolerances as tol;

fn bk(v: f64) -> BargmannIndex<f64> {
    BargmannIndex::new(v).expect("positive index")
}

fn pt(zr: f64, zi: f64, wr: f64, wi: f64) -> PhasePoint<f64> {
    PhasePoint::from_parts(zr, zi, wr, wi).expect("inside the disk")
}

/// Analytically pinned kernel values.
pub fn spots(cfg: &SuiteConfig) -> CheckRecord {
    let mut worst = (kernel(bk(0.8), &PhasePoint::origin(), &PhasePoint::origin())
        - C64::new(1.0, 0.0))
    .norm();
    let x = pt(0.0, 0.0, 0.5, 0.0);
    worst = worst.max((kernel(bk(1.0), &x, &x) - C64::new(16.0 / 9.0, 0.0)).norm());
    let x = pt(1.0, 0.0, 0.0, 0.0);
    worst = worst.max((kernel(bk(2.3), &x, &x) - C64::new(1.0f64.exp(), 0.0)).norm());
    CheckRecord::measured(
        "ker.spots",
        "K(origin) = 1; K((0,1/2)) = 16/9 at k=1; K((1,0)) = e",
        "pinned arguments",
        worst,
        cfg.tol("kernel", tol::SPOT_VALUE),
    )
}

/// Hermitian symmetry and the diagonal lower bound.
pub fn symmetry_and_diagonal(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let id = "ker.hermitian_symmetry";
    let mut rng = rng_for(cfg, id);
    let kk = bk(cfg.k.max(0.26));
    let mut worst = 0.0f64;
    let mut diag_margin = 0.0f64;
    for _ in 0..cfg.samples_or(200) {
        let x = random_point(&mut rng, 1.0, 0.8);
        let y = random_point(&mut rng, 1.0, 0.8);
        let kxy = kernel(kk, &x, &y);
        let kyx = kernel(kk, &y, &x);
        worst = worst.max((kxy - kyx.conj()).norm() / kxy.norm());
        let diag = kernel(kk, &x, &x);
        diag_margin = diag_margin.max((1.0 - diag.re).max(diag.im.abs()));
    }
    vec![
        CheckRecord::measured(
            id,
            "K(x, y) = conj(K(y, x))",
            "200 samples",
            worst,
            cfg.tol("kernel", tol::KERNEL_SYMMETRY_REL),
        ),
        CheckRecord::measured(
            "ker.diagonal_bound",
            "K(x, x) is real and >= 1",
            "200 samples",
            diag_margin,
            cfg.tol("kernel", tol::KERNEL_SYMMETRY_REL),
        ),
    ]
}

/// Restriction to the two factor kernels.
pub fn factor_lines(cfg: &SuiteConfig) -> CheckRecord {
    let id = "ker.factor_lines";
    let mut rng = rng_for(cfg, id);
    let kk = bk(1.4);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples_or(100) {
        let x = random_point(&mut rng, 1.0, 0.8);
        let y = random_point(&mut rng, 1.0, 0.8);
        // w = 0 line: exp(z conj(z'))
        let a = pt(x.z.re, x.z.im, 0.0, 0.0);
        let b = pt(y.z.re, y.z.im, 0.0, 0.0);
        let expected = (x.z * y.z.conj()).exp();
        worst = worst.max((kernel(kk, &a, &b) - expected).norm() / expected.norm());
        // z = 0 line: (1 - w conj(w'))^{-2k}
        let a = pt(0.0, 0.0, x.w.re, x.w.im);
        let b = pt(0.0, 0.0, y.w.re, y.w.im);
        let base = C64::new(1.0, 0.0) - x.w * y.w.conj();
        let expected = (-base.ln() * 2.8).exp();
        worst = worst.max((kernel(kk, &a, &b) - expected).norm() / expected.norm());
    }
    CheckRecord::measured(
        id,
        "K restricts to exp(z conj z') at w=0 and (1-w conj w')^{-2k} at z=0",
        "100 samples, k=1.4",
        worst,
        cfg.tol("kernel", tol::KERNEL_SYMMETRY_REL),
    )
}

/// The 5-value axes of the series-vs-closed comparison grid.
pub const SERIES_GRID_Z: [C64; 5] = [
    C64::new(-1.0, 0.0),
    C64::new(-0.5, 0.5),
    C64::new(0.0, 0.0),
    C64::new(0.6, -0.4),
    C64::new(1.0, 0.0),
];
pub const SERIES_GRID_W: [C64; 5] = [
    C64::new(-0.5, 0.0),
    C64::new(-0.25, 0.25),
    C64::new(0.0, 0.0),
    C64::new(0.3, 0.2),
    C64::new(0.5, 0.0),
];

/// Worst relative gap between the closed form and the bilinear series at
/// the given truncation, over the 5^4 comparison grid.
pub fn series_grid_residual(n_terms: u32, s_terms: u32) -> f64 {
    let kk = bk(1.0);
    let mut worst = 0.0f64;
    for z in SERIES_GRID_Z {
        for w in SERIES_GRID_W {
            for z2 in SERIES_GRID_Z {
                for w2 in SERIES_GRID_W {
                    let x = PhasePoint::new(z, w).expect("in disk");
                    let y = PhasePoint::new(z2, w2).expect("in disk");
                    let closed = kernel(kk, &x, &y);
                    let series = kernel_series(kk, &x, &y, n_terms, s_terms).expect("q > 0");
                    worst = worst.max((closed - series).norm() / closed.norm());
                }
            }
        }
    }
    worst
}

/// Closed form vs bilinear series on the grid |z|,|z'| <= 1, |w|,|w'| <= 0.5.
///
/// Run at N = S = 60: the Fock-sum tail behaves like |w|^n e^{2|z| sqrt(2n)},
/// so at the (|z|, |w|) = (1, 0.5) corner of this domain 40 terms still
/// leave ~2e-7 and the series needs ~55 terms to reach 1e-8.
pub fn series_vs_closed(cfg: &SuiteConfig) -> CheckRecord {
    let at60 = series_grid_residual(60, 60);
    let at40 = series_grid_residual(40, 40);
    CheckRecord::measured(
        "ker.series_vs_closed",
        "bilinear basis expansion converges to the closed form",
        "5^4 grid, |z| <= 1, |w| <= 0.5, N = S = 60, k = 1",
        at60,
        cfg.tol("kernel", tol::KERNEL_SERIES_REL),
    )
    .with_note(format!(
        "at N = S = 40 the worst grid residual is {at40:.3e}: the joint (|z|, |w|) corner \
         dominates the tail and needs ~55 Fock terms for 1e-8"
    ))
}

/// Positivity witness: smallest Gram eigenvalue over random point sets.
pub fn gram_positivity(cfg: &SuiteConfig) -> CheckRecord {
    let id = "ker.gram_psd";
    let mut rng = rng_for(cfg, id);
    let kk = bk(1.0);
    // a single point at the origin gives the 1x1 Gram [1]
    let single = gram_min_eigenvalue(kk, &[PhasePoint::origin()]).expect("1x1 gram");
    let mut residual = (single - 1.0).abs();
    let pts: Vec<_> = (0..10).map(|_| random_point(&mut rng, 1.0, 0.6)).collect();
    let min_eig = gram_min_eigenvalue(kk, &pts).expect("dense eigensolve");
    // the lower bound as a residual: the negative part of the eigenvalue
    residual = residual.max((-min_eig).max(0.0));
    CheckRecord::measured(
        id,
        "Gram matrices of the kernel are positive semidefinite",
        "10 seeded points, k = 1",
        residual,
        cfg.tol("kernel", -tol::GRAM_MIN_EIG),
    )
    .with_note(format!("min eigenvalue {min_eig:.3e}"))
}

/// Transformation law under 100 seeded group elements.
pub fn transform(cfg: &SuiteConfig) -> CheckRecord {
    let id = "ker.transform";
    let mut rng = rng_for(cfg, id);
    let kk = bk(1.0);
    let mut worst = kernel_transform_residual(
        kk,
        &jacobi_states::JacobiElement::identity(),
        &pt(0.2, 0.1, 0.3, 0.0),
        &pt(-0.4, 0.2, 0.1, 0.2),
    );
    for _ in 0..cfg.samples_or(100) {
        let h = random_jacobi(&mut rng, 1.0, 1.0);
        let x = random_point(&mut rng, 1.0, 0.6);
        let y = random_point(&mut rng, 1.0, 0.6);
        worst = worst.max(kernel_transform_residual(kk, &h, &x, &y));
    }
    CheckRecord::measured(
        id,
        "K(hx, hx') = J(h,x) K(x,x') conj(J(h,x'))",
        "100 seeded (h, x, x'), k = 1, |b| <= 1, |alpha| <= 1",
        worst,
        cfg.tol("kernel", tol::KERNEL_TRANSFORM_REL),
    )
}

/// |J|^2 against the kernel diagonal.
pub fn multiplier_modulus(cfg: &SuiteConfig) -> CheckRecord {
    let id = "ker.multiplier_modulus";
    let mut rng = rng_for(cfg, id);
    let kk = bk(1.0);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples_or(100) {
        let h = random_jacobi(&mut rng, 0.7, 1.0);
        let x = random_point(&mut rng, 1.0, 0.6);
        let j = multiplier(kk, &h, &x).norm_sqr();
        let hx = act(&h, &x);
        let ratio = kernel(kk, &hx, &hx).re / kernel(kk, &x, &x).re;
        worst = worst.max((j - ratio).abs() / ratio);
    }
    CheckRecord::measured(
        id,
        "|J(h,x)|^2 = K(hx, hx)/K(x, x)",
        "100 seeded (h, x), k = 1",
        worst,
        cfg.tol("kernel", tol::MULTIPLIER_MODULUS_REL),
    )
}

pub fn run(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut out = vec![spots(cfg)];
    out.extend(symmetry_and_diagonal(cfg));
    out.push(factor_lines(cfg));
    out.push(series_vs_closed(cfg));
    out.push(gram_positivity(cfg));
    out.push(transform(cfg));
    out.push(multiplier_modulus(cfg));
    out
}
