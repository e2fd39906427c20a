//! Checks of the special polynomials and the classical summation
//! identities.

use num_complex::Complex64 as C64;
use rand::Rng;

use jacobi_states::algebra::BargmannIndex;
use jacobi_states::special::{
    basis_fn, binomial_series_residual, generating_fn, hermite, mehler_residual, pn,
    pn_via_hermite, reference,
};
use jacobi_states::PhasePoint;

use crate::config::SuiteConfig;
use crate::report::CheckRecord;
use crate::suites::{random_complex, random_disk, rng_for};
use crate::tolerances as tol;

fn bk(v: f64) -> BargmannIndex<f64> {
    BargmannIndex::new(v).expect("positive index")
}

/// Recurrence route vs the explicit finite sum for P_n.
pub fn pn_routes(cfg: &SuiteConfig) -> CheckRecord {
    let id = "sp.pn.recurrence_vs_sum";
    let mut rng = rng_for(cfg, id);
    let samples = cfg.samples_or(200);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let z = random_complex(&mut rng, 2.0);
        let w = random_complex(&mut rng, 0.9);
        for n in [0u32, 3, 7, 12, 18, 25] {
            let a = pn(n, z, w);
            let b = reference::pn_direct_sum(n, z, w);
            worst = worst.max((a - b).norm() / a.norm().max(1.0));
        }
    }
    CheckRecord::measured(
        id,
        "P_n by recurrence equals the explicit finite sum",
        &format!("{samples} samples, |z| <= 2, |w| <= 0.9, n <= 25"),
        worst,
        cfg.tol("special", tol::PN_ROUTE_REL),
    )
}

/// Hermite-function route, including branch independence of sqrt(w).
pub fn pn_hermite_route(cfg: &SuiteConfig) -> CheckRecord {
    let id = "sp.pn.hermite_route";
    let mut rng = rng_for(cfg, id);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples_or(100) {
        let z = random_complex(&mut rng, 1.5);
        let w = loop {
            let w = random_complex(&mut rng, 0.9);
            if w.norm() > 1e-3 {
                break w;
            }
        };
        for n in 0..=8u32 {
            let direct = pn(n, z, w);
            let viah = pn_via_hermite(n, z, w).expect("w != 0");
            let scale = direct.norm().max(1.0);
            worst = worst.max((direct - viah).norm() / scale);
            // flipped branch of sqrt(w)
            let sqrt_w = -w.sqrt();
            let i = C64::new(0.0, 1.0);
            let s2 = 2.0f64.sqrt();
            let flipped = (i * sqrt_w / s2).powu(n) * hermite(n, -i * z / (s2 * sqrt_w));
            worst = worst.max((direct - flipped).norm() / scale);
        }
    }
    CheckRecord::measured(
        id,
        "P_n = (i/sqrt2)^n w^{n/2} H_n(-iz/sqrt(2w)), branch independent",
        "100 samples, n <= 8",
        worst,
        cfg.tol("special", tol::PN_HERMITE_REL),
    )
}

/// Homogeneity P_n(az, a^2 w) = a^n P_n(z, w).
pub fn pn_homogeneity(cfg: &SuiteConfig) -> CheckRecord {
    let id = "sp.pn.homogeneity";
    let mut rng = rng_for(cfg, id);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples_or(100) {
        let z = random_complex(&mut rng, 1.0);
        let w = random_complex(&mut rng, 0.9);
        let lam = random_complex(&mut rng, 1.5);
        for n in [0u32, 1, 2, 5, 8] {
            let lhs = pn(n, lam * z, lam * lam * w);
            let rhs = lam.powu(n) * pn(n, z, w);
            worst = worst.max((lhs - rhs).norm() / rhs.norm().max(1.0));
        }
    }
    CheckRecord::measured(
        id,
        "P_n(az, a^2 w) = a^n P_n(z, w)",
        "100 samples, n <= 8",
        worst,
        cfg.tol("special", tol::PN_HOMOGENEITY_REL),
    )
}

/// The special lines P_n(z, 0) = z^n, P_{2p+1}(0, w) = 0,
/// P_{2p}(0, w) = (2p)! w^p/(2^p p!).
pub fn pn_special_lines(cfg: &SuiteConfig) -> CheckRecord {
    let id = "sp.pn.special_lines";
    let mut rng = rng_for(cfg, id);
    let zero = C64::new(0.0, 0.0);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples_or(50) {
        let z = random_complex(&mut rng, 1.5);
        let w = random_complex(&mut rng, 0.9);
        for n in 0..=8u32 {
            let on_axis = pn(n, z, zero);
            worst = worst.max((on_axis - z.powu(n)).norm() / z.powu(n).norm().max(1.0));
        }
        worst = worst.max(pn(5, zero, w).norm());
        worst = worst.max(pn(7, zero, w).norm());
        // (2p)!/(2^p p!) at p = 2 is 3, at p = 3 is 15
        worst = worst.max((pn(4, zero, w) - w * w * 3.0).norm());
        worst = worst.max((pn(6, zero, w) - w * w * w * 15.0).norm());
    }
    CheckRecord::measured(
        id,
        "P_n(z,0) = z^n; P_odd(0,w) = 0; P_{2p}(0,w) = (2p)! w^p/(2^p p!)",
        "50 samples, n <= 8",
        worst,
        cfg.tol("special", tol::SPOT_VALUE),
    )
}

/// Taylor tail of the generating function at 40 terms.
pub fn generating_tail(cfg: &SuiteConfig) -> CheckRecord {
    let id = "sp.generating.tail";
    let mut rng = rng_for(cfg, id);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples_or(50) {
        let t = random_complex(&mut rng, 1.0);
        let z = random_complex(&mut rng, 1.0);
        let w = random_disk(&mut rng, 0.5);
        let g = generating_fn(t, z, w);
        let mut sum = C64::new(0.0, 0.0);
        let mut t_pow = C64::new(1.0, 0.0);
        let mut fact = 1.0f64;
        for n in 0..=40u32 {
            if n > 0 {
                fact *= n as f64;
            }
            sum += t_pow * pn(n, z, w) / fact;
            t_pow *= t;
        }
        worst = worst.max((g - sum).norm());
    }
    CheckRecord::measured(
        id,
        "exp(zt + wt^2/2) equals its 40-term series in P_n/n!",
        "50 samples, |t| <= 1, |z| <= 1, |w| <= 0.5",
        worst,
        cfg.tol("special", tol::GENERATING_TAIL),
    )
}

/// Mehler bilinear sum against its closed form.
pub fn mehler(cfg: &SuiteConfig) -> CheckRecord {
    let id = "sp.mehler";
    let mut rng = rng_for(cfg, id);
    // the two pinned examples plus a sweep
    let mut worst = mehler_residual(0.0f64, 0.0, 0.5, 60);
    worst = worst.max(mehler_residual(1.0f64, -1.0, 0.3, 80));
    worst = worst.max(mehler_residual(0.3f64, 1.7, 0.0, 1));
    for _ in 0..cfg.samples_or(100) {
        let x = rng.gen_range(-2.0..2.0);
        let y = rng.gen_range(-2.0..2.0);
        let s = rng.gen_range(-0.5..0.5);
        worst = worst.max(mehler_residual(x, y, s, 80));
    }
    CheckRecord::measured(
        id,
        "sum (s/2)^n H_n(x)H_n(y)/n! = (1-s^2)^{-1/2} exp((2xys-(x^2+y^2)s^2)/(1-s^2))",
        "pinned cases + 100 samples, |s| <= 0.5, 80 terms",
        worst,
        cfg.tol("special", tol::CLASSICAL_SUM),
    )
}

/// Binomial summation against (1-x)^{-q}.
pub fn binomial(cfg: &SuiteConfig) -> CheckRecord {
    let id = "sp.binomial";
    let mut rng = rng_for(cfg, id);
    let mut worst = 0.0f64;
    for q in [0.5f64, 1.5, 2.0] {
        for x in [C64::new(0.5, 0.0), C64::new(-0.5, 0.0), C64::new(0.3, 0.4)] {
            worst = worst.max(binomial_series_residual(x, q, 60));
        }
        for _ in 0..cfg.samples_or(50) {
            let x = random_disk(&mut rng, 0.5);
            worst = worst.max(binomial_series_residual(x, q, 60));
        }
    }
    CheckRecord::measured(
        "sp.binomial",
        "sum x^m Gamma(q+m)/(m! Gamma(q)) = (1-x)^{-q}",
        "q in {1/2, 3/2, 2}, |x| <= 0.5, 60 terms",
        worst,
        cfg.tol("special", tol::CLASSICAL_SUM),
    )
}

/// Spot values of the basis functions.
pub fn basis_spots(cfg: &SuiteConfig) -> CheckRecord {
    let id = "sp.basis.spots";
    let mut rng = rng_for(cfg, id);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples_or(50) {
        let x = PhasePoint::new(random_complex(&mut rng, 1.0), random_disk(&mut rng, 0.9))
            .expect("in the disk");
        let one = basis_fn(0, bk(0.8), 0, x).expect("no pole");
        worst = worst.max((one - C64::new(1.0, 0.0)).norm());
        let z = basis_fn(1, bk(1.0), 0, x).expect("no pole");
        worst = worst.max((z - x.z).norm());
        let w = basis_fn(0, bk(1.0), 1, x).expect("no pole");
        worst = worst.max((w - x.w * 1.5f64.sqrt()).norm());
    }
    CheckRecord::measured(
        id,
        "f_{0k0} = 1, f_{1k0} = z, f_{0,1,1} = sqrt(3/2) w",
        "50 samples",
        worst,
        cfg.tol("special", tol::SPOT_VALUE),
    )
}

pub fn run(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    vec![
        pn_routes(cfg),
        pn_hermite_route(cfg),
        pn_homogeneity(cfg),
        pn_special_lines(cfg),
        generating_tail(cfg),
        mehler(cfg),
        binomial(cfg),
        basis_spots(cfg),
    ]
}
