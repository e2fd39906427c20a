//! The verification suites, one per library module. Every check is its own
//! function returning a [`CheckRecord`], so single criteria can be driven
//! directly (the acceptance tests do exactly that); `run_suite` assembles
//! whole suites for the CLI.

use num_complex::Complex64 as C64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use jacobi_states::{JacobiElement, PhasePoint, SU11Element};

use crate::config::SuiteConfig;
use crate::report::{fnv1a_hex, CheckRecord};

pub mod algebra;
pub mod group;
pub mod kernel;
pub mod measure;
pub mod special;
pub mod states;

pub const SUITES: [&str; 7] = [
    "algebra", "special", "kernel", "measure", "group", "states", "all",
];

/// Run one suite (or all of them).
pub fn run_suite(cfg: &SuiteConfig, suite: &str) -> Result<Vec<CheckRecord>, String> {
    match suite {
        "algebra" => Ok(algebra::run(cfg)),
        "special" => Ok(special::run(cfg)),
        "kernel" => Ok(kernel::run(cfg)),
        "measure" => Ok(measure::run(cfg)),
        "group" => Ok(group::run(cfg)),
        "states" => Ok(states::run(cfg)),
        "all" => {
            let mut out = Vec::new();
            out.extend(algebra::run(cfg));
            out.extend(special::run(cfg));
            out.extend(kernel::run(cfg));
            out.extend(measure::run(cfg));
            out.extend(group::run(cfg));
            out.extend(states::run(cfg));
            Ok(out)
        }
        other => Err(format!(
            "unknown suite `{other}` (expected one of {})",
            SUITES.join(", ")
        )),
    }
}

/// Deterministic per-check random stream: the seed mixes the config seed
/// with the check id, so checks are independent of execution order.
pub(crate) fn rng_for(cfg: &SuiteConfig, check_id: &str) -> ChaCha8Rng {
    let digest = u64::from_str_radix(&fnv1a_hex(check_id), 16).unwrap_or(0);
    ChaCha8Rng::seed_from_u64(cfg.seed ^ digest)
}

pub(crate) fn random_complex(rng: &mut ChaCha8Rng, max: f64) -> C64 {
    C64::new(rng.gen_range(-max..max), rng.gen_range(-max..max))
}

/// Uniform-ish point strictly inside the disk of the given radius.
pub(crate) fn random_disk(rng: &mut ChaCha8Rng, radius: f64) -> C64 {
    loop {
        let w = random_complex(rng, radius);
        if w.norm() < radius {
            return w;
        }
    }
}

pub(crate) fn random_su11(rng: &mut ChaCha8Rng, b_max: f64) -> SU11Element<f64> {
    let b = random_complex(rng, b_max);
    let phase = rng.gen_range(0.0..std::f64::consts::TAU);
    SU11Element::new(C64::from_polar((1.0 + b.norm_sqr()).sqrt(), phase), b)
        .expect("|a|^2 - |b|^2 = 1 by construction")
}

pub(crate) fn random_jacobi(
    rng: &mut ChaCha8Rng,
    b_max: f64,
    alpha_max: f64,
) -> JacobiElement<f64> {
    JacobiElement::new(
        random_su11(rng, b_max),
        random_complex(rng, alpha_max),
        rng.gen_range(-1.0..1.0),
    )
}

pub(crate) fn random_point(rng: &mut ChaCha8Rng, z_max: f64, w_max: f64) -> PhasePoint<f64> {
    PhasePoint::new(random_complex(rng, z_max), random_disk(rng, w_max))
        .expect("sample lies in the disk")
}
