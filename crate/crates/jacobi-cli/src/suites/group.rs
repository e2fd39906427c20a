//! Checks of the group arithmetic, the action, and the multiplier cocycle.

use num_complex::Complex64 as C64;

use jacobi_states::algebra::BargmannIndex;
use jacobi_states::group::{
    act, cocycle_residual, compose, inverse, multiplier, ActionData, JacobiElement, SU11Element,
};
use jacobi_states::PhasePoint;

use crate::config::SuiteConfig;
use crate::report::CheckRecord;
use crate::suites::{random_complex, random_jacobi, random_point, rng_for};
use crate::tolerances as tol;

fn bk(v: f64) -> BargmannIndex<f64> {
    BargmannIndex::new(v).expect("positive index")
}

/// Identity, inverse, and associativity on seeded elements.
pub fn axioms(cfg: &SuiteConfig) -> CheckRecord {
    let id = "gr.axioms";
    let mut rng = rng_for(cfg, id);
    let samples = cfg.samples_or(100);
    let idel = JacobiElement::<f64>::identity();
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let h1 = random_jacobi(&mut rng, 1.0, 1.0);
        let h2 = random_jacobi(&mut rng, 1.0, 1.0);
        let h3 = random_jacobi(&mut rng, 1.0, 1.0);
        // identity from both sides
        for v in [compose(&idel, &h1), compose(&h1, &idel)] {
            worst = worst
                .max((v.alpha - h1.alpha).norm())
                .max((v.t - h1.t).abs())
                .max((v.g.a() - h1.g.a()).norm())
                .max((v.g.b() - h1.g.b()).norm());
        }
        // inverse
        let e = compose(&h1, &inverse(&h1));
        worst = worst
            .max((e.g.a() - C64::new(1.0, 0.0)).norm())
            .max(e.g.b().norm())
            .max(e.alpha.norm())
            .max(e.t.abs());
        // associativity
        let left = compose(&compose(&h1, &h2), &h3);
        let right = compose(&h1, &compose(&h2, &h3));
        worst = worst
            .max((left.g.a() - right.g.a()).norm())
            .max((left.g.b() - right.g.b()).norm())
            .max((left.alpha - right.alpha).norm())
            .max((left.t - right.t).abs());
    }
    CheckRecord::measured(
        id,
        "identity, inverse, associativity of the composition law",
        &format!("{samples} seeded triples, |b| <= 1, |alpha| <= 1"),
        worst,
        cfg.tol("group", tol::GROUP_AXIOM_ABS),
    )
}

/// Pinned arithmetic spots.
pub fn spots(cfg: &SuiteConfig) -> CheckRecord {
    let mut worst = 0.0f64;
    // (e,1,0) o (e,i,0) = (e, 1+i, -1)
    let prod = compose(
        &JacobiElement::translation(C64::new(1.0, 0.0), 0.0),
        &JacobiElement::translation(C64::new(0.0, 1.0), 0.0),
    );
    worst = worst
        .max((prod.alpha - C64::new(1.0, 1.0)).norm())
        .max((prod.t + 1.0).abs());
    // g = (sqrt2, 1): g^{-1}.i = (sqrt2 + 1) i
    let g = SU11Element::new(C64::new(2.0f64.sqrt(), 0.0), C64::new(1.0, 0.0)).expect("valid");
    worst = worst.max(
        (g.inv_act_alpha(C64::new(0.0, 1.0)) - C64::new(0.0, 2.0f64.sqrt() + 1.0)).norm(),
    );
    // translation by 1 moves the origin to (1, 0)
    let h = JacobiElement::translation(C64::new(1.0, 0.0), 0.0);
    let y = act(&h, &PhasePoint::origin());
    worst = worst.max((y.z - C64::new(1.0, 0.0)).norm()).max(y.w.norm());
    // g = (sqrt2, 1) moves the origin to (0, 1/sqrt2)
    let y = act(&JacobiElement::rotation(g), &PhasePoint::origin());
    worst = worst
        .max(y.z.norm())
        .max((y.w - C64::new(1.0 / 2.0f64.sqrt(), 0.0)).norm());
    CheckRecord::measured(
        "gr.spots",
        "hand-evaluated composition, inverse action, and point-map values",
        "pinned arguments",
        worst,
        cfg.tol("group", tol::SPOT_VALUE),
    )
}

/// The action keeps |w| < 1.
pub fn disk_preservation(cfg: &SuiteConfig) -> CheckRecord {
    let id = "gr.disk_preservation";
    let mut rng = rng_for(cfg, id);
    let samples = cfg.samples_or(200);
    let mut worst_w = 0.0f64;
    for _ in 0..samples {
        let h = random_jacobi(&mut rng, 1.5, 1.0);
        let x = random_point(&mut rng, 1.0, 0.8);
        worst_w = worst_w.max(act(&h, &x).w.norm());
    }
    // residual: how far past the boundary the image ever lands
    CheckRecord::measured(
        id,
        "act(h, x) stays inside the unit disk in w",
        &format!("{samples} seeded (h, x), |b| <= 1.5"),
        (worst_w - 1.0).max(0.0),
        0.0,
    )
    .with_note(format!("largest image |w| = {worst_w:.6}"))
}

/// Pinned multiplier values.
pub fn multiplier_spots(cfg: &SuiteConfig) -> CheckRecord {
    let id = "gr.multiplier.spots";
    let mut rng = rng_for(cfg, id);
    let kk = bk(1.0);
    let x = PhasePoint::from_parts(0.3, 0.5, -0.2, 0.1).expect("in disk");
    let mut worst = (multiplier(kk, &JacobiElement::identity(), &x) - C64::new(1.0, 0.0)).norm();
    for _ in 0..cfg.samples_or(50) {
        // alpha = 0 at the origin: J = conj(a)^{2k}
        let g = super::random_su11(&mut rng, 1.0);
        let j = multiplier(kk, &JacobiElement::rotation(g), &PhasePoint::origin());
        worst = worst.max((j - g.a().conj().powu(2)).norm());
        // pure translation: J = exp(conj(alpha)(z + gamma)/2)
        let alpha = random_complex(&mut rng, 1.0);
        let h = JacobiElement::translation(alpha, 0.0);
        let gamma = x.z + alpha - alpha.conj() * x.w;
        let expected = (alpha.conj() * (x.z + gamma) * 0.5).exp();
        worst = worst.max((multiplier(kk, &h, &x) - expected).norm() / expected.norm());
    }
    CheckRecord::measured(
        id,
        "J(identity) = 1; J(g, origin) = conj(a)^{2k}; translation J is a pure exponential",
        "pinned + 50 seeded elements, k = 1",
        worst,
        cfg.tol("group", tol::SPOT_VALUE),
    )
}

/// Cocycle of the centered multiplier and compatibility of the action with
/// composition.
pub fn cocycle(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let id = "gr.cocycle";
    let mut rng = rng_for(cfg, id);
    let kk = bk(1.0);
    let samples = cfg.samples_or(100);
    let mut worst_mult = 0.0f64;
    let mut worst_act = 0.0f64;
    for _ in 0..samples {
        let h1 = random_jacobi(&mut rng, 1.0, 1.0);
        let h2 = random_jacobi(&mut rng, 1.0, 1.0);
        let x = random_point(&mut rng, 1.0, 0.7);
        let r = cocycle_residual(kk, &h1, &h2, &x);
        worst_mult = worst_mult.max(r.multiplier);
        worst_act = worst_act.max(r.action);
    }
    vec![
        CheckRecord::measured(
            id,
            "J_c(h1 h2, x) = J_c(h1, h2 x) J_c(h2, x) with the center phase",
            &format!("{samples} seeded (h1, h2, x), k = 1"),
            worst_mult,
            cfg.tol("group", tol::COCYCLE_REL),
        ),
        CheckRecord::measured(
            "gr.action_compat",
            "act(h1, act(h2, x)) = act(h1 h2, x): the point map is a left action",
            &format!("{samples} seeded (h1, h2, x)"),
            worst_act,
            cfg.tol("group", tol::ACTION_COMPAT_ABS),
        ),
    ]
}

/// Principal-branch powers vs repeated multiplication for integer and
/// half-integer 2k.
pub fn branch_coherence(cfg: &SuiteConfig) -> CheckRecord {
    let id = "gr.branch_coherence";
    let mut rng = rng_for(cfg, id);
    let mut worst = 0.0f64;
    let samples = cfg.samples_or(50);
    for _ in 0..samples {
        let h = random_jacobi(&mut rng, 0.8, 1.0);
        let x = random_point(&mut rng, 1.0, 0.7);
        let d = ActionData::new(&h, &x);
        if d.kappa.re <= 0.0 {
            continue;
        }
        for two_k in [1u32, 2, 3, 4] {
            let kk = bk(two_k as f64 / 2.0);
            let j = multiplier(kk, &h, &x);
            let direct = d.kappa.powu(two_k) * d.lambda1.exp();
            worst = worst.max((j - direct).norm() / direct.norm());
        }
        for int_part in [0u32, 1, 2] {
            let kk = bk((int_part as f64 + 0.5) / 2.0);
            let j = multiplier(kk, &h, &x);
            let direct = d.kappa.powu(int_part) * d.kappa.sqrt() * d.lambda1.exp();
            worst = worst.max((j - direct).norm() / direct.norm());
        }
    }
    CheckRecord::measured(
        id,
        "kappa^{2k} principal branch equals repeated multiplication (Re kappa > 0)",
        &format!("{samples} seeded (h, x); 2k integer and half-integer"),
        worst,
        cfg.tol("group", tol::BRANCH_ABS),
    )
}

pub fn run(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut out = vec![
        axioms(cfg),
        spots(cfg),
        disk_preservation(cfg),
        multiplier_spots(cfg),
    ];
    out.extend(cocycle(cfg));
    out.push(branch_coherence(cfg));
    out
}
