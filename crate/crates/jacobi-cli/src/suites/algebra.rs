//! Checks of the differential realization and the truncated matrices.

use num_complex::Complex64 as C64;

use jacobi_states::algebra::{
    apply_generator, commutation_residuals, fock_operator_matrices, su11_lowering, su11_raising,
    su11_weight, BargmannIndex, GeneratorName,
};
use jacobi_states::special::ln_gamma;
use jacobi_states::BivarPoly;

use crate::config::SuiteConfig;
use crate::report::CheckRecord;
use crate::tolerances as tol;

fn bk(v: f64) -> BargmannIndex<f64> {
    BargmannIndex::new(v).expect("positive index")
}

/// All ten commutation relations on every monomial of total degree <= 8,
/// for each k; residuals must be identically zero.
pub fn commutators(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    [0.3, 1.0, 2.75]
        .into_iter()
        .map(|kv| {
            let report = commutation_residuals(bk(kv), 8);
            let worst_rel = report
                .relations
                .iter()
                .max_by(|a, b| a.max_residual.partial_cmp(&b.max_residual).unwrap())
                .expect("nonempty relation list");
            CheckRecord::measured(
                &format!("alg.commutators.k{kv}"),
                "Jacobi algebra commutation relations on monomials, degree <= 8",
                &format!("k={kv}, max_degree=8"),
                report.max_residual,
                cfg.tol("algebra", tol::COMMUTATOR_EXACT),
            )
            .with_note(format!(
                "worst relation: {} ({:.1e})",
                worst_rel.relation, worst_rel.max_residual
            ))
        })
        .collect()
}

/// Linearity of the generator action: exact for dyadic data, a few ulps in
/// general.
pub fn linearity(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let gens = [
        GeneratorName::A,
        GeneratorName::ADag,
        GeneratorName::KMinus,
        GeneratorName::KZero,
        GeneratorName::KPlus,
    ];
    let c = C64::new;

    // dyadic k, scalars and coefficients: exact
    let kk = bk(2.75);
    let p = BivarPoly::from_terms([((2, 1), c(1.0, -0.5)), ((0, 3), c(0.25, 2.0))]);
    let q = BivarPoly::from_terms([((1, 0), c(3.0, 0.0)), ((4, 2), c(-0.5, 0.125))]);
    let (alpha, beta) = (c(0.5, -0.25), c(2.0, 1.5));
    let mut worst_dyadic = 0.0f64;
    for gen in gens {
        let combined = apply_generator(gen, kk, &p.scale(alpha).add(&q.scale(beta)));
        let separate = apply_generator(gen, kk, &p)
            .scale(alpha)
            .add(&apply_generator(gen, kk, &q).scale(beta));
        worst_dyadic = worst_dyadic.max(combined.sub(&separate).max_abs_coeff());
    }

    // generic k and scalars: bounded by rounding
    let kk = bk(0.3);
    let (alpha, beta) = (c(0.37, -1.21), c(-0.64, 0.55));
    let mut worst_float = 0.0f64;
    for gen in gens {
        let combined = apply_generator(gen, kk, &p.scale(alpha).add(&q.scale(beta)));
        let separate = apply_generator(gen, kk, &p)
            .scale(alpha)
            .add(&apply_generator(gen, kk, &q).scale(beta));
        worst_float = worst_float.max(combined.sub(&separate).max_abs_coeff());
    }

    vec![
        CheckRecord::measured(
            "alg.linearity.dyadic",
            "generator action is linear (exact on dyadic data)",
            "k=2.75, dyadic coefficients",
            worst_dyadic,
            cfg.tol("algebra", tol::COMMUTATOR_EXACT),
        ),
        CheckRecord::measured(
            "alg.linearity.float",
            "generator action is linear (general data, rounding only)",
            "k=0.3, generic coefficients",
            worst_float,
            cfg.tol("algebra", tol::LINEARITY_FLOAT),
        ),
    ]
}

/// Structural checks of the truncated matrices.
pub fn matrix_realization(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let kk = bk(1.0);
    let (n, m) = (10usize, 8usize);
    let ops = fock_operator_matrices(kk, n, m).expect("valid truncation");
    let mut out = Vec::new();

    // exact adjoint pairs: identical float expressions on both sides
    let adj = ops
        .a_dag
        .max_abs_diff(&ops.a.adjoint())
        .max(ops.k_minus.max_abs_diff(&ops.k_plus.adjoint()));
    out.push(CheckRecord::measured(
        "alg.matrix.adjoint_pairs",
        "a+ = a^H and K- = K+^H entry by entry",
        &format!("k=1, N={n}, M={m}"),
        adj,
        cfg.tol("algebra", tol::MATRIX_STRUCTURAL_EXACT),
    ));

    // K0 is real diagonal with entries k + n/2 + m
    let mut k0_residual = 0.0f64;
    for nn in 0..n {
        for mm in 0..m {
            let idx = nn * m + mm;
            let expected = 1.0 + nn as f64 / 2.0 + mm as f64;
            k0_residual = k0_residual
                .max((ops.k_zero[(idx, idx)] - C64::new(expected, 0.0)).norm());
        }
    }
    out.push(CheckRecord::measured(
        "alg.matrix.k0_diagonal",
        "K0 diagonal entries are k + n/2 + m",
        &format!("k=1, N={n}, M={m}"),
        k0_residual,
        cfg.tol("algebra", tol::MATRIX_ASSEMBLY),
    ));

    // [a, a+] = 1 away from the last Fock level; -(N-1) on it
    let comm = ops.a.mul(&ops.a_dag).sub(&ops.a_dag.mul(&ops.a));
    let dim = n * m;
    let mut ccr_residual = 0.0f64;
    for r in 0..dim {
        for cidx in 0..dim {
            let expected = if r == cidx {
                if r / m < n - 1 {
                    C64::new(1.0, 0.0)
                } else {
                    C64::new(-((n - 1) as f64), 0.0)
                }
            } else {
                C64::new(0.0, 0.0)
            };
            ccr_residual = ccr_residual.max((comm[(r, cidx)] - expected).norm());
        }
    }
    out.push(CheckRecord::measured(
        "alg.matrix.ccr_boundary",
        "[a, a+] = 1 except the last Fock diagonal entry",
        &format!("k=1, N={n}, M={m}"),
        ccr_residual,
        cfg.tol("algebra", tol::MATRIX_ASSEMBLY),
    ));

    // primed Casimir away from the ladder boundary
    let kp = kk.k_prime();
    let plus = su11_raising(kp, m);
    let minus = su11_lowering(kp, m);
    let zero = su11_weight(kp, m);
    let casimir = zero.mul(&zero).sub(
        &plus
            .mul(&minus)
            .add(&minus.mul(&plus))
            .scale(C64::new(0.5, 0.0)),
    );
    let expected = kp * (kp - 1.0);
    let mut cas_residual = 0.0f64;
    for r in 0..m - 1 {
        for cidx in 0..m - 1 {
            let want = if r == cidx {
                C64::new(expected, 0.0)
            } else {
                C64::new(0.0, 0.0)
            };
            cas_residual = cas_residual.max((casimir[(r, cidx)] - want).norm());
        }
    }
    out.push(CheckRecord::measured(
        "alg.matrix.casimir_primed",
        "K'0^2 - (K'+K'- + K'-K'+)/2 = k'(k'-1) away from the boundary",
        &format!("k'={kp}, M={m}"),
        cas_residual,
        cfg.tol("algebra", tol::MATRIX_ASSEMBLY),
    ));

    // ladder coefficients reproduce the canonical normalized basis
    let mut v = vec![C64::new(0.0, 0.0); m];
    v[0] = C64::new(1.0, 0.0);
    let mut ln_fact = 0.0f64;
    let mut ladder_residual = 0.0f64;
    for step in 1..m {
        v = plus.matvec(&v);
        ln_fact += (step as f64).ln();
        let scale = (0.5 * (ln_gamma(2.0 * kp) - ln_fact - ln_gamma(2.0 * kp + step as f64))).exp();
        for (idx, val) in v.iter().enumerate() {
            let want = if idx == step { 1.0 } else { 0.0 };
            ladder_residual = ladder_residual.max((val * scale - C64::new(want, 0.0)).norm());
        }
    }
    out.push(CheckRecord::measured(
        "alg.matrix.ladder_normalization",
        "(K'+)^m on the lowest vector matches the canonical basis normalization",
        &format!("k'={kp}, M={m}"),
        ladder_residual,
        cfg.tol("algebra", tol::MATRIX_ASSEMBLY),
    ));

    // lowest-weight conditions on e0, exactly
    let e0: Vec<C64> = (0..dim)
        .map(|i| C64::new(if i == 0 { 1.0 } else { 0.0 }, 0.0))
        .collect();
    let a_e0 = ops.a.matvec(&e0);
    let km_e0 = ops.k_minus.matvec(&e0);
    let k0_e0 = ops.k_zero.matvec(&e0);
    let mut lw_residual = 0.0f64;
    for i in 0..dim {
        lw_residual = lw_residual.max(a_e0[i].norm()).max(km_e0[i].norm());
        let want = if i == 0 { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
        lw_residual = lw_residual.max((k0_e0[i] - want).norm());
    }
    out.push(CheckRecord::measured(
        "alg.matrix.lowest_weight",
        "a e0 = 0, K- e0 = 0, K0 e0 = k e0",
        &format!("k=1, N={n}, M={m}"),
        lw_residual,
        cfg.tol("algebra", tol::MATRIX_STRUCTURAL_EXACT),
    ));

    // guards
    let guard_ok = fock_operator_matrices(bk(0.25), 4, 4).is_err()
        && fock_operator_matrices(bk(0.2), 4, 4).is_err()
        && fock_operator_matrices(bk(0.26), 4, 4).is_ok();
    out.push(CheckRecord::measured(
        "alg.matrix.kprime_guard",
        "matrix realization rejects k <= 1/4",
        "k in {0.2, 0.25, 0.26}",
        if guard_ok { 0.0 } else { 1.0 },
        0.0,
    ));

    out
}

/// Degree bookkeeping of the generator action.
pub fn degree_bookkeeping(cfg: &SuiteConfig) -> CheckRecord {
    let kk = bk(1.5);
    let mut worst = 0.0f64;
    for i in 0..=4u32 {
        for j in 0..=4u32 {
            let p = BivarPoly::monomial(i, j, C64::new(1.0, -0.5));
            let kp = apply_generator(GeneratorName::KPlus, kk, &p);
            if kp.total_degree() > p.total_degree() + 2 {
                worst = 1.0;
            }
            let ap = apply_generator(GeneratorName::A, kk, &p);
            if i >= 1 && ap.degree_z() != i - 1 {
                worst = 1.0;
            }
        }
    }
    CheckRecord::measured(
        "alg.degree_bookkeeping",
        "K+ raises total degree by at most 2; a lowers the z-degree by 1",
        "monomials up to degree 8",
        worst,
        cfg.tol("algebra", tol::COMMUTATOR_EXACT),
    )
}

pub fn run(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut out = commutators(cfg);
    out.extend(linearity(cfg));
    out.extend(matrix_realization(cfg));
    out.push(degree_bookkeeping(cfg));
    out
}
