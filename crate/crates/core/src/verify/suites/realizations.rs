//! Checks for the operator realizations: Witt relations, the graded
//! su(1,1) x Clifford construction, and the free-boson / free-fermion mode
//! algebras.
//!
//! The bosonic realization is implemented with the pairing
//! `[a_m, a_n^+] = delta_{m+n}`, the unique convention under which the
//! normal-ordered generator sum closes into the algebra with central
//! coefficient `c = 2 - 24 M lambda^2`. Under it the exact mode commutators
//! carry the standard primary-convention signs
//! (`[L_m, a_n] = -(m+n) a_{m+n} - lambda (m+1) delta`); the deviation of the
//! verbatim displayed signs from the verified ones is recorded as a finding,
//! alongside the unasserted closure residuals of the graded realization.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::rational::{fmt_rational, rat, rint, Rational};
use crate::realizations::graded::{super_bracket, CMatrix, GradedOperator, Parity};
use crate::realizations::modes::{
    boson_probe_states, fermion_probe_states, BosonModes, BosonParams, FermionModes,
};
use crate::realizations::svir::{bundled_reps, closure_residuals, ff_gg_vanish_exact, svir_build};
use crate::realizations::witt::{witt_commutator_defect, witt_su11_defects};
use crate::verify::config::SuiteConfig;
use crate::verify::report::{derive_seed, CheckRecord};

pub fn checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();

    // Witt relations, zero tolerance
    let mut witt_ok = true;
    for m in -6..=6i64 {
        for n in -6..=6i64 {
            for j in -12..=12i64 {
                witt_ok &= witt_commutator_defect(m, n, j)?.is_zero();
            }
        }
    }
    out.push(CheckRecord::exact(
        "witt.commutation_relations",
        witt_ok,
        "[L_m, L_n] = (m-n) L_{m+n} on z^j, |m|,|n| <= 6, |j| <= 12",
        ok_str(witt_ok),
    ));

    let mut su11_ok = true;
    for n in 1..=6i64 {
        for j in -8..=8i64 {
            su11_ok &= witt_su11_defects(n, j)?.iter().all(|d| d.is_zero());
        }
    }
    out.push(CheckRecord::exact(
        "witt.su11_triples",
        su11_ok,
        "{L_n, L_-n, L_0} closes as su(1,1) for n <= 6",
        ok_str(su11_ok),
    ));

    // graded bracket algebra on random exact matrices
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, "graded.jacobi"));
    let mut jacobi_ok = true;
    let mut adjoint_ok = true;
    let parities = [Parity::Even, Parity::Odd];
    for _ in 0..4 {
        for &px in &parities {
            for &py in &parities {
                for &pz in &parities {
                    let x = random_graded(&mut rng, 3, px);
                    let y = random_graded(&mut rng, 3, py);
                    let z = random_graded(&mut rng, 3, pz);
                    let lhs = super_bracket(&x, &super_bracket(&y, &z)?)?;
                    let t1 = super_bracket(&super_bracket(&x, &y)?, &z)?;
                    let t2 = super_bracket(&y, &super_bracket(&x, &z)?)?;
                    let sign = if px == Parity::Odd && py == Parity::Odd { rint(-1) } else { rint(1) };
                    jacobi_ok &= lhs.mat.sub(&t1.mat.add(&t2.mat.scale(&sign, &rint(0)))).is_zero();
                    adjoint_ok &= super_bracket(&x, &y)?.mat.adjoint()
                        == super_bracket(&y.adjoint(), &x.adjoint())?.mat;
                }
            }
        }
    }
    out.push(CheckRecord::exact(
        "graded.super_jacobi",
        jacobi_ok,
        "graded Jacobi identity, exact",
        ok_str(jacobi_ok),
    ));
    out.push(CheckRecord::exact(
        "graded.adjoint_compatibility",
        adjoint_ok,
        "([[X, Y]])^+ = [[Y^+, X^+]]",
        ok_str(adjoint_ok),
    ));

    // graded realization: asserted vanishing brackets plus reported closure
    for rep in bundled_reps(4) {
        let ops = svir_build(rep, 4)?;
        let vanish = ff_gg_vanish_exact(&ops, 4);
        out.push(
            CheckRecord::exact(
                "svir.ff_gg_vanish",
                vanish.is_ok(),
                "[[F_n, F_m]] = [[G_n, G_m]] = 0 exactly, 0 <= n, m <= 4",
                match &vanish {
                    Ok(()) => "holds exactly".to_string(),
                    Err(e) => format!("{e}"),
                },
            )
            .with_param("rep", ops.rep.name()),
        );

        for row in closure_residuals(&ops, 2)? {
            out.push(
                CheckRecord::finding(
                    "svir.closure_residual",
                    "not asserted; index bookkeeping is representation dependent",
                    format!("{:e}", row.residual),
                )
                .with_param("rep", ops.rep.name())
                .with_param("family", row.family)
                .with_param("n", row.n)
                .with_param("m", row.m)
                .with_residual(row.residual),
            );
        }

        // hermiticity compatibility on the realized generators
        let mut herm_ok = true;
        for (n, m) in [(0i64, 1i64), (1, 2), (2, 2)] {
            let lhs = super_bracket(&ops.l(n)?, &ops.l(m)?)?.mat.adjoint();
            let rhs = super_bracket(&ops.l(m)?.adjoint(), &ops.l(n)?.adjoint())?.mat;
            herm_ok &= lhs == rhs;
        }
        out.push(
            CheckRecord::exact(
                "svir.hermiticity",
                herm_ok,
                "([[L_n, L_m]])^+ = [[L_m^+, L_n^+]]",
                ok_str(herm_ok),
            )
            .with_param("rep", ops.rep.name()),
        );
    }

    // free boson realization: exact relations for sampled rational (lambda, M)
    let modes = BosonModes::new(cfg.mode_window)?;
    let large = BosonModes::new(cfg.mode_window + 4)?;
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, "modes.boson.samples"));
    let samples = sample_params(&mut rng, 5);
    let states = boson_probe_states(&modes, 3)?;
    for (idx, p) in samples.iter().enumerate() {
        let mut field_ok = true;
        let mut conj_ok = true;
        for m in -3..=3i64 {
            for n in -4..=4i64 {
                for s in &states {
                    field_ok &= modes.field_relation_defect(m, n, p, s)?.is_zero();
                    conj_ok &= modes.conjugate_relation_defect(m, n, p, s)?.is_zero();
                }
            }
        }
        let label = format!("lambda={},M={}", fmt_rational(&p.lambda), fmt_rational(&p.big_m));
        out.push(
            CheckRecord::exact(
                "modes.boson_field_relation",
                field_ok,
                "[L_m, a_n] = -(m+n) a_{m+n} - lambda (m+1) delta, exact",
                ok_str(field_ok),
            )
            .with_param("sample", idx)
            .with_param("params", &label),
        );
        out.push(
            CheckRecord::exact(
                "modes.boson_conjugate_relation",
                conj_ok,
                "[L_m, a_n^+] = -n a^+_{m+n} + lambda M m (m+1) delta, exact",
                ok_str(conj_ok),
            )
            .with_param("sample", idx)
            .with_param("params", &label),
        );

        let expect = rint(2) - rint(24) * &p.big_m * &p.lambda * &p.lambda;
        let c2 = modes.central_charge(2, p)?;
        let c3 = modes.central_charge(3, p)?;
        out.push(
            CheckRecord::exact(
                "modes.boson_central_charge",
                c2 == expect && c3 == expect,
                format!("c = 2 - 24 M lambda^2 = {}", fmt_rational(&expect)),
                format!("m=2: {}, m=3: {}", fmt_rational(&c2), fmt_rational(&c3)),
            )
            .with_param("sample", idx)
            .with_param("params", &label),
        );

        // convention-free form: subtract the free value at lambda = M = 0
        let base = modes.central_charge(2, &BosonParams { lambda: rint(0), big_m: rint(0) })?;
        let diff_ok = &c2 - &base == rint(-24) * &p.big_m * &p.lambda * &p.lambda;
        out.push(
            CheckRecord::exact(
                "modes.boson_central_difference",
                diff_ok,
                "c(lambda, M) - c(0, 0) = -24 M lambda^2, exact",
                ok_str(diff_ok),
            )
            .with_param("sample", idx)
            .with_param("params", &label),
        );

        let window_ok = (2..=3).all(|m| {
            modes.central_charge(m, p).unwrap() == large.central_charge(m, p).unwrap()
        });
        out.push(
            CheckRecord::exact(
                "modes.boson_window_independence",
                window_ok,
                format!("identical at windows {} and {}", cfg.mode_window, cfg.mode_window + 4),
                ok_str(window_ok),
            )
            .with_param("sample", idx)
            .with_param("params", &label),
        );
    }

    let l0 = modes.l0_vacuum_expectation(&BosonParams { lambda: rat(1, 2), big_m: rint(3) })?;
    out.push(CheckRecord::exact(
        "modes.boson_l0_vacuum",
        l0 == rint(0),
        "0 under the documented vacuum convention",
        fmt_rational(&l0),
    ));

    // the sign convention of the displayed pair, recorded not asserted
    out.push(CheckRecord::finding(
        "modes.boson_displayed_convention",
        "displayed: [L_m, a_n] = +(m+n) a_{m+n} - lambda(m+1) delta; \
         [L_m, a_n^+] = +n a^+_{m+n} - lambda M m(m+1) delta",
        "verified: [L_m, a_n] = -(m+n) a_{m+n} - lambda(m+1) delta; \
         [L_m, a_n^+] = -n a^+_{m+n} + lambda M m(m+1) delta \
         (pairing [a_m, a_n^+] = delta_{m+n}, fixed by closure and by c = 2 - 24 M lambda^2)",
    ));

    // free fermion realization
    let fmodes = FermionModes::new(cfg.mode_window)?;
    let fstates = fermion_probe_states(&fmodes, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, "modes.fermion.samples"));
    let lambdas: Vec<Rational> = (0..5)
        .map(|_| rat(rng.random_range(-5..=5), rng.random_range(1..=4)))
        .collect();
    for (idx, lambda) in lambdas.iter().enumerate() {
        let mut field_ok = true;
        let mut conj_ok = true;
        for m in -3..=3i64 {
            for tr in [-5i64, -3, -1, 1, 3, 5] {
                for s in &fstates {
                    field_ok &= fmodes.field_relation_defect(m, tr, lambda, s)?.is_zero();
                    conj_ok &= fmodes.conjugate_relation_defect(m, tr, lambda, s)?.is_zero();
                }
            }
        }
        out.push(
            CheckRecord::exact(
                "modes.fermion_field_relation",
                field_ok,
                "[L_m, f_r] = ((1-lambda) m + r) f_{m+r}, exact",
                ok_str(field_ok),
            )
            .with_param("sample", idx)
            .with_param("lambda", fmt_rational(lambda)),
        );
        out.push(
            CheckRecord::exact(
                "modes.fermion_conjugate_relation",
                conj_ok,
                "[L_m, f_r^+] = (lambda m + r) f^+_{m+r}, exact",
                ok_str(conj_ok),
            )
            .with_param("sample", idx)
            .with_param("lambda", fmt_rational(lambda)),
        );
    }

    Ok(out)
}

fn sample_params(rng: &mut ChaCha8Rng, count: usize) -> Vec<BosonParams> {
    (0..count)
        .map(|_| BosonParams {
            lambda: rat(rng.random_range(-5..=5), rng.random_range(1..=4)),
            big_m: rat(rng.random_range(-5..=5), rng.random_range(1..=4)),
        })
        .collect()
}

fn random_graded(rng: &mut ChaCha8Rng, n: usize, degree: Parity) -> GradedOperator {
    let mut m = CMatrix::zeros(n);
    for r in 0..n {
        for c in 0..n {
            m.set(
                r,
                c,
                rat(rng.random_range(-6..=6), rng.random_range(1..=4)),
                rat(rng.random_range(-6..=6), rng.random_range(1..=4)),
            );
        }
    }
    GradedOperator { mat: m, degree }
}

fn ok_str(ok: bool) -> &'static str {
    if ok {
        "holds exactly"
    } else {
        "violated"
    }
}
