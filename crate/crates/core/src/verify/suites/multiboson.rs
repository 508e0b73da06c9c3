//! Checks for the k-boson ladder and the logical shift operators, over the
//! configured `(k, beta)` grid.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::Result;
use crate::multiboson::{
    build_f, build_g, codeword, highest_weight_vector, ladder_ops, logical_matrix, r_matrix,
    semigroup_compose_check, semigroup_sector_residual, CodewordSpec, FockOperator, FockSpace,
    HighestWeightSpec,
};
use crate::verify::config::{SuiteConfig, TOL_TOWER};
use crate::verify::report::CheckRecord;

pub fn checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();

    for &k in &cfg.ks(8) {
        let k = k as usize;
        let space = FockSpace::new(16 * k, 2 * k)?;
        let ladder = ladder_ops(space, k)?;

        let comm_defect = ladder
            .lower
            .commutator(&ladder.raise)?
            .guarded_max_diff(&FockOperator::identity(space))?;
        out.push(CheckRecord::residual("ladder.commutator", comm_defect, cfg.tol).with_param("k", k));

        let recomposed = FockOperator::from_diagonal(space, |n| (k * (n / k) + n % k) as f64);
        let direct = FockOperator::from_diagonal(space, |n| n as f64);
        out.push(
            CheckRecord::exact(
                "ladder.decomposition",
                recomposed.guarded_max_diff(&direct)? == 0.0,
                "n = k N_k + D_k exactly",
                "recomposed diagonal",
            )
            .with_param("k", k),
        );

        let nk = ladder.raise.mul(&ladder.lower)?;
        out.push(
            CheckRecord::residual("ladder.number_product", nk.guarded_max_diff(&ladder.number)?, cfg.tol)
                .with_param("k", k),
        );

        let f = build_f(space, k)?;
        let g = build_g(space, k)?;
        let mut complement_ok = true;
        for n in 0..=space.guarded_max() {
            let (fv, gv) = (f.mat[(n, n)].re, g.mat[(n, n)].re);
            complement_ok &= fv + gv == 1.0 && fv * gv == 0.0;
            complement_ok &= fv == if n % k == 0 { 1.0 } else { 0.0 };
        }
        out.push(
            CheckRecord::exact(
                "residue.complementarity",
                complement_ok,
                "F + G = I on the diagonal, F G = 0, period-k pattern",
                ok_str(complement_ok),
            )
            .with_param("k", k),
        );

        let hw = highest_weight_vector(
            space,
            &HighestWeightSpec {
                k,
                phis: (0..k - 1).map(|i| 0.29 + 0.37 * i as f64).collect(),
                mus: (0..k).map(|i| 0.11 * i as f64).collect(),
            },
        )?;
        let hw_norm = (hw.norm() - 1.0).abs();
        let hw_killed = ladder.lower.apply(&hw)?.max_abs();
        out.push(
            CheckRecord::residual("highest_weight.unit_norm", hw_norm, cfg.tol).with_param("k", k),
        );
        out.push(
            CheckRecord::exact(
                "highest_weight.annihilated",
                hw_killed == 0.0,
                "A_k |omega_k> = 0 exactly",
                format!("{hw_killed:e}"),
            )
            .with_param("k", k),
        );
    }

    // logical shift checks at the acceptance-scale carriers
    for &k in &cfg.ks(5) {
        let k = k as usize;
        let space = FockSpace::new(31 * k, 2 * k)?;
        for &beta in &cfg.beta {
            let beta_c = Complex64::new(beta, 0.0);
            let m = logical_matrix(space, k, beta_c)?;
            let r = r_matrix(k);

            let mut entry_worst = 0.0f64;
            let mut fidelity_worst = 0.0f64;
            for i in 0..k {
                for j in 0..k {
                    entry_worst = entry_worst.max((m[(i, j)] - r[(i, j)]).norm());
                }
                let shift = m[((i + 1) % k, i)].norm();
                fidelity_worst = fidelity_worst.max(1.0 - shift);
            }
            out.push(
                CheckRecord::residual("logical.bitflip_fidelity", fidelity_worst, 1e-8)
                    .with_param("k", k)
                    .with_param("beta", beta),
            );
            out.push(
                CheckRecord::residual("logical.matrix_entries", entry_worst, cfg.tol)
                    .with_param("k", k)
                    .with_param("beta", beta),
            );

            let trace: Complex64 = (0..k).map(|i| m[(i, i)]).sum();
            out.push(
                CheckRecord::residual("logical.trace", trace.norm(), cfg.tol)
                    .with_param("k", k)
                    .with_param("beta", beta),
            );

            let unitary = (m.adjoint() * &m - DMatrix::<Complex64>::identity(k, k)).norm();
            out.push(
                CheckRecord::residual("logical.unitarity", unitary, cfg.tol)
                    .with_param("k", k)
                    .with_param("beta", beta),
            );

            let mut p = DMatrix::<Complex64>::identity(k, k);
            for _ in 0..k {
                p = &p * &m;
            }
            let cycle = (&p - DMatrix::<Complex64>::identity(k, k)).norm();
            out.push(
                CheckRecord::residual("logical.cycle_order", cycle, k as f64 * cfg.tol)
                    .with_param("k", k)
                    .with_param("beta", beta),
            );

            // codeword orthonormality is exact by residue support
            let words: Vec<_> = (0..k)
                .map(|j| codeword(space, &CodewordSpec { k, j, beta: beta_c }).map(|c| c.state))
                .collect::<Result<Vec<_>>>()?;
            let mut ortho_ok = true;
            for i in 0..k {
                for j in 0..k {
                    let overlap = words[i].inner(&words[j])?;
                    if i == j {
                        ortho_ok &= (overlap.re - 1.0).abs() < 1e-12 && overlap.im == 0.0;
                    } else {
                        ortho_ok &= overlap == Complex64::new(0.0, 0.0);
                    }
                }
            }
            out.push(
                CheckRecord::exact(
                    "codeword.orthonormal",
                    ortho_ok,
                    "<i|j> = delta_ij (disjoint residue support)",
                    ok_str(ortho_ok),
                )
                .with_param("k", k)
                .with_param("beta", beta),
            );

            // truncation weight must not grow when the cutoff doubles
            let mut monotone_ok = true;
            let mut previous = f64::INFINITY;
            for n_max in [8 * k, 16 * k, 32 * k] {
                let sp = FockSpace::new(n_max, 2 * k)?;
                let w = codeword(sp, &CodewordSpec { k, j: k - 1, beta: beta_c })?.truncation_weight;
                monotone_ok &= w <= previous;
                previous = w;
            }
            out.push(
                CheckRecord::exact(
                    "codeword.truncation_monotone",
                    monotone_ok,
                    "doubling the cutoff never increases the dropped weight",
                    ok_str(monotone_ok),
                )
                .with_param("k", k)
                .with_param("beta", beta),
            );
        }
    }

    // k = 2 reduction to the Pauli flip
    {
        let space = FockSpace::new(62, 4)?;
        let m = logical_matrix(space, 2, Complex64::new(1.0, 0.0))?;
        let pauli = r_matrix(2);
        let defect = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| (m[(i, j)] - pauli[(i, j)]).norm())
            .fold(0.0f64, f64::max);
        out.push(CheckRecord::residual("logical.k2_pauli_flip", defect, cfg.tol));
    }

    // tower composition on the principal sector, plus reported behavior on a
    // shifted residue sector (not asserted)
    let space = FockSpace::new(48, 6)?;
    for (k, l) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3)] {
        let r = semigroup_compose_check(space, k, l)?;
        out.push(
            CheckRecord::residual("semigroup.tower_composition", r, TOL_TOWER)
                .with_param("k", k)
                .with_param("l", l),
        );
    }
    for (k, l) in [(2usize, 3usize), (3, 2)] {
        let r = semigroup_sector_residual(space, k, l, 1)?;
        out.push(
            CheckRecord::finding(
                "semigroup.other_sector",
                "not asserted; residual on the shifted residue sector",
                format!("{r:e}"),
            )
            .with_param("k", k)
            .with_param("l", l)
            .with_param("sector", 1)
            .with_residual(r),
        );
    }

    Ok(out)
}

fn ok_str(ok: bool) -> &'static str {
    if ok {
        "holds exactly"
    } else {
        "violated"
    }
}
