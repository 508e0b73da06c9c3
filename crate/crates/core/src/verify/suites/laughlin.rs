//! Checks for the alternant/Schur expansions and the Gaussian plasma norms,
//! with the Monte Carlo oracle rows carrying their seeds and sample counts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::laughlin::{
    lll_norm_quadrature, matrix_cs_ground_norm, plasma_norm, plasma_norm_mc, schur_expand,
    slater_inner, vandermonde_power_expand, vandermonde_product_eval,
};
use crate::rational::{factorial, fmt_rational, rat, rint, to_f64, Rational};
use crate::verify::config::{SuiteConfig, MC_SIGMA};
use crate::verify::report::{derive_seed, CheckRecord};

pub fn checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();

    // basis normalization against the quadrature oracle
    for l in 0..=5u32 {
        let exact: f64 = to_f64(&Rational::from_integer(factorial(l as u64)));
        let quad = lll_norm_quadrature(l);
        let rel = (quad - exact).abs() / exact;
        out.push(
            CheckRecord::residual("lll.norm_quadrature", rel, 0.01)
                .with_param("l", l),
        );
    }

    // worked expansion examples
    let e1 = vandermonde_power_expand(2, 1)?;
    let e3 = vandermonde_power_expand(2, 3)?;
    let e31 = vandermonde_power_expand(3, 1)?;
    let examples_ok = e1.coeffs.len() == 1
        && e1.coeffs.get(&vec![0, 1]) == Some(&rint(1))
        && e3.coeffs.get(&vec![0, 3]) == Some(&rint(1))
        && e3.coeffs.get(&vec![1, 2]) == Some(&rint(-3))
        && e31.coeffs.len() == 1
        && e31.coeffs.get(&vec![0, 1, 2]) == Some(&rint(1));
    out.push(CheckRecord::exact(
        "alternant.small_examples",
        examples_ok,
        "Delta: {(0,1): 1}; Delta^3: {(0,3): 1, (1,2): -3}; N=3: {(0,1,2): 1}",
        ok_str(examples_ok),
    ));

    // degree bounds and evaluation against the product form
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, "alternant.eval"));
    for n in 2..=4usize {
        for s in 0..=2u32 {
            let p = 2 * s + 1;
            let e = vandermonde_power_expand(n, p)?;
            let total = p * (n as u32) * (n as u32 - 1) / 2;
            let bounds_ok = e.coeffs.keys().all(|t| {
                t.iter().all(|l| *l <= p * (n as u32 - 1)) && t.iter().sum::<u32>() == total
            });
            out.push(
                CheckRecord::exact(
                    "alternant.degree_bounds",
                    bounds_ok,
                    "max l <= p(N-1), total degree pN(N-1)/2",
                    ok_str(bounds_ok),
                )
                .with_param("n", n)
                .with_param("p", p),
            );

            let mut eval_ok = true;
            for _ in 0..20 {
                let pts: Vec<Rational> = (0..n)
                    .map(|_| rat(rng.random_range(-9..=9), rng.random_range(1..=5)))
                    .collect();
                eval_ok &= e.eval(&pts)? == vandermonde_product_eval(&pts, p);
            }
            out.push(
                CheckRecord::exact(
                    "alternant.eval_vs_product",
                    eval_ok,
                    "expansion = product form at 20 rational points",
                    ok_str(eval_ok),
                )
                .with_param("n", n)
                .with_param("p", p),
            );

            let schur = schur_expand(n, s)?;
            let weight_ok = schur
                .coeffs
                .keys()
                .all(|y| y.iter().sum::<u32>() == s * (n as u32) * (n as u32 - 1) && y.len() == n);
            out.push(
                CheckRecord::exact(
                    "schur.partition_weights",
                    weight_ok,
                    "|Y| = s N (N-1) with at most N parts",
                    ok_str(weight_ok),
                )
                .with_param("n", n)
                .with_param("s", s),
            );
        }
    }

    // exact plasma norms
    let mut expect = rint(1);
    let mut factorial_ok = true;
    for n in 1..=5usize {
        expect *= Rational::from_integer(factorial(n as u64));
        factorial_ok &= plasma_norm(n, 1)? == expect;
    }
    out.push(CheckRecord::exact(
        "plasma.factorial_identity",
        factorial_ok,
        "plasma_norm(N, 1) = prod_{j<=N} j!, N <= 5",
        ok_str(factorial_ok),
    ));

    let v23 = plasma_norm(2, 3)?;
    out.push(CheckRecord::exact(
        "plasma.n2_m3_value",
        v23 == rint(48),
        "48",
        fmt_rational(&v23),
    ));

    let mut dual_ok = true;
    for (n, m) in [(2usize, 1u32), (2, 3), (3, 1), (3, 3), (4, 1), (4, 3)] {
        if n > 5 {
            continue;
        }
        let e = vandermonde_power_expand(n, m)?;
        dual_ok &= plasma_norm(n, m)? == slater_inner(&e, &e)?;
    }
    out.push(CheckRecord::exact(
        "plasma.monomial_vs_slater_route",
        dual_ok,
        "odd powers: monomial-moment route = alternant inner product",
        ok_str(dual_ok),
    ));

    // ground-state norm delegation
    let ground_ok = (1..=4usize).all(|n| {
        matrix_cs_ground_norm(n, 1).unwrap() == plasma_norm(n, 1).unwrap()
    }) && matrix_cs_ground_norm(2, 3)? == rint(48);
    out.push(CheckRecord::exact(
        "ground_norm.coherent_state_reduction",
        ground_ok,
        "matrix-model ground norm = plasma integral",
        ok_str(ground_ok),
    ));

    // Monte Carlo oracle rows
    for n in 1..=3usize {
        for m in 1..=2u32 {
            let name = format!("plasma.mc_agreement.n{n}.m{m}");
            let seed = derive_seed(cfg.seed, &name);
            let est = plasma_norm_mc(n, m, cfg.samples, seed)?;
            let exact = to_f64(&plasma_norm(n, m)?);
            let dev = (est.mean - exact).abs();
            let band = MC_SIGMA * est.std_error;
            let ok = if n == 1 { est.mean == 1.0 } else { dev <= band };
            out.push(
                CheckRecord::exact(
                    "plasma.mc_agreement",
                    ok,
                    format!("{exact} within {MC_SIGMA} standard errors"),
                    format!("{} +- {}", est.mean, est.std_error),
                )
                .with_param("n", n)
                .with_param("m", m)
                .with_param("samples", est.samples)
                .with_param("seed", est.seed)
                .with_residual(dev),
            );
        }
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
