//! Checks for the minimal-model characters and their Wronskians: partition
//! oracle agreement, coefficient positivity, leading exponents, and the
//! Vandermonde leading-coefficient identity.

use num_traits::{Signed, Zero};

use crate::characters::{character_series, leading_coeff_check, model_data, wronskian};
use crate::combinatorics::vandermonde_det;
use crate::error::Result;
use crate::qseries::QSeries;
use crate::rational::{fmt_rational, rat, rint};
use crate::verify::config::SuiteConfig;
use crate::verify::oracles::partition_count_excluded;
use crate::verify::report::CheckRecord;

pub fn checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();

    // closed-form model data at k = 2 and the vanishing first weight
    let d2 = model_data(2)?;
    let data_ok = d2.c == rat(-22, 5)
        && d2.h == vec![rint(0), rat(-1, 5)]
        && d2.a == vec![rat(11, 60), rat(-1, 60)];
    out.push(CheckRecord::exact(
        "model.k2_values",
        data_ok,
        "c = -22/5, h = (0, -1/5), a = (11/60, -1/60)",
        ok_str(data_ok),
    ));
    let h1_ok = (2..=8).all(|k| model_data(k).map(|d| d.h[0] == rint(0)).unwrap_or(false));
    out.push(CheckRecord::exact(
        "model.first_weight_zero",
        h1_ok,
        "h_{1,k} = 0 for every k",
        ok_str(h1_ok),
    ));

    // partition-counting oracle, independent dynamic program
    let oracle_order = cfg.order.max(100) as usize;
    for k in 2..=4u32 {
        let modulus = 2 * k + 1;
        for i in 1..=k {
            let ch = character_series(i, k, oracle_order as u32)?;
            let table = partition_count_excluded(modulus, &[0, i % modulus, (modulus - i) % modulus], oracle_order);
            let mut oracle_ok = true;
            for (n, count) in table.iter().enumerate() {
                let coeff = ch.series.coeff(&(ch.a.clone() + rint(n as i64)));
                oracle_ok &= coeff == rint(*count as i64);
            }
            out.push(
                CheckRecord::exact(
                    "character.partition_oracle",
                    oracle_ok,
                    format!("counts of partitions into parts != 0, +-{i} (mod {modulus})"),
                    ok_str(oracle_ok),
                )
                .with_param("i", i)
                .with_param("k", k)
                .with_param("order", oracle_order),
            );
        }
    }

    // coefficient positivity and leading exponents across the grid
    for &k in &cfg.ks(5) {
        let mut nonneg_ok = true;
        let mut leading_ok = true;
        for i in 1..=k {
            let ch = character_series(i, k, cfg.order)?;
            nonneg_ok &= ch.series.terms().all(|(_, c)| c.is_integer() && !c.is_negative());
            leading_ok &= ch.series.min_exp().as_ref() == Some(&ch.a);
        }
        out.push(
            CheckRecord::exact(
                "character.nonnegative_integer_coefficients",
                nonneg_ok,
                "graded dimensions",
                ok_str(nonneg_ok),
            )
            .with_param("k", k)
            .with_param("order", cfg.order),
        );
        out.push(
            CheckRecord::exact(
                "character.leading_exponent",
                leading_ok,
                "min exponent = h - c/24",
                ok_str(leading_ok),
            )
            .with_param("k", k),
        );
    }

    // derivation bookkeeping: q-derivative leaves the exponent set unchanged
    {
        let ch = character_series(2, 2, 30)?;
        let d = ch.series.qderiv();
        let exps: Vec<_> = ch.series.terms().map(|(e, _)| e).collect();
        let dexps: Vec<_> = d.terms().map(|(e, _)| e).collect();
        let ok = exps == dexps;
        out.push(CheckRecord::exact(
            "character.qderiv_exponent_set",
            ok,
            "derivative preserves the rational exponent set",
            ok_str(ok),
        ));
    }

    // Wronskian scalings and the leading-coefficient identity
    let w2 = wronskian(2, cfg.order.min(60))?;
    let scaling_ok = w2.alpha == rint(-5) && w2.beta == rat(18000, 11);
    out.push(CheckRecord::exact(
        "wronskian.k2_scalings",
        scaling_ok,
        "alpha = -5, beta = 18000/11",
        format!("alpha = {}, beta = {}", fmt_rational(&w2.alpha), fmt_rational(&w2.beta)),
    ));

    for &k in &cfg.ks(4) {
        let w = wronskian(k, cfg.order.min(60))?;
        let unit_ok = leading_coeff(&w.normalized) == Some(rint(1))
            && (w.beta == rint(0) || leading_coeff(&w.normalized_prime) == Some(rint(1)));
        out.push(
            CheckRecord::exact(
                "wronskian.normalized_leading_unit",
                unit_ok,
                "leading coefficient 1 after scaling",
                ok_str(unit_ok),
            )
            .with_param("k", k)
            .with_param("order", cfg.order.min(60)),
        );

        let wk = leading_coeff_check(k)?;
        let data = model_data(k)?;
        let vdm = vandermonde_det(&data.a);
        let alpha_inv = rint(1) / &w.alpha;
        let dual_ok = wk == vdm && wk == alpha_inv && !wk.is_zero();
        out.push(
            CheckRecord::exact(
                "wronskian.leading_coefficient_dual",
                dual_ok,
                "det leading coefficient = Vandermonde(a) = 1/alpha, nonzero",
                format!("w_{k} = {}", fmt_rational(&wk)),
            )
            .with_param("k", k),
        );
    }

    let w2_value = leading_coeff_check(2)?;
    out.push(CheckRecord::exact(
        "wronskian.k2_leading_value",
        w2_value == rat(-1, 5),
        "-1/5",
        fmt_rational(&w2_value),
    ));

    Ok(out)
}

fn leading_coeff(s: &QSeries) -> Option<crate::rational::Rational> {
    s.leading().map(|(_, c)| c)
}

fn ok_str(ok: bool) -> &'static str {
    if ok {
        "holds exactly"
    } else {
        "violated"
    }
}
