//! Checks for the exact substrate: q-series ring axioms, the derivation
//! property, series determinants, and rational-matrix round trips.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::qseries::{series_det, QSeries};
use crate::rational::{rat, rint};
use crate::rmatrix::RationalMatrix;
use crate::verify::config::SuiteConfig;
use crate::verify::report::{derive_seed, CheckRecord};

fn random_series(rng: &mut ChaCha8Rng, max_terms: usize, trunc: i64) -> QSeries {
    let n = rng.random_range(1..=max_terms);
    QSeries::from_terms(
        (0..n).map(|_| {
            (
                rat(rng.random_range(0..=trunc * 2), rng.random_range(1..=2)),
                rat(rng.random_range(-5..=5), rng.random_range(1..=4)),
            )
        }),
        Some(rint(trunc)),
    )
}

pub fn checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();

    // ring axioms on sampled triples
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, "qseries.ring"));
    let mut assoc_ok = true;
    let mut comm_ok = true;
    let mut distrib_ok = true;
    for _ in 0..12 {
        let a = random_series(&mut rng, 5, 12);
        let b = random_series(&mut rng, 5, 12);
        let c = random_series(&mut rng, 5, 12);
        assoc_ok &= a.mul(&b).mul(&c).eq_to_shared_order(&a.mul(&b.mul(&c)));
        comm_ok &= a.mul(&b) == b.mul(&a) && a.add(&b) == b.add(&a);
        distrib_ok &= a
            .mul(&b.add(&c))
            .eq_to_shared_order(&a.mul(&b).add(&a.mul(&c)));
    }
    out.push(CheckRecord::exact("qseries.ring.associative", assoc_ok, "a(bc) = (ab)c", bool_str(assoc_ok)));
    out.push(CheckRecord::exact("qseries.ring.commutative", comm_ok, "ab = ba, a+b = b+a", bool_str(comm_ok)));
    out.push(CheckRecord::exact("qseries.ring.distributive", distrib_ok, "a(b+c) = ab+ac", bool_str(distrib_ok)));

    // derivation property
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, "qseries.derivation"));
    let mut leibniz_ok = true;
    for _ in 0..12 {
        let a = random_series(&mut rng, 5, 12);
        let b = random_series(&mut rng, 5, 12);
        let lhs = a.mul(&b).qderiv();
        let rhs = a.qderiv().mul(&b).add(&a.mul(&b.qderiv()));
        leibniz_ok &= lhs.eq_to_shared_order(&rhs);
    }
    out.push(CheckRecord::exact(
        "qseries.derivation.product_rule",
        leibniz_ok,
        "(ab)' = a'b + ab'",
        bool_str(leibniz_ok),
    ));

    // worked multiplication examples
    let q = QSeries::monomial(rint(1), rint(1));
    let prod = QSeries::one()
        .add(&q)
        .with_trunc(rint(10))
        .mul(&QSeries::one().sub(&q).with_trunc(rint(10)));
    let ok = prod.coeff(&rint(0)) == rint(1)
        && prod.coeff(&rint(2)) == rint(-1)
        && prod.num_terms() == 2;
    out.push(CheckRecord::exact("qseries.mul.difference_of_squares", ok, "1 - q^2", render(&prod)));

    let geo = QSeries::from_terms((0..=20).map(|n| (rint(n), rint(1))), Some(rint(20)));
    let tel = geo.mul(&QSeries::one().sub(&q).with_trunc(rint(20)));
    let ok = tel.num_terms() == 1 && tel.coeff(&rint(0)) == rint(1);
    out.push(CheckRecord::exact("qseries.mul.geometric_telescope", ok, "1", render(&tel)));

    let single = QSeries::monomial(rat(11, 60), rint(1)).qderiv();
    let ok = single.coeff(&rat(11, 60)) == rat(11, 60);
    out.push(CheckRecord::exact(
        "qseries.qderiv.single_term",
        ok,
        "(11/60) q^(11/60)",
        render(&single),
    ));

    // series determinant examples
    let m = vec![
        vec![QSeries::one(), q.clone()],
        vec![q.clone(), QSeries::one()],
    ];
    let det = series_det(&m)?;
    let ok = det.coeff(&rint(0)) == rint(1) && det.coeff(&rint(2)) == rint(-1) && det.num_terms() == 2;
    out.push(CheckRecord::exact("series_det.two_by_two", ok, "1 - q^2", render(&det)));

    let oversize = vec![vec![QSeries::one(); 9]; 9];
    let ok = series_det(&oversize).is_err();
    out.push(CheckRecord::exact(
        "series_det.size_limit",
        ok,
        "order 9 rejected",
        if ok { "rejected" } else { "accepted" },
    ));

    // rational matrix inverse round trips
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, "rmatrix.roundtrip"));
    let mut roundtrip_ok = true;
    for n in 2..=8usize {
        for _ in 0..3 {
            let m = loop {
                let cand = RationalMatrix::new(
                    n,
                    n,
                    (0..n * n)
                        .map(|_| rat(rng.random_range(-6..=6), rng.random_range(1..=3)))
                        .collect(),
                )?;
                if !cand.det()?.eq(&rint(0)) {
                    break cand;
                }
            };
            let inv = m.inverse()?;
            roundtrip_ok &= m.mul(&inv)? == RationalMatrix::identity(n)
                && inv.mul(&m)? == RationalMatrix::identity(n);
        }
    }
    out.push(CheckRecord::exact(
        "rmatrix.inverse_roundtrip",
        roundtrip_ok,
        "M M^-1 = I exactly, n <= 8",
        bool_str(roundtrip_ok),
    ));

    Ok(out)
}

fn bool_str(ok: bool) -> &'static str {
    if ok {
        "holds exactly"
    } else {
        "violated"
    }
}

fn render(s: &QSeries) -> String {
    let terms: Vec<String> = s
        .terms()
        .take(4)
        .map(|(e, c)| format!("{} q^({})", crate::rational::fmt_rational(c), crate::rational::fmt_rational(&e)))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
