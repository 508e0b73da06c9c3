//! Minimal-model character series and their Wronskians.
//!
//! For the family with central charge `c_k = -2(k-1)(6k-1)/(2k+1)` and
//! weights `h_{i,k} = -(2k-i)(i-1)/(2(2k+1))`, the character of the `(i,k)`
//! module is
//!
//! `ch_{i,k}(q) = q^{a_{i,k}} prod_{n >= 1, n != 0, +-i (mod 2k+1)} (1-q^n)^{-1}`
//!
//! with `a_{i,k} = h_{i,k} - c_k/24`. The Wronskian matrices stack the
//! characters and their iterated q-derivatives; scaling by `alpha(k)` (and
//! `beta(k)` for the shifted matrix) normalizes the leading coefficient to 1.
//! The leading coefficient of the unscaled determinant is the Vandermonde
//! determinant of the `a_{i,k}`, which is what `leading_coeff_check` verifies
//! by two independent routes.

use num_traits::{One, Zero};

use crate::combinatorics::vandermonde_det;
use crate::error::{Result, VqError};
use crate::qseries::{series_det, QSeries};
use crate::rational::{rat, rint, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalModelData {
    pub k: u32,
    pub c: Rational,
    /// `h[i-1] = h_{i,k}` for `1 <= i <= k`.
    pub h: Vec<Rational>,
    /// `a[i-1] = h_{i,k} - c_k / 24`.
    pub a: Vec<Rational>,
}

pub fn model_data(k: u32) -> Result<MinimalModelData> {
    if k < 2 {
        return Err(VqError::OutOfRange(format!("model_data needs k >= 2, got {k}")));
    }
    let kk = k as i64;
    let c = rat(-2 * (kk - 1) * (6 * kk - 1), 2 * kk + 1);
    let mut h = Vec::with_capacity(k as usize);
    let mut a = Vec::with_capacity(k as usize);
    for i in 1..=kk {
        let hi = rat(-(2 * kk - i) * (i - 1), 2 * (2 * kk + 1));
        a.push(&hi - &c * rat(1, 24));
        h.push(hi);
    }
    Ok(MinimalModelData { k, c, h, a })
}

#[derive(Debug, Clone)]
pub struct CharacterSeries {
    pub i: u32,
    pub k: u32,
    /// Leading exponent `a_{i,k}`.
    pub a: Rational,
    /// The full series `q^a * (integer-coefficient product part)`.
    pub series: QSeries,
    /// Number of orders kept beyond the leading exponent.
    pub order: u32,
}

/// The integer-coefficient product part of the character, as a q-series with
/// integer exponents truncated at `order`.
fn product_part(i: u32, k: u32, order: u32) -> QSeries {
    let modulus = 2 * k + 1;
    let excluded = |n: u32| {
        let r = n % modulus;
        r == 0 || r == i % modulus || r == (modulus - i % modulus) % modulus
    };
    let t = rint(order as i64);
    let mut acc = QSeries::one().with_trunc(t.clone());
    for n in 1..=order {
        if excluded(n) {
            continue;
        }
        // (1 - q^n)^{-1} truncated: 1 + q^n + q^{2n} + ...
        let geo = QSeries::from_terms(
            (0..=(order / n)).map(|j| (rint((j * n) as i64), rint(1))),
            Some(t.clone()),
        );
        acc = acc.mul(&geo);
    }
    acc
}

pub fn character_series(i: u32, k: u32, order: u32) -> Result<CharacterSeries> {
    if i < 1 || i > k {
        return Err(VqError::OutOfRange(format!("character index i={i} outside 1..={k}")));
    }
    if order > 200 {
        return Err(VqError::SizeLimit(format!("character order {order} > 200")));
    }
    let data = model_data(k)?;
    let a = data.a[(i - 1) as usize].clone();
    let series = QSeries::monomial(a.clone(), rint(1)).mul(&product_part(i, k, order));
    Ok(CharacterSeries { i, k, a, series, order })
}

#[derive(Debug, Clone)]
pub struct Wronskian {
    pub k: u32,
    pub alpha: Rational,
    pub beta: Rational,
    /// Unscaled `det W_k`.
    pub det_w: QSeries,
    /// Unscaled `det W_k'` (rows shifted one derivative up).
    pub det_w_prime: QSeries,
    /// `alpha(k) det W_k`, leading coefficient 1.
    pub normalized: QSeries,
    /// `beta(k) det W_k'`; identically zero when `beta = 0`.
    pub normalized_prime: QSeries,
}

pub fn wronskian(k: u32, order: u32) -> Result<Wronskian> {
    if !(2..=5).contains(&k) {
        return Err(VqError::OutOfRange(format!("wronskian supports 2 <= k <= 5, got {k}")));
    }
    let data = model_data(k)?;
    for i in 0..data.a.len() {
        for j in 0..i {
            if data.a[i] == data.a[j] {
                return Err(VqError::Singular(format!(
                    "repeated leading exponent a_{},{k} = a_{},{k}",
                    j + 1,
                    i + 1
                )));
            }
        }
    }

    // Headroom so truncation provably cannot reach the leading terms of the
    // determinants after k derivatives and a k-fold product.
    let headroom = order + 2 * k;
    let chars: Vec<QSeries> = (1..=k)
        .map(|i| character_series(i, k, headroom).map(|c| c.series))
        .collect::<Result<Vec<_>>>()?;

    // Rows of W_k: derivative orders 0..k-1; rows of W_k': orders 1..k.
    let mut rows: Vec<Vec<QSeries>> = vec![chars];
    for r in 1..=k as usize {
        let prev = &rows[r - 1];
        rows.push(prev.iter().map(|s| s.qderiv()).collect());
    }
    let w: Vec<Vec<QSeries>> = rows[..k as usize].to_vec();
    let w_prime: Vec<Vec<QSeries>> = rows[1..=k as usize].to_vec();

    let det_w = series_det(&w)?;
    let det_w_prime = series_det(&w_prime)?;

    let mut alpha = rint(1);
    for j in 0..data.a.len() {
        for i in 0..j {
            alpha *= &data.a[j] - &data.a[i];
        }
    }
    let alpha = rint(1) / alpha;

    let beta = if data.a.iter().any(|ai| ai.is_zero()) {
        Rational::zero()
    } else {
        let mut prod = rint(1);
        for ai in &data.a {
            prod *= ai;
        }
        &alpha / prod
    };

    let total: Rational = data.a.iter().cloned().sum();
    let final_order = total + rint(order as i64);
    let normalized = det_w.scale(&alpha).truncate_to(&final_order);
    let normalized_prime = det_w_prime.scale(&beta).truncate_to(&final_order);

    if let Some((_, lead)) = normalized.leading() {
        if !lead.is_one() {
            return Err(VqError::InternalConsistency(format!(
                "normalized Wronskian for k={k} has leading coefficient {lead}, expected 1"
            )));
        }
    }

    Ok(Wronskian {
        k,
        alpha,
        beta,
        det_w: det_w.truncate_to(&final_order),
        det_w_prime: det_w_prime.truncate_to(&final_order),
        normalized,
        normalized_prime,
    })
}

/// Computes the leading coefficient of `det W_k` two ways: from the series
/// determinant and as the Vandermonde determinant of the leading exponents.
/// Also asserts `w_k = alpha(k)^{-1}`. Returns `w_k`.
pub fn leading_coeff_check(k: u32) -> Result<Rational> {
    let data = model_data(k)?;
    let wr = wronskian(k, 12)?;
    let (lead_exp, w_series) = wr
        .det_w
        .leading()
        .ok_or_else(|| VqError::InternalConsistency(format!("det W_{k} vanished identically")))?;
    let expected_exp: Rational = data.a.iter().cloned().sum();
    if lead_exp != expected_exp {
        return Err(VqError::InternalConsistency(format!(
            "det W_{k} leading exponent {lead_exp} differs from sum of leading exponents {expected_exp}"
        )));
    }
    let w_vandermonde = vandermonde_det(&data.a);
    if w_series != w_vandermonde {
        return Err(VqError::InternalConsistency(format!(
            "det W_{k} leading coefficient {w_series} differs from Vandermonde value {w_vandermonde}"
        )));
    }
    let alpha_inv = rint(1) / &wr.alpha;
    if w_series != alpha_inv {
        return Err(VqError::InternalConsistency(format!(
            "det W_{k} leading coefficient {w_series} differs from alpha^-1 = {alpha_inv}"
        )));
    }
    Ok(w_series)
}
