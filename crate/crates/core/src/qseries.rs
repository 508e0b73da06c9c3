//! Truncated formal q-series with exact rational coefficients and exact
//! rational exponents.
//!
//! A series is a finite map `exponent -> coefficient` together with an
//! optional truncation order `T`: exponents above `T` are unrepresented and
//! unknown. Exponents are stored as integer numerators over a single
//! per-series denominator `D`, kept equal to the least common denominator of
//! the exponents present. Truncation propagates pessimistically: an operation
//! never pretends to know coefficients beyond what its inputs guarantee.
//!
//! The derivation `qderiv` maps `c q^e` to `(c e) q^e`, the coefficientwise
//! `(sum a(n) q^n)' = sum a(n) n q^n` rule extended to rational exponents
//! (equivalently `(2 pi i)^{-1} d/dz` under `q = e^{2 pi i z}`).

use std::collections::BTreeMap;
use std::io::Write;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Result, VqError};
use crate::rational::{rat, rint, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    /// Exponent denominator, always positive.
    den: i64,
    /// Exponent numerator (over `den`) -> nonzero coefficient.
    terms: BTreeMap<i64, Rational>,
    /// Truncation order; `None` means the series is exact (a polynomial).
    trunc: Option<Rational>,
}

impl QSeries {
    pub fn zero() -> Self {
        QSeries { den: 1, terms: BTreeMap::new(), trunc: None }
    }

    pub fn one() -> Self {
        Self::constant(rint(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(rint(0), c)
    }

    /// Single term `c * q^e`.
    pub fn monomial(e: Rational, c: Rational) -> Self {
        let mut s = QSeries::zero();
        if !c.is_zero() {
            let den = exp_den(&e);
            s.den = den;
            s.terms.insert(exp_num(&e, den), c);
        }
        s
    }

    /// Builds a series from `(exponent, coefficient)` pairs with a truncation
    /// order. Pairs above the order are dropped.
    pub fn from_terms(pairs: impl IntoIterator<Item = (Rational, Rational)>, trunc: Option<Rational>) -> Self {
        let mut s = QSeries::zero();
        s.trunc = trunc;
        for (e, c) in pairs {
            s.add_term(&e, c);
        }
        s.normalize();
        s
    }

    pub fn with_trunc(mut self, trunc: Rational) -> Self {
        self.trunc = Some(trunc);
        self.drop_above_trunc();
        self.normalize();
        self
    }

    pub fn trunc_order(&self) -> Option<&Rational> {
        self.trunc.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn exponent_den(&self) -> i64 {
        self.den
    }

    /// Coefficient of `q^e` (zero when absent and below the truncation order).
    pub fn coeff(&self, e: &Rational) -> Rational {
        let num = e.numer() * self.den / e.denom();
        if &(Rational::new(num.clone(), self.den.into())) != e {
            return Rational::zero();
        }
        use num_traits::ToPrimitive;
        match num.to_i64() {
            Some(k) => self.terms.get(&k).cloned().unwrap_or_else(Rational::zero),
            None => Rational::zero(),
        }
    }

    /// Smallest exponent with nonzero coefficient.
    pub fn min_exp(&self) -> Option<Rational> {
        self.terms.keys().next().map(|k| rat(*k, self.den))
    }

    /// `(exponent, coefficient)` of the lowest-order term.
    pub fn leading(&self) -> Option<(Rational, Rational)> {
        self.terms.iter().next().map(|(k, c)| (rat(*k, self.den), c.clone()))
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (rat(*k, self.den), c))
    }

    pub fn neg(&self) -> QSeries {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> QSeries {
        if c.is_zero() {
            let mut z = QSeries::zero();
            z.trunc = self.trunc.clone();
            return z;
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.clone() * c;
        }
        out
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let den = self.den.lcm(&other.den);
        let mut out = QSeries::zero();
        out.den = den;
        out.trunc = min_trunc(self.trunc.clone(), other.trunc.clone());
        for (k, c) in &self.terms {
            out.terms.insert(k * (den / self.den), c.clone());
        }
        for (k, c) in &other.terms {
            let key = k * (den / other.den);
            let entry = out.terms.entry(key).or_insert_with(Rational::zero);
            *entry += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out.drop_above_trunc();
        out.normalize();
        out
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    /// Coefficientwise convolution. The result order is the tighter of the two
    /// input orders, each shifted by the other operand's minimal exponent.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let den = self.den.lcm(&other.den);
        let trunc = min_trunc(
            self.trunc.clone().map(|t| t + other.min_exp().unwrap_or_else(|| rint(0))),
            other.trunc.clone().map(|t| t + self.min_exp().unwrap_or_else(|| rint(0))),
        );
        let mut out = QSeries::zero();
        out.den = den;
        out.trunc = trunc;
        if self.is_zero() || other.is_zero() {
            return out;
        }
        // Integer bound on the result exponent numerator, for early pruning.
        let bound = out.trunc.as_ref().map(|t| {
            use num_traits::ToPrimitive;
            let scaled = t * rint(den);
            scaled.floor().numer().to_i64().unwrap_or(i64::MAX)
        });
        let ra = den / self.den;
        let rb = den / other.den;
        for (ka, ca) in &self.terms {
            let ka = ka * ra;
            for (kb, cb) in &other.terms {
                let key = ka + kb * rb;
                if let Some(b) = bound {
                    if key > b {
                        continue;
                    }
                }
                let entry = out.terms.entry(key).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out.normalize();
        out
    }

    /// The derivation: each `c q^e` maps to `(c e) q^e`.
    pub fn qderiv(&self) -> QSeries {
        let mut out = QSeries::zero();
        out.den = self.den;
        out.trunc = self.trunc.clone();
        for (k, c) in &self.terms {
            let v = c * rat(*k, self.den);
            if !v.is_zero() {
                out.terms.insert(*k, v);
            }
        }
        out.normalize();
        out
    }

    /// Equality of the represented coefficients up to the tighter of the two
    /// truncation orders. Propagated orders depend on the association of an
    /// expression, so structural equality is too strict for ring identities.
    pub fn eq_to_shared_order(&self, other: &QSeries) -> bool {
        match (self.trunc.clone(), other.trunc.clone()) {
            (None, None) => self == other,
            (Some(t), None) | (None, Some(t)) => self.truncate_to(&t) == other.truncate_to(&t),
            (Some(a), Some(b)) => {
                let t = a.min(b);
                self.truncate_to(&t) == other.truncate_to(&t)
            }
        }
    }

    /// Drops every term with exponent above `t` and tightens the order to `t`.
    pub fn truncate_to(&self, t: &Rational) -> QSeries {
        let mut out = self.clone();
        out.trunc = Some(match &self.trunc {
            Some(old) => old.min(t).clone(),
            None => t.clone(),
        });
        out.drop_above_trunc();
        out.normalize();
        out
    }

    fn add_term(&mut self, e: &Rational, c: Rational) {
        if c.is_zero() {
            return;
        }
        if let Some(t) = &self.trunc {
            if e > t {
                return;
            }
        }
        let den = self.den.lcm(&exp_den(e));
        if den != self.den {
            let scale = den / self.den;
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|(k, v)| (k * scale, v))
                .collect();
            self.den = den;
        }
        let key = exp_num(e, self.den);
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn drop_above_trunc(&mut self) {
        if let Some(t) = self.trunc.clone() {
            let den = self.den;
            self.terms.retain(|k, _| rat(*k, den) <= t);
        }
    }

    /// Re-establishes the invariant that `den` is the least common denominator
    /// of the exponents present.
    fn normalize(&mut self) {
        if self.terms.is_empty() {
            self.den = 1;
            return;
        }
        let mut g = self.den;
        for k in self.terms.keys() {
            g = g.gcd(k);
            if g == 1 {
                return;
            }
        }
        if g > 1 {
            self.den /= g;
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|(k, v)| (k / g, v))
                .collect();
        }
    }

    /// CSV dump, one term per line, exponents ascending.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "exponent_num,exponent_den,coeff_num,coeff_den")?;
        for (k, c) in &self.terms {
            let e = rat(*k, self.den);
            writeln!(w, "{},{},{},{}", e.numer(), e.denom(), c.numer(), c.denom())?;
        }
        Ok(())
    }
}

fn min_trunc(a: Option<Rational>, b: Option<Rational>) -> Option<Rational> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

fn exp_den(e: &Rational) -> i64 {
    use num_traits::ToPrimitive;
    e.denom().to_i64().expect("exponent denominator exceeds i64")
}

fn exp_num(e: &Rational, den: i64) -> i64 {
    use num_traits::ToPrimitive;
    let num = e.numer() * den / e.denom();
    num.to_i64().expect("exponent numerator exceeds i64")
}

/// Exact determinant of a square matrix of series, division-free.
///
/// Expands along rows with memoization over the set of unused columns, so the
/// cost is `O(2^n)` series multiplications instead of `n!`. Sizes above 8 are
/// rejected; the Wronskians need at most 5.
pub fn series_det(m: &[Vec<QSeries>]) -> Result<QSeries> {
    let n = m.len();
    if n == 0 {
        return Ok(QSeries::one());
    }
    if n > 8 {
        return Err(VqError::SizeLimit(format!("series determinant of order {n} > 8")));
    }
    for row in m {
        if row.len() != n {
            return Err(VqError::DimensionMismatch(format!(
                "series determinant needs a square matrix, got a row of length {} in an order-{} matrix",
                row.len(),
                n
            )));
        }
    }
    let full: u32 = (1u32 << n) - 1;
    let mut memo: std::collections::HashMap<u32, QSeries> = std::collections::HashMap::new();
    memo.insert(0, QSeries::one());
    Ok(det_rec(m, full, &mut memo))
}

fn det_rec(m: &[Vec<QSeries>], cols: u32, memo: &mut std::collections::HashMap<u32, QSeries>) -> QSeries {
    if let Some(hit) = memo.get(&cols) {
        return hit.clone();
    }
    let n = m.len();
    let remaining = cols.count_ones() as usize;
    let row = n - remaining;
    let mut acc = QSeries::zero();
    let mut sign_flip = false;
    for c in 0..n {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let minor = det_rec(m, cols & !(1 << c), memo);
            let term = entry.mul(&minor);
            acc = if sign_flip { acc.sub(&term) } else { acc.add(&term) };
        } else {
            // Truncation information still propagates through skipped terms.
            let minor = det_rec(m, cols & !(1 << c), memo);
            acc = acc.add(&entry.mul(&minor));
        }
        sign_flip = !sign_flip;
    }
    memo.insert(cols, acc.clone());
    acc
}
