//! The Witt algebra as derivations of Laurent polynomials.
//!
//! `L_n` acts on monomials by `z^m -> -m z^{m+n}`, so the commutation
//! relations `[L_m, L_n] = (m - n) L_{m+n}` can be checked with zero
//! tolerance in exact rational arithmetic.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Result, VqError};
use crate::rational::{rint, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: i64, coeff: Rational) -> Self {
        let mut p = Self::default();
        if !coeff.is_zero() {
            p.terms.insert(exp, coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(*e).or_insert_with(Rational::zero);
            *entry += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn sub(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        self.add(&other.scale(&rint(-1)))
    }

    pub fn scale(&self, c: &Rational) -> LaurentPolynomial {
        if c.is_zero() {
            return Self::default();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.clone() * c;
        }
        out
    }
}

const WITT_INDEX_BOUND: i64 = 8;

/// The generator `L_n = -z^{n+1} d/dz`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WittGenerator {
    pub n: i64,
}

pub fn witt_gen(n: i64) -> Result<WittGenerator> {
    if n.abs() > WITT_INDEX_BOUND {
        return Err(VqError::OutOfRange(format!(
            "witt generator index {n} outside |n| <= {WITT_INDEX_BOUND}"
        )));
    }
    Ok(WittGenerator { n })
}

impl WittGenerator {
    /// `z^m -> -m z^{m+n}` extended linearly.
    pub fn apply(&self, p: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::default();
        for (m, c) in &p.terms {
            let v = c * rint(-m);
            if !v.is_zero() {
                let entry = out.terms.entry(m + self.n).or_insert_with(Rational::zero);
                *entry += v;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }
}

/// `([L_m, L_n] - (m - n) L_{m+n}) z^j`, identically zero when the Witt
/// relations hold.
pub fn witt_commutator_defect(m: i64, n: i64, j: i64) -> Result<LaurentPolynomial> {
    let lm = witt_gen(m)?;
    let ln = witt_gen(n)?;
    let z_j = LaurentPolynomial::monomial(j, rint(1));
    let comm = lm.apply(&ln.apply(&z_j)).sub(&ln.apply(&lm.apply(&z_j)));
    let target = WittGenerator { n: m + n }.apply(&z_j).scale(&rint(m - n));
    Ok(comm.sub(&target))
}

/// Defects of the three su(1,1) relations for the triple
/// `K_+ = L_{-n}/n, K_- = L_n/n, K_3 = L_0/n` applied to `z^j`:
/// `[K_3, K_+] - K_+`, `[K_3, K_-] + K_-`, `[K_+, K_-] + 2 K_3`.
pub fn witt_su11_defects(n: i64, j: i64) -> Result<[LaurentPolynomial; 3]> {
    if n <= 0 {
        return Err(VqError::OutOfRange(format!("su(1,1) triple needs n > 0, got {n}")));
    }
    let kp = witt_gen(-n)?;
    let km = witt_gen(n)?;
    let k3 = witt_gen(0)?;
    let inv_n = rint(1) / rint(n);
    let inv_n2 = &inv_n * &inv_n;
    let z_j = LaurentPolynomial::monomial(j, rint(1));

    let comm = |a: &WittGenerator, b: &WittGenerator, p: &LaurentPolynomial| {
        a.apply(&b.apply(p)).sub(&b.apply(&a.apply(p)))
    };

    let d1 = comm(&k3, &kp, &z_j)
        .scale(&inv_n2)
        .sub(&kp.apply(&z_j).scale(&inv_n));
    let d2 = comm(&k3, &km, &z_j)
        .scale(&inv_n2)
        .add(&km.apply(&z_j).scale(&inv_n));
    let d3 = comm(&kp, &km, &z_j)
        .scale(&inv_n2)
        .add(&k3.apply(&z_j).scale(&(rint(2) * &inv_n)));
    Ok([d1, d2, d3])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_action_on_monomials() {
        let l0 = witt_gen(0).unwrap();
        for m in -5..=5i64 {
            let img = l0.apply(&LaurentPolynomial::monomial(m, rint(1)));
            assert_eq!(img.coeff(m), rint(-m));
        }
        let l2 = witt_gen(2).unwrap();
        let img = l2.apply(&LaurentPolynomial::monomial(3, rint(1)));
        assert_eq!(img.coeff(5), rint(-3));
    }

    #[test]
    fn commutation_relations_exact() {
        for m in -6..=6i64 {
            for n in -6..=6i64 {
                for j in (-12..=12i64).step_by(3) {
                    let defect = witt_commutator_defect(m, n, j).unwrap();
                    assert!(defect.is_zero(), "m={m} n={n} j={j}: {defect:?}");
                }
            }
        }
    }

    #[test]
    fn su11_triples_close() {
        for n in 1..=6i64 {
            for j in -8..=8i64 {
                for d in witt_su11_defects(n, j).unwrap() {
                    assert!(d.is_zero(), "n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn index_bound_enforced() {
        assert!(witt_gen(9).is_err());
        assert!(witt_gen(-9).is_err());
    }
}
