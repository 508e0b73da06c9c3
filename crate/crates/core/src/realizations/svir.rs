//! The graded realization built from su(1,1) and a two-dimensional Clifford
//! module.
//!
//! With `B = {K_3^{-1}, K_+}`, `C = {K_3^{-1}, K_-}` and the fermionic pair
//! `f_+, f_-` ({f_+, f_-} = 1, f_+^2 = f_-^2 = 0):
//!
//! - `L_k = i 2^{-(k+1)} B^k C  (x) I`
//! - `G_k = 2^{-(k+1)} B^k C    (x) f_+`
//! - `F_k = B^{k-1}             (x) f_+ f_-`
//!
//! for `k >= 0`, negative indices through the hermiticity rule `X_{-k} =
//! X_k^+`. `F_0` needs `B^{-1}`, which on a truncated carrier is realized as
//! the shift pseudo-inverse; all checks are restricted to a guard-banded
//! block where boundary clipping cannot reach.
//!
//! The two bundled representations are a ladder with rational non-integer
//! offset (vector-field-like single shifts) and the one-boson discrete
//! series on the monomial basis `(a^+)^n |0>` (rational two-step shifts).
//! Which bracket relations close, and with which index bookkeeping, is
//! representation dependent; `closure_residuals` reports the deviations
//! without asserting a bound, while the `[[F, F]] = 0` and `[[G, G]] = 0`
//! identities are asserted exactly.

use num_traits::Zero;

use crate::error::{Result, VqError};
use crate::rational::{rat, rint, Rational};
use crate::realizations::graded::{super_bracket, CMatrix, GradedOperator};
use crate::rmatrix::RationalMatrix;

/// The bundled su(1,1) representations, both with exactly rational matrix
/// entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuRep {
    /// `K_3 e_m = (m + mu) e_m`, `K_+- e_m = (m + mu) e_{m +- 1}` on the
    /// window `m = -half_window ..= half_window`; `mu` must not be an
    /// integer or `K_3` fails to invert.
    CircleLadder { mu: Rational, half_window: usize },
    /// `K_+ = (a^+)^2 / 2`, `K_- = a^2 / 2`, `K_3 = (a^+ a + 1/2) / 2` on the
    /// monomial basis `e_n = (a^+)^n |0>`, `n < levels` (entries stay
    /// rational there: `a^+ e_n = e_{n+1}`, `a e_n = n e_{n-1}`).
    Oscillator { levels: usize },
}

impl SuRep {
    pub fn name(&self) -> &'static str {
        match self {
            SuRep::CircleLadder { .. } => "ladder",
            SuRep::Oscillator { .. } => "oscillator",
        }
    }

    fn boson_dim(&self) -> usize {
        match self {
            SuRep::CircleLadder { half_window, .. } => 2 * half_window + 1,
            SuRep::Oscillator { levels } => *levels,
        }
    }

    /// Largest boson-index shift of any single generator at `k <= k_max`.
    fn max_shift(&self, k_max: usize) -> usize {
        match self {
            SuRep::CircleLadder { .. } => k_max + 1,
            SuRep::Oscillator { .. } => 2 * (k_max + 1),
        }
    }

    fn k_matrices(&self) -> Result<(RationalMatrix, RationalMatrix, RationalMatrix)> {
        match self {
            SuRep::CircleLadder { mu, half_window } => {
                let w = *half_window as i64;
                let dim = self.boson_dim();
                let mut k3 = RationalMatrix::zeros(dim, dim);
                let mut kp = RationalMatrix::zeros(dim, dim);
                let mut km = RationalMatrix::zeros(dim, dim);
                for i in 0..dim {
                    let m = i as i64 - w;
                    let v = rint(m) + mu;
                    if v.is_zero() {
                        return Err(VqError::Spectrum(format!(
                            "K_3 eigenvalue vanishes at m = {m} for offset {mu}"
                        )));
                    }
                    *k3.get_mut(i, i) = v.clone();
                    if i + 1 < dim {
                        *kp.get_mut(i + 1, i) = v.clone();
                    }
                    if i > 0 {
                        *km.get_mut(i - 1, i) = v;
                    }
                }
                Ok((k3, kp, km))
            }
            SuRep::Oscillator { levels } => {
                let dim = *levels;
                let mut k3 = RationalMatrix::zeros(dim, dim);
                let mut kp = RationalMatrix::zeros(dim, dim);
                let mut km = RationalMatrix::zeros(dim, dim);
                for n in 0..dim {
                    *k3.get_mut(n, n) = rat(2 * n as i64 + 1, 4);
                    if n + 2 < dim {
                        *kp.get_mut(n + 2, n) = rat(1, 2);
                    }
                    if n >= 2 {
                        *km.get_mut(n - 2, n) = rat((n as i64) * (n as i64 - 1), 2);
                    }
                }
                Ok((k3, kp, km))
            }
        }
    }
}

/// Shift pseudo-inverse: every column with a single nonzero entry `(r, v)`
/// inverts to an entry `1/v` at the transposed position; empty columns stay
/// empty. Valid for weighted shifts, which is all `B` ever is here.
fn shift_pseudo_inverse(b: &RationalMatrix) -> Result<RationalMatrix> {
    let n = b.rows();
    let mut out = RationalMatrix::zeros(n, n);
    for c in 0..n {
        let mut hit: Option<usize> = None;
        for r in 0..n {
            if !b.get(r, c).is_zero() {
                if hit.is_some() {
                    return Err(VqError::InternalConsistency(
                        "pseudo-inverse of a non-shift matrix".into(),
                    ));
                }
                hit = Some(r);
            }
        }
        if let Some(r) = hit {
            *out.get_mut(c, r) = rint(1) / b.get(r, c);
        }
    }
    Ok(out)
}

pub struct SvirOps {
    pub rep: SuRep,
    pub k_max: usize,
    /// Full tensor dimension (boson carrier times the 2-dim Clifford module).
    pub dim: usize,
    /// Guarded column range on the full tensor index.
    pub guard_lo: usize,
    pub guard_hi: usize,
    l: Vec<GradedOperator>,
    g: Vec<GradedOperator>,
    f: Vec<GradedOperator>,
}

impl SvirOps {
    pub fn l(&self, k: i64) -> Result<GradedOperator> {
        signed(&self.l, k, self.k_max)
    }

    pub fn g(&self, k: i64) -> Result<GradedOperator> {
        signed(&self.g, k, self.k_max)
    }

    pub fn f(&self, k: i64) -> Result<GradedOperator> {
        signed(&self.f, k, self.k_max)
    }

    /// Exact zero test of a bracket defect on the guarded columns.
    pub fn guarded_zero(&self, m: &CMatrix) -> bool {
        for c in self.guard_lo..=self.guard_hi {
            for r in 0..self.dim {
                if !m.re.get(r, c).is_zero() || !m.im.get(r, c).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Largest magnitude over the guarded columns.
    pub fn guarded_max_abs(&self, m: &CMatrix) -> f64 {
        let mut worst = 0.0f64;
        for c in self.guard_lo..=self.guard_hi {
            for r in 0..self.dim {
                let re = crate::rational::to_f64(m.re.get(r, c));
                let im = crate::rational::to_f64(m.im.get(r, c));
                worst = worst.max(re.hypot(im));
            }
        }
        worst
    }
}

fn signed(ops: &[GradedOperator], k: i64, k_max: usize) -> Result<GradedOperator> {
    if k.unsigned_abs() as usize > k_max {
        return Err(VqError::OutOfRange(format!("generator index {k} beyond |k| <= {k_max}")));
    }
    let op = &ops[k.unsigned_abs() as usize];
    if k >= 0 {
        Ok(op.clone())
    } else {
        Ok(op.adjoint())
    }
}

pub fn svir_build(rep: SuRep, k_max: usize) -> Result<SvirOps> {
    let (k3, kp, km) = rep.k_matrices()?;
    let bdim = rep.boson_dim();
    let margin = 2 * rep.max_shift(k_max) + 1;
    if 2 * margin + 1 >= bdim {
        return Err(VqError::Config(format!(
            "carrier of {bdim} boson levels leaves no guarded block at k_max = {k_max}"
        )));
    }

    let mut k3_inv = RationalMatrix::zeros(bdim, bdim);
    for i in 0..bdim {
        if k3.get(i, i).is_zero() {
            return Err(VqError::Spectrum(format!("K_3 not invertible at level {i}")));
        }
        *k3_inv.get_mut(i, i) = rint(1) / k3.get(i, i);
    }
    let anti = |x: &RationalMatrix, y: &RationalMatrix| -> Result<RationalMatrix> {
        let xy = x.mul(y)?;
        let yx = y.mul(x)?;
        let mut out = xy;
        for r in 0..bdim {
            for c in 0..bdim {
                *out.get_mut(r, c) += yx.get(r, c);
            }
        }
        Ok(out)
    };
    let b = anti(&k3_inv, &kp)?;
    let c = anti(&k3_inv, &km)?;
    let b_inv = shift_pseudo_inverse(&b)?;

    // fermionic module: f_+ lowers index 1 -> 0, f_- = f_+^T
    let mut f_plus = CMatrix::zeros(2);
    f_plus.set(0, 1, rint(1), rint(0));
    let f_minus = f_plus.adjoint();
    let proj = f_plus.mul(&f_minus)?; // diag(1, 0)
    let ferm_id = CMatrix::identity(2);

    let mut b_pow = RationalMatrix::identity(bdim);
    let mut l_ops = Vec::with_capacity(k_max + 1);
    let mut g_ops = Vec::with_capacity(k_max + 1);
    let mut f_ops = Vec::with_capacity(k_max + 1);
    let mut half_pow = rat(1, 2); // 2^{-(k+1)} at k = 0
    for k in 0..=k_max {
        let bc = CMatrix::from_real(b_pow.mul(&c)?);
        let l_mat = bc.scale(&rint(0), &half_pow).kron(&ferm_id);
        let g_mat = bc.scale(&half_pow, &rint(0)).kron(&f_plus);
        let f_boson = if k == 0 { b_inv.clone() } else { b_pow_at(&b, k - 1)? };
        let f_mat = CMatrix::from_real(f_boson).kron(&proj);
        l_ops.push(GradedOperator::even(l_mat));
        g_ops.push(GradedOperator::odd(g_mat));
        f_ops.push(GradedOperator::even(f_mat));
        b_pow = b.mul(&b_pow)?;
        half_pow *= rat(1, 2);
    }

    Ok(SvirOps {
        rep,
        k_max,
        dim: bdim * 2,
        guard_lo: margin * 2,
        guard_hi: (bdim - 1 - margin) * 2 + 1,
        l: l_ops,
        g: g_ops,
        f: f_ops,
    })
}

fn b_pow_at(b: &RationalMatrix, k: usize) -> Result<RationalMatrix> {
    let mut acc = RationalMatrix::identity(b.rows());
    for _ in 0..k {
        acc = b.mul(&acc)?;
    }
    Ok(acc)
}

/// One reported bracket deviation.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketResidual {
    pub family: &'static str,
    pub n: i64,
    pub m: i64,
    pub residual: f64,
}

/// Deviations of the four unasserted bracket families from the defining
/// relations, over the guarded block:
///
/// - `LL`: `[[L_n, L_m]] - (n - m) L_{n+m}`
/// - `LG`: `[[L_n, G_m]] - (n - m) G_{n+m}`
/// - `LF`: `[[L_n, F_m]] + m F_{n+m}`
/// - `FG`: `[[F_n, G_m]] - G_{n+m}`
pub fn closure_residuals(ops: &SvirOps, index_bound: i64) -> Result<Vec<BracketResidual>> {
    let mut out = Vec::new();
    for n in -index_bound..=index_bound {
        for m in -index_bound..=index_bound {
            if (n + m).unsigned_abs() as usize > ops.k_max {
                continue;
            }
            let ll = super_bracket(&ops.l(n)?, &ops.l(m)?)?
                .mat
                .sub(&ops.l(n + m)?.mat.scale(&rint(n - m), &rint(0)));
            out.push(BracketResidual { family: "LL", n, m, residual: ops.guarded_max_abs(&ll) });

            let lg = super_bracket(&ops.l(n)?, &ops.g(m)?)?
                .mat
                .sub(&ops.g(n + m)?.mat.scale(&rint(n - m), &rint(0)));
            out.push(BracketResidual { family: "LG", n, m, residual: ops.guarded_max_abs(&lg) });

            let lf = super_bracket(&ops.l(n)?, &ops.f(m)?)?
                .mat
                .add(&ops.f(n + m)?.mat.scale(&rint(m), &rint(0)));
            out.push(BracketResidual { family: "LF", n, m, residual: ops.guarded_max_abs(&lf) });

            let fg = super_bracket(&ops.f(n)?, &ops.g(m)?)?
                .mat
                .sub(&ops.g(n + m)?.mat);
            out.push(BracketResidual { family: "FG", n, m, residual: ops.guarded_max_abs(&fg) });
        }
    }
    Ok(out)
}

/// Asserts `[[F_n, F_m]] = 0` and `[[G_n, G_m]] = 0` exactly on the guarded
/// block for all `0 <= n, m <= up_to`. Returns an error naming the first
/// violating pair.
pub fn ff_gg_vanish_exact(ops: &SvirOps, up_to: usize) -> Result<()> {
    for n in 0..=up_to as i64 {
        for m in 0..=up_to as i64 {
            let ff = super_bracket(&ops.f(n)?, &ops.f(m)?)?;
            if !ops.guarded_zero(&ff.mat) {
                return Err(VqError::InternalConsistency(format!(
                    "[[F_{n}, F_{m}]] nonzero in the {} representation",
                    ops.rep.name()
                )));
            }
            let gg = super_bracket(&ops.g(n)?, &ops.g(m)?)?;
            if !ops.guarded_zero(&gg.mat) {
                return Err(VqError::InternalConsistency(format!(
                    "[[G_{n}, G_{m}]] nonzero in the {} representation",
                    ops.rep.name()
                )));
            }
        }
    }
    Ok(())
}

/// The two bundled representations at standard desk-scale carriers: the
/// smallest windows leaving a few guarded columns at the given `k_max`.
pub fn bundled_reps(k_max: usize) -> [SuRep; 2] {
    let shift = k_max + 1;
    [
        SuRep::CircleLadder { mu: rat(1, 3), half_window: 2 * shift + 4 },
        SuRep::Oscillator { levels: 4 * shift + 28 },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn guarded_boson_zero(m: &RationalMatrix, margin: usize) -> bool {
        let n = m.rows();
        for c in margin..n - margin {
            for r in 0..n {
                if !m.get(r, c).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn su11_relations_hold_on_guarded_block() {
        for rep in bundled_reps(2) {
            let (k3, kp, km) = rep.k_matrices().unwrap();
            let margin = rep.max_shift(2);
            let comm = |a: &RationalMatrix, b: &RationalMatrix| {
                let ab = a.mul(b).unwrap();
                let ba = b.mul(a).unwrap();
                let mut out = ab;
                for r in 0..out.rows() {
                    for c in 0..out.cols() {
                        *out.get_mut(r, c) -= ba.get(r, c);
                    }
                }
                out
            };
            // [K3, K+] - K+
            let mut d1 = comm(&k3, &kp);
            for r in 0..d1.rows() {
                for c in 0..d1.cols() {
                    *d1.get_mut(r, c) -= kp.get(r, c);
                }
            }
            assert!(guarded_boson_zero(&d1, margin), "{}: [K3,K+]", rep.name());
            // [K3, K-] + K-
            let mut d2 = comm(&k3, &km);
            for r in 0..d2.rows() {
                for c in 0..d2.cols() {
                    *d2.get_mut(r, c) += km.get(r, c);
                }
            }
            assert!(guarded_boson_zero(&d2, margin), "{}: [K3,K-]", rep.name());
            // [K+, K-] + 2 K3
            let mut d3 = comm(&kp, &km);
            for r in 0..d3.rows() {
                for c in 0..d3.cols() {
                    *d3.get_mut(r, c) += rint(2) * k3.get(r, c);
                }
            }
            assert!(guarded_boson_zero(&d3, margin), "{}: [K+,K-]", rep.name());
        }
    }

    #[test]
    fn integer_ladder_offset_rejected() {
        let rep = SuRep::CircleLadder { mu: rint(2), half_window: 6 };
        assert!(matches!(svir_build(rep, 1), Err(VqError::Spectrum(_))));
    }

    #[test]
    fn ff_and_gg_brackets_vanish_exactly() {
        for rep in bundled_reps(4) {
            let ops = svir_build(rep, 4).unwrap();
            ff_gg_vanish_exact(&ops, 4).unwrap();
        }
    }

    #[test]
    fn hermiticity_of_brackets() {
        for rep in bundled_reps(2) {
            let ops = svir_build(rep, 2).unwrap();
            for (n, m) in [(1i64, 2i64), (0, 1), (2, 2)] {
                let lhs = super_bracket(&ops.l(n).unwrap(), &ops.l(m).unwrap())
                    .unwrap()
                    .mat
                    .adjoint();
                let rhs = super_bracket(&ops.l(m).unwrap().adjoint(), &ops.l(n).unwrap().adjoint())
                    .unwrap()
                    .mat;
                assert_eq!(lhs, rhs, "{} (n,m)=({n},{m})", ops.rep.name());
            }
        }
    }

    #[test]
    fn residual_tables_are_deterministic() {
        for rep in bundled_reps(2) {
            let a = closure_residuals(&svir_build(rep.clone(), 2).unwrap(), 1).unwrap();
            let b = closure_residuals(&svir_build(rep, 2).unwrap(), 1).unwrap();
            assert_eq!(a, b);
            assert!(!a.is_empty());
            assert!(a.iter().all(|r| r.residual.is_finite()));
        }
    }
}
