//! Combinatorial kernels: Stirling numbers of the first kind, elementary
//! symmetric functions, Vandermonde determinants and solvers, discriminants,
//! the residue-interpolation coefficients `p_l`, and the roots-of-unity
//! closed form for `floor(n/k)`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Result, VqError};
use crate::rational::{factorial, rint, Rational};
use crate::rmatrix::RationalMatrix;

/// Signed Stirling number of the first kind, with the sign convention fixed by
/// the generating identity
/// `prod_{j=1}^{k-1} (x - j) = sum_{m=1}^{k} S_k^(m) x^(m-1)`.
pub fn stirling_first(k: u32, m: u32) -> Result<BigInt> {
    if m < 1 || m > k {
        return Err(VqError::OutOfRange(format!("stirling_first(k={k}, m={m}) needs 1 <= m <= k")));
    }
    // Coefficient vector of prod_{j=1}^{k-1}(x - j), lowest degree first.
    let mut coeffs = vec![BigInt::one()];
    for j in 1..k {
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (d, c) in coeffs.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * BigInt::from(j);
        }
        coeffs = next;
    }
    Ok(coeffs[(m - 1) as usize].clone())
}

/// Elementary symmetric function `s_q`: the sum of all products of `q`
/// distinct variables, with `s_0 = 1`.
pub fn elementary_symmetric(vars: &[Rational], q: usize) -> Result<Rational> {
    if q > vars.len() {
        return Err(VqError::OutOfRange(format!(
            "elementary symmetric degree {q} over {} variables",
            vars.len()
        )));
    }
    // dp[j] accumulates s_j over the prefix processed so far.
    let mut dp = vec![Rational::zero(); q + 1];
    dp[0] = rint(1);
    for v in vars {
        for j in (1..=q).rev() {
            let add = &dp[j - 1] * v;
            dp[j] += add;
        }
    }
    Ok(dp[q].clone())
}

/// Elementary symmetric function of the list with position `omit` (0-based)
/// removed.
pub fn esym_omit(vars: &[Rational], omit: usize, q: usize) -> Result<Rational> {
    if omit >= vars.len() {
        return Err(VqError::OutOfRange(format!(
            "omitted index {omit} in a list of {} variables",
            vars.len()
        )));
    }
    let reduced: Vec<Rational> = vars
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != omit)
        .map(|(_, v)| v.clone())
        .collect();
    elementary_symmetric(&reduced, q)
}

/// `prod_{i>j} (x_i - x_j)` by the product formula.
pub fn vandermonde_det(xs: &[Rational]) -> Rational {
    let mut acc = rint(1);
    for i in 1..xs.len() {
        for j in 0..i {
            acc *= &xs[i] - &xs[j];
        }
    }
    acc
}

/// The explicit power matrix with rows `(1, x_i, x_i^2, ...)`, used as the
/// independent determinant route for [`vandermonde_det`].
pub fn vandermonde_power_matrix(xs: &[Rational]) -> RationalMatrix {
    let n = xs.len();
    let mut m = RationalMatrix::zeros(n, n);
    for (i, x) in xs.iter().enumerate() {
        let mut p = rint(1);
        for c in 0..n {
            *m.get_mut(i, c) = p.clone();
            p *= x;
        }
    }
    m
}

/// `prod_{i != j} (x_i - x_j)`, the discriminant of the monic polynomial with
/// roots `xs`; equals `(-1)^(N(N-1)/2)` times the squared Vandermonde.
pub fn discriminant(xs: &[Rational]) -> Rational {
    let mut acc = rint(1);
    for i in 0..xs.len() {
        for j in 0..xs.len() {
            if i != j {
                acc *= &xs[i] - &xs[j];
            }
        }
    }
    acc
}

/// Exact solution of `V(xs) p = b`, where `V` has rows `(1, x_i, x_i^2, ...)`,
/// by expanding the Lagrange basis rather than generic elimination.
pub fn vandermonde_solve(xs: &[Rational], b: &[Rational]) -> Result<Vec<Rational>> {
    let n = xs.len();
    if b.len() != n {
        return Err(VqError::DimensionMismatch(format!(
            "{} abscissae against {} values",
            n,
            b.len()
        )));
    }
    for i in 0..n {
        for j in 0..i {
            if xs[i] == xs[j] {
                return Err(VqError::Singular(format!(
                    "coincident abscissae at positions {j} and {i}"
                )));
            }
        }
    }
    let mut coeffs = vec![Rational::zero(); n];
    for (i, bi) in b.iter().enumerate() {
        if bi.is_zero() {
            continue;
        }
        // numerator polynomial prod_{j != i} (x - x_j), lowest degree first
        let mut num = vec![rint(1)];
        let mut denom = rint(1);
        for (j, xj) in xs.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![Rational::zero(); num.len() + 1];
            for (d, c) in num.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * xj;
            }
            num = next;
            denom *= &xs[i] - xj;
        }
        let scale = bi / denom;
        for (d, c) in num.iter().enumerate() {
            coeffs[d] += c * &scale;
        }
    }
    Ok(coeffs)
}

/// Coefficients of the degree `k-1` polynomial through `(0,0), (1,1), ...,
/// (k-1, 1)`, with the constant term identically zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationCoeffs {
    pub k: u32,
    /// `p[l-1]` is the coefficient of `x^l`, `1 <= l <= k-1`.
    pub p: Vec<Rational>,
}

impl InterpolationCoeffs {
    /// Evaluates `sum_l p_l x^l` exactly.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut pow = x.clone();
        for c in &self.p {
            acc += c * &pow;
            pow *= x;
        }
        acc
    }
}

/// Computes the interpolation coefficients twice, by the Vandermonde solve on
/// the node matrix and by the closed form
/// `p_l = sum_{m=2}^{k} (-1)^(l+1+m) s^[m]_{k-1-l} / ((m-1)! (k-m)!)`,
/// where `s^[m]_q` omits the m-th node from `(0, 1, ..., k-1)`, and requires
/// exact agreement before returning.
pub fn interp_coeffs(k: u32) -> Result<InterpolationCoeffs> {
    if k < 2 {
        return Err(VqError::OutOfRange(format!("interp_coeffs needs k >= 2, got {k}")));
    }
    let nodes: Vec<Rational> = (0..k as i64).map(rint).collect();
    let mut b = vec![rint(1); k as usize];
    b[0] = rint(0);
    let solved = vandermonde_solve(&nodes, &b)?;
    if !solved[0].is_zero() {
        return Err(VqError::InternalConsistency(format!(
            "interpolation constant term p_0 = {} is not zero for k = {k}",
            solved[0]
        )));
    }

    let mut closed = Vec::with_capacity(k as usize - 1);
    for l in 1..k {
        let mut acc = Rational::zero();
        for m in 2..=k {
            let s = esym_omit(&nodes, (m - 1) as usize, (k - 1 - l) as usize)?;
            let denom = factorial((m - 1) as u64) * factorial((k - m) as u64);
            let sign = if (l + 1 + m) % 2 == 0 { 1 } else { -1 };
            acc += s * Rational::new(BigInt::from(sign), denom);
        }
        closed.push(acc);
    }

    if solved[1..] != closed[..] {
        return Err(VqError::InternalConsistency(format!(
            "interpolation coefficients disagree for k = {k}: solve gave {:?}, closed form gave {:?}",
            &solved[1..],
            closed
        )));
    }
    Ok(InterpolationCoeffs { k, p: closed })
}

/// The k-th roots of unity and the partial-fraction coefficients `C_j` of the
/// floor formula.
#[derive(Debug, Clone)]
pub struct RootOfUnityCoeffs {
    pub k: u32,
    /// `zeta[j] = exp(2 pi i j / k)` for `j = 0, ..., k-1`.
    pub zeta: Vec<Complex64>,
    /// `c[j-1] = C_j` for `j = 1, ..., k-1`.
    pub c: Vec<Complex64>,
}

pub fn roots_of_unity_coeff(k: u32) -> Result<RootOfUnityCoeffs> {
    if k < 2 {
        return Err(VqError::OutOfRange(format!("roots_of_unity_coeff needs k >= 2, got {k}")));
    }
    let zeta: Vec<Complex64> = (0..k)
        .map(|j| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / k as f64))
        .collect();
    let mut c = Vec::with_capacity(k as usize - 1);
    for j in 1..k as usize {
        let mut denom = zeta[j] - Complex64::new(1.0, 0.0);
        for (l, z) in zeta.iter().enumerate() {
            if l != j {
                denom *= zeta[j] - z;
            }
        }
        c.push(denom.inv());
    }
    Ok(RootOfUnityCoeffs { k, zeta, c })
}

const FLOOR_FORMULA_TOL: f64 = 1e-9;

/// Evaluates `(2n - k + 1) / (2k) + sum_j C_j zeta_j^n` in complex arithmetic
/// and rounds; the result must be `floor(n / k)` within the acceptance band.
pub fn floor_via_formula(n: u64, k: u32) -> Result<i64> {
    let coeffs = roots_of_unity_coeff(k)?;
    let mut acc = Complex64::new((2.0 * n as f64 - k as f64 + 1.0) / (2.0 * k as f64), 0.0);
    for (j, c) in coeffs.c.iter().enumerate() {
        // zeta_j^n depends only on j*n mod k; reducing first keeps the
        // angle small and the power exact.
        let e = ((j as u64 + 1) * n) % k as u64;
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / k as f64);
        acc += c * z;
    }
    if acc.im.abs() > FLOOR_FORMULA_TOL {
        return Err(VqError::Numerical(format!(
            "floor formula for n={n}, k={k}: imaginary part {} exceeds {FLOOR_FORMULA_TOL}",
            acc.im
        )));
    }
    let rounded = acc.re.round();
    if (acc.re - rounded).abs() > FLOOR_FORMULA_TOL {
        return Err(VqError::Numerical(format!(
            "floor formula for n={n}, k={k}: residual {} exceeds {FLOOR_FORMULA_TOL}",
            (acc.re - rounded).abs()
        )));
    }
    rounded
        .to_i64()
        .ok_or_else(|| VqError::Numerical(format!("floor formula overflow for n={n}, k={k}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn points(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| rint(v)).collect()
    }

    #[test]
    fn stirling_empty_product() {
        assert_eq!(stirling_first(1, 1).unwrap(), BigInt::from(1));
    }

    #[test]
    fn stirling_k3_and_k4() {
        // (x-1)(x-2) = x^2 - 3x + 2
        assert_eq!(stirling_first(3, 1).unwrap(), BigInt::from(2));
        assert_eq!(stirling_first(3, 2).unwrap(), BigInt::from(-3));
        assert_eq!(stirling_first(3, 3).unwrap(), BigInt::from(1));
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        assert_eq!(stirling_first(4, 2).unwrap(), BigInt::from(11));
        assert!(stirling_first(4, 5).is_err());
        assert!(stirling_first(4, 0).is_err());
    }

    #[test]
    fn esym_values() {
        let vars = points(&[1, 2, 3]);
        assert_eq!(elementary_symmetric(&vars, 0).unwrap(), rint(1));
        assert_eq!(elementary_symmetric(&vars, 2).unwrap(), rint(11));
        let with_zero: Vec<Rational> = (0..4).map(rint).collect();
        assert_eq!(elementary_symmetric(&with_zero, 4).unwrap(), rint(0));
        assert!(elementary_symmetric(&vars, 4).is_err());
    }

    #[test]
    fn esym_omit_values() {
        let vars = points(&[0, 1, 2]);
        assert_eq!(esym_omit(&vars, 0, 1).unwrap(), rint(3));
        assert_eq!(esym_omit(&vars, 0, 0).unwrap(), rint(1));
        let vars4 = points(&[0, 1, 2, 3]);
        assert_eq!(esym_omit(&vars4, 3, 2).unwrap(), rint(2));
        assert!(esym_omit(&vars4, 4, 1).is_err());
    }

    #[test]
    fn vandermonde_small() {
        assert_eq!(vandermonde_det(&points(&[0, 1])), rint(1));
        assert_eq!(vandermonde_det(&points(&[0, 1, 2])), rint(2));
        assert_eq!(vandermonde_det(&points(&[3, 3, 5])), rint(0));
    }

    #[test]
    fn vandermonde_matches_power_matrix_det() {
        let xs = vec![rat(1, 2), rint(-3), rat(7, 5), rint(4)];
        let product = vandermonde_det(&xs);
        let matrix = vandermonde_power_matrix(&xs).det().unwrap();
        assert_eq!(product, matrix);
    }

    #[test]
    fn discriminant_values_and_sign_rule() {
        assert_eq!(discriminant(&points(&[0, 1])), rint(-1));
        assert_eq!(discriminant(&points(&[0, 1, 2])), rint(-4));
        assert_eq!(discriminant(&points(&[2, 2, 7])), rint(0));
        let xs = vec![rat(1, 3), rint(2), rat(-5, 4), rint(1)];
        let n = xs.len();
        let sign = if (n * (n - 1) / 2) % 2 == 0 { rint(1) } else { rint(-1) };
        let delta = vandermonde_det(&xs);
        assert_eq!(discriminant(&xs), sign * &delta * &delta);
    }

    #[test]
    fn vandermonde_solve_examples() {
        let p = vandermonde_solve(&points(&[0, 1]), &points(&[0, 1])).unwrap();
        assert_eq!(p, vec![rint(0), rint(1)]);

        let p = vandermonde_solve(&points(&[0, 1, 2]), &points(&[0, 1, 1])).unwrap();
        assert_eq!(p, vec![rint(0), rat(3, 2), rat(-1, 2)]);

        // b = first column of V picks out the constant polynomial 1.
        let xs = vec![rat(1, 2), rint(3), rint(-1)];
        let p = vandermonde_solve(&xs, &[rint(1), rint(1), rint(1)]).unwrap();
        assert_eq!(p, vec![rint(1), rint(0), rint(0)]);

        assert!(matches!(
            vandermonde_solve(&points(&[1, 1]), &points(&[0, 1])),
            Err(VqError::Singular(_))
        ));
    }

    #[test]
    fn interp_examples() {
        let c2 = interp_coeffs(2).unwrap();
        assert_eq!(c2.p, vec![rint(1)]);
        let c3 = interp_coeffs(3).unwrap();
        assert_eq!(c3.p, vec![rat(3, 2), rat(-1, 2)]);
    }

    #[test]
    fn interp_defining_property_up_to_k12() {
        for k in 2..=12u32 {
            let c = interp_coeffs(k).unwrap();
            assert_eq!(c.eval(&rint(0)), rint(0), "k={k} at x=0");
            for x in 1..k as i64 {
                assert_eq!(c.eval(&rint(x)), rint(1), "k={k} at x={x}");
            }
        }
    }

    #[test]
    fn roots_of_unity_k2_and_conjugation() {
        let r = roots_of_unity_coeff(2).unwrap();
        assert!((r.c[0] - Complex64::new(0.25, 0.0)).norm() < 1e-14);

        let r3 = roots_of_unity_coeff(3).unwrap();
        assert!((r3.c[0] - r3.c[1].conj()).norm() < 1e-13);
    }

    #[test]
    fn derived_residue_identity() {
        // prod_{l != j}(zeta_j - zeta_l) = k zeta_j^{k-1}, so
        // (zeta_j - 1) C_j = zeta_j / k.
        for k in 2..=9u32 {
            let r = roots_of_unity_coeff(k).unwrap();
            for j in 1..k as usize {
                let lhs = (r.zeta[j] - Complex64::new(1.0, 0.0)) * r.c[j - 1];
                let rhs = r.zeta[j] / k as f64;
                assert!((lhs - rhs).norm() <= 1e-12, "k={k} j={j}: |lhs-rhs|={}", (lhs - rhs).norm());
            }
        }
    }

    #[test]
    fn floor_formula_examples() {
        assert_eq!(floor_via_formula(5, 2).unwrap(), 2);
        for k in 2..=9u32 {
            assert_eq!(floor_via_formula(0, k).unwrap(), 0);
            for l in 0..6 {
                assert_eq!(floor_via_formula(k as u64 * l, k).unwrap(), l as i64);
            }
        }
    }

    #[test]
    fn floor_formula_exhaustive_small() {
        for k in 2..=9u32 {
            for n in 0..=300u64 {
                assert_eq!(floor_via_formula(n, k).unwrap(), (n / k as u64) as i64, "n={n} k={k}");
            }
        }
    }
}
