//! Alternant expansions of Vandermonde powers, Schur images of discriminant
//! powers, exact Gaussian plasma norms, and their Monte Carlo oracle.
//!
//! With the lowest-level single-particle states `psi_l(z) = pi^{-1/2} z^l
//! e^{-|z|^2/2}`, an odd power of the Vandermonde expands over alternants
//!
//! `Delta^p = sum_{0 <= l_0 < ... < l_{N-1}} g_{l_0..l_{N-1}} |z^{l_0} ... z^{l_{N-1}}|`
//!
//! whose Gaussian inner products are diagonal: `N! prod_i l_i!` per tuple.
//! That turns the plasma integral
//!
//! `int prod_i (d^2 z_i / pi) e^{-|z_i|^2} prod_{i<j} |z_i - z_j|^{2m}`
//!
//! into exact rational arithmetic. Coefficients are computed by expanding the
//! pair product into monomials in exact integers and antisymmetrizing the
//! exponent tuples into strictly increasing order with sign bookkeeping.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Result, VqError};
use crate::rational::{factorial, rint, Rational};
use crate::rmatrix::RationalMatrix;

/// Lowest-level basis function `psi_l(z) = pi^{-1/2} z^l e^{-|z|^2 / 2}`.
pub fn lll_basis(l: u32, z: Complex64) -> Complex64 {
    let gauss = (-0.5 * z.norm_sqr()).exp();
    z.powu(l) * gauss / std::f64::consts::PI.sqrt()
}

/// Radial quadrature of `int |psi_l|^2 d^2 z` against the implemented basis
/// function (Simpson in r, the angular factor from rotational symmetry of the
/// modulus). Oracle for the `l!` normalization.
pub fn lll_norm_quadrature(l: u32) -> f64 {
    let r_max = 16.0f64;
    let steps = 20_000usize; // even
    let h = r_max / steps as f64;
    let f = |r: f64| 2.0 * std::f64::consts::PI * r * lll_basis(l, Complex64::new(r, 0.0)).norm_sqr();
    let mut acc = f(0.0) + f(r_max);
    for i in 1..steps {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(i as f64 * h);
    }
    acc * h / 3.0
}

const MAX_PARTICLES: usize = 6;
const MAX_POWER: u32 = 7;

/// Monomial map of `Delta^p` over exact integers, keyed by the exponent of
/// each variable.
fn vandermonde_power_monomials(n: usize, p: u32) -> Result<HashMap<Vec<u16>, BigInt>> {
    if n == 0 || n > MAX_PARTICLES {
        return Err(VqError::SizeLimit(format!("particle count {n} outside 1..={MAX_PARTICLES}")));
    }
    if p == 0 || p > MAX_POWER {
        return Err(VqError::SizeLimit(format!("power {p} outside 1..={MAX_POWER}")));
    }
    let binom: Vec<BigInt> = {
        let mut row = vec![BigInt::one()];
        for _ in 0..p {
            let mut next = vec![BigInt::one()];
            for w in row.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(BigInt::one());
            row = next;
        }
        row
    };
    let mut acc: HashMap<Vec<u16>, BigInt> = HashMap::new();
    acc.insert(vec![0u16; n], BigInt::one());
    for i in 1..n {
        for j in 0..i {
            // multiply by (z_i - z_j)^p = sum_t C(p,t) z_i^t (-z_j)^(p-t)
            let mut next: HashMap<Vec<u16>, BigInt> = HashMap::with_capacity(acc.len() * 2);
            for (expo, coeff) in &acc {
                for t in 0..=p as usize {
                    let mut e = expo.clone();
                    e[i] += t as u16;
                    e[j] += (p as usize - t) as u16;
                    let mut c = coeff * &binom[t];
                    if (p as usize - t) % 2 == 1 {
                        c = -c;
                    }
                    let entry = next.entry(e).or_insert_with(BigInt::zero);
                    *entry += c;
                }
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
    }
    Ok(acc)
}

/// Coefficients of an antisymmetric polynomial over the alternant basis,
/// keyed by strictly increasing exponent tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternantExpansion {
    pub n: usize,
    pub coeffs: std::collections::BTreeMap<Vec<u32>, Rational>,
}

impl AlternantExpansion {
    /// Exact evaluation of `sum g . det[z_i^{l_j}]` at the given points.
    pub fn eval(&self, points: &[Rational]) -> Result<Rational> {
        if points.len() != self.n {
            return Err(VqError::DimensionMismatch(format!(
                "{} points for an expansion over {} variables",
                points.len(),
                self.n
            )));
        }
        let mut acc = Rational::zero();
        for (tuple, g) in &self.coeffs {
            let mut m = RationalMatrix::zeros(self.n, self.n);
            for (r, z) in points.iter().enumerate() {
                for (c, l) in tuple.iter().enumerate() {
                    let mut pw = rint(1);
                    for _ in 0..*l {
                        pw *= z;
                    }
                    *m.get_mut(r, c) = pw;
                }
            }
            acc += g * m.det()?;
        }
        Ok(acc)
    }

    /// CSV dump `l0,...,l{N-1},coeff_num,coeff_den`, tuples ascending.
    pub fn write_csv<W: std::io::Write>(&self, w: &mut W) -> Result<()> {
        let labels: Vec<String> = (0..self.n).map(|i| format!("l{i}")).collect();
        writeln!(w, "{},coeff_num,coeff_den", labels.join(","))?;
        for (tuple, g) in &self.coeffs {
            let tup: Vec<String> = tuple.iter().map(|l| l.to_string()).collect();
            writeln!(w, "{},{},{}", tup.join(","), g.numer(), g.denom())?;
        }
        Ok(())
    }
}

/// Expansion of `Delta^p` over alternants for odd `p`. For even `p` the
/// alternant basis cannot carry a symmetric polynomial; the returned map is
/// then the expansion of `Delta^{p+1}` whose tuples, read through the
/// staircase shift, label the Schur basis of `Delta^p` (division by one
/// Vandermonde factor). The coefficients are identical either way.
pub fn vandermonde_power_expand(n: usize, p: u32) -> Result<AlternantExpansion> {
    let odd_p = if p % 2 == 1 { p } else { p + 1 };
    let monomials = vandermonde_power_monomials(n, odd_p)?;
    // Each alternant contributes one monomial per permutation of its tuple;
    // the coefficient of the already-increasing representative is the
    // alternant coefficient itself. Monomials with a repeated exponent must
    // cancel in an antisymmetric polynomial.
    let mut coeffs: std::collections::BTreeMap<Vec<u32>, Rational> = Default::default();
    for (expo, c) in monomials {
        if expo.windows(2).all(|w| w[0] < w[1]) {
            coeffs.insert(expo.iter().map(|&e| e as u32).collect(), Rational::from_integer(c));
        } else {
            let mut sorted = expo.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) && !c.is_zero() {
                return Err(VqError::InternalConsistency(format!(
                    "monomial {expo:?} with repeated exponents has nonzero coefficient {c} in an odd power"
                )));
            }
        }
    }
    coeffs.retain(|_, g| !g.is_zero());
    Ok(AlternantExpansion { n, coeffs })
}

/// Coefficients of a discriminant power over the Schur basis, keyed by
/// partitions padded to exactly `n` parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    pub n: usize,
    pub s: u32,
    pub coeffs: std::collections::BTreeMap<Vec<u32>, Rational>,
}

/// Maps the alternant expansion of `Delta^{2s+1}` to partitions via the
/// staircase shift `lambda_j = l_{N-j} - (N-j)`: these are the Schur-basis
/// coefficients of the `s`-th discriminant power, up to the global sign
/// `(-1)^{s N (N-1) / 2}`.
pub fn schur_expand(n: usize, s: u32) -> Result<SchurExpansion> {
    if s == 0 {
        let mut coeffs = std::collections::BTreeMap::new();
        coeffs.insert(vec![0u32; n], rint(1));
        return Ok(SchurExpansion { n, s, coeffs });
    }
    let alt = vandermonde_power_expand(n, 2 * s + 1)?;
    let mut coeffs = std::collections::BTreeMap::new();
    for (tuple, g) in alt.coeffs {
        let mut partition: Vec<u32> = tuple
            .iter()
            .enumerate()
            .map(|(i, l)| l - i as u32)
            .collect();
        partition.reverse(); // weakly decreasing
        coeffs.insert(partition, g);
    }
    Ok(SchurExpansion { n, s, coeffs })
}

/// Gaussian inner product of two alternant expansions:
/// `sum over common tuples of g_a g_b N! prod_i l_i!`.
pub fn slater_inner(a: &AlternantExpansion, b: &AlternantExpansion) -> Result<Rational> {
    if a.n != b.n {
        return Err(VqError::DimensionMismatch(format!(
            "inner product between expansions over {} and {} variables",
            a.n, b.n
        )));
    }
    let nfact = Rational::from_integer(factorial(a.n as u64));
    let mut acc = Rational::zero();
    for (tuple, ga) in &a.coeffs {
        if let Some(gb) = b.coeffs.get(tuple) {
            let mut weight = nfact.clone();
            for l in tuple {
                weight *= Rational::from_integer(factorial(*l as u64));
            }
            acc += ga * gb * weight;
        }
    }
    Ok(acc)
}

const MAX_PLASMA_PARTICLES: usize = 5;
const MAX_PLASMA_POWER: u32 = 3;

/// Exact value of the plasma integral
/// `int prod (d^2 z_i / pi) e^{-sum |z_i|^2} prod_{i<j} |z_i - z_j|^{2m}`,
/// via the monomial expansion of `Delta^m`: each monomial `c z^alpha`
/// contributes `c^2 prod alpha_i!` by the one-dimensional Gaussian moments.
pub fn plasma_norm(n: usize, m: u32) -> Result<Rational> {
    if n == 0 || n > MAX_PLASMA_PARTICLES {
        return Err(VqError::SizeLimit(format!(
            "plasma norm particle count {n} outside 1..={MAX_PLASMA_PARTICLES}"
        )));
    }
    if m == 0 || m > MAX_PLASMA_POWER {
        return Err(VqError::SizeLimit(format!(
            "plasma norm power {m} outside 1..={MAX_PLASMA_POWER}"
        )));
    }
    if n == 1 {
        return Ok(rint(1));
    }
    let monomials = vandermonde_power_monomials(n, m)?;
    let mut acc = Rational::zero();
    for (expo, c) in monomials {
        let mut weight = Rational::from_integer(&c * &c);
        for e in expo {
            weight *= Rational::from_integer(factorial(e as u64));
        }
        acc += weight;
    }
    Ok(acc)
}

/// A seeded Monte Carlo estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

const MC_SHARD: u64 = 65_536;

/// Importance-sampled plasma integral: `z_i` i.i.d. standard complex Gaussian
/// matching the `e^{-|z|^2}` weight, averaging `prod_{i<j} |z_i - z_j|^{2m}`.
/// Sharded with counter-derived seeds and merged in shard order, so the
/// result is deterministic for a given `(seed, samples)` regardless of the
/// worker pool.
pub fn plasma_norm_mc(n: usize, m: u32, samples: u64, seed: u64) -> Result<McEstimate> {
    if n == 0 || n > MAX_PARTICLES {
        return Err(VqError::SizeLimit(format!("particle count {n} outside 1..={MAX_PARTICLES}")));
    }
    if samples < 10_000 {
        return Err(VqError::Config(format!("need at least 10^4 samples, got {samples}")));
    }
    let shards: Vec<(u64, u64)> = (0..samples.div_ceil(MC_SHARD))
        .map(|i| {
            let lo = i * MC_SHARD;
            let hi = ((i + 1) * MC_SHARD).min(samples);
            (i, hi - lo)
        })
        .collect();
    let partials: Vec<(f64, f64)> = shards
        .par_iter()
        .map(|(shard, count)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ shard.wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let mut sum = 0.0f64;
            let mut sumsq = 0.0f64;
            let mut zs = vec![Complex64::zero(); n];
            for _ in 0..*count {
                for z in zs.iter_mut() {
                    // |z|^2 ~ Exp(1), phase uniform: the e^{-|z|^2}/pi density
                    let u: f64 = rng.random();
                    let r = (-(1.0 - u).ln()).sqrt();
                    let theta: f64 = rng.random::<f64>() * 2.0 * std::f64::consts::PI;
                    *z = Complex64::from_polar(r, theta);
                }
                let mut w = 1.0f64;
                for i in 1..n {
                    for j in 0..i {
                        w *= (zs[i] - zs[j]).norm_sqr().powi(m as i32);
                    }
                }
                sum += w;
                sumsq += w * w;
            }
            (sum, sumsq)
        })
        .collect();
    let (sum, sumsq) = partials
        .into_iter()
        .fold((0.0, 0.0), |(s, q), (ps, pq)| (s + ps, q + pq));
    let nf = samples as f64;
    let mean = sum / nf;
    let var = ((sumsq - sum * sum / nf) / (nf - 1.0)).max(0.0);
    Ok(McEstimate { mean, std_error: (var / nf).sqrt(), samples, seed })
}

/// Unnormalized Laughlin value
/// `pi^{-N/2} e^{-sum |z_i|^2 / 2} Delta(z)^{2s+1}`.
pub fn laughlin_eval(n: usize, s: u32, points: &[Complex64]) -> Result<Complex64> {
    if n > 8 {
        return Err(VqError::SizeLimit(format!("laughlin evaluation limited to N <= 8, got {n}")));
    }
    if points.len() != n {
        return Err(VqError::DimensionMismatch(format!(
            "{} points for N = {n}",
            points.len()
        )));
    }
    let mut delta = Complex64::one();
    for i in 1..n {
        for j in 0..i {
            delta *= points[i] - points[j];
        }
    }
    let norm_sq: f64 = points.iter().map(|z| z.norm_sqr()).sum();
    let gauss = (-0.5 * norm_sq).exp();
    Ok(delta.powu(2 * s + 1) * gauss * std::f64::consts::PI.powf(-(n as f64) / 2.0))
}

/// Squared norm of the matrix-model ground state at level `kappa`: the
/// coherent-state reduction leaves exactly the plasma integral, with the
/// decoupled auxiliary Gaussian normalized to one.
pub fn matrix_cs_ground_norm(n: usize, kappa: u32) -> Result<Rational> {
    plasma_norm(n, kappa)
}

/// Exact product-form evaluation `prod_{i>j} (z_i - z_j)^p`.
pub fn vandermonde_product_eval(points: &[Rational], p: u32) -> Rational {
    let mut acc = rint(1);
    for i in 1..points.len() {
        for j in 0..i {
            let d = &points[i] - &points[j];
            for _ in 0..p {
                acc *= &d;
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn lll_values_at_origin() {
        let at0 = lll_basis(0, Complex64::zero());
        assert!((at0.re - 1.0 / std::f64::consts::PI.sqrt()).abs() < 1e-15);
        for l in 1..=5 {
            assert_eq!(lll_basis(l, Complex64::zero()), Complex64::zero());
        }
    }

    #[test]
    fn lll_norms_match_factorials() {
        for l in 0..=5u32 {
            let exact = factorial(l as u64);
            let exact: f64 = format!("{exact}").parse().unwrap();
            let quad = lll_norm_quadrature(l);
            assert!(
                (quad - exact).abs() / exact < 0.01,
                "l={l}: quadrature {quad} vs {exact}"
            );
        }
    }

    #[test]
    fn expansion_n2_examples() {
        let e1 = vandermonde_power_expand(2, 1).unwrap();
        assert_eq!(e1.coeffs.len(), 1);
        assert_eq!(e1.coeffs[&vec![0, 1]], rint(1));

        let e3 = vandermonde_power_expand(2, 3).unwrap();
        assert_eq!(e3.coeffs.len(), 2);
        assert_eq!(e3.coeffs[&vec![0, 3]], rint(1));
        assert_eq!(e3.coeffs[&vec![1, 2]], rint(-3));
    }

    #[test]
    fn expansion_n3_ground_state() {
        let e = vandermonde_power_expand(3, 1).unwrap();
        assert_eq!(e.coeffs.len(), 1);
        assert_eq!(e.coeffs[&vec![0, 1, 2]], rint(1));
    }

    #[test]
    fn expansion_degree_bounds() {
        for (n, p) in [(3usize, 3u32), (4, 3), (4, 5), (3, 5)] {
            let e = vandermonde_power_expand(n, p).unwrap();
            let total: u32 = p * (n as u32) * (n as u32 - 1) / 2;
            for tuple in e.coeffs.keys() {
                assert!(tuple.iter().all(|l| *l <= p * (n as u32 - 1)), "n={n} p={p}: {tuple:?}");
                assert_eq!(tuple.iter().sum::<u32>(), total, "n={n} p={p}: {tuple:?}");
            }
        }
    }

    #[test]
    fn expansion_matches_product_at_rational_points() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (n, p) in [(2usize, 3u32), (3, 3), (4, 3), (3, 5)] {
            let e = vandermonde_power_expand(n, p).unwrap();
            for _ in 0..5 {
                let pts: Vec<Rational> = (0..n)
                    .map(|_| rat(rng.random_range(-9..=9), rng.random_range(1..=5)))
                    .collect();
                assert_eq!(
                    e.eval(&pts).unwrap(),
                    vandermonde_product_eval(&pts, p),
                    "n={n} p={p} at {pts:?}"
                );
            }
        }
    }

    #[test]
    fn expansion_antisymmetry_under_swap() {
        let e = vandermonde_power_expand(3, 3).unwrap();
        let pts = vec![rat(1, 2), rat(-2, 3), rint(3)];
        let mut swapped = pts.clone();
        swapped.swap(0, 2);
        assert_eq!(e.eval(&pts).unwrap(), -e.eval(&swapped).unwrap());
    }

    #[test]
    fn expansion_size_limits() {
        assert!(matches!(vandermonde_power_expand(7, 1), Err(VqError::SizeLimit(_))));
        assert!(matches!(vandermonde_power_expand(3, 9), Err(VqError::SizeLimit(_))));
    }

    #[test]
    fn schur_n2_s1() {
        let s = schur_expand(2, 1).unwrap();
        assert_eq!(s.coeffs.len(), 2);
        assert_eq!(s.coeffs[&vec![2, 0]], rint(1));
        assert_eq!(s.coeffs[&vec![1, 1]], rint(-3));
    }

    #[test]
    fn schur_weight_and_trivial_case() {
        for (n, s) in [(2usize, 1u32), (3, 1), (3, 2), (4, 1)] {
            let e = schur_expand(n, s).unwrap();
            let expect = s * (n as u32) * (n as u32 - 1);
            for y in e.coeffs.keys() {
                assert_eq!(y.iter().sum::<u32>(), expect, "n={n} s={s}: {y:?}");
                assert_eq!(y.len(), n);
            }
        }
        let s0 = schur_expand(3, 0).unwrap();
        assert_eq!(s0.coeffs.len(), 1);
        assert_eq!(s0.coeffs[&vec![0, 0, 0]], rint(1));
    }

    #[test]
    fn slater_inner_examples() {
        let d2 = vandermonde_power_expand(2, 1).unwrap();
        assert_eq!(slater_inner(&d2, &d2).unwrap(), rint(2));

        let d3 = vandermonde_power_expand(3, 1).unwrap();
        assert_eq!(slater_inner(&d3, &d3).unwrap(), rint(12));

        // disjoint supports
        let e1 = vandermonde_power_expand(2, 1).unwrap();
        let e3 = vandermonde_power_expand(2, 3).unwrap();
        let mut no_overlap = e3.clone();
        no_overlap.coeffs.remove(&vec![0, 1]);
        assert_eq!(slater_inner(&e1, &no_overlap).unwrap(), rint(0));

        let d2other = vandermonde_power_expand(3, 1).unwrap();
        assert!(slater_inner(&e1, &d2other).is_err());
    }

    #[test]
    fn plasma_norm_factorial_identity() {
        let mut expect = rint(1);
        for n in 1..=5usize {
            expect *= Rational::from_integer(factorial(n as u64));
            assert_eq!(plasma_norm(n, 1).unwrap(), expect, "N={n}");
        }
    }

    #[test]
    fn plasma_norm_n2_values() {
        assert_eq!(plasma_norm(2, 3).unwrap(), rint(48));
        assert_eq!(plasma_norm(2, 2).unwrap(), rint(8));
        assert_eq!(plasma_norm(1, 2).unwrap(), rint(1));
    }

    #[test]
    fn plasma_norm_matches_slater_route_for_odd_powers() {
        for (n, m) in [(2usize, 1u32), (2, 3), (3, 1), (3, 3), (4, 1)] {
            let e = vandermonde_power_expand(n, m).unwrap();
            assert_eq!(
                plasma_norm(n.min(5), m).unwrap(),
                slater_inner(&e, &e).unwrap(),
                "n={n} m={m}"
            );
        }
    }

    #[test]
    fn plasma_mc_matches_exact() {
        for (n, m) in [(2usize, 1u32), (3, 1), (2, 2)] {
            let exact = crate::rational::to_f64(&plasma_norm(n, m).unwrap());
            let est = plasma_norm_mc(n, m, 200_000, 42).unwrap();
            assert!(
                (est.mean - exact).abs() <= 3.0 * est.std_error,
                "n={n} m={m}: {} vs {exact} (3se = {})",
                est.mean,
                3.0 * est.std_error
            );
        }
    }

    #[test]
    fn plasma_mc_single_particle_exact() {
        let est = plasma_norm_mc(1, 2, 10_000, 3).unwrap();
        assert_eq!(est.mean, 1.0);
        assert_eq!(est.std_error, 0.0);
    }

    #[test]
    fn plasma_mc_deterministic() {
        let a = plasma_norm_mc(3, 2, 100_000, 123).unwrap();
        let b = plasma_norm_mc(3, 2, 100_000, 123).unwrap();
        assert_eq!(a, b);
        assert!(matches!(plasma_norm_mc(2, 1, 10, 0), Err(VqError::Config(_))));
    }

    #[test]
    fn laughlin_zero_order_at_coincidence() {
        // log-log slope of |phi| along z1 = z0 + eps estimates the zero order.
        let s = 1u32;
        let base = [Complex64::new(0.4, -0.2), Complex64::zero(), Complex64::new(-1.1, 0.7)];
        let value = |eps: f64| {
            let mut pts = base;
            pts[1] = pts[0] + Complex64::new(eps, 0.0);
            laughlin_eval(3, s, &pts).unwrap().norm()
        };
        let (e1, e2) = (1e-4, 1e-5);
        let slope = (value(e1) / value(e2)).ln() / (e1 / e2).ln();
        assert!((slope - (2.0 * s as f64 + 1.0)).abs() < 0.05, "slope {slope}");
    }

    #[test]
    fn laughlin_antisymmetry_and_slater_limit() {
        let pts = [Complex64::new(0.3, 0.1), Complex64::new(-0.5, 0.9)];
        let swapped = [pts[1], pts[0]];
        let v = laughlin_eval(2, 2, &pts).unwrap();
        let w = laughlin_eval(2, 2, &swapped).unwrap();
        assert!((v + w).norm() < 1e-15 * v.norm().max(1.0));

        // s = 0 is the Slater ground state: Vandermonde times Gaussian.
        let v0 = laughlin_eval(2, 0, &pts).unwrap();
        let direct = (pts[1] - pts[0])
            * (-0.5 * (pts[0].norm_sqr() + pts[1].norm_sqr())).exp()
            / std::f64::consts::PI;
        assert!((v0 - direct).norm() < 1e-15);
    }

    #[test]
    fn ground_norm_delegates_to_plasma() {
        for n in 1..=4usize {
            assert_eq!(
                matrix_cs_ground_norm(n, 1).unwrap(),
                plasma_norm(n, 1).unwrap()
            );
        }
        assert_eq!(matrix_cs_ground_norm(2, 3).unwrap(), rint(48));
    }

    #[test]
    fn alternant_csv_format() {
        let e = vandermonde_power_expand(2, 3).unwrap();
        let mut buf = Vec::new();
        e.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "l0,l1,coeff_num,coeff_den");
        assert_eq!(lines[1], "0,3,1,1");
        assert_eq!(lines[2], "1,2,-3,1");
    }
}
