//! The k-boson ladder on truncated Fock space and the logical operators it
//! carries.
//!
//! The number basis decomposes as `n = k N_k + D_k` with `N_k = floor(n/k)`
//! and `D_k = n mod k`. The ladder normalization
//!
//! `A_k |n> = sqrt(floor(n/k)) |n-k>`,  `A_k^+ |n> = sqrt(floor(n/k)+1) |n+k>`
//!
//! is the one forced by the coherent-state codeword coefficients
//! `beta^l / sqrt(l!)`. The logical shift is
//!
//! `X = E n^{-1/2} a^+`,  `E = (I + N_k)^{-1/2} A_k F + G`,
//!
//! where `F` projects onto the `n = 0 (mod k)` residue (built two ways: the
//! falling product and its Stirling expansion, compared exactly) and `G`
//! selects the complementary residues through the interpolation coefficients
//! `p_l`. On codewords `X` acts as the cyclic index shift; its matrix in the
//! codeword basis is the permutation with ones on the subdiagonal plus the
//! top-right corner.
//!
//! Operators shifting the number basis corrupt the top rows of any truncated
//! carrier, so every identity check restricts to the guard-banded subspace
//! `n <= n_max - guard`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::combinatorics::{interp_coeffs, stirling_first};
use crate::error::{Result, VqError};
use crate::rational::{factorial, rint, Rational};

/// Truncated Fock carrier: states `|0> ... |n_max>`, with identities
/// validated only on `n <= n_max - guard`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockSpace {
    pub n_max: usize,
    pub guard: usize,
}

impl FockSpace {
    pub fn new(n_max: usize, guard: usize) -> Result<Self> {
        if guard > n_max {
            return Err(VqError::Config(format!(
                "guard band {guard} exceeds cutoff {n_max}"
            )));
        }
        Ok(FockSpace { n_max, guard })
    }

    pub fn dim(&self) -> usize {
        self.n_max + 1
    }

    /// Largest validated occupation number.
    pub fn guarded_max(&self) -> usize {
        self.n_max - self.guard
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    pub space: FockSpace,
    pub mat: DMatrix<Complex64>,
}

impl FockOperator {
    pub fn zeros(space: FockSpace) -> Self {
        FockOperator { space, mat: DMatrix::zeros(space.dim(), space.dim()) }
    }

    pub fn identity(space: FockSpace) -> Self {
        FockOperator { space, mat: DMatrix::identity(space.dim(), space.dim()) }
    }

    pub fn from_diagonal(space: FockSpace, diag: impl Fn(usize) -> f64) -> Self {
        let mut op = Self::zeros(space);
        for n in 0..space.dim() {
            op.mat[(n, n)] = Complex64::new(diag(n), 0.0);
        }
        op
    }

    fn same_space(&self, other: &FockOperator) -> Result<()> {
        if self.space != other.space {
            return Err(VqError::DimensionMismatch(
                "operators live on different Fock spaces".into(),
            ));
        }
        Ok(())
    }

    pub fn mul(&self, other: &FockOperator) -> Result<FockOperator> {
        self.same_space(other)?;
        Ok(FockOperator { space: self.space, mat: &self.mat * &other.mat })
    }

    pub fn add(&self, other: &FockOperator) -> Result<FockOperator> {
        self.same_space(other)?;
        Ok(FockOperator { space: self.space, mat: &self.mat + &other.mat })
    }

    pub fn sub(&self, other: &FockOperator) -> Result<FockOperator> {
        self.same_space(other)?;
        Ok(FockOperator { space: self.space, mat: &self.mat - &other.mat })
    }

    pub fn adjoint(&self) -> FockOperator {
        FockOperator { space: self.space, mat: self.mat.adjoint() }
    }

    pub fn commutator(&self, other: &FockOperator) -> Result<FockOperator> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn apply(&self, v: &FockVector) -> Result<FockVector> {
        if self.space != v.space {
            return Err(VqError::DimensionMismatch(
                "operator and vector live on different Fock spaces".into(),
            ));
        }
        Ok(FockVector { space: self.space, amps: &self.mat * &v.amps })
    }

    /// Largest entry magnitude over the guard-banded block.
    pub fn guarded_max_abs(&self) -> f64 {
        let top = self.space.guarded_max();
        let mut m = 0.0f64;
        for r in 0..=top {
            for c in 0..=top {
                m = m.max(self.mat[(r, c)].norm());
            }
        }
        m
    }

    /// `max |(self - other)[r, c]|` over the guard-banded block.
    pub fn guarded_max_diff(&self, other: &FockOperator) -> Result<f64> {
        self.same_space(other)?;
        Ok(self.sub(other)?.guarded_max_abs())
    }

    /// CSV dump `row,col,re,im` of the nonzero entries, for debugging.
    pub fn write_csv<W: std::io::Write>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "row,col,re,im")?;
        for r in 0..self.space.dim() {
            for c in 0..self.space.dim() {
                let z = self.mat[(r, c)];
                if z != Complex64::zero() {
                    writeln!(w, "{r},{c},{},{}", z.re, z.im)?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    pub space: FockSpace,
    pub amps: DVector<Complex64>,
}

impl FockVector {
    pub fn zero(space: FockSpace) -> Self {
        FockVector { space, amps: DVector::zeros(space.dim()) }
    }

    pub fn basis_state(space: FockSpace, n: usize) -> Result<Self> {
        if n >= space.dim() {
            return Err(VqError::OutOfRange(format!("basis state {n} above cutoff {}", space.n_max)));
        }
        let mut v = Self::zero(space);
        v.amps[n] = Complex64::one();
        Ok(v)
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    /// `<self|other>` with the conjugation on `self`.
    pub fn inner(&self, other: &FockVector) -> Result<Complex64> {
        if self.space != other.space {
            return Err(VqError::DimensionMismatch(
                "vectors live on different Fock spaces".into(),
            ));
        }
        Ok(self.amps.dotc(&other.amps))
    }

    pub fn normalized(&self) -> FockVector {
        let n = self.norm();
        if n == 0.0 {
            return self.clone();
        }
        FockVector { space: self.space, amps: &self.amps / Complex64::new(n, 0.0) }
    }

    pub fn sub(&self, other: &FockVector) -> Result<FockVector> {
        if self.space != other.space {
            return Err(VqError::DimensionMismatch(
                "vectors live on different Fock spaces".into(),
            ));
        }
        Ok(FockVector { space: self.space, amps: &self.amps - &other.amps })
    }

    pub fn max_abs(&self) -> f64 {
        self.amps.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// The four operators of the k-boson decomposition.
pub struct LadderOps {
    /// `A_k`
    pub lower: FockOperator,
    /// `A_k^+`
    pub raise: FockOperator,
    /// `N_k = diag(floor(n/k))`
    pub number: FockOperator,
    /// `D_k = diag(n mod k)`
    pub residue: FockOperator,
}

pub fn ladder_ops(space: FockSpace, k: usize) -> Result<LadderOps> {
    if k == 0 {
        return Err(VqError::Config("ladder order k must be at least 1".into()));
    }
    if k > space.n_max {
        return Err(VqError::Config(format!(
            "ladder order {k} exceeds cutoff {}",
            space.n_max
        )));
    }
    let dim = space.dim();
    let mut raise = FockOperator::zeros(space);
    for n in 0..dim {
        if n + k < dim {
            raise.mat[(n + k, n)] = Complex64::new(((n / k + 1) as f64).sqrt(), 0.0);
        }
    }
    let lower = raise.adjoint();
    let number = FockOperator::from_diagonal(space, |n| (n / k) as f64);
    let residue = FockOperator::from_diagonal(space, |n| (n % k) as f64);
    Ok(LadderOps { lower, raise, number, residue })
}

/// The residue projector `F = ((-1)^(k-1)/(k-1)!) prod_{j=1}^{k-1} (D_k - j)`,
/// verified entrywise against the Stirling expansion before being returned.
pub fn build_f(space: FockSpace, k: usize) -> Result<FockOperator> {
    if k < 2 {
        return Err(VqError::Config("build_f needs k >= 2".into()));
    }
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let scale = Rational::new(sign.into(), factorial((k - 1) as u64));

    let value_product = |d: i64| -> Rational {
        let mut acc = rint(1);
        for j in 1..k as i64 {
            acc *= rint(d - j);
        }
        acc * &scale
    };
    let value_stirling = |d: i64| -> Result<Rational> {
        let mut acc = Rational::zero();
        let mut pow = rint(1);
        for m in 1..=k as u32 {
            acc += Rational::from_integer(stirling_first(k as u32, m)?) * &pow;
            pow *= rint(d);
        }
        Ok(acc * &scale)
    };

    let mut diag = Vec::with_capacity(k);
    for d in 0..k as i64 {
        let a = value_product(d);
        let b = value_stirling(d)?;
        if a != b {
            return Err(VqError::InternalConsistency(format!(
                "residue projector mismatch at d={d} for k={k}: product form {a}, Stirling form {b}"
            )));
        }
        diag.push(a);
    }
    Ok(FockOperator::from_diagonal(space, |n| {
        crate::rational::to_f64(&diag[n % k])
    }))
}

/// The complementary residue selector `G = sum_l p_l D_k^l`, diagonal 0 on
/// `n = 0 (mod k)` and 1 otherwise.
pub fn build_g(space: FockSpace, k: usize) -> Result<FockOperator> {
    if k < 2 {
        return Err(VqError::Config("build_g needs k >= 2".into()));
    }
    let coeffs = interp_coeffs(k as u32)?;
    let mut diag = Vec::with_capacity(k);
    for d in 0..k as i64 {
        let v = coeffs.eval(&rint(d));
        if !(v.is_zero() || v.is_one()) {
            return Err(VqError::InternalConsistency(format!(
                "residue selector value {v} at d={d} for k={k} is not 0/1"
            )));
        }
        diag.push(v);
    }
    Ok(FockOperator::from_diagonal(space, |n| {
        crate::rational::to_f64(&diag[n % k])
    }))
}

/// `E = (I + N_k)^{-1/2} A_k F + G`.
pub fn build_e(space: FockSpace, k: usize) -> Result<FockOperator> {
    let ladder = ladder_ops(space, k)?;
    let f = build_f(space, k)?;
    let g = build_g(space, k)?;
    let shift_scale = FockOperator::from_diagonal(space, |n| 1.0 / ((n / k + 1) as f64).sqrt());
    shift_scale.mul(&ladder.lower)?.mul(&f)?.add(&g)
}

/// The logical shift `X = E n^{-1/2} a^+`. The inverse square root is defined
/// spectrally on the strictly positive eigenspace and as 0 on `|0>`; the zero
/// branch is unreachable because `n^{-1/2}` acts after `a^+`.
pub fn build_x(space: FockSpace, k: usize) -> Result<FockOperator> {
    let e = build_e(space, k)?;
    let n_inv_sqrt = FockOperator::from_diagonal(space, |n| {
        if n == 0 {
            0.0
        } else {
            1.0 / (n as f64).sqrt()
        }
    });
    let ladder1 = ladder_ops(space, 1)?;
    e.mul(&n_inv_sqrt)?.mul(&ladder1.raise)
}

/// Angles and phases of a highest-weight vector of the k-boson ladder.
#[derive(Debug, Clone)]
pub struct HighestWeightSpec {
    pub k: usize,
    /// `phi_0 ... phi_{k-2}`.
    pub phis: Vec<f64>,
    /// `mu_0 ... mu_{k-1}`.
    pub mus: Vec<f64>,
}

/// Amplitudes `c_j = (prod_{l<j} sin phi_l) gamma_j e^{i mu_j}` on `|j>`,
/// `j < k`, with `gamma_j = cos phi_j` except `gamma_{k-1} = 1`. Unit norm by
/// the telescoping sine/cosine identity; annihilated by `A_k` because the
/// support sits below `k`.
pub fn highest_weight_vector(space: FockSpace, spec: &HighestWeightSpec) -> Result<FockVector> {
    let k = spec.k;
    if k < 2 {
        return Err(VqError::Config("highest weight vector needs k >= 2".into()));
    }
    if k > space.n_max {
        return Err(VqError::Config(format!("k={k} exceeds cutoff {}", space.n_max)));
    }
    if spec.phis.len() != k - 1 || spec.mus.len() != k {
        return Err(VqError::Config(format!(
            "highest weight spec for k={k} needs {} angles and {k} phases",
            k - 1
        )));
    }
    let mut v = FockVector::zero(space);
    let mut sin_prod = 1.0f64;
    for j in 0..k {
        let gamma = if j == k - 1 { 1.0 } else { spec.phis[j].cos() };
        v.amps[j] = Complex64::from_polar(sin_prod * gamma, spec.mus[j]);
        if j < k - 1 {
            sin_prod *= spec.phis[j].sin();
        }
    }
    Ok(v)
}

/// Codeword parameters: residue index `j` and coherent amplitude `beta`.
#[derive(Debug, Clone)]
pub struct CodewordSpec {
    pub k: usize,
    pub j: usize,
    pub beta: Complex64,
}

/// Weight above which the dropped Poisson tail is flagged.
pub const CODEWORD_TRUNCATION_WARN: f64 = 1e-6;

/// A codeword together with its truncation bookkeeping.
#[derive(Debug, Clone)]
pub struct Codeword {
    pub state: FockVector,
    /// Probability weight of the dropped tail, before renormalization.
    pub truncation_weight: f64,
    pub truncation_warning: bool,
}

/// `e^{-|beta|^2/2} sum_l (beta^l / sqrt(l!)) |k l + j>`, truncated at the
/// cutoff and renormalized.
pub fn codeword(space: FockSpace, spec: &CodewordSpec) -> Result<Codeword> {
    if spec.j >= spec.k {
        return Err(VqError::OutOfRange(format!(
            "codeword residue {} outside 0..{}",
            spec.j, spec.k
        )));
    }
    if spec.k > space.n_max {
        return Err(VqError::Config(format!("k={} exceeds cutoff {}", spec.k, space.n_max)));
    }
    let mut v = FockVector::zero(space);
    let mut captured = 0.0f64;
    let mut amp = Complex64::one(); // beta^l / sqrt(l!) accumulated iteratively
    let mut l = 0usize;
    loop {
        let n = spec.k * l + spec.j;
        if n >= space.dim() {
            break;
        }
        v.amps[n] = amp;
        captured += amp.norm_sqr();
        l += 1;
        amp *= spec.beta / (l as f64).sqrt();
    }
    let total = spec.beta.norm_sqr().exp();
    let truncation_weight = (1.0 - captured / total).max(0.0);
    Ok(Codeword {
        state: v.normalized(),
        truncation_weight,
        truncation_warning: truncation_weight > CODEWORD_TRUNCATION_WARN,
    })
}

/// The reference cyclic-shift pattern: ones on the subdiagonal plus the
/// top-right corner, zeros elsewhere.
pub fn r_matrix(k: usize) -> DMatrix<Complex64> {
    let mut r = DMatrix::zeros(k, k);
    r[(0, k - 1)] = Complex64::one();
    for j in 1..k {
        r[(j, j - 1)] = Complex64::one();
    }
    r
}

/// Matrix elements `<i-bar| X |j-bar>` of the logical shift in the codeword
/// basis.
pub fn logical_matrix(space: FockSpace, k: usize, beta: Complex64) -> Result<DMatrix<Complex64>> {
    let x = build_x(space, k)?;
    let words: Vec<FockVector> = (0..k)
        .map(|j| codeword(space, &CodewordSpec { k, j, beta }).map(|c| c.state))
        .collect::<Result<Vec<_>>>()?;
    let mut m = DMatrix::zeros(k, k);
    for (j, w) in words.iter().enumerate() {
        let image = x.apply(w)?;
        for (i, wi) in words.iter().enumerate() {
            m[(i, j)] = wi.inner(&image)?;
        }
    }
    Ok(m)
}

/// Builds the k-boson raising operator over the l-boson tower on the residue
/// sector `{|l m + j>}` (the tower treated as elementary with its induced
/// number operator) and compares it with `A_{kl}^+` on `|k l s + j>` inside
/// the guard band. Returns the largest amplitude deviation.
pub fn semigroup_sector_residual(space: FockSpace, k: usize, l: usize, j: usize) -> Result<f64> {
    if k == 0 || l == 0 {
        return Err(VqError::Config("semigroup orders must be at least 1".into()));
    }
    if k * l > space.n_max / 4 {
        return Err(VqError::Config(format!(
            "composed order {} exceeds n_max/4 = {}",
            k * l,
            space.n_max / 4
        )));
    }
    if j >= l {
        return Err(VqError::OutOfRange(format!("residue {j} outside the {l}-boson tower")));
    }
    let composed_raise = ladder_ops(space, k * l)?.raise;
    let mut worst = 0.0f64;
    let mut s = 0usize;
    loop {
        let n = k * l * s + j;
        let n_up = n + k * l;
        if n_up > space.guarded_max() {
            break;
        }
        // tower index of |n>: m = (n - j) / l = k s; raising over the tower:
        // sqrt(floor(m/k) + 1) |l (m + k) + j>
        let m = (n - j) / l;
        let coeff = ((m / k + 1) as f64).sqrt();
        let mut expected = FockVector::zero(space);
        expected.amps[n_up] = Complex64::new(coeff, 0.0);
        let actual = composed_raise.apply(&FockVector::basis_state(space, n)?)?;
        worst = worst.max(expected.sub(&actual)?.max_abs());
        s += 1;
    }
    Ok(worst)
}

/// The composition check on the principal sector `{|k l s>}`.
pub fn semigroup_compose_check(space: FockSpace, k: usize, l: usize) -> Result<f64> {
    semigroup_sector_residual(space, k, l, 0)
}
