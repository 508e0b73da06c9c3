//! Exact mode-algebra realizations on sparse Fock monomials.
//!
//! Bosonic pair: a weight-0 field `a_n` and its weight-1 conjugate `a_n^+`
//! with the pairing `[a_m, a_n^+] = delta_{m+n}` and vacuum
//!
//! `a_m |0> = 0 (m >= 1)`,  `a_m^+ |0> = 0 (m >= 0)`.
//!
//! This is the unique pairing under which the normal-ordered sum
//!
//! `L_n = sum_r r :a^+_{n-r} a_r: + lambda (n+1) (a_n^+ + M n a_n)`
//!
//! closes into `[L_m, L_n] = (m - n) L_{m+n} + (c/12)(m^3 - m) delta_{m+n}`
//! with `c = 2 - 24 M lambda^2`; with the conjugate-ordered pairing the
//! structure constants come out reversed and the central cross term flips
//! sign. The exact mode commutators it implies are
//!
//! `[L_m, a_n]   = -(m+n) a_{m+n} - lambda (m+1)     delta_{m,-n}`
//! `[L_m, a_n^+] = -n     a_{m+n}^+ + lambda M m (m+1) delta_{m,-n}`
//!
//! (the weight-0/weight-1 primary relations in the standard sign convention,
//! deformed by the `lambda` terms).
//!
//! Fermionic pair: `{f_r, f_s^+} = delta_{r+s}` on half-integer modes with
//! `f_r |0> = f_r^+ |0> = 0 (r >= 1/2)` and
//! `L_n = -sum_r (r - lambda n) :f^+_{n-r} f_r:`, which implies
//!
//! `[L_m, f_r] = ((1-lambda) m + r) f_{m+r}`,
//! `[L_m, f_r^+] = (lambda m + r) f^+_{m+r}`.
//!
//! States are polynomials in the creator modes applied to the vacuum, with
//! exact rational coefficients, so every identity check is exact: truncation
//! can never masquerade as an anomaly. Creation beyond the declared mode
//! window is an error rather than a silent drop, which is the reachability
//! guard: a check that completes ran entirely inside the window.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Result, VqError};
use crate::rational::{rat, rint, Rational};

/// Slot kinds of the bosonic pair: the field `a` and its conjugate `a^+`.
const FIELD: u8 = 0;
const CONJUGATE: u8 = 1;

/// Occupation-list basis ket, sorted by slot.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BosonKet(Vec<((u8, i64), u32)>);

impl BosonKet {
    pub fn vacuum() -> Self {
        BosonKet(Vec::new())
    }

    fn with_bumped(&self, slot: (u8, i64)) -> BosonKet {
        let mut v = self.0.clone();
        match v.binary_search_by_key(&slot, |e| e.0) {
            Ok(i) => v[i].1 += 1,
            Err(i) => v.insert(i, (slot, 1)),
        }
        BosonKet(v)
    }

    fn occupancy(&self, slot: (u8, i64)) -> u32 {
        match self.0.binary_search_by_key(&slot, |e| e.0) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    fn with_lowered(&self, slot: (u8, i64)) -> BosonKet {
        let mut v = self.0.clone();
        if let Ok(i) = v.binary_search_by_key(&slot, |e| e.0) {
            if v[i].1 == 1 {
                v.remove(i);
            } else {
                v[i].1 -= 1;
            }
        }
        BosonKet(v)
    }
}

/// Linear combination of kets with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BosonState(pub BTreeMap<BosonKet, Rational>);

impl BosonState {
    pub fn vacuum() -> Self {
        let mut m = BTreeMap::new();
        m.insert(BosonKet::vacuum(), rint(1));
        BosonState(m)
    }

    pub fn zero() -> Self {
        BosonState::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, ket: BosonKet, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.0.entry(ket).or_insert_with(Rational::zero);
        *entry += coeff;
        // prune exact zeros lazily
        self.0.retain(|_, c| !c.is_zero());
    }

    pub fn add(&self, other: &BosonState) -> BosonState {
        let mut out = self.clone();
        for (k, c) in &other.0 {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &BosonState) -> BosonState {
        self.add(&other.scale(&rint(-1)))
    }

    pub fn scale(&self, s: &Rational) -> BosonState {
        if s.is_zero() {
            return BosonState::zero();
        }
        let mut out = self.clone();
        for c in out.0.values_mut() {
            *c = c.clone() * s;
        }
        out
    }

    /// Coefficient of the bare vacuum; the vacuum-to-vacuum amplitude.
    pub fn vacuum_component(&self) -> Rational {
        self.0
            .get(&BosonKet::vacuum())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

/// Free parameters of the bosonic realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BosonParams {
    pub lambda: Rational,
    pub big_m: Rational,
}

/// The bosonic mode algebra on the window `|mode| <= window`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BosonModes {
    pub window: i64,
    /// Per-slot occupancy cap; exceeding it is a configuration error.
    pub occupancy_cap: u32,
}

impl BosonModes {
    pub fn new(window: i64) -> Result<Self> {
        if window < 1 {
            return Err(VqError::Config(format!("mode window must be positive, got {window}")));
        }
        Ok(BosonModes { window, occupancy_cap: 64 })
    }

    fn check_mode(&self, n: i64) -> Result<()> {
        if n.abs() > self.window {
            return Err(VqError::Config(format!(
                "mode {n} outside the window |n| <= {}",
                self.window
            )));
        }
        Ok(())
    }

    fn create(&self, state: &BosonState, slot: (u8, i64)) -> Result<BosonState> {
        self.check_mode(slot.1)?;
        let mut out = BosonState::zero();
        for (ket, c) in &state.0 {
            if ket.occupancy(slot) >= self.occupancy_cap {
                return Err(VqError::Config(format!(
                    "occupancy cap {} exceeded at slot {slot:?}",
                    self.occupancy_cap
                )));
            }
            out.add_term(ket.with_bumped(slot), c.clone());
        }
        Ok(out)
    }

    /// Derivative-type action: coefficient `sign * occupancy`, occupancy down
    /// by one.
    fn annihilate(&self, state: &BosonState, slot: (u8, i64), sign: i64) -> BosonState {
        let mut out = BosonState::zero();
        for (ket, c) in &state.0 {
            let occ = ket.occupancy(slot);
            if occ > 0 {
                out.add_term(ket.with_lowered(slot), c * rint(sign * occ as i64));
            }
        }
        out
    }

    /// `a_n`: multiplication by the field mode for `n <= 0`, the pairing
    /// derivative `+d/d(a^+_{-n})` for `n >= 1`.
    pub fn apply_a(&self, n: i64, state: &BosonState) -> Result<BosonState> {
        self.check_mode(n)?;
        if n <= 0 {
            self.create(state, (FIELD, n))
        } else {
            Ok(self.annihilate(state, (CONJUGATE, -n), 1))
        }
    }

    /// `a_n^+`: multiplication by the conjugate mode for `n <= -1`, the
    /// pairing derivative `-d/d(a_{-n})` for `n >= 0`.
    pub fn apply_a_dag(&self, n: i64, state: &BosonState) -> Result<BosonState> {
        self.check_mode(n)?;
        if n <= -1 {
            self.create(state, (CONJUGATE, n))
        } else {
            Ok(self.annihilate(state, (FIELD, -n), -1))
        }
    }

    /// One normal-ordered bilinear `:a^+_{x} a_{y}:` applied to a state.
    /// Creators to the left means the annihilator member acts first.
    fn apply_normal_bilinear(&self, x: i64, y: i64, state: &BosonState) -> Result<BosonState> {
        let conj_annihilates = x >= 0;
        let field_creates = y <= 0;
        if conj_annihilates && field_creates {
            // reorder: a_y a^+_x with a^+_x acting first
            let tmp = self.apply_a_dag(x, state)?;
            self.apply_a(y, &tmp)
        } else {
            let tmp = self.apply_a(y, state)?;
            self.apply_a_dag(x, &tmp)
        }
    }

    /// `L_n = sum_r r :a^+_{n-r} a_r: + lambda (n+1) (a_n^+ + M n a_n)`,
    /// with the mode sum restricted to indices inside the window.
    pub fn apply_l(&self, n: i64, p: &BosonParams, state: &BosonState) -> Result<BosonState> {
        if n.abs() > 3 {
            return Err(VqError::OutOfRange(format!("generator index {n} outside |n| <= 3")));
        }
        if self.window < 4 * n.abs() {
            return Err(VqError::Config(format!(
                "mode window {} below 4|n| = {}",
                self.window,
                4 * n.abs()
            )));
        }
        let mut out = BosonState::zero();
        let lo = (-self.window).max(n - self.window);
        let hi = self.window.min(n + self.window);
        for r in lo..=hi {
            if r == 0 {
                continue;
            }
            let term = self.apply_normal_bilinear(n - r, r, state)?;
            out = out.add(&term.scale(&rint(r)));
        }
        let scale = &p.lambda * rint(n + 1);
        if !scale.is_zero() {
            out = out.add(&self.apply_a_dag(n, state)?.scale(&scale));
            let m_scale = &scale * &p.big_m * rint(n);
            if !m_scale.is_zero() {
                out = out.add(&self.apply_a(n, state)?.scale(&m_scale));
            }
        }
        Ok(out)
    }

    /// `([L_m, a_n] + (m+n) a_{m+n} + lambda (m+1) delta_{m+n}) psi`;
    /// identically zero when the realization satisfies its field relation.
    pub fn field_relation_defect(
        &self,
        m: i64,
        n: i64,
        p: &BosonParams,
        state: &BosonState,
    ) -> Result<BosonState> {
        let comm = self
            .apply_l(m, p, &self.apply_a(n, state)?)?
            .sub(&self.apply_a(n, &self.apply_l(m, p, state)?)?);
        let mut rhs = self.apply_a(m + n, state)?.scale(&rint(-(m + n)));
        if m + n == 0 {
            rhs = rhs.sub(&state.scale(&(&p.lambda * rint(m + 1))));
        }
        Ok(comm.sub(&rhs))
    }

    /// `([L_m, a_n^+] + n a^+_{m+n} - lambda M m (m+1) delta_{m+n}) psi`.
    pub fn conjugate_relation_defect(
        &self,
        m: i64,
        n: i64,
        p: &BosonParams,
        state: &BosonState,
    ) -> Result<BosonState> {
        let comm = self
            .apply_l(m, p, &self.apply_a_dag(n, state)?)?
            .sub(&self.apply_a_dag(n, &self.apply_l(m, p, state)?)?);
        let mut rhs = self.apply_a_dag(m + n, state)?.scale(&rint(-n));
        if m + n == 0 {
            let coeff = &p.lambda * &p.big_m * rint(m) * rint(m + 1);
            rhs = rhs.add(&state.scale(&coeff));
        }
        Ok(comm.sub(&rhs))
    }

    /// `<0| [L_m, L_{-m}] |0>` by direct application.
    pub fn commutator_vacuum_expectation(&self, m: i64, p: &BosonParams) -> Result<Rational> {
        let vac = BosonState::vacuum();
        let forward = self.apply_l(m, p, &self.apply_l(-m, p, &vac)?)?;
        let backward = self.apply_l(-m, p, &self.apply_l(m, p, &vac)?)?;
        Ok(forward.vacuum_component() - backward.vacuum_component())
    }

    /// `<0| L_0 |0>`, which the vacuum convention makes exactly zero.
    pub fn l0_vacuum_expectation(&self, p: &BosonParams) -> Result<Rational> {
        Ok(self.apply_l(0, p, &BosonState::vacuum())?.vacuum_component())
    }

    /// The central coefficient `c` extracted from
    /// `<0|[L_m, L_{-m}]|0> = 2m <0|L_0|0> + (c/12)(m^3 - m)` at a given `m >= 2`.
    pub fn central_charge(&self, m: i64, p: &BosonParams) -> Result<Rational> {
        if m < 2 {
            return Err(VqError::OutOfRange(format!(
                "central coefficient needs m >= 2, got {m}"
            )));
        }
        let omega = self.commutator_vacuum_expectation(m, p)?;
        let l0 = self.l0_vacuum_expectation(p)?;
        Ok((omega - rint(2 * m) * l0) * rint(12) / rint(m * m * m - m))
    }
}

// ---------------------------------------------------------------------------
// fermions
// ---------------------------------------------------------------------------

/// Fermionic slot: `(kind, 2r)` with `2r` odd; creators carry `2r <= -1`.
type FermSlot = (u8, i64);

/// Ordered occupied-slot list; Pauli exclusion by construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FermionKet(Vec<FermSlot>);

impl FermionKet {
    pub fn vacuum() -> Self {
        FermionKet(Vec::new())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FermionState(pub BTreeMap<FermionKet, Rational>);

impl FermionState {
    pub fn vacuum() -> Self {
        let mut m = BTreeMap::new();
        m.insert(FermionKet::vacuum(), rint(1));
        FermionState(m)
    }

    pub fn zero() -> Self {
        FermionState::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, ket: FermionKet, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.0.entry(ket).or_insert_with(Rational::zero);
        *entry += coeff;
        self.0.retain(|_, c| !c.is_zero());
    }

    pub fn add(&self, other: &FermionState) -> FermionState {
        let mut out = self.clone();
        for (k, c) in &other.0 {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FermionState) -> FermionState {
        self.add(&other.scale(&rint(-1)))
    }

    pub fn scale(&self, s: &Rational) -> FermionState {
        if s.is_zero() {
            return FermionState::zero();
        }
        let mut out = self.clone();
        for c in out.0.values_mut() {
            *c = c.clone() * s;
        }
        out
    }

    pub fn vacuum_component(&self) -> Rational {
        self.0
            .get(&FermionKet::vacuum())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FermionModes {
    /// Half-integer modes `|r| <= window + 1/2` are admitted.
    pub window: i64,
}

impl FermionModes {
    pub fn new(window: i64) -> Result<Self> {
        if window < 1 {
            return Err(VqError::Config(format!("mode window must be positive, got {window}")));
        }
        Ok(FermionModes { window })
    }

    fn check_mode(&self, twice_r: i64) -> Result<()> {
        if twice_r % 2 == 0 {
            return Err(VqError::Config(format!(
                "fermionic mode label {twice_r}/2 is not half-integral"
            )));
        }
        if twice_r.abs() > 2 * self.window + 1 {
            return Err(VqError::Config(format!(
                "mode {twice_r}/2 outside the window |r| <= {} + 1/2",
                self.window
            )));
        }
        Ok(())
    }

    fn create(&self, state: &FermionState, slot: FermSlot) -> Result<FermionState> {
        self.check_mode(slot.1)?;
        let mut out = FermionState::zero();
        for (ket, c) in &state.0 {
            match ket.0.binary_search(&slot) {
                Ok(_) => {} // doubly occupied: zero
                Err(pos) => {
                    let mut v = ket.0.clone();
                    v.insert(pos, slot);
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    out.add_term(FermionKet(v), c * rint(sign));
                }
            }
        }
        Ok(out)
    }

    fn annihilate(&self, state: &FermionState, slot: FermSlot) -> FermionState {
        let mut out = FermionState::zero();
        for (ket, c) in &state.0 {
            if let Ok(pos) = ket.0.binary_search(&slot) {
                let mut v = ket.0.clone();
                v.remove(pos);
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                out.add_term(FermionKet(v), c * rint(sign));
            }
        }
        out
    }

    /// `f_r` with `r = twice_r / 2`.
    pub fn apply_f(&self, twice_r: i64, state: &FermionState) -> Result<FermionState> {
        self.check_mode(twice_r)?;
        if twice_r <= -1 {
            self.create(state, (FIELD, twice_r))
        } else {
            Ok(self.annihilate(state, (CONJUGATE, -twice_r)))
        }
    }

    /// `f_r^+` with `r = twice_r / 2`.
    pub fn apply_f_dag(&self, twice_r: i64, state: &FermionState) -> Result<FermionState> {
        self.check_mode(twice_r)?;
        if twice_r <= -1 {
            self.create(state, (CONJUGATE, twice_r))
        } else {
            Ok(self.annihilate(state, (FIELD, -twice_r)))
        }
    }

    /// One normal-ordered bilinear `:f^+_{n-r} f_r:`; reordering two
    /// fermionic factors carries a minus sign.
    fn apply_normal_bilinear(
        &self,
        twice_x: i64,
        twice_y: i64,
        state: &FermionState,
    ) -> Result<FermionState> {
        let conj_annihilates = twice_x >= 1;
        let field_creates = twice_y <= -1;
        if conj_annihilates && field_creates {
            let tmp = self.apply_f_dag(twice_x, state)?;
            Ok(self.apply_f(twice_y, &tmp)?.scale(&rint(-1)))
        } else {
            let tmp = self.apply_f(twice_y, state)?;
            self.apply_f_dag(twice_x, &tmp)
        }
    }

    /// `L_n = -sum_r (r - lambda n) :f^+_{n-r} f_r:` over the window.
    pub fn apply_l(&self, n: i64, lambda: &Rational, state: &FermionState) -> Result<FermionState> {
        if n.abs() > 3 {
            return Err(VqError::OutOfRange(format!("generator index {n} outside |n| <= 3")));
        }
        if self.window < 4 * n.abs() {
            return Err(VqError::Config(format!(
                "mode window {} below 4|n| = {}",
                self.window,
                4 * n.abs()
            )));
        }
        let bound = 2 * self.window + 1;
        let mut out = FermionState::zero();
        let mut twice_r = -bound;
        while twice_r <= bound {
            let twice_x = 2 * n - twice_r;
            if twice_x.abs() <= bound {
                let coeff = -(rat(twice_r, 2) - lambda * rint(n));
                if !coeff.is_zero() {
                    let term = self.apply_normal_bilinear(twice_x, twice_r, state)?;
                    out = out.add(&term.scale(&coeff));
                }
            }
            twice_r += 2;
        }
        Ok(out)
    }

    /// `([L_m, f_r] - ((1-lambda) m + r) f_{m+r}) psi`.
    pub fn field_relation_defect(
        &self,
        m: i64,
        twice_r: i64,
        lambda: &Rational,
        state: &FermionState,
    ) -> Result<FermionState> {
        let comm = self
            .apply_l(m, lambda, &self.apply_f(twice_r, state)?)?
            .sub(&self.apply_f(twice_r, &self.apply_l(m, lambda, state)?)?);
        let coeff = (rint(1) - lambda) * rint(m) + rat(twice_r, 2);
        let rhs = self.apply_f(2 * m + twice_r, state)?.scale(&coeff);
        Ok(comm.sub(&rhs))
    }

    /// `([L_m, f_r^+] - (lambda m + r) f^+_{m+r}) psi`.
    pub fn conjugate_relation_defect(
        &self,
        m: i64,
        twice_r: i64,
        lambda: &Rational,
        state: &FermionState,
    ) -> Result<FermionState> {
        let comm = self
            .apply_l(m, lambda, &self.apply_f_dag(twice_r, state)?)?
            .sub(&self.apply_f_dag(twice_r, &self.apply_l(m, lambda, state)?)?);
        let coeff = lambda * rint(m) + rat(twice_r, 2);
        let rhs = self.apply_f_dag(2 * m + twice_r, state)?.scale(&coeff);
        Ok(comm.sub(&rhs))
    }
}

/// A deterministic family of small test states reaching modes up to
/// `max_mode` in magnitude: the vacuum, single excitations of both kinds,
/// and a few double excitations.
pub fn boson_probe_states(modes: &BosonModes, max_mode: i64) -> Result<Vec<BosonState>> {
    let vac = BosonState::vacuum();
    let mut out = vec![vac.clone()];
    for m in 1..=max_mode {
        out.push(modes.apply_a(-m, &vac)?);
        out.push(modes.apply_a_dag(-m, &vac)?);
    }
    out.push(modes.apply_a(0, &vac)?);
    let x1 = modes.apply_a(-1, &vac)?;
    out.push(modes.apply_a(-1, &x1)?);
    out.push(modes.apply_a_dag(-2, &x1)?);
    let y1 = modes.apply_a_dag(-1, &vac)?;
    out.push(modes.apply_a_dag(-1, &y1)?);
    Ok(out)
}

/// Fermionic analogue of [`boson_probe_states`].
pub fn fermion_probe_states(modes: &FermionModes, max_mode: i64) -> Result<Vec<FermionState>> {
    let vac = FermionState::vacuum();
    let mut out = vec![vac.clone()];
    for m in 0..max_mode {
        out.push(modes.apply_f(-(2 * m + 1), &vac)?);
        out.push(modes.apply_f_dag(-(2 * m + 1), &vac)?);
    }
    let f1 = modes.apply_f(-1, &vac)?;
    out.push(modes.apply_f(-3, &f1)?);
    out.push(modes.apply_f_dag(-1, &f1)?);
    let g = modes.apply_f_dag(-3, &f1)?;
    out.push(modes.apply_f(-5, &g)?);
    Ok(out)
}
