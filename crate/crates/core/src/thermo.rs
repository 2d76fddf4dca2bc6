//! Species and mixture thermodynamics from NASA-7 polynomials, plus
//! equilibrium constants for reverse-rate synthesis.
//!
//! All mixture quantities are per unit mass (J/kg, J/(kg·K)); species
//! polynomial evaluations are dimensionless (cp/R, h/RT, s/R). Outside a
//! species' fitted range the polynomials are continued by linear
//! extrapolation of cp with consistent h and s — transient solves briefly
//! visit out-of-range temperatures and a hard failure would abort valid
//! runs. The first such excursion per process logs a warning.

use std::sync::atomic::{AtomicBool, Ordering};

use crate::constants::{GAS_CONSTANT, P_REF};
use crate::error::{CombustionError, Result};
use crate::mechanism::{Mechanism, Reaction, Reversibility};

static OUT_OF_RANGE_WARNED: AtomicBool = AtomicBool::new(false);

fn warn_out_of_range(t: f64) {
    if !OUT_OF_RANGE_WARNED.swap(true, Ordering::Relaxed) {
        log::warn!(
            "thermo polynomial evaluated outside its fitted range (T = {t:.1} K); \
             continuing with linear-cp extrapolation"
        );
    }
}

/// Two-range NASA-7 polynomial set for one species.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermoPoly {
    pub t_low: f64,
    pub t_mid: f64,
    pub t_high: f64,
    pub coeffs_low: [f64; 7],
    pub coeffs_high: [f64; 7],
}

fn cp_r_raw(a: &[f64; 7], t: f64) -> f64 {
    a[0] + t * (a[1] + t * (a[2] + t * (a[3] + t * a[4])))
}

fn h_rt_raw(a: &[f64; 7], t: f64) -> f64 {
    a[0] + t * (a[1] / 2.0 + t * (a[2] / 3.0 + t * (a[3] / 4.0 + t * a[4] / 5.0))) + a[5] / t
}

fn s_r_raw(a: &[f64; 7], t: f64) -> f64 {
    a[0] * t.ln() + t * (a[1] + t * (a[2] / 2.0 + t * (a[3] / 3.0 + t * a[4] / 4.0))) + a[6]
}

fn dcp_r_dt_raw(a: &[f64; 7], t: f64) -> f64 {
    a[1] + t * (2.0 * a[2] + t * (3.0 * a[3] + t * 4.0 * a[4]))
}

impl ThermoPoly {
    /// Validates range ordering and cp/R continuity at `t_mid` (1e-4 relative).
    pub fn new(
        t_low: f64,
        t_mid: f64,
        t_high: f64,
        coeffs_low: [f64; 7],
        coeffs_high: [f64; 7],
    ) -> Result<Self> {
        if !(t_low < t_mid && t_mid < t_high) {
            return Err(CombustionError::InvalidInput(format!(
                "thermo ranges must satisfy T_low < T_mid < T_high (got {t_low}, {t_mid}, {t_high})"
            )));
        }
        let lo = cp_r_raw(&coeffs_low, t_mid);
        let hi = cp_r_raw(&coeffs_high, t_mid);
        if (lo - hi).abs() > 1e-4 * hi.abs().max(1.0) {
            return Err(CombustionError::InvalidInput(format!(
                "cp/R discontinuous at T_mid = {t_mid} K ({lo} vs {hi})"
            )));
        }
        Ok(ThermoPoly {
            t_low,
            t_mid,
            t_high,
            coeffs_low,
            coeffs_high,
        })
    }

    fn branch(&self, t: f64) -> &[f64; 7] {
        if t < self.t_mid {
            &self.coeffs_low
        } else {
            &self.coeffs_high
        }
    }

    /// cp/R. Non-finite `t` propagates as NaN.
    pub fn cp_r(&self, t: f64) -> f64 {
        if t < self.t_low {
            warn_out_of_range(t);
            let a = &self.coeffs_low;
            let (t0, cp0) = (self.t_low, cp_r_raw(a, self.t_low));
            return cp0 + dcp_r_dt_raw(a, t0) * (t - t0);
        }
        if t > self.t_high {
            warn_out_of_range(t);
            let a = &self.coeffs_high;
            let (t0, cp0) = (self.t_high, cp_r_raw(a, self.t_high));
            return cp0 + dcp_r_dt_raw(a, t0) * (t - t0);
        }
        cp_r_raw(self.branch(t), t)
    }

    /// h/(R·T), consistent with `cp_r` by integration.
    pub fn h_rt(&self, t: f64) -> f64 {
        if t < self.t_low || t > self.t_high {
            warn_out_of_range(t);
            let (t0, a) = if t < self.t_low {
                (self.t_low, &self.coeffs_low)
            } else {
                (self.t_high, &self.coeffs_high)
            };
            let cp0 = cp_r_raw(a, t0);
            let slope = dcp_r_dt_raw(a, t0);
            let h0_r = h_rt_raw(a, t0) * t0;
            let dt = t - t0;
            let h_r = h0_r + cp0 * dt + 0.5 * slope * dt * dt;
            return h_r / t;
        }
        h_rt_raw(self.branch(t), t)
    }

    /// s/R, consistent with `cp_r` by integration of cp/T.
    pub fn s_r(&self, t: f64) -> f64 {
        if t < self.t_low || t > self.t_high {
            warn_out_of_range(t);
            let (t0, a) = if t < self.t_low {
                (self.t_low, &self.coeffs_low)
            } else {
                (self.t_high, &self.coeffs_high)
            };
            let cp0 = cp_r_raw(a, t0);
            let slope = dcp_r_dt_raw(a, t0);
            let ratio = (t / t0).ln();
            return s_r_raw(a, t0) + (cp0 - slope * t0) * ratio + slope * (t - t0);
        }
        s_r_raw(self.branch(t), t)
    }

    /// g/(R·T) = h/RT − s/R.
    pub fn g_rt(&self, t: f64) -> f64 {
        self.h_rt(t) - self.s_r(t)
    }
}

/// Thermodynamic state of a homogeneous parcel.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermoState {
    /// K.
    pub temperature: f64,
    /// kg/m³.
    pub density: f64,
    /// One per mechanism species; sums to 1.
    pub mass_fractions: Vec<f64>,
}

impl ThermoState {
    pub fn new(temperature: f64, density: f64, mass_fractions: Vec<f64>) -> Result<Self> {
        if !(temperature > 0.0) || !temperature.is_finite() {
            return Err(CombustionError::InvalidInput(format!(
                "temperature must be positive and finite (got {temperature})"
            )));
        }
        if !(density > 0.0) || !density.is_finite() {
            return Err(CombustionError::InvalidInput(format!(
                "density must be positive and finite (got {density})"
            )));
        }
        let mut sum = 0.0;
        for (i, &w) in mass_fractions.iter().enumerate() {
            if !(-1e-12..=1.0 + 1e-12).contains(&w) {
                return Err(CombustionError::InvalidInput(format!(
                    "mass fraction {i} out of range: {w}"
                )));
            }
            sum += w;
        }
        if (sum - 1.0).abs() > 1e-9 {
            return Err(CombustionError::InvalidInput(format!(
                "mass fractions sum to {sum}, expected 1"
            )));
        }
        Ok(ThermoState {
            temperature,
            density,
            mass_fractions,
        })
    }

    /// Ideal-gas pressure of this state, Pa.
    pub fn pressure(&self, mech: &Mechanism) -> f64 {
        let w_mix = mean_molar_mass_kg(mech, &self.mass_fractions);
        self.density * GAS_CONSTANT * self.temperature / w_mix
    }

    /// State from (T, P, mole fractions) with density from the ideal-gas law.
    pub fn from_pressure_mole_fractions(
        mech: &Mechanism,
        temperature: f64,
        pressure: f64,
        mole_fractions: &[f64],
    ) -> Result<Self> {
        if mole_fractions.len() != mech.n_species() {
            return Err(CombustionError::InvalidInput(
                "mole fraction vector length mismatch".into(),
            ));
        }
        let w_mix: f64 = mole_fractions
            .iter()
            .zip(mech.molar_masses_kg())
            .map(|(x, wk)| x * wk)
            .sum();
        let mass_fractions: Vec<f64> = mole_fractions
            .iter()
            .zip(mech.molar_masses_kg())
            .map(|(x, wk)| x * wk / w_mix)
            .collect();
        let density = pressure * w_mix / (GAS_CONSTANT * temperature);
        ThermoState::new(temperature, density, mass_fractions)
    }
}

/// Mixture mean molar mass, kg/mol: 1/Σ(w_i/W_i).
pub fn mean_molar_mass_kg(mech: &Mechanism, w: &[f64]) -> f64 {
    let inv: f64 = w
        .iter()
        .zip(mech.molar_masses_kg())
        .map(|(wi, wk)| wi / wk)
        .sum();
    1.0 / inv
}

/// Mole fractions from mass fractions.
pub fn mole_fractions_into(mech: &Mechanism, w: &[f64], out: &mut [f64]) {
    let w_mix = mean_molar_mass_kg(mech, w);
    for ((xi, wi), wk) in out.iter_mut().zip(w).zip(mech.molar_masses_kg()) {
        *xi = wi * w_mix / wk;
    }
}

/// Molar concentrations c_i = ρ·w_i/W_i, mol/m³.
pub fn concentrations_into(mech: &Mechanism, density: f64, w: &[f64], out: &mut [f64]) {
    for ((ci, wi), wk) in out.iter_mut().zip(w).zip(mech.molar_masses_kg()) {
        *ci = density * wi / wk;
    }
}

/// Mixture specific heat at constant pressure, J/(kg·K), from (T, w).
pub fn mixture_cp_tw(mech: &Mechanism, t: f64, w: &[f64]) -> f64 {
    let mut cp = 0.0;
    for (i, s) in mech.species.iter().enumerate() {
        cp += w[i] * s.thermo.cp_r(t) * GAS_CONSTANT / mech.molar_mass_kg(i);
    }
    cp
}

/// Mixture specific heat at constant volume, J/(kg·K): cp − R/W_mix.
pub fn mixture_cv_tw(mech: &Mechanism, t: f64, w: &[f64]) -> f64 {
    mixture_cp_tw(mech, t, w) - GAS_CONSTANT / mean_molar_mass_kg(mech, w)
}

/// Mixture specific enthalpy, J/kg, from (T, w).
pub fn mixture_h_tw(mech: &Mechanism, t: f64, w: &[f64]) -> f64 {
    let mut h = 0.0;
    for (i, s) in mech.species.iter().enumerate() {
        h += w[i] * s.thermo.h_rt(t) * GAS_CONSTANT * t / mech.molar_mass_kg(i);
    }
    h
}

/// Mixture specific internal energy, J/kg: h − R·T/W_mix.
pub fn mixture_u_tw(mech: &Mechanism, t: f64, w: &[f64]) -> f64 {
    mixture_h_tw(mech, t, w) - GAS_CONSTANT * t / mean_molar_mass_kg(mech, w)
}

/// Mass-fraction-weighted mixture enthalpy of a state, J/kg.
pub fn mixture_h(state: &ThermoState, mech: &Mechanism) -> f64 {
    mixture_h_tw(mech, state.temperature, &state.mass_fractions)
}

/// Mixture internal energy of a state, J/kg.
pub fn mixture_u(state: &ThermoState, mech: &Mechanism) -> f64 {
    mixture_u_tw(mech, state.temperature, &state.mass_fractions)
}

/// Mixture cp of a state, J/(kg·K).
pub fn mixture_cp(state: &ThermoState, mech: &Mechanism) -> f64 {
    mixture_cp_tw(mech, state.temperature, &state.mass_fractions)
}

/// Mixture cv of a state, J/(kg·K).
pub fn mixture_cv(state: &ThermoState, mech: &Mechanism) -> f64 {
    mixture_cv_tw(mech, state.temperature, &state.mass_fractions)
}

/// Per-species h/(RT) into a caller buffer.
pub fn species_h_rt_into(mech: &Mechanism, t: f64, out: &mut [f64]) {
    for (o, s) in out.iter_mut().zip(&mech.species) {
        *o = s.thermo.h_rt(t);
    }
}

/// Per-species g/(RT) into a caller buffer.
pub fn species_g_rt_into(mech: &Mechanism, t: f64, out: &mut [f64]) {
    for (o, s) in out.iter_mut().zip(&mech.species) {
        *o = s.thermo.g_rt(t);
    }
}

fn check_t_in_union(mech: &Mechanism, t: f64) -> Result<()> {
    let lo = mech
        .species
        .iter()
        .map(|s| s.thermo.t_low)
        .fold(f64::INFINITY, f64::min);
    let hi = mech
        .species
        .iter()
        .map(|s| s.thermo.t_high)
        .fold(f64::NEG_INFINITY, f64::max);
    if !t.is_finite() || t < lo || t > hi {
        return Err(CombustionError::InvalidInput(format!(
            "T = {t} K outside every species' polynomial range [{lo}, {hi}]"
        )));
    }
    Ok(())
}

/// Pressure-based equilibrium constant Kp = exp(−ΔG°/RT), dimensionless
/// (referenced to P° = 101325 Pa).
pub fn equilibrium_kp(rxn: &Reaction, t: f64, mech: &Mechanism) -> f64 {
    let mut dg_rt = 0.0;
    for &(i, c) in &rxn.products {
        dg_rt += c as f64 * mech.species[i].thermo.g_rt(t);
    }
    for &(i, c) in &rxn.reactants {
        dg_rt -= c as f64 * mech.species[i].thermo.g_rt(t);
    }
    (-dg_rt).exp()
}

/// Concentration-based equilibrium constant Kc = Kp·(P°/(R·T))^Δν,
/// in (mol/m³)^Δν.
pub fn equilibrium_kc(rxn: &Reaction, t: f64, mech: &Mechanism) -> Result<f64> {
    check_t_in_union(mech, t)?;
    Ok(equilibrium_kc_unchecked(rxn, t, mech))
}

/// `equilibrium_kc` without the range check, for solver hot paths.
pub fn equilibrium_kc_unchecked(rxn: &Reaction, t: f64, mech: &Mechanism) -> f64 {
    let kp = equilibrium_kp(rxn, t, mech);
    let c_ref = P_REF / (GAS_CONSTANT * t);
    kp * c_ref.powi(rxn.delta_nu())
}

/// Solve u(T, w) = u for T by Newton iteration with a bisection fallback.
pub fn temperature_from_internal_energy(
    mech: &Mechanism,
    w: &[f64],
    u: f64,
    t_guess: f64,
) -> Result<f64> {
    invert_scalar(
        |t| mixture_u_tw(mech, t, w),
        |t| mixture_cv_tw(mech, t, w),
        u,
        t_guess,
    )
}

/// Solve h(T, w) = h for T.
pub fn temperature_from_enthalpy(mech: &Mechanism, w: &[f64], h: f64, t_guess: f64) -> Result<f64> {
    invert_scalar(
        |t| mixture_h_tw(mech, t, w),
        |t| mixture_cp_tw(mech, t, w),
        h,
        t_guess,
    )
}

fn invert_scalar(
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
    target: f64,
    t_guess: f64,
) -> Result<f64> {
    let mut t = t_guess.clamp(50.0, 1.0e4);
    for _ in 0..100 {
        let res = f(t) - target;
        let slope = df(t);
        let dt = -res / slope;
        let dt = dt.clamp(-0.5 * t, 0.5 * t);
        t += dt;
        if dt.abs() < 1e-10 * t + 1e-9 {
            if t.is_finite() && t > 0.0 {
                return Ok(t);
            }
            break;
        }
    }
    // Bisection fallback over a wide bracket; f is monotone in T.
    let (mut lo, mut hi) = (20.0, 2.0e4);
    if f(lo) - target > 0.0 || f(hi) - target < 0.0 {
        return Err(CombustionError::NonFinite {
            context: "temperature inversion".into(),
            detail: format!("target {target} outside bracket at guess {t_guess}"),
        });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) - target < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-9 * hi {
            return Ok(0.5 * (lo + hi));
        }
    }
    Ok(0.5 * (lo + hi))
}
