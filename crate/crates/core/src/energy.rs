//! Thermodynamic bookkeeping: internal powers, pseudo fatigue energy, the
//! elastic free energy, the discrete dissipation residual, and the
//! homogeneous energy landscape.
//!
//! Audit convention: every time derivative is taken from trajectory state
//! differences (backward/interval differences), never from the solver's
//! internal rate fields, so the audit is an independent check of the scheme.
//! Energies are reported as domain integrals of the densities (the per-mass
//! 1/rho prefactor is dropped so powers and energy rates compose directly).

use crate::field_ops::{face_gradient_energy, node_gradient, trapz};
use crate::grid::Grid1D;
use crate::material::MaterialParams;
use crate::potentials::{clamp_phase, potential_f, potential_g};
use crate::state::FieldState;

fn grad_energy_weights(params: &MaterialParams) -> Vec<f64> {
    params.kappa.iter().map(|&k| 1.0 / (2.0 * k)).collect()
}

/// Internal mechanical power at one state:
/// integral of (1 - phi_c) a u_x v_x - phi_c * dF/dt.
pub fn internal_mechanical_power(
    state: &FieldState,
    params: &MaterialParams,
    grid: &Grid1D,
    d_fatigue_dt: &[f64],
) -> f64 {
    let h = grid.spacing();
    let ux = node_gradient(&state.u, h);
    let vx = node_gradient(&state.v, h);
    let a = MaterialParams::node_values(&params.a);
    let integrand: Vec<f64> = (0..state.n_nodes())
        .map(|i| {
            let pc = clamp_phase(state.phi[i]);
            (1.0 - pc) * a[i] * ux[i] * vx[i] - pc * d_fatigue_dt[i]
        })
        .collect();
    trapz(&integrand, h)
}

/// Internal structural power over [t_n, t_n+1]:
/// integral of rho*phidot^2 + d/dt[(1/2kappa) phi_x^2] + F0*Gdot + fatigue*Fdot,
/// all rates as discrete interval differences. `fatigue` is the field paired
/// with the interval (the runner passes the midpoint average).
pub fn internal_structural_power(
    prev: &FieldState,
    cur: &FieldState,
    params: &MaterialParams,
    grid: &Grid1D,
    fatigue: &[f64],
    dt: f64,
) -> f64 {
    let h = grid.spacing();
    let rho = MaterialParams::node_values(&params.rho);
    let f0 = MaterialParams::node_values(&params.f0);
    let nodal: Vec<f64> = (0..cur.n_nodes())
        .map(|i| {
            let phidot = (cur.phi[i] - prev.phi[i]) / dt;
            let g_rate = (potential_g(cur.phi[i]) - potential_g(prev.phi[i])) / dt;
            let f_rate = (potential_f(cur.phi[i]) - potential_f(prev.phi[i])) / dt;
            rho[i] * phidot * phidot + f0[i] * g_rate + fatigue[i] * f_rate
        })
        .collect();
    let w = grad_energy_weights(params);
    let grad_rate =
        (face_gradient_energy(&cur.phi, &w, h) - face_gradient_energy(&prev.phi, &w, h)) / dt;
    trapz(&nodal, h) + grad_rate
}

/// Pseudo fatigue energy: domain integral of
/// (1/2kappa) phi_x^2 + F0 G(phi) + fatigue * F(phi).
pub fn pseudo_fatigue_energy(state: &FieldState, params: &MaterialParams, grid: &Grid1D) -> f64 {
    let h = grid.spacing();
    let f0 = MaterialParams::node_values(&params.f0);
    let nodal: Vec<f64> = (0..state.n_nodes())
        .map(|i| f0[i] * potential_g(state.phi[i]) + state.fatigue[i] * potential_f(state.phi[i]))
        .collect();
    let w = grad_energy_weights(params);
    trapz(&nodal, h) + face_gradient_energy(&state.phi, &w, h)
}

/// Elastic free energy from a virgin start: domain integral of
/// (1/2) { (1 - phi_c + phi_c^2) a u_x^2 - phi_c * hist_h
///         + (1/kappa) phi_x^2 + 2 F0 G(phi) }.
pub fn elastic_free_energy(state: &FieldState, params: &MaterialParams, grid: &Grid1D) -> f64 {
    let h = grid.spacing();
    let ux = node_gradient(&state.u, h);
    let a = MaterialParams::node_values(&params.a);
    let f0 = MaterialParams::node_values(&params.f0);
    let nodal: Vec<f64> = (0..state.n_nodes())
        .map(|i| {
            let pc = clamp_phase(state.phi[i]);
            0.5 * ((1.0 - pc + pc * pc) * a[i] * ux[i] * ux[i] - pc * state.hist_h[i]
                + 2.0 * f0[i] * potential_g(state.phi[i]))
        })
        .collect();
    // the gradient term carries 1/2 * (1/kappa) = the same face weights
    let w = grad_energy_weights(params);
    trapz(&nodal, h) + face_gradient_energy(&state.phi, &w, h)
}

/// Kinetic energy (1/2) integral of rho v^2.
pub fn kinetic_energy(state: &FieldState, params: &MaterialParams, grid: &Grid1D) -> f64 {
    let rho = MaterialParams::node_values(&params.rho);
    let nodal: Vec<f64> = (0..state.n_nodes())
        .map(|i| 0.5 * rho[i] * state.v[i] * state.v[i])
        .collect();
    trapz(&nodal, grid.spacing())
}

/// One step's energy bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport {
    pub t: f64,
    pub psi: f64,
    pub psi_f: f64,
    pub p_m: f64,
    pub p_s: f64,
    /// p_m + p_s - d(psi)/dt; the discrete dissipation statement requires
    /// this to stay above -tolerance.
    pub dissipation_residual: f64,
}

/// Worst-case (most negative) residual over a report stream.
pub fn worst_dissipation_residual(reports: &[EnergyReport]) -> f64 {
    reports
        .iter()
        .fold(f64::INFINITY, |m, r| m.min(r.dissipation_residual))
}

/// Homogeneous energy landscape F0*G(phi) + fatigue*F(phi) sampled on
/// [-0.2, 1.2]; the flat clamped branches are visible beyond [0, 1].
pub fn energy_landscape(f0: f64, fatigue: f64, samples: usize) -> Vec<(f64, f64)> {
    assert!(samples >= 2, "landscape needs at least 2 samples");
    let (lo, hi) = (-0.2, 1.2);
    (0..samples)
        .map(|k| {
            let s = k as f64 / (samples - 1) as f64;
            let phi = lo * (1.0 - s) + hi * s;
            (phi, f0 * potential_g(phi) + fatigue * potential_f(phi))
        })
        .collect()
}

/// Argmin of a sampled landscape. Exact ties (the flat clamped branches)
/// resolve to the sample closest to [0, 1], so a tie across phi <= 0 reports
/// 0 and a tie across phi >= 1 reports 1.
pub fn landscape_argmin(curve: &[(f64, f64)]) -> f64 {
    let mut best = curve[0];
    let mut best_dist = (best.0 - clamp_phase(best.0)).abs();
    for &(phi, val) in &curve[1..] {
        let dist = (phi - clamp_phase(phi)).abs();
        if val < best.1 || (val == best.1 && dist < best_dist) {
            best = (phi, val);
            best_dist = dist;
        }
    }
    best.0
}
