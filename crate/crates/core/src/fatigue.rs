//! The fatigue functional: power densities, trapezoidal accumulation, the
//! elastic closed form, and the temperature-weighted variant.

use crate::error::{Result, SimError};
use crate::field_ops::node_gradient;
use crate::grid::Grid1D;
use crate::material::MaterialParams;
use crate::parallel::map_indexed;
use crate::potentials::clamp_phase;
use crate::state::FieldState;

/// Isothermal fatigue power density, node-wise:
/// p = (1 - phi_clamped) * a * u_x * v_x.
pub fn mech_power_density(state: &FieldState, params: &MaterialParams, grid: &Grid1D) -> Vec<f64> {
    let h = grid.spacing();
    let ux = node_gradient(&state.u, h);
    let vx = node_gradient(&state.v, h);
    let a = MaterialParams::node_values(&params.a);
    map_indexed(state.n_nodes(), |i| {
        (1.0 - clamp_phase(state.phi[i])) * a[i] * ux[i] * vx[i]
    })
}

/// Trapezoidal step of the fatigue accumulator:
/// fatigue_new = fatigue_old + dt * (p_old + p_new) / 2.
pub fn advance_fatigue(
    fatigue: &[f64],
    p_old: &[f64],
    p_new: &[f64],
    dt: f64,
) -> Result<Vec<f64>> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(SimError::InvalidArgument(format!(
            "fatigue step needs dt > 0, got {dt}"
        )));
    }
    if p_old.len() != fatigue.len() || p_new.len() != fatigue.len() {
        return Err(SimError::InvalidArgument(
            "fatigue increment fields must match the accumulator length".into(),
        ));
    }
    Ok(map_indexed(fatigue.len(), |i| {
        fatigue[i] + 0.5 * dt * (p_old[i] + p_new[i])
    }))
}

/// Step of the strain-history accumulator over one interval:
/// hist_new = hist_old + (phi_clamped_new - phi_clamped_old) * (e_old + e_new) / 2,
/// where e = a * u_x^2. The clamped-phase increment and the trapezoid of e
/// make the closed-form identity below exact at quadrature order.
pub fn advance_history(
    hist: &[f64],
    phi_old: &[f64],
    phi_new: &[f64],
    e_old: &[f64],
    e_new: &[f64],
) -> Vec<f64> {
    map_indexed(hist.len(), |i| {
        let dphi = clamp_phase(phi_new[i]) - clamp_phase(phi_old[i]);
        hist[i] + dphi * 0.5 * (e_old[i] + e_new[i])
    })
}

/// Strain energy density field e = a * u_x^2 (node-wise).
pub fn strain_energy_density(
    state: &FieldState,
    params: &MaterialParams,
    grid: &Grid1D,
) -> Vec<f64> {
    let ux = node_gradient(&state.u, grid.spacing());
    let a = MaterialParams::node_values(&params.a);
    map_indexed(state.n_nodes(), |i| a[i] * ux[i] * ux[i])
}

/// Closed form of the elastic fatigue from a virgin start:
/// (1/2) (1 - phi_clamped) a u_x^2 + (1/2) hist_h.
pub fn fatigue_elastic_closed_form(
    state: &FieldState,
    params: &MaterialParams,
    grid: &Grid1D,
) -> Vec<f64> {
    let e = strain_energy_density(state, params, grid);
    map_indexed(state.n_nodes(), |i| {
        0.5 * (1.0 - clamp_phase(state.phi[i])) * e[i] + 0.5 * state.hist_h[i]
    })
}

/// Heat-flux part of the thermal fatigue integrand:
/// (1 - phi_clamped) * k_q * theta_x^2 / theta^2. Nonnegative by construction
/// under the Fourier law.
pub fn heat_flux_fatigue_density(
    state: &FieldState,
    params: &MaterialParams,
    grid: &Grid1D,
) -> Result<Vec<f64>> {
    let thermal = params.thermal.as_ref().ok_or_else(|| {
        SimError::InvalidArgument("thermal fatigue requires thermal parameters".into())
    })?;
    let theta = state.theta.as_ref().ok_or_else(|| {
        SimError::InvalidArgument("thermal fatigue requires a temperature field".into())
    })?;
    if theta.iter().any(|&v| v <= 0.0) {
        return Err(SimError::SingularTemperature { time: state.t });
    }
    let tx = node_gradient(theta, grid.spacing());
    let k_q = thermal.k_q;
    Ok(map_indexed(state.n_nodes(), |i| {
        (1.0 - clamp_phase(state.phi[i])) * k_q * tx[i] * tx[i] / (theta[i] * theta[i])
    }))
}

/// Temperature-weighted fatigue power density:
/// (1 - phi_clamped) * [a u_x v_x / theta + k_q theta_x^2 / theta^2].
pub fn thermal_fatigue_density(
    state: &FieldState,
    params: &MaterialParams,
    grid: &Grid1D,
) -> Result<Vec<f64>> {
    let theta = state.theta.as_ref().ok_or_else(|| {
        SimError::InvalidArgument("thermal fatigue requires a temperature field".into())
    })?;
    if theta.iter().any(|&v| v <= 0.0) {
        return Err(SimError::SingularTemperature { time: state.t });
    }
    let mech = mech_power_density(state, params, grid);
    let flux = heat_flux_fatigue_density(state, params, grid)?;
    Ok(map_indexed(state.n_nodes(), |i| {
        mech[i] / theta[i] + flux[i]
    }))
}
