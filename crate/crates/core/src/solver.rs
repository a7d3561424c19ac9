//! Time integration of the coupled phase / momentum (/ heat) system.
//!
//! Scheme: velocity-Verlet for the momentum equation with conservative face
//! stresses; explicit (or diffusion-implicit) stepping for the phase
//! equation with the clamped reaction terms frozen at the step start;
//! trapezoidal accumulation of fatigue and of the strain-history integral
//! with endpoints sampled at consistent step boundaries. Per-step order:
//! complete the fatigue integral to t_n, step the phase with the fresh
//! fatigue, then momentum (which sees the updated clamped phase), then heat.
//!
//! The phase is never clamped in storage; only its clamp enters stresses and
//! reactions, so a bound violation of the scheme stays visible.

use crate::energy::{
    elastic_free_energy, internal_mechanical_power, internal_structural_power, kinetic_energy,
    pseudo_fatigue_energy,
};
use crate::error::{Result, SimError};
use crate::fatigue::{
    advance_fatigue, advance_history, mech_power_density, strain_energy_density,
    thermal_fatigue_density,
};
use crate::field_ops::all_finite;
use crate::grid::Grid1D;
use crate::load::LoadProgram;
use crate::material::MaterialParams;
use crate::parallel::map_indexed;
use crate::potentials::{clamp_phase, d_f, d_g, potential_f};
use crate::state::{validate, FieldState};
use crate::trajectory::{FieldHistory, Sample, Trajectory};

/// How the phase diffusion term is treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseScheme {
    /// Fully explicit; bounded-overshoot maximum principle (O(dt)).
    Explicit,
    /// Tridiagonal implicit diffusion; reactions explicit with bound-crossing
    /// capping, preserving [0, 1] to solver precision at any dt.
    SemiImplicitDiffusion,
}

/// Step controls. `fatigue_scale` multiplies the accumulated fatigue
/// increment (1.0 for the physical model; used by consistency checks),
/// `freeze_phase` pins the phase field for pure-elastic runs.
#[derive(Debug, Clone, PartialEq)]
pub struct StepControls {
    pub dt: f64,
    pub t_end: f64,
    pub cfl_safety: f64,
    pub phase_scheme: PhaseScheme,
    pub sample_every: usize,
    pub probe_node: usize,
    pub freeze_phase: bool,
    pub fatigue_scale: f64,
    pub record_fields: bool,
}

impl StepControls {
    pub fn new(dt: f64, t_end: f64) -> Self {
        Self {
            dt,
            t_end,
            cfl_safety: 0.5,
            phase_scheme: PhaseScheme::Explicit,
            sample_every: 1,
            probe_node: 0,
            freeze_phase: false,
            fatigue_scale: 1.0,
            record_fields: false,
        }
    }
}

/// Largest stable explicit step: min over cells of the phase-diffusion limit
/// rho*kappa*h^2/2, the elastic wave limit h*sqrt(rho/a), and (thermal mode,
/// conducting) the heat limit rho*c*h^2/(2 k_q).
pub fn stable_dt(params: &MaterialParams, grid: &Grid1D) -> f64 {
    let h = grid.spacing();
    let mut dt = f64::INFINITY;
    for j in 0..grid.n_cells() {
        dt = dt.min(0.5 * params.rho[j] * params.kappa[j] * h * h);
        dt = dt.min(h * (params.rho[j] / params.a[j]).sqrt());
        if let Some(th) = &params.thermal {
            if th.k_q > 0.0 {
                dt = dt.min(0.5 * params.rho[j] * th.c * h * h / th.k_q);
            }
        }
    }
    dt
}

/// Face stresses sigma_j = (1 - phi_c_face)^2 a_j (u_{j+1}-u_j)/h, plus the
/// thermal part varkappa * theta_face in thermal mode. One value per cell.
fn face_stress(
    u: &[f64],
    phi: &[f64],
    theta: Option<&[f64]>,
    params: &MaterialParams,
    grid: &Grid1D,
) -> Vec<f64> {
    let h = grid.spacing();
    let varkappa = params.thermal.as_ref().map(|t| t.varkappa).unwrap_or(0.0);
    map_indexed(grid.n_cells(), |j| {
        let pc = 0.5 * (clamp_phase(phi[j]) + clamp_phase(phi[j + 1]));
        let damage = (1.0 - pc) * (1.0 - pc);
        let mut s = damage * params.a[j] * (u[j + 1] - u[j]) / h;
        if let Some(th) = theta {
            s += varkappa * 0.5 * (th[j] + th[j + 1]);
        }
        s
    })
}

fn acceleration(
    u: &[f64],
    phi: &[f64],
    theta: Option<&[f64]>,
    params: &MaterialParams,
    grid: &Grid1D,
    rho_nodes: &[f64],
    shape: &[f64],
    load: &LoadProgram,
    t: f64,
) -> Vec<f64> {
    let h = grid.spacing();
    let n = grid.n_nodes();
    let sigma = face_stress(u, phi, theta, params, grid);
    let bt = load.amplitude * (load.omega * t).sin();
    map_indexed(n, |i| {
        if i == 0 || i == n - 1 {
            0.0 // pinned boundary
        } else {
            (sigma[i] - sigma[i - 1]) / (h * rho_nodes[i]) + shape[i] * bt
        }
    })
}

/// Velocity-Verlet update of (u, v) with the clamped phase and temperature
/// held fixed across the step. Pure: returns the advanced state.
pub fn step_momentum(
    state: &FieldState,
    params: &MaterialParams,
    grid: &Grid1D,
    load: &LoadProgram,
    dt: f64,
) -> Result<FieldState> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(SimError::InvalidArgument(format!(
            "momentum step needs dt > 0, got {dt}"
        )));
    }
    let rho_nodes = MaterialParams::node_values(&params.rho);
    let shape = load.shape_on_nodes(grid);
    let mut out = state.clone();
    step_momentum_in_place(&mut out, params, grid, &rho_nodes, &shape, load, dt);
    if !(all_finite(&out.u) && all_finite(&out.v)) {
        return Err(SimError::Divergence { time: out.t });
    }
    Ok(out)
}

fn step_momentum_in_place(
    state: &mut FieldState,
    params: &MaterialParams,
    grid: &Grid1D,
    rho_nodes: &[f64],
    shape: &[f64],
    load: &LoadProgram,
    dt: f64,
) {
    let n = grid.n_nodes();
    let theta = state.theta.as_deref();
    let acc0 = acceleration(
        &state.u, &state.phi, theta, params, grid, rho_nodes, shape, load, state.t,
    );
    let u1 = map_indexed(n, |i| {
        state.u[i] + dt * state.v[i] + 0.5 * dt * dt * acc0[i]
    });
    let acc1 = acceleration(
        &u1,
        &state.phi,
        theta,
        params,
        grid,
        rho_nodes,
        shape,
        load,
        state.t + dt,
    );
    let v1 = map_indexed(n, |i| state.v[i] + 0.5 * dt * (acc0[i] + acc1[i]));
    state.u = u1;
    state.v = v1;
    state.t += dt;
}

/// FV Laplacian of phi with per-cell conductances and zero-flux ends.
fn phase_laplacian(phi: &[f64], conductance: &[f64], h: f64) -> Vec<f64> {
    let n = phi.len();
    let h2 = h * h;
    map_indexed(n, |i| {
        if i == 0 {
            2.0 * conductance[0] * (phi[1] - phi[0]) / h2
        } else if i == n - 1 {
            2.0 * conductance[n - 2] * (phi[n - 2] - phi[n - 1]) / h2
        } else {
            (conductance[i] * (phi[i + 1] - phi[i]) - conductance[i - 1] * (phi[i] - phi[i - 1]))
                / h2
        }
    })
}

/// Clamped reaction term: -F'(phi) * fatigue - F0 * G'(phi).
/// Both factors switch off outside [0, 1]; that switch is what bounds the
/// scheme.
#[inline]
fn phase_reaction(phi: f64, f0: f64, fatigue: f64) -> f64 {
    -d_f(phi) * fatigue - f0 * d_g(phi)
}

/// Advance the phase field one step using the stored nodal fatigue.
/// Explicit: plain forward Euler on diffusion + reactions. Semi-implicit:
/// reactions first with bound-crossing capping (the clamped reaction ODE
/// parks at a bound it would cross, since the outside reaction vanishes),
/// then an implicit tridiagonal diffusion solve, which is bound-preserving.
pub fn step_phase(
    state: &FieldState,
    params: &MaterialParams,
    grid: &Grid1D,
    dt: f64,
    scheme: PhaseScheme,
) -> Result<FieldState> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(SimError::InvalidArgument(format!(
            "phase step needs dt > 0, got {dt}"
        )));
    }
    let rho_nodes = MaterialParams::node_values(&params.rho);
    let f0_nodes = MaterialParams::node_values(&params.f0);
    let conductance: Vec<f64> = params.kappa.iter().map(|&k| 1.0 / k).collect();
    let mut out = state.clone();
    out.phi = advance_phase(
        &state.phi,
        &state.fatigue,
        &rho_nodes,
        &f0_nodes,
        &conductance,
        grid.spacing(),
        dt,
        scheme,
    );
    if !all_finite(&out.phi) {
        return Err(SimError::Divergence { time: state.t });
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn advance_phase(
    phi: &[f64],
    fatigue: &[f64],
    rho_nodes: &[f64],
    f0_nodes: &[f64],
    conductance: &[f64],
    h: f64,
    dt: f64,
    scheme: PhaseScheme,
) -> Vec<f64> {
    let n = phi.len();
    match scheme {
        PhaseScheme::Explicit => {
            let lap = phase_laplacian(phi, conductance, h);
            map_indexed(n, |i| {
                phi[i] + dt / rho_nodes[i] * (lap[i] + phase_reaction(phi[i], f0_nodes[i], fatigue[i]))
            })
        }
        PhaseScheme::SemiImplicitDiffusion => {
            let reacted = map_indexed(n, |i| {
                let p = phi[i];
                let star = p + dt / rho_nodes[i] * phase_reaction(p, f0_nodes[i], fatigue[i]);
                if (0.0..=1.0).contains(&p) {
                    star.clamp(0.0, 1.0)
                } else {
                    // reaction is zero outside [0, 1]
                    p
                }
            });
            solve_implicit_diffusion(&reacted, rho_nodes, conductance, h, dt)
        }
    }
}

/// Solve (I - dt/rho * L) phi_new = rhs with the zero-flux FV Laplacian L.
/// Tridiagonal M-matrix; Thomas algorithm.
fn solve_implicit_diffusion(
    rhs: &[f64],
    rho_nodes: &[f64],
    conductance: &[f64],
    h: f64,
    dt: f64,
) -> Vec<f64> {
    let n = rhs.len();
    let h2 = h * h;
    let mut lower = vec![0.0; n];
    let mut diag = vec![0.0; n];
    let mut upper = vec![0.0; n];
    for i in 0..n {
        let alpha = dt / (rho_nodes[i] * h2);
        if i == 0 {
            diag[0] = 1.0 + 2.0 * alpha * conductance[0];
            upper[0] = -2.0 * alpha * conductance[0];
        } else if i == n - 1 {
            diag[i] = 1.0 + 2.0 * alpha * conductance[n - 2];
            lower[i] = -2.0 * alpha * conductance[n - 2];
        } else {
            lower[i] = -alpha * conductance[i - 1];
            upper[i] = -alpha * conductance[i];
            diag[i] = 1.0 + alpha * (conductance[i - 1] + conductance[i]);
        }
    }
    // forward sweep
    let mut c_star = vec![0.0; n];
    let mut d_star = vec![0.0; n];
    c_star[0] = upper[0] / diag[0];
    d_star[0] = rhs[0] / diag[0];
    for i in 1..n {
        let m = diag[i] - lower[i] * c_star[i - 1];
        c_star[i] = upper[i] / m;
        d_star[i] = (rhs[i] - lower[i] * d_star[i - 1]) / m;
    }
    // back substitution
    let mut x = vec![0.0; n];
    x[n - 1] = d_star[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = d_star[i] - c_star[i] * x[i + 1];
    }
    x
}

/// Explicit heat step:
/// rho c theta_dot = k_q theta_xx + rho phidot^2 + fatigue * Fdot + rho r,
/// with zero-flux ends. `phi_prev` supplies the phase before this step's
/// phase update so the rates are discrete; Fdot is computed exactly as the
/// difference of F (clamp and derivative commute).
pub fn step_heat(
    state: &FieldState,
    phi_prev: &[f64],
    params: &MaterialParams,
    grid: &Grid1D,
    load: &LoadProgram,
    dt: f64,
) -> Result<FieldState> {
    let thermal = params
        .thermal
        .as_ref()
        .ok_or_else(|| SimError::InvalidArgument("heat step requires thermal parameters".into()))?;
    let theta = state
        .theta
        .as_ref()
        .ok_or_else(|| SimError::InvalidArgument("heat step requires a temperature field".into()))?;
    let rho_nodes = MaterialParams::node_values(&params.rho);
    let supply = load.heat_supply_on_nodes(grid);
    let mut out = state.clone();
    out.theta = Some(step_heat_in_place(
        theta, &state.phi, phi_prev, &state.fatigue, &rho_nodes, &supply, thermal.c, thermal.k_q,
        grid.spacing(), dt,
    ));
    if let Some(th) = &out.theta {
        if th.iter().any(|&v| !v.is_finite()) {
            return Err(SimError::Divergence { time: state.t + dt });
        }
        if th.iter().any(|&v| v <= 0.0) {
            return Err(SimError::SingularTemperature { time: state.t + dt });
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn step_heat_in_place(
    theta: &[f64],
    phi: &[f64],
    phi_prev: &[f64],
    fatigue: &[f64],
    rho_nodes: &[f64],
    supply: &[f64],
    c: f64,
    k_q: f64,
    h: f64,
    dt: f64,
) -> Vec<f64> {
    let n = theta.len();
    let h2 = h * h;
    map_indexed(n, |i| {
        let lap = if i == 0 {
            2.0 * (theta[1] - theta[0]) / h2
        } else if i == n - 1 {
            2.0 * (theta[n - 2] - theta[n - 1]) / h2
        } else {
            (theta[i + 1] - 2.0 * theta[i] + theta[i - 1]) / h2
        };
        let phidot = (phi[i] - phi_prev[i]) / dt;
        let f_dot = (potential_f(phi[i]) - potential_f(phi_prev[i])) / dt;
        let source = k_q * lap + rho_nodes[i] * phidot * phidot + fatigue[i] * f_dot
            + rho_nodes[i] * supply[i];
        theta[i] + dt * source / (rho_nodes[i] * c)
    })
}

/// Result of a run: sampled diagnostics, the final state, and (if requested)
/// full field snapshots at the sample times.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub trajectory: Trajectory,
    pub final_state: FieldState,
    pub history: Option<FieldHistory>,
}

struct StepCache {
    state: FieldState,
    power: Vec<f64>,
    strain_energy: Vec<f64>,
    psi: f64,
}

/// Run the coupled system to t_end. Deterministic: identical inputs produce
/// bit-identical trajectories.
pub fn run(
    params: &MaterialParams,
    grid: &Grid1D,
    load: &LoadProgram,
    controls: &StepControls,
    initial: &FieldState,
    thermal: bool,
) -> Result<RunOutput> {
    let violations = validate(params, grid, initial);
    if !violations.is_empty() {
        let joined = violations
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        return Err(SimError::InvalidArgument(joined));
    }
    if thermal {
        if params.thermal.is_none() {
            return Err(SimError::InvalidArgument(
                "thermal run requires thermal material parameters".into(),
            ));
        }
        if initial.theta.is_none() {
            return Err(SimError::InvalidArgument(
                "thermal run requires an initial temperature field".into(),
            ));
        }
    }
    let dt = controls.dt;
    if !(dt.is_finite() && dt > 0.0) {
        return Err(SimError::InvalidArgument(format!("dt must be > 0, got {dt}")));
    }
    if !(controls.t_end.is_finite() && controls.t_end >= 0.0) {
        return Err(SimError::InvalidArgument(format!(
            "t_end must be >= 0, got {}",
            controls.t_end
        )));
    }
    if controls.sample_every == 0 {
        return Err(SimError::InvalidArgument("sample_every must be >= 1".into()));
    }
    if controls.probe_node >= grid.n_nodes() {
        return Err(SimError::InvalidArgument(format!(
            "probe_node {} out of range (grid has {} nodes)",
            controls.probe_node,
            grid.n_nodes()
        )));
    }
    if !(controls.fatigue_scale.is_finite() && controls.fatigue_scale >= 0.0) {
        return Err(SimError::InvalidArgument(
            "fatigue_scale must be finite and >= 0".into(),
        ));
    }
    if controls.phase_scheme == PhaseScheme::Explicit {
        let limit = stable_dt(params, grid) * controls.cfl_safety;
        if dt > limit * (1.0 + 1e-12) {
            return Err(SimError::InvalidArgument(format!(
                "explicit scheme needs dt <= {limit:.6e} (stable_dt * cfl_safety), got {dt:.6e}"
            )));
        }
    }

    let n_steps = if controls.t_end == 0.0 {
        0
    } else {
        ((controls.t_end / dt) - 1e-9).ceil().max(1.0) as usize
    };

    let rho_nodes = MaterialParams::node_values(&params.rho);
    let shape = load.shape_on_nodes(grid);

    let mut state = initial.clone();
    state.t = 0.0;
    if !thermal {
        state.theta = None;
    }

    let mut trajectory = Trajectory {
        probe_node: controls.probe_node,
        samples: Vec::new(),
    };
    let mut history = controls.record_fields.then(|| FieldHistory {
        theta: thermal.then(Vec::new),
        ..FieldHistory::default()
    });

    let mut cache: Option<StepCache> = None;

    for n in 0..=n_steps {
        let t_n = n as f64 * dt;

        // power density with all fields consistent at t_n
        let mut power = if thermal {
            thermal_fatigue_density(&state, params, grid)?
        } else {
            mech_power_density(&state, params, grid)
        };
        if controls.fatigue_scale != 1.0 {
            for p in &mut power {
                *p *= controls.fatigue_scale;
            }
        }
        let strain_energy = strain_energy_density(&state, params, grid);

        // complete the fatigue and history integrals up to t_n
        if let Some(prev) = &cache {
            state.fatigue = advance_fatigue(&state.fatigue, &prev.power, &power, dt)?;
            state.hist_h = advance_history(
                &state.hist_h,
                &prev.state.phi,
                &state.phi,
                &prev.strain_energy,
                &strain_energy,
            );
        }
        state.t = t_n;
        let psi = elastic_free_energy(&state, params, grid);

        let sample_now = n % controls.sample_every == 0 || n == n_steps;
        if sample_now {
            let (p_m, p_s, residual) = match &cache {
                Some(prev) => {
                    // trapezoid of the per-time internal mechanical power,
                    // with the fatigue rate at each end being that end's
                    // power density
                    let p_m = 0.5
                        * (internal_mechanical_power(&prev.state, params, grid, &prev.power)
                            + internal_mechanical_power(&state, params, grid, &power));
                    let fat_mid: Vec<f64> = (0..state.n_nodes())
                        .map(|i| 0.5 * (prev.state.fatigue[i] + state.fatigue[i]))
                        .collect();
                    let p_s =
                        internal_structural_power(&prev.state, &state, params, grid, &fat_mid, dt);
                    let residual = p_m + p_s - (psi - prev.psi) / dt;
                    (p_m, p_s, residual)
                }
                None => (0.0, 0.0, 0.0),
            };
            let sigma = face_stress(&state.u, &state.phi, state.theta.as_deref(), params, grid);
            trajectory.samples.push(Sample {
                t: t_n,
                phi_max: state.phi.iter().fold(f64::NEG_INFINITY, |m, &v| m.max(v)),
                phi_min: state.phi.iter().fold(f64::INFINITY, |m, &v| m.min(v)),
                phi_probe: state.phi[controls.probe_node],
                fatigue_probe: state.fatigue[controls.probe_node],
                kinetic_energy: kinetic_energy(&state, params, grid),
                free_energy: psi,
                psi_f: pseudo_fatigue_energy(&state, params, grid),
                p_m,
                p_s,
                dissipation_residual: residual,
                boundary_stress: sigma[0],
            });
            if let Some(h) = &mut history {
                h.times.push(t_n);
                h.u.push(state.u.clone());
                h.v.push(state.v.clone());
                h.phi.push(state.phi.clone());
                h.fatigue.push(state.fatigue.clone());
                if let (Some(ts), Some(th)) = (&mut h.theta, &state.theta) {
                    ts.push(th.clone());
                }
            }
        }

        if n == n_steps {
            break;
        }

        cache = Some(StepCache {
            state: state.clone(),
            power,
            strain_energy,
            psi,
        });
        let phi_prev = cache.as_ref().unwrap().state.phi.clone();

        // advance to t_{n+1}: phase with the freshly completed fatigue, then
        // momentum (sees the updated clamp), then heat
        if !controls.freeze_phase {
            let stepped = step_phase(&state, params, grid, dt, controls.phase_scheme)?;
            state.phi = stepped.phi;
        }
        step_momentum_in_place(&mut state, params, grid, &rho_nodes, &shape, load, dt);
        if thermal {
            let stepped = step_heat(&state, &phi_prev, params, grid, load, dt)?;
            state.theta = stepped.theta;
        }
        state.t = (n + 1) as f64 * dt;

        let finite = all_finite(&state.u)
            && all_finite(&state.v)
            && all_finite(&state.phi)
            && state.theta.as_deref().map_or(true, all_finite);
        if !finite {
            return Err(SimError::Divergence { time: state.t });
        }
    }

    Ok(RunOutput {
        trajectory,
        final_state: state,
        history,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::initial_state;

    fn setup(n_cells: usize, kappa: f64) -> (Grid1D, MaterialParams) {
        let grid = Grid1D::new(1.0, n_cells).unwrap();
        let params = MaterialParams::uniform(&grid, 1.0, kappa, 0.5, 1.0);
        (grid, params)
    }

    fn zero_state(grid: &Grid1D) -> FieldState {
        let n = grid.n_nodes();
        initial_state(grid, vec![0.0; n], vec![0.0; n], vec![0.0; n], None).unwrap()
    }

    #[test]
    fn stable_dt_hand_value() {
        // rho = kappa = a = 1, h = 0.1: min(0.005, 0.1) = 0.005
        let grid = Grid1D::new(1.0, 10).unwrap();
        let params = MaterialParams::uniform(&grid, 1.0, 1.0, 0.5, 1.0);
        assert!((stable_dt(&params, &grid) - 0.005).abs() < 1e-15);
    }

    #[test]
    fn stable_dt_scaling_laws() {
        let grid = Grid1D::new(1.0, 10).unwrap();
        // wave-limited regime: large kappa so diffusion does not bind
        let base = MaterialParams::uniform(&grid, 1.0, 1e6, 0.5, 1.0);
        let stiff = MaterialParams::uniform(&grid, 1.0, 1e6, 0.5, 4.0);
        let r = stable_dt(&base, &grid) / stable_dt(&stiff, &grid);
        assert!((r - 2.0).abs() < 1e-12, "a -> 4a must halve the wave bound");

        // diffusion-limited regime
        let base = MaterialParams::uniform(&grid, 1.0, 0.01, 0.5, 1.0);
        let weak = MaterialParams::uniform(&grid, 1.0, 0.02, 0.5, 1.0);
        let r = stable_dt(&weak, &grid) / stable_dt(&base, &grid);
        assert!((r - 2.0).abs() < 1e-12, "kappa -> 2kappa must double the diffusion bound");
    }

    #[test]
    fn equilibrium_stays_zero() {
        let (grid, params) = setup(16, 10.0);
        let state = zero_state(&grid);
        let load = LoadProgram::zero();
        let s1 = step_momentum(&state, &params, &grid, &load, 1e-3).unwrap();
        assert!(s1.u.iter().all(|&v| v == 0.0));
        assert!(s1.v.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn full_damage_extinguishes_stress() {
        let (grid, params) = setup(16, 10.0);
        let n = grid.n_nodes();
        let mut state = zero_state(&grid);
        state.phi = vec![1.0; n];
        for i in 1..n - 1 {
            state.u[i] = 0.05 * (std::f64::consts::PI * grid.x(i)).sin();
        }
        // uniform body force: acceleration must equal the body force alone
        let load = LoadProgram::new(2.0, std::f64::consts::FRAC_PI_2, LoadShape::Uniform);
        let dt = 1e-4;
        let s1 = step_momentum(&state, &params, &grid, &load, dt).unwrap();
        let rho_nodes = MaterialParams::node_values(&params.rho);
        let _ = rho_nodes;
        for i in 1..n - 1 {
            // v after one Verlet step = dt/2 (b(0) + b(dt)); b(0) = 2 sin(0) = 0
            let expected = 0.5 * dt * (2.0 * (std::f64::consts::FRAC_PI_2 * dt).sin());
            assert!(
                (s1.v[i] - expected).abs() < 1e-14,
                "node {i}: {} vs {expected}",
                s1.v[i]
            );
        }
    }

    #[test]
    fn phase_fixed_point_at_virgin_state() {
        let (grid, params) = setup(16, 10.0);
        let state = zero_state(&grid);
        for scheme in [PhaseScheme::Explicit, PhaseScheme::SemiImplicitDiffusion] {
            let s1 = step_phase(&state, &params, &grid, 1e-3, scheme).unwrap();
            assert!(s1.phi.iter().all(|&p| p == 0.0));
        }
    }

    #[test]
    fn uniform_fatigue_drives_phase_at_rate_fatigue_over_rho() {
        let (grid, mut params) = setup(16, 10.0);
        params.rho = vec![2.0; grid.n_cells()];
        let n = grid.n_nodes();
        let mut state = zero_state(&grid);
        state.fatigue = vec![0.8; n];
        let dt = 1e-3;
        let s1 = step_phase(&state, &params, &grid, dt, PhaseScheme::Explicit).unwrap();
        for i in 0..n {
            let rate = (s1.phi[i] - 0.0) / dt;
            assert!((rate - 0.4).abs() < 1e-12, "phidot = {rate}");
        }
    }

    /// Uniform stationary root of F0 * G'(phi) = fatigue at ratio 1/2:
    /// phi* = 2 - sqrt(3).
    #[test]
    fn stationary_uniform_phase() {
        let (grid, params) = setup(16, 10.0); // F0 = 0.5
        let n = grid.n_nodes();
        let phi_star = 2.0 - 3.0f64.sqrt();
        let mut state = zero_state(&grid);
        state.phi = vec![phi_star; n];
        state.fatigue = vec![0.25; n]; // fatigue / F0 = 0.5
        for scheme in [PhaseScheme::Explicit, PhaseScheme::SemiImplicitDiffusion] {
            let s1 = step_phase(&state, &params, &grid, 1e-3, scheme).unwrap();
            for i in 0..n {
                assert!(
                    (s1.phi[i] - phi_star).abs() <= 1e-10,
                    "scheme {scheme:?} moved the stationary state by {}",
                    (s1.phi[i] - phi_star).abs()
                );
            }
        }
    }

    #[test]
    fn implicit_diffusion_smooths_with_zero_flux() {
        let (grid, params) = setup(16, 0.1); // strong diffusion
        let n = grid.n_nodes();
        let mut state = zero_state(&grid);
        state.phi[8] = 1.0;
        let mass_before: f64 = state.phi.iter().sum();
        let dt = 1.0; // far beyond the explicit limit
        let s1 = step_phase(&state, &params, &grid, dt, PhaseScheme::SemiImplicitDiffusion)
            .unwrap();
        // mass is conserved up to the reaction sink (F0 dG pulls down)
        let max_after = s1.phi.iter().fold(0.0f64, |m, &v| m.max(v));
        assert!(max_after < 1.0);
        assert!(s1.phi.iter().all(|&v| v >= -1e-12));
        let _ = mass_before;
    }

    #[test]
    fn heat_step_trivial_and_supply_cases() {
        use crate::load::HeatSupply;
        use crate::material::ThermalParams;
        let (grid, mut params) = setup(16, 10.0);
        params.thermal = Some(ThermalParams {
            c: 2.0,
            k_q: 0.0,
            varkappa: 1.0,
            theta_ref: 1.0,
        });
        let n = grid.n_nodes();
        let mut state = zero_state(&grid);
        state.theta = Some(vec![1.5; n]);
        let phi_prev = state.phi.clone();

        // no phase motion, no supply: theta unchanged
        let load = LoadProgram::zero();
        let s1 = step_heat(&state, &phi_prev, &params, &grid, &load, 1e-3).unwrap();
        assert_eq!(s1.theta.as_ref().unwrap(), state.theta.as_ref().unwrap());

        // pure supply: theta_dot = r / c
        let load = LoadProgram::zero().with_heat_supply(HeatSupply {
            amplitude: 3.0,
            shape: LoadShape::Uniform,
        });
        let dt = 1e-3;
        let s2 = step_heat(&state, &phi_prev, &params, &grid, &load, dt).unwrap();
        for i in 0..n {
            let rate = (s2.theta.as_ref().unwrap()[i] - 1.5) / dt;
            assert!((rate - 1.5).abs() < 1e-12, "theta_dot = {rate}");
        }
    }

    #[test]
    fn heat_step_phase_rate_source() {
        use crate::material::ThermalParams;
        let (grid, mut params) = setup(16, 10.0);
        params.thermal = Some(ThermalParams {
            c: 2.0,
            k_q: 0.0,
            varkappa: 1.0,
            theta_ref: 1.0,
        });
        let n = grid.n_nodes();
        let dt = 1e-3;
        let phidot = 0.2;
        let mut state = zero_state(&grid);
        state.theta = Some(vec![1.0; n]);
        let phi_prev = vec![0.3; n];
        state.phi = vec![0.3 + phidot * dt; n];
        // fatigue = 0: theta rises by dt * phidot^2 / c
        let s1 = step_heat(&state, &phi_prev, &params, &grid, &LoadProgram::zero(), dt).unwrap();
        for i in 0..n {
            let expected = 1.0 + dt * phidot * phidot / 2.0;
            assert!((s1.theta.as_ref().unwrap()[i] - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn null_solution_stays_null() {
        let (grid, params) = setup(16, 10.0);
        let state = zero_state(&grid);
        let mut controls = StepControls::new(1e-3, 1.0);
        controls.sample_every = 100;
        let out = run(&params, &grid, &LoadProgram::zero(), &controls, &state, false).unwrap();
        for s in &out.trajectory.samples {
            assert_eq!(s.phi_max, 0.0);
            assert_eq!(s.phi_min, 0.0);
            assert_eq!(s.kinetic_energy, 0.0);
            assert_eq!(s.free_energy, 0.0);
        }
        assert!(out.final_state.u.iter().all(|&v| v == 0.0));
        assert!(out.trajectory.times_strictly_increasing());
    }

    #[test]
    fn run_is_deterministic() {
        let (grid, params) = setup(24, 20.0);
        let state = zero_state(&grid);
        let load = LoadProgram::new(0.3, 2.0, LoadShape::HalfSine);
        let dt = stable_dt(&params, &grid) * 0.5;
        let mut controls = StepControls::new(dt, 2.0);
        controls.sample_every = 7;
        controls.probe_node = 12;
        let a = run(&params, &grid, &load, &controls, &state, false).unwrap();
        let b = run(&params, &grid, &load, &controls, &state, false).unwrap();
        assert_eq!(a.trajectory.samples, b.trajectory.samples);
        assert_eq!(a.final_state, b.final_state);
    }

    #[test]
    fn solver_states_revalidate() {
        let (grid, params) = setup(16, 20.0);
        let state = zero_state(&grid);
        let load = LoadProgram::new(0.5, 3.0, LoadShape::HalfSine);
        let dt = stable_dt(&params, &grid) * 0.5;
        let controls = StepControls::new(dt, 1.0);
        let out = run(&params, &grid, &load, &controls, &state, false).unwrap();
        assert!(validate(&params, &grid, &out.final_state).is_empty());
    }

    #[test]
    fn explicit_dt_limit_enforced() {
        let (grid, params) = setup(16, 10.0);
        let state = zero_state(&grid);
        let dt = stable_dt(&params, &grid); // cfl 0.5 -> too big
        let controls = StepControls::new(dt, 1.0);
        let err = run(&params, &grid, &LoadProgram::zero(), &controls, &state, false);
        assert!(matches!(err, Err(SimError::InvalidArgument(_))));
    }

    use crate::load::LoadShape;
}
