//! Cross-module verification: conservation, convergence orders, and the
//! weak-form oracle's sensitivity.

use fatiguefield::weak::{self_test_residual, weak_residual};
use fatiguefield::{
    initial_state, run, stable_dt, FieldState, Grid1D, LoadProgram, LoadShape, MaterialParams,
    PhaseScheme, StepControls,
};

fn zero_state(grid: &Grid1D) -> FieldState {
    let n = grid.n_nodes();
    initial_state(grid, vec![0.0; n], vec![0.0; n], vec![0.0; n], None).unwrap()
}

fn half_sine_u0(grid: &Grid1D, amplitude: f64) -> Vec<f64> {
    let n = grid.n_nodes();
    let mut u0 = vec![0.0; n];
    for i in 1..n - 1 {
        u0[i] = amplitude * (std::f64::consts::PI * grid.x(i)).sin();
    }
    u0
}

/// Frozen phase, no forcing: the scheme-consistent discrete elastic energy
/// (kinetic + face-based strain energy) holds to 1e-6 relative over 1e4
/// velocity-Verlet steps.
#[test]
fn undamaged_energy_conservation() {
    let grid = Grid1D::new(1.0, 32).unwrap();
    let params = MaterialParams::uniform(&grid, 1.0, 1e6, 0.5, 1.0);
    let n = grid.n_nodes();
    let h = grid.spacing();
    let initial = initial_state(
        &grid,
        half_sine_u0(&grid, 0.01),
        vec![0.0; n],
        vec![0.0; n],
        None,
    )
    .unwrap();
    let mut controls = StepControls::new(5e-4, 5.0); // exactly 1e4 steps
    controls.sample_every = 10;
    controls.freeze_phase = true;
    controls.record_fields = true;
    let out = run(
        &params,
        &grid,
        &LoadProgram::zero(),
        &controls,
        &initial,
        false,
    )
    .unwrap();
    let hist = out.history.unwrap();
    let energy = |k: usize| -> f64 {
        let mut kinetic = 0.0;
        for i in 0..n {
            let w = if i == 0 || i == n - 1 { 0.5 * h } else { h };
            kinetic += 0.5 * w * hist.v[k][i] * hist.v[k][i]; // rho = 1
        }
        let mut strain = 0.0;
        for j in 0..grid.n_cells() {
            let du = (hist.u[k][j + 1] - hist.u[k][j]) / h;
            strain += 0.5 * h * params.a[j] * du * du;
        }
        kinetic + strain
    };
    let e0 = energy(0);
    let drift = (0..hist.len()).fold(0.0f64, |m, k| m.max((energy(k) - e0).abs()));
    assert!(
        drift / e0 <= 1e-6,
        "relative energy drift {:.3e} over 1e4 steps",
        drift / e0
    );
}

/// Discrete fundamental period error shrinks about 4x when h halves
/// (second order), with dt/h held fixed.
#[test]
fn wave_period_second_order_in_h() {
    let period = |n_cells: usize| -> f64 {
        let grid = Grid1D::new(1.0, n_cells).unwrap();
        let params = MaterialParams::uniform(&grid, 1.0, 1e6, 0.5, 1.0);
        let n = grid.n_nodes();
        let initial = initial_state(
            &grid,
            half_sine_u0(&grid, 0.01),
            vec![0.0; n],
            vec![0.0; n],
            None,
        )
        .unwrap();
        let mut controls = StepControls::new(0.4 * grid.spacing(), 12.0);
        controls.sample_every = 1;
        controls.freeze_phase = true;
        let out = run(
            &params,
            &grid,
            &LoadProgram::zero(),
            &controls,
            &initial,
            false,
        )
        .unwrap();
        let mut crossings = Vec::new();
        for w in out.trajectory.samples.windows(2) {
            let (s0, s1) = (w[0].boundary_stress, w[1].boundary_stress);
            if s0 != 0.0 && s0.signum() != s1.signum() {
                crossings.push(w[0].t + s0 / (s0 - s1) * (w[1].t - w[0].t));
            }
        }
        2.0 * (crossings.last().unwrap() - crossings[0]) / (crossings.len() - 1) as f64
    };
    let exact = 2.0; // 2 L / sqrt(a / rho)
    let e32 = (period(32) - exact).abs();
    let e64 = (period(64) - exact).abs();
    let ratio = e32 / e64;
    assert!(
        (3.0..5.5).contains(&ratio),
        "period error ratio {ratio:.2} not second order (e32 = {e32:.2e}, e64 = {e64:.2e})"
    );
}

/// Richardson estimate on dt, dt/2, dt/4: the probe phase trace converges at
/// least at first order in dt.
#[test]
fn phase_trace_at_least_first_order_in_dt() {
    let grid = Grid1D::new(1.0, 24).unwrap();
    let params = MaterialParams::uniform(&grid, 1.0, 100.0, 0.2, 1.0);
    let load = LoadProgram::new(0.6, 2.0, LoadShape::HalfSine);
    let dt0 = stable_dt(&params, &grid) * 0.5;
    let phi_end = |dt: f64| {
        let mut controls = StepControls::new(dt, 4.0);
        controls.sample_every = 1000;
        controls.probe_node = 6;
        let out = run(&params, &grid, &load, &controls, &zero_state(&grid), false).unwrap();
        out.final_state.phi[6]
    };
    let p0 = phi_end(dt0);
    let p1 = phi_end(dt0 / 2.0);
    let p2 = phi_end(dt0 / 4.0);
    let ratio = (p0 - p1).abs() / (p1 - p2).abs();
    assert!(
        ratio >= 1.7,
        "phi trace Richardson ratio {ratio:.2} below first order ({p0:.10} {p1:.10} {p2:.10})"
    );
}

/// Sustained cyclic loading: once positive, the running phase maximum is
/// nondecreasing within the explicit overshoot allowance, at dt and dt/2.
#[test]
fn monotone_damage_under_sustained_load() {
    let grid = Grid1D::new(1.0, 32).unwrap();
    let params = MaterialParams::uniform(&grid, 1.0, 100.0, 0.05, 1.0);
    let load = LoadProgram::new(0.8, 2.0, LoadShape::HalfSine);
    let dt0 = stable_dt(&params, &grid) * 0.5;
    for dt in [dt0, dt0 / 2.0] {
        let mut controls = StepControls::new(dt, 6.0);
        controls.sample_every = 5;
        let out = run(&params, &grid, &load, &controls, &zero_state(&grid), false).unwrap();
        let tol = 10.0 * dt;
        let mut active = false;
        for w in out.trajectory.samples.windows(2) {
            if w[0].phi_max > 0.0 {
                active = true;
            }
            if active {
                assert!(
                    w[1].phi_max >= w[0].phi_max - tol,
                    "phi_max dropped {:.3e} -> {:.3e} at t = {}",
                    w[0].phi_max,
                    w[1].phi_max,
                    w[1].t
                );
            }
        }
        assert!(active, "run never accumulated damage");
    }
}

/// Semi-implicit diffusion with clamped reactions keeps the phase inside
/// [0, 1] to solver precision even far beyond the explicit diffusion limit.
#[test]
fn semi_implicit_bounds_at_large_dt() {
    let grid = Grid1D::new(1.0, 32).unwrap();
    // strong diffusion: explicit limit would be rho*kappa*h^2/2 ~ 2.4e-4
    let params = MaterialParams::uniform(&grid, 1.0, 0.5, 0.3, 1.0);
    let load = LoadProgram::new(0.5, 2.0, LoadShape::HalfSine);
    let n = grid.n_nodes();
    let phi0: Vec<f64> = (0..n)
        .map(|i| 0.5 + 0.5 * (7.0 * grid.x(i)).sin().abs())
        .collect();
    let initial = initial_state(&grid, vec![0.0; n], vec![0.0; n], phi0, None).unwrap();
    let mut controls = StepControls::new(0.01, 4.0); // ~40x the explicit limit
    controls.phase_scheme = PhaseScheme::SemiImplicitDiffusion;
    controls.sample_every = 1;
    let out = run(&params, &grid, &load, &controls, &initial, false).unwrap();
    assert!(out.trajectory.max_phi_over_run() <= 1.0 + 1e-9);
    assert!(out.trajectory.min_phi_over_run() >= -1e-9);
}

fn recorded_run(n_cells: usize) -> (Grid1D, MaterialParams, LoadProgram, fatiguefield::RunOutput) {
    let grid = Grid1D::new(1.0, n_cells).unwrap();
    let params = MaterialParams::uniform(&grid, 1.0, 200.0, 0.3, 1.0);
    let load = LoadProgram::new(0.5, 3.0, LoadShape::HalfSine);
    let mut controls = StepControls::new(0.4 * grid.spacing(), 3.0);
    controls.sample_every = 1;
    controls.record_fields = true;
    let out = run(&params, &grid, &load, &controls, &zero_state(&grid), false).unwrap();
    (grid, params, load, out)
}

/// A perturbation of size delta moves the weak residual by Theta(delta) and
/// pushes it well away from the discretization-level clean value.
#[test]
fn weak_residual_scales_linearly_with_perturbation() {
    let (grid, params, load, out) = recorded_run(24);
    let history = out.history.unwrap();
    let (_, clean) = self_test_residual(&history, &params, &grid, &load).unwrap();

    let perturbed_residual = |delta: f64| -> f64 {
        let mut hist = history.clone();
        for (k, snap) in hist.u.iter_mut().enumerate() {
            let last = snap.len() - 1;
            for (i, v) in snap.iter_mut().enumerate() {
                if i > 0 && i < last {
                    *v += delta * ((3.0 * (i as f64) + 0.7 * k as f64).sin());
                }
            }
        }
        let (_, rm) = weak_residual(&hist, &params, &grid, &load, &history.phi, &history.u)
            .unwrap();
        rm
    };

    let r1 = perturbed_residual(1e-4);
    let r2 = perturbed_residual(5e-5);
    assert!(
        r1.abs() > 5.0 * clean.abs(),
        "perturbed residual {r1:.3e} not bounded away from clean residual {clean:.3e}"
    );
    let ratio = (r1 - clean).abs() / (r2 - clean).abs();
    assert!(
        (1.5..3.0).contains(&ratio),
        "residual shift not linear in delta: ratio {ratio:.2} (clean {clean:.3e}, r1 {r1:.3e}, r2 {r2:.3e})"
    );
}

/// The two weak forms both shrink under joint (h, dt) refinement when
/// evaluated on the discrete solution itself.
#[test]
fn weak_residual_shrinks_under_refinement() {
    let (grid_a, params_a, load_a, out_a) = recorded_run(24);
    let (grid_b, params_b, load_b, out_b) = recorded_run(48);
    let (rp_a, rm_a) =
        self_test_residual(&out_a.history.unwrap(), &params_a, &grid_a, &load_a).unwrap();
    let (rp_b, rm_b) =
        self_test_residual(&out_b.history.unwrap(), &params_b, &grid_b, &load_b).unwrap();
    assert!(rp_b.abs() < rp_a.abs());
    assert!(rm_b.abs() < rm_a.abs());
}

/// Thermal run with conduction and a gradient: temperatures stay positive
/// and the trajectory stays finite under the combined stepping.
#[test]
fn thermal_run_stays_physical() {
    use fatiguefield::ThermalParams;
    let grid = Grid1D::new(1.0, 24).unwrap();
    let mut params = MaterialParams::uniform(&grid, 1.0, 50.0, 0.2, 1.0);
    params.thermal = Some(ThermalParams {
        c: 1.5,
        k_q: 0.3,
        varkappa: 0.2,
        theta_ref: 1.0,
    });
    let n = grid.n_nodes();
    let theta0: Vec<f64> = (0..n).map(|i| 1.0 + 0.5 * grid.x(i)).collect();
    let initial =
        initial_state(&grid, vec![0.0; n], vec![0.0; n], vec![0.0; n], Some(theta0)).unwrap();
    let load = LoadProgram::new(0.4, 2.0, LoadShape::HalfSine);
    let dt = stable_dt(&params, &grid) * 0.5;
    let mut controls = StepControls::new(dt, 2.0);
    controls.sample_every = 10;
    let out = run(&params, &grid, &load, &controls, &initial, true).unwrap();
    let theta = out.final_state.theta.unwrap();
    assert!(theta.iter().all(|&v| v > 0.0 && v.is_finite()));
    assert!(out.trajectory.times_strictly_increasing());
}
