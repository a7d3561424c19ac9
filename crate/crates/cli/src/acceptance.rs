//! The acceptance property suite behind `fatiguefield check` and the
//! `acceptance` integration test target. Each criterion runs at a pinned
//! tolerance and reports one pass/fail line.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fatiguefield::energy::{energy_landscape, landscape_argmin};
use fatiguefield::fatigue::{fatigue_elastic_closed_form, heat_flux_fatigue_density};
use fatiguefield::weak::self_test_residual;
use fatiguefield::{
    initial_state, run, stable_dt, FieldState, Grid1D, LoadProgram, LoadShape, MaterialParams,
    PhaseScheme, StepControls, ThermalParams,
};

use crate::config::{parse_config, RunConfig, SweepAxis};
use crate::commands::{cmd_run_config, cmd_sweep_config};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    fn new(id: usize, name: &'static str, passed: bool, detail: String) -> Self {
        Self {
            id,
            name,
            passed,
            detail,
        }
    }
}

fn zero_state(grid: &Grid1D) -> FieldState {
    let n = grid.n_nodes();
    initial_state(grid, vec![0.0; n], vec![0.0; n], vec![0.0; n], None).unwrap()
}

fn half_sine_u0(grid: &Grid1D, amplitude: f64) -> Vec<f64> {
    let n = grid.n_nodes();
    let mut u0 = vec![0.0; n];
    for i in 1..n - 1 {
        u0[i] = amplitude * (std::f64::consts::PI * grid.x(i) / grid.length()).sin();
    }
    u0
}

/// Criterion 1: phase bounds on randomized admissible configurations.
/// Explicit scheme within the 10*dt overshoot allowance; semi-implicit
/// within 1e-9 at any momentum-stable dt.
pub fn criterion_1_maximum_principle() -> CriterionResult {
    let mut rng = ChaCha8Rng::seed_from_u64(0xFA71);
    let mut worst_explicit = 0.0f64; // in units of 10*dt
    let mut worst_semi = 0.0f64;
    for case in 0..50 {
        let n_cells = rng.gen_range(16..=48usize);
        let grid = Grid1D::new(1.0, n_cells).unwrap();
        let n = grid.n_nodes();
        let cell = |rng: &mut ChaCha8Rng, lo: f64, hi: f64| -> Vec<f64> {
            (0..n_cells).map(|_| rng.gen_range(lo..hi)).collect()
        };
        let params = MaterialParams {
            rho: cell(&mut rng, 0.5, 2.0),
            kappa: cell(&mut rng, 8.0, 40.0),
            f0: cell(&mut rng, 0.1, 1.0),
            a: cell(&mut rng, 0.5, 2.0),
            thermal: None,
        };
        let amplitude = rng.gen_range(0.05..0.25);
        let omega = rng.gen_range(0.5..3.0);
        let shape = match rng.gen_range(0..3) {
            0 => LoadShape::Uniform,
            1 => LoadShape::HalfSine,
            _ => LoadShape::Gaussian {
                center: rng.gen_range(0.3..0.7),
                width: rng.gen_range(0.1..0.3),
            },
        };
        let load = LoadProgram::new(amplitude, omega, shape);
        let phi0: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..=1.0)).collect();
        let initial = initial_state(&grid, vec![0.0; n], vec![0.0; n], phi0, None).unwrap();
        let t_end = rng.gen_range(4.0..8.0);

        // explicit run at the full stability limit
        let dt = stable_dt(&params, &grid) * 0.5;
        let mut controls = StepControls::new(dt, t_end);
        controls.sample_every = 5;
        let out = run(&params, &grid, &load, &controls, &initial, false)
            .unwrap_or_else(|e| panic!("explicit case {case} failed: {e}"));
        let tol = 10.0 * dt;
        let over = (out.trajectory.max_phi_over_run() - 1.0).max(0.0);
        let under = (-out.trajectory.min_phi_over_run()).max(0.0);
        worst_explicit = worst_explicit.max(over / tol).max(under / tol);

        // semi-implicit run constrained only by the momentum wave limit
        let h = grid.spacing();
        let wave_dt = (0..n_cells)
            .map(|j| h * (params.rho[j] / params.a[j]).sqrt())
            .fold(f64::INFINITY, f64::min);
        let mut controls = StepControls::new(wave_dt * 0.5, t_end);
        controls.sample_every = 5;
        controls.phase_scheme = PhaseScheme::SemiImplicitDiffusion;
        let out = run(&params, &grid, &load, &controls, &initial, false)
            .unwrap_or_else(|e| panic!("semi-implicit case {case} failed: {e}"));
        let over = (out.trajectory.max_phi_over_run() - 1.0).max(0.0);
        let under = (-out.trajectory.min_phi_over_run()).max(0.0);
        worst_semi = worst_semi.max(over / 1e-9).max(under / 1e-9);
    }
    CriterionResult::new(
        1,
        "maximum principle (50 random configs)",
        worst_explicit <= 1.0 && worst_semi <= 1.0,
        format!(
            "explicit worst overshoot {:.2}% of 10*dt; semi-implicit worst {:.2}% of 1e-9",
            100.0 * worst_explicit,
            100.0 * worst_semi
        ),
    )
}

/// Criterion 2: zero data and supplies stay exactly null for 1e4 steps.
pub fn criterion_2_null_uniqueness() -> CriterionResult {
    let grid = Grid1D::new(1.0, 32).unwrap();
    let params = MaterialParams::uniform(&grid, 1.0, 20.0, 0.5, 1.0);
    let mut controls = StepControls::new(1e-3, 10.0);
    controls.sample_every = 100;
    let out = run(
        &params,
        &grid,
        &LoadProgram::zero(),
        &controls,
        &zero_state(&grid),
        false,
    )
    .unwrap();
    let sup = |f: &[f64]| f.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    let worst = sup(&out.final_state.u)
        .max(sup(&out.final_state.v))
        .max(sup(&out.final_state.phi));
    CriterionResult::new(
        2,
        "null-solution uniqueness (1e4 steps)",
        worst <= 1e-12,
        format!("sup-norm of (u, v, phi) = {worst:.3e} (bound 1e-12)"),
    )
}

struct IdentityRun {
    err: f64,
    tol: f64,
    min_dphi: f64,
}

fn identity_run(dt_factor: f64) -> IdentityRun {
    let grid = Grid1D::new(1.0, 48).unwrap();
    let params = MaterialParams::uniform(&grid, 1.0, 10_000.0, 0.0, 1.0);
    let load = LoadProgram::new(0.32, 2.0, LoadShape::HalfSine);
    let t_end = 5.0 * std::f64::consts::PI; // five load cycles
    let dt = stable_dt(&params, &grid) * 0.5 * dt_factor;
    let mut controls = StepControls::new(dt, t_end);
    controls.sample_every = 1;
    controls.record_fields = true;
    let out = run(&params, &grid, &load, &controls, &zero_state(&grid), false).unwrap();
    let closed = fatigue_elastic_closed_form(&out.final_state, &params, &grid);
    let err = out
        .final_state
        .fatigue
        .iter()
        .zip(&closed)
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    let steps = ((t_end / dt) - 1e-9).ceil();
    let hist = out.history.unwrap();
    let mut min_dphi = f64::INFINITY;
    for k in 1..hist.len() {
        for i in 0..grid.n_nodes() {
            min_dphi = min_dphi.min(hist.phi[k][i] - hist.phi[k - 1][i]);
        }
    }
    IdentityRun {
        err,
        tol: 10.0 * dt * dt * steps,
        min_dphi,
    }
}

/// Criterion 3: incremental fatigue equals its elastic closed form at second
/// order on a five-cycle monotone-damage run.
pub fn criterion_3_fatigue_identity() -> CriterionResult {
    let coarse = identity_run(1.0);
    let fine = identity_run(0.5);
    let ratio = coarse.err / fine.err;
    let passed = coarse.err <= coarse.tol
        && fine.err <= fine.tol
        && ratio >= 3.5
        && coarse.min_dphi >= -1e-15
        && fine.min_dphi >= -1e-15;
    CriterionResult::new(
        3,
        "fatigue closed-form identity (order ~2)",
        passed,
        format!(
            "max-norm gap {:.3e} (tol {:.3e}); halving dt shrinks it {ratio:.2}x (need >= 3.5); min phase increment {:.1e}",
            coarse.err, coarse.tol, coarse.min_dphi
        ),
    )
}

fn dissipation_negative_part(dt_factor: f64) -> f64 {
    let grid = Grid1D::new(1.0, 32).unwrap();
    let params = MaterialParams::uniform(&grid, 1.0, 50.0, 0.02, 1.0);
    let load = LoadProgram::new(0.01, 1.0, LoadShape::HalfSine);
    let dt = stable_dt(&params, &grid) * 0.5 * dt_factor;
    let mut controls = StepControls::new(dt, 10.0 * std::f64::consts::PI);
    controls.sample_every = 1;
    let out = run(&params, &grid, &load, &controls, &zero_state(&grid), false).unwrap();
    (-out.trajectory.min_dissipation_residual()).max(0.0)
}

/// Criterion 4: discrete dissipation inequality. The cyclic run's negative
/// residual part is bounded by C*dt and shrinks at least linearly under
/// halving; the frozen-phase pure-elastic run closes the balance exactly.
pub fn criterion_4_dissipation() -> CriterionResult {
    const C: f64 = 1e-6; // pinned scale for the -C*dt bound
    let grid = Grid1D::new(1.0, 32).unwrap();
    let params = MaterialParams::uniform(&grid, 1.0, 50.0, 0.02, 1.0);
    let dt0 = stable_dt(&params, &grid) * 0.5;

    let neg: Vec<f64> = [1.0, 0.5, 0.25]
        .iter()
        .map(|&f| dissipation_negative_part(f))
        .collect();
    let bound_ok = neg[0] <= C * dt0 && neg[1] <= C * dt0 * 0.5 && neg[2] <= C * dt0 * 0.25;
    let shrink_ok = neg[1] <= neg[0] / 1.9 && neg[2] <= neg[1] / 1.9;

    // frozen-phase pure-elastic run: residual vanishes to rounding
    let params_e = MaterialParams::uniform(&grid, 1.0, 50.0, 0.3, 1.0);
    let load = LoadProgram::new(0.2, 1.0, LoadShape::HalfSine);
    let mut controls = StepControls::new(5e-5, 3.0);
    controls.sample_every = 1;
    controls.freeze_phase = true;
    let out = run(&params_e, &grid, &load, &controls, &zero_state(&grid), false).unwrap();
    let elastic_worst = out
        .trajectory
        .samples
        .iter()
        .skip(1)
        .fold(0.0f64, |m, s| m.max(s.dissipation_residual.abs()));

    CriterionResult::new(
        4,
        "dissipation inequality (cyclic + pure-elastic)",
        bound_ok && shrink_ok && elastic_worst <= 1e-10,
        format!(
            "negative parts {:.2e} -> {:.2e} -> {:.2e} under dt halving (bound C*dt = {:.2e}); frozen-phase max |residual| {:.2e} (bound 1e-10)",
            neg[0], neg[1], neg[2], C * dt0, elastic_worst
        ),
    )
}

fn sweep_phi_column(
    base: &RunConfig,
    axis: SweepAxis,
    values: &[f64],
    snapshot: f64,
    dir: &std::path::Path,
    tag: &str,
) -> Vec<f64> {
    let out_path = dir.join(format!("sweep_{tag}.csv"));
    cmd_sweep_config(base, axis, values, snapshot, out_path.to_str().unwrap())
        .unwrap_or_else(|e| panic!("sweep failed: {}", e.message));
    let text = std::fs::read_to_string(&out_path).unwrap();
    text.lines()
        .skip(1)
        .map(|line| line.split(',').nth(1).unwrap().parse::<f64>().unwrap())
        .collect()
}

fn ballistic_base(dir: &std::path::Path) -> RunConfig {
    let text = format!(
        "[grid]\nL = 1.0\nn_cells = 48\n\
         [material]\nrho = 1.0\nkappa = 50.0\nF0 = 0.01\na = 1.0\n\
         [load]\namplitude = 2.0\nomega = 2.0\nshape = half_sine\n\
         [controls]\ndt = auto\nt_end = 1.0\nphase_scheme = explicit\nsample_every = 5\n\
         [initial]\nu0_kind = zero\nphi0_const = 0.0\n\
         [outputs]\ntrajectory_path = {}\nprobe_node = 24\n",
        dir.join("base_traj.csv").display()
    );
    parse_config(&text).unwrap()
}

/// Criterion 5: damage at the snapshot is strictly decreasing in the density,
/// for the base sweep and the doubled-density rerun.
pub fn criterion_5_density_ordering() -> CriterionResult {
    let dir = tempfile::tempdir().unwrap();
    let base = ballistic_base(dir.path());
    let phi_a = sweep_phi_column(&base, SweepAxis::Rho, &[1.0, 2.0, 3.0, 4.0, 5.0], 1.0, dir.path(), "rho");
    let phi_b = sweep_phi_column(&base, SweepAxis::Rho, &[2.0, 4.0, 6.0, 8.0, 10.0], 1.0, dir.path(), "rho2");
    let strict_dec = |v: &[f64]| v.windows(2).all(|w| w[1] < w[0]);
    let fmt = |v: &[f64]| {
        v.iter()
            .map(|x| format!("{x:.3e}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    CriterionResult::new(
        5,
        "density sweep ordering (and doubled densities)",
        strict_dec(&phi_a) && strict_dec(&phi_b),
        format!("phi_max rows [{}] and doubled [{}]", fmt(&phi_a), fmt(&phi_b)),
    )
}

/// Criterion 6: damage at the snapshot is nondecreasing in the load
/// frequency.
pub fn criterion_6_frequency_ordering() -> CriterionResult {
    let dir = tempfile::tempdir().unwrap();
    let text = format!(
        "[grid]\nL = 1.0\nn_cells = 48\n\
         [material]\nrho = 1.0\nkappa = 50.0\nF0 = 0.2\na = 5.0\n\
         [load]\namplitude = 0.5\nomega = 1.0\nshape = half_sine\n\
         [controls]\ndt = auto\nt_end = 26.0\nphase_scheme = explicit\nsample_every = 20\n\
         [initial]\nu0_kind = zero\nphi0_const = 0.0\n\
         [outputs]\ntrajectory_path = {}\nprobe_node = 24\n",
        dir.path().join("base_traj.csv").display()
    );
    let base = parse_config(&text).unwrap();
    let phi = sweep_phi_column(
        &base,
        SweepAxis::Omega,
        &[1.0, 2.0, 3.0, 4.0, 5.0],
        26.0,
        dir.path(),
        "omega",
    );
    let nondec = phi.windows(2).all(|w| w[1] >= w[0]);
    let rows = phi
        .iter()
        .map(|x| format!("{x:.3e}"))
        .collect::<Vec<_>>()
        .join(" ");
    CriterionResult::new(
        6,
        "frequency sweep ordering",
        nondec,
        format!("phi_max rows [{rows}]"),
    )
}

/// Criterion 7: landscape minimizer thresholds and monotonicity.
pub fn criterion_7_landscape() -> CriterionResult {
    let samples = 141;
    let tol = 2.0 / samples as f64;
    let f0 = 1.3;
    let at = |fatigue: f64| landscape_argmin(&energy_landscape(f0, fatigue, samples));

    let zero_ok = at(0.0).abs() <= tol;
    let interior = at(0.5 * f0);
    let interior_ok = (interior - (2.0 - 3.0f64.sqrt())).abs() <= tol;
    let broken_ok = [1.5, 2.0, 3.0]
        .iter()
        .all(|&r| (at(r * f0) - 1.0).abs() <= tol);
    let mut monotone = true;
    let mut prev = -1.0;
    for k in 0..20 {
        let argmin = at(f0 * 0.1 * k as f64);
        if argmin < prev - 1e-12 {
            monotone = false;
        }
        prev = argmin;
    }
    CriterionResult::new(
        7,
        "landscape minimizer thresholds",
        zero_ok && interior_ok && broken_ok && monotone,
        format!(
            "argmin(0) = {:.4}, argmin(F0/2) = {interior:.6} (target {:.6}), argmin(>=1.5 F0) = 1 within {tol:.3e}, monotone = {monotone}",
            at(0.0),
            2.0 - 3.0f64.sqrt()
        ),
    )
}

/// Criterion 8: thermal mode at bit-constant uniform temperature matches the
/// isothermal dynamics with fatigue rescaled by 1/theta0; the heat-flux
/// fatigue term is nonnegative on a conducting run.
pub fn criterion_8_thermal_consistency() -> CriterionResult {
    let grid = Grid1D::new(1.0, 32).unwrap();
    let theta0 = 2.0;
    let n = grid.n_nodes();

    // constant-temperature thermal run: huge specific heat pins theta
    // bit-exactly; uniform theta makes the thermal stress divergence-free
    let mut params = MaterialParams::uniform(&grid, 1.0, 50.0, 0.1, 1.0);
    params.thermal = Some(ThermalParams {
        c: 1e30,
        k_q: 0.0,
        varkappa: 1.0,
        theta_ref: theta0,
    });
    let load = LoadProgram::new(0.5, 2.0, LoadShape::HalfSine);
    let dt = stable_dt(&params, &grid) * 0.5;
    let mut controls = StepControls::new(dt, 4.0);
    controls.sample_every = 10;
    let initial = initial_state(
        &grid,
        vec![0.0; n],
        vec![0.0; n],
        vec![0.0; n],
        Some(vec![theta0; n]),
    )
    .unwrap();
    let thermal_out = run(&params, &grid, &load, &controls, &initial, true).unwrap();

    // isothermal oracle: same dynamics with the fatigue increment rescaled
    let params_iso = MaterialParams::uniform(&grid, 1.0, 50.0, 0.1, 1.0);
    let mut controls_iso = controls.clone();
    controls_iso.fatigue_scale = 1.0 / theta0;
    let iso_out = run(
        &params_iso,
        &grid,
        &load,
        &controls_iso,
        &zero_state(&grid),
        false,
    )
    .unwrap();

    let mut worst = 0.0f64;
    for (a, b) in thermal_out
        .trajectory
        .samples
        .iter()
        .zip(&iso_out.trajectory.samples)
    {
        let cols = [
            (a.phi_max, b.phi_max),
            (a.phi_min, b.phi_min),
            (a.phi_probe, b.phi_probe),
            (a.fatigue_probe, b.fatigue_probe),
            (a.kinetic_energy, b.kinetic_energy),
            (a.free_energy, b.free_energy),
            (a.psi_f, b.psi_f),
            (a.p_m, b.p_m),
            (a.p_s, b.p_s),
            (a.dissipation_residual, b.dissipation_residual),
        ];
        for (x, y) in cols {
            let scale = x.abs().max(y.abs());
            if scale > 0.0 {
                worst = worst.max((x - y).abs() / scale);
            }
        }
    }

    // conducting run with a temperature gradient: flux term stays >= 0
    let mut params_g = MaterialParams::uniform(&grid, 1.0, 50.0, 0.1, 1.0);
    params_g.thermal = Some(ThermalParams {
        c: 2.0,
        k_q: 0.5,
        varkappa: 1.0,
        theta_ref: 1.0,
    });
    let theta_grad: Vec<f64> = (0..n).map(|i| 1.0 + grid.x(i)).collect();
    let initial_g = initial_state(
        &grid,
        vec![0.0; n],
        vec![0.0; n],
        vec![0.0; n],
        Some(theta_grad),
    )
    .unwrap();
    let dt_g = stable_dt(&params_g, &grid) * 0.5;
    let mut controls_g = StepControls::new(dt_g, 1.0);
    controls_g.sample_every = 5;
    controls_g.record_fields = true;
    let out_g = run(&params_g, &grid, &load, &controls_g, &initial_g, true).unwrap();
    let hist = out_g.history.unwrap();
    let theta_hist = hist.theta.as_ref().unwrap();
    let mut min_flux = f64::INFINITY;
    for k in 0..hist.len() {
        let state = FieldState {
            t: hist.times[k],
            u: hist.u[k].clone(),
            v: hist.v[k].clone(),
            phi: hist.phi[k].clone(),
            fatigue: hist.fatigue[k].clone(),
            hist_h: vec![0.0; n],
            theta: Some(theta_hist[k].clone()),
        };
        let flux = heat_flux_fatigue_density(&state, &params_g, &grid).unwrap();
        min_flux = flux.iter().fold(min_flux, |m, &v| m.min(v));
    }

    CriterionResult::new(
        8,
        "thermal consistency + flux-fatigue positivity",
        worst <= 1e-9 && min_flux >= 0.0,
        format!(
            "worst column mismatch {worst:.3e} (bound 1e-9); min heat-flux fatigue {min_flux:.3e}"
        ),
    )
}

fn measured_period(n_cells: usize) -> f64 {
    let grid = Grid1D::new(1.0, n_cells).unwrap();
    let params = MaterialParams::uniform(&grid, 1.0, 1e6, 0.5, 1.0);
    let n = grid.n_nodes();
    let u0 = half_sine_u0(&grid, 0.01);
    let initial = initial_state(&grid, u0, vec![0.0; n], vec![0.0; n], None).unwrap();
    let dt = 0.4 * grid.spacing(); // fixed dt/h so dispersion scales as h^2
    let mut controls = StepControls::new(dt, 20.0);
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
    // boundary stress oscillates with the fundamental mode; average the
    // crossing spacing over the whole run
    let samples = &out.trajectory.samples;
    let mut crossings = Vec::new();
    for w in samples.windows(2) {
        let (s0, s1) = (w[0].boundary_stress, w[1].boundary_stress);
        if s0 == 0.0 {
            continue;
        }
        if s0.signum() != s1.signum() {
            let frac = s0 / (s0 - s1);
            crossings.push(w[0].t + frac * (w[1].t - w[0].t));
        }
    }
    assert!(crossings.len() > 4, "too few crossings");
    // consecutive crossings are half a period apart
    2.0 * (crossings.last().unwrap() - crossings[0]) / (crossings.len() - 1) as f64
}

/// Criterion 9: the undamaged fundamental period converges to 2L/sqrt(a/rho)
/// at second order in h.
pub fn criterion_9_wave_benchmark() -> CriterionResult {
    let t32 = measured_period(32);
    let t64 = measured_period(64);
    let t128 = measured_period(128);
    let order = ((t32 - t64) / (t64 - t128)).log2();
    let exact = 2.0;
    let passed = (1.8..=2.2).contains(&order) && (t128 - exact).abs() < 1e-3;
    CriterionResult::new(
        9,
        "elastic wave period convergence",
        passed,
        format!(
            "periods {t32:.6}, {t64:.6}, {t128:.6} vs exact {exact}; observed order {order:.3} (need within [1.8, 2.2])"
        ),
    )
}

fn weak_residual_level(n_cells: usize) -> (f64, f64) {
    let grid = Grid1D::new(1.0, n_cells).unwrap();
    let params = MaterialParams::uniform(&grid, 1.0, 200.0, 0.3, 1.0);
    let load = LoadProgram::new(0.5, 3.0, LoadShape::HalfSine);
    let dt = 0.4 * grid.spacing();
    let mut controls = StepControls::new(dt, 3.0);
    controls.sample_every = 1;
    controls.record_fields = true;
    let out = run(&params, &grid, &load, &controls, &zero_state(&grid), false).unwrap();
    let (rp, rm) = self_test_residual(&out.history.unwrap(), &params, &grid, &load).unwrap();
    (rp.abs(), rm.abs())
}

/// Criterion 10: weak-form residuals decrease monotonically under joint
/// (h, dt) refinement.
pub fn criterion_10_weak_residuals() -> CriterionResult {
    let levels = [
        weak_residual_level(24),
        weak_residual_level(48),
        weak_residual_level(96),
    ];
    let dec = |f: fn(&(f64, f64)) -> f64| f(&levels[0]) > f(&levels[1]) && f(&levels[1]) > f(&levels[2]);
    let phase_ok = dec(|l| l.0);
    let momentum_ok = dec(|l| l.1);
    CriterionResult::new(
        10,
        "weak-form residual refinement",
        phase_ok && momentum_ok,
        format!(
            "phase residuals {:.3e} -> {:.3e} -> {:.3e}; momentum {:.3e} -> {:.3e} -> {:.3e}",
            levels[0].0, levels[1].0, levels[2].0, levels[0].1, levels[1].1, levels[2].1
        ),
    )
}

/// Criterion 11: byte-identical reruns and sweep/solo agreement to the last
/// emitted digit.
pub fn criterion_11_determinism() -> CriterionResult {
    let dir = tempfile::tempdir().unwrap();
    let base = ballistic_base(dir.path());

    // identical reruns -> identical bytes
    let mut cfg_a = base.clone();
    cfg_a.trajectory_path = dir.path().join("a.csv").display().to_string();
    cfg_a.fields_path = Some(dir.path().join("a_fields.csv").display().to_string());
    cmd_run_config(&cfg_a).unwrap_or_else(|e| panic!("{}", e.message));
    let bytes_a = std::fs::read(&cfg_a.trajectory_path).unwrap();
    let fields_a = std::fs::read(cfg_a.fields_path.as_ref().unwrap()).unwrap();
    let mut cfg_b = base.clone();
    cfg_b.trajectory_path = dir.path().join("b.csv").display().to_string();
    cfg_b.fields_path = Some(dir.path().join("b_fields.csv").display().to_string());
    cmd_run_config(&cfg_b).unwrap_or_else(|e| panic!("{}", e.message));
    let bytes_b = std::fs::read(&cfg_b.trajectory_path).unwrap();
    let fields_b = std::fs::read(cfg_b.fields_path.as_ref().unwrap()).unwrap();
    let reruns_ok = bytes_a == bytes_b && fields_a == fields_b;

    // a single-value sweep reproduces the solo run to the last digit
    let value = 3.0;
    let sweep_path = dir.path().join("single_sweep.csv");
    cmd_sweep_config(&base, SweepAxis::Rho, &[value], 1.0, sweep_path.to_str().unwrap())
        .unwrap_or_else(|e| panic!("{}", e.message));
    let sweep_text = std::fs::read_to_string(&sweep_path).unwrap();
    let sweep_row: Vec<&str> = sweep_text.lines().nth(1).unwrap().split(',').collect();

    let mut solo = SweepAxis::Rho.apply(&base, value);
    solo.trajectory_path = dir.path().join("solo.csv").display().to_string();
    cmd_run_config(&solo).unwrap_or_else(|e| panic!("{}", e.message));
    let solo_text = std::fs::read_to_string(&solo.trajectory_path).unwrap();
    let snap_line = solo_text
        .lines()
        .skip(1)
        .find(|line| line.split(',').next().unwrap().parse::<f64>().unwrap() >= 1.0 - 1e-9)
        .unwrap();
    let solo_cols: Vec<&str> = snap_line.split(',').collect();
    // sweep columns: param, phi_max, fatigue_probe; solo: t, phi_max @1, ... fatigue_probe @4
    let sweep_matches = sweep_row[1] == solo_cols[1] && sweep_row[2] == solo_cols[4];

    CriterionResult::new(
        11,
        "determinism (byte-identical reruns, sweep = solo)",
        reruns_ok && sweep_matches,
        format!("reruns byte-identical: {reruns_ok}; sweep row equals solo snapshot digits: {sweep_matches}"),
    )
}

/// Run every criterion in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1_maximum_principle(),
        criterion_2_null_uniqueness(),
        criterion_3_fatigue_identity(),
        criterion_4_dissipation(),
        criterion_5_density_ordering(),
        criterion_6_frequency_ordering(),
        criterion_7_landscape(),
        criterion_8_thermal_consistency(),
        criterion_9_wave_benchmark(),
        criterion_10_weak_residuals(),
        criterion_11_determinism(),
    ]
}

/// Print one line per criterion; true if everything passed.
pub fn report(results: &[CriterionResult]) -> bool {
    let mut all_ok = true;
    for r in results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("criterion {:02} {:<48} {} ({})", r.id, r.name, status, r.detail);
        all_ok &= r.passed;
    }
    all_ok
}
