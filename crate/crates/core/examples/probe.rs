// scratch tuning probe - removed before release
use fatiguefield::energy::worst_dissipation_residual;
use fatiguefield::fatigue::fatigue_elastic_closed_form;
use fatiguefield::*;

fn zero_state(grid: &Grid1D) -> FieldState {
    let n = grid.n_nodes();
    initial_state(grid, vec![0.0; n], vec![0.0; n], vec![0.0; n], None).unwrap()
}

fn identity_run(n_cells: usize, kappa: f64, f0: f64, b: f64, omega: f64, t_end: f64, dt_factor: f64) {
    let grid = Grid1D::new(1.0, n_cells).unwrap();
    let params = MaterialParams::uniform(&grid, 1.0, kappa, f0, 1.0);
    let load = LoadProgram::new(b, omega, LoadShape::HalfSine);
    let dt = stable_dt(&params, &grid) * 0.5 * dt_factor;
    let mut controls = StepControls::new(dt, t_end);
    controls.sample_every = 1;
    controls.record_fields = true;
    let out = run(&params, &grid, &load, &controls, &zero_state(&grid), false).unwrap();
    let cf = fatigue_elastic_closed_form(&out.final_state, &params, &grid);
    let err = out
        .final_state
        .fatigue
        .iter()
        .zip(&cf)
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    // min phase increment over history
    let hist = out.history.unwrap();
    let mut min_dphi = f64::INFINITY;
    for k in 1..hist.len() {
        for i in 0..grid.n_nodes() {
            min_dphi = min_dphi.min(hist.phi[k][i] - hist.phi[k - 1][i]);
        }
    }
    let steps = ((t_end / dt) - 1e-9).ceil();
    println!(
        "identity n={n_cells} kappa={kappa} dtf={dt_factor}: dt={dt:.4e} steps={steps} phi_max={:.4} fat_max={:.4e} err={err:.4e} tol={:.3e} min_dphi={min_dphi:.3e}",
        out.trajectory.max_phi_over_run(),
        out.final_state.fatigue.iter().fold(0.0f64, |m, &v| m.max(v)),
        10.0 * dt * dt * steps,
    );
}

fn dissipation_run(n_cells: usize, kappa: f64, f0: f64, b: f64, omega: f64, t_end: f64, dt_factor: f64) -> f64 {
    let grid = Grid1D::new(1.0, n_cells).unwrap();
    let params = MaterialParams::uniform(&grid, 1.0, kappa, f0, 1.0);
    let load = LoadProgram::new(b, omega, LoadShape::HalfSine);
    let dt = stable_dt(&params, &grid) * 0.5 * dt_factor;
    let mut controls = StepControls::new(dt, t_end);
    controls.sample_every = 1;
    let out = run(&params, &grid, &load, &controls, &zero_state(&grid), false).unwrap();
    let worst = out.trajectory.min_dissipation_residual();
    println!(
        "dissipation dtf={dt_factor}: dt={dt:.4e} phi_max={:.3e} worst_resid={worst:.4e}",
        out.trajectory.max_phi_over_run()
    );
    worst
}

fn sweep_order(axis: &str, values: &[f64], a: f64, kappa: f64, f0: f64, b: f64, omega: f64, t_end: f64, n_cells: usize, u0_amp: f64) {
    let grid = Grid1D::new(1.0, n_cells).unwrap();
    print!("sweep {axis} a={a} f0={f0} B={b} w={omega} T={t_end} u0={u0_amp}:");
    for &v in values {
        let (rho, om) = match axis {
            "rho" => (v, omega),
            "omega" => (1.0, v),
            _ => unreachable!(),
        };
        let params = MaterialParams::uniform(&grid, rho, kappa, f0, a);
        let load = LoadProgram::new(b, om, LoadShape::HalfSine);
        let dt = stable_dt(&params, &grid) * 0.5;
        let mut controls = StepControls::new(dt, t_end);
        controls.sample_every = 20;
        let n = grid.n_nodes();
        let mut u0 = vec![0.0; n];
        for i in 1..n - 1 {
            u0[i] = u0_amp * (std::f64::consts::PI * grid.x(i)).sin();
        }
        let initial = initial_state(&grid, u0, vec![0.0; n], vec![0.0; n], None).unwrap();
        let out = run(&params, &grid, &load, &controls, &initial, false).unwrap();
        let last = out.trajectory.samples.last().unwrap();
        print!(" {:.5e}", last.phi_max);
    }
    println!();
}

fn frozen_elastic_residual(dt: f64, t_end: f64, omega: f64, b: f64) {
    let grid = Grid1D::new(1.0, 32).unwrap();
    let params = MaterialParams::uniform(&grid, 1.0, 50.0, 0.3, 1.0);
    let load = LoadProgram::new(b, omega, LoadShape::HalfSine);
    let mut controls = StepControls::new(dt, t_end);
    controls.sample_every = 1;
    controls.freeze_phase = true;
    let out = run(&params, &grid, &load, &controls, &zero_state(&grid), false).unwrap();
    let worst = out
        .trajectory
        .samples
        .iter()
        .skip(1)
        .fold(0.0f64, |m, s| m.max(s.dissipation_residual.abs()));
    println!("frozen elastic dt={dt:.2e}: max |residual| = {worst:.3e}");
}

fn main() {
    println!("--- fatigue identity (criterion 3 candidates) ---");
    identity_run(48, 10000.0, 0.0, 0.32, 2.0, 5.0 * std::f64::consts::PI, 1.0);
    identity_run(48, 10000.0, 0.0, 0.32, 2.0, 5.0 * std::f64::consts::PI, 0.5);
    identity_run(48, 10000.0, 0.0, 0.32, 2.0, 5.0 * std::f64::consts::PI, 0.25);

    println!("--- dissipation refinement (criterion 4 candidates) ---");
    for b in [0.02, 0.01, 0.005] {
        let w1 = dissipation_run(32, 50.0, 0.02, b, 1.0, 10.0 * std::f64::consts::PI, 1.0);
        let w2 = dissipation_run(32, 50.0, 0.02, b, 1.0, 10.0 * std::f64::consts::PI, 0.5);
        let w4 = dissipation_run(32, 50.0, 0.02, b, 1.0, 10.0 * std::f64::consts::PI, 0.25);
        println!("  B={b}: neg parts {:.3e} {:.3e} {:.3e}", (-w1).max(0.0), (-w2).max(0.0), (-w4).max(0.0));
    }

    println!("--- frozen-phase elastic residual (criterion 4 exactness) ---");
    frozen_elastic_residual(1e-4, 3.0, 2.0, 0.3);
    frozen_elastic_residual(1e-4, 3.0, 1.0, 0.2);
    frozen_elastic_residual(5e-5, 3.0, 1.0, 0.2);

    println!("--- rho sweep (criterion 5): want strictly decreasing ---");
    for t_end in [1.0, 1.5, 2.0, 3.0, 5.0] {
        sweep_order("rho", &[1.0, 2.0, 3.0, 4.0, 5.0], 1.0, 50.0, 0.01, 2.0, 2.0, t_end, 48, 0.0);
        sweep_order("rho", &[2.0, 4.0, 6.0, 8.0, 10.0], 1.0, 50.0, 0.01, 2.0, 2.0, t_end, 48, 0.0);
    }

    println!("--- omega sweep (criterion 6): want nondecreasing ---");
    sweep_order("omega", &[1.0, 2.0, 3.0, 4.0, 5.0], 5.0, 50.0, 0.2, 0.5, 0.0, 26.0, 48, 0.0);
    sweep_order("omega", &[1.0, 2.0, 3.0, 4.0, 5.0], 5.0, 50.0, 0.01, 0.5, 0.0, 26.0, 48, 0.0);
}
