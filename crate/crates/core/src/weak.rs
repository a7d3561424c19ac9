//! Space-time weak-form residuals, used as a verification oracle against the
//! stored field history of a run.
//!
//! Phase form: integral over time and space of
//!   rho phidot psidot + (1/kappa) phi_x psidot_x
//!   + F'(phi) * fatigue * psidot + F0 G'(phi) psidot
//! Momentum form: integral of
//!   rho uddot wdot + (1-phi_c)^2 a u_x wdot_x - rho b wdot
//! with test-function histories psi and w supplied by the caller. Both vanish
//! for an exact solution; on a discrete trajectory they shrink under
//! refinement.

use crate::error::{Result, SimError};
use crate::grid::Grid1D;
use crate::load::LoadProgram;
use crate::material::MaterialParams;
use crate::potentials::{clamp_phase, d_f, d_g};
use crate::trajectory::FieldHistory;

/// Central time difference of a snapshot series at index k (one-sided at the
/// ends).
fn time_deriv(series: &[Vec<f64>], times: &[f64], k: usize, i: usize) -> f64 {
    let m = series.len();
    if k == 0 {
        (series[1][i] - series[0][i]) / (times[1] - times[0])
    } else if k == m - 1 {
        (series[m - 1][i] - series[m - 2][i]) / (times[m - 1] - times[m - 2])
    } else {
        (series[k + 1][i] - series[k - 1][i]) / (times[k + 1] - times[k - 1])
    }
}

fn time_weight(times: &[f64], k: usize) -> f64 {
    let m = times.len();
    if k == 0 {
        0.5 * (times[1] - times[0])
    } else if k == m - 1 {
        0.5 * (times[m - 1] - times[m - 2])
    } else {
        0.5 * (times[k + 1] - times[k - 1])
    }
}

fn node_weight(n: usize, i: usize, h: f64) -> f64 {
    if i == 0 || i == n - 1 {
        0.5 * h
    } else {
        h
    }
}

/// Evaluate both weak-form residuals on a stored history with the supplied
/// test-function histories (same sample times and node counts).
pub fn weak_residual(
    history: &FieldHistory,
    params: &MaterialParams,
    grid: &Grid1D,
    load: &LoadProgram,
    test_phi: &[Vec<f64>],
    test_u: &[Vec<f64>],
) -> Result<(f64, f64)> {
    let m = history.len();
    if m < 3 {
        return Err(SimError::InvalidArgument(
            "weak residual needs at least 3 stored snapshots".into(),
        ));
    }
    if test_phi.len() != m || test_u.len() != m {
        return Err(SimError::InvalidArgument(format!(
            "mismatched history lengths: fields {m}, test_phi {}, test_u {}",
            test_phi.len(),
            test_u.len()
        )));
    }
    let n = grid.n_nodes();
    for (name, series) in [
        ("u", &history.u),
        ("v", &history.v),
        ("phi", &history.phi),
        ("fatigue", &history.fatigue),
    ] {
        if series.len() != m || series.iter().any(|s| s.len() != n) {
            return Err(SimError::InvalidArgument(format!(
                "history field {name} has inconsistent shape"
            )));
        }
    }
    if test_phi.iter().any(|s| s.len() != n) || test_u.iter().any(|s| s.len() != n) {
        return Err(SimError::InvalidArgument(
            "test functions must have one value per node".into(),
        ));
    }

    let h = grid.spacing();
    let times = &history.times;
    let rho = MaterialParams::node_values(&params.rho);
    let f0 = MaterialParams::node_values(&params.f0);
    let shape: Vec<f64> = load.shape_on_nodes(grid);

    let mut r_phase = 0.0;
    let mut r_momentum = 0.0;

    for k in 0..m {
        let wt = time_weight(times, k);
        let phi_k = &history.phi[k];
        let u_k = &history.u[k];
        let fat_k = &history.fatigue[k];
        let bt = load.amplitude * (load.omega * times[k]).sin();

        // nodal parts
        let mut phase_nodal = 0.0;
        let mut momentum_nodal = 0.0;
        for i in 0..n {
            let wx = node_weight(n, i, h);
            let phidot = time_deriv(&history.phi, times, k, i);
            let psidot = time_deriv(test_phi, times, k, i);
            phase_nodal += wx
                * (rho[i] * phidot + d_f(phi_k[i]) * fat_k[i] + f0[i] * d_g(phi_k[i]))
                * psidot;

            let uddot = time_deriv(&history.v, times, k, i);
            let wdot = time_deriv(test_u, times, k, i);
            momentum_nodal += wx * rho[i] * (uddot - shape[i] * bt) * wdot;
        }

        // face (gradient) parts
        let mut phase_faces = 0.0;
        let mut momentum_faces = 0.0;
        for j in 0..grid.n_cells() {
            let dphi = (phi_k[j + 1] - phi_k[j]) / h;
            let dpsidot = (time_deriv(test_phi, times, k, j + 1)
                - time_deriv(test_phi, times, k, j))
                / h;
            phase_faces += h * (1.0 / params.kappa[j]) * dphi * dpsidot;

            let pc = 0.5 * (clamp_phase(phi_k[j]) + clamp_phase(phi_k[j + 1]));
            let damage = (1.0 - pc) * (1.0 - pc);
            let du = (u_k[j + 1] - u_k[j]) / h;
            let dwdot =
                (time_deriv(test_u, times, k, j + 1) - time_deriv(test_u, times, k, j)) / h;
            momentum_faces += h * damage * params.a[j] * du * dwdot;
        }

        r_phase += wt * (phase_nodal + phase_faces);
        r_momentum += wt * (momentum_nodal + momentum_faces);
    }

    Ok((r_phase, r_momentum))
}

/// Convenience: residuals with the solution itself as both test functions.
pub fn self_test_residual(
    history: &FieldHistory,
    params: &MaterialParams,
    grid: &Grid1D,
    load: &LoadProgram,
) -> Result<(f64, f64)> {
    weak_residual(history, params, grid, load, &history.phi, &history.u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zero_history(m: usize, n: usize) -> FieldHistory {
        FieldHistory {
            times: (0..m).map(|k| k as f64 * 0.1).collect(),
            u: vec![vec![0.0; n]; m],
            v: vec![vec![0.0; n]; m],
            phi: vec![vec![0.0; n]; m],
            fatigue: vec![vec![0.0; n]; m],
            theta: None,
        }
    }

    #[test]
    fn zero_solution_zero_residual() {
        let grid = Grid1D::new(1.0, 8).unwrap();
        let params = MaterialParams::uniform(&grid, 1.0, 10.0, 0.5, 1.0);
        let hist = zero_history(5, grid.n_nodes());
        let tests: Vec<Vec<f64>> = (0..5)
            .map(|k| (0..grid.n_nodes()).map(|i| (k + i) as f64 * 0.01).collect())
            .collect();
        let (rp, rm) =
            weak_residual(&hist, &params, &grid, &LoadProgram::zero(), &tests, &tests).unwrap();
        assert_eq!(rp, 0.0);
        assert_eq!(rm, 0.0);
    }

    #[test]
    fn mismatched_lengths_rejected() {
        let grid = Grid1D::new(1.0, 8).unwrap();
        let params = MaterialParams::uniform(&grid, 1.0, 10.0, 0.5, 1.0);
        let hist = zero_history(5, grid.n_nodes());
        let tests = vec![vec![0.0; grid.n_nodes()]; 4];
        assert!(matches!(
            weak_residual(&hist, &params, &grid, &LoadProgram::zero(), &tests, &tests),
            Err(SimError::InvalidArgument(_))
        ));
    }

}
