//! Deterministic CSV emission. Floats are written with Rust's shortest
//! round-trip formatting, so identical runs produce byte-identical files.

use std::fmt::Write as _;

use fatiguefield::{FieldHistory, Trajectory};

pub const TRAJECTORY_HEADER: &str =
    "t,phi_max,phi_min,phi_probe,fatigue_probe,kinetic_energy,free_energy,psi_F,P_m,P_s,dissipation_residual";

pub fn trajectory_csv(trajectory: &Trajectory) -> String {
    let mut out = String::new();
    out.push_str(TRAJECTORY_HEADER);
    out.push('\n');
    for s in &trajectory.samples {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            s.t,
            s.phi_max,
            s.phi_min,
            s.phi_probe,
            s.fatigue_probe,
            s.kinetic_energy,
            s.free_energy,
            s.psi_f,
            s.p_m,
            s.p_s,
            s.dissipation_residual
        );
    }
    out
}

/// One row of a sweep summary.
pub struct SweepRow {
    pub param_value: f64,
    pub phi_max_at_snapshot: f64,
    pub fatigue_probe_at_snapshot: f64,
    /// None = the phase never reached 0.9 (emitted as an empty field).
    pub time_phi_reaches: Option<f64>,
}

pub const SWEEP_HEADER: &str =
    "param_value,phi_max_at_snapshot,fatigue_probe_at_snapshot,time_phi_reaches_0.9";

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::new();
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for r in rows {
        let reach = r.time_phi_reaches.map(|t| t.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.param_value, r.phi_max_at_snapshot, r.fatigue_probe_at_snapshot, reach
        );
    }
    out
}

pub fn landscape_csv(curve: &[(f64, f64)]) -> String {
    let mut out = String::from("phi,energy_density\n");
    for (phi, val) in curve {
        let _ = writeln!(out, "{phi},{val}");
    }
    out
}

/// Long-format field snapshots: one row per (sample time, node).
pub fn fields_csv(history: &FieldHistory, node_positions: &[f64]) -> String {
    let thermal = history.theta.is_some();
    let mut out = String::from(if thermal {
        "t,x,u,v,phi,fatigue,theta\n"
    } else {
        "t,x,u,v,phi,fatigue\n"
    });
    for k in 0..history.len() {
        for (i, &x) in node_positions.iter().enumerate() {
            if let Some(theta) = &history.theta {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    history.times[k],
                    x,
                    history.u[k][i],
                    history.v[k][i],
                    history.phi[k][i],
                    history.fatigue[k][i],
                    theta[k][i]
                );
            } else {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    history.times[k],
                    x,
                    history.u[k][i],
                    history.v[k][i],
                    history.phi[k][i],
                    history.fatigue[k][i]
                );
            }
        }
    }
    out
}

/// Locate the first sample at or after the snapshot time and summarize it,
/// with the 0.9-crossing time interpolated linearly between samples.
pub fn summarize_run(
    trajectory: &Trajectory,
    param_value: f64,
    snapshot_time: f64,
) -> Option<SweepRow> {
    let snap = trajectory
        .samples
        .iter()
        .find(|s| s.t >= snapshot_time - 1e-9)?;
    let mut reach = None;
    for (k, s) in trajectory.samples.iter().enumerate() {
        if s.phi_max >= 0.9 {
            reach = Some(if k == 0 {
                s.t
            } else {
                let prev = &trajectory.samples[k - 1];
                prev.t + (0.9 - prev.phi_max) * (s.t - prev.t) / (s.phi_max - prev.phi_max)
            });
            break;
        }
    }
    Some(SweepRow {
        param_value,
        phi_max_at_snapshot: snap.phi_max,
        fatigue_probe_at_snapshot: snap.fatigue_probe,
        time_phi_reaches: reach,
    })
}
