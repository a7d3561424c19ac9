//! The run / sweep / landscape commands behind the CLI.

use std::fs;
use std::path::Path;

use fatiguefield::energy::energy_landscape;
use fatiguefield::sweep::run_batch;
use fatiguefield::SimError;

use crate::config::{parse_config, RunConfig, SweepAxis};
use crate::csv_out::{fields_csv, landscape_csv, summarize_run, sweep_csv, trajectory_csv, SweepRow};

/// Process exit status: 0 success, 1 validation error, 2 runtime divergence.
#[derive(Debug)]
pub struct CmdError {
    pub exit_code: i32,
    pub message: String,
}

impl CmdError {
    fn validation(message: impl Into<String>) -> Self {
        Self {
            exit_code: 1,
            message: message.into(),
        }
    }

    fn from_sim(err: SimError) -> Self {
        let exit_code = match err {
            SimError::Divergence { .. } | SimError::SingularTemperature { .. } => 2,
            _ => 1,
        };
        Self {
            exit_code,
            message: err.to_string(),
        }
    }
}

pub type CmdResult = Result<(), CmdError>;

fn read_config(path: &Path) -> Result<RunConfig, CmdError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CmdError::validation(format!("cannot read {}: {e}", path.display())))?;
    parse_config(&text).map_err(|errs| {
        let joined = errs
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join("\n");
        CmdError::validation(format!("invalid configuration:\n{joined}"))
    })
}

fn write_file(path: &str, contents: &str) -> Result<(), CmdError> {
    if let Some(parent) = Path::new(path).parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)
                .map_err(|e| CmdError::validation(format!("cannot create {}: {e}", parent.display())))?;
        }
    }
    fs::write(path, contents)
        .map_err(|e| CmdError::validation(format!("cannot write {path}: {e}")))
}

/// Run one configuration and write its trajectory CSV (plus optional field
/// snapshots).
pub fn cmd_run(config_path: &Path) -> CmdResult {
    let config = read_config(config_path)?;
    cmd_run_config(&config)
}

pub fn cmd_run_config(config: &RunConfig) -> CmdResult {
    let mut setup = config
        .build()
        .map_err(|errs| CmdError::validation(errs[0].to_string()))?;
    setup.controls.record_fields = config.fields_path.is_some();
    let out = setup.execute().map_err(CmdError::from_sim)?;
    write_file(&config.trajectory_path, &trajectory_csv(&out.trajectory))?;
    if let Some(fields_path) = &config.fields_path {
        let history = out.history.as_ref().expect("history recorded");
        write_file(fields_path, &fields_csv(history, &setup.grid.node_positions()))?;
    }
    Ok(())
}

/// Sweep one parameter axis over a list of values; write a sorted summary
/// CSV. Member runs execute concurrently. Any member failure still writes
/// the successful rows, then reports the failure.
pub fn cmd_sweep(
    config_path: &Path,
    axis_name: &str,
    values: &[f64],
    snapshot_time: f64,
    out_path: &str,
) -> CmdResult {
    let base = read_config(config_path)?;
    let axis = SweepAxis::parse(axis_name).ok_or_else(|| {
        CmdError::validation(format!(
            "unknown sweep axis `{axis_name}` (expected rho | omega | amplitude | F0 | kappa)"
        ))
    })?;
    cmd_sweep_config(&base, axis, values, snapshot_time, out_path)
}

pub fn cmd_sweep_config(
    base: &RunConfig,
    axis: SweepAxis,
    values: &[f64],
    snapshot_time: f64,
    out_path: &str,
) -> CmdResult {
    if values.is_empty() {
        return Err(CmdError::validation("sweep needs at least one value"));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(CmdError::validation("sweep values must be finite"));
    }
    if snapshot_time > base.t_end {
        return Err(CmdError::validation(format!(
            "snapshot time {snapshot_time} exceeds t_end {}",
            base.t_end
        )));
    }

    let mut setups = Vec::with_capacity(values.len());
    for &v in values {
        let member = axis.apply(base, v);
        let setup = member
            .build()
            .map_err(|errs| CmdError::validation(format!("value {v}: {}", errs[0])))?;
        setups.push(setup);
    }

    let results = run_batch(&setups);
    let mut rows: Vec<SweepRow> = Vec::new();
    let mut failure: Option<CmdError> = None;
    for (&v, result) in values.iter().zip(&results) {
        match result {
            Ok(out) => {
                if let Some(row) = summarize_run(&out.trajectory, v, snapshot_time) {
                    rows.push(row);
                }
            }
            Err(e) => {
                if failure.is_none() {
                    failure = Some(CmdError {
                        exit_code: CmdError::from_sim_code(e),
                        message: format!("sweep member {axis:?} = {v} failed: {e}"),
                    });
                }
            }
        }
    }
    rows.sort_by(|a, b| a.param_value.total_cmp(&b.param_value));
    write_file(out_path, &sweep_csv(&rows))?;
    match failure {
        Some(f) => Err(f),
        None => Ok(()),
    }
}

impl CmdError {
    fn from_sim_code(err: &SimError) -> i32 {
        match err {
            SimError::Divergence { .. } | SimError::SingularTemperature { .. } => 2,
            _ => 1,
        }
    }
}

/// Write one landscape CSV per fatigue value into `out_dir`, named
/// `landscape_<index>.csv` in list order.
pub fn cmd_landscape(f0: f64, fatigue_values: &[f64], samples: usize, out_dir: &str) -> CmdResult {
    if samples < 2 {
        return Err(CmdError::validation("landscape needs samples >= 2"));
    }
    if !(f0.is_finite() && f0 >= 0.0) {
        return Err(CmdError::validation("F0 must be finite and >= 0"));
    }
    if fatigue_values.is_empty() {
        return Err(CmdError::validation("landscape needs at least one fatigue value"));
    }
    fs::create_dir_all(out_dir)
        .map_err(|e| CmdError::validation(format!("cannot create {out_dir}: {e}")))?;
    for (idx, &fatigue) in fatigue_values.iter().enumerate() {
        if !fatigue.is_finite() {
            return Err(CmdError::validation("fatigue values must be finite"));
        }
        let curve = energy_landscape(f0, fatigue, samples);
        let path = format!("{out_dir}/landscape_{idx:02}.csv");
        write_file(&path, &landscape_csv(&curve))?;
    }
    Ok(())
}

pub fn parse_value_list(raw: &str) -> Result<Vec<f64>, CmdError> {
    raw.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| CmdError::validation(format!("bad value `{s}` in list")))
        })
        .collect()
}
