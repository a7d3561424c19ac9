//! Sampled diagnostics of a run, plus optional full field snapshots.

/// One sampled row of diagnostics. The audit quantities (p_m, p_s,
/// dissipation_residual) refer to the step interval ending at `t`; they are
/// zero on the first row.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub phi_max: f64,
    pub phi_min: f64,
    pub phi_probe: f64,
    pub fatigue_probe: f64,
    pub kinetic_energy: f64,
    pub free_energy: f64,
    pub psi_f: f64,
    pub p_m: f64,
    pub p_s: f64,
    pub dissipation_residual: f64,
    /// Stress on the first face, sigma = (1 - phi_clamped)^2 a u_x (+ thermal
    /// part); the reaction force at the left support.
    pub boundary_stress: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Trajectory {
    pub probe_node: usize,
    pub samples: Vec<Sample>,
}

impl Trajectory {
    pub fn times_strictly_increasing(&self) -> bool {
        self.samples.windows(2).all(|w| w[1].t > w[0].t)
    }

    pub fn max_phi_over_run(&self) -> f64 {
        self.samples
            .iter()
            .fold(f64::NEG_INFINITY, |m, s| m.max(s.phi_max))
    }

    pub fn min_phi_over_run(&self) -> f64 {
        self.samples
            .iter()
            .fold(f64::INFINITY, |m, s| m.min(s.phi_min))
    }

    /// Worst (most negative) dissipation residual over the sampled steps,
    /// skipping the empty first row.
    pub fn min_dissipation_residual(&self) -> f64 {
        self.samples
            .iter()
            .skip(1)
            .fold(f64::INFINITY, |m, s| m.min(s.dissipation_residual))
    }
}

/// Full field snapshots at the sample times, for weak-form residual
/// evaluation and field CSV output.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FieldHistory {
    pub times: Vec<f64>,
    pub u: Vec<Vec<f64>>,
    pub v: Vec<Vec<f64>>,
    pub phi: Vec<Vec<f64>>,
    pub fatigue: Vec<Vec<f64>>,
    pub theta: Option<Vec<Vec<f64>>>,
}

impl FieldHistory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}
