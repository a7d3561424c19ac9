//! The evolving field state and admissibility validation.

use crate::error::{Result, SimError};
use crate::field_ops::all_finite;
use crate::grid::Grid1D;
use crate::material::MaterialParams;

/// One time slice of the simulation: displacement, velocity, phase,
/// the fatigue accumulator, the strain-history accumulator, and (in thermal
/// mode) the absolute temperature. All arrays are nodal.
///
/// The phase field is stored unclamped; the clamp is applied wherever it
/// enters a constitutive law.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldState {
    pub t: f64,
    pub u: Vec<f64>,
    pub v: Vec<f64>,
    pub phi: Vec<f64>,
    /// Fatigue accumulator (energy/volume; energy/(volume*temperature) in
    /// thermal mode).
    pub fatigue: Vec<f64>,
    /// History accumulator: running integral of phi_clamped_rate * a * u_x^2.
    pub hist_h: Vec<f64>,
    pub theta: Option<Vec<f64>>,
}

impl FieldState {
    pub fn n_nodes(&self) -> usize {
        self.u.len()
    }
}

/// A single invariant violation found by [`validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    /// Which input the violation concerns, e.g. `material.rho`.
    pub location: String,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

fn check_cell_field(
    out: &mut Vec<Violation>,
    name: &str,
    field: &[f64],
    n_cells: usize,
    strictly_positive: bool,
) {
    if field.len() != n_cells {
        out.push(Violation {
            location: format!("material.{name}"),
            message: format!("expected {n_cells} cell values, got {}", field.len()),
        });
        return;
    }
    if !all_finite(field) {
        out.push(Violation {
            location: format!("material.{name}"),
            message: "must be finite everywhere".into(),
        });
        return;
    }
    if strictly_positive {
        if field.iter().any(|&v| v <= 0.0) {
            out.push(Violation {
                location: format!("material.{name}"),
                message: format!("{name} must be > 0"),
            });
        }
    } else if field.iter().any(|&v| v < 0.0) {
        out.push(Violation {
            location: format!("material.{name}"),
            message: format!("{name} must be >= 0"),
        });
    }
}

/// Collect every invariant violation of the (params, grid, state) triple.
/// An empty list means the inputs are admissible; violations are data, not
/// failures.
pub fn validate(params: &MaterialParams, grid: &Grid1D, state: &FieldState) -> Vec<Violation> {
    let mut out = Vec::new();
    let n_cells = grid.n_cells();
    let n_nodes = grid.n_nodes();

    check_cell_field(&mut out, "rho", &params.rho, n_cells, true);
    check_cell_field(&mut out, "kappa", &params.kappa, n_cells, true);
    check_cell_field(&mut out, "F0", &params.f0, n_cells, false);
    check_cell_field(&mut out, "a", &params.a, n_cells, true);

    if let Some(th) = &params.thermal {
        let scalar = |out: &mut Vec<Violation>, name: &str, v: f64, strict: bool| {
            let bad = !v.is_finite() || if strict { v <= 0.0 } else { v < 0.0 };
            if bad {
                out.push(Violation {
                    location: format!("material.{name}"),
                    message: format!(
                        "{name} must be {} and finite",
                        if strict { "> 0" } else { ">= 0" }
                    ),
                });
            }
        };
        scalar(&mut out, "c", th.c, true);
        scalar(&mut out, "k_q", th.k_q, false);
        scalar(&mut out, "varkappa", th.varkappa, true);
        scalar(&mut out, "theta_ref", th.theta_ref, true);
    }

    for (name, field) in [
        ("u", &state.u),
        ("v", &state.v),
        ("phi", &state.phi),
        ("fatigue", &state.fatigue),
        ("hist_h", &state.hist_h),
    ] {
        if field.len() != n_nodes {
            out.push(Violation {
                location: format!("state.{name}"),
                message: format!("expected {n_nodes} node values, got {}", field.len()),
            });
        } else if !all_finite(field) {
            out.push(Violation {
                location: format!("state.{name}"),
                message: "must be finite everywhere".into(),
            });
        }
    }

    if state.u.len() == n_nodes && (state.u[0] != 0.0 || state.u[n_nodes - 1] != 0.0) {
        out.push(Violation {
            location: "state.u".into(),
            message: "boundary displacement must vanish".into(),
        });
    }

    if let Some(theta) = &state.theta {
        if theta.len() != n_nodes {
            out.push(Violation {
                location: "state.theta".into(),
                message: format!("expected {n_nodes} node values, got {}", theta.len()),
            });
        } else if theta.iter().any(|&v| !v.is_finite() || v <= 0.0) {
            out.push(Violation {
                location: "state.theta".into(),
                message: "temperature must be finite and > 0".into(),
            });
        }
    }

    if !state.t.is_finite() {
        out.push(Violation {
            location: "state.t".into(),
            message: "time must be finite".into(),
        });
    }

    out
}

/// Build the t = 0 state. Fatigue and history start at zero (virgin
/// reference); nonzero admissible u0/phi0 are accepted.
pub fn initial_state(
    grid: &Grid1D,
    u0: Vec<f64>,
    v0: Vec<f64>,
    phi0: Vec<f64>,
    theta0: Option<Vec<f64>>,
) -> Result<FieldState> {
    let n_nodes = grid.n_nodes();
    for (name, field) in [("u0", &u0), ("v0", &v0), ("phi0", &phi0)] {
        if field.len() != n_nodes {
            return Err(SimError::Precondition(format!(
                "{name} must have {n_nodes} node values, got {}",
                field.len()
            )));
        }
        if !all_finite(field) {
            return Err(SimError::Precondition(format!(
                "{name} must be finite everywhere"
            )));
        }
    }
    if phi0.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
        return Err(SimError::Precondition(
            "phi0 must lie in [0, 1] at every node".into(),
        ));
    }
    if u0[0] != 0.0 || u0[n_nodes - 1] != 0.0 {
        return Err(SimError::Precondition(
            "u0 must vanish at both boundary nodes".into(),
        ));
    }
    if let Some(theta) = &theta0 {
        if theta.len() != n_nodes {
            return Err(SimError::Precondition(format!(
                "theta0 must have {n_nodes} node values, got {}",
                theta.len()
            )));
        }
        if theta.iter().any(|&v| !v.is_finite() || v <= 0.0) {
            return Err(SimError::Precondition(
                "theta0 must be finite and > 0 everywhere".into(),
            ));
        }
    }

    Ok(FieldState {
        t: 0.0,
        u: u0,
        v: v0,
        phi: phi0,
        fatigue: vec![0.0; n_nodes],
        hist_h: vec![0.0; n_nodes],
        theta: theta0,
    })
}
