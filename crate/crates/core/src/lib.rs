//! Phase-field damage and fatigue in a 1D elastic bar.
//!
//! The order parameter evolves by a Ginzburg-Landau equation driven by an
//! accumulated fatigue functional; stiffness degrades quadratically in the
//! clamped phase; an optional non-isothermal mode adds a heat equation,
//! thermal stress, and temperature-weighted fatigue. Alongside the solver,
//! the crate audits the model's structural guarantees numerically: phase
//! bounds, null-solution uniqueness, a closed-form fatigue identity, the
//! dissipation inequality, and weak-form residuals.

pub mod energy;
pub mod error;
pub mod fatigue;
pub mod field_ops;
pub mod grid;
pub mod load;
pub mod material;
pub mod parallel;
pub mod potentials;
pub mod solver;
pub mod state;
pub mod sweep;
pub mod trajectory;
pub mod weak;

pub use error::{Result, SimError};
pub use grid::Grid1D;
pub use load::{HeatSupply, LoadProgram, LoadShape};
pub use material::{MaterialParams, ThermalParams};
pub use solver::{run, stable_dt, PhaseScheme, RunOutput, StepControls};
pub use state::{initial_state, validate, FieldState, Violation};
pub use trajectory::{FieldHistory, Sample, Trajectory};
