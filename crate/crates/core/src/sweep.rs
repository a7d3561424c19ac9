//! Batch execution of independent runs. Each run owns its state; with the
//! `parallel` feature the batch fans out over rayon, and results come back
//! in input order either way, so summaries are identical in both builds.

use crate::error::Result;
use crate::grid::Grid1D;
use crate::load::LoadProgram;
use crate::material::MaterialParams;
use crate::solver::{run, RunOutput, StepControls};
use crate::state::FieldState;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Everything one run needs.
#[derive(Debug, Clone)]
pub struct RunSetup {
    pub params: MaterialParams,
    pub grid: Grid1D,
    pub load: LoadProgram,
    pub controls: StepControls,
    pub initial: FieldState,
    pub thermal: bool,
}

impl RunSetup {
    pub fn execute(&self) -> Result<RunOutput> {
        run(
            &self.params,
            &self.grid,
            &self.load,
            &self.controls,
            &self.initial,
            self.thermal,
        )
    }
}

/// Sequential batch executor (always available; the fallback path).
pub fn run_batch_seq(setups: &[RunSetup]) -> Vec<Result<RunOutput>> {
    setups.iter().map(RunSetup::execute).collect()
}

/// Parallel batch executor.
#[cfg(feature = "parallel")]
pub fn run_batch_par(setups: &[RunSetup]) -> Vec<Result<RunOutput>> {
    setups.par_iter().map(RunSetup::execute).collect()
}

/// Run a batch of independent setups, parallel when the feature is enabled.
pub fn run_batch(setups: &[RunSetup]) -> Vec<Result<RunOutput>> {
    #[cfg(feature = "parallel")]
    {
        run_batch_par(setups)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_batch_seq(setups)
    }
}
