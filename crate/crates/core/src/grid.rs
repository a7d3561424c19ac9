//! The 1D node-centered grid.

use crate::error::{Result, SimError};

/// Uniform 1D grid over [0, L] with `n_cells` cells and `n_cells + 1` nodes.
///
/// Material coefficients live on cells; evolving fields live on nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid1D {
    length: f64,
    n_cells: usize,
}

impl Grid1D {
    pub fn new(length: f64, n_cells: usize) -> Result<Self> {
        if !(length.is_finite() && length > 0.0) {
            return Err(SimError::InvalidArgument(format!(
                "grid length must be finite and > 0, got {length}"
            )));
        }
        if n_cells < 4 {
            return Err(SimError::InvalidArgument(format!(
                "grid needs at least 4 cells, got {n_cells}"
            )));
        }
        Ok(Self { length, n_cells })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn n_nodes(&self) -> usize {
        self.n_cells + 1
    }

    /// Cell width.
    pub fn spacing(&self) -> f64 {
        self.length / self.n_cells as f64
    }

    /// Position of node `i`.
    pub fn x(&self, i: usize) -> f64 {
        // endpoint-exact: avoids length*?, drift at i = n_cells
        let t = i as f64 / self.n_cells as f64;
        self.length * t
    }

    pub fn node_positions(&self) -> Vec<f64> {
        (0..self.n_nodes()).map(|i| self.x(i)).collect()
    }
}
