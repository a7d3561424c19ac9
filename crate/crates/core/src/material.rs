//! Material coefficients: per-cell fields plus optional thermal constants.

use crate::grid::Grid1D;

/// Thermal constants for the non-isothermal extension.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermalParams {
    /// Specific heat c > 0.
    pub c: f64,
    /// Heat conductivity k_q >= 0 (Fourier flux q = -k_q * theta_x).
    pub k_q: f64,
    /// Thermal-stress coupling coefficient > 0.
    pub varkappa: f64,
    /// Reference absolute temperature > 0; the CLI uses it as the default
    /// initial temperature.
    pub theta_ref: f64,
}

/// Piecewise-constant (per-cell) material fields.
///
/// `kappa` enters the phase flux as (1/kappa) * phi_x, so larger kappa means
/// weaker diffusion. `f0` is the fatigue threshold field weighting G'.
#[derive(Debug, Clone, PartialEq)]
pub struct MaterialParams {
    pub rho: Vec<f64>,
    pub kappa: Vec<f64>,
    pub f0: Vec<f64>,
    pub a: Vec<f64>,
    pub thermal: Option<ThermalParams>,
}

impl MaterialParams {
    /// Homogeneous material.
    pub fn uniform(grid: &Grid1D, rho: f64, kappa: f64, f0: f64, a: f64) -> Self {
        let n = grid.n_cells();
        Self {
            rho: vec![rho; n],
            kappa: vec![kappa; n],
            f0: vec![f0; n],
            a: vec![a; n],
            thermal: None,
        }
    }

    pub fn with_thermal(mut self, thermal: ThermalParams) -> Self {
        self.thermal = Some(thermal);
        self
    }

    /// Adjacent-cell mean of a per-cell field, one value per node.
    /// Boundary nodes take the single adjacent cell.
    pub fn node_values(cells: &[f64]) -> Vec<f64> {
        let n = cells.len();
        let mut out = Vec::with_capacity(n + 1);
        out.push(cells[0]);
        for i in 1..n {
            out.push(0.5 * (cells[i - 1] + cells[i]));
        }
        out.push(cells[n - 1]);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_values_average_neighbours() {
        let cells = [1.0, 3.0, 5.0, 7.0];
        let nodes = MaterialParams::node_values(&cells);
        assert_eq!(nodes, vec![1.0, 2.0, 4.0, 6.0, 7.0]);
    }
}
