//! Time-periodic forcing: body force per unit mass and optional heat supply.

use crate::grid::Grid1D;

/// Spatial profile of a load, normalized so max |shape| = 1.
#[derive(Debug, Clone, PartialEq)]
pub enum LoadShape {
    Uniform,
    /// sin(pi x / L): pure fundamental mode.
    HalfSine,
    Gaussian {
        center: f64,
        width: f64,
    },
}

impl LoadShape {
    pub fn eval(&self, x: f64, length: f64) -> f64 {
        match self {
            LoadShape::Uniform => 1.0,
            LoadShape::HalfSine => (std::f64::consts::PI * x / length).sin(),
            LoadShape::Gaussian { center, width } => {
                let d = (x - center) / width;
                (-0.5 * d * d).exp()
            }
        }
    }
}

/// Time-constant volumetric heat supply r(x) = amplitude * shape(x).
#[derive(Debug, Clone, PartialEq)]
pub struct HeatSupply {
    pub amplitude: f64,
    pub shape: LoadShape,
}

/// Cyclic body force b(x, t) = amplitude * shape(x) * sin(omega t),
/// amplitude in force per unit mass.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadProgram {
    pub amplitude: f64,
    pub omega: f64,
    pub shape: LoadShape,
    pub heat_supply: Option<HeatSupply>,
}

impl LoadProgram {
    pub fn new(amplitude: f64, omega: f64, shape: LoadShape) -> Self {
        Self {
            amplitude,
            omega,
            shape,
            heat_supply: None,
        }
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0, LoadShape::Uniform)
    }

    pub fn with_heat_supply(mut self, supply: HeatSupply) -> Self {
        self.heat_supply = Some(supply);
        self
    }

    pub fn body_force(&self, x: f64, t: f64, length: f64) -> f64 {
        self.amplitude * self.shape.eval(x, length) * (self.omega * t).sin()
    }

    /// Shape sampled on the grid nodes; the time factor is applied per step.
    pub fn shape_on_nodes(&self, grid: &Grid1D) -> Vec<f64> {
        (0..grid.n_nodes())
            .map(|i| self.shape.eval(grid.x(i), grid.length()))
            .collect()
    }

    pub fn heat_supply_on_nodes(&self, grid: &Grid1D) -> Vec<f64> {
        match &self.heat_supply {
            Some(s) => (0..grid.n_nodes())
                .map(|i| s.amplitude * s.shape.eval(grid.x(i), grid.length()))
                .collect(),
            None => vec![0.0; grid.n_nodes()],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        /// Cyclic loads repeat after one period to near machine precision.
        #[test]
        fn periodicity(
            amplitude in 0.01f64..10.0,
            omega in 0.1f64..10.0,
            x in 0.0f64..1.0,
            t in 0.0f64..50.0,
        ) {
            let load = LoadProgram::new(amplitude, omega, LoadShape::HalfSine);
            let period = 2.0 * std::f64::consts::PI / omega;
            let b0 = load.body_force(x, t, 1.0);
            let b1 = load.body_force(x, t + period, 1.0);
            let scale = amplitude.max(b0.abs());
            prop_assert!((b0 - b1).abs() <= 1e-12 * scale.max(1.0) + 1e-12 * amplitude);
        }
    }

    #[test]
    fn shapes_peak_at_one() {
        let g = Grid1D::new(1.0, 8).unwrap();
        let half = LoadProgram::new(1.0, 1.0, LoadShape::HalfSine).shape_on_nodes(&g);
        assert!((half[4] - 1.0).abs() < 1e-12);
        let gauss = LoadShape::Gaussian {
            center: 0.5,
            width: 0.1,
        };
        assert!((gauss.eval(0.5, 1.0) - 1.0).abs() < 1e-15);
        assert!(gauss.eval(0.0, 1.0) < 1.0);
    }
}
