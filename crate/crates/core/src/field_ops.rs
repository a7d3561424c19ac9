//! Discrete operators on nodal fields: differences, quadrature, clamping.

use crate::parallel::map_indexed;
use crate::potentials::clamp_phase;

/// Nodal spatial derivative: central differences in the interior, one-sided
/// at the boundaries.
pub fn node_gradient(f: &[f64], h: f64) -> Vec<f64> {
    let n = f.len();
    debug_assert!(n >= 2);
    map_indexed(n, |i| {
        if i == 0 {
            (f[1] - f[0]) / h
        } else if i == n - 1 {
            (f[n - 1] - f[n - 2]) / h
        } else {
            (f[i + 1] - f[i - 1]) / (2.0 * h)
        }
    })
}

/// Trapezoidal quadrature of a nodal field over the domain.
pub fn trapz(f: &[f64], h: f64) -> f64 {
    let n = f.len();
    let mut s = 0.5 * (f[0] + f[n - 1]);
    for &v in &f[1..n - 1] {
        s += v;
    }
    s * h
}

/// Node-wise clamp of a phase field to [0, 1].
pub fn clamped(phi: &[f64]) -> Vec<f64> {
    map_indexed(phi.len(), |i| clamp_phase(phi[i]))
}

pub fn max_abs(f: &[f64]) -> f64 {
    f.iter().fold(0.0f64, |m, &v| m.max(v.abs()))
}

pub fn all_finite(f: &[f64]) -> bool {
    f.iter().all(|v| v.is_finite())
}

/// Face-based gradient-energy sum: sum_j h * w_j * ((f[j+1]-f[j])/h)^2 with
/// per-cell weights w. This is the discrete form of the gradient part of the
/// free energies and must match the solver's flux stencil.
pub fn face_gradient_energy(f: &[f64], cell_weights: &[f64], h: f64) -> f64 {
    let mut s = 0.0;
    for j in 0..cell_weights.len() {
        let d = (f[j + 1] - f[j]) / h;
        s += h * cell_weights[j] * d * d;
    }
    s
}
