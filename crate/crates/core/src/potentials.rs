//! Damage potentials and the clamped phase.
//!
//! The order parameter is free in storage; only its clamp to [0, 1] enters
//! constitutive laws. The two potentials are
//!
//! ```text
//! F(phi) = -phi_clamped
//! G(phi) = phi^2 - phi^3/6   on [0, 1],   5/6 above,   0 below
//! ```
//!
//! with derivatives taken branch-wise: F' = -1 and G' = 2*phi - phi^2/2 on the
//! closed interval [0, 1], zero outside. G' is deliberately discontinuous at
//! phi = 1 (it jumps from 3/2 to 0); nothing here is smoothed, since the
//! bound-preservation argument leans on the hard clamp.
//!
//! Non-finite inputs propagate NaN; field validation and the solver's
//! divergence checks reject them upstream.

/// Clamp the phase to [0, 1].
#[inline]
pub fn clamp_phase(phi: f64) -> f64 {
    phi.clamp(0.0, 1.0)
}

/// F(phi) = -clamp(phi).
#[inline]
pub fn potential_f(phi: f64) -> f64 {
    -clamp_phase(phi)
}

/// G(phi): quadratic-cubic well on [0, 1], flat branches outside.
#[inline]
pub fn potential_g(phi: f64) -> f64 {
    if phi < 0.0 {
        0.0
    } else if phi > 1.0 {
        5.0 / 6.0
    } else {
        phi * phi - phi * phi * phi / 6.0
    }
}

/// F'(phi): -1 on the closed interval [0, 1], 0 outside.
#[inline]
pub fn d_f(phi: f64) -> f64 {
    if (0.0..=1.0).contains(&phi) {
        -1.0
    } else {
        0.0
    }
}

/// G'(phi): 2*phi - phi^2/2 on the closed interval [0, 1], 0 outside.
#[inline]
pub fn d_g(phi: f64) -> f64 {
    if (0.0..=1.0).contains(&phi) {
        2.0 * phi - 0.5 * phi * phi
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn clamp_cases() {
        assert_eq!(clamp_phase(0.5), 0.5);
        assert_eq!(clamp_phase(-0.3), 0.0);
        assert_eq!(clamp_phase(1.7), 1.0);
    }

    #[test]
    fn potential_f_cases() {
        assert_eq!(potential_f(0.0), 0.0);
        assert_eq!(potential_f(0.5), -0.5);
        assert_eq!(potential_f(2.0), -1.0);
    }

    #[test]
    fn potential_g_cases() {
        assert_eq!(potential_g(1.0), 5.0 / 6.0);
        assert_eq!(potential_g(0.5), 0.25 - 0.125 / 6.0);
        assert_eq!(potential_g(-1.0), 0.0);
    }

    #[test]
    fn d_f_cases() {
        assert_eq!(d_f(0.5), -1.0);
        assert_eq!(d_f(1.5), 0.0);
        assert_eq!(d_f(-0.1), 0.0);
        // closed-interval convention at the breakpoints
        assert_eq!(d_f(0.0), -1.0);
        assert_eq!(d_f(1.0), -1.0);
    }

    #[test]
    fn d_g_cases() {
        assert_eq!(d_g(0.0), 0.0);
        assert_eq!(d_g(1.0), 1.5);
        assert_eq!(d_g(3.0), 0.0);
    }

    #[test]
    fn g_continuous_at_breakpoints() {
        let eps = 1e-8;
        assert!((potential_g(1.0 + eps) - potential_g(1.0 - eps)).abs() < 1e-7);
        assert!((potential_g(-eps) - potential_g(eps)).abs() < 1e-7);
        assert!((potential_f(1.0 + eps) - potential_f(1.0 - eps)).abs() < 1e-7);
        assert!((potential_f(-eps) - potential_f(eps)).abs() < 1e-7);
    }

    #[test]
    fn nan_propagates() {
        assert!(clamp_phase(f64::NAN).is_nan());
        assert!(potential_f(f64::NAN).is_nan());
    }

    proptest! {
        #[test]
        fn clamp_idempotent(x in -1e6f64..1e6) {
            prop_assert_eq!(clamp_phase(clamp_phase(x)), clamp_phase(x));
        }

        #[test]
        fn derivative_signs(x in -10.0f64..10.0) {
            prop_assert!(d_g(x) >= 0.0);
            prop_assert!(d_f(x) <= 0.0);
        }

        #[test]
        fn g_matches_central_difference(x in 0.001f64..0.999) {
            let h = 1e-5;
            let fd = (potential_g(x + h) - potential_g(x - h)) / (2.0 * h);
            prop_assert!((fd - d_g(x)).abs() < 1e-8);
        }
    }
}
