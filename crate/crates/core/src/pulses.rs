//! Gaussian drive envelopes and the Stokes/pump mixing angle.
//!
//! The two legs of the Raman passage are Gaussian tones of width sigma on
//! the 0-1 and 1-2 transitions, applied in counterintuitive order: the 1-2
//! tone leads by |t_sep| (t_sep < 0 puts its center at t_sep, the 0-1
//! center at 0). The instantaneous dark state is parametrized by the mixing
//! angle Theta(t) = arctan(Omega_01 / Omega_12), which sweeps 0 -> pi/2
//! across the pulse pair; its rate Theta_dot sets the amplitude of the
//! counterdiabatic correction, Omega_02 = 2 Theta_dot.

// required in no_std builds, shadowed by std's inherent methods elsewhere
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Drive and frame parameters. Amplitudes and detunings are angular
/// frequencies in rad/ns, times in ns, phases in rad.
///
/// `big_delta` is the two-photon carrier detuning (half the difference of
/// the two transition frequencies); it only enters the two-photon drive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseParams {
    pub amp01: f64,
    pub amp12: f64,
    pub sigma: f64,
    pub t_sep: f64,
    pub phi01: f64,
    pub phi12: f64,
    pub phi02: f64,
    pub delta01: f64,
    pub delta12: f64,
    pub big_delta: f64,
}

impl Default for PulseParams {
    /// Reference qutrit experiment: 45 MHz peak drives of width 35 ns
    /// separated by -0.8 sigma, resonant tones, phi02 = pi/2, and a 225 MHz
    /// two-photon carrier detuning.
    fn default() -> Self {
        let tau = core::f64::consts::TAU;
        PulseParams {
            amp01: 0.045 * tau,
            amp12: 0.045 * tau,
            sigma: 35.0,
            t_sep: -0.8 * 35.0,
            phi01: 0.0,
            phi12: 0.0,
            phi02: core::f64::consts::FRAC_PI_2,
            delta01: 0.0,
            delta12: 0.0,
            big_delta: 0.225 * tau,
        }
    }
}

/// Step for the finite-difference fallback in [`PulseParams::mixing_angle_rate`].
const STENCIL_STEP: f64 = 1e-3;

impl PulseParams {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("amp01", self.amp01),
            ("amp12", self.amp12),
            ("sigma", self.sigma),
            ("t_sep", self.t_sep),
            ("phi01", self.phi01),
            ("phi12", self.phi12),
            ("phi02", self.phi02),
            ("delta01", self.delta01),
            ("delta12", self.delta12),
            ("big_delta", self.big_delta),
        ];
        for (what, value) in fields {
            if !value.is_finite() {
                return Err(Error::InvalidParameter { what, value });
            }
        }
        if self.sigma <= 0.0 {
            return Err(Error::InvalidParameter {
                what: "sigma",
                value: self.sigma,
            });
        }
        if self.amp01 < 0.0 {
            return Err(Error::InvalidParameter {
                what: "amp01",
                value: self.amp01,
            });
        }
        if self.amp12 < 0.0 {
            return Err(Error::InvalidParameter {
                what: "amp12",
                value: self.amp12,
            });
        }
        Ok(())
    }

    /// Omega_01(t) = amp01 exp(-t^2 / 2 sigma^2), centered at zero.
    pub fn envelope01(&self, t: f64) -> f64 {
        self.amp01 * (-t * t / (2.0 * self.sigma * self.sigma)).exp()
    }

    /// Omega_12(t) = amp12 exp(-(t - t_sep)^2 / 2 sigma^2).
    pub fn envelope12(&self, t: f64) -> f64 {
        let d = t - self.t_sep;
        self.amp12 * (-d * d / (2.0 * self.sigma * self.sigma)).exp()
    }

    /// Theta(t) = arctan(Omega_01 / Omega_12), in [0, pi/2].
    pub fn mixing_angle(&self, t: f64) -> f64 {
        self.envelope01(t).atan2(self.envelope12(t))
    }

    /// d Theta / dt.
    ///
    /// For equal amplitudes the Gaussians cancel into the closed form
    /// Theta_dot = -t_sep / (2 sigma^2 cosh u), u = -t_sep (2t - t_sep) / 2 sigma^2;
    /// otherwise a five-point stencil on [`Self::mixing_angle`] is used.
    pub fn mixing_angle_rate(&self, t: f64) -> f64 {
        let scale = self.amp01.abs().max(self.amp12.abs());
        if (self.amp01 - self.amp12).abs() <= 1e-12 * scale {
            let s2 = self.sigma * self.sigma;
            let u = -self.t_sep * (2.0 * t - self.t_sep) / (2.0 * s2);
            -self.t_sep / (2.0 * s2 * u.cosh())
        } else {
            let h = STENCIL_STEP;
            let f = |x: f64| self.mixing_angle(x);
            (-f(t + 2.0 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2.0 * h)) / (12.0 * h)
        }
    }

    /// Counterdiabatic drive amplitude Omega_02(t) = 2 Theta_dot(t).
    pub fn omega02(&self, t: f64) -> f64 {
        2.0 * self.mixing_angle_rate(t)
    }
}
