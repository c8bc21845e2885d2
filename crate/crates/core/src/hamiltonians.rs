//! Rotating-frame Hamiltonians for the three drive schemes (hbar = 1).
//!
//! The base two-tone Raman Hamiltonian is
//!
//! H0 = (1/2) Omega_01 (cos phi01 Lambda_1 + sin phi01 Lambda_2)
//!    + (1/2) Omega_12 (cos phi12 Lambda_6 + sin phi12 Lambda_7)
//!    - (1/2) [delta01 Lambda_3 + ((delta01 + 2 delta12)/sqrt 3) Lambda_8
//!             - ((2 delta01 + delta12)/3) I].
//!
//! The counterdiabatic correction cancels the nonadiabatic coupling of the
//! dark state exactly:
//!
//! H_cd = -(1/2) Omega_02 (cos phi02 Lambda_4 + sin phi02 Lambda_5),
//! Omega_02 = 2 Theta_dot.
//!
//! A direct 0-2 transition is forbidden, so in practice the same correction
//! is produced by a detuning-mediated two-photon tone whose amplitude and
//! phase are slaved to the counterdiabatic schedule:
//!
//! H_2ph = (1/2) Omega_2ph [cos(phi_2ph - Delta t) Lambda_1 - sin(phi_2ph - Delta t) Lambda_2]
//!       + (1/sqrt 2) Omega_2ph [cos(phi_2ph + Delta t) Lambda_6 - sin(phi_2ph + Delta t) Lambda_7],
//! Omega_2ph = sqrt(sqrt 2 Delta Omega_02),  phi_2ph = (phi02 - pi)/2.
//!
//! The superadiabatic scheme is H0 + H_2ph.

// required in no_std builds, shadowed by std's inherent methods elsewhere
#[allow(unused_imports)]
use num_traits::Float;

use crate::algebra::{gell_mann, CMatrix3};
use crate::error::{Error, Result};
use crate::pulses::PulseParams;

/// Which drive scheme generates the dynamics. `Identity` evolves nothing
/// and exists for pipeline checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonianKind {
    Stirap,
    SaStirap,
    TwoPhoton,
    Identity,
}

fn lam(i: usize) -> CMatrix3 {
    gell_mann(i).unwrap()
}

/// The two-tone Raman Hamiltonian H0.
pub fn h_stirap(t: f64, p: &PulseParams) -> CMatrix3 {
    let drive01 = (lam(1).scaled(p.phi01.cos()) + lam(2).scaled(p.phi01.sin()))
        .scaled(0.5 * p.envelope01(t));
    let drive12 = (lam(6).scaled(p.phi12.cos()) + lam(7).scaled(p.phi12.sin()))
        .scaled(0.5 * p.envelope12(t));
    let s3 = 3.0f64.sqrt();
    let frame = (lam(3).scaled(p.delta01)
        + lam(8).scaled((p.delta01 + 2.0 * p.delta12) / s3)
        - CMatrix3::identity().scaled((2.0 * p.delta01 + p.delta12) / 3.0))
    .scaled(0.5);
    drive01 + drive12 - frame
}

/// The ideal counterdiabatic term H_cd on the 0-2 leg.
pub fn h_cd(t: f64, p: &PulseParams) -> CMatrix3 {
    (lam(4).scaled(p.phi02.cos()) + lam(5).scaled(p.phi02.sin())).scaled(-0.5 * p.omega02(t))
}

/// Omega_2ph(t) = sqrt(sqrt 2 Delta Omega_02(t)).
///
/// Errors when the argument of the square root is negative, which happens
/// whenever Delta and the counterdiabatic schedule have opposite signs
/// (for example a positive pulse separation with positive Delta).
pub fn two_photon_amplitude(t: f64, p: &PulseParams) -> Result<f64> {
    let arg = 2.0f64.sqrt() * p.big_delta * p.omega02(t);
    if arg < 0.0 {
        return Err(Error::NegativeSqrtArgument { value: arg });
    }
    Ok(arg.sqrt())
}

/// phi_2ph = (phi02 - pi)/2, the drive phase that makes the second-order
/// two-photon process reproduce H_cd.
pub fn two_photon_phase(p: &PulseParams) -> f64 {
    (p.phi02 - core::f64::consts::PI) / 2.0
}

/// The detuning-mediated two-photon drive H_2ph.
pub fn h_two_photon(t: f64, p: &PulseParams) -> Result<CMatrix3> {
    let o = two_photon_amplitude(t, p)?;
    let lead = two_photon_phase(p) - p.big_delta * t;
    let lag = two_photon_phase(p) + p.big_delta * t;
    Ok(
        (lam(1).scaled(lead.cos()) - lam(2).scaled(lead.sin())).scaled(0.5 * o)
            + (lam(6).scaled(lag.cos()) - lam(7).scaled(lag.sin()))
                .scaled(o / 2.0f64.sqrt()),
    )
}

/// H0 + H_2ph.
pub fn h_sastirap(t: f64, p: &PulseParams) -> Result<CMatrix3> {
    Ok(h_stirap(t, p) + h_two_photon(t, p)?)
}

/// Dispatch by scheme. `Identity` returns the zero Hamiltonian.
pub fn hamiltonian(kind: HamiltonianKind, t: f64, p: &PulseParams) -> Result<CMatrix3> {
    match kind {
        HamiltonianKind::Stirap => Ok(h_stirap(t, p)),
        HamiltonianKind::SaStirap => h_sastirap(t, p),
        HamiltonianKind::TwoPhoton => h_two_photon(t, p),
        HamiltonianKind::Identity => Ok(CMatrix3::zero()),
    }
}
