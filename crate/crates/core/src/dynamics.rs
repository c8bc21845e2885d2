//! Lindblad master equation and fixed-step RK4 propagation.
//!
//! The dissipator acts entrywise on a qutrit with two relaxation channels
//! (2 -> 1 and 1 -> 0, no direct 2 -> 0 decay) and pure dephasing:
//!
//! d rho / dt = -i [H, rho]
//!            + Gamma_21 rho_22 (|1><1| - |2><2|)
//!            + Gamma_10 rho_11 (|0><0| - |1><1|)
//!            - sum_{j != k} gamma_jk rho_jk |j><k|,
//!
//! with coherence decay rates gamma_10 = Gamma_10/2 + Gamma_phi_10,
//! gamma_20 = Gamma_21/2 + Gamma_phi_20, gamma_21 = (Gamma_10 + Gamma_21)/2
//! + Gamma_phi_21. The right-hand side is linear in rho, so process
//! tomography can feed the non-Hermitian operators |p><q| straight through
//! the same propagator; [`propagate_offdiagonal_physical`] cross-checks
//! that shortcut against four genuine density-matrix runs.
//!
//! Integration is the classic fixed-step fourth-order Runge-Kutta with the
//! Hamiltonian sampled at t, t + dt/2, and t + dt. Deterministic by
//! construction: fixed step count, fixed evaluation order, no adaptivity.

use num_complex::Complex64;

use crate::algebra::CMatrix3;
use crate::error::{Error, Result};
use crate::hamiltonians::{hamiltonian, h_cd, h_stirap, HamiltonianKind};
use crate::pulses::PulseParams;

/// Relaxation and pure-dephasing rates in 1/ns. `gamma_rel_*` are the
/// population decay channels, `gamma_phi_*` the pure dephasing of each
/// coherence.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DecoherenceRates {
    pub gamma_rel_10: f64,
    pub gamma_rel_21: f64,
    pub gamma_phi_10: f64,
    pub gamma_phi_21: f64,
    pub gamma_phi_20: f64,
}

impl DecoherenceRates {
    /// Closed-system evolution.
    pub fn none() -> Self {
        DecoherenceRates::default()
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("gamma_rel_10", self.gamma_rel_10),
            ("gamma_rel_21", self.gamma_rel_21),
            ("gamma_phi_10", self.gamma_phi_10),
            ("gamma_phi_21", self.gamma_phi_21),
            ("gamma_phi_20", self.gamma_phi_20),
        ];
        for (what, value) in fields {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidParameter { what, value });
            }
        }
        Ok(())
    }

    /// gamma_10 = Gamma_10/2 + Gamma_phi_10.
    pub fn dephasing_10(&self) -> f64 {
        0.5 * self.gamma_rel_10 + self.gamma_phi_10
    }

    /// gamma_20 = Gamma_21/2 + Gamma_phi_20.
    pub fn dephasing_20(&self) -> f64 {
        0.5 * self.gamma_rel_21 + self.gamma_phi_20
    }

    /// gamma_21 = (Gamma_10 + Gamma_21)/2 + Gamma_phi_21.
    pub fn dephasing_21(&self) -> f64 {
        0.5 * (self.gamma_rel_10 + self.gamma_rel_21) + self.gamma_phi_21
    }
}

/// Uniform integration window [t_start, t_end] with n_steps RK4 steps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    pub t_start: f64,
    pub t_end: f64,
    pub n_steps: usize,
}

impl TimeGrid {
    pub fn new(t_start: f64, t_end: f64, n_steps: usize) -> Result<Self> {
        if !t_start.is_finite() {
            return Err(Error::InvalidParameter {
                what: "t_start",
                value: t_start,
            });
        }
        if !t_end.is_finite() || t_end <= t_start {
            return Err(Error::InvalidParameter {
                what: "t_end",
                value: t_end,
            });
        }
        if n_steps == 0 {
            return Err(Error::InvalidParameter {
                what: "n_steps",
                value: 0.0,
            });
        }
        Ok(TimeGrid {
            t_start,
            t_end,
            n_steps,
        })
    }

    pub fn dt(&self) -> f64 {
        (self.t_end - self.t_start) / self.n_steps as f64
    }

    /// Same window with `factor` times as many steps, for convergence checks.
    pub fn refined(&self, factor: usize) -> Result<Self> {
        TimeGrid::new(self.t_start, self.t_end, self.n_steps * factor)
    }
}

/// Right-hand side of the master equation for an arbitrary (not necessarily
/// Hermitian) operator argument.
pub fn lindblad_rhs(m: &CMatrix3, h: &CMatrix3, rates: &DecoherenceRates) -> CMatrix3 {
    let comm = *h * *m - *m * *h;
    let mut out = comm.scaled_c(Complex64::new(0.0, -1.0));

    let feed_21 = m[(2, 2)] * rates.gamma_rel_21;
    out[(1, 1)] += feed_21;
    out[(2, 2)] -= feed_21;
    let feed_10 = m[(1, 1)] * rates.gamma_rel_10;
    out[(0, 0)] += feed_10;
    out[(1, 1)] -= feed_10;

    let g10 = rates.dephasing_10();
    let g20 = rates.dephasing_20();
    let g21 = rates.dephasing_21();
    out[(0, 1)] -= m[(0, 1)] * g10;
    out[(1, 0)] -= m[(1, 0)] * g10;
    out[(0, 2)] -= m[(0, 2)] * g20;
    out[(2, 0)] -= m[(2, 0)] * g20;
    out[(1, 2)] -= m[(1, 2)] * g21;
    out[(2, 1)] -= m[(2, 1)] * g21;
    out
}

fn drive<F>(m0: &CMatrix3, mut h_at: F, rates: &DecoherenceRates, grid: &TimeGrid) -> Result<CMatrix3>
where
    F: FnMut(f64) -> Result<CMatrix3>,
{
    rates.validate()?;
    TimeGrid::new(grid.t_start, grid.t_end, grid.n_steps)?;
    let dt = grid.dt();
    let mut m = *m0;
    for step in 0..grid.n_steps {
        let t = grid.t_start + step as f64 * dt;
        let h1 = h_at(t)?;
        let h2 = h_at(t + 0.5 * dt)?;
        let h3 = h_at(t + dt)?;
        let k1 = lindblad_rhs(&m, &h1, rates);
        let k2 = lindblad_rhs(&(m + k1.scaled(0.5 * dt)), &h2, rates);
        let k3 = lindblad_rhs(&(m + k2.scaled(0.5 * dt)), &h2, rates);
        let k4 = lindblad_rhs(&(m + k3.scaled(dt)), &h3, rates);
        m = m + (k1 + (k2 + k3).scaled(2.0) + k4).scaled(dt / 6.0);
        if !m.is_finite() {
            return Err(Error::NonFinite { step });
        }
    }
    Ok(m)
}

/// Propagate `m0` from `t_start` to `t_end` under the chosen drive scheme.
pub fn propagate(
    m0: &CMatrix3,
    kind: HamiltonianKind,
    params: &PulseParams,
    rates: &DecoherenceRates,
    grid: &TimeGrid,
) -> Result<CMatrix3> {
    params.validate()?;
    drive(m0, |t| hamiltonian(kind, t, params), rates, grid)
}

/// Propagate under a caller-supplied Hamiltonian schedule.
pub fn propagate_fn<F>(
    m0: &CMatrix3,
    mut h_at: F,
    rates: &DecoherenceRates,
    grid: &TimeGrid,
) -> Result<CMatrix3>
where
    F: FnMut(f64) -> CMatrix3,
{
    drive(m0, |t| Ok(h_at(t)), rates, grid)
}

/// Closed-system evolution under H0 + H_cd, the exactly corrected passage.
pub fn propagate_unitary_ideal(
    m0: &CMatrix3,
    params: &PulseParams,
    grid: &TimeGrid,
) -> Result<CMatrix3> {
    params.validate()?;
    drive(
        m0,
        |t| Ok(h_stirap(t, params) + h_cd(t, params)),
        &DecoherenceRates::none(),
        grid,
    )
}

/// Reconstruct the image of the coherence operator |p><q| (p != q) from
/// four physical density-matrix runs, using
///
/// |p><q| = |+><+| + i |+i><+i| - (1+i)/2 (|p><p| + |q><q|),
///
/// with |+> = (|p> + |q>)/sqrt 2 and |+i> = (|p> + i|q>)/sqrt 2. Agreement
/// with the direct linear propagation of |p><q| confirms that feeding
/// non-Hermitian operators through the master equation is legitimate.
pub fn propagate_offdiagonal_physical(
    p_idx: usize,
    q_idx: usize,
    kind: HamiltonianKind,
    params: &PulseParams,
    rates: &DecoherenceRates,
    grid: &TimeGrid,
) -> Result<CMatrix3> {
    if p_idx > 2 || q_idx > 2 {
        return Err(Error::IndexOutOfRange {
            what: "state label",
            index: p_idx.max(q_idx),
            limit: 2,
        });
    }
    if p_idx == q_idx {
        return Err(Error::InvalidParameter {
            what: "coherence labels must differ",
            value: p_idx as f64,
        });
    }
    let i = Complex64::new(0.0, 1.0);
    let half = Complex64::new(0.5, 0.0);

    let mut plus = CMatrix3::zero();
    plus[(p_idx, p_idx)] = half;
    plus[(p_idx, q_idx)] = half;
    plus[(q_idx, p_idx)] = half;
    plus[(q_idx, q_idx)] = half;

    let mut plus_i = CMatrix3::zero();
    plus_i[(p_idx, p_idx)] = half;
    plus_i[(p_idx, q_idx)] = -i * half;
    plus_i[(q_idx, p_idx)] = i * half;
    plus_i[(q_idx, q_idx)] = half;

    let proj_p = CMatrix3::ketbra(p_idx, p_idx)?;
    let proj_q = CMatrix3::ketbra(q_idx, q_idx)?;

    let out_plus = propagate(&plus, kind, params, rates, grid)?;
    let out_plus_i = propagate(&plus_i, kind, params, rates, grid)?;
    let out_p = propagate(&proj_p, kind, params, rates, grid)?;
    let out_q = propagate(&proj_q, kind, params, rates, grid)?;

    let weight = (Complex64::new(1.0, 1.0)) * half;
    Ok(out_plus + out_plus_i.scaled_c(i) - (out_p + out_q).scaled_c(weight))
}
