//! Numerical laboratory for a driven three-level system (qutrit).
//!
//! The crate simulates population transfer between the qutrit ground and
//! second excited state under three drive schemes: a two-tone adiabatic
//! Raman passage, the same passage augmented by a counterdiabatic two-photon
//! tone, and the detuning-mediated two-photon drive alone. Evolution runs
//! either unitarily or under a Lindblad master equation with relaxation and
//! pure dephasing, and the resulting map is characterized by standard
//! process tomography: propagate a basis of nine input operators, expand the
//! outputs in the Gell-Mann basis, and invert the fixed 81x81 transfer
//! matrix to obtain the 9x9 process matrix chi.
//!
//! Module map:
//! - [`algebra`]: complex matrix types, the operator and state bases, and
//!   the dense numerics (Jacobi eigensolver, LU solve, PSD square root).
//! - [`pulses`]: Gaussian drive envelopes, the mixing angle and its rate.
//! - [`hamiltonians`]: rotating-frame Hamiltonians for each drive scheme.
//! - [`dynamics`]: Lindblad right-hand side and fixed-step RK4 propagation.
//! - [`qpt`]: basis transfer matrix, coefficient extraction, chi
//!   reconstruction and validation, Kraus extraction.
//! - [`metrics`]: process fidelity and distance, state transfer fidelity.
//!
//! Everything is deterministic: no threads, no runtime randomness, fixed
//! evaluation order. The crate is `no_std` (with `alloc`) so the numerics
//! can be embedded; file formats and the command-line front end live in the
//! companion `qpt-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod dynamics;
mod error;
pub mod hamiltonians;
pub mod metrics;
pub mod pulses;
pub mod qpt;

pub use algebra::{CMatrix3, CMatrixN, OperatorBasis, StateBasis};
pub use dynamics::{DecoherenceRates, TimeGrid};
pub use error::{Error, Result};
pub use hamiltonians::HamiltonianKind;
pub use pulses::PulseParams;
pub use qpt::{BetaMatrix, LambdaVector, ProcessMatrix, ValidationReport};
