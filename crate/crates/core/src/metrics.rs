//! Distances between reconstructed processes and the state-level figure of
//! merit.
//!
//! Process matrices are compared after normalizing each to unit trace
//! (chi / Tr chi), which makes them formally density operators on the
//! operator space; the fidelity is then the standard Uhlmann-Jozsa form
//!
//! F(a, b) = [Tr sqrt(sqrt(a) b sqrt(a))]^2
//!
//! and the distance is the Hilbert-Schmidt norm D = sqrt(Tr (a - b)^2).
//! Without the normalization F(chi, chi) would not even equal one, since
//! the traces of these chi matrices sit well above unity.
//!
//! Simulated reconstructions carry negative eigenvalues at integration
//! noise scale (around 1e-6 on the reference grid), so the square roots
//! clamp inside the physicality window [`PROCESS_CLAMP`] rather than the
//! much tighter roundoff window used elsewhere; anything below the window
//! still fails loudly.

// required in no_std builds, shadowed by std's inherent methods elsewhere
#[allow(unused_imports)]
use num_traits::Float;

use crate::algebra::{hermitian_eig, sqrt_psd_clamped, CMatrix3, CMatrixN};
use crate::error::{Error, Result};
use crate::qpt::ProcessMatrix;

/// Eigenvalue clamp window for process-matrix comparisons, matching the
/// positivity threshold a simulated chi is validated against.
pub const PROCESS_CLAMP: f64 = 1e-5;

/// Both inputs must be Hermitian to this residual.
pub const METRIC_HERMITICITY_TOLERANCE: f64 = 1e-8;

fn normalized(chi: &ProcessMatrix) -> Result<CMatrixN> {
    let residual = chi.matrix().hermiticity_residual();
    if residual > METRIC_HERMITICITY_TOLERANCE {
        return Err(Error::NotHermitian {
            residual,
            tolerance: METRIC_HERMITICITY_TOLERANCE,
        });
    }
    let trace = chi.trace().re;
    if !(trace > 0.0) {
        return Err(Error::NonPositiveTrace { trace });
    }
    Ok(chi.matrix().hermitized().scaled(1.0 / trace))
}

/// Uhlmann-Jozsa fidelity of two process matrices after trace
/// normalization. Symmetric in its arguments to roundoff and equal to one
/// exactly when the normalized matrices coincide.
pub fn process_fidelity(a: &ProcessMatrix, b: &ProcessMatrix) -> Result<f64> {
    let na = normalized(a)?;
    let nb = normalized(b)?;
    let root = sqrt_psd_clamped(&na, PROCESS_CLAMP)?;
    let inner = root.matmul(&nb).matmul(&root);
    let eig = hermitian_eig(&inner.hermitized())?;
    let mut sum = 0.0;
    for &lambda in &eig.values {
        if lambda < -PROCESS_CLAMP {
            return Err(Error::NegativeEigenvalue {
                value: lambda,
                tolerance: PROCESS_CLAMP,
            });
        }
        sum += lambda.max(0.0).sqrt();
    }
    Ok(sum * sum)
}

/// Hilbert-Schmidt distance sqrt(Tr (a - b)^2) of the trace-normalized
/// process matrices.
pub fn process_distance(a: &ProcessMatrix, b: &ProcessMatrix) -> Result<f64> {
    let na = normalized(a)?;
    let nb = normalized(b)?;
    let d = na.sub(&nb);
    let t = d.matmul(&d).trace().re;
    Ok(t.max(0.0).sqrt())
}

/// Population transferred into |2>: the (2,2) entry of the final state.
/// Errors if that entry carries an imaginary part above 1e-9, which a
/// density matrix cannot.
pub fn transfer_fidelity(rho: &CMatrix3) -> Result<f64> {
    let p = rho[(2, 2)];
    if p.im.abs() > 1e-9 {
        return Err(Error::ComplexPopulation { imaginary: p.im });
    }
    Ok(p.re)
}
