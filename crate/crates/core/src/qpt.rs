//! Standard process tomography on the qutrit.
//!
//! A trace-preserving linear map eps is expanded over the fixed operator
//! basis {E_1 = I, E_2..E_9 = Lambda_1..Lambda_8} as
//!
//! eps(rho) = sum_mn chi_mn E_m rho E_n^dag.
//!
//! Feeding the nine inputs rho_j = |p><q| through the process and expanding
//! each output in the same state basis, eps(rho_j) = sum_k lambda_jk rho_k,
//! turns the definition into the linear system beta chi_vec = lambda with
//! the fixed 81x81 transfer matrix
//!
//! beta[(j,k), (m,n)] = <p_k| E_m rho_j E_n^dag |q_k>.
//!
//! beta depends only on the bases, so it is built once and solved by LU;
//! its conditioning (kappa_inf ~ 9) makes the inversion numerically
//! harmless, and the solve reports the condition number so that claim stays
//! checked. The reconstructed chi is Hermitian up to roundoff for any map
//! arising from Lindblad evolution; asymmetry beyond 1e-8 is treated as a
//! pipeline fault, not noise to be averaged away.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
// required in no_std builds, shadowed by std's inherent methods elsewhere
#[allow(unused_imports)]
use num_traits::Float;

use crate::algebra::{
    hermitian_eig, solve_linear, CMatrix3, CMatrixN, OperatorBasis, StateBasis,
};
use crate::dynamics::{propagate, DecoherenceRates, TimeGrid};
use crate::error::{Error, Result};
use crate::hamiltonians::HamiltonianKind;
use crate::pulses::PulseParams;

/// Reconstructed chi may be asymmetric by at most this much before the
/// reconstruction is rejected.
pub const CHI_ASYMMETRY_TOLERANCE: f64 = 1e-8;

/// Eigenvalues this small (relative to the largest) are treated as zero
/// rank when extracting Kraus operators.
const KRAUS_RANK_CUTOFF: f64 = 1e-12;

/// The 81x81 basis transfer matrix. Rows are indexed by (input j, output
/// k), columns by the operator pair (m, n), both row-major.
#[derive(Debug, Clone)]
pub struct BetaMatrix {
    matrix: CMatrixN,
}

impl BetaMatrix {
    pub fn matrix(&self) -> &CMatrixN {
        &self.matrix
    }
}

/// Build beta from the two bases. Pure bookkeeping, no tuning.
pub fn build_beta(ops: &OperatorBasis, states: &StateBasis) -> BetaMatrix {
    let mut matrix = CMatrixN::zeros(81);
    for j in 0..9 {
        let rho_j = &states[j];
        for m in 0..9 {
            for n in 0..9 {
                let prod = ops[m] * *rho_j * ops[n].adjoint();
                let col = 9 * m + n;
                for k in 0..9 {
                    let (p, q) = StateBasis::index_to_pq(k).unwrap();
                    matrix[(9 * j + k, col)] = prod[(p, q)];
                }
            }
        }
    }
    BetaMatrix { matrix }
}

/// Output coefficients of the process on the nine basis inputs:
/// lambda[9j + k] is the (p_k, q_k) entry of eps(rho_j).
#[derive(Debug, Clone)]
pub struct LambdaVector {
    coefficients: Vec<Complex64>,
}

impl LambdaVector {
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }
}

/// Run the process over every basis input and collect the expansion
/// coefficients. The process closure may fail (a propagation error aborts
/// the extraction).
pub fn extract_lambda<F>(mut process: F, states: &StateBasis) -> Result<LambdaVector>
where
    F: FnMut(&CMatrix3) -> Result<CMatrix3>,
{
    let mut coefficients = vec![Complex64::new(0.0, 0.0); 81];
    for j in 0..9 {
        let out = process(&states[j])?;
        for k in 0..9 {
            let (p, q) = StateBasis::index_to_pq(k)?;
            coefficients[9 * j + k] = out[(p, q)];
        }
    }
    Ok(LambdaVector { coefficients })
}

/// The 9x9 process matrix over the basis (I, Lambda_1, ..., Lambda_8), in
/// that fixed order. Hermitian for any physical map; positive semidefinite
/// exactly when the map is completely positive.
#[derive(Debug, Clone)]
pub struct ProcessMatrix {
    matrix: CMatrixN,
}

impl ProcessMatrix {
    pub fn from_matrix(matrix: CMatrixN) -> Result<Self> {
        if matrix.dim() != 9 {
            return Err(Error::DimensionMismatch {
                expected: 9,
                got: matrix.dim(),
            });
        }
        Ok(ProcessMatrix { matrix })
    }

    pub fn matrix(&self) -> &CMatrixN {
        &self.matrix
    }

    pub fn entry(&self, m: usize, n: usize) -> Complex64 {
        self.matrix[(m, n)]
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    /// Fraction of total absolute weight sitting on the diagonal;
    /// decoherence shifts weight from the coherent off-diagonal blocks onto
    /// the diagonal, so this grows with noise.
    pub fn diagonal_weight_share(&self) -> f64 {
        let mut diag = 0.0;
        let mut total = 0.0;
        for m in 0..9 {
            for n in 0..9 {
                let a = self.matrix[(m, n)].norm();
                total += a;
                if m == n {
                    diag += a;
                }
            }
        }
        if total == 0.0 {
            0.0
        } else {
            diag / total
        }
    }

    /// Rebuild with eigenvalues in [-clamp, 0) set to zero; an eigenvalue
    /// below -clamp is an error. The result is PSD by construction and is
    /// the channel actually represented by the extracted Kraus set.
    pub fn psd_projected(&self, clamp: f64) -> Result<ProcessMatrix> {
        let eig = hermitian_eig(&self.matrix.hermitized())?;
        let mut w = eig.vectors.clone();
        for (i, &lambda) in eig.values.iter().enumerate() {
            if lambda < -clamp {
                return Err(Error::NegativeEigenvalue {
                    value: lambda,
                    tolerance: clamp,
                });
            }
            let kept = lambda.max(0.0);
            for r in 0..9 {
                w[(r, i)] *= kept;
            }
        }
        ProcessMatrix::from_matrix(w.matmul(&eig.vectors.adjoint()))
    }
}

/// Reconstruction output: chi plus the diagnostics of the solve.
#[derive(Debug, Clone)]
pub struct ChiReconstruction {
    pub chi: ProcessMatrix,
    /// Infinity-norm condition number of beta.
    pub beta_condition: f64,
    /// Max-norm residual of the linear solve.
    pub solve_residual: f64,
    /// Hermiticity asymmetry of the raw solution before symmetrization.
    pub asymmetry: f64,
}

/// Solve beta chi_vec = lambda and reshuffle into the 9x9 chi.
///
/// The raw solution is symmetrized ((chi + chi^dag)/2) only after its
/// asymmetry is verified to sit at roundoff level; beyond
/// [`CHI_ASYMMETRY_TOLERANCE`] the input data did not come from a
/// Hermiticity-preserving map and the call fails.
pub fn reconstruct_chi(beta: &BetaMatrix, lambda: &LambdaVector) -> Result<ChiReconstruction> {
    let sol = solve_linear(beta.matrix(), &lambda.coefficients)?;
    let mut raw = CMatrixN::zeros(9);
    for m in 0..9 {
        for n in 0..9 {
            raw[(m, n)] = sol.solution[9 * m + n];
        }
    }
    let asymmetry = raw.hermiticity_residual();
    if asymmetry > CHI_ASYMMETRY_TOLERANCE {
        return Err(Error::HermiticityViolation {
            residual: asymmetry,
            tolerance: CHI_ASYMMETRY_TOLERANCE,
        });
    }
    Ok(ChiReconstruction {
        chi: ProcessMatrix::from_matrix(raw.hermitized())?,
        beta_condition: sol.condition,
        solve_residual: sol.residual,
        asymmetry,
    })
}

/// Evaluate the reconstructed map on an arbitrary operator:
/// sum_mn chi_mn E_m rho E_n^dag.
pub fn apply_chi(chi: &ProcessMatrix, rho: &CMatrix3, ops: &OperatorBasis) -> CMatrix3 {
    let mut out = CMatrix3::zero();
    for m in 0..9 {
        let left = ops[m] * *rho;
        for n in 0..9 {
            let w = chi.entry(m, n);
            if w == Complex64::new(0.0, 0.0) {
                continue;
            }
            out = out + (left * ops[n].adjoint()).scaled_c(w);
        }
    }
    out
}

/// Physicality diagnostics of a process matrix.
#[derive(Debug, Clone, Copy)]
pub struct ValidationReport {
    /// max |chi - chi^dag|.
    pub hermiticity_residual: f64,
    /// Smallest eigenvalue of the Hermitian part; negative at integration
    /// noise scale for closed-system reconstructions.
    pub min_eigenvalue: f64,
    /// max |sum_mn chi_mn E_n^dag E_m - I|, zero for a trace-preserving map.
    pub trace_preservation_residual: f64,
    /// Tr chi (real part; the imaginary part is bounded by the
    /// hermiticity residual).
    pub trace: f64,
}

/// Compute the [`ValidationReport`] for a chi matrix.
pub fn validate_chi(chi: &ProcessMatrix, ops: &OperatorBasis) -> Result<ValidationReport> {
    let hermiticity_residual = chi.matrix().hermiticity_residual();
    let eig = hermitian_eig(&chi.matrix().hermitized())?;
    let min_eigenvalue = eig.values[0];

    let mut tp = CMatrix3::zero();
    for m in 0..9 {
        for n in 0..9 {
            let w = chi.entry(m, n);
            if w == Complex64::new(0.0, 0.0) {
                continue;
            }
            tp = tp + (ops[n].adjoint() * ops[m]).scaled_c(w);
        }
    }
    let trace_preservation_residual = tp.max_abs_diff(&CMatrix3::identity());

    Ok(ValidationReport {
        hermiticity_residual,
        min_eigenvalue,
        trace_preservation_residual,
        trace: chi.trace().re,
    })
}

/// Kraus operators of the channel, eigenvalues clamped in the default
/// window [`crate::algebra::PSD_CLAMP_DEFAULT`].
pub fn kraus_from_chi(chi: &ProcessMatrix, ops: &OperatorBasis) -> Result<Vec<CMatrix3>> {
    kraus_from_chi_clamped(chi, ops, crate::algebra::PSD_CLAMP_DEFAULT)
}

/// Kraus extraction with an explicit clamp window: diagonalize chi,
/// E_i = sqrt(eta_i) sum_m V_mi E_m over the positive eigenpairs.
/// Eigenvalues in [-clamp, 0) are dropped as roundoff; below -clamp the
/// matrix is not a channel and the call fails. The returned set represents
/// [`ProcessMatrix::psd_projected`] of the input exactly.
pub fn kraus_from_chi_clamped(
    chi: &ProcessMatrix,
    ops: &OperatorBasis,
    clamp: f64,
) -> Result<Vec<CMatrix3>> {
    let eig = hermitian_eig(&chi.matrix().hermitized())?;
    let largest = eig.values.last().copied().unwrap_or(0.0).max(0.0);
    let mut kraus = Vec::new();
    for (i, &eta) in eig.values.iter().enumerate() {
        if eta < -clamp {
            return Err(Error::NegativeEigenvalue {
                value: eta,
                tolerance: clamp,
            });
        }
        if eta <= KRAUS_RANK_CUTOFF * largest || eta <= 0.0 {
            continue;
        }
        let root = eta.sqrt();
        let mut op = CMatrix3::zero();
        for m in 0..9 {
            op = op + ops[m].scaled_c(eig.vectors[(m, i)] * root);
        }
        kraus.push(op);
    }
    Ok(kraus)
}

/// Full tomography of a simulated drive: propagate the nine basis inputs,
/// reconstruct chi. Diagonal inputs are genuine states; the coherence
/// inputs ride along by linearity of the master equation.
pub fn simulate_chi(
    kind: HamiltonianKind,
    params: &PulseParams,
    rates: &DecoherenceRates,
    grid: &TimeGrid,
) -> Result<ChiReconstruction> {
    let ops = OperatorBasis::standard();
    let states = StateBasis::standard();
    let beta = build_beta(&ops, &states);
    let lambda = extract_lambda(|m| propagate(m, kind, params, rates, grid), &states)?;
    reconstruct_chi(&beta, &lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn bases() -> (OperatorBasis, StateBasis) {
        (OperatorBasis::standard(), StateBasis::standard())
    }

    /// chi with a single unit diagonal entry at (slot, slot).
    fn assert_single_diagonal(chi: &ProcessMatrix, slot: usize, tol: f64) {
        for m in 0..9 {
            for n in 0..9 {
                let want = if m == slot && n == slot { 1.0 } else { 0.0 };
                let got = chi.entry(m, n);
                assert!(
                    (got - c(want, 0.0)).norm() < tol,
                    "chi[{m}][{n}] = {got} want {want}"
                );
            }
        }
    }

    #[test]
    fn beta_identity_column() {
        let (ops, states) = bases();
        let beta = build_beta(&ops, &states);
        // column (m,n) = (0,0): I rho_j I picks out delta_jk
        for j in 0..9 {
            for k in 0..9 {
                let want = if j == k { 1.0 } else { 0.0 };
                assert_eq!(beta.matrix()[(9 * j + k, 0)], c(want, 0.0));
            }
        }
    }

    #[test]
    fn beta_lambda1_column() {
        let (ops, states) = bases();
        let beta = build_beta(&ops, &states);
        // Lambda_1 |0><0| Lambda_1 = |1><1|: j = 0 block of column (1,1)
        // has its unit entry at k = 4 and nothing else
        let col = 9 * 1 + 1;
        for k in 0..9 {
            let want = if k == 4 { 1.0 } else { 0.0 };
            assert_eq!(beta.matrix()[(k, col)], c(want, 0.0));
        }
    }

    #[test]
    fn lambda_of_identity_process() {
        let (_, states) = bases();
        let lambda = extract_lambda(|m| Ok(*m), &states).unwrap();
        for j in 0..9 {
            for k in 0..9 {
                let want = if j == k { 1.0 } else { 0.0 };
                assert_eq!(lambda.coefficients()[9 * j + k], c(want, 0.0));
            }
        }
    }

    #[test]
    fn identity_process_reconstructs_to_e11() {
        let (ops, states) = bases();
        let beta = build_beta(&ops, &states);
        let lambda = extract_lambda(|m| Ok(*m), &states).unwrap();
        let rec = reconstruct_chi(&beta, &lambda).unwrap();
        assert_single_diagonal(&rec.chi, 0, 1e-12);
        assert!(rec.asymmetry < 1e-14);
        assert!(rec.solve_residual < 1e-12);
        // conditioning of the fixed transfer matrix, pinned once
        assert!((rec.beta_condition - 8.85697921345578).abs() < 1e-6);
        assert!(rec.beta_condition < 1e3);
    }

    #[test]
    fn basis_conjugations_reconstruct_to_their_slot() {
        let (ops, states) = bases();
        let beta = build_beta(&ops, &states);
        for slot in 0..9 {
            let e = ops[slot];
            let lambda = extract_lambda(|m| Ok(e * *m * e.adjoint()), &states).unwrap();
            let rec = reconstruct_chi(&beta, &lambda).unwrap();
            assert_single_diagonal(&rec.chi, slot, 1e-12);
        }
    }

    /// Rotation by pi/2 in the 0-2 plane: U = exp(i (pi/2) Lambda_5).
    fn rotation_u() -> CMatrix3 {
        let mut u = CMatrix3::zero();
        u[(0, 2)] = c(1.0, 0.0);
        u[(1, 1)] = c(1.0, 0.0);
        u[(2, 0)] = c(-1.0, 0.0);
        u
    }

    /// Expansion coefficients of a unitary in the operator basis,
    /// c_m = Tr(E_m^dag U) / Tr(E_m^dag E_m).
    fn basis_coefficients(u: &CMatrix3, ops: &OperatorBasis) -> [Complex64; 9] {
        let mut coeff = [c(0.0, 0.0); 9];
        for m in 0..9 {
            let norm = if m == 0 { 3.0 } else { 2.0 };
            coeff[m] = (ops[m].adjoint() * *u).trace() / norm;
        }
        coeff
    }

    #[test]
    fn unitary_rotation_chi_is_rank_one() {
        let (ops, states) = bases();
        let beta = build_beta(&ops, &states);
        let u = rotation_u();
        let lambda = extract_lambda(|m| Ok(u * *m * u.adjoint()), &states).unwrap();
        let rec = reconstruct_chi(&beta, &lambda).unwrap();

        // chi must equal the outer product of the expansion coefficients
        let coeff = basis_coefficients(&u, &ops);
        for m in 0..9 {
            for n in 0..9 {
                let want = coeff[m] * coeff[n].conj();
                assert!(
                    (rec.chi.entry(m, n) - want).norm() < 1e-10,
                    "chi[{m}][{n}]"
                );
            }
        }
        // landmark entries
        assert!((rec.chi.entry(0, 0) - c(1.0 / 9.0, 0.0)).norm() < 1e-10);
        assert!((rec.chi.entry(3, 3) - c(0.25, 0.0)).norm() < 1e-10);
        assert!((rec.chi.entry(5, 5) - c(1.0, 0.0)).norm() < 1e-10);
        assert!((rec.chi.entry(8, 8) - c(1.0 / 12.0, 0.0)).norm() < 1e-10);
        assert!((rec.chi.trace() - c(13.0 / 9.0, 0.0)).norm() < 1e-10);

        // rank one: a single nonzero eigenvalue
        let eig = hermitian_eig(rec.chi.matrix()).unwrap();
        let largest = eig.values[8];
        assert!(eig.values[7].abs() < 1e-8 * largest.max(1.0));
    }

    #[test]
    fn apply_chi_matches_the_map() {
        let (ops, states) = bases();
        let beta = build_beta(&ops, &states);
        let u = rotation_u();
        let lambda = extract_lambda(|m| Ok(u * *m * u.adjoint()), &states).unwrap();
        let rec = reconstruct_chi(&beta, &lambda).unwrap();

        let mut rho = CMatrix3::zero();
        for r in 0..3 {
            for s in 0..3 {
                rho[(r, s)] = c(0.2 * r as f64 + 0.1, 0.15 * s as f64 - 0.2);
            }
        }
        let rho = rho + rho.adjoint();
        let direct = u * rho * u.adjoint();
        let via_chi = apply_chi(&rec.chi, &rho, &ops);
        assert!(via_chi.max_abs_diff(&direct) < 1e-9);
        let _ = states;
    }

    #[test]
    fn non_hermitian_map_is_rejected() {
        let (ops, states) = bases();
        let beta = build_beta(&ops, &states);
        // linear but not Hermiticity-preserving: rho -> rho + Tr(rho) shift
        let shift = CMatrix3::ketbra(0, 1).unwrap();
        let lambda = extract_lambda(
            |m| Ok(*m + shift.scaled_c(m.trace() * 1e-3)),
            &states,
        )
        .unwrap();
        assert!(matches!(
            reconstruct_chi(&beta, &lambda),
            Err(Error::HermiticityViolation { .. })
        ));
        let _ = ops;
    }

    #[test]
    fn validation_of_identity_chi() {
        let (ops, states) = bases();
        let beta = build_beta(&ops, &states);
        let lambda = extract_lambda(|m| Ok(*m), &states).unwrap();
        let rec = reconstruct_chi(&beta, &lambda).unwrap();
        let report = validate_chi(&rec.chi, &ops).unwrap();
        assert!(report.hermiticity_residual < 1e-13);
        assert!(report.trace_preservation_residual < 1e-12);
        assert!((report.trace - 1.0).abs() < 1e-12);
        assert!(report.min_eigenvalue > -1e-12);
    }

    #[test]
    fn kraus_of_identity_is_identity() {
        let (ops, states) = bases();
        let beta = build_beta(&ops, &states);
        let lambda = extract_lambda(|m| Ok(*m), &states).unwrap();
        let rec = reconstruct_chi(&beta, &lambda).unwrap();
        let kraus = kraus_from_chi(&rec.chi, &ops).unwrap();
        assert_eq!(kraus.len(), 1);
        // equal to I up to a global phase
        let phase = kraus[0][(0, 0)];
        assert!((phase.norm() - 1.0).abs() < 1e-10);
        let normalized = kraus[0].scaled_c(phase.conj());
        assert!(normalized.max_abs_diff(&CMatrix3::identity()) < 1e-10);
    }

    #[test]
    fn kraus_of_rotation_matches_u_up_to_phase() {
        let (ops, states) = bases();
        let beta = build_beta(&ops, &states);
        let u = rotation_u();
        let lambda = extract_lambda(|m| Ok(u * *m * u.adjoint()), &states).unwrap();
        let rec = reconstruct_chi(&beta, &lambda).unwrap();
        let kraus = kraus_from_chi(&rec.chi, &ops).unwrap();
        assert_eq!(kraus.len(), 1);
        let overlap = kraus[0] * u.adjoint();
        let phase = overlap[(0, 0)];
        assert!((phase.norm() - 1.0).abs() < 1e-9);
        assert!(
            overlap
                .max_abs_diff(&CMatrix3::identity().scaled_c(phase))
                < 1e-9
        );
    }

    #[test]
    fn kraus_of_mixed_channel_is_complete() {
        // rho -> (1-p) rho + p U rho U^dag: trace preserving, rank two,
        // Kraus set {sqrt(1-p) I, sqrt(p) U}.
        let (ops, states) = bases();
        let beta = build_beta(&ops, &states);
        let p = 0.3;
        let u = rotation_u();
        let lambda = extract_lambda(
            |m| Ok(m.scaled(1.0 - p) + (u * *m * u.adjoint()).scaled(p)),
            &states,
        )
        .unwrap();
        let rec = reconstruct_chi(&beta, &lambda).unwrap();
        // chi = (1-p) e_11 + p c c^dag
        assert!((rec.chi.entry(0, 0) - c(1.0 - p + p / 9.0, 0.0)).norm() < 1e-12);
        assert!((rec.chi.entry(5, 5) - c(p, 0.0)).norm() < 1e-12);
        assert!((rec.chi.trace() - c(1.0 - p + p * 13.0 / 9.0, 0.0)).norm() < 1e-12);

        let kraus = kraus_from_chi(&rec.chi, &ops).unwrap();
        assert_eq!(kraus.len(), 2);
        let mut completeness = CMatrix3::zero();
        for e in &kraus {
            completeness = completeness + e.adjoint() * *e;
        }
        assert!(completeness.max_abs_diff(&CMatrix3::identity()) < 1e-10);

        // recomposition reproduces the map
        let mut rho = CMatrix3::zero();
        rho[(0, 0)] = c(0.6, 0.0);
        rho[(0, 1)] = c(0.2, 0.1);
        rho[(1, 0)] = c(0.2, -0.1);
        rho[(1, 1)] = c(0.4, 0.0);
        let want = rho.scaled(1.0 - p) + (u * rho * u.adjoint()).scaled(p);
        let mut got = CMatrix3::zero();
        for e in &kraus {
            got = got + *e * rho * e.adjoint();
        }
        assert!(got.max_abs_diff(&want) < 1e-10);
    }

    #[test]
    fn psd_projection_window() {
        // identity chi plus a small negative slot
        let (ops, states) = bases();
        let beta = build_beta(&ops, &states);
        let lambda = extract_lambda(|m| Ok(*m), &states).unwrap();
        let mut raw = reconstruct_chi(&beta, &lambda).unwrap().chi.matrix().clone();
        raw[(4, 4)] = c(-1e-6, 0.0);
        let chi = ProcessMatrix::from_matrix(raw).unwrap();

        assert!(matches!(
            chi.psd_projected(1e-8),
            Err(Error::NegativeEigenvalue { .. })
        ));
        let projected = chi.psd_projected(1e-5).unwrap();
        let eig = hermitian_eig(projected.matrix()).unwrap();
        assert!(eig.values[0] >= -1e-15);
        assert!((projected.entry(0, 0) - c(1.0, 0.0)).norm() < 1e-12);
        assert!(projected.entry(4, 4).norm() < 1e-15);

        // kraus extraction applies the same window
        assert!(kraus_from_chi(&chi, &ops).is_err());
        assert!(kraus_from_chi_clamped(&chi, &ops, 1e-5).is_ok());
    }

    #[test]
    fn simulated_identity_drive() {
        let rec = simulate_chi(
            HamiltonianKind::Identity,
            &PulseParams::default(),
            &DecoherenceRates::none(),
            &TimeGrid::new(-182.0, 140.0, 10).unwrap(),
        )
        .unwrap();
        assert_single_diagonal(&rec.chi, 0, 1e-10);
    }

    #[test]
    fn diagonal_weight_share_bounds() {
        let (ops, states) = bases();
        let beta = build_beta(&ops, &states);
        let lambda = extract_lambda(|m| Ok(*m), &states).unwrap();
        let rec = reconstruct_chi(&beta, &lambda).unwrap();
        // identity chi is purely diagonal
        assert!((rec.chi.diagonal_weight_share() - 1.0).abs() < 1e-9);

        let u = rotation_u();
        let lambda = extract_lambda(|m| Ok(u * *m * u.adjoint()), &states).unwrap();
        let rec = reconstruct_chi(&beta, &lambda).unwrap();
        let share = rec.chi.diagonal_weight_share();
        assert!(share > 0.0 && share < 1.0);
    }
}
