//! JSON report emitted by the commands. serde_json prints f64 with
//! shortest-round-trip precision, so reports reload without loss.

use serde::{Deserialize, Serialize};

use qpt_core::algebra::{CMatrix3, CMatrixN};
use qpt_core::qpt::{ChiReconstruction, ProcessMatrix, ValidationReport};

pub const REPORT_SCHEMA: &str = "qptlab/report/v1";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub process: String,
    pub decoherence: String,
    pub t_start_ns: f64,
    pub t_end_ns: f64,
    pub steps: usize,
}

/// A 9x9 complex grid as two real grids, row-major.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexGrid {
    pub real: Vec<Vec<f64>>,
    pub imag: Vec<Vec<f64>>,
}

impl ComplexGrid {
    pub fn from_chi(chi: &ProcessMatrix) -> Self {
        let m = chi.matrix();
        let real = (0..9)
            .map(|r| (0..9).map(|c| m[(r, c)].re).collect())
            .collect();
        let imag = (0..9)
            .map(|r| (0..9).map(|c| m[(r, c)].im).collect())
            .collect();
        ComplexGrid { real, imag }
    }

    pub fn to_chi(&self) -> Result<ProcessMatrix, String> {
        if self.real.len() != 9 || self.imag.len() != 9 {
            return Err("chi grids must have 9 rows".into());
        }
        let mut m = CMatrixN::zeros(9);
        for r in 0..9 {
            if self.real[r].len() != 9 || self.imag[r].len() != 9 {
                return Err("chi grids must have 9 columns".into());
            }
            for c in 0..9 {
                m[(r, c)] = num_complex::Complex64::new(self.real[r][c], self.imag[r][c]);
            }
        }
        ProcessMatrix::from_matrix(m).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateDump {
    pub real: Vec<Vec<f64>>,
    pub imag: Vec<Vec<f64>>,
}

impl StateDump {
    pub fn from_matrix(m: &CMatrix3) -> Self {
        let real = (0..3)
            .map(|r| (0..3).map(|c| m[(r, c)].re).collect())
            .collect();
        let imag = (0..3)
            .map(|r| (0..3).map(|c| m[(r, c)].im).collect())
            .collect();
        StateDump { real, imag }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReconstructionStats {
    pub beta_condition: f64,
    pub solve_residual: f64,
    pub asymmetry: f64,
}

impl ReconstructionStats {
    pub fn from_reconstruction(rec: &ChiReconstruction) -> Self {
        ReconstructionStats {
            beta_condition: rec.beta_condition,
            solve_residual: rec.solve_residual,
            asymmetry: rec.asymmetry,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationDump {
    pub hermiticity_residual: f64,
    pub min_eigenvalue: f64,
    pub trace_preservation_residual: f64,
    pub trace: f64,
    pub kraus_rank: usize,
}

impl ValidationDump {
    pub fn new(report: &ValidationReport, kraus_rank: usize) -> Self {
        ValidationDump {
            hermiticity_residual: report.hermiticity_residual,
            min_eigenvalue: report.min_eigenvalue,
            trace_preservation_residual: report.trace_preservation_residual,
            trace: report.trace,
            kraus_rank,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: String,
    pub config: ConfigEcho,
    /// Population of |2> after driving |0><0|.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transfer_fidelity: Option<f64>,
    /// Final state of the |0><0| run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_state: Option<StateDump>,
    /// Final states of all nine basis inputs, row-major input order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_final_states: Option<Vec<StateDump>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<ComplexGrid>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reconstruction: Option<ReconstructionStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationDump>,
    pub wall_time_s: f64,
}

impl RunReport {
    pub fn new(config: ConfigEcho) -> Self {
        RunReport {
            schema: REPORT_SCHEMA.to_string(),
            config,
            transfer_fidelity: None,
            final_state: None,
            basis_final_states: None,
            chi: None,
            reconstruction: None,
            validation: None,
            wall_time_s: 0.0,
        }
    }
}
