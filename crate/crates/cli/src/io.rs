//! CSV grids and chi loading. Values are written with 17 significant
//! digits ({:.16e}), which round-trips every f64 exactly.

use std::path::Path;

use num_complex::Complex64;

use qpt_core::algebra::CMatrixN;
use qpt_core::qpt::ProcessMatrix;

use crate::error::{AppError, Result};
use crate::report::RunReport;

pub fn format_matrix_csv(values: &[[f64; 9]; 9]) -> String {
    let mut out = String::new();
    for row in values {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn chi_component(chi: &ProcessMatrix, part: fn(Complex64) -> f64) -> [[f64; 9]; 9] {
    let mut grid = [[0.0; 9]; 9];
    for (r, row) in grid.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = part(chi.matrix()[(r, c)]);
        }
    }
    grid
}

pub fn write_matrix_csv(path: &Path, values: &[[f64; 9]; 9]) -> Result<()> {
    std::fs::write(path, format_matrix_csv(values))?;
    Ok(())
}

pub fn read_matrix_csv(path: &Path) -> Result<[[f64; 9]; 9]> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Config(format!("cannot read {}: {e}", path.display())))?;
    let mut grid = [[0.0; 9]; 9];
    let rows: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if rows.len() != 9 {
        return Err(AppError::Config(format!(
            "{}: expected 9 rows, found {}",
            path.display(),
            rows.len()
        )));
    }
    for (r, line) in rows.iter().enumerate() {
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 9 {
            return Err(AppError::Config(format!(
                "{}: row {} has {} columns, expected 9",
                path.display(),
                r + 1,
                cells.len()
            )));
        }
        for (c, cell) in cells.iter().enumerate() {
            grid[r][c] = cell.trim().parse::<f64>().map_err(|e| {
                AppError::Config(format!(
                    "{}: row {} column {}: {e}",
                    path.display(),
                    r + 1,
                    c + 1
                ))
            })?;
        }
    }
    Ok(grid)
}

/// Load a chi matrix from either a `report.json` (the `chi` field) or a
/// `chi_real.csv` with its `chi_imag.csv` sibling.
pub fn load_chi(path: &Path) -> Result<ProcessMatrix> {
    let name = path
        .file_name()
        .and_then(|n| n.to_str())
        .unwrap_or_default();
    if name.ends_with(".json") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| AppError::Config(format!("cannot read {}: {e}", path.display())))?;
        let report: RunReport = serde_json::from_str(&text)
            .map_err(|e| AppError::Config(format!("{}: {e}", path.display())))?;
        let grid = report
            .chi
            .ok_or_else(|| AppError::Config(format!("{}: no chi in report", path.display())))?;
        return grid.to_chi().map_err(AppError::Config);
    }

    let real = read_matrix_csv(path)?;
    let sibling = path.with_file_name(
        name.replace("real", "imag"),
    );
    let imag = if name.contains("real") && sibling.exists() {
        read_matrix_csv(&sibling)?
    } else {
        [[0.0; 9]; 9]
    };
    let mut m = CMatrixN::zeros(9);
    for r in 0..9 {
        for c in 0..9 {
            m[(r, c)] = Complex64::new(real[r][c], imag[r][c]);
        }
    }
    ProcessMatrix::from_matrix(m).map_err(AppError::from)
}
