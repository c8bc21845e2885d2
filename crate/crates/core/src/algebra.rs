//! Matrix algebra on the qutrit Hilbert space and its operator space.
//!
//! Two layers: [`CMatrix3`] is a fixed 3x3 complex matrix used for states
//! and Hamiltonians, [`CMatrixN`] is a heap-backed square matrix for the
//! operator-space objects (the 81x81 basis transfer matrix, the 9x9 process
//! matrix). The dense routines a process-tomography pipeline needs are
//! implemented here directly: a cyclic Jacobi eigensolver for Hermitian
//! matrices, LU solve with partial pivoting and a condition estimate, and a
//! clamped PSD square root. Sizes never exceed 81, so O(n^3) with good
//! constants beats pulling in a general linear-algebra stack.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
// required in no_std builds, shadowed by std's inherent methods elsewhere
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense 3x3 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMatrix3 {
    pub entries: [[Complex64; 3]; 3],
}

impl CMatrix3 {
    pub const fn zero() -> Self {
        CMatrix3 {
            entries: [[ZERO; 3]; 3],
        }
    }

    pub const fn identity() -> Self {
        let mut m = CMatrix3::zero();
        m.entries[0][0] = ONE;
        m.entries[1][1] = ONE;
        m.entries[2][2] = ONE;
        m
    }

    pub const fn from_entries(entries: [[Complex64; 3]; 3]) -> Self {
        CMatrix3 { entries }
    }

    /// |p><q| on the computational basis.
    pub fn ketbra(p: usize, q: usize) -> Result<Self> {
        if p > 2 {
            return Err(Error::IndexOutOfRange {
                what: "ket",
                index: p,
                limit: 2,
            });
        }
        if q > 2 {
            return Err(Error::IndexOutOfRange {
                what: "bra",
                index: q,
                limit: 2,
            });
        }
        let mut m = CMatrix3::zero();
        m.entries[p][q] = ONE;
        Ok(m)
    }

    pub fn adjoint(&self) -> Self {
        let mut m = CMatrix3::zero();
        for r in 0..3 {
            for c in 0..3 {
                m.entries[r][c] = self.entries[c][r].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1] + self.entries[2][2]
    }

    pub fn scaled(&self, s: f64) -> Self {
        self.scaled_c(Complex64::new(s, 0.0))
    }

    pub fn scaled_c(&self, s: Complex64) -> Self {
        let mut m = *self;
        for row in m.entries.iter_mut() {
            for e in row.iter_mut() {
                *e *= s;
            }
        }
        m
    }

    /// max |self - self^dag|, zero exactly when Hermitian.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..3 {
            for c in 0..3 {
                let d = (self.entries[r][c] - self.entries[c][r].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// max |self - other| over entries.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..3 {
            for c in 0..3 {
                worst = worst.max((self.entries[r][c] - other.entries[r][c]).norm());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.max_abs_diff(&CMatrix3::zero())
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|e| e.re.is_finite() && e.im.is_finite())
    }

    /// Ascending eigenvalues of the Hermitian part; errors if the matrix is
    /// not Hermitian to 1e-9.
    pub fn eigenvalues(&self) -> Result<[f64; 3]> {
        let eig = hermitian_eig(&CMatrixN::from_mat3(self))?;
        Ok([eig.values[0], eig.values[1], eig.values[2]])
    }
}

impl Index<(usize, usize)> for CMatrix3 {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.entries[r][c]
    }
}

impl IndexMut<(usize, usize)> for CMatrix3 {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[r][c]
    }
}

impl Add for CMatrix3 {
    type Output = CMatrix3;
    fn add(self, rhs: CMatrix3) -> CMatrix3 {
        let mut m = self;
        for r in 0..3 {
            for c in 0..3 {
                m.entries[r][c] += rhs.entries[r][c];
            }
        }
        m
    }
}

impl Sub for CMatrix3 {
    type Output = CMatrix3;
    fn sub(self, rhs: CMatrix3) -> CMatrix3 {
        let mut m = self;
        for r in 0..3 {
            for c in 0..3 {
                m.entries[r][c] -= rhs.entries[r][c];
            }
        }
        m
    }
}

impl Neg for CMatrix3 {
    type Output = CMatrix3;
    fn neg(self) -> CMatrix3 {
        self.scaled(-1.0)
    }
}

impl Mul for CMatrix3 {
    type Output = CMatrix3;
    fn mul(self, rhs: CMatrix3) -> CMatrix3 {
        let mut m = CMatrix3::zero();
        for r in 0..3 {
            for k in 0..3 {
                let a = self.entries[r][k];
                if a == ZERO {
                    continue;
                }
                for c in 0..3 {
                    m.entries[r][c] += a * rhs.entries[k][c];
                }
            }
        }
        m
    }
}

/// The eight Gell-Mann matrices, `i` in 1..=8.
///
/// Conventions: Lambda_1..3 act on the {|0>,|1>} block like the Pauli
/// matrices, Lambda_4,5 couple |0> and |2>, Lambda_6,7 couple |1> and |2>,
/// and Lambda_8 = diag(1, 1, -2)/sqrt(3). All are Hermitian, traceless, and
/// normalized to Tr(Lambda_i^2) = 2.
pub fn gell_mann(i: usize) -> Result<CMatrix3> {
    let c = Complex64::new;
    let s3 = 1.0 / 3.0f64.sqrt();
    let mut m = CMatrix3::zero();
    match i {
        1 => {
            m.entries[0][1] = ONE;
            m.entries[1][0] = ONE;
        }
        2 => {
            m.entries[0][1] = c(0.0, -1.0);
            m.entries[1][0] = c(0.0, 1.0);
        }
        3 => {
            m.entries[0][0] = ONE;
            m.entries[1][1] = -ONE;
        }
        4 => {
            m.entries[0][2] = ONE;
            m.entries[2][0] = ONE;
        }
        5 => {
            m.entries[0][2] = c(0.0, -1.0);
            m.entries[2][0] = c(0.0, 1.0);
        }
        6 => {
            m.entries[1][2] = ONE;
            m.entries[2][1] = ONE;
        }
        7 => {
            m.entries[1][2] = c(0.0, -1.0);
            m.entries[2][1] = c(0.0, 1.0);
        }
        8 => {
            m.entries[0][0] = c(s3, 0.0);
            m.entries[1][1] = c(s3, 0.0);
            m.entries[2][2] = c(-2.0 * s3, 0.0);
        }
        _ => {
            return Err(Error::IndexOutOfRange {
                what: "Gell-Mann",
                index: i,
                limit: 8,
            })
        }
    }
    Ok(m)
}

/// Fixed operator basis {E_1 = I, E_2 = Lambda_1, ..., E_9 = Lambda_8} used
/// for every chi-matrix in this crate. Index 0-based: element(0) is the
/// identity, element(i) for i >= 1 is Lambda_i.
#[derive(Debug, Clone)]
pub struct OperatorBasis {
    elements: [CMatrix3; 9],
}

impl OperatorBasis {
    pub fn standard() -> Self {
        let mut elements = [CMatrix3::identity(); 9];
        for i in 1..9 {
            // index is in range by construction
            elements[i] = gell_mann(i).unwrap();
        }
        OperatorBasis { elements }
    }

    pub fn element(&self, i: usize) -> Result<&CMatrix3> {
        self.elements.get(i).ok_or(Error::IndexOutOfRange {
            what: "operator basis",
            index: i,
            limit: 8,
        })
    }

    pub fn elements(&self) -> &[CMatrix3; 9] {
        &self.elements
    }
}

impl Index<usize> for OperatorBasis {
    type Output = CMatrix3;
    fn index(&self, i: usize) -> &CMatrix3 {
        &self.elements[i]
    }
}

/// The nine input operators |p><q| fed through the process, ordered
/// row-major: index k = 3p + q, so k = 0, 4, 8 are the basis-state
/// projectors and the rest are the (non-Hermitian) coherence operators.
#[derive(Debug, Clone)]
pub struct StateBasis {
    elements: [CMatrix3; 9],
}

impl StateBasis {
    pub fn standard() -> Self {
        let mut elements = [CMatrix3::zero(); 9];
        for p in 0..3 {
            for q in 0..3 {
                elements[3 * p + q] = CMatrix3::ketbra(p, q).unwrap();
            }
        }
        StateBasis { elements }
    }

    pub fn element(&self, k: usize) -> Result<&CMatrix3> {
        self.elements.get(k).ok_or(Error::IndexOutOfRange {
            what: "state basis",
            index: k,
            limit: 8,
        })
    }

    pub fn elements(&self) -> &[CMatrix3; 9] {
        &self.elements
    }

    /// (p, q) labels of element k.
    pub fn index_to_pq(k: usize) -> Result<(usize, usize)> {
        if k > 8 {
            return Err(Error::IndexOutOfRange {
                what: "state basis",
                index: k,
                limit: 8,
            });
        }
        Ok((k / 3, k % 3))
    }

    pub fn pq_to_index(p: usize, q: usize) -> Result<usize> {
        if p > 2 || q > 2 {
            return Err(Error::IndexOutOfRange {
                what: "state label",
                index: p.max(q),
                limit: 2,
            });
        }
        Ok(3 * p + q)
    }
}

impl Index<usize> for StateBasis {
    type Output = CMatrix3;
    fn index(&self, k: usize) -> &CMatrix3 {
        &self.elements[k]
    }
}

/// Dense n x n complex matrix, row-major heap storage.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrixN {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrixN {
    pub fn zeros(dim: usize) -> Self {
        CMatrixN {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = CMatrixN::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_mat3(m: &CMatrix3) -> Self {
        let mut out = CMatrixN::zeros(3);
        for r in 0..3 {
            for c in 0..3 {
                out[(r, c)] = m.entries[r][c];
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn adjoint(&self) -> Self {
        let mut out = CMatrixN::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out[(r, c)] = self[(c, r)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a -= b;
        }
        out
    }

    pub fn scaled(&self, s: f64) -> Self {
        let mut out = self.clone();
        for e in out.data.iter_mut() {
            *e *= s;
        }
        out
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = CMatrixN::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a == ZERO {
                    continue;
                }
                let row = &rhs.data[k * n..(k + 1) * n];
                let dst = &mut out.data[r * n..(r + 1) * n];
                for (d, b) in dst.iter_mut().zip(row.iter()) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in r..self.dim {
                let d = (self[(r, c)] - self[(c, r)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// (self + self^dag) / 2.
    pub fn hermitized(&self) -> Self {
        let mut out = CMatrixN::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out[(r, c)] = (self[(r, c)] + self[(c, r)].conj()) * 0.5;
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |w, e| w.max(e.norm()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(other.data.iter())
            .fold(0.0f64, |w, (a, b)| w.max((a - b).norm()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data
            .iter()
            .map(|e| e.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Max row sum of absolute values (the infinity operator norm).
    pub fn inf_norm(&self) -> f64 {
        (0..self.dim)
            .map(|r| {
                self.data[r * self.dim..(r + 1) * self.dim]
                    .iter()
                    .map(|e| e.norm())
                    .sum::<f64>()
            })
            .fold(0.0f64, f64::max)
    }

    pub fn column(&self, c: usize) -> Vec<Complex64> {
        (0..self.dim).map(|r| self[(r, c)]).collect()
    }
}

impl Index<(usize, usize)> for CMatrixN {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for CMatrixN {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.dim + c]
    }
}

/// Result of [`hermitian_eig`]: `values` ascending, `vectors` unitary with
/// eigenvector i in column i, so M = V diag(values) V^dag.
#[derive(Debug, Clone)]
pub struct Eigendecomposition {
    pub values: Vec<f64>,
    pub vectors: CMatrixN,
}

/// Input tolerance: how far from Hermitian a matrix may be before the
/// Hermitian-only routines refuse it.
pub const HERMITICITY_TOLERANCE: f64 = 1e-9;

const JACOBI_MAX_SWEEPS: usize = 64;

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Each rotation zeroes one off-diagonal pair via a complex Givens rotation;
/// sweeps repeat until the off-diagonal Frobenius norm falls below 1e-14
/// relative to the matrix norm. Quadratic convergence makes this reliable
/// and, at the 81x81 sizes used here, fast enough that no blocked algorithm
/// is warranted. Errors if the input is not Hermitian to
/// [`HERMITICITY_TOLERANCE`] or (not observed in practice) the sweep limit
/// is exhausted.
pub fn hermitian_eig(m: &CMatrixN) -> Result<Eigendecomposition> {
    let residual = m.hermiticity_residual();
    if residual > HERMITICITY_TOLERANCE {
        return Err(Error::NotHermitian {
            residual,
            tolerance: HERMITICITY_TOLERANCE,
        });
    }
    let n = m.dim();
    // Work on the exactly-Hermitian average so roundoff asymmetry in the
    // input cannot leak into the rotations.
    let mut a = m.hermitized();
    let mut v = CMatrixN::identity(n);
    let scale = a.frobenius_norm();
    if scale == 0.0 {
        return Ok(Eigendecomposition {
            values: vec![0.0; n],
            vectors: v,
        });
    }
    let target = 1e-14 * scale;

    let off_norm = |a: &CMatrixN| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                s += 2.0 * a[(p, q)].norm_sqr();
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= target {
            break;
        }
        if sweeps >= JACOBI_MAX_SWEEPS {
            return Err(Error::EigConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let w = a[(p, q)];
                let aw = w.norm();
                if aw == 0.0 {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                // Classic stable rotation angle: tan(2 theta) = 2|w| / (aqq - app),
                // taking the smaller root so |theta| <= pi/4.
                let tau = (aqq - app) / (2.0 * aw);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let phase = w / Complex64::new(aw, 0.0);
                let sigma = phase * s;

                let new_pp = app * c * c + aqq * s * s - 2.0 * s * c * aw;
                let new_qq = app * s * s + aqq * c * c + 2.0 * s * c * aw;
                a[(p, p)] = Complex64::new(new_pp, 0.0);
                a[(q, q)] = Complex64::new(new_qq, 0.0);
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[(r, p)];
                    let arq = a[(r, q)];
                    let np = arp * c - arq * sigma.conj();
                    let nq = arp * sigma + arq * c;
                    a[(r, p)] = np;
                    a[(r, q)] = nq;
                    a[(p, r)] = np.conj();
                    a[(q, r)] = nq.conj();
                }
                for r in 0..n {
                    let vrp = v[(r, p)];
                    let vrq = v[(r, q)];
                    v[(r, p)] = vrp * c - vrq * sigma.conj();
                    v[(r, q)] = vrp * sigma + vrq * c;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = CMatrixN::zeros(n);
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            vectors[(r, dst)] = v[(r, src)];
        }
    }
    Ok(Eigendecomposition { values, vectors })
}

/// Default clamp window for [`sqrt_psd`]: eigenvalues in [-1e-8, 0) are
/// treated as roundoff and clamped to zero, anything lower is an error.
pub const PSD_CLAMP_DEFAULT: f64 = 1e-8;

/// Principal square root of a Hermitian PSD matrix via eigendecomposition,
/// with the default clamp window [`PSD_CLAMP_DEFAULT`].
pub fn sqrt_psd(m: &CMatrixN) -> Result<CMatrixN> {
    sqrt_psd_clamped(m, PSD_CLAMP_DEFAULT)
}

/// [`sqrt_psd`] with an explicit clamp window: eigenvalues in [-clamp, 0)
/// become zero, eigenvalues below -clamp raise [`Error::NegativeEigenvalue`]
/// so genuine positivity violations are never smoothed over silently.
pub fn sqrt_psd_clamped(m: &CMatrixN, clamp: f64) -> Result<CMatrixN> {
    let eig = hermitian_eig(m)?;
    let n = m.dim();
    let mut w = eig.vectors.clone();
    for (i, &lambda) in eig.values.iter().enumerate() {
        if lambda < -clamp {
            return Err(Error::NegativeEigenvalue {
                value: lambda,
                tolerance: clamp,
            });
        }
        let root = lambda.max(0.0).sqrt();
        for r in 0..n {
            w[(r, i)] *= root;
        }
    }
    Ok(w.matmul(&eig.vectors.adjoint()))
}

/// Solution of a linear system together with its diagnostics.
#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub solution: Vec<Complex64>,
    /// Infinity-norm condition number ||A|| * ||A^-1||, computed exactly
    /// from the factorization (cheap at these sizes).
    pub condition: f64,
    /// ||A x - b|| in the max norm, against the original matrix.
    pub residual: f64,
}

const PIVOT_RELATIVE_FLOOR: f64 = 1e-12;

struct LuFactors {
    lu: CMatrixN,
    perm: Vec<usize>,
}

fn lu_factor(a: &CMatrixN) -> Result<LuFactors> {
    let n = a.dim();
    let scale = a.max_abs();
    if scale == 0.0 {
        return Err(Error::SingularMatrix {
            pivot: 0.0,
            scale: 0.0,
        });
    }
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    for col in 0..n {
        let mut best = col;
        let mut best_mag = lu[(col, col)].norm();
        for r in (col + 1)..n {
            let mag = lu[(r, col)].norm();
            if mag > best_mag {
                best = r;
                best_mag = mag;
            }
        }
        if best_mag < PIVOT_RELATIVE_FLOOR * scale {
            return Err(Error::SingularMatrix {
                pivot: best_mag,
                scale,
            });
        }
        if best != col {
            for c in 0..n {
                let tmp = lu[(col, c)];
                lu[(col, c)] = lu[(best, c)];
                lu[(best, c)] = tmp;
            }
            perm.swap(col, best);
        }
        let pivot = lu[(col, col)];
        for r in (col + 1)..n {
            let factor = lu[(r, col)] / pivot;
            lu[(r, col)] = factor;
            for c in (col + 1)..n {
                let sub = factor * lu[(col, c)];
                lu[(r, c)] -= sub;
            }
        }
    }
    Ok(LuFactors { lu, perm })
}

fn lu_solve_vec(f: &LuFactors, b: &[Complex64]) -> Vec<Complex64> {
    let n = f.lu.dim();
    let mut y = vec![ZERO; n];
    for r in 0..n {
        let mut acc = b[f.perm[r]];
        for c in 0..r {
            acc -= f.lu[(r, c)] * y[c];
        }
        y[r] = acc;
    }
    for r in (0..n).rev() {
        let mut acc = y[r];
        for c in (r + 1)..n {
            acc -= f.lu[(r, c)] * y[c];
        }
        y[r] = acc / f.lu[(r, r)];
    }
    y
}

/// Solve A x = b by LU with partial pivoting.
///
/// A pivot below 1e-12 relative to max|A| raises [`Error::SingularMatrix`].
/// The condition number is the exact infinity-norm kappa, obtained by
/// solving for all columns of A^-1 with the same factorization; at n <= 81
/// this costs the same as the factorization itself and removes any doubt an
/// estimate would leave.
pub fn solve_linear(a: &CMatrixN, b: &[Complex64]) -> Result<LinearSolution> {
    let n = a.dim();
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.len(),
        });
    }
    let factors = lu_factor(a)?;
    let solution = lu_solve_vec(&factors, b);

    let mut inv_inf = 0.0f64;
    let mut row_sums = vec![0.0f64; n];
    let mut e = vec![ZERO; n];
    for col in 0..n {
        e[col] = ONE;
        let x = lu_solve_vec(&factors, &e);
        e[col] = ZERO;
        for (r, xv) in x.iter().enumerate() {
            row_sums[r] += xv.norm();
        }
    }
    for s in row_sums {
        inv_inf = inv_inf.max(s);
    }
    let condition = a.inf_norm() * inv_inf;

    let mut residual = 0.0f64;
    for r in 0..n {
        let mut acc = ZERO;
        for c in 0..n {
            acc += a[(r, c)] * solution[c];
        }
        residual = residual.max((acc - b[r]).norm());
    }

    Ok(LinearSolution {
        solution,
        condition,
        residual,
    })
}
