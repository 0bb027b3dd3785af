//! Dense complex linear algebra for N-qubit states and single-qubit operators.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul};

// float math for no_std; unused when std is linked
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::{C64, DEFAULT_TOL, MAX_QUBITS};

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

/// Magnitude below which a vector component counts as zero when fixing phases.
const PHASE_EPS: f64 = 1e-12;

/// A 2x2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2 {
    pub entries: [[C64; 2]; 2],
}

impl Matrix2 {
    pub const fn new(entries: [[C64; 2]; 2]) -> Self {
        Matrix2 { entries }
    }

    pub const fn identity() -> Self {
        Matrix2::new([[ONE, ZERO], [ZERO, ONE]])
    }

    pub const fn pauli_x() -> Self {
        Matrix2::new([[ZERO, ONE], [ONE, ZERO]])
    }

    pub const fn pauli_y() -> Self {
        Matrix2::new([[ZERO, C64::new(0.0, -1.0)], [I, ZERO]])
    }

    pub const fn pauli_z() -> Self {
        Matrix2::new([[ONE, ZERO], [ZERO, C64::new(-1.0, 0.0)]])
    }

    /// `i * sigma_y = [[0, 1], [-1, 0]]`, the usual "defect" operator.
    pub const fn i_sigma_y() -> Self {
        Matrix2::new([[ZERO, ONE], [C64::new(-1.0, 0.0), ZERO]])
    }

    pub fn hadamard() -> Self {
        let h = C64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        Matrix2::new([[h, h], [h, -h]])
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[row][col]
    }

    pub fn adjoint(&self) -> Self {
        let e = &self.entries;
        Matrix2::new([
            [e[0][0].conj(), e[1][0].conj()],
            [e[0][1].conj(), e[1][1].conj()],
        ])
    }

    pub fn det(&self) -> C64 {
        let e = &self.entries;
        e[0][0] * e[1][1] - e[0][1] * e[1][0]
    }

    pub fn trace(&self) -> C64 {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn scale(&self, s: C64) -> Self {
        let e = &self.entries;
        Matrix2::new([[e[0][0] * s, e[0][1] * s], [e[1][0] * s, e[1][1] * s]])
    }

    #[inline]
    pub fn apply(&self, v: [C64; 2]) -> [C64; 2] {
        let e = &self.entries;
        [
            e[0][0] * v[0] + e[0][1] * v[1],
            e[1][0] * v[0] + e[1][1] * v[1],
        ]
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Matrix2) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.entries[r][c] - other.entries[r][c]).norm());
            }
        }
        worst
    }

    /// `max |U^dagger U - I|` entrywise.
    pub fn unitarity_defect(&self) -> f64 {
        (self.adjoint() * *self).max_abs_diff(&Matrix2::identity())
    }

    /// `max |M M^dagger - M^dagger M|` entrywise.
    pub fn normality_defect(&self) -> f64 {
        let adj = self.adjoint();
        (*self * adj).max_abs_diff(&(adj * *self))
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.is_finite() && self.unitarity_defect() <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;

    fn mul(self, rhs: Matrix2) -> Matrix2 {
        let a = &self.entries;
        let b = &rhs.entries;
        let mut out = [[ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Matrix2::new(out)
    }
}

impl Add for Matrix2 {
    type Output = Matrix2;

    fn add(self, rhs: Matrix2) -> Matrix2 {
        let a = &self.entries;
        let b = &rhs.entries;
        Matrix2::new([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }
}

impl Mul<f64> for Matrix2 {
    type Output = Matrix2;

    fn mul(self, rhs: f64) -> Matrix2 {
        self.scale(C64::new(rhs, 0.0))
    }
}

impl AsRef<Matrix2> for Matrix2 {
    fn as_ref(&self) -> &Matrix2 {
        self
    }
}

/// A single-qubit operator in SU(2): unitary with unit determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalUnitary(Matrix2);

impl LocalUnitary {
    /// Validates unitarity and `det = 1` within [`DEFAULT_TOL`].
    pub fn new(m: Matrix2) -> Result<Self> {
        Self::with_tol(m, DEFAULT_TOL)
    }

    pub fn with_tol(m: Matrix2, tol: f64) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite("operator"));
        }
        let deviation = m.unitarity_defect();
        if deviation > tol {
            return Err(Error::NotUnitary { deviation });
        }
        let det = m.det();
        if (det - ONE).norm() > tol {
            return Err(Error::NotSpecialUnitary {
                det: (det.re, det.im),
            });
        }
        Ok(LocalUnitary(m))
    }

    pub const fn identity() -> Self {
        LocalUnitary(Matrix2::identity())
    }

    pub const fn i_sigma_y() -> Self {
        LocalUnitary(Matrix2::i_sigma_y())
    }

    #[inline]
    pub fn matrix(&self) -> &Matrix2 {
        &self.0
    }

    pub fn adjoint(&self) -> LocalUnitary {
        LocalUnitary(self.0.adjoint())
    }
}

impl AsRef<Matrix2> for LocalUnitary {
    fn as_ref(&self) -> &Matrix2 {
        &self.0
    }
}

impl From<LocalUnitary> for Matrix2 {
    fn from(u: LocalUnitary) -> Matrix2 {
        u.0
    }
}

/// `[[e^{ia} cos g, e^{ib} sin g], [-e^{-ib} sin g, e^{-ia} cos g]]`.
///
/// Covers all of SU(2); the determinant is `cos^2 g + sin^2 g`.
pub fn su2_from_angles(alpha: f64, beta: f64, gamma: f64) -> LocalUnitary {
    let (s, c) = gamma.sin_cos();
    let ea = C64::from_polar(1.0, alpha);
    let eb = C64::from_polar(1.0, beta);
    LocalUnitary(Matrix2::new([
        [ea * c, eb * s],
        [-eb.conj() * s, ea.conj() * c],
    ]))
}

/// Strips the global phase of a unitary: returns `u / sqrt(det u)` with the
/// principal square root.
///
/// A determinant already within tolerance of 1 is left untouched, so the
/// projection is exactly idempotent and SU(2) inputs round-trip bit for bit.
/// Determinants on the negative real axis take the root `+i sqrt|det|`
/// regardless of the sign of the rounding residue in the imaginary part.
pub fn project_to_su2(u: &Matrix2) -> Result<LocalUnitary> {
    project_to_su2_with_tol(u, DEFAULT_TOL)
}

pub fn project_to_su2_with_tol(u: &Matrix2, tol: f64) -> Result<LocalUnitary> {
    if !u.is_finite() {
        return Err(Error::NonFinite("operator"));
    }
    let deviation = u.unitarity_defect();
    if deviation > tol {
        return Err(Error::NotUnitary { deviation });
    }
    let det = u.det();
    if (det - ONE).norm() <= tol {
        return Ok(LocalUnitary(*u));
    }
    let det = if det.re < 0.0 && det.im.abs() <= tol {
        C64::new(det.re, 0.0)
    } else {
        det
    };
    let root = det.sqrt();
    Ok(LocalUnitary(u.scale(root.inv())))
}

/// Closed-form eigendecomposition of a normal 2x2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigen2 {
    /// Larger imaginary part first; ties broken by larger real part.
    pub values: [C64; 2],
    /// `vectors[k]` is the unit eigenvector for `values[k]`, with its first
    /// nonzero component real and positive.
    pub vectors: [[C64; 2]; 2],
    /// Both eigenvalues coincide; the matrix is a multiple of the identity
    /// and the standard basis is returned.
    pub degenerate: bool,
}

impl Eigen2 {
    /// `V^dagger`, whose rows are the conjugated eigenvectors, so that
    /// `V^dagger M V = diag(values)`.
    pub fn diagonalizer(&self) -> Matrix2 {
        let v = &self.vectors;
        Matrix2::new([
            [v[0][0].conj(), v[0][1].conj()],
            [v[1][0].conj(), v[1][1].conj()],
        ])
    }

    /// `V diag(values) V^dagger`.
    pub fn reconstruct(&self) -> Matrix2 {
        let z = self.diagonalizer();
        let d = Matrix2::new([[self.values[0], ZERO], [ZERO, self.values[1]]]);
        z.adjoint() * d * z
    }
}

pub fn eig2(m: &Matrix2) -> Result<Eigen2> {
    eig2_with_tol(m, DEFAULT_TOL)
}

pub fn eig2_with_tol(m: &Matrix2, tol: f64) -> Result<Eigen2> {
    if !m.is_finite() {
        return Err(Error::NonFinite("matrix"));
    }
    let deviation = m.normality_defect();
    if deviation > tol {
        return Err(Error::NotNormal { deviation });
    }
    let [[a, b], [c, d]] = m.entries;
    let half_trace = (a + d) * 0.5;
    let half_gap = (a - d) * 0.5;
    let root = (half_gap * half_gap + b * c).sqrt();
    let mut l1 = half_trace + root;
    let mut l2 = half_trace - root;

    if (l1 - l2).norm() <= tol {
        return Ok(Eigen2 {
            values: [a, d],
            vectors: [[ONE, ZERO], [ZERO, ONE]],
            degenerate: true,
        });
    }
    let swap = if (l1.im - l2.im).abs() <= tol {
        l2.re > l1.re
    } else {
        l2.im > l1.im
    };
    if swap {
        core::mem::swap(&mut l1, &mut l2);
    }

    // (M - l1) v = 0 has the two candidate solutions below; for a
    // non-degenerate matrix at least one of them is nonzero.
    let from_row0 = [b, l1 - a];
    let from_row1 = [l1 - d, c];
    let v1 = if norm2(&from_row0) >= norm2(&from_row1) {
        from_row0
    } else {
        from_row1
    };
    let v1 = fix_phase(normalize2(v1));
    let v2 = fix_phase([-v1[1].conj(), v1[0].conj()]);
    Ok(Eigen2 {
        values: [l1, l2],
        vectors: [v1, v2],
        degenerate: false,
    })
}

fn norm2(v: &[C64; 2]) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
}

fn normalize2(v: [C64; 2]) -> [C64; 2] {
    let n = norm2(&v);
    [v[0] / n, v[1] / n]
}

fn fix_phase(v: [C64; 2]) -> [C64; 2] {
    let lead = if v[0].norm() > PHASE_EPS { v[0] } else { v[1] };
    let phase = lead.conj() / lead.norm();
    [v[0] * phase, v[1] * phase]
}

/// Dense square complex matrix, row-major. Used to materialize tensor
/// products for small systems and as an oracle for [`apply_local`].
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl SquareMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![ZERO; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = ONE;
        }
        SquareMatrix { dim, data }
    }

    /// Builds a matrix from row-major entries; `data.len()` must be a square.
    pub fn from_row_major(dim: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::Dimension {
                what: "square matrix entries",
                expected: dim * dim,
                found: data.len(),
            });
        }
        Ok(SquareMatrix { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.data[row * self.dim + col]
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn mul_vec(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.dim {
            return Err(Error::Dimension {
                what: "matrix-vector product",
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(self
            .data
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }
}

impl From<&Matrix2> for SquareMatrix {
    fn from(m: &Matrix2) -> Self {
        let e = &m.entries;
        SquareMatrix {
            dim: 2,
            data: vec![e[0][0], e[0][1], e[1][0], e[1][1]],
        }
    }
}

/// Kronecker product `a (x) b`.
pub fn kron(a: &SquareMatrix, b: &SquareMatrix) -> SquareMatrix {
    let dim = a.dim * b.dim;
    let mut data = vec![ZERO; dim * dim];
    for ar in 0..a.dim {
        for ac in 0..a.dim {
            let s = a.get(ar, ac);
            for br in 0..b.dim {
                let row = ar * b.dim + br;
                for bc in 0..b.dim {
                    data[row * dim + ac * b.dim + bc] = s * b.get(br, bc);
                }
            }
        }
    }
    SquareMatrix { dim, data }
}

/// `ops[0] (x) ops[1] (x) ... (x) ops[N-1]`; empty input gives the 1x1 identity.
pub fn kron_all<M: AsRef<Matrix2>>(ops: &[M]) -> SquareMatrix {
    ops.iter().fold(SquareMatrix::identity(1), |acc, op| {
        kron(&acc, &op.as_ref().into())
    })
}

/// Normalized amplitude vector of an N-qubit pure state.
///
/// Amplitude index `b` encodes the ket `|i1 i2 ... iN>` with player 1 as the
/// most significant bit: `b = sum_j i_j 2^(N-j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: Vec<C64>,
}

impl PureState {
    /// Validates length and normalization within [`DEFAULT_TOL`].
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        Self::with_tol(amplitudes, DEFAULT_TOL)
    }

    pub fn with_tol(amplitudes: Vec<C64>, tol: f64) -> Result<Self> {
        let n_qubits = qubits_for_len(amplitudes.len())?;
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite("amplitudes"));
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > tol {
            return Err(Error::NotNormalized { norm });
        }
        Ok(PureState {
            n_qubits,
            amplitudes,
        })
    }

    /// Rescales a nonzero vector to unit norm.
    pub fn normalized(mut amplitudes: Vec<C64>) -> Result<Self> {
        let n_qubits = qubits_for_len(amplitudes.len())?;
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::NotNormalized { norm });
        }
        for z in &mut amplitudes {
            *z /= norm;
        }
        Ok(PureState {
            n_qubits,
            amplitudes,
        })
    }

    /// Computational basis state `|b>`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits(n_qubits));
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::Dimension {
                what: "basis index",
                expected: dim,
                found: index,
            });
        }
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[index] = ONE;
        Ok(PureState {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<C64> {
        self.amplitudes
    }

    /// `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &PureState) -> C64 {
        inner(&self.amplitudes, &other.amplitudes)
    }

    /// Bit of player `player` (0-based) in amplitude index `b`.
    #[inline]
    pub fn player_bit(&self, b: usize, player: usize) -> usize {
        (b >> (self.n_qubits - 1 - player)) & 1
    }

    /// Largest entrywise amplitude difference.
    pub fn max_abs_diff(&self, other: &PureState) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

pub(crate) fn inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn qubits_for_len(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::Length(len));
    }
    let n = len.trailing_zeros() as usize;
    if n > MAX_QUBITS {
        return Err(Error::TooManyQubits(n));
    }
    Ok(n)
}

/// Applies `ops[0] (x) ... (x) ops[N-1]` to `state` one qubit at a time,
/// without materializing the `2^N x 2^N` matrix.
///
/// Operators need not be special unitary, but the result must still be a
/// normalized state.
pub fn apply_local<M: AsRef<Matrix2>>(ops: &[M], state: &PureState) -> Result<PureState> {
    if ops.len() != state.n_qubits {
        return Err(Error::Dimension {
            what: "local operators",
            expected: state.n_qubits,
            found: ops.len(),
        });
    }
    let mut amps = state.amplitudes.clone();
    for (player, op) in ops.iter().enumerate() {
        apply_single(op.as_ref(), state.n_qubits, player, &mut amps);
    }
    PureState::new(amps)
}

/// In-place application of `op` to player `player` (0-based).
pub(crate) fn apply_single(op: &Matrix2, n_qubits: usize, player: usize, amps: &mut [C64]) {
    let stride = 1usize << (n_qubits - 1 - player);
    let block = stride << 1;
    for base in (0..amps.len()).step_by(block) {
        for lo in base..base + stride {
            let hi = lo + stride;
            let [x, y] = op.apply([amps[lo], amps[hi]]);
            amps[lo] = x;
            amps[hi] = y;
        }
    }
}
