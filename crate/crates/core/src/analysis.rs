//! Distinguishability analysis.
//!
//! A (state, assignment) pair reproduces a classical game iff the `2^N`
//! output states are pairwise orthogonal. The same condition has an
//! operator-side form (every `u1^dagger u2` has eigenvalues `{i, -i}`) and a
//! state-side form (after the per-player diagonalizers, every sigma_z
//! correlation vanishes, which pins all `|c_b|^2` to `2^-N`). This module
//! computes all three so they can be cross-checked.

use crate::classical::{ClassicalGame, MixedProfile};
use crate::error::{Error, Result};
use crate::quantum::{
    mixed_operators, output_states, QuantumGameModel, StrategyAssignment, ThetaProfile,
};
use crate::tensor::{apply_local, eig2_with_tol, inner, Matrix2, PureState};
use crate::C64;
use alloc::vec;
use alloc::vec::Vec;

/// Mixed strategies map to classical probabilities via `q_k(1) = cos^2 theta_k`.
pub const PROBABILITY_MAPPING_NOTE: &str =
    "mixed strategy w_k = cos(theta_k) u1 + sin(theta_k) u2 plays strategy 1 with probability cos^2(theta_k)";

/// Target magnitude for the canonical form: `|c_b|^2 = 2^-N`.
pub const MAGNITUDE_NOTE: &str =
    "canonical-form amplitudes must satisfy |c_b|^2 = 2^-N (unique solution of the sigma_z correlation system)";

/// Inner products `G[a][b] = <Phi_a|Phi_b>` of all output states, indexed by
/// strategy index.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    dim: usize,
    entries: Vec<C64>,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: usize, b: usize) -> C64 {
        self.entries[a * self.dim + b]
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    /// Largest `|G[a][b]|` with `a < b`, and the first pair attaining it.
    pub fn max_offdiag(&self) -> (f64, (usize, usize)) {
        let mut worst = (0.0, (0, 1.min(self.dim - 1)));
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let v = self.get(a, b).norm();
                if v > worst.0 {
                    worst = (v, (a, b));
                }
            }
        }
        worst
    }

    /// `max |G - G^dagger|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..self.dim {
            for b in a..self.dim {
                worst = worst.max((self.get(a, b) - self.get(b, a).conj()).norm());
            }
        }
        worst
    }

    /// `max |G[a][a] - 1|`.
    pub fn diagonal_defect(&self) -> f64 {
        (0..self.dim)
            .map(|a| (self.get(a, a) - C64::new(1.0, 0.0)).norm())
            .fold(0.0, f64::max)
    }
}

pub fn gram_matrix(state: &PureState, assignment: &StrategyAssignment) -> Result<GramMatrix> {
    let phis = output_states(state, assignment)?;
    let dim = phis.len();
    let mut entries = vec![C64::new(0.0, 0.0); dim * dim];
    for a in 0..dim {
        entries[a * dim + a] = phis[a].inner(&phis[a]);
        for b in a + 1..dim {
            let g = inner(phis[a].amplitudes(), phis[b].amplitudes());
            entries[a * dim + b] = g;
            entries[b * dim + a] = g.conj();
        }
    }
    Ok(GramMatrix { dim, entries })
}

/// Spectral test of one operator pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumCheck {
    /// Eigenvalues of `u1^dagger u2` are `{i, -i}` within tolerance.
    pub ok: bool,
    /// Larger imaginary part first.
    pub eigenvalues: [C64; 2],
    /// `u1^dagger u2` is a multiple of the identity.
    pub degenerate: bool,
    /// `z` with `z (u1^dagger u2) z^dagger = diag(eigenvalues)`.
    pub diagonalizer: Matrix2,
    /// Argument of the first eigenvalue.
    pub phase: f64,
}

/// Checks that `u1^dagger u2` has eigenvalues `{i, -i}`.
///
/// Works on raw matrices: a global phase on either operator rotates the
/// eigenvalues, so callers wanting a phase-free test should pass SU(2)
/// representatives.
pub fn check_operator_spectrum(u1: &Matrix2, u2: &Matrix2, tol: f64) -> Result<SpectrumCheck> {
    let relative = u1.adjoint() * *u2;
    let eig = eig2_with_tol(&relative, tol)?;
    let i = C64::new(0.0, 1.0);
    let ok =
        !eig.degenerate && (eig.values[0] - i).norm() <= tol && (eig.values[1] + i).norm() <= tol;
    Ok(SpectrumCheck {
        ok,
        eigenvalues: eig.values,
        degenerate: eig.degenerate,
        diagonalizer: eig.diagonalizer(),
        phase: eig.values[0].arg(),
    })
}

/// Per-player diagonalizers `z_k` and eigenphases `phi_k` of `u1^dagger u2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagonalizer {
    pub z: Vec<Matrix2>,
    pub phases: Vec<f64>,
}

/// Fails with the 1-based index of the first player whose pair does not
/// satisfy the spectral condition.
pub fn diagonalizer(assignment: &StrategyAssignment, tol: f64) -> Result<Diagonalizer> {
    let mut z = Vec::with_capacity(assignment.n_players());
    let mut phases = Vec::with_capacity(assignment.n_players());
    for (player, pair) in assignment.pairs().iter().enumerate() {
        let check = check_operator_spectrum(pair.u1.matrix(), pair.u2.matrix(), tol)?;
        if !check.ok {
            return Err(Error::SpectralCondition { player: player + 1 });
        }
        z.push(check.diagonalizer);
        phases.push(check.phase);
    }
    Ok(Diagonalizer { z, phases })
}

/// `Psi' = (z_1 (x) ... (x) z_N) |Psi>`.
pub fn canonical_form(
    state: &PureState,
    assignment: &StrategyAssignment,
    tol: f64,
) -> Result<PureState> {
    if assignment.n_players() != state.n_qubits() {
        return Err(Error::Dimension {
            what: "players vs qubits",
            expected: state.n_qubits(),
            found: assignment.n_players(),
        });
    }
    let d = diagonalizer(assignment, tol)?;
    apply_local(&d.z, state)
}

/// `<Psi| prod_{k in T} sigma_z^(k) |Psi>` for every nonempty player subset
/// `T`, in binary-counter order with player 1 as bit 0 (`t = 1 .. 2^N - 1`).
pub fn sigma_z_correlations(state: &PureState) -> Vec<f64> {
    let n = state.n_qubits();
    // Walsh-Hadamard transform of the probabilities, indexed by amplitude-order masks
    let mut w: Vec<f64> = state.amplitudes().iter().map(|a| a.norm_sqr()).collect();
    let mut h = 1;
    while h < w.len() {
        for base in (0..w.len()).step_by(h * 2) {
            for i in base..base + h {
                let (x, y) = (w[i], w[i + h]);
                w[i] = x + y;
                w[i + h] = x - y;
            }
        }
        h *= 2;
    }
    (1..1usize << n)
        .map(|t| {
            let mask = (0..n)
                .filter(|player| t >> player & 1 == 1)
                .fold(0, |m, player| m | 1 << (n - 1 - player));
            w[mask]
        })
        .collect()
}

/// `(ok, max_b ||c_b|^2 - 2^-N|)` with `ok` iff the deviation is below `tol`.
pub fn uniform_magnitude_check(state: &PureState, tol: f64) -> (bool, f64) {
    let target = 1.0 / state.dim() as f64;
    let deviation = state
        .amplitudes()
        .iter()
        .map(|a| (a.norm_sqr() - target).abs())
        .fold(0.0, f64::max);
    (deviation < tol, deviation)
}

/// The linear system on `|c_b|^2`: one row per nonempty subset (all sigma_z
/// correlations vanish), then the normalization row. Columns follow the
/// amplitude index.
pub fn magnitude_system(n: usize) -> (Vec<Vec<f64>>, Vec<f64>) {
    let dim = 1usize << n;
    let mut rows = Vec::with_capacity(dim);
    let mut rhs = Vec::with_capacity(dim);
    for t in 1..dim {
        rows.push(
            (0..dim)
                .map(|b| {
                    let flips = (0..n)
                        .filter(|player| t >> player & 1 == 1 && b >> (n - 1 - player) & 1 == 1)
                        .count();
                    if flips % 2 == 0 {
                        1.0
                    } else {
                        -1.0
                    }
                })
                .collect(),
        );
        rhs.push(0.0);
    }
    rows.push(vec![1.0; dim]);
    rhs.push(1.0);
    (rows, rhs)
}

/// Solves [`magnitude_system`] by Gaussian elimination.
pub fn solve_magnitude_system(n: usize) -> Result<Vec<f64>> {
    let (a, b) = magnitude_system(n);
    solve_dense(a, b)
}

/// Gaussian elimination with partial pivoting.
pub fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = b.len();
    if a.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::Dimension {
            what: "linear system",
            expected: n,
            found: a.len(),
        });
    }
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap_or(col);
        if a[pivot][col].abs() < 1e-12 {
            return Err(Error::SingularSystem);
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            if f != 0.0 {
                let (upper, lower) = a.split_at_mut(row);
                for (x, y) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                    *x -= f * y;
                }
                b[row] -= f * b[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Ok(x)
}

/// Verdict and diagnostics for one (state, assignment) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ReproReport {
    pub pass: bool,
    pub tol: f64,
    pub gram: GramMatrix,
    pub max_offdiag: f64,
    /// Strategy indices `(a, b)`, `a < b`, of the largest overlap.
    pub worst_pair: (usize, usize),
    /// One entry per player.
    pub spectrum: Vec<SpectrumCheck>,
    /// Present when the verdict is pass.
    pub canonical_state: Option<PureState>,
    /// sigma_z correlations of the canonical form; empty when some player
    /// fails the spectral check.
    pub sigma_z_residuals: Vec<f64>,
    pub magnitude_deviation: Option<f64>,
}

impl ReproReport {
    pub fn spectrum_ok(&self) -> Vec<bool> {
        self.spectrum.iter().map(|s| s.ok).collect()
    }

    /// Largest |sigma_z correlation| of the canonical form.
    pub fn max_sigma_z_residual(&self) -> Option<f64> {
        self.sigma_z_residuals
            .iter()
            .map(|r| r.abs())
            .reduce(f64::max)
    }
}

/// Runs the Gram test and, where possible, the spectral and canonical-form
/// checks. Failures are verdicts; only malformed input is an error.
pub fn check_distinguishability(
    state: &PureState,
    assignment: &StrategyAssignment,
    tol: f64,
) -> Result<ReproReport> {
    let gram = gram_matrix(state, assignment)?;
    let (max_offdiag, worst_pair) = gram.max_offdiag();
    let spectrum = assignment
        .pairs()
        .iter()
        .map(|p| check_operator_spectrum(p.u1.matrix(), p.u2.matrix(), tol))
        .collect::<Result<Vec<_>>>()?;
    let spectra_ok = spectrum.iter().all(|s| s.ok);
    let pass = max_offdiag < tol && spectra_ok;

    let (canonical_state, sigma_z_residuals, magnitude_deviation) = if spectra_ok {
        let z: Vec<Matrix2> = spectrum.iter().map(|s| s.diagonalizer).collect();
        let canonical = apply_local(&z, state)?;
        let residuals = sigma_z_correlations(&canonical);
        let (_, deviation) = uniform_magnitude_check(&canonical, tol);
        (pass.then_some(canonical), residuals, Some(deviation))
    } else {
        (None, Vec::new(), None)
    };

    Ok(ReproReport {
        pass,
        tol,
        gram,
        max_offdiag,
        worst_pair,
        spectrum,
        canonical_state,
        sigma_z_residuals,
        magnitude_deviation,
    })
}

/// Quantum and classical payoffs for one mixed-strategy profile.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedReproduction {
    pub quantum: Vec<f64>,
    pub classical: Vec<f64>,
    pub max_abs_diff: f64,
}

/// Plays `w_k(theta_k)` in the quantum model and the matching mixed profile
/// `q_k(1) = cos^2 theta_k` in the classical game.
pub fn verify_mixed_reproduction(
    game: &ClassicalGame,
    state: &PureState,
    assignment: &StrategyAssignment,
    thetas: &ThetaProfile,
    tol: f64,
) -> Result<MixedReproduction> {
    let model = QuantumGameModel::new(state.clone(), assignment.clone(), game.clone(), tol)?;
    let ops = mixed_operators(assignment, thetas, tol)?;
    let quantum = model.expected_payoff(&ops)?;
    let profile = MixedProfile::from_first_strategy_probs(&thetas.first_strategy_probs())?;
    let classical = game.mixed_payoff(&profile)?;
    let max_abs_diff = quantum
        .iter()
        .zip(&classical)
        .map(|(q, c)| (q - c).abs())
        .fold(0.0, f64::max);
    Ok(MixedReproduction {
        quantum,
        classical,
        max_abs_diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::OperatorPair;
    use crate::states::{
        bell_claim_operators, dicke22_operators, eisert_operators, make_state, StateKind,
    };
    use crate::tensor::{project_to_su2, LocalUnitary};
    use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4};

    const TOL: f64 = 1e-9;

    #[test]
    fn bell_gram_is_identity() {
        let g = gram_matrix(
            &make_state(StateKind::Bell, 2).unwrap(),
            &bell_claim_operators(),
        )
        .unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let expected = if a == b { 1.0 } else { 0.0 };
                assert!((g.get(a, b) - C64::new(expected, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn w3_gram_overlap() {
        let g = gram_matrix(&make_state(StateKind::W, 3).unwrap(), &eisert_operators(3)).unwrap();
        assert!((g.get(1, 2).norm() - 2.0 / 3.0).abs() < 1e-12);
        assert!(g.hermiticity_defect() < 1e-12);
        assert!(g.diagonal_defect() < 1e-12);
    }

    #[test]
    fn duplicated_operators_give_unit_overlap() {
        let mut pairs = eisert_operators(3).pairs().to_vec();
        pairs[1] = OperatorPair::new(LocalUnitary::i_sigma_y(), LocalUnitary::i_sigma_y());
        let a = StrategyAssignment::new(pairs).unwrap();
        let g = gram_matrix(&make_state(StateKind::Ghz, 3).unwrap(), &a).unwrap();
        let (max, pair) = g.max_offdiag();
        assert!((max - 1.0).abs() < 1e-12);
        assert_eq!(pair, (0, 2));
    }

    #[test]
    fn dicke22_passes() {
        let r = check_distinguishability(
            &make_state(StateKind::Dicke { m: 2 }, 4).unwrap(),
            &dicke22_operators(),
            TOL,
        )
        .unwrap();
        assert!(r.pass, "max offdiag {}", r.max_offdiag);
        assert!(r.canonical_state.is_some());
    }

    #[test]
    fn w_states_fail_with_eisert_operators() {
        for n in 3..=6 {
            let r = check_distinguishability(
                &make_state(StateKind::W, n).unwrap(),
                &eisert_operators(n),
                TOL,
            )
            .unwrap();
            assert!(!r.pass);
            assert!(r.spectrum_ok().iter().all(|&ok| ok));
        }
    }

    #[test]
    fn ghz_like_i_odd_fails_on_extreme_pair() {
        let r = check_distinguishability(
            &make_state(StateKind::GhzLikeI, 3).unwrap(),
            &eisert_operators(3),
            TOL,
        )
        .unwrap();
        assert!(!r.pass);
        assert!((r.gram.get(0, 7).norm() - 1.0).abs() < 1e-12);
        assert_eq!(r.worst_pair, (0, 7));
    }

    #[test]
    fn ghz_phase_parity() {
        // (i sigma_y)^{(x)N} maps |0..0> + c|1..1> to c|0..0> + (-1)^N |1..1>
        for n in 2..=6 {
            let plain = check_distinguishability(
                &make_state(StateKind::Ghz, n).unwrap(),
                &eisert_operators(n),
                TOL,
            )
            .unwrap();
            let phased = check_distinguishability(
                &make_state(StateKind::GhzLikeI, n).unwrap(),
                &eisert_operators(n),
                TOL,
            )
            .unwrap();
            assert_eq!(plain.pass, n % 2 == 1, "ghz n={n}");
            assert_eq!(phased.pass, n % 2 == 0, "ghz_like_i n={n}");
        }
    }

    #[test]
    fn spectrum_fixtures() {
        let s = check_operator_spectrum(&Matrix2::identity(), &Matrix2::i_sigma_y(), TOL).unwrap();
        assert!(s.ok);
        assert!((s.eigenvalues[0] - C64::new(0.0, 1.0)).norm() < 1e-15);

        let d = dicke22_operators();
        let s = check_operator_spectrum(d.pair(0).u1.matrix(), d.pair(0).u2.matrix(), TOL).unwrap();
        assert!(s.ok);

        let s = check_operator_spectrum(&Matrix2::identity(), &Matrix2::pauli_x(), TOL).unwrap();
        assert!(!s.ok);
        assert!((s.eigenvalues[0] - C64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((s.eigenvalues[1] + C64::new(1.0, 0.0)).norm() < 1e-15);

        let s = check_operator_spectrum(&Matrix2::i_sigma_y(), &Matrix2::i_sigma_y(), TOL).unwrap();
        assert!(!s.ok && s.degenerate);
    }

    #[test]
    fn diagonalizer_conjugates_to_i_sigma_z() {
        let d = dicke22_operators();
        let z = diagonalizer(&d, TOL).unwrap();
        let target = Matrix2::new([
            [C64::new(0.0, 1.0), C64::new(0.0, 0.0)],
            [C64::new(0.0, 0.0), C64::new(0.0, -1.0)],
        ]);
        for (zk, pair) in z.z.iter().zip(d.pairs()) {
            let conj = *zk * pair.relative() * zk.adjoint();
            assert!(conj.max_abs_diff(&target) < 1e-12);
        }
        for phi in z.phases {
            assert!((phi - FRAC_PI_2).abs() < 1e-12);
        }
    }

    #[test]
    fn canonical_form_of_ghz3() {
        let ops = eisert_operators(3);
        let z = diagonalizer(&ops, TOL).unwrap();
        let s = FRAC_1_SQRT_2;
        let expected = Matrix2::new([
            [C64::new(s, 0.0), C64::new(0.0, -s)],
            [C64::new(s, 0.0), C64::new(0.0, s)],
        ]);
        assert!(z.z[0].max_abs_diff(&expected) < 1e-15);
        let psi = canonical_form(&make_state(StateKind::Ghz, 3).unwrap(), &ops, TOL).unwrap();
        for a in psi.amplitudes() {
            assert!((a.norm_sqr() - 0.125).abs() < 1e-15);
        }
        for r in sigma_z_correlations(&psi) {
            assert!(r.abs() < 1e-10);
        }
    }

    #[test]
    fn canonical_form_of_product_state_uses_hadamard_like_z() {
        // z = H diagonalizes u^dagger v = i sigma_x: H (i sigma_x) H = i sigma_z
        let v = LocalUnitary::new(Matrix2::pauli_x().scale(C64::new(0.0, 1.0))).unwrap();
        let ops =
            StrategyAssignment::uniform(3, OperatorPair::new(LocalUnitary::identity(), v)).unwrap();
        let z = diagonalizer(&ops, TOL).unwrap();
        for zk in &z.z {
            assert!(zk.max_abs_diff(&Matrix2::hadamard()) < 1e-15);
        }
        let psi =
            canonical_form(&make_state(StateKind::ProductZero, 3).unwrap(), &ops, TOL).unwrap();
        assert!(uniform_magnitude_check(&psi, 1e-12).0);
    }

    #[test]
    fn canonical_form_with_identity_diagonalizers_is_noop() {
        let i_sigma_z = LocalUnitary::new(Matrix2::new([
            [C64::new(0.0, 1.0), C64::new(0.0, 0.0)],
            [C64::new(0.0, 0.0), C64::new(0.0, -1.0)],
        ]))
        .unwrap();
        let ops =
            StrategyAssignment::uniform(2, OperatorPair::new(LocalUnitary::identity(), i_sigma_z))
                .unwrap();
        let h = C64::new(0.5, 0.0);
        let psi = PureState::new(vec![h, h * C64::new(0.0, 1.0), -h, h]).unwrap();
        assert_eq!(canonical_form(&psi, &ops, TOL).unwrap(), psi);
    }

    #[test]
    fn canonical_form_reports_failing_player() {
        let mut pairs = eisert_operators(3).pairs().to_vec();
        pairs[2] = OperatorPair::new(LocalUnitary::identity(), LocalUnitary::identity());
        let a = StrategyAssignment::new(pairs).unwrap();
        let err = canonical_form(&make_state(StateKind::Ghz, 3).unwrap(), &a, TOL).unwrap_err();
        assert_eq!(err, Error::SpectralCondition { player: 3 });
    }

    #[test]
    fn sigma_z_fixtures() {
        let zero = make_state(StateKind::ProductZero, 4).unwrap();
        assert!(sigma_z_correlations(&zero).iter().all(|&v| v == 1.0));
        let w = sigma_z_correlations(&make_state(StateKind::W, 3).unwrap());
        assert_eq!(w.len(), 7);
        assert!((w[0] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn sigma_z_matches_direct_expectation() {
        // oracle: apply sigma_z operators and take <psi|O|psi>
        let psi = make_state(StateKind::Dicke { m: 2 }, 4).unwrap();
        let psi = apply_local(
            &dicke22_operators()
                .pairs()
                .iter()
                .map(|p| p.u2)
                .collect::<Vec<_>>(),
            &psi,
        )
        .unwrap();
        let fast = sigma_z_correlations(&psi);
        for t in 1..16usize {
            let ops: Vec<Matrix2> = (0..4)
                .map(|k| {
                    if t >> k & 1 == 1 {
                        Matrix2::pauli_z()
                    } else {
                        Matrix2::identity()
                    }
                })
                .collect();
            let direct = psi.inner(&apply_local(&ops, &psi).unwrap());
            assert!((direct.re - fast[t - 1]).abs() < 1e-14);
            assert!(direct.im.abs() < 1e-14);
        }
    }

    #[test]
    fn magnitude_check_fixtures() {
        let h = make_state(StateKind::ProductZero, 3).unwrap();
        let h = apply_local(&[Matrix2::hadamard(); 3], &h).unwrap();
        let (ok, dev) = uniform_magnitude_check(&h, 1e-12);
        assert!(ok && dev < 1e-15);
        let (ok, _) = uniform_magnitude_check(&make_state(StateKind::Ghz, 3).unwrap(), 1e-9);
        assert!(!ok);
    }

    #[test]
    fn magnitude_system_has_uniform_solution() {
        for n in 2..=3 {
            let x = solve_magnitude_system(n).unwrap();
            let target = 1.0 / (1 << n) as f64;
            assert!(x.iter().all(|v| (v - target).abs() < 1e-14));
            // rows are mutually orthogonal, so A A^T = 2^N I
            let (a, _) = magnitude_system(n);
            for (i, ri) in a.iter().enumerate() {
                for (j, rj) in a.iter().enumerate() {
                    let dot: f64 = ri.iter().zip(rj).map(|(x, y)| x * y).sum();
                    let expected = if i == j { (1 << n) as f64 } else { 0.0 };
                    assert_eq!(dot, expected);
                }
            }
        }
    }

    #[test]
    fn mixed_reproduction_for_pd_on_bell() {
        let game = ClassicalGame::prisoners_dilemma();
        let bell = make_state(StateKind::Bell, 2).unwrap();
        let ops = bell_claim_operators();
        let r = verify_mixed_reproduction(
            &game,
            &bell,
            &ops,
            &ThetaProfile::uniform(2, FRAC_PI_4).unwrap(),
            TOL,
        )
        .unwrap();
        for v in r.quantum.iter().chain(&r.classical) {
            assert!((v - 2.25).abs() < 1e-10);
        }
        assert!(r.max_abs_diff < 1e-10);

        let r0 = verify_mixed_reproduction(
            &game,
            &bell,
            &ops,
            &ThetaProfile::uniform(2, 0.0).unwrap(),
            TOL,
        )
        .unwrap();
        assert!(r0
            .quantum
            .iter()
            .zip(&game.payoffs()[0])
            .all(|(q, a)| (q - a).abs() < 1e-12));
        let r1 = verify_mixed_reproduction(
            &game,
            &bell,
            &ops,
            &ThetaProfile::uniform(2, FRAC_PI_2).unwrap(),
            TOL,
        )
        .unwrap();
        assert!(r1
            .classical
            .iter()
            .zip(&game.payoffs()[3])
            .all(|(c, a)| (c - a).abs() < 1e-12));
        assert!(r1.max_abs_diff < 1e-12);
    }

    #[test]
    fn mixed_reproduction_requires_distinguishability() {
        let game = ClassicalGame::two_strategy(3, vec![vec![1.0; 3]; 8]).unwrap();
        let err = verify_mixed_reproduction(
            &game,
            &make_state(StateKind::W, 3).unwrap(),
            &eisert_operators(3),
            &ThetaProfile::uniform(3, 0.3).unwrap(),
            TOL,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Distinguishability { .. }));
    }

    #[test]
    fn two_qubit_states_with_complex_overlap_fail_claim_operators() {
        // a|00> + b|11> with a*b not real: cross term a*b - ab* survives
        let a = C64::new(0.6, 0.0);
        let b = C64::new(0.0, 0.8);
        let psi = PureState::new(vec![a, C64::new(0.0, 0.0), C64::new(0.0, 0.0), b]).unwrap();
        let r = check_distinguishability(&psi, &bell_claim_operators(), TOL).unwrap();
        assert!(!r.pass);
        assert!((r.max_offdiag - 2.0 * 0.48).abs() < 1e-12);
        // sigma_x as given and its SU(2) representative yield the same magnitudes
        let x = project_to_su2(&Matrix2::pauli_x()).unwrap();
        assert_eq!(*bell_claim_operators().pair(0).u2.matrix(), *x.matrix());
    }
}
