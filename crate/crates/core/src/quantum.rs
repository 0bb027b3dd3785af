//! The quantized protocol: output states, the referee's projectors, expected
//! payoffs, mixed-strategy operators and shot sampling.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[allow(unused_imports)]
use num_traits::Float;

use crate::analysis::gram_matrix;
use crate::classical::ClassicalGame;
use crate::error::{Error, Result};
use crate::tensor::{apply_local, project_to_su2_with_tol, LocalUnitary, Matrix2, PureState};

/// One player's two strategy operators: `u1` for strategy 1, `u2` for strategy 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorPair {
    pub u1: LocalUnitary,
    pub u2: LocalUnitary,
}

impl OperatorPair {
    pub const fn new(u1: LocalUnitary, u2: LocalUnitary) -> Self {
        OperatorPair { u1, u2 }
    }

    /// `{I, i sigma_y}`.
    pub const fn identity_and_i_sigma_y() -> Self {
        OperatorPair::new(LocalUnitary::identity(), LocalUnitary::i_sigma_y())
    }

    /// Operator for 1-based strategy `l`.
    pub fn select(&self, l: usize) -> Option<&LocalUnitary> {
        match l {
            1 => Some(&self.u1),
            2 => Some(&self.u2),
            _ => None,
        }
    }

    /// `u1^dagger u2`, the only combination the distinguishability condition sees.
    pub fn relative(&self) -> Matrix2 {
        self.u1.matrix().adjoint() * *self.u2.matrix()
    }
}

/// Per-player operator pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyAssignment {
    pairs: Vec<OperatorPair>,
}

impl StrategyAssignment {
    pub fn new(pairs: Vec<OperatorPair>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidGame(
                "an assignment needs at least one player",
            ));
        }
        Ok(StrategyAssignment { pairs })
    }

    /// The same pair for every one of `n` players.
    pub fn uniform(n: usize, pair: OperatorPair) -> Result<Self> {
        Self::new(vec![pair; n])
    }

    pub fn n_players(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[OperatorPair] {
        &self.pairs
    }

    pub fn pair(&self, player: usize) -> &OperatorPair {
        &self.pairs[player]
    }

    /// Operators for a 1-based selection `(l_1, ..., l_N)`.
    pub fn operators_for(&self, selection: &[usize]) -> Result<Vec<LocalUnitary>> {
        if selection.len() != self.pairs.len() {
            return Err(Error::Dimension {
                what: "strategy selection",
                expected: self.pairs.len(),
                found: selection.len(),
            });
        }
        selection
            .iter()
            .zip(&self.pairs)
            .enumerate()
            .map(|(player, (&l, pair))| {
                pair.select(l).copied().ok_or(Error::InvalidChoice {
                    player: player + 1,
                    choice: l,
                    count: 2,
                })
            })
            .collect()
    }
}

/// Per-player mixing angles `theta_k` for `cos(theta) u1 + sin(theta) u2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaProfile(Vec<f64>);

impl ThetaProfile {
    pub fn new(thetas: Vec<f64>) -> Result<Self> {
        if thetas.iter().any(|t| !t.is_finite()) {
            return Err(Error::NonFinite("theta profile"));
        }
        Ok(ThetaProfile(thetas))
    }

    pub fn uniform(n: usize, theta: f64) -> Result<Self> {
        Self::new(vec![theta; n])
    }

    pub fn thetas(&self) -> &[f64] {
        &self.0
    }

    /// Probability of strategy 1 for each player, `cos^2 theta_k`.
    pub fn first_strategy_probs(&self) -> Vec<f64> {
        self.0.iter().map(|t| t.cos().powi(2)).collect()
    }
}

/// Two-strategy joint index `k = sum (l_i - 1) 2^(i-1)` (player 1 least
/// significant).
///
/// This and [`selection_for_index`] are the only bridge between strategy
/// indices and the amplitude bit order of [`PureState`], which runs the other
/// way (player 1 most significant).
pub fn strategy_index(selection: &[usize]) -> Result<usize> {
    let mut k = 0;
    for (player, &l) in selection.iter().enumerate() {
        if !(1..=2).contains(&l) {
            return Err(Error::InvalidChoice {
                player: player + 1,
                choice: l,
                count: 2,
            });
        }
        k |= (l - 1) << player;
    }
    Ok(k)
}

/// 1-based selection for two-strategy joint index `k`.
pub fn selection_for_index(k: usize, n_players: usize) -> Vec<usize> {
    (0..n_players)
        .map(|player| ((k >> player) & 1) + 1)
        .collect()
}

fn check_players(state: &PureState, assignment: &StrategyAssignment) -> Result<()> {
    if assignment.n_players() != state.n_qubits() {
        return Err(Error::Dimension {
            what: "players vs qubits",
            expected: state.n_qubits(),
            found: assignment.n_players(),
        });
    }
    Ok(())
}

/// `Phi_k = (u_1^{l_1} (x) ... (x) u_N^{l_N}) |Psi>`.
pub fn output_state(
    state: &PureState,
    assignment: &StrategyAssignment,
    selection: &[usize],
) -> Result<PureState> {
    check_players(state, assignment)?;
    apply_local(&assignment.operators_for(selection)?, state)
}

/// All `2^N` output states, indexed by strategy index `k`.
pub fn output_states(state: &PureState, assignment: &StrategyAssignment) -> Result<Vec<PureState>> {
    check_players(state, assignment)?;
    let n = state.n_qubits();
    (0..1usize << n)
        .map(|k| output_state(state, assignment, &selection_for_index(k, n)))
        .collect()
}

/// The referee's rank-1 projectors `|Phi_k><Phi_k|`, stored as the vectors.
///
/// Fails unless the output states are pairwise orthogonal within `tol`;
/// completeness then follows from having `2^N` orthonormal vectors.
pub fn build_projectors(
    state: &PureState,
    assignment: &StrategyAssignment,
    tol: f64,
) -> Result<Vec<PureState>> {
    let gram = gram_matrix(state, assignment)?;
    let (max_offdiag, pair) = gram.max_offdiag();
    if max_offdiag >= tol {
        return Err(Error::Distinguishability { max_offdiag, pair });
    }
    output_states(state, assignment)
}

/// A validated quantum version of a two-strategy classical game.
#[derive(Debug, Clone)]
pub struct QuantumGameModel {
    state: PureState,
    assignment: StrategyAssignment,
    projectors: Vec<PureState>,
    game: ClassicalGame,
}

impl QuantumGameModel {
    pub fn new(
        state: PureState,
        assignment: StrategyAssignment,
        game: ClassicalGame,
        tol: f64,
    ) -> Result<Self> {
        if !game.is_two_strategy() {
            return Err(Error::InvalidGame(
                "the quantum protocol needs two strategies per player",
            ));
        }
        if game.n_players() != state.n_qubits() {
            return Err(Error::Dimension {
                what: "game players vs qubits",
                expected: state.n_qubits(),
                found: game.n_players(),
            });
        }
        let projectors = build_projectors(&state, &assignment, tol)?;
        Ok(QuantumGameModel {
            state,
            assignment,
            projectors,
            game,
        })
    }

    pub fn state(&self) -> &PureState {
        &self.state
    }

    pub fn assignment(&self) -> &StrategyAssignment {
        &self.assignment
    }

    pub fn projectors(&self) -> &[PureState] {
        &self.projectors
    }

    pub fn game(&self) -> &ClassicalGame {
        &self.game
    }

    /// Probability of each measurement outcome `j` after the players apply `ops`.
    pub fn outcome_probabilities<M: AsRef<Matrix2>>(&self, ops: &[M]) -> Result<Vec<f64>> {
        let out = apply_local(ops, &self.state)?;
        Ok(self
            .projectors
            .iter()
            .map(|phi| phi.inner(&out).norm_sqr())
            .collect())
    }

    /// `F_i = sum_j a_j^i |<Phi_j| (op_1 (x) ... (x) op_N) |Psi>|^2`.
    pub fn expected_payoff<M: AsRef<Matrix2>>(&self, ops: &[M]) -> Result<Vec<f64>> {
        let probs = self.outcome_probabilities(ops)?;
        Ok(payoff_from_probabilities(&self.game, &probs))
    }

    /// Expected payoff when every player plays the pure selection.
    pub fn pure_expected_payoff(&self, selection: &[usize]) -> Result<Vec<f64>> {
        self.expected_payoff(&self.assignment.operators_for(selection)?)
    }

    /// Operators `w_k(theta_k)` for every player.
    pub fn mixed_operators(&self, thetas: &ThetaProfile, tol: f64) -> Result<Vec<LocalUnitary>> {
        mixed_operators(&self.assignment, thetas, tol)
    }
}

pub(crate) fn payoff_from_probabilities(game: &ClassicalGame, probs: &[f64]) -> Vec<f64> {
    let mut totals = vec![0.0; game.n_players()];
    for (p, payoff) in probs.iter().zip(game.payoffs()) {
        for (t, a) in totals.iter_mut().zip(payoff) {
            *t += p * a;
        }
    }
    totals
}

/// `w = cos(theta) u1 + sin(theta) u2`, checked for unitarity.
///
/// Operators with determinant 1 are returned as is; other unitary results
/// are projected to SU(2).
pub fn mixed_strategy_operator(
    u1: &Matrix2,
    u2: &Matrix2,
    theta: f64,
    tol: f64,
) -> Result<LocalUnitary> {
    let (s, c) = theta.sin_cos();
    let w = *u1 * c + *u2 * s;
    if !w.is_finite() {
        return Err(Error::NonFinite("mixed-strategy operator"));
    }
    let deviation = w.unitarity_defect();
    if deviation > tol {
        return Err(Error::MixedNotUnitary { deviation });
    }
    match LocalUnitary::with_tol(w, tol) {
        Ok(u) => Ok(u),
        Err(_) => project_to_su2_with_tol(&w, tol),
    }
}

pub fn mixed_operators(
    assignment: &StrategyAssignment,
    thetas: &ThetaProfile,
    tol: f64,
) -> Result<Vec<LocalUnitary>> {
    if thetas.thetas().len() != assignment.n_players() {
        return Err(Error::Dimension {
            what: "theta profile",
            expected: assignment.n_players(),
            found: thetas.thetas().len(),
        });
    }
    assignment
        .pairs()
        .iter()
        .zip(thetas.thetas())
        .map(|(pair, &t)| mixed_strategy_operator(pair.u1.matrix(), pair.u2.matrix(), t, tol))
        .collect()
}

/// Draws `shots` measurement outcomes; `counts[j]` is how often outcome `j`
/// occurred. Deterministic for a given seed.
pub fn sample_round<M: AsRef<Matrix2>>(
    model: &QuantumGameModel,
    ops: &[M],
    shots: u64,
    seed: u64,
) -> Result<Vec<u64>> {
    if shots == 0 {
        return Err(Error::InvalidConfig("shots must be positive"));
    }
    let probs = model.outcome_probabilities(ops)?;
    let mut cdf = Vec::with_capacity(probs.len());
    let mut acc = 0.0;
    for p in &probs {
        acc += p;
        cdf.push(acc);
    }
    // outcomes past the accumulated mass (rounding) go to the last live outcome
    let last_live = probs.iter().rposition(|&p| p > 0.0).unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0u64; probs.len()];
    for _ in 0..shots {
        let u: f64 = rng.random::<f64>() * acc;
        let j = cdf.partition_point(|&c| c <= u).min(last_live);
        counts[j] += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell_claim_operators, make_state, StateKind};
    use crate::C64;
    use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4};

    fn eisert(n: usize) -> StrategyAssignment {
        StrategyAssignment::uniform(n, OperatorPair::identity_and_i_sigma_y()).unwrap()
    }

    #[test]
    fn index_conversion_round_trip() {
        assert_eq!(strategy_index(&[2, 1, 2]).unwrap(), 5);
        assert_eq!(selection_for_index(5, 3), vec![2, 1, 2]);
        assert!(strategy_index(&[3]).is_err());
    }

    #[test]
    fn identity_selection_returns_input() {
        let psi = make_state(StateKind::W, 3).unwrap();
        let out = output_state(&psi, &eisert(3), &[1, 1, 1]).unwrap();
        assert_eq!(out, psi);
    }

    #[test]
    fn ghz3_all_defect() {
        let psi = make_state(StateKind::Ghz, 3).unwrap();
        let out = output_state(&psi, &eisert(3), &[2, 2, 2]).unwrap();
        let a = out.amplitudes();
        assert!((a[0] - C64::new(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((a[7] + C64::new(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn w3_player_one_defects() {
        let psi = make_state(StateKind::W, 3).unwrap();
        let out = output_state(&psi, &eisert(3), &[2, 1, 1]).unwrap();
        let s = 1.0 / 3f64.sqrt();
        let expected = [s, 0.0, 0.0, 0.0, 0.0, -s, -s, 0.0];
        for (a, e) in out.amplitudes().iter().zip(expected) {
            assert!((a - C64::new(e, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn projectors_for_bell_are_orthonormal() {
        let psi = make_state(StateKind::Bell, 2).unwrap();
        let phis = build_projectors(&psi, &bell_claim_operators(), 1e-9).unwrap();
        assert_eq!(phis.len(), 4);
        for (a, pa) in phis.iter().enumerate() {
            for (b, pb) in phis.iter().enumerate() {
                let expected = if a == b { 1.0 } else { 0.0 };
                assert!((pa.inner(pb).norm() - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn projectors_fail_for_w3() {
        let psi = make_state(StateKind::W, 3).unwrap();
        match build_projectors(&psi, &eisert(3), 1e-9) {
            Err(Error::Distinguishability { max_offdiag, .. }) => {
                assert!((max_offdiag - 2.0 / 3.0).abs() < 1e-12)
            }
            other => panic!("expected distinguishability failure, got {other:?}"),
        }
    }

    #[test]
    fn projectors_for_ghz3() {
        let psi = make_state(StateKind::Ghz, 3).unwrap();
        assert_eq!(build_projectors(&psi, &eisert(3), 1e-9).unwrap().len(), 8);
    }

    fn pd_bell_model() -> QuantumGameModel {
        QuantumGameModel::new(
            make_state(StateKind::Bell, 2).unwrap(),
            bell_claim_operators(),
            ClassicalGame::prisoners_dilemma(),
            1e-9,
        )
        .unwrap()
    }

    #[test]
    fn pure_selections_reproduce_table() {
        let model = pd_bell_model();
        for k in 0..4 {
            let sel = selection_for_index(k, 2);
            let payoff = model.pure_expected_payoff(&sel).unwrap();
            for (p, a) in payoff.iter().zip(&model.game().payoffs()[k]) {
                assert!((p - a).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn mixed_operator_endpoints() {
        let pair = OperatorPair::identity_and_i_sigma_y();
        let w0 = mixed_strategy_operator(pair.u1.matrix(), pair.u2.matrix(), 0.0, 1e-9).unwrap();
        assert_eq!(w0, pair.u1);
        let w1 =
            mixed_strategy_operator(pair.u1.matrix(), pair.u2.matrix(), FRAC_PI_2, 1e-9).unwrap();
        assert!(w1.matrix().max_abs_diff(pair.u2.matrix()) < 1e-15);
        let wq =
            mixed_strategy_operator(pair.u1.matrix(), pair.u2.matrix(), FRAC_PI_4, 1e-9).unwrap();
        let expected = (Matrix2::identity() + Matrix2::i_sigma_y()) * FRAC_1_SQRT_2;
        assert!(wq.matrix().max_abs_diff(&expected) < 1e-15);
        assert!(wq.matrix().unitarity_defect() < 1e-15);
    }

    #[test]
    fn mixed_operator_rejects_sigma_x() {
        // (I + sigma_x)/sqrt(2) is singular
        let err =
            mixed_strategy_operator(&Matrix2::identity(), &Matrix2::pauli_x(), FRAC_PI_4, 1e-9)
                .unwrap_err();
        assert!(matches!(err, Error::MixedNotUnitary { .. }));
    }

    #[test]
    fn sampling_is_degenerate_for_pure_selection() {
        let model = pd_bell_model();
        for k in 0..4 {
            let ops = model
                .assignment()
                .operators_for(&selection_for_index(k, 2))
                .unwrap();
            let counts = sample_round(&model, &ops, 500, 3).unwrap();
            assert_eq!(counts[k], 500);
        }
    }

    #[test]
    fn sampling_is_seeded() {
        let model = pd_bell_model();
        let ops = model
            .mixed_operators(&ThetaProfile::new(vec![0.3, 1.1]).unwrap(), 1e-9)
            .unwrap();
        let a = sample_round(&model, &ops, 1000, 11).unwrap();
        let b = sample_round(&model, &ops, 1000, 11).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.iter().sum::<u64>(), 1000);
        assert!(sample_round(&model, &ops, 0, 11).is_err());
    }
}
