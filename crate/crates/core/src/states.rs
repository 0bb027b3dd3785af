//! Entangled-state generators and reference operator sets.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::FRAC_1_SQRT_2;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::quantum::{OperatorPair, StrategyAssignment};
use crate::tensor::{project_to_su2, LocalUnitary, Matrix2, PureState};
use crate::{C64, MAX_QUBITS};

/// Which state family to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateKind {
    /// `(|00> + |11>)/sqrt 2`; two qubits only.
    Bell,
    /// `(|0...0> + |1...1>)/sqrt 2`.
    Ghz,
    /// `(|0...0> + i|1...1>)/sqrt 2`.
    GhzLikeI,
    /// Equal superposition of the kets with exactly one 1; `n >= 3`.
    W,
    /// Equal superposition of the kets with exactly `m` ones.
    Dicke { m: usize },
    /// `|0...0>`.
    ProductZero,
    /// Supplied amplitudes; cannot be generated.
    Custom,
}

impl StateKind {
    /// Lower-case tag used in files and on the command line.
    pub fn tag(&self) -> &'static str {
        match self {
            StateKind::Bell => "bell",
            StateKind::Ghz => "ghz",
            StateKind::GhzLikeI => "ghz_like_i",
            StateKind::W => "w",
            StateKind::Dicke { .. } => "dicke",
            StateKind::ProductZero => "product_zero",
            StateKind::Custom => "custom",
        }
    }
}

pub fn make_state(kind: StateKind, n: usize) -> Result<PureState> {
    if n == 0 {
        return Err(Error::InvalidState("at least one qubit is required"));
    }
    if n > MAX_QUBITS {
        return Err(Error::TooManyQubits(n));
    }
    let dim = 1usize << n;
    let zero = C64::new(0.0, 0.0);
    let h = C64::new(FRAC_1_SQRT_2, 0.0);
    let mut amps = vec![zero; dim];
    match kind {
        StateKind::Bell => {
            if n != 2 {
                return Err(Error::InvalidState("the Bell state has exactly two qubits"));
            }
            amps[0] = h;
            amps[3] = h;
        }
        StateKind::Ghz | StateKind::GhzLikeI => {
            if n < 2 {
                return Err(Error::InvalidState("GHZ states need at least two qubits"));
            }
            amps[0] = h;
            amps[dim - 1] = if kind == StateKind::Ghz {
                h
            } else {
                C64::new(0.0, FRAC_1_SQRT_2)
            };
        }
        StateKind::W => {
            if n < 3 {
                return Err(Error::InvalidState("W states need at least three qubits"));
            }
            return dicke(n, 1);
        }
        StateKind::Dicke { m } => return dicke(n, m),
        StateKind::ProductZero => amps[0] = C64::new(1.0, 0.0),
        StateKind::Custom => {
            return Err(Error::InvalidState(
                "custom states are loaded, not generated",
            ))
        }
    }
    PureState::new(amps)
}

fn dicke(n: usize, m: usize) -> Result<PureState> {
    if m > n {
        return Err(Error::InvalidState(
            "Dicke excitation count exceeds qubit count",
        ));
    }
    let members: Vec<usize> = (0..1usize << n)
        .filter(|b| b.count_ones() as usize == m)
        .collect();
    let a = C64::new(1.0 / (members.len() as f64).sqrt(), 0.0);
    let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
    for b in members {
        amps[b] = a;
    }
    PureState::new(amps)
}

/// `{I, i sigma_y}` for every player.
pub fn eisert_operators(n: usize) -> StrategyAssignment {
    StrategyAssignment::uniform(n, OperatorPair::identity_and_i_sigma_y()).expect("n is positive")
}

/// Two-qubit set: `{I, sigma_x}` for player 1 and `{I, i sigma_y}` for
/// player 2. `sigma_x` is stored as its SU(2) representative `-i sigma_x`.
pub fn bell_claim_operators() -> StrategyAssignment {
    let x = project_to_su2(&Matrix2::pauli_x()).expect("sigma_x is unitary");
    StrategyAssignment::new(vec![
        OperatorPair::new(LocalUnitary::identity(), x),
        OperatorPair::identity_and_i_sigma_y(),
    ])
    .expect("two players")
}

/// Operator set that makes the four-qubit Dicke state with two excitations
/// distinguishable: `u^1 = I` for everyone, `u^2 = i(sqrt2 sigma_z +
/// sigma_x)/sqrt3` for players 1-3 and `u^2 = i sigma_y` for player 4.
pub fn dicke22_operators() -> StrategyAssignment {
    let r = (2.0f64 / 3.0).sqrt();
    let s = 1.0 / 3f64.sqrt();
    let u = LocalUnitary::new(Matrix2::new([
        [C64::new(0.0, r), C64::new(0.0, s)],
        [C64::new(0.0, s), C64::new(0.0, -r)],
    ]))
    .expect("operator is in SU(2)");
    let mixed = OperatorPair::new(LocalUnitary::identity(), u);
    StrategyAssignment::new(vec![
        mixed,
        mixed,
        mixed,
        OperatorPair::identity_and_i_sigma_y(),
    ])
    .expect("four players")
}
