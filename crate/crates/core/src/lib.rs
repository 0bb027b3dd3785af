//! Reproducibility analysis for quantized N-player, two-strategy games.
//!
//! A referee shares an N-qubit state among the players, each player applies
//! one of two local SU(2) operators, and the referee measures. This crate
//! decides whether such a setup can replay a classical game exactly: every
//! joint pure strategy must map to a distinct, perfectly distinguishable
//! output state. It also provides the classical payoff oracle, the quantum
//! payoff evaluation, the operator-side and state-side characterizations of
//! distinguishability, and a seeded multi-start search for operator pairs.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and
//! the command-line tool live in the `qgame` crate.
//!
//! # Index conventions
//!
//! Two index orders coexist and are never mixed implicitly:
//!
//! * **Amplitude index** `b` of a [`PureState`]: player 1 is the most
//!   significant bit, matching ket notation `|i1 i2 ... iN>`.
//! * **Strategy index** `k` of a joint pure strategy: player 1 is the least
//!   significant digit, `k = sum (l_i - 1) m^(i-1)`. Payoff tables and
//!   measurement outcomes use this order. See [`quantum::strategy_index`].

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod classical;
pub mod error;
pub mod quantum;
pub mod search;
pub mod states;
pub mod tensor;

pub use analysis::{
    check_distinguishability, check_operator_spectrum, gram_matrix, GramMatrix, ReproReport,
};
pub use classical::{ClassicalGame, MixedProfile};
pub use error::{Error, Result};
pub use quantum::{OperatorPair, QuantumGameModel, StrategyAssignment, ThetaProfile};
pub use search::{search_operators, SearchConfig, SearchResult};
pub use states::{make_state, StateKind};
pub use tensor::{LocalUnitary, Matrix2, PureState};

/// Complex scalar used for every amplitude and matrix entry.
pub type C64 = num_complex::Complex64;

/// Default unitarity, normalization and verdict tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Largest supported qubit count.
pub const MAX_QUBITS: usize = 16;
