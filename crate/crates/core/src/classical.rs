//! Classical strategic games: pure and mixed-strategy expected payoffs.
//!
//! Joint strategies are indexed in mixed radix with player 1 as the least
//! significant digit. Strategy choices are 1-based throughout.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Tolerance on the sum of a mixed-strategy probability vector.
pub const PROFILE_TOL: f64 = 1e-12;

/// Payoff table over joint pure strategies.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalGame {
    strategy_counts: Vec<usize>,
    /// `payoffs[k][i]` is player `i`'s payoff for joint strategy `k`.
    payoffs: Vec<Vec<f64>>,
}

impl ClassicalGame {
    pub fn new(strategy_counts: Vec<usize>, payoffs: Vec<Vec<f64>>) -> Result<Self> {
        let n = strategy_counts.len();
        if n == 0 {
            return Err(Error::InvalidGame("a game needs at least one player"));
        }
        if strategy_counts.iter().any(|&m| m < 2) {
            return Err(Error::InvalidGame(
                "every player needs at least two strategies",
            ));
        }
        let joints = strategy_counts
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m))
            .ok_or(Error::InvalidGame("joint strategy space is too large"))?;
        if payoffs.len() != joints {
            return Err(Error::Dimension {
                what: "payoff table rows",
                expected: joints,
                found: payoffs.len(),
            });
        }
        for row in &payoffs {
            if row.len() != n {
                return Err(Error::Dimension {
                    what: "payoff vector",
                    expected: n,
                    found: row.len(),
                });
            }
            if row.iter().any(|p| !p.is_finite()) {
                return Err(Error::NonFinite("payoff table"));
            }
        }
        Ok(ClassicalGame {
            strategy_counts,
            payoffs,
        })
    }

    /// Two strategies per player.
    pub fn two_strategy(n_players: usize, payoffs: Vec<Vec<f64>>) -> Result<Self> {
        Self::new(vec![2; n_players], payoffs)
    }

    /// The conventional Prisoner's Dilemma, strategy 1 = cooperate:
    /// `[(3,3), (5,0), (0,5), (1,1)]` in joint-index order.
    pub fn prisoners_dilemma() -> Self {
        Self::two_strategy(
            2,
            vec![
                vec![3.0, 3.0],
                vec![5.0, 0.0],
                vec![0.0, 5.0],
                vec![1.0, 1.0],
            ],
        )
        .expect("fixture is well formed")
    }

    pub fn n_players(&self) -> usize {
        self.strategy_counts.len()
    }

    pub fn strategy_counts(&self) -> &[usize] {
        &self.strategy_counts
    }

    pub fn payoffs(&self) -> &[Vec<f64>] {
        &self.payoffs
    }

    pub fn n_joints(&self) -> usize {
        self.payoffs.len()
    }

    pub fn is_two_strategy(&self) -> bool {
        self.strategy_counts.iter().all(|&m| m == 2)
    }

    pub fn pure_payoff(&self, choices: &[usize]) -> Result<&[f64]> {
        let k = joint_index(choices, &self.strategy_counts)?;
        Ok(&self.payoffs[k])
    }

    /// Expected payoff of every player when each randomizes independently.
    pub fn mixed_payoff(&self, profile: &MixedProfile) -> Result<Vec<f64>> {
        let n = self.n_players();
        if profile.n_players() != n {
            return Err(Error::Dimension {
                what: "mixed profile players",
                expected: n,
                found: profile.n_players(),
            });
        }
        for (player, (q, &m)) in profile.probs.iter().zip(&self.strategy_counts).enumerate() {
            if q.len() != m {
                return Err(Error::InvalidProfile {
                    player: player + 1,
                    reason: "probability vector length differs from strategy count",
                });
            }
        }
        let mut totals = vec![0.0; n];
        let mut digits = vec![0usize; n];
        for payoff in &self.payoffs {
            let weight: f64 = digits
                .iter()
                .zip(&profile.probs)
                .map(|(&l, q)| q[l])
                .product();
            if weight != 0.0 {
                for (t, p) in totals.iter_mut().zip(payoff) {
                    *t += weight * p;
                }
            }
            // advance the mixed-radix counter, player 1 fastest
            for (d, &m) in digits.iter_mut().zip(&self.strategy_counts) {
                *d += 1;
                if *d < m {
                    break;
                }
                *d = 0;
            }
        }
        Ok(totals)
    }
}

/// `k = sum_i (l_i - 1) * prod_{j<i} m_j`, with 1-based choices `l_i`.
pub fn joint_index(choices: &[usize], strategy_counts: &[usize]) -> Result<usize> {
    if choices.len() != strategy_counts.len() {
        return Err(Error::Dimension {
            what: "strategy choices",
            expected: strategy_counts.len(),
            found: choices.len(),
        });
    }
    let mut k = 0;
    let mut radix = 1;
    for (player, (&l, &m)) in choices.iter().zip(strategy_counts).enumerate() {
        if l == 0 || l > m {
            return Err(Error::InvalidChoice {
                player: player + 1,
                choice: l,
                count: m,
            });
        }
        k += (l - 1) * radix;
        radix *= m;
    }
    Ok(k)
}

/// Inverse of [`joint_index`]: 1-based choices for joint index `k`.
pub fn choices_for_index(mut k: usize, strategy_counts: &[usize]) -> Vec<usize> {
    strategy_counts
        .iter()
        .map(|&m| {
            let l = k % m + 1;
            k /= m;
            l
        })
        .collect()
}

/// Independent per-player probability vectors over strategies.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedProfile {
    probs: Vec<Vec<f64>>,
}

impl MixedProfile {
    pub fn new(probs: Vec<Vec<f64>>) -> Result<Self> {
        for (player, q) in probs.iter().enumerate() {
            let player = player + 1;
            if q.iter().any(|p| !p.is_finite() || *p < 0.0) {
                return Err(Error::InvalidProfile {
                    player,
                    reason: "probabilities must be finite and nonnegative",
                });
            }
            if (q.iter().sum::<f64>() - 1.0).abs() > PROFILE_TOL {
                return Err(Error::InvalidProfile {
                    player,
                    reason: "probabilities must sum to 1",
                });
            }
        }
        Ok(MixedProfile { probs })
    }

    /// Every player plays `choices[i]` (1-based) with certainty.
    pub fn pure(choices: &[usize], strategy_counts: &[usize]) -> Result<Self> {
        joint_index(choices, strategy_counts)?;
        Ok(MixedProfile {
            probs: choices
                .iter()
                .zip(strategy_counts)
                .map(|(&l, &m)| {
                    let mut q = vec![0.0; m];
                    q[l - 1] = 1.0;
                    q
                })
                .collect(),
        })
    }

    /// Two-strategy profile with `q_i(strategy 1) = p[i]`.
    pub fn from_first_strategy_probs(p: &[f64]) -> Result<Self> {
        Self::new(p.iter().map(|&p| vec![p, 1.0 - p]).collect())
    }

    pub fn n_players(&self) -> usize {
        self.probs.len()
    }

    pub fn probs(&self) -> &[Vec<f64>] {
        &self.probs
    }
}
