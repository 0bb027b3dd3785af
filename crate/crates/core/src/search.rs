//! Multi-start, gradient-free search for operator pairs that make a state
//! distinguishable.
//!
//! Only `u1^dagger u2` matters to the Gram matrix, so by default every
//! player's `u1` is pinned to the identity and only `u2` is searched: three
//! SU(2) angles per player. Each restart runs coordinate descent on the sum
//! of squared off-diagonal Gram magnitudes. Along a single angle that sum is
//! a trigonometric polynomial of degree two, so each coordinate jumps to the
//! minimizer interpolated from five samples; `+-step` probes back this up,
//! and the step shrinks after every sweep that makes no real progress.
//! Results are reported as the maximum off-diagonal magnitude.
//!
//! A failed search is evidence, not proof, that no witness exists.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::TAU;

#[allow(unused_imports)]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::gram_matrix;
use crate::error::{Error, Result};
use crate::quantum::{OperatorPair, StrategyAssignment};
use crate::tensor::{apply_single, su2_from_angles, LocalUnitary, Matrix2, PureState};
use crate::{C64, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub restarts: usize,
    /// Sweeps over all coordinates per restart.
    pub max_iters: usize,
    pub seed: u64,
    /// A restart converges when its residual falls below this.
    pub tol: f64,
    pub initial_step: f64,
    /// Step multiplier after a sweep without improvement, in (0, 1).
    pub shrink: f64,
    pub min_step: f64,
    /// Pin `u1 = I` for every player.
    pub gauge_fixed: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            restarts: 32,
            max_iters: 4000,
            seed: 0,
            tol: DEFAULT_TOL,
            initial_step: 0.5,
            shrink: 0.5,
            min_step: 1e-13,
            gauge_fixed: true,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::InvalidConfig("restarts must be at least 1"));
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be at least 1"));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidConfig("tol must be positive"));
        }
        if !(self.initial_step > 0.0 && self.min_step > 0.0) {
            return Err(Error::InvalidConfig("steps must be positive"));
        }
        if !(self.shrink > 0.0 && self.shrink < 1.0) {
            return Err(Error::InvalidConfig("shrink must lie in (0, 1)"));
        }
        Ok(())
    }
}

/// Best point found by one restart.
#[derive(Debug, Clone, PartialEq)]
pub struct RestartOutcome {
    pub restart: usize,
    pub residual: f64,
    pub assignment: StrategyAssignment,
    pub sweeps: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub best_assignment: StrategyAssignment,
    pub best_residual: f64,
    pub best_restart: usize,
    pub converged: bool,
    /// Final residual of every restart, in restart order.
    pub trace: Vec<f64>,
}

/// `max_{a != b} |<Phi_a|Phi_b>|`.
pub fn residual(state: &PureState, assignment: &StrategyAssignment) -> Result<f64> {
    Ok(gram_matrix(state, assignment)?.max_offdiag().0)
}

/// Runs all restarts in order and merges them.
pub fn search_operators(state: &PureState, config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let outcomes = (0..config.restarts)
        .map(|r| run_restart(state, config, r))
        .collect::<Result<Vec<_>>>()?;
    merge_restarts(outcomes, config.tol)
}

/// Picks the lowest residual, ties going to the lowest restart index, so the
/// result does not depend on the order restarts finished in.
pub fn merge_restarts(mut outcomes: Vec<RestartOutcome>, tol: f64) -> Result<SearchResult> {
    outcomes.sort_by_key(|o| o.restart);
    let trace = outcomes.iter().map(|o| o.residual).collect();
    let best = outcomes
        .into_iter()
        .min_by(|a, b| {
            a.residual
                .total_cmp(&b.residual)
                .then(a.restart.cmp(&b.restart))
        })
        .ok_or(Error::InvalidConfig("no restarts to merge"))?;
    Ok(SearchResult {
        converged: best.residual < tol,
        best_residual: best.residual,
        best_restart: best.restart,
        best_assignment: best.assignment,
        trace,
    })
}

/// RNG for restart `r`: the seed picks the key, the restart picks the stream.
fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    rng
}

fn assignment_from_angles(angles: &[f64], n: usize, gauge_fixed: bool) -> StrategyAssignment {
    let op = |i: usize| su2_from_angles(angles[i], angles[i + 1], angles[i + 2]);
    let pairs = (0..n)
        .map(|p| {
            if gauge_fixed {
                OperatorPair::new(LocalUnitary::identity(), op(3 * p))
            } else {
                OperatorPair::new(op(6 * p), op(6 * p + 3))
            }
        })
        .collect();
    StrategyAssignment::new(pairs).expect("n is positive")
}

/// Relative operator `u1^dagger u2` of `player` under the angle vector.
fn relative_at(angles: &[f64], player: usize, gauge_fixed: bool) -> Matrix2 {
    let op = |i: usize| *su2_from_angles(angles[i], angles[i + 1], angles[i + 2]).matrix();
    if gauge_fixed {
        op(3 * player)
    } else {
        op(6 * player).adjoint() * op(6 * player + 3)
    }
}

/// Sum of `|G_ab|^2` over `a < b`, viewed from one player.
///
/// `G_ab` only depends on which of `I`, `R_k` or `R_k^dagger` each player
/// contributes (`R_k = u1^dagger u2`), so the other players are contracted
/// once into `3^(N-1)` 2x2 blocks and a trial `R` for this player costs one
/// pass over the blocks.
struct PlayerView {
    /// `(multiplicity, all others identity, block)`.
    terms: Vec<(f64, bool, [[C64; 2]; 2])>,
}

impl PlayerView {
    fn new(state: &PureState, relatives: &[Matrix2], player: usize) -> Self {
        let n = state.n_qubits();
        let others: Vec<usize> = (0..n).filter(|&k| k != player).collect();
        let mut view = PlayerView {
            terms: Vec::with_capacity(3usize.pow(others.len() as u32)),
        };
        let ctx = Ctx {
            psi: state.amplitudes(),
            n,
            mask: 1 << (n - 1 - player),
            others: &others,
            relatives,
        };
        ctx.visit(0, state.amplitudes(), 1.0, true, &mut view.terms);
        view
    }

    fn eval(&self, r: &Matrix2) -> f64 {
        let r = r.entries;
        let mut total = 0.0;
        for (weight, all_identity, b) in &self.terms {
            let g_id = b[0][0] + b[1][1];
            let mut g_r = C64::new(0.0, 0.0);
            let mut g_rd = C64::new(0.0, 0.0);
            for i in 0..2 {
                for j in 0..2 {
                    g_r += r[i][j] * b[i][j];
                    g_rd += r[j][i].conj() * b[i][j];
                }
            }
            let id_term = if *all_identity {
                0.0
            } else {
                2.0 * g_id.norm_sqr()
            };
            total += weight * (id_term + g_r.norm_sqr() + g_rd.norm_sqr());
        }
        0.5 * total
    }
}

struct Ctx<'a> {
    psi: &'a [C64],
    n: usize,
    mask: usize,
    others: &'a [usize],
    relatives: &'a [Matrix2],
}

impl Ctx<'_> {
    fn visit(
        &self,
        level: usize,
        phi: &[C64],
        weight: f64,
        all_identity: bool,
        out: &mut Vec<(f64, bool, [[C64; 2]; 2])>,
    ) {
        if level == self.others.len() {
            out.push((weight, all_identity, self.block(phi)));
            return;
        }
        // identity on this player occurs for both (0,0) and (1,1)
        self.visit(level + 1, phi, 2.0 * weight, all_identity, out);
        let k = self.others[level];
        let r = self.relatives[k];
        for m in [r, r.adjoint()] {
            let mut child = phi.to_vec();
            apply_single(&m, self.n, k, &mut child);
            self.visit(level + 1, &child, weight, false, out);
        }
    }

    /// `B_ij = sum_rest conj(psi[rest, i]) phi[rest, j]` over this player's bit.
    fn block(&self, phi: &[C64]) -> [[C64; 2]; 2] {
        let mut b = [[C64::new(0.0, 0.0); 2]; 2];
        for r0 in (0..self.psi.len()).filter(|r| r & self.mask == 0) {
            let idx = [r0, r0 | self.mask];
            for i in 0..2 {
                let left = self.psi[idx[i]].conj();
                for j in 0..2 {
                    b[i][j] += left * phi[idx[j]];
                }
            }
        }
        b
    }
}

const SECTION_SAMPLES: usize = 5;
const STALL_RATIO: f64 = 1e-6;

fn section_offset(j: usize) -> f64 {
    TAU * j as f64 / SECTION_SAMPLES as f64
}

/// Minimizer (as an offset from the first sample) of the degree-2
/// trigonometric polynomial through equally spaced samples.
fn section_argmin(samples: &[f64; SECTION_SAMPLES]) -> f64 {
    let scale = 2.0 / SECTION_SAMPLES as f64;
    let mut coef = [(0.0, 0.0); 2];
    for (k, c) in coef.iter_mut().enumerate() {
        let freq = (k + 1) as f64;
        for (j, f) in samples.iter().enumerate() {
            let (s, co) = (freq * section_offset(j)).sin_cos();
            c.0 += scale * f * co;
            c.1 += scale * f * s;
        }
    }
    let value = |t: f64| -> f64 {
        coef.iter()
            .enumerate()
            .map(|(k, (a, b))| {
                let (s, c) = ((k + 1) as f64 * t).sin_cos();
                a * c + b * s
            })
            .sum()
    };
    const GRID: usize = 64;
    let mut t = (0..GRID)
        .map(|g| TAU * g as f64 / GRID as f64)
        .min_by(|a, b| value(*a).total_cmp(&value(*b)))
        .unwrap_or(0.0);
    for _ in 0..8 {
        let (mut d1, mut d2) = (0.0, 0.0);
        for (k, (a, b)) in coef.iter().enumerate() {
            let w = (k + 1) as f64;
            let (s, c) = (w * t).sin_cos();
            d1 += w * (b * c - a * s);
            d2 -= w * w * (a * c + b * s);
        }
        if d2 <= 0.0 {
            break;
        }
        t -= d1 / d2;
    }
    t
}

/// Largest qubit count the search accepts.
pub const SEARCH_MAX_QUBITS: usize = 10;

/// One seeded compass-descent run.
pub fn run_restart(
    state: &PureState,
    config: &SearchConfig,
    restart: usize,
) -> Result<RestartOutcome> {
    config.validate()?;
    let n = state.n_qubits();
    if n > SEARCH_MAX_QUBITS {
        return Err(Error::TooManyQubits(n));
    }
    let per_player = if config.gauge_fixed { 3 } else { 6 };
    let mut rng = restart_rng(config.seed, restart);
    let mut x: Vec<f64> = (0..n * per_player)
        .map(|_| rng.random::<f64>() * TAU)
        .collect();
    let mut relatives: Vec<Matrix2> = (0..n)
        .map(|p| relative_at(&x, p, config.gauge_fixed))
        .collect();

    // sum of squares below this bound implies max |G| well below tol
    let target = (config.tol * 1e-3) * (config.tol * 1e-3);
    let mut f = PlayerView::new(state, &relatives, 0).eval(&relatives[0]);
    let mut step = config.initial_step;
    let mut sweeps = 0;
    while sweeps < config.max_iters && f > target && step >= config.min_step {
        sweeps += 1;
        let sweep_start = f;
        for p in 0..n {
            let view = PlayerView::new(state, &relatives, p);
            f = view.eval(&relatives[p]);
            let eval_at = |x: &[f64]| {
                let r = relative_at(x, p, config.gauge_fixed);
                (view.eval(&r), r)
            };
            for i in p * per_player..(p + 1) * per_player {
                let origin = x[i];
                let mut best = (f, origin, relatives[p]);
                // the objective along one angle is a degree-2 trigonometric
                // polynomial, so five samples pin it down exactly
                let mut samples = [f; SECTION_SAMPLES];
                for (j, sample) in samples.iter_mut().enumerate().skip(1) {
                    x[i] = origin + section_offset(j);
                    *sample = eval_at(&x).0;
                }
                let candidates = [
                    origin + section_argmin(&samples),
                    origin + step,
                    origin - step,
                ];
                for t in candidates {
                    x[i] = t;
                    let (trial, r) = eval_at(&x);
                    if trial.partial_cmp(&best.0) == Some(Ordering::Less) {
                        best = (trial, t, r);
                    }
                }
                x[i] = best.1;
                f = best.0;
                relatives[p] = best.2;
            }
        }
        // progress below rounding level counts as a failed sweep
        if f.partial_cmp(&(sweep_start * (1.0 - STALL_RATIO))) != Some(Ordering::Less) {
            step *= config.shrink;
        }
    }
    let assignment = assignment_from_angles(&x, n, config.gauge_fixed);
    Ok(RestartOutcome {
        restart,
        residual: residual(state, &assignment)?,
        assignment,
        sweeps,
    })
}
