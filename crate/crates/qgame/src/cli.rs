//! The `qgame` command line: gen, check, search, payoff and reproduce.
//!
//! Exit codes: 0 pass, 2 analytic failure, 1 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use qgame_core::analysis::verify_mixed_reproduction;
use qgame_core::quantum::{sample_round, selection_for_index};
use qgame_core::states::{bell_claim_operators, dicke22_operators, eisert_operators};
use qgame_core::tensor::su2_from_angles;
use qgame_core::{
    check_distinguishability, make_state, ClassicalGame, LocalUnitary, PureState, QuantumGameModel,
    SearchConfig, StateKind, StrategyAssignment, ThetaProfile, DEFAULT_TOL,
};
use serde_json::{json, Value};

use crate::angles::parse_angle_list;
use crate::io::{self, GameFile, Loaded, OpsFile, StateFile};
use crate::parallel::search_parallel;
use crate::report::{self, nums, RunReport, ANALYSIS_NOTES};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Pass = 0,
    InputError = 1,
    Fail = 2,
}

#[derive(Debug, Parser)]
#[command(
    name = "qgame",
    version,
    about = "Checks whether an entangled state and per-player operator pairs reproduce a classical game"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Verdict, unitarity and normalization tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Print the machine-readable JSON report to stdout.
    #[arg(long)]
    pub json: bool,
    /// Output file: the generated file for gen and search, the JSON report otherwise.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Record wall time in the report (makes reports differ between runs).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a state, operator or game file.
    Gen(GenArgs),
    /// Decide distinguishability of a state under an operator assignment.
    Check(CheckArgs),
    /// Search for an operator assignment that makes a state distinguishable.
    Search(SearchArgs),
    /// Expected payoffs and outcome probabilities for one play of the game.
    Payoff(PayoffArgs),
    /// Compare quantum and classical payoffs for a mixed-strategy profile.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Bell,
    Ghz,
    #[value(name = "ghz_like_i", alias = "ghz-like-i")]
    GhzLikeI,
    W,
    Dicke,
    #[value(name = "product_zero", alias = "product-zero")]
    ProductZero,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OpsPreset {
    /// `{I, i sigma_y}` for every player (needs --n).
    Eisert,
    /// Four-player set for the Dicke state with two excitations.
    Dicke22,
    /// `{I, sigma_x}` and `{I, i sigma_y}` for two players.
    BellClaim,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GamePreset {
    PrisonersDilemma,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("what").required(true).args(["kind", "ops", "game"])))]
pub struct GenArgs {
    /// State family.
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
    /// Operator preset.
    #[arg(long, value_enum)]
    pub ops: Option<OpsPreset>,
    /// Game preset.
    #[arg(long, value_enum)]
    pub game: Option<GamePreset>,
    /// Number of qubits (players).
    #[arg(long)]
    pub n: Option<usize>,
    /// Excitation count for Dicke states.
    #[arg(long)]
    pub m: Option<usize>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub state: PathBuf,
    #[arg(long)]
    pub ops: PathBuf,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub state: PathBuf,
    #[arg(long, default_value_t = 32)]
    pub restarts: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Coordinate sweeps per restart.
    #[arg(long, default_value_t = 4000)]
    pub max_iters: usize,
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Search both operators of every pair instead of pinning u1 = I.
    #[arg(long)]
    pub no_gauge: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("play").required(true).args(["select", "theta", "angles"])))]
pub struct PayoffArgs {
    #[arg(long)]
    pub game: PathBuf,
    #[arg(long)]
    pub state: PathBuf,
    #[arg(long)]
    pub ops: PathBuf,
    /// Pure selection, one 1-based strategy per player: `2,2`.
    #[arg(long)]
    pub select: Option<String>,
    /// Mixed strategy angles, one per player or one for all: `0.25pi,0.25pi`.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    /// Arbitrary SU(2) operators as Euler angles: `a,b,g;a,b,g`.
    #[arg(long, allow_hyphen_values = true)]
    pub angles: Option<String>,
    /// Also sample this many measurement rounds.
    #[arg(long)]
    pub shots: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(long)]
    pub game: PathBuf,
    #[arg(long)]
    pub state: PathBuf,
    #[arg(long)]
    pub ops: PathBuf,
    /// Mixed strategy angles, one per player or one for all.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: String,
    #[command(flatten)]
    pub common: Common,
}

/// What a command produced.
pub struct Outcome {
    pub exit: Exit,
    pub report: RunReport,
    /// Human-readable summary.
    pub text: String,
    /// File written for `--out`, when the command produces one.
    pub artifact: Option<String>,
}

/// Parses `args` (including the program name), runs the command and writes
/// to the given streams. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                Exit::InputError
            } else {
                Exit::Pass
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code as i32;
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let common = match &cli.command {
        Command::Gen(a) => a.common.clone(),
        Command::Check(a) => a.common.clone(),
        Command::Search(a) => a.common.clone(),
        Command::Payoff(a) => a.common.clone(),
        Command::Reproduce(a) => a.common.clone(),
    };
    let started = Instant::now();
    let result = validate_common(&common).and_then(|()| dispatch(&cli.command, echo));
    match result {
        Ok(mut outcome) => {
            if common.timing {
                outcome.report.wall_time_s = Some(started.elapsed().as_secs_f64());
            }
            match emit(&outcome, &cli.command, &common, stdout) {
                Ok(()) => outcome.exit as i32,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e:#}");
                    Exit::InputError as i32
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            Exit::InputError as i32
        }
    }
}

fn validate_common(c: &Common) -> anyhow::Result<()> {
    if !(c.tol > 0.0 && c.tol.is_finite()) {
        bail!("--tol must be a positive number");
    }
    Ok(())
}

fn emit(
    outcome: &Outcome,
    command: &Command,
    common: &Common,
    stdout: &mut dyn Write,
) -> anyhow::Result<()> {
    let report_json = outcome.report.to_json();
    let writes_artifact = matches!(command, Command::Gen(_) | Command::Search(_));
    if let Some(path) = &common.out {
        if writes_artifact {
            if let Some(artifact) = &outcome.artifact {
                write_file(path, artifact)?;
            }
        } else {
            write_file(path, &report_json)?;
        }
    }
    if common.json {
        stdout.write_all(report_json.as_bytes())?;
    } else if let (Command::Gen(_), None, Some(artifact)) =
        (command, &common.out, &outcome.artifact)
    {
        stdout.write_all(artifact.as_bytes())?;
    } else {
        stdout.write_all(outcome.text.as_bytes())?;
    }
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    std::fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn dispatch(command: &Command, echo: Vec<String>) -> anyhow::Result<Outcome> {
    match command {
        Command::Gen(a) => cmd_gen(a, echo),
        Command::Check(a) => cmd_check(a, echo),
        Command::Search(a) => cmd_search(a, echo),
        Command::Payoff(a) => cmd_payoff(a, echo),
        Command::Reproduce(a) => cmd_reproduce(a, echo),
    }
}

/// Conditions that are verdicts about the configuration, not bad input.
fn is_analytic(e: &qgame_core::Error) -> bool {
    matches!(
        e,
        qgame_core::Error::Distinguishability { .. }
            | qgame_core::Error::SpectralCondition { .. }
            | qgame_core::Error::MixedNotUnitary { .. }
    )
}

fn load_state(path: &Path, tol: f64) -> anyhow::Result<Loaded<PureState>> {
    Ok(io::load_with_bytes(path, |p, b| {
        io::parse_state(p, b, tol)
    })?)
}

fn load_ops(path: &Path, tol: f64) -> anyhow::Result<Loaded<StrategyAssignment>> {
    Ok(io::load_with_bytes(path, |p, b| io::parse_ops(p, b, tol))?)
}

fn load_game(path: &Path) -> anyhow::Result<Loaded<ClassicalGame>> {
    Ok(io::load_with_bytes(path, io::parse_game)?)
}

fn fmt_list(xs: &[f64]) -> String {
    let parts: Vec<String> = xs.iter().map(|&x| report::display(x)).collect();
    format!("({})", parts.join(", "))
}

/// `a+bi`, with components below rounding noise shown as 0.
fn fmt_complex(c: qgame_core::C64) -> String {
    let clean = |x: f64| if x.abs() < 1e-15 { 0.0 } else { x };
    let (re, im) = (clean(c.re), clean(c.im));
    let sign = if im < 0.0 { '-' } else { '+' };
    format!(
        "{}{sign}{}i",
        report::display(re),
        report::display(im.abs())
    )
}

fn cmd_gen(a: &GenArgs, echo: Vec<String>) -> anyhow::Result<Outcome> {
    let need_n = || a.n.ok_or_else(|| anyhow!("--n is required"));
    let (artifact, what) = if let Some(kind) = a.kind {
        let n = need_n()?;
        let kind = match kind {
            KindArg::Bell => StateKind::Bell,
            KindArg::Ghz => StateKind::Ghz,
            KindArg::GhzLikeI => StateKind::GhzLikeI,
            KindArg::W => StateKind::W,
            KindArg::Dicke => StateKind::Dicke {
                m: a.m
                    .ok_or_else(|| anyhow!("--m is required for dicke states"))?,
            },
            KindArg::ProductZero => StateKind::ProductZero,
        };
        let state = make_state(kind, n)?;
        (
            io::to_json(&StateFile::from_state(&state)),
            format!("{} state on {n} qubits", kind.tag()),
        )
    } else if let Some(preset) = a.ops {
        let ops = match preset {
            OpsPreset::Eisert => {
                let n = need_n()?;
                if n == 0 {
                    bail!("--n must be positive");
                }
                eisert_operators(n)
            }
            OpsPreset::Dicke22 => dicke22_operators(),
            OpsPreset::BellClaim => bell_claim_operators(),
        };
        (
            io::to_json(&OpsFile::from_assignment(&ops)),
            format!("operators for {} players", ops.n_players()),
        )
    } else {
        let game = match a.game {
            Some(GamePreset::PrisonersDilemma) => ClassicalGame::prisoners_dilemma(),
            None => bail!("one of --kind, --ops or --game is required"),
        };
        (
            io::to_json(&GameFile::from_game(&game)),
            "prisoner's dilemma".to_string(),
        )
    };
    let mut report = RunReport::new(echo);
    report.result = json!({
        "verdict": "pass",
        "generated": what,
        "sha256": report::sha256_hex(artifact.as_bytes()),
    });
    let text = match &a.common.out {
        Some(p) => format!("wrote {what} to {}\n", p.display()),
        None => String::new(),
    };
    Ok(Outcome {
        exit: Exit::Pass,
        report,
        text,
        artifact: Some(artifact),
    })
}

fn cmd_check(a: &CheckArgs, echo: Vec<String>) -> anyhow::Result<Outcome> {
    let tol = a.common.tol;
    let state = load_state(&a.state, tol)?;
    let ops = load_ops(&a.ops, tol)?;
    let mut report = RunReport::new(echo);
    report.add_input("state", &a.state, &state.bytes);
    report.add_input("ops", &a.ops, &ops.bytes);
    report.notes = ANALYSIS_NOTES.to_vec();
    let r = check_distinguishability(&state.value, &ops.value, tol)?;
    report.result = report::repro_value(&r);

    let mut text = format!(
        "{}: max |<Phi_a|Phi_b>| = {} at strategy indices ({}, {}), tol {}\n",
        if r.pass { "PASS" } else { "FAIL" },
        report::display(r.max_offdiag),
        r.worst_pair.0,
        r.worst_pair.1,
        report::display(tol)
    );
    for (k, s) in r.spectrum.iter().enumerate() {
        text.push_str(&format!(
            "player {}: eig(u1^dagger u2) = {}, {} -> {}\n",
            k + 1,
            fmt_complex(s.eigenvalues[0]),
            fmt_complex(s.eigenvalues[1]),
            if s.ok { "ok" } else { "not {i, -i}" }
        ));
    }
    if let Some(z) = r.max_sigma_z_residual() {
        text.push_str(&format!(
            "canonical form: max |<sigma_z...>| = {}\n",
            report::display(z)
        ));
    }
    if let Some(d) = r.magnitude_deviation {
        text.push_str(&format!(
            "canonical form: max ||c_b|^2 - 2^-N| = {}\n",
            report::display(d)
        ));
    }
    Ok(Outcome {
        exit: if r.pass { Exit::Pass } else { Exit::Fail },
        report,
        text,
        artifact: None,
    })
}

fn cmd_search(a: &SearchArgs, echo: Vec<String>) -> anyhow::Result<Outcome> {
    let tol = a.common.tol;
    let state = load_state(&a.state, tol)?;
    let config = SearchConfig {
        restarts: a.restarts,
        max_iters: a.max_iters,
        seed: a.seed,
        tol,
        gauge_fixed: !a.no_gauge,
        ..SearchConfig::default()
    };
    config.validate()?;
    if a.threads == Some(0) {
        bail!("--threads must be at least 1");
    }
    let result = search_parallel(&state.value, &config, a.threads)?;
    let mut report = RunReport::new(echo);
    report.add_input("state", &a.state, &state.bytes);
    let mut value = report::search_value(&result, config.restarts);
    value["config"] = json!({
        "restarts": config.restarts,
        "max_iters": config.max_iters,
        "seed": config.seed,
        "tol": report::num(config.tol),
        "initial_step": report::num(config.initial_step),
        "shrink": report::num(config.shrink),
        "min_step": report::num(config.min_step),
        "gauge_fixed": config.gauge_fixed,
    });
    report.result = value;

    let summary = report.result["summary"]
        .as_str()
        .unwrap_or_default()
        .to_string();
    let mut text = format!(
        "{}: {summary}\n",
        if result.converged {
            "CONVERGED"
        } else {
            "NOT CONVERGED"
        }
    );
    let artifact = result
        .converged
        .then(|| io::to_json(&OpsFile::from_assignment(&result.best_assignment)));
    match (&a.common.out, result.converged) {
        (Some(p), true) => text.push_str(&format!("wrote operators to {}\n", p.display())),
        (Some(p), false) => text.push_str(&format!("not writing {}\n", p.display())),
        _ => {}
    }
    Ok(Outcome {
        exit: if result.converged {
            Exit::Pass
        } else {
            Exit::Fail
        },
        report,
        text,
        artifact,
    })
}

/// One angle for everyone or one per player.
fn thetas_for(text: &str, n: usize) -> anyhow::Result<ThetaProfile> {
    let list = parse_angle_list(text)?;
    let thetas = match list.len() {
        1 => vec![list[0]; n],
        len if len == n => list,
        len => bail!("--theta lists {len} angles for {n} players"),
    };
    Ok(ThetaProfile::new(thetas)?)
}

fn parse_selection(text: &str, n: usize) -> anyhow::Result<Vec<usize>> {
    let selection = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .with_context(|| format!("invalid strategy `{s}` in --select"))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    if selection.len() != n {
        bail!(
            "--select lists {} strategies for {n} players",
            selection.len()
        );
    }
    Ok(selection)
}

fn parse_operator_angles(text: &str, n: usize) -> anyhow::Result<Vec<LocalUnitary>> {
    let ops = text
        .split(';')
        .map(|chunk| {
            let a = parse_angle_list(chunk)?;
            if a.len() != 3 {
                bail!("each operator in --angles needs three angles, got `{chunk}`");
            }
            Ok(su2_from_angles(a[0], a[1], a[2]))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    if ops.len() != n {
        bail!("--angles lists {} operators for {n} players", ops.len());
    }
    Ok(ops)
}

struct ModelInputs {
    game: Loaded<ClassicalGame>,
    state: Loaded<PureState>,
    ops: Loaded<StrategyAssignment>,
}

fn load_model_inputs(
    game: &Path,
    state: &Path,
    ops: &Path,
    tol: f64,
    report: &mut RunReport,
) -> anyhow::Result<ModelInputs> {
    let inputs = ModelInputs {
        game: load_game(game)?,
        state: load_state(state, tol)?,
        ops: load_ops(ops, tol)?,
    };
    report.add_input("game", game, &inputs.game.bytes);
    report.add_input("state", state, &inputs.state.bytes);
    report.add_input("ops", ops, &inputs.ops.bytes);
    Ok(inputs)
}

/// Builds the model, turning a failed precondition into a failing outcome.
fn build_model(
    inputs: &ModelInputs,
    tol: f64,
    report: &mut RunReport,
) -> anyhow::Result<Result<QuantumGameModel, String>> {
    match QuantumGameModel::new(
        inputs.state.value.clone(),
        inputs.ops.value.clone(),
        inputs.game.value.clone(),
        tol,
    ) {
        Ok(m) => Ok(Ok(m)),
        Err(e) if is_analytic(&e) => {
            let message = format!("precondition failed: {e}");
            report.result = json!({ "verdict": "fail", "error": message });
            Ok(Err(message))
        }
        Err(e) => Err(e.into()),
    }
}

fn precondition_failure(report: RunReport, message: String) -> Outcome {
    Outcome {
        exit: Exit::Fail,
        report,
        text: format!("FAIL: {message}\n"),
        artifact: None,
    }
}

fn cmd_payoff(a: &PayoffArgs, echo: Vec<String>) -> anyhow::Result<Outcome> {
    let tol = a.common.tol;
    let mut report = RunReport::new(echo);
    let inputs = load_model_inputs(&a.game, &a.state, &a.ops, tol, &mut report)?;
    let n = inputs.state.value.n_qubits();
    // parse the play before the verdict so malformed flags stay input errors
    enum Play {
        Select(Vec<usize>),
        Theta(ThetaProfile),
        Angles(Vec<LocalUnitary>),
    }
    let play = if let Some(s) = &a.select {
        Play::Select(parse_selection(s, n)?)
    } else if let Some(t) = &a.theta {
        Play::Theta(thetas_for(t, n)?)
    } else if let Some(t) = &a.angles {
        Play::Angles(parse_operator_angles(t, n)?)
    } else {
        bail!("one of --select, --theta or --angles is required");
    };
    if a.shots == Some(0) {
        bail!("--shots must be positive");
    }
    let model = match build_model(&inputs, tol, &mut report)? {
        Ok(m) => m,
        Err(message) => return Ok(precondition_failure(report, message)),
    };
    let (ops, play_value) = match play {
        Play::Select(sel) => (
            model.assignment().operators_for(&sel)?,
            json!({ "select": sel }),
        ),
        Play::Theta(thetas) => {
            let ops = match model.mixed_operators(&thetas, tol) {
                Ok(ops) => ops,
                Err(e) if is_analytic(&e) => {
                    let message = format!("precondition failed: {e}");
                    report.result = json!({ "verdict": "fail", "error": message });
                    return Ok(precondition_failure(report, message));
                }
                Err(e) => return Err(e.into()),
            };
            (ops, json!({ "theta": nums(thetas.thetas()) }))
        }
        Play::Angles(ops) => {
            let matrices: Vec<Value> = ops.iter().map(|u| report::matrix(u.matrix())).collect();
            (ops, json!({ "operators": matrices }))
        }
    };
    let probs = model.outcome_probabilities(&ops)?;
    let payoff = model.expected_payoff(&ops)?;
    let outcomes: Vec<Vec<usize>> = (0..probs.len())
        .map(|j| selection_for_index(j, n))
        .collect();
    let mut result = json!({
        "verdict": "pass",
        "play": play_value,
        "probabilities": nums(&probs),
        "probability_sum": report::num(probs.iter().sum()),
        "outcomes": outcomes,
        "expected_payoff": nums(&payoff),
    });
    let mut text = format!("expected payoff {}\n", fmt_list(&payoff));
    for (j, p) in probs.iter().enumerate() {
        if *p > tol {
            text.push_str(&format!(
                "  outcome {:?}: probability {}\n",
                outcomes[j],
                report::display(*p)
            ));
        }
    }
    if let Some(shots) = a.shots {
        let counts = sample_round(&model, &ops, shots, a.seed)?;
        result["sampling"] = json!({ "shots": shots, "seed": a.seed, "counts": counts });
        text.push_str(&format!(
            "sampled counts ({shots} shots, seed {}): {counts:?}\n",
            a.seed
        ));
    }
    report.result = result;
    Ok(Outcome {
        exit: Exit::Pass,
        report,
        text,
        artifact: None,
    })
}

fn cmd_reproduce(a: &ReproduceArgs, echo: Vec<String>) -> anyhow::Result<Outcome> {
    let tol = a.common.tol;
    let mut report = RunReport::new(echo);
    let inputs = load_model_inputs(&a.game, &a.state, &a.ops, tol, &mut report)?;
    let thetas = thetas_for(&a.theta, inputs.state.value.n_qubits())?;
    report.notes = ANALYSIS_NOTES.to_vec();
    if let Err(message) = build_model(&inputs, tol, &mut report)? {
        return Ok(precondition_failure(report, message));
    }
    let r = match verify_mixed_reproduction(
        &inputs.game.value,
        &inputs.state.value,
        &inputs.ops.value,
        &thetas,
        tol,
    ) {
        Ok(r) => r,
        Err(e) if is_analytic(&e) => {
            let message = format!("precondition failed: {e}");
            report.result = json!({ "verdict": "fail", "error": message });
            return Ok(precondition_failure(report, message));
        }
        Err(e) => return Err(e.into()),
    };
    let pass = r.max_abs_diff < tol;
    let q = thetas.first_strategy_probs();
    report.result = json!({
        "verdict": if pass { "pass" } else { "fail" },
        "theta": nums(thetas.thetas()),
        "q_first_strategy": nums(&q),
        "classical_payoff": nums(&r.classical),
        "quantum_payoff": nums(&r.quantum),
        "max_abs_diff": report::num(r.max_abs_diff),
        "tol": report::num(tol),
    });
    let text = format!(
        "{}: classical {} quantum {} max difference {}\n",
        if pass { "PASS" } else { "FAIL" },
        fmt_list(&r.classical),
        fmt_list(&r.quantum),
        report::display(r.max_abs_diff)
    );
    Ok(Outcome {
        exit: if pass { Exit::Pass } else { Exit::Fail },
        report,
        text,
        artifact: None,
    })
}
