//! JSON file formats for states, operator assignments and games.
//!
//! Complex numbers are `[re, im]` pairs and matrices are row-major. Floats
//! are written in shortest round-trip form, so saving and loading is
//! bit-exact.

use std::fs;
use std::path::{Path, PathBuf};

use qgame_core::tensor::project_to_su2_with_tol;
use qgame_core::{ClassicalGame, Matrix2, OperatorPair, PureState, StrategyAssignment, C64};
use serde::{Deserialize, Serialize};

pub type Complex = [f64; 2];
pub type MatrixRows = [[Complex; 2]; 2];

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{}: {cause}", path.display())]
    Io {
        path: PathBuf,
        cause: std::io::Error,
    },
    #[error("{}: malformed JSON: {cause}", path.display())]
    Parse {
        path: PathBuf,
        cause: serde_json::Error,
    },
    #[error("{}: {cause}", path.display())]
    Invalid {
        path: PathBuf,
        cause: qgame_core::Error,
    },
    #[error("{}: player {player}: {cause}", path.display())]
    Player {
        path: PathBuf,
        player: usize,
        cause: qgame_core::Error,
    },
    #[error("{}: {message}", path.display())]
    Shape { path: PathBuf, message: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub n_qubits: usize,
    pub amplitudes: Vec<Complex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub u1: MatrixRows,
    pub u2: MatrixRows,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpsFile {
    pub players: usize,
    pub pairs: Vec<PairFile>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFile {
    pub n_players: usize,
    pub strategy_counts: Vec<usize>,
    pub payoffs: Vec<Vec<f64>>,
}

pub fn complex(c: C64) -> Complex {
    [c.re, c.im]
}

pub fn matrix_rows(m: &Matrix2) -> MatrixRows {
    m.entries.map(|row| row.map(complex))
}

fn matrix_from_rows(rows: &MatrixRows) -> Matrix2 {
    Matrix2::new(rows.map(|row| row.map(|[re, im]| C64::new(re, im))))
}

impl StateFile {
    pub fn from_state(state: &PureState) -> Self {
        StateFile {
            n_qubits: state.n_qubits(),
            amplitudes: state.amplitudes().iter().map(|&a| complex(a)).collect(),
        }
    }

    pub fn to_state(&self, tol: f64) -> Result<PureState, qgame_core::Error> {
        let amps: Vec<C64> = self
            .amplitudes
            .iter()
            .map(|&[re, im]| C64::new(re, im))
            .collect();
        let state = PureState::with_tol(amps, tol)?;
        if state.n_qubits() != self.n_qubits {
            return Err(qgame_core::Error::Dimension {
                what: "amplitudes for the declared qubit count",
                expected: 1 << self.n_qubits.min(qgame_core::MAX_QUBITS),
                found: self.amplitudes.len(),
            });
        }
        Ok(state)
    }
}

impl OpsFile {
    pub fn from_assignment(assignment: &StrategyAssignment) -> Self {
        OpsFile {
            players: assignment.n_players(),
            pairs: assignment
                .pairs()
                .iter()
                .map(|p| PairFile {
                    u1: matrix_rows(p.u1.matrix()),
                    u2: matrix_rows(p.u2.matrix()),
                })
                .collect(),
        }
    }
}

impl GameFile {
    pub fn from_game(game: &ClassicalGame) -> Self {
        GameFile {
            n_players: game.n_players(),
            strategy_counts: game.strategy_counts().to_vec(),
            payoffs: game.payoffs().to_vec(),
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, FileError> {
    fs::read(path).map_err(|cause| FileError::Io {
        path: path.to_path_buf(),
        cause,
    })
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path, bytes: &[u8]) -> Result<T, FileError> {
    serde_json::from_slice(bytes).map_err(|cause| FileError::Parse {
        path: path.to_path_buf(),
        cause,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types always serialize");
    s.push('\n');
    s
}

fn write<T: Serialize>(path: &Path, value: &T) -> Result<(), FileError> {
    fs::write(path, to_json(value)).map_err(|cause| FileError::Io {
        path: path.to_path_buf(),
        cause,
    })
}

pub fn parse_state(path: &Path, bytes: &[u8], tol: f64) -> Result<PureState, FileError> {
    let file: StateFile = parse(path, bytes)?;
    file.to_state(tol).map_err(|cause| FileError::Invalid {
        path: path.to_path_buf(),
        cause,
    })
}

/// Each matrix must be unitary within `tol`; it is then stored as its SU(2)
/// representative.
pub fn parse_ops(path: &Path, bytes: &[u8], tol: f64) -> Result<StrategyAssignment, FileError> {
    let file: OpsFile = parse(path, bytes)?;
    if file.pairs.len() != file.players {
        return Err(FileError::Shape {
            path: path.to_path_buf(),
            message: format!(
                "declares {} players but lists {} pairs",
                file.players,
                file.pairs.len()
            ),
        });
    }
    let pairs = file
        .pairs
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let project = |rows: &MatrixRows| {
                project_to_su2_with_tol(&matrix_from_rows(rows), tol).map_err(|cause| {
                    FileError::Player {
                        path: path.to_path_buf(),
                        player: i + 1,
                        cause,
                    }
                })
            };
            Ok(OperatorPair::new(project(&p.u1)?, project(&p.u2)?))
        })
        .collect::<Result<Vec<_>, FileError>>()?;
    StrategyAssignment::new(pairs).map_err(|cause| FileError::Invalid {
        path: path.to_path_buf(),
        cause,
    })
}

pub fn parse_game(path: &Path, bytes: &[u8]) -> Result<ClassicalGame, FileError> {
    let file: GameFile = parse(path, bytes)?;
    if file.strategy_counts.len() != file.n_players {
        return Err(FileError::Shape {
            path: path.to_path_buf(),
            message: format!(
                "declares {} players but lists {} strategy counts",
                file.n_players,
                file.strategy_counts.len()
            ),
        });
    }
    ClassicalGame::new(file.strategy_counts, file.payoffs).map_err(|cause| FileError::Invalid {
        path: path.to_path_buf(),
        cause,
    })
}

pub fn load_state(path: &Path, tol: f64) -> Result<PureState, FileError> {
    parse_state(path, &read(path)?, tol)
}

pub fn save_state(state: &PureState, path: &Path) -> Result<(), FileError> {
    write(path, &StateFile::from_state(state))
}

pub fn load_ops(path: &Path, tol: f64) -> Result<StrategyAssignment, FileError> {
    parse_ops(path, &read(path)?, tol)
}

pub fn save_ops(assignment: &StrategyAssignment, path: &Path) -> Result<(), FileError> {
    write(path, &OpsFile::from_assignment(assignment))
}

pub fn load_game(path: &Path) -> Result<ClassicalGame, FileError> {
    parse_game(path, &read(path)?)
}

pub fn save_game(game: &ClassicalGame, path: &Path) -> Result<(), FileError> {
    write(path, &GameFile::from_game(game))
}

/// A loaded input together with the bytes it was parsed from.
pub struct Loaded<T> {
    pub value: T,
    pub bytes: Vec<u8>,
}

pub fn load_with_bytes<T>(
    path: &Path,
    parse: impl FnOnce(&Path, &[u8]) -> Result<T, FileError>,
) -> Result<Loaded<T>, FileError> {
    let bytes = read(path)?;
    let value = parse(path, &bytes)?;
    Ok(Loaded { value, bytes })
}
