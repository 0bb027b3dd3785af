use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Sizes of two inputs disagree.
    Dimension {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    /// Amplitude vector length is not a power of two (or is empty).
    Length(usize),
    TooManyQubits(usize),
    NonFinite(&'static str),
    NotNormalized {
        norm: f64,
    },
    NotUnitary {
        deviation: f64,
    },
    NotSpecialUnitary {
        det: (f64, f64),
    },
    NotNormal {
        deviation: f64,
    },
    InvalidState(&'static str),
    InvalidChoice {
        player: usize,
        choice: usize,
        count: usize,
    },
    InvalidProfile {
        player: usize,
        reason: &'static str,
    },
    InvalidGame(&'static str),
    /// Output states are not pairwise orthogonal.
    Distinguishability {
        max_offdiag: f64,
        pair: (usize, usize),
    },
    /// A player's pair does not have eigenvalues {i, -i} for u1^dagger u2.
    SpectralCondition {
        player: usize,
    },
    /// cos(theta) u1 + sin(theta) u2 is not unitary.
    MixedNotUnitary {
        deviation: f64,
    },
    InvalidConfig(&'static str),
    SingularSystem,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension {
                what,
                expected,
                found,
            } => write!(
                f,
                "dimension mismatch for {what}: expected {expected}, found {found}"
            ),
            Error::Length(len) => {
                write!(f, "amplitude count {len} is not a positive power of two")
            }
            Error::TooManyQubits(n) => {
                write!(
                    f,
                    "{n} qubits requested, at most {} supported",
                    crate::MAX_QUBITS
                )
            }
            Error::NonFinite(what) => write!(f, "non-finite value in {what}"),
            Error::NotNormalized { norm } => {
                write!(f, "state is not normalized: norm is {norm}")
            }
            Error::NotUnitary { deviation } => {
                write!(
                    f,
                    "matrix is not unitary: max |U^dagger U - I| = {deviation:e}"
                )
            }
            Error::NotSpecialUnitary { det } => {
                write!(f, "matrix determinant is {}{:+}i, expected 1", det.0, det.1)
            }
            Error::NotNormal { deviation } => {
                write!(
                    f,
                    "matrix is not normal: max |M M^dagger - M^dagger M| = {deviation:e}"
                )
            }
            Error::InvalidState(msg) => write!(f, "invalid state request: {msg}"),
            Error::InvalidChoice {
                player,
                choice,
                count,
            } => write!(
                f,
                "player {player}: strategy {choice} out of range 1..={count}"
            ),
            Error::InvalidProfile { player, reason } => {
                write!(f, "player {player}: invalid mixed strategy: {reason}")
            }
            Error::InvalidGame(msg) => write!(f, "invalid game: {msg}"),
            Error::Distinguishability { max_offdiag, pair } => write!(
                f,
                "output states are not distinguishable: |<Phi_{}|Phi_{}>| = {max_offdiag}",
                pair.0, pair.1
            ),
            Error::SpectralCondition { player } => write!(
                f,
                "player {player}: eigenvalues of u1^dagger u2 are not {{i, -i}}"
            ),
            Error::MixedNotUnitary { deviation } => write!(
                f,
                "mixed-strategy operator is not unitary (deviation {deviation:e}); \
                 the operator pair violates the spectral condition"
            ),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::SingularSystem => write!(f, "linear system is singular"),
        }
    }
}

impl core::error::Error for Error {}
