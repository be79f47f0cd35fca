use crate::words::Letter;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} = {value} is out of range, expected {expected}")]
    Range {
        what: &'static str,
        value: i64,
        expected: String,
    },
    #[error("unsupported degree n = {n}: {reason}")]
    UnsupportedDegree { n: u32, reason: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bad token {0:?}")]
    Token(String),
    #[error("permutation sizes differ ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<u32>),
    #[error("letter {0} has no assigned permutation")]
    Unassigned(Letter),
    #[error("assignment for generator {0} is not a transposition")]
    NotATransposition(u32),
    #[error("expected a presentation at stage {expected}, found {found}")]
    Stage { expected: String, found: String },
    #[error("generator {0} is not an endpoint of the Coxeter path")]
    NotAnEndpoint(u32),
    #[error("letter {letter} does not belong to the generator set")]
    ForeignLetter { letter: Letter },
    #[error("empty relator list")]
    NoRelators,
    #[error("value is not integral: {0}")]
    NonIntegral(String),
    #[error("bad range {0}")]
    BadRange(String),
    #[error("unknown format {0:?}")]
    Format(String),
}
