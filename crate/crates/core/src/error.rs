use thiserror::Error;

use crate::rewrite::LengthReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet has {0} symbols, at most 255 are supported")]
    AlphabetTooLarge(usize),
    #[error("symbol {0:?} is not printable")]
    UnprintableSymbol(char),
    #[error("symbol {0:?} appears twice in the alphabet")]
    DuplicateSymbol(char),
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("symbol id {0} is outside an alphabet of size {1}")]
    SymbolOutOfRange(u8, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("rule {0} has an empty left-hand side")]
    EmptyLhs(usize),
    #[error("schema {0} has minimum exponent 0; exponents start at 1")]
    ZeroExponent(usize),
    #[error("schema {0}: suffix starts with the pumped symbol, so the pumped run is ambiguous")]
    AmbiguousSchema(usize),
    #[error("system is not length-reducing: {0}")]
    NotLengthReducing(LengthReport),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("word {word} is reducible: rule {rule_index} matches at position {position}")]
    Reducible {
        word: String,
        rule_index: usize,
        position: usize,
    },
    /// An irreducible word that does not fit the expected normal-form shape.
    /// Never produced for the built-in monoids.
    #[error("irreducible word {0} has no normal-form decomposition")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BallError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("mismatched balls: {0}")]
    Mismatch(String),
    #[error("malformed ball: {0}")]
    Malformed(String),
    #[error("json: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("unknown builtin presentation {0:?} (known: builtin:M, builtin:N)")]
    UnknownBuiltin(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
}
