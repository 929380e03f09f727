use thiserror::Error;

use crate::z2poly::GenId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator {0} has no image or value")]
    MissingGenerator(GenId),
    #[error("unknown generator name `{0}`")]
    UnknownGenerator(String),
    #[error("malformed JSON: {0}")]
    Json(String),

    #[error("a braid needs at least one strand, got {0}")]
    InvalidStrands(i64),
    #[error("letter {letter} at position {position} is outside 1..={max}")]
    LetterOutOfRange {
        position: usize,
        letter: i64,
        max: i64,
    },
    #[error("cannot parse braid word: {0}")]
    BraidSyntax(String),
    #[error("operation needs a nonempty braid word")]
    EmptyWord,
    #[error("not a standard torus braid: {0}")]
    NotTorus(String),

    #[error("{what} = {got} exceeds the configured limit {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("gcd({p}, {q}) = {gcd}; order certification needs a knot")]
    NotCoprime { p: u32, q: u32, gcd: u32 },
    #[error("no crossing labelled ({i},{j},{t}) realizes the chord labelled {chord}")]
    MissingCrossing { i: u32, j: u32, t: u32, chord: u32 },

    #[error("renaming is not a bijection: {0}")]
    NotBijective(String),
    #[error("generators must be distinct: {0}")]
    CoincidentGenerators(String),
    #[error("differential of the vanishing generator has no monomial `{0}`")]
    MissingMonomial(String),
    #[error("v = {0} must not contain the vanishing pair")]
    VanishingPairInRemainder(String),
    #[error("cannot decompose monomial `{0}`")]
    MalformedMonomial(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
