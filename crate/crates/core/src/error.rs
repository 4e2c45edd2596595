use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unrecognised Coxeter type `{0}` (expected A<n>, B<n>, D<n>, H3 or I2:<m>)")]
    BadType(String),
    #[error("cannot parse word `{0}`: {1}")]
    BadWord(String, String),
    #[error("letter {letter} is outside the generators 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("resource limit reached while {task}: {processed} items in {elapsed_ms} ms")]
    Budget {
        task: String,
        processed: u64,
        elapsed_ms: u128,
    },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("division is not exact, remainder {remainder}")]
    NotExact { remainder: String },
    #[error("cannot parse polynomial `{0}`: {1}")]
    BadPoly(String, String),
    #[error("{0}")]
    Invalid(String),
    #[error("matrix is rank deficient (rank {rank}, expected {expected})")]
    RankDeficient { rank: usize, expected: usize },
    #[error("sign propagation is inconsistent on the edge {a} -- {b}")]
    InconsistentSign { a: String, b: String },
}

pub type Result<T> = std::result::Result<T, Error>;
