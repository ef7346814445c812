use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed tuple: {0}")]
    MalformedTuple(String),
    #[error("edge {0} appears {1} time(s), expected exactly 2")]
    EdgeOccurrence(u32, usize),
    #[error("rotation system fails the Euler check (not a plane diagram)")]
    NonPlanar,
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("unknown crossing {0}")]
    UnknownCrossing(u32),
    #[error("diagram carries no over/under data")]
    NoOverUnder,
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("state does not assign a way to every crossing")]
    PartialState,
    #[error("expected {expected} component(s), found {found}")]
    ComponentCount { expected: u32, found: u32 },
    #[error("crossing cap exceeded: {n} crossings > cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("diagram has no inter-component 2-gon")]
    NoInterComponentBigon,
    #[error("crossing {0} is a self-crossing")]
    SelfCrossing(u32),
    #[error("input is not a knot diagram")]
    NotAKnot,
    #[error("negativity criteria disagree: {0}")]
    CriterionMismatch(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("unknown link name: {0}")]
    UnknownName(String),
    #[error("bad record: {0}")]
    BadRecord(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
