use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator {generator} is not one of the {count} generators of the group")]
    UnknownGenerator { generator: u32, count: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("edge id `{0}` is already in use")]
    DuplicateEdge(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid trail: {0}")]
    InvalidTrail(String),
    #[error("cannot split off: {0}")]
    InvalidSplit(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("more than {cap} Eulerian trails")]
    Overflow { cap: usize },
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}
