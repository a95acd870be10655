use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    IdOutOfRange { id: usize, n: usize },
    #[error("graph must have at least two vertices")]
    TrivialGraph,
    #[error("horizon {k} outside 1..={diameter}")]
    HorizonOutOfRange { k: usize, diameter: usize },
    #[error("instance exceeds desk-scale limit: {0}")]
    ResourceLimit(String),
    #[error("not a permutation of the vertex set")]
    InvalidPermutation,
    #[error("ordering is not a strong elimination ordering")]
    InvalidOrdering,
    #[error("graph is not a tree")]
    NotATree,
    #[error("vertex {0} is not peripheral")]
    NotPeripheral(usize),
    #[error("broadcast is not dominating")]
    NotDominating,
    #[error("ball sizes differ between vertices at radius {0}")]
    NotBallUniform(usize),
    #[error("weight of vertex {0} is not positive")]
    NonPositiveWeight(usize),
    #[error("edge {0}-{1} is not on the path")]
    EdgeNotOnPath(usize, usize),
    #[error("broadcast power {power} at vertex {vertex} exceeds its eccentricity {ecc}")]
    PowerExceedsEccentricity { vertex: usize, power: usize, ecc: usize },
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
