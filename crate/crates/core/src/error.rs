use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a lattice: elements {0} and {1} have no unique {2}")]
    NotALattice(usize, usize, &'static str),
    #[error("cover relation contains a cycle")]
    Cyclic,
    #[error("empty lattice")]
    Empty,
    #[error("scope exceeded: {0}")]
    ScopeExceeded(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutation is not centrally symmetric")]
    NotSymmetric,
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("invalid symmetric pair: {0}")]
    InvalidPair(String),
    #[error("arcs do not form a noncrossing diagram: {0}")]
    NotADiagram(String),
    #[error("element is not join-irreducible")]
    NotJoinIrreducible,
    #[error("congruence is not the restriction of a congruence on the symmetric group")]
    NotInConA,
    #[error("malformed noncrossing partition: {0}")]
    MalformedPartition(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
