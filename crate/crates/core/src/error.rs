use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field dimension must be at least 1, got {0}")]
    InvalidDimension(u32),
    #[error("size bound exceeded: {what} = {value} exceeds the limit {limit}")]
    SizeBound {
        what: &'static str,
        value: u128,
        limit: u128,
    },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("element does not belong to the field of order {q}")]
    ForeignElement { q: u64 },
    #[error("{n} does not divide {order}")]
    NotDivisor { n: u64, order: u64 },
    #[error("gcd(p, n) must be 1: p = {p}, n = {n}")]
    NotCoprime { n: u64, p: u64 },
    #[error("{0}")]
    InvalidParams(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutations do not generate a transitive group (disconnected dessin)")]
    NotTransitive,
    #[error("dessin is not regular: {0}")]
    NotRegular(String),
    #[error("odd Euler characteristic {0}")]
    OddEulerCharacteristic(i64),
    #[error("edge set is not a subgroup of the automorphism group")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("elements do not generate the group (generated {generated} of {order})")]
    NotGenerating { generated: usize, order: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
