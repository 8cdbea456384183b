use thiserror::Error;

use crate::group::table::AxiomReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown catalogue key `{0}`")]
    UnknownKey(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("cross-check between normal-form and coset-enumeration tables failed for {key}: {detail}")]
    CrossCheckMismatch { key: String, detail: String },
    #[error("coset limit of {limit} exceeded (presentation may define an infinite or too-large group)")]
    CosetLimit { limit: usize },
    #[error("malformed relator: {0}")]
    MalformedRelator(String),
    #[error("invalid normal-form tuple: {0}")]
    InvalidTuple(String),
    #[error("catalogue key {0} has no normal-form product rule")]
    NoNormalFormRule(String),
    #[error("table is not a group: {0}")]
    NotAGroup(Box<AxiomReport>),
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("action is not by automorphisms: {0}")]
    InvalidAction(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("subgroup is not central")]
    NotCentral,
    #[error("group order {order} exceeds the cohomology size cap {cap} (use force to override)")]
    SizeCap { order: usize, cap: usize },
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("invalid coefficient modulus: {0}")]
    InvalidModulus(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("no suitable prime found below {0}")]
    NoPrime(u64),
    #[error("character table verification failed: {0}")]
    CharacterVerification(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHomomorphism(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
