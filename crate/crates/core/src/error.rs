use std::path::PathBuf;

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cyclic group order must be positive")]
    ZeroOrder,
    #[error("group order {order} exceeds the table limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("permutation degree {degree} too large (at most {max} supported)")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element index {index} out of range for group of order {order}")]
    ElementIndex { index: usize, order: usize },
    #[error("subgroup is not normal: conjugating {element} by {conjugator} leaves it")]
    NotNormal { conjugator: usize, element: usize },
    #[error("element set is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("no generating sequence of length at most {bound} found (greedy search needed {found})")]
    GeneratorBound { bound: usize, found: usize },
    #[error("group of order {order} exceeds the enumeration limit {limit}")]
    EnumerationTooLarge { order: usize, limit: usize },
    #[error("map is not a homomorphism: image of {0}*{1} disagrees")]
    NotHomomorphism(usize, usize),
    #[error("homomorphism source/target mismatch")]
    HomMismatch,

    #[error("cochain degree {0} out of range")]
    Degree(usize),
    #[error("cochain of degree {degree} on a group of order {order} exceeds the storage limit")]
    CochainTooLarge { degree: usize, order: usize },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("cochain is not normalized: nonzero value at {0:?}")]
    NotNormalized(Vec<usize>),
    #[error("not a cocycle: coboundary takes value {value} at {tuple:?}")]
    NotCocycle { tuple: Vec<usize>, value: u64 },
    #[error("element {0} is not central")]
    NotCentral(usize),
    #[error("group was not built as a product of cyclic factors")]
    NotCyclicProduct,
    #[error("factor index {index} out of range ({count} factors)")]
    FactorIndex { index: usize, count: usize },
    #[error("modulus {modulus} is not divisible by factor order {order}")]
    ModulusNotDivisible { modulus: u64, order: usize },
    #[error("cochains live on different groups")]
    GroupMismatch,

    #[error("central extension of order {order} exceeds the limit {limit}")]
    ExtensionTooLarge { order: usize, limit: usize },
    #[error("no suitable prime below 2^31 for exponent {0}")]
    NoPrime(u64),
    #[error("character degree computation failed: {0}")]
    Character(String),

    #[error("central object spec has {got} entries, expected {expected}")]
    SpecLength { got: usize, expected: usize },
    #[error("count exceeds 128-bit range")]
    Overflow,

    #[error("invalid group spec {0:?}")]
    GroupSpec(String),
    #[error("invalid cocycle spec {0:?}")]
    CocycleSpec(String),
    #[error("invalid multiplicity spec: {0}")]
    SpecVector(String),
    #[error("class index {index} out of range ({count} conjugacy classes)")]
    ClassIndex { index: usize, count: usize },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON in {path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
