use thiserror::Error;

/// Errors raised by group, extension and cohomology constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("map is not a homomorphism at ({x}, {y})")]
    NotAHomomorphism { x: usize, y: usize },
    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("codomain mismatch: {0}")]
    CodomainMismatch(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("inclusion is not injective")]
    NotInjective,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("sequence is not exact: image of the inclusion differs from the kernel of the projection")]
    NotExact,
    #[error("kernel of the pushforward map is not normal in the total group")]
    KernelNotNormalInE,
    #[error("extensions have different kernel or quotient groups")]
    SignatureMismatch,
    #[error("conjugation action does not factor through the quotient")]
    DoesNotFactor,
    #[error("extensions induce different actions on the abelian kernel")]
    ActionMismatch,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("|G|*|H| = {product} exceeds the bound {bound}")]
    BoundExceeded { product: usize, bound: usize },
    #[error("map is not a section of the projection")]
    NotASection,
    #[error("the quotient by the center is not a split extension")]
    QuotientNotSplit,
    #[error("extensions do not induce the same outer action")]
    NotSameOuterAction,
    #[error("violation found: {0}")]
    ViolationFound(String),
    #[error("unknown group name `{0}`")]
    UnknownGroup(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
