use thiserror::Error;

/// Errors raised while building or combining monoids, acts and morphisms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActError {
    #[error(
        "multiplication table is not square: row {row} has {len} entries, expected {expected}"
    )]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("monoid must have at least one element")]
    EmptyMonoid,

    #[error("entry {value} at ({row}, {col}) is out of range for a carrier of size {size}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },

    #[error("associativity fails: ({a}*{b})*{c} != {a}*({b}*{c})")]
    AssociativityViolation { a: usize, b: usize, c: usize },

    #[error("element {identity} is not an identity: fails against element {a}")]
    IdentityViolation { identity: usize, a: usize },

    #[error("act action table has {rows} rows of which row {row} has {len} entries, expected {expected}")]
    ActShape {
        rows: usize,
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("act unit law fails at element {x}")]
    ActUnitViolation { x: usize },

    #[error("act associativity fails: (x{x}*m{m})*m{n} != x{x}*(m{m}*m{n})")]
    ActAssociativityViolation { x: usize, m: usize, n: usize },

    #[error("map is not equivariant: f(x{x}*m{m}) != f(x{x})*m{m}")]
    NotEquivariant { x: usize, m: usize },

    #[error("map has length {len}, expected {expected}")]
    MapLength { len: usize, expected: usize },

    #[error("objects live over different monoids")]
    MonoidMismatch,

    #[error("morphisms are not parallel")]
    NotParallel,

    #[error("morphisms do not share a common target")]
    TargetMismatch,

    #[error("morphisms are not composable")]
    NotComposable,

    #[error("element set is not closed under the action (element {x} * m{m} escapes)")]
    NotASubact { x: usize, m: usize },

    #[error("operation requires a nonempty act")]
    DegenerateEmptyAct,

    #[error("{what} is not {requirement}")]
    Precondition {
        what: String,
        requirement: &'static str,
    },

    #[error("theorem violation ({theorem}): {detail}")]
    TheoremViolation {
        theorem: &'static str,
        detail: String,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl ActError {
    pub(crate) fn theorem(theorem: &'static str, detail: impl Into<String>) -> Self {
        ActError::TheoremViolation {
            theorem,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = ActError> = std::result::Result<T, E>;
