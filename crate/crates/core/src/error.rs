use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("vertex names must be nonempty")]
    EmptyVertexName,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("label {label} on {a}-{b} is below 2")]
    LabelTooSmall { a: String, b: String, label: u64 },
    #[error("label `{0}` is neither an integer nor `inf`")]
    BadLabel(String),
    #[error("edge {a}-{b} declared with conflicting labels")]
    ConflictingEdge { a: String, b: String },
    #[error("edge {0}-{0} is a loop")]
    Loop(String),
    #[error("diagram has {0} vertices; at most {1} are supported")]
    TooManyVertices(usize, usize),

    #[error("braid closure exceeded the budget of {0} words")]
    BudgetExceeded(usize),
    #[error("group enumeration exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("search limit exceeded: {0}")]
    SearchLimit(String),

    #[error("vertex subset is not spherical: {0}")]
    NotSpherical(String),
    #[error("twist not applicable: {0}")]
    NotApplicable(String),
    #[error("generator maps do not compose: {0}")]
    MismatchedMaps(String),
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no maximal spherical subset corresponds to {0}")]
    NoCorrespondent(String),
    #[error("correspondent of {0} is not unique")]
    NotUnique(String),
    #[error("no label-preserving bijection satisfies the conjugacy constraints")]
    NoValidPsi,
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that mean "instance too large for the configured limits".
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded(_) | Error::CapExceeded(_) | Error::SearchLimit(_)
        )
    }
}
