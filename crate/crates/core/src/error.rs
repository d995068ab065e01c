use thiserror::Error;

/// Crate-wide error type. `kind()` gives the stable machine-readable tag
/// used in the CLI's JSON error output.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {d} vertices")]
    VertexOutOfRange { vertex: usize, d: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("{what} size {got} exceeds supported limit {limit}")]
    TooLarge {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("labeling has {labels} labels but the graph has {d} vertices")]
    SizeMismatch { labels: usize, d: usize },

    #[error("labeling does not verify: {0}")]
    NotAdmissible(String),

    #[error("ground element {element} out of range 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("empty generator: the unit ideal is not representable")]
    UnitIdeal,

    #[error("variable {var} out of range 1..={n_vars}")]
    VariableOutOfRange { var: usize, n_vars: usize },

    #[error("cannot intersect an empty family of primes")]
    EmptyFamily,

    #[error("variable-count mismatch: {0} vs {1}")]
    NVarsMismatch(usize, usize),

    #[error("ring is not equidimensional: minimal primes have sizes {sizes:?}: {primes}")]
    NotEquidimensional { sizes: Vec<usize>, primes: String },

    #[error("ideal has height {got}, need at least {need}")]
    HeightTooSmall { got: usize, need: usize },

    #[error("ring dimension {dim} is below 2")]
    DimensionTooSmall { dim: usize },

    #[error("undecidable within limits: component of size {d} exceeds cap {cap}")]
    Undecided { d: usize, cap: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::SelfLoop(_) => "self_loop",
            Error::DuplicateEdge(..) => "duplicate_edge",
            Error::TooLarge { .. } => "too_large",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::Graph6 { .. } => "graph6_parse",
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::NotAdmissible(_) => "not_admissible",
            Error::ElementOutOfRange { .. } => "element_out_of_range",
            Error::UnitIdeal => "unit_ideal",
            Error::VariableOutOfRange { .. } => "variable_out_of_range",
            Error::EmptyFamily => "empty_family",
            Error::NVarsMismatch(..) => "n_vars_mismatch",
            Error::NotEquidimensional { .. } => "not_equidimensional",
            Error::HeightTooSmall { .. } => "height_too_small",
            Error::DimensionTooSmall { .. } => "dimension_too_small",
            Error::Undecided { .. } => "undecided",
            Error::Invariant(_) => "invariant_violation",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
