use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    // graph construction
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) references a vertex outside [0, {n})")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({u}, {v}) has non-positive or non-finite weight {w}")]
    InvalidWeight { u: usize, v: usize, w: f64 },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    // partitions and assignments
    #[error("assignment has length {got}, graph has {expected} vertices")]
    AssignmentLength { expected: usize, got: usize },
    #[error("vertex {vertex} is assigned class {class}, but only {k} classes exist")]
    ClassOutOfRange { vertex: usize, class: usize, k: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not r-partite: intra-class weight {0}")]
    IntraClassWeight(f64),
    #[error("invalid vertex ordering: {0}")]
    InvalidOrder(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    // eigensolver
    #[error("matrix is not square ({rows} rows, row {row} has {cols} entries)")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix has a non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off})")]
    NoConvergence { sweeps: usize, off: f64 },

    // bounds
    #[error("bound degenerate: {0}")]
    DegenerateBound(String),

    // budgets
    #[error("enumeration needs up to {estimate} assignments, budget is {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },
    #[error("clique search exceeded {cap} branch nodes")]
    CliqueCapExceeded { cap: u64 },

    // extremal construction
    #[error("chi = {chi}, k = {k}: need chi >= k >= 2")]
    ChiBelowK { chi: usize, k: usize },
    #[error("k = {k} does not divide chi = {chi}")]
    NotDivisible { chi: usize, k: usize },
    #[error("H is not regular: {0}")]
    IrregularH(String),
    #[error("clique deficit: omega(H) = {omega} < chi = {chi}")]
    CliqueDeficit { omega: usize, chi: usize },
    #[error("eigenvalue condition violated: |mu_min(H)| = {abs_mu_min} >= t/(chi-1) = {limit}")]
    EigenConditionViolated { abs_mu_min: f64, limit: f64 },
    #[error("eigenvalue condition inside guard band: |mu_min(H)| = {abs_mu_min}, t/(chi-1) = {limit}")]
    EigenGuardBand { abs_mu_min: f64, limit: f64 },
    #[error("certification check failed: {0}")]
    CertificationFailed(String),

    // input files
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("edge count mismatch: header declares {declared}, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for refusals caused by a search budget rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::CliqueCapExceeded { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
