use crate::model::PotentialKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{potential} potential is singular at r = 0")]
    SingularPoint { potential: PotentialKind },

    #[error("the {method} method is not defined for the {potential} potential")]
    Unsupported {
        method: &'static str,
        potential: PotentialKind,
    },

    /// The requested `(n, l)` state does not exist at this coupling.
    #[error(
        "no bound state n={n}, l={l} for the {potential} well at xi={xi} \
         ({available} bound state(s) with this l)"
    )]
    NotFound {
        potential: PotentialKind,
        xi: f64,
        n: u32,
        l: u32,
        available: usize,
    },

    #[error("root bracketing failed: {0}")]
    Bracket(String),

    #[error("solver error: {0}")]
    Solver(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
