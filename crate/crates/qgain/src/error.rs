use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid graph document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("edge {edge}: unknown vertex {label:?}")]
    UnknownVertex { edge: String, label: String },
    #[error("edge {edge}: unrecognised gain token {token:?}")]
    UnknownToken { edge: String, token: String },
    #[error("edge {edge}: gain has norm {norm}, expected a unit quaternion")]
    NonUnitGain { edge: String, norm: f64 },
    #[error(transparent)]
    Core(#[from] qgain_core::Error),
}

impl Error {
    /// Process exit status for the command-line tool.
    ///
    /// 2 for unreadable or malformed input, 3 for a non-unit gain, 4 when a
    /// size cap or enumeration budget is exceeded, 5 when two determinant
    /// routes disagree.
    pub fn exit_code(&self) -> i32 {
        use qgain_core::Error as C;
        match self {
            Error::NonUnitGain { .. } | Error::Core(C::NonUnitGain { .. }) => 3,
            Error::Core(C::BudgetExceeded { .. } | C::SizeCapExceeded { .. }) => 4,
            Error::Core(
                C::Disagreement { .. }
                | C::NotReal { .. }
                | C::RouteMismatch { .. }
                | C::RankMismatch { .. },
            ) => 5,
            _ => 2,
        }
    }
}
