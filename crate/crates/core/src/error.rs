use thiserror::Error;

/// Every failure the library can report.
///
/// Each variant has a stable name (see [`Error::name`]) that the command line
/// front end prints next to the message.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed ring specification: {0}")]
    Syntax(String),
    #[error("{0} is not a chain ring (write it as a product of prime-power factors)")]
    NotChainRing(String),
    #[error("ideal vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("the prime ideal sum graph of a product of two fields is disconnected")]
    DisconnectedRing,
    #[error("a field has no nontrivial ideals, so its graph is empty")]
    EmptyGraph,
    #[error("graph is not connected")]
    NotConnected,
    #[error("malformed graph document: {0}")]
    MalformedGraph(String),
    #[error("no closed-form result covers the ring {0}")]
    NotCovered(String),
    #[error("graph has {0} vertices, brute force is limited to {1}")]
    TooLarge(usize, usize),
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
    #[error("bad verification parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::Syntax(_) => "SyntaxError",
            Error::NotChainRing(_) => "NotChainRing",
            Error::LengthMismatch(..) => "LengthMismatch",
            Error::DisconnectedRing => "DisconnectedRing",
            Error::EmptyGraph => "EmptyGraph",
            Error::NotConnected => "NotConnected",
            Error::MalformedGraph(_) => "MalformedGraph",
            Error::NotCovered(_) => "NotCovered",
            Error::TooLarge(..) => "TooLarge",
            Error::UnknownFormat(_) => "UnknownFormat",
            Error::BadParams(_) => "BadParams",
            Error::Io(_) => "IoError",
            Error::Json(_) => "JsonError",
            Error::Csv(_) => "CsvError",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
