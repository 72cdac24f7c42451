use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad category of an [`Error`], used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input or configuration.
    Input,
    /// The sample points do not support the requested estimator.
    Geometry,
    /// An analytic oracle or curve model was evaluated outside its domain.
    Domain,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("too few points: need at least {needed}, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("duplicate consecutive points{}", at(*index))]
    DuplicatePoints { index: Option<usize> },
    #[error("degenerate configuration{}", at(*index))]
    DegenerateConfiguration { index: Option<usize> },
    #[error("degenerate base triangle{}", at(*index))]
    DegenerateBase { index: Option<usize> },
    #[error("curvature vanishes, torsion undefined{}", at(*index))]
    VanishingCurvature { index: Option<usize> },
    #[error("inconsistent triangle sides (stabilized Heron product {product:e})")]
    NegativeDiscriminant { product: f64 },
    #[error("distances are not realizable in 3-space (Cayley-Menger determinant {det:e})")]
    NotRealizable { det: f64 },
    #[error("invalid triangle sides: {0}")]
    InvalidSides(String),
    #[error("non-finite coordinate{}", at(*index))]
    NonFinite { index: Option<usize> },
    #[error("unknown curve '{0}'")]
    UnknownCurve(String),
    #[error("invalid curve parameters: {0}")]
    InvalidCurve(String),
    #[error("empty parameter range")]
    EmptyRange,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("singular parametrization at t = {t}")]
    SingularParametrization { t: f64 },
    #[error("inflection (vanishing equi-affine speed) at t = {t}")]
    InflectionPoint { t: f64 },
    #[error("invalid study: {0}")]
    InvalidStudy(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("at scale {scale}: {source}")]
    AtScale { scale: f64, source: Box<Error> },
}

fn at(index: Option<usize>) -> String {
    match index {
        Some(i) => format!(" at index {i}"),
        None => String::new(),
    }
}

impl Error {
    /// Attaches a sample index to index-carrying variants that lack one.
    pub fn at_index(self, i: usize) -> Self {
        use Error::*;
        match self {
            DuplicatePoints { index: None } => DuplicatePoints { index: Some(i) },
            DegenerateConfiguration { index: None } => DegenerateConfiguration { index: Some(i) },
            DegenerateBase { index: None } => DegenerateBase { index: Some(i) },
            VanishingCurvature { index: None } => VanishingCurvature { index: Some(i) },
            NonFinite { index: None } => NonFinite { index: Some(i) },
            other => other,
        }
    }

    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            TooFewPoints { .. }
            | DuplicatePoints { .. }
            | DegenerateConfiguration { .. }
            | DegenerateBase { .. }
            | VanishingCurvature { .. }
            | NegativeDiscriminant { .. }
            | NotRealizable { .. }
            | InvalidSides(_) => ErrorClass::Geometry,
            Parse { .. }
            | NonFinite { .. }
            | UnknownCurve(_)
            | InvalidCurve(_)
            | InvalidPartition(_)
            | InvalidStudy(_) => ErrorClass::Input,
            EmptyRange | SingularParametrization { .. } | InflectionPoint { .. } => {
                ErrorClass::Domain
            }
            AtScale { source, .. } => source.class(),
        }
    }
}
