use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate ray: the point coincides with the ray origin")]
    DegenerateRay,
    #[error("empty point collection")]
    Empty,
    #[error("points are not concyclic")]
    NotCyclic,
    #[error("smallest arc is ambiguous: endpoints are antipodal")]
    Antipodal,
    #[error("cyclic set has two points at the same angle")]
    DuplicateAngle,
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An internal guarantee of a construction did not hold. `rule` names
    /// the step whose guarantee failed.
    #[error("contract violation in {rule}: {detail}")]
    Contract { rule: &'static str, detail: String },
    #[error("point is not fixed by the symmetry group")]
    NotFixed,
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn contract(rule: &'static str, detail: impl Into<String>) -> Error {
        Error::Contract {
            rule,
            detail: detail.into(),
        }
    }

    pub fn is_contract_violation(&self) -> bool {
        matches!(self, Error::Contract { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
