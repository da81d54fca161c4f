use thiserror::Error;

use crate::osp::Group;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length overflow: {plus} + {minus} parts do not fit in rank {n}")]
    LengthOverflow { plus: usize, minus: usize, n: usize },

    #[error("sequence is not weakly decreasing: {0}")]
    NotDecreasing(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("weights live in different ranks ({0} vs {1})")]
    RankMismatch(usize, usize),

    #[error("{}", stable_range_message(*.group, *.n, *.threshold))]
    OutsideStableRange {
        n: usize,
        threshold: usize,
        group: Option<Group>,
    },

    #[error("partition matrix is not symmetric")]
    NotSymmetric,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

fn stable_range_message(group: Option<Group>, n: usize, threshold: usize) -> String {
    match group {
        None => format!(
            "outside the stable range: GL_n needs n >= sum l(mu_i+) + l(mu_i-) = {threshold}, got n = {n}"
        ),
        Some(Group::Orthogonal) => format!(
            "outside the stable range: O_n needs n >= 2 sum l(mu_i) = {threshold}, got n = {n}"
        ),
        Some(Group::Symplectic) => format!(
            "outside the stable range: Sp_2n needs n >= 2 sum l(mu_i) = {threshold}, got n = {n}"
        ),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
