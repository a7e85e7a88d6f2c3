use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

/// Names one slot of a [`NilQuat`](crate::NilQuat).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    Scalar,
    I,
    J,
    K,
}

impl Component {
    pub const ALL: [Component; 4] = [Component::Scalar, Component::I, Component::J, Component::K];
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::Scalar => "scalar",
            Component::I => "i",
            Component::J => "j",
            Component::K => "k",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// An exact division left a remainder. For the closed forms in this crate
    /// that means a claimed integral quotient is false.
    #[error("{divisor} does not divide the {component} component {value}")]
    NonDivisible {
        component: Component,
        value: BigInt,
        divisor: BigInt,
    },

    #[error("{what}: index {index} is below the minimum {min}")]
    IndexOutOfRange { what: String, index: i64, min: i64 },

    #[error("no identities selected")]
    EmptySelection,

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown sequence kind `{0}`")]
    UnknownKind(String),

    #[error("report serialization failed: {0}")]
    Serialize(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
