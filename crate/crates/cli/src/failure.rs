use std::fmt;

use crate::{EXIT_INPUT, EXIT_INTERNAL};

/// A command failure, split by whose fault it is.
#[derive(Debug)]
pub enum Failure {
    Input(anyhow::Error),
    Internal(anyhow::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }

    pub fn input(message: impl fmt::Display) -> Self {
        Failure::Input(anyhow::anyhow!("{message}"))
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(e) | Failure::Internal(e) => {
                if f.alternate() {
                    write!(f, "{e:#}")
                } else {
                    write!(f, "{e}")
                }
            }
        }
    }
}

pub(crate) trait Blame<T> {
    fn input(self, context: impl fmt::Display) -> Result<T, Failure>;
    fn internal(self, context: impl fmt::Display) -> Result<T, Failure>;
}

impl<T, E> Blame<T> for Result<T, E>
where
    E: Into<anyhow::Error>,
{
    fn input(self, context: impl fmt::Display) -> Result<T, Failure> {
        self.map_err(|e| Failure::Input(e.into().context(context.to_string())))
    }

    fn internal(self, context: impl fmt::Display) -> Result<T, Failure> {
        self.map_err(|e| Failure::Internal(e.into().context(context.to_string())))
    }
}
