use std::fmt;

use rootpoly::Error;

/// Everything that ends a run early, with its exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, input files or caps.
    Usage(String),
    /// An engine error; internal ones signal a broken invariant.
    Engine(Error),
    /// The run completed but a verification check did not pass.
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Engine(e) if e.is_internal() => 3,
            CliError::Engine(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Engine(e) if e.is_internal() => write!(f, "internal consistency failure: {e}"),
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Failed(m) => write!(f, "verification failed: {m}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(CliError::Engine(Error::NotDominant(vec![-1])).exit_code(), 2);
        assert_eq!(CliError::Engine(Error::SingularGram(vec![1])).exit_code(), 3);
        assert_eq!(CliError::Engine(Error::NotDivisible("r".into())).exit_code(), 3);
        assert_eq!(CliError::Failed("c".into()).exit_code(), 1);
    }
}
