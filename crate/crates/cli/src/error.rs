use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Engine(#[from] ecparity::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 3 for precision exhaustion, 2 for every input problem.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(ecparity::Error::PrecisionExhausted(_)) => 3,
            _ => 2,
        }
    }
}
