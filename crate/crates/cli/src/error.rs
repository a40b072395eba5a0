use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Runtime(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 2 for bad parameters, 1 for everything that went wrong at run time.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

// Library errors all stem from invalid parameters.
impl From<dmc_capacity::Error> for CliError {
    fn from(e: dmc_capacity::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}
