use crate::kernel::KernelError;
use crate::report::Witness;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("{context}: expected an object of shape {expected:?}, found {found:?}")]
    Shape {
        context: String,
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    #[error("{context}: hypothesis {label} does not hold{}", witness_suffix(.witness))]
    Hypothesis {
        label: &'static str,
        context: String,
        witness: Option<Box<Witness>>,
    },
    #[error("{0}")]
    Invalid(String),
}

fn witness_suffix(w: &Option<Box<Witness>>) -> String {
    match w {
        Some(w) => format!(" ({w})"),
        None => String::new(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
