use std::fmt;

use cornerk_core::{CharClassError, ComplexError, KTheoryError, ToeplitzError};

pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

/// One-line error `ERROR[<module>.<op>]: message` with its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub module: &'static str,
    pub op: &'static str,
    pub message: String,
    pub code: i32,
}

impl CliError {
    pub fn domain(module: &'static str, op: &'static str, message: impl Into<String>) -> Self {
        Self {
            module,
            op,
            message: message.into(),
            code: EXIT_DOMAIN,
        }
    }

    pub fn parse(module: &'static str, op: &'static str, message: impl Into<String>) -> Self {
        Self {
            code: EXIT_PARSE,
            ..Self::domain(module, op, message)
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // keep it on one line whatever the underlying message
        let msg = self.message.split_whitespace().collect::<Vec<_>>().join(" ");
        write!(f, "ERROR[{}.{}]: {msg}", self.module, self.op)
    }
}

pub fn complex_error(op: &'static str, e: ComplexError) -> CliError {
    let msg = e.to_string();
    match e {
        ComplexError::Json(_) | ComplexError::UnknownBuiltin(_) => CliError::parse("corner_complex", op, msg),
        _ => CliError::domain("corner_complex", op, msg),
    }
}

pub fn ktheory_error(op: &'static str, e: KTheoryError) -> CliError {
    match e {
        KTheoryError::Complex(inner) => complex_error(op, inner),
        KTheoryError::Parse(_) => CliError::parse("ktheory_engine", op, e.to_string()),
        _ => CliError::domain("ktheory_engine", op, e.to_string()),
    }
}

pub fn toeplitz_error(op: &'static str, e: ToeplitzError) -> CliError {
    match e {
        ToeplitzError::Parse(_) | ToeplitzError::ZeroSymbol => CliError::parse("toeplitz_index", op, e.to_string()),
        _ => CliError::domain("toeplitz_index", op, e.to_string()),
    }
}

pub fn charclass_error(op: &'static str, e: CharClassError) -> CliError {
    let msg = e.to_string();
    match e {
        CharClassError::Parse(_)
        | CharClassError::Json(_)
        | CharClassError::UnknownBuiltin(_)
        | CharClassError::UnknownLabel(_) => CliError::parse("char_class", op, msg),
        _ => CliError::domain("char_class", op, msg),
    }
}
