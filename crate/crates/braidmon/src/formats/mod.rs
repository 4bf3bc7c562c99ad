//! Text formats: factorization files (TOML), presentations, homomorphism
//! lists, verdicts, fingerprints, arrangement and invariant reports.
//!
//! Every printer here has a parser that accepts its output and reprints it
//! unchanged.

mod factorization;
mod reports;

pub use factorization::{parse_factorization, print_factorization};
pub use reports::{
    parse_arrangement, parse_fingerprint, parse_homs, parse_invariants, parse_presentation, parse_verdict,
    print_arrangement, print_fingerprint, print_homs, print_invariants, print_presentation, print_verdict,
};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{0}")]
    Toml(#[from] toml::de::Error),
    #[error(transparent)]
    Core(#[from] braidmon_core::Error),
    #[error("line {line}: {detail}")]
    Line { line: usize, detail: String },
    #[error("{0}")]
    Invalid(String),
}

fn invalid(detail: impl Into<String>) -> FormatError {
    FormatError::Invalid(detail.into())
}
