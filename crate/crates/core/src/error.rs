use thiserror::Error;

/// Parse failure with a byte offset into the input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at {position}: {message}")]
pub struct SyntaxError {
    pub position: usize,
    pub message: String,
}

impl SyntaxError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        SyntaxError {
            position,
            message: message.into(),
        }
    }
}

/// A formula outside the fragment a translation or embedding is defined on.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{scheme}: formula outside the supported fragment: {detail}")]
pub struct FragmentError {
    pub scheme: &'static str,
    pub detail: String,
}

impl FragmentError {
    pub fn new(scheme: &'static str, detail: impl Into<String>) -> Self {
        FragmentError {
            scheme,
            detail: detail.into(),
        }
    }
}
