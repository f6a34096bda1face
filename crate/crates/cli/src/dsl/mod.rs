//! The `.qcf` structure-description language.

mod ast;
mod lexer;
mod parser;
mod printer;

pub use ast::*;
pub use parser::parse;
pub use printer::print;

use std::fmt;

/// Line and column, both 1-based.
#[derive(Debug, Clone, Copy, Default)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

/// Positions do not take part in comparisons, so two documents that differ
/// only in layout compare equal.
impl PartialEq for Span {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for Span {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    Syntax,
    Reference,
    Validation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub span: Span,
    pub message: String,
}

impl Diagnostic {
    pub fn syntax(span: Span, message: impl Into<String>) -> Self {
        Diagnostic {
            kind: DiagnosticKind::Syntax,
            span,
            message: message.into(),
        }
    }

    pub fn reference(span: Span, message: impl Into<String>) -> Self {
        Diagnostic {
            kind: DiagnosticKind::Reference,
            span,
            message: message.into(),
        }
    }

    pub fn validation(span: Span, message: impl Into<String>) -> Self {
        Diagnostic {
            kind: DiagnosticKind::Validation,
            span,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            DiagnosticKind::Syntax => "syntax",
            DiagnosticKind::Reference => "reference",
            DiagnosticKind::Validation => "validation",
        };
        write!(
            f,
            "{}:{}: {kind} error: {}",
            self.span.line, self.span.col, self.message
        )
    }
}

impl std::error::Error for Diagnostic {}
