//! Library-wide error type.

use std::fmt;

use crate::types::Hyperplane;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A hyperplane constant of zero; hyperplanes through the origin are
    /// outside this framework.
    ZeroConstant,
    /// A hyperplane with `p == q`.
    EqualIndices(usize),
    /// A vertex index outside `1..=n`; `bound` is `None` when no arrangement
    /// context exists (indices are 1-based, so 0 is always invalid).
    IndexOutOfRange { index: usize, bound: Option<usize> },
    /// The same `(p, q, a)` triple listed twice in one arrangement.
    DuplicateHyperplane(Hyperplane),
    /// A multigraph edge `i -> i`.
    SelfLoop(usize),
    /// A sign or label vector whose length does not match its arrangement.
    LengthMismatch { expected: usize, found: usize },
    /// The queried sign vector is not a region.
    InfeasibleSigns,
    /// An input exceeding a guard on problem size.
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    /// Invalid constructor parameters.
    BadParams(String),
    /// An invalid edge list entry.
    BadEdge(String),
    /// The target function is not a parking function of the arrangement's
    /// multigraph; carries the smallest violating vertex subset.
    NotGParking { violating: Vec<usize> },
    /// A walk step was requested although every coordinate already meets its
    /// target, i.e. the walk is complete.
    EmptyDeficientSet,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroConstant => write!(f, "hyperplane constant must be nonzero"),
            Error::EqualIndices(p) => {
                write!(f, "hyperplane vertex indices must differ, got p = q = {p}")
            }
            Error::IndexOutOfRange { index, bound } => match bound {
                Some(n) => write!(f, "vertex index {index} out of range 1..={n}"),
                None => write!(f, "vertex index {index} is invalid (indices are 1-based)"),
            },
            Error::DuplicateHyperplane(h) => write!(f, "duplicate hyperplane {h}"),
            Error::SelfLoop(i) => write!(f, "self-loop at vertex {i}"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::InfeasibleSigns => write!(f, "sign vector does not describe a region"),
            Error::TooLarge {
                what,
                actual,
                limit,
            } => write!(f, "{what} too large: {actual} exceeds limit {limit}"),
            Error::BadParams(msg) => write!(f, "bad parameters: {msg}"),
            Error::BadEdge(msg) => write!(f, "bad edge: {msg}"),
            Error::NotGParking { violating } => {
                let parts: Vec<String> = violating.iter().map(|v| v.to_string()).collect();
                write!(f, "not a G-parking function, violating I={{{}}}", parts.join(","))
            }
            Error::EmptyDeficientSet => {
                write!(f, "no deficient vertices: the walk is already complete")
            }
        }
    }
}

impl std::error::Error for Error {}
