//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors reported by the tree, configuration, polytope, and ideal engines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed tree text (parent list or level sequence).
    Parse(String),
    /// A parent index that is not in `1..child`.
    InvalidParent { child: usize, parent: usize },
    /// Node count in the header disagrees with the body.
    NodeCount { expected: usize, got: usize },
    /// The operation is only defined for binary trees.
    NotBinary,
    /// Binary trees have an odd number of nodes.
    EvenNodeCount(usize),
    /// A labeling whose length differs from the tree's node count.
    LabelingLength { expected: usize, got: usize },
    /// Node count exceeds the configured enumeration cap.
    NodeCap { n: usize, cap: usize },
    /// The ideal engine was asked for more variables than its cap allows.
    VariableCap { variables: usize, cap: usize },
    /// A hard resource budget ran out; nothing was silently truncated.
    BudgetExhausted { what: &'static str, limit: usize },
    /// A fiber grew past the configured bound during a connectivity check.
    FiberTooLarge { bound: usize },
    /// Convex hull of an empty point set.
    EmptyPointSet,
    /// Hull input points must share one coordinate sum.
    MixedCoordinateSums,
    /// The operation needs a full-dimensional (3-dimensional) polytope.
    Degenerate { dim: usize },
    /// Parameter out of the documented range.
    Domain(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::InvalidParent { child, parent } => {
                write!(f, "node {child} has parent {parent}, expected 1..{child}")
            }
            Error::NodeCount { expected, got } => {
                write!(f, "expected {expected} nodes, got {got}")
            }
            Error::NotBinary => write!(f, "tree is not binary"),
            Error::EvenNodeCount(n) => {
                write!(f, "binary trees have odd node counts, got {n}")
            }
            Error::LabelingLength { expected, got } => {
                write!(f, "labeling has {got} bits, tree has {expected} nodes")
            }
            Error::NodeCap { n, cap } => {
                write!(f, "{n} nodes exceeds the enumeration cap of {cap}")
            }
            Error::VariableCap { variables, cap } => {
                write!(f, "{variables} variables exceeds the engine cap of {cap}")
            }
            Error::BudgetExhausted { what, limit } => {
                write!(f, "budget exhausted: {what} exceeded {limit}")
            }
            Error::FiberTooLarge { bound } => {
                write!(f, "fiber exceeds the configured bound of {bound} monomials")
            }
            Error::EmptyPointSet => write!(f, "empty point set"),
            Error::MixedCoordinateSums => write!(f, "points have differing coordinate sums"),
            Error::Degenerate { dim } => {
                write!(f, "polytope is {dim}-dimensional, expected dimension 3")
            }
            Error::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
