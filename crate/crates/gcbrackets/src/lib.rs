//! Exact symbolic computation in bracket rings and Grassmann-Cayley algebras.
//!
//! A *bracket* `[λ₁…λ_d]` stands for the maximal minor of an `n×d` matrix of
//! indeterminates on rows `λ₁,…,λ_d`; brackets generate the ring of
//! `SL_d`-invariants of `n` points in projective `(d−1)`-space. This crate
//! implements the objects needed to state and mechanically verify projective
//! incidence theorems with exact rational arithmetic:
//!
//! * [`poly`] — sparse multivariate polynomials over arbitrary-precision
//!   rationals, with the block monomial orders the other layers need,
//! * [`bracket`] — the bracket ring `B(n,d)`: Grassmann-Plücker relations,
//!   the tableau order, the straightening algorithm, expansion into matrix
//!   entries and subduction back,
//! * [`gc`] — the Grassmann-Cayley ring: blades, join, and the shuffle-product
//!   meet,
//! * [`script`] — a small expression language (`.gc` scripts) over these rings,
//! * [`oracle`] — numeric evaluation at concrete point configurations and a
//!   classical linear-algebra meet, used to cross-check the symbolic layers,
//! * [`cli`] — the `gcb` command-line tool (REPL, script runner, provers, and
//!   two worked demos: Desargues' theorem and transversals of four lines).
//!
//! ```
//! use gcbrackets::gc::GcRing;
//!
//! // The intersection of the lines ad and be in the projective plane.
//! let g = GcRing::new(&["a", "b", "c", "d", "e", "f"], 3).unwrap();
//! let line_ad = g.point(1).join(&g.point(4)).unwrap();
//! let line_be = g.point(2).join(&g.point(5)).unwrap();
//! let pt = line_ad.meet(&line_be).unwrap();
//! assert_eq!(pt.to_string(), "[bde]*a+[abe]*d");
//! ```

pub mod bracket;
pub mod cli;
pub mod gc;
pub mod oracle;
pub mod poly;
pub mod script;

pub use bracket::{Bracket, BracketRing, Subduction, Tableau};
pub use gc::{Blade, GcExpression, GcRing};
pub use poly::{Block, Monomial, MonomialOrder, OrderKind, Poly, Rational, VarTable};

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Operands built over different variable tables or rings.
    #[error("operands belong to different rings")]
    ContextMismatch,
    /// Ring dimensions outside `1 ≤ d ≤ n`.
    #[error("invalid ring dimensions: n = {n}, d = {d} (need 1 <= d <= n)")]
    InvalidDimensions { n: usize, d: usize },
    /// A point, parameter, or variable name declared twice.
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    /// A name that is not bound in the current scope or ring.
    #[error("unknown name `{0}`")]
    UnknownName(String),
    /// A point index outside `1..=n`.
    #[error("point index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    /// The zero polynomial has no leading term.
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    /// Degree preconditions of meet / top-degree conversion violated.
    #[error("degree error: {0}")]
    Degree(String),
    /// Operation defined only on parameter-free input.
    #[error("parameters are not supported here: {0}")]
    ParamsUnsupported(String),
    /// Numeric evaluation hit a parameter with no binding.
    #[error("parameter `{0}` has no numeric binding")]
    UnboundParameter(String),
    /// A sampled configuration was too degenerate for the classical meet.
    #[error("degenerate configuration")]
    Degenerate,
    /// Lexical error in script source.
    #[error("lex error at {line}:{col}: {msg}")]
    Lex { line: usize, col: usize, msg: String },
    /// Syntax error in script source.
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    /// Script evaluation failure.
    #[error("evaluation error: {0}")]
    Eval(String),
}

pub type Result<T> = std::result::Result<T, Error>;
