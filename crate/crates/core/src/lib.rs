//! String rewriting with exponent schemas, Cayley-graph balls of finitely
//! generated monoids, and isomorphism checks between them.
//!
//! The two built-in monoids
//!
//! ```text
//! M = < a, b | a b^n a = a b a  (n >= 2) >
//! N = < c, d | cdc = cd^2c = cd^4 = cd^3c^2 = cd^3cdc >
//! ```
//!
//! have isomorphic unlabelled right Cayley graphs although only `N` is
//! finitely presented. This crate reproduces that fact on finite balls: it
//! checks both rewriting systems for local confluence, builds the balls from
//! normal forms, verifies the explicit normal-form bijection arc by arc, and
//! confirms it with an independent isomorphism search.

pub mod cayley;
pub mod cli;
pub mod error;
pub mod iso;
pub mod parse;
pub mod presentations;
pub mod rewrite;
pub mod word;

pub use cayley::{
    build_ball, edge_target, graph_invariants, strip_labels, CayleyBall, Fingerprint, FrontierPolicy,
    GraphExport, Side, UnlabelledDigraph,
};
pub use error::{BallError, ClassifyError, LoadError, ParseError, SystemError, WordError};
pub use iso::{
    find_isomorphism, separate_left_graphs, verify_explicit_iso, IsoCertificate, IsoReport, SearchResult,
};
pub use parse::{parse_presentation, to_presentation};
pub use presentations::{
    bar, classify_m, classify_n, enumerate_normal_forms, load_presentation, map_f, map_f_inverse, system_m,
    system_n, truncated_system_m, NormalFormClassM, NormalFormClassN,
};
pub use rewrite::{
    CompleteSystem, ConfluenceReport, CriticalPair, Match, RewriteRule, RewritingSystem, RuleSchema,
};
pub use word::{Alphabet, Symbol, Word};
