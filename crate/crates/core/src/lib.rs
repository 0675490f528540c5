//! Exact counting of integer points in marked order polytopes.
//!
//! The crate is organized bottom-up:
//!
//! * [`poset`]: finite posets on at most 64 elements, ideals, skew shapes;
//! * [`polynomial`]: exact rational univariate and sparse multivariate polynomials;
//! * [`order_poly`]: order polynomials via multichains of ideals, with two cross-checks;
//! * [`marked`]: marked posets, the chain-of-ideals polynomial and its bijection;
//! * [`families`]: Pitman–Stanley and Gelfand–Tsetlin instances and tableau oracles;
//! * [`random`]: seeded instance generation;
//! * [`verify`]: formula-versus-oracle checks shared by tests and the CLI.
//!
//! Heavy loops run on rayon when the `parallel` feature is on (the default);
//! [`Exec::Sequential`] selects the single-threaded path at runtime.

mod config;
mod error;

pub mod families;
pub mod input;
pub mod marked;
pub mod order_poly;
pub mod polynomial;
pub mod poset;
pub mod random;
pub mod verify;

pub use config::{Config, Exec, DEFAULT_MAX_CHAINS, DEFAULT_MAX_IDEALS, DEFAULT_NODE_BUDGET};
pub use error::{Error, Result};
pub use marked::{IdealChain, MarkedPoset, NaturalLabeling};
pub use polynomial::{MultiPoly, Rat, UniPoly};
pub use poset::{ElementId, Poset, SkewShape, Subset};
