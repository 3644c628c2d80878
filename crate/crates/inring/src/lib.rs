//! Inclusion ideal graphs of finite commutative rings.
//!
//! A ring is given as a product of components, each a field or a chain ring
//! (see [`ring::RingSpec`]). The crate builds the graph whose vertices are
//! the non-trivial ideals, with edges for proper containment, and computes
//! two graph invariants exactly: the metric dimension and the strong metric
//! dimension. Closed-form predictions for whole families of specs live next
//! to the exact searches so each can be checked against the other.

pub(crate) mod bits;

pub mod error;
pub mod graph;
pub mod metric;
pub mod ring;
pub mod strong;
pub mod verify;

pub use error::Error;
pub use graph::{Distance, DistanceMatrix, IdealGraph};
pub use ring::{IdealVector, RingSpec};
