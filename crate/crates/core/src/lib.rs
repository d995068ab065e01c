//! Admissible labelings of finite simple graphs, square-free monomial ring
//! presentations, and the component graph on their minimal primes.
//!
//! The pipeline: decide whether a graph carries an admissible labeling
//! ([`search`]), realize a labeled graph as a complete local ring presented
//! by a square-free monomial ideal ([`gamma::realize`]), and compute the
//! graph on the ring's minimal primes together with its connectivity
//! quantities ([`gamma::theorem_report`]).

pub mod bits;
pub mod error;
pub mod fixtures;
pub mod gamma;
pub mod graph;
pub mod labeling;
pub mod monomial;
pub mod search;

pub use bits::SmallSet;
pub use error::{Error, Result};
pub use graph::{Graph, VertexPartition};
pub use labeling::{Labeling, VerificationReport};
pub use monomial::{RingPresentation, SquareFreeIdeal};
