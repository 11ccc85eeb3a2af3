//! Prime-graph machinery for finite groups: factored-order arithmetic,
//! spectra and their Gruenberg-Kegel graphs, degree patterns, exhaustive
//! graph enumeration, a bundled simple-group database, and the
//! order/degree-pattern characterization pipeline built on top of them.

pub mod arith;
pub mod db;
pub mod graph;
pub mod orders;
pub mod report;
pub mod search;
pub mod spectrum;

pub use arith::FactoredInt;
pub use graph::{DegreePattern, GKGraph};
pub use spectrum::Spectrum;
