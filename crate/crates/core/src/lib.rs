//! Chromatic Schultz polynomials of connected graphs.
//!
//! The crate computes the four chromatic Schultz polynomial variants
//! (sum or product kernel, χ⁻ or χ⁺ colouring) directly from their defining
//! pair sums, implements the published closed forms for paths, cycles,
//! complete graphs and complete bipartite graphs, and diffs the two.
//!
//! Vertex `v_i` of the usual 1-based labelling is vertex `i - 1` here.

pub mod cli;
pub mod closed_forms;
pub mod colouring;
mod error;
pub mod graph;
pub mod polynomial;
pub mod schultz;
pub mod verify;

pub use closed_forms::{closed_form, TheoremId};
pub use colouring::{
    canonical_family_colouring, chi_minus_colouring, chi_plus_colouring, chromatic_number,
    colour_profile, enumerate_optimal_colourings, is_proper, ColourClassProfile, Colouring,
    SearchLimits,
};
pub use error::{Error, Result};
pub use graph::{distances, generate, parse_graph, serialize_graph, DistanceMatrix, FamilySpec, Graph};
pub use polynomial::{CoeffDiff, Polynomial};
pub use schultz::{chromatic_schultz, family_variant_polynomial, variant_polynomial, Direction, Kernel, Variant};
pub use verify::{verify, NRange, Status, VerificationRecord, VerificationReport};
