//! Tropical covers of the tropical line, their real structures, the signed
//! pair templates, and sweep enumeration of enhanced real covers.

pub mod cover;
pub mod export;
pub mod reference;
pub mod sweep;
pub mod templates;

pub use cover::{
    validate_cover, Colour, CoverClass, CoverViolation, Edge, Endpoint, EnhancedCover, KeyEdge, RealStructure,
    TropicalCover,
};
pub use sweep::{enumerate_enhanced_covers, enumerate_enhanced_covers_with, mult_enhanced, real_hurwitz_tropical};
pub use templates::{PairTemplate, Shape};
