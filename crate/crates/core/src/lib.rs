//! Exact invariants of links of isolated weighted-homogeneous hypersurface
//! singularities.
//!
//! Starting from a weight vector and the monomial support of `f`, the crate
//! computes the Milnor number, the characteristic divisor and polynomial of the
//! monodromy, Milnor-algebra dimensions (Hodge numbers, signature, genus), the
//! orbifold strata of `Z_f ⊂ P(w)` and, for surfaces, the diffeomorphism type
//! of the 5-dimensional link.

pub mod cli;
pub mod divisor;
pub mod error;
pub mod milnor_algebra;
pub mod monodromy;
pub mod oracle;
pub mod orbifold;
pub mod poly;
pub mod registry;
pub mod report;

pub use error::{Error, Result};
