//! Exact computation with cover ideals of graphs: minimal generators,
//! symbolic powers, polarization, graded Betti numbers via Hochster's
//! formula, and executable verification of the structural identities
//! connecting them.
//!
//! Everything is exact: homology ranks are computed by fraction-free
//! integer elimination (or modular elimination over a chosen prime
//! field); there is no floating point in any computation path.

pub mod betti;
pub mod error;
pub mod field;
pub mod gk;
pub mod graph;
mod linalg;
pub mod monomial;
pub mod simplicial;
pub mod verify;

pub use betti::{
    betti, has_linear_presentation, has_linear_resolution, hochster_betti, hochster_betti_with,
    BettiTable, HochsterOptions, ResolutionStats, Route, Subject,
};
pub use error::{Error, Result};
pub use field::Field;
pub use gk::{build_gk, verify_gk_identity};
pub use graph::{Graph, GraphClasses, VwcLabeling};
pub use monomial::{Monomial, MonomialIdeal};
pub use simplicial::{FacetConnectivity, SimplicialComplex};
pub use verify::{
    verify_colon_identity, verify_deg_linear, verify_deletion_identity, verify_main_theorem,
    verify_reg_monotone, verify_singdeg, verify_terai, Claim, Evidence, VerificationReport,
    Verdict,
};
