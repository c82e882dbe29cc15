//! Exact invariants of quiver Grassmannians of the Kronecker quiver.
//!
//! Torus-fixed points and cell dimensions come from coefficient quivers;
//! closed forms for Poincaré polynomials, Euler characteristics and strata live
//! in [`invariants`]; [`fq`] counts points over finite fields by brute force;
//! [`cluster`] assembles Caldero-Chapoton sums into cluster-algebra elements.

pub mod bijection;
pub mod cluster;
pub mod error;
pub mod fq;
pub mod hom;
pub mod invariants;
pub mod kron;
pub mod laurent;
pub mod poly;
pub mod quiver;

pub use error::{Error, Result};
pub use kron::{DimVector, Indecomposable, Kind, RepDescriptor};
pub use laurent::LaurentPoly;
pub use poly::GradedPoly;
