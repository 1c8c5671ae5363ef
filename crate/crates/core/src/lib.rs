//! Computational algebra on group rings RG, where R = Z/n and G is a finite
//! abelian group.
//!
//! The heart of the library is the pair of maps between the subgroup lattice
//! of G and the ideal lattice of RG: a subgroup N goes to the ideal generated
//! by { h - 1 : h in N }, and an ideal J comes back to the subgroup
//! { g : g - 1 in J }. The second map is a left inverse of the first, and
//! deciding whether an ideal lies in the image of the first is effective.
//! On top of that sit closed forms for the nilradical and Jacobson radical of
//! RG, a rank-based classifier for principal ideals of F_p C_m, census tools
//! for the full ideal lattice, and explicit constructions of principal ideals
//! outside the subgroup-induced family.
//!
//! Everything is exact arithmetic over Z/n; no floating point is involved.

pub mod census;
pub mod classifier;
pub mod counterexamples;
pub mod element;
pub mod error;
pub mod exec;
pub mod group;
pub mod laurent;
pub mod quotient;
pub mod radicals;
pub mod ring;
pub mod subspace;
pub mod suites;

pub use error::{Error, Result};
