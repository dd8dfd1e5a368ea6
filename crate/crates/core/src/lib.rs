//! Exact finite-group computations for Drinfeld-center invariants of pointed
//! fusion categories and of the 2-category of groups.
//!
//! All arithmetic is over the integers or residues modulo `N`, where a residue
//! `a` stands for the root of unity `zeta^a` with `zeta` a fixed primitive
//! `N`-th root.

pub mod error;
pub mod group;
pub mod hom;
pub mod io;
pub mod bands;
pub mod center;
pub mod cohomology;
pub mod dixon;
pub mod linalg;
pub mod twisted;

pub use cohomology::{Cochain, CohomologyClassVerdict};
pub use error::{Error, Result};
pub use group::{ConjugacyClasses, Element, FiniteGroup, Subgroup};
pub use hom::{enumerate_homomorphisms, rep_classes, GroupHom};
pub use twisted::{count_reps_of_dim, IrrepProfile, ProfileMethod, TwistedGroupAlgebra};
pub use center::{CenterReport, CentralObjectSpec, PointedCategory};
