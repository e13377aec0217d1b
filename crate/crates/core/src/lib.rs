//! Exact computation with finite monoids and their acts.
//!
//! For a finite right `M`-act `A` with endomorphism monoid `E`, the crate
//! builds the hom functor `H_A = [A, -]` from `M`-acts to `E`-acts and its
//! left adjoint `T_A = - ⊗_E A`, together with the unit and counit, and uses
//! them to classify acts (reflexive, generated, cogenerated, colocal),
//! certify (weak) star acts, verify Morita equivalences and compute cellular
//! approximations. Statements quantified over all acts are checked over
//! finite universes of representatives and reported as tri-state
//! [`Verdict`]s.

pub mod act;
pub mod adjunction;
pub mod cellular;
pub mod classify;
pub(crate) mod congruence;
pub mod error;
pub mod format;
pub mod hom;
pub mod limits;
pub mod monoid;
pub mod selftest;
pub mod star;
pub mod structure;
pub mod universe;

#[cfg(test)]
pub(crate) mod fixtures;

pub use act::{LeftAct, RightAct};
pub use adjunction::{Biact, Context, HomAct, TensorAct};
pub use cellular::{Approximation, ApproximationKind};
pub use classify::{Classifier, EquivalenceCatalog, Evidence, Status, Verdict};
pub use error::{ActError, Result};
pub use format::Document;
pub use hom::{are_isomorphic, enumerate_homs, ActHom};
pub use limits::{
    coequalizer, coproduct, equalizer, image_factorize, product, pullback, quotient,
    ImageFactorization,
};
pub use monoid::{monoid_inventory, Monoid};
pub use star::{morita_candidates, star_report, verify_morita, MoritaCertificate, StarReport};
pub use structure::{
    components, connected_components, decomposition, is_cyclic, is_generator, is_indecomposable,
    is_projective, Decomposition,
};
pub use universe::Universe;
