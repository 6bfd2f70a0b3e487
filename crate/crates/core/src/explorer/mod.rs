//! Mutation classes up to isomorphism and the questions asked of them.

pub mod canonical;
pub mod class;
pub mod diagram;
pub mod maximal;
pub mod probe;

pub use canonical::{canonical_form, canonical_key, CanonicalForm, CanonicalKey};
pub use class::{
    cospectral_partition, cospectral_polynomials, enumerate_class, ClassLimits, ClassMember,
    MutationClass,
};
pub use diagram::{recognize_diagram, Diagram, DynkinType, Recognition};
pub use maximal::{
    classify_two_maximal, is_r_maximal, strongest_member, Maximality, RMaximalVerdict,
    RadiusWitness, TwoMaximalType, TwoMaximalVerdict,
};
pub use probe::{probe_conjecture, ProbeReport};
