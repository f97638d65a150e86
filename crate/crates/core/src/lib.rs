//! Exact arithmetic for closed oriented Seifert fibred 3-manifolds with
//! orientable base orbifold, written `(g; b, a_1/b_1, ..., a_n/b_n)`.
//!
//! The central question is whether the Euler class of the normal bundle of
//! the fibration vanishes. Two independent routes answer it:
//!
//! * [`eulerclass::euler_class_vanishes`] solves the congruences
//!   `m * a_i = 1 (mod b_i)` and tests `m * e(M) = chi(B)` with exact
//!   rational arithmetic;
//! * [`cohomology::vanishes_via_oracle`] decides membership of one Euler
//!   class in the cyclic subgroup generated by another inside a presented
//!   `H^2`, via Smith normal form.
//!
//! On top of these sit the horizontal-foliation criterion
//! ([`foliations`]), the trefoil surgery classifier, the census engine and
//! the family tables ([`applications`]). Everything is integer or rational
//! arithmetic of arbitrary precision; no floating point appears anywhere.

pub mod applications;
pub mod cohomology;
pub mod eulerclass;
pub mod foliations;
pub mod invariants;
pub mod numtheory;

pub use applications::{
    enumerate_census, euclidean_table, example_family_check, spherical_table, trefoil_ctf,
    trefoil_surgery, trefoil_zero_euler_ctf, CensusBounds, CensusFilter, CensusRecord,
    FamilyParams, FamilyReport, SlopeError, SurgerySlope, TableReport,
};
pub use cohomology::{
    euler_class_extension, euler_class_holonomy, normal_form, vanishes_via_oracle, CohomologyClass,
    H2Presentation,
};
pub use eulerclass::{
    euler_class_vanishes, gcd_necessary_condition, necessary_condition, torsion_divisibility_check,
    VanishingReason, VanishingVerdict,
};
pub use foliations::{
    admits_horizontal_foliation, eligible_pairs, EligiblePair, FoliationAnswer,
    FoliationCertificate, FoliationVerdict,
};
pub use invariants::{
    BaseOrbifold, Geometry, HomologyGroup, InvariantError, ParseDescriptorError, Rational,
    SeifertInvariants,
};
pub use num_bigint::BigInt;
