//! Applications of the decision procedures: the trefoil surgery
//! classifier, the census engine with CSV/JSONL output, the spherical and
//! Euclidean family tables, and the example-family checks.

pub mod census;
pub mod families;
pub mod tables;
pub mod trefoil;

pub use census::{enumerate_census, CensusBounds, CensusFilter, CensusRecord};
pub use families::{example_family_check, FamilyParams, FamilyReport};
pub use tables::{euclidean_table, render_csv, render_text, spherical_table, TableReport};
pub use trefoil::{trefoil_ctf, trefoil_surgery, trefoil_zero_euler_ctf, SlopeError, SurgerySlope};
