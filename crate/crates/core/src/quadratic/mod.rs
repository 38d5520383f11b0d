//! Quadratic fields `Q(√δ)`: integers `(α + β√δ)/2`, their differentials and Dennis
//! traces mod `n`, fundamental units, and class-group torsion certified with binary
//! quadratic forms. All integers are arbitrary precision.

pub mod disc;
pub mod forms;
pub mod int;
pub mod omega;
pub mod search;
pub mod tables;
pub mod unit;

pub use disc::{is_fundamental, QuadDisc};
pub use forms::{class_number, form_order, QuadForm};
pub use int::{nn1_check, QuadInt};
pub use omega::{dennis_trace_quad, omega_module, OmegaModule};
pub use search::{certify_table_entry, torsion_search, yamamoto_check, TorsionWitness};
pub use unit::{fundamental_unit, unit_condition};
