//! Twistor-fiber algebra: the beta-form signature invariant of
//! (1,1)-structures, the C- and Lorentz-valued forms b_k, the
//! characterization of compatible involutions, split-signature necessity,
//! model points, and linearized fiber-dimension checks.

mod beta;
mod charcond;
mod forms;
mod model;
mod orbit;

pub use beta::{beta_signature, BetaSignature};
pub use charcond::char_condition;
pub use forms::{bk_gram, complex_basis_gram, null_basis_form_check, TwistorForms};
pub use model::{model_point, split_admissibility, ModelPoint, SplitAdmissibility};
pub use orbit::{condition_kernel_basis, condition_kernel_dim, orbit_dimension_check, OrbitReport};
