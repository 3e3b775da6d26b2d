//! Exact derivation of the depth-`p` identities and the reference table they
//! are checked against.

mod engine;
mod identity;
mod reference;

pub use engine::{
    closed_form_part, derive_identity, first_difference, fit_closed_form, identities_equal,
    periodic_remainder, pochhammer_poly, series_coefficients, subtraction_poly, DEFAULT_K_MAX,
};
pub use identity::{ClosedForm, IdentitySpec, SeriesTerm};
pub use reference::{reference_identity, reference_identity_to, REFERENCE_DEPTHS};
