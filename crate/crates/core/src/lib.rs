//! Integration-by-parts identities for the Riemann zeta function.
//!
//! [`exactmath`] supplies the exact symbolic layer, [`derive`] builds the
//! depth-`p` identities
//!
//! ```text
//! ζ(s) = 1/(s−1) + Q_p(s) + Σ_{k≥k0} r_k · s(s+1)…(s+k−1)/(k+1)! · (ζ(s+k) − 1)
//! ```
//!
//! in exact rational arithmetic, and [`evalzeta`] evaluates them at arbitrary
//! precision next to an independent Euler–Maclaurin reference.

pub mod derive;
pub mod error;
pub mod evalzeta;
pub mod exactmath;

pub use error::{Result, ZetaError};
