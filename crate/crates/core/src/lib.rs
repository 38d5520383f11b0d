//! Exact arithmetic for Dennis traces with `Z/n` coefficients.
//!
//! * [`modp`], [`linalg`]: prime fields and dense linear algebra over them.
//! * [`cyclo`]: the truncated rings `F_p[λ]/(λ^{p-1})` and `F_p[t]/(t^p - 1)`, their
//!   differentials, the Galois action and the `f`-basis.
//! * [`mirimanoff`]: Mirimanoff polynomials, the `r_p` scan, circulants, `dim V(x)`,
//!   Bernoulli numbers mod `p` and Kummer's congruences.
//! * [`kummer`]: Kummer logarithmic derivatives.
//! * [`quadratic`]: quadratic integers, differentials, units and class-group torsion.
//! * [`audit`]: a registry of checked identities and the full audit run.

pub mod audit;
pub mod cyclo;
pub mod error;
pub mod kummer;
pub mod linalg;
pub mod mirimanoff;
pub mod modp;
pub mod quadratic;

pub use error::{Error, Result};
pub use modp::{Fp, Prime};
pub use num_bigint::BigInt;
