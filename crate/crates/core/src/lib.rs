//! The refined Herglotz-Zagier function and the matrix sums that act on it.
//!
//! - [`numkernel`]: digamma, `Li_2`, the Rogers dilogarithm and the
//!   Herglotz-Zagier family `HZ`, `MHZ`, `RHZ` on the positive reals.
//! - [`hecke`]: the sets `S_n`, their boundary divisors, orbit
//!   representatives and the chain structure of `S_l` for prime `l`.
//! - [`verify`]: numerical checks of the functional equations, with
//!   residuals reduced modulo `zeta(2)` where the identity is a congruence.
//! - [`cli`]: the `herglotz` command line front end.

pub mod cli;
pub mod error;
pub mod hecke;
pub mod numkernel;
pub mod verify;

pub use error::{Error, Result};
