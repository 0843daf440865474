//! Exact combinatorics of the determinant-`n` matrix sets `S_n`.
//!
//! `S_n` collects the integer matrices `[[a, b], [c, d]]` with `0 <= b < a`,
//! `0 <= c < d` and `ad - bc = n`. Each matrix has a boundary
//! `(M oo) - (M 0)` in `Z[P^1(Q)]`; grouped by right `SL_2(Z)` orbit these
//! boundaries give the `C_n` condition, and for prime `l` following
//! `M 0 = M' oo` links splits `S_l` into chains.

mod chain;
mod cn;
mod enumerate;
mod formal;
mod matrix;
mod orbit;

pub use chain::{chain_decompose, Chain, ChainDecomposition, MAX_CHAIN_PRIME};
pub use cn::{check_cn, CnMode, CnReport, OrbitBoundary};
pub use enumerate::{
    divisors, enumerate_s, is_prime, s_plus, sigma, slash_points, theta, MAX_DETERMINANT,
};
pub use formal::{boundary, boundary_sum, FormalMatSum, P1Divisor};
pub use matrix::{IntMat2, ProjPoint};
pub use orbit::orbit_canonical;
