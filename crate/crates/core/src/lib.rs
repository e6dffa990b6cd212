//! Deciding maximality of the hyperelliptic curves H_d : y^2 = phi_d(x)
//! over finite fields, where phi_d is the monic integer polynomial with
//! phi_d(t + 1/t) = t^d + t^{-d}.
//!
//! The crate offers four independent routes to the same question and the
//! consistency machinery to play them against each other:
//!
//! * [`curve`] — direct point counting over F_{p^n} (exhaustive, budgeted,
//!   partitionable for parallel drivers);
//! * [`zeta`] — L-polynomial reconstruction from counts via Newton's
//!   identities, plus Newton polygon slopes;
//! * [`cmgal`] — slope predictions from the CM type of the relevant
//!   cyclotomic quotients (no counting at all);
//! * [`classify`] — closed-form verdicts by congruence/order rules, descent
//!   certificates, and survey sweeps.
//!
//! Supporting layers: [`intpoly`] (the polynomial family and prime-field
//! polynomial arithmetic), [`ff`] (finite fields with a canonical modulus and
//! deterministic enumeration), [`arith`] (primality, factoring).
//!
//! The crate is `no_std` + `alloc`; everything here is exact integer or
//! rational arithmetic, and all iteration orders are deterministic.
#![no_std]
#![forbid(unsafe_code)]
// congruence tests read as `x % m == 0` throughout; is_multiple_of obscures them
#![allow(clippy::manual_is_multiple_of)]

extern crate alloc;

pub mod arith;
pub mod classify;
pub mod cmgal;
pub mod curve;
pub mod error;
pub mod ff;
pub mod intpoly;
pub mod zeta;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Default work budget: number of field-element visits an enumeration or
/// point count may cost before it is refused as infeasible.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
