//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong across the crate's modules.
///
/// `Infeasible` is the one recoverable-by-raising-the-budget case; callers
/// that map errors to process exit codes should treat it separately from
/// plain validation failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A parameter that must be an odd prime is not.
    NotOddPrime(u64),
    /// Moduli above 2^31 are rejected so residue products stay in u64.
    PrimeTooLarge(u64),
    /// The polynomial family starts at index 1.
    ZeroIndex,
    /// An index that must be odd (phi_d(0) = 0 only for odd d) is even.
    EvenIndex(u64),
    /// Irreducibility is undefined for constant polynomials.
    ConstantPolynomial,
    /// Two quantities that must be coprime are not.
    NotCoprime { a: u64, b: u64 },
    /// The request exceeds the enumeration budget.
    Infeasible { cost_estimate: u128, budget: u64 },
    /// Maximality over F_{q^e} is only meaningful for even e.
    OddExtension(u32),
    /// The point counts cannot come from a genus-g curve over F_q.
    InvalidCounts(String),
    /// The coefficients do not form a valid L-polynomial.
    InvalidLPoly(String),
    /// Input outside the routine's domain.
    InvalidInput(String),
    /// A certificate's hypothesis fails; the message names the offending fact.
    HypothesisViolation(String),
    /// Survey bound beyond the configured sweep limit.
    LimitExceeded { requested: u64, limit: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotOddPrime(v) => write!(f, "{v} is not an odd prime"),
            Error::PrimeTooLarge(v) => write!(f, "prime {v} exceeds the 2^31 modulus limit"),
            Error::ZeroIndex => write!(f, "index d = 0 is outside the family (start at d = 1)"),
            Error::EvenIndex(v) => write!(f, "index {v} must be odd"),
            Error::ConstantPolynomial => write!(f, "constant polynomial has no irreducibility"),
            Error::NotCoprime { a, b } => write!(f, "{a} and {b} are not coprime"),
            Error::Infeasible { cost_estimate, budget } => write!(
                f,
                "infeasible: estimated cost {cost_estimate} exceeds budget {budget}"
            ),
            Error::OddExtension(e) => write!(f, "maximality needs an even extension degree, got {e}"),
            Error::InvalidCounts(msg) => write!(f, "invalid point counts: {msg}"),
            Error::InvalidLPoly(msg) => write!(f, "invalid L-polynomial: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::HypothesisViolation(msg) => write!(f, "hypothesis violated: {msg}"),
            Error::LimitExceeded { requested, limit } => {
                write!(f, "sweep bound {requested} exceeds configured limit {limit}")
            }
        }
    }
}

impl core::error::Error for Error {}
