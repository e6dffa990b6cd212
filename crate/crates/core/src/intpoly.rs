//! The polynomial family phi_d and polynomial arithmetic over Z and F_p.
//!
//! phi_d is the monic degree-d integer polynomial with
//! phi_d(t + 1/t) = t^d + t^{-d}; concretely phi_1 = x, phi_2 = x^2 - 2 and
//! phi_{d+2} = x*phi_{d+1} - phi_d. The curves studied by this crate are
//! H_d : y^2 = phi_d(x).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::Error;
use crate::Result;

/// Largest accepted modulus; keeps residue products inside u64.
pub(crate) const MAX_PRIME: u64 = 1 << 31;

pub(crate) fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !arith::is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if p >= MAX_PRIME {
        return Err(Error::PrimeTooLarge(p));
    }
    Ok(())
}

// ---- ZPoly ----

/// Dense integer polynomial; `coeffs[i]` is the coefficient of x^i.
///
/// Canonical form: empty vector is the zero polynomial, otherwise the last
/// coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The polynomial x.
    pub fn x() -> Self {
        ZPoly { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        ZPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        ZPoly::from_coeffs(out)
    }

    pub fn mul(&self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::from_coeffs(out)
    }

    /// Multiplication by x (degree shift).
    pub fn mul_x(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(BigInt::zero());
        out.extend_from_slice(&self.coeffs);
        ZPoly { coeffs: out }
    }

    pub fn derivative(&self) -> ZPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        ZPoly::from_coeffs(coeffs)
    }

    /// self(inner(x)).
    pub fn compose(&self, inner: &ZPoly) -> ZPoly {
        let mut acc = ZPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner);
            acc = acc.add(&ZPoly::from_coeffs(vec![c.clone()]));
        }
        acc
    }

    /// self(-x).
    pub fn reflect(&self) -> ZPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
            .collect();
        ZPoly::from_coeffs(coeffs)
    }
}

fn write_terms<C: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, C, bool)>,
) -> fmt::Result {
    // terms: (power, magnitude, negative), magnitude rendered without sign
    let mut first = true;
    for (pow, mag, neg) in terms {
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mag = alloc::format!("{mag}");
        match pow {
            0 => write!(f, "{mag}")?,
            _ => {
                if mag != "1" {
                    write!(f, "{mag}*")?;
                }
                if pow == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{pow}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Highest power first; `{:#}` prints ascending instead.
impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |(i, c): (usize, &BigInt)| (i, c.abs(), c.is_negative());
        let nonzero = |(_, c): &(usize, &BigInt)| !c.is_zero();
        if f.alternate() {
            write_terms(f, self.coeffs.iter().enumerate().filter(nonzero).map(term))
        } else {
            write_terms(f, self.coeffs.iter().enumerate().rev().filter(nonzero).map(term))
        }
    }
}

// ---- the phi_d family ----

/// phi_d for d >= 1, by the recursion phi_{d+2} = x*phi_{d+1} - phi_d.
pub fn chebyshev(d: u32) -> Result<ZPoly> {
    if d == 0 {
        return Err(Error::ZeroIndex);
    }
    let mut prev = ZPoly::x();
    if d == 1 {
        return Ok(prev);
    }
    let mut cur = ZPoly::from_i64(&[-2, 0, 1]);
    for _ in 3..=d {
        let next = cur.mul_x().sub(&prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// phi_d(0) in closed form: 0 for odd d, -2 for d = 2 mod 4, 2 for d = 0 mod 4.
pub fn eval_at_zero(d: u32) -> i64 {
    assert!(d >= 1, "family starts at d = 1");
    match d % 4 {
        1 | 3 => 0,
        2 => -2,
        _ => 2,
    }
}

/// phi_d'(0) in closed form: 0 for even d, d for d = 1 mod 4, -d for d = 3 mod 4.
pub fn derivative_at_zero(d: u32) -> i64 {
    assert!(d >= 1, "family starts at d = 1");
    match d % 4 {
        1 => i64::from(d),
        3 => -i64::from(d),
        _ => 0,
    }
}

/// psi_d = phi_d / x for odd d (phi_d(0) = 0 exactly when d is odd).
///
/// psi_d(0) = phi_d'(0), so the constant term is +/- d.
pub fn odd_part(ell: u32) -> Result<ZPoly> {
    if ell % 2 == 0 {
        return Err(Error::EvenIndex(u64::from(ell)));
    }
    let phi = chebyshev(ell)?;
    debug_assert!(phi.coeff(0).is_zero());
    Ok(ZPoly::from_coeffs(phi.coeffs[1..].to_vec()))
}

/// Whether phi_d is separable over F_q (q a power of the odd prime p):
/// separable iff d = 1 or gcd(q, 2d) = 1.
pub fn is_separable(d: u32, q: u64) -> bool {
    d == 1 || num_integer::gcd(q, 2 * u64::from(d)) == 1
}

// ---- FpPoly ----

/// Dense polynomial over F_p, residues in [0, p); canonical form as ZPoly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    /// Reduces the given coefficients mod the odd prime p.
    pub fn new(p: u64, coeffs: &[u64]) -> Result<Self> {
        check_odd_prime(p)?;
        Ok(Self::from_raw(p, coeffs.iter().map(|&c| c % p).collect()))
    }

    pub(crate) fn from_raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < p));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub(crate) fn x(p: u64) -> Self {
        FpPoly { p, coeffs: vec![0, 1] }
    }

    pub(crate) fn constant(p: u64, c: u64) -> Self {
        Self::from_raw(p, vec![c % p])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c) % self.p;
        }
        acc
    }

    pub fn add(&self, rhs: &FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, rhs.p);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n).map(|i| (self.coeff(i) + rhs.coeff(i)) % self.p).collect();
        FpPoly::from_raw(self.p, out)
    }

    pub fn sub(&self, rhs: &FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, rhs.p);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n)
            .map(|i| (self.coeff(i) + self.p - rhs.coeff(i)) % self.p)
            .collect();
        FpPoly::from_raw(self.p, out)
    }

    pub fn mul(&self, rhs: &FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, rhs.p);
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::from_raw(self.p, Vec::new());
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        FpPoly::from_raw(self.p, out)
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        let c = c % self.p;
        FpPoly::from_raw(self.p, self.coeffs.iter().map(|&a| a * c % self.p).collect())
    }

    pub fn make_monic(&self) -> FpPoly {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lc) => self.scale(arith::powmod(lc, self.p - 2, self.p)),
        }
    }

    pub fn derivative(&self) -> FpPoly {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % self.p) * c % self.p)
            .collect();
        FpPoly::from_raw(self.p, out)
    }

    /// Remainder of self divided by a nonzero divisor.
    pub fn rem(&self, divisor: &FpPoly) -> FpPoly {
        self.div_rem(divisor).1
    }

    pub fn div_rem(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        debug_assert_eq!(self.p, divisor.p);
        let d = divisor.degree().expect("division by zero polynomial");
        let p = self.p;
        let lc_inv = arith::powmod(divisor.coeffs[d], p - 2, p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1;
            let c = rem[k] * lc_inv % p;
            if c != 0 {
                quot[k - d] = c;
                for j in 0..=d {
                    rem[k - d + j] = (rem[k - d + j] + p - c * divisor.coeffs[j] % p) % p;
                }
            }
            rem.pop();
        }
        (FpPoly::from_raw(p, quot), FpPoly::from_raw(p, rem))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// self * rhs mod m.
    pub(crate) fn mul_mod(&self, rhs: &FpPoly, m: &FpPoly) -> FpPoly {
        self.mul(rhs).rem(m)
    }

    /// self^e mod m.
    pub(crate) fn pow_mod(&self, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::constant(self.p, 1).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            base = base.mul_mod(&base, m);
            e >>= 1;
        }
        acc
    }
}

/// Highest power first; `{:#}` prints ascending instead.
impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |(i, c): (usize, &u64)| (i, *c, false);
        let nonzero = |(_, c): &(usize, &u64)| **c != 0;
        if f.alternate() {
            write_terms(f, self.coeffs.iter().enumerate().filter(nonzero).map(term))
        } else {
            write_terms(f, self.coeffs.iter().enumerate().rev().filter(nonzero).map(term))
        }
    }
}

/// Reduction of an integer polynomial mod an odd prime.
pub fn reduce_mod(poly: &ZPoly, p: u64) -> Result<FpPoly> {
    check_odd_prime(p)?;
    let pb = BigInt::from(p);
    let coeffs = poly
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits u64"))
        .collect();
    Ok(FpPoly::from_raw(p, coeffs))
}

// ---- irreducibility ----

/// Deterministic irreducibility test over F_p.
///
/// f of degree n is irreducible iff x^(p^n) = x mod f and, for every prime
/// t | n, gcd(x^(p^(n/t)) - x, f) = 1. Constant input is rejected.
pub fn is_irreducible(f: &FpPoly) -> Result<bool> {
    let n = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(true);
    }
    let f = f.make_monic();
    let p = f.modulus();
    let x = FpPoly::x(p);

    // ladder[k] = x^(p^k) mod f
    let mut ladder = Vec::with_capacity(n + 1);
    ladder.push(x.clone());
    for k in 1..=n {
        let next = ladder[k - 1].pow_mod(p, &f);
        ladder.push(next);
    }
    if ladder[n] != x {
        return Ok(false);
    }
    for (t, _) in arith::factor(n as u64) {
        let m = n / t as usize;
        let g = ladder[m].sub(&x).gcd(&f);
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Extended Euclid: returns (g, u, v) monic g with u*a + v*b = g.
pub(crate) fn ext_gcd(a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
    let p = a.p;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut u0, mut u1) = (FpPoly::constant(p, 1), FpPoly::from_raw(p, Vec::new()));
    let (mut v0, mut v1) = (FpPoly::from_raw(p, Vec::new()), FpPoly::constant(p, 1));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let u = u0.sub(&q.mul(&u1));
        let v = v0.sub(&q.mul(&v1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
        v0 = v1;
        v1 = v;
    }
    match r0.coeffs.last() {
        None | Some(1) => (r0, u0, v0),
        Some(&lc) => {
            let s = arith::powmod(lc, p - 2, p);
            (r0.scale(s), u0.scale(s), v0.scale(s))
        }
    }
}

// ---- tests ----
