//! The Galois group {+/-1} x (Z/dZ)^x/(+/-1), CM types, decomposition
//! groups, and the CM-predicted slope multisets.
//!
//! Group elements are written (sign, rep) with rep the canonical
//! representative mg(a, d) = min(a mod d, d - a mod d) of the class {a, -a}.
//! The slopes of the reduction at p are read off the cosets of the
//! decomposition group D_p = <(sign of p mod 4, mg(p, d))>: each coset
//! contributes the slope #(Phi intersect coset)/#D_p with length #D_p.
//!
//! p enters only through its residue class mod 4d, so all routines accept
//! any representative coprime to 2d -- including composite ones -- which is
//! what the residue-class sweeps rely on.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::arith;
use crate::error::Error;
use crate::ff::mult_order;
use crate::zeta::{Slope, SlopeMultiset};
use crate::Result;

/// Element (sign, rep) of {+/-1} x (Z/dZ)^x/(+/-1); rep is always the
/// canonical representative in [1, d/2] coprime to d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GalEl {
    pub sign: i8,
    pub rep: u64,
}

impl GalEl {
    pub fn new(sign: i8, rep: u64) -> GalEl {
        assert!(sign == 1 || sign == -1, "sign must be +/-1");
        GalEl { sign, rep }
    }
}

/// Canonical representative min(m mod n, n - (m mod n)) of {m, -m} mod n.
pub fn mg(m: u64, n: u64) -> u64 {
    assert!(n >= 2);
    let r = m % n;
    r.min(n - r)
}

fn gmul(a: GalEl, b: GalEl, d: u64) -> GalEl {
    GalEl { sign: a.sign * b.sign, rep: mg(arith::mulmod(a.rep, b.rep, d), d) }
}

fn check_modulus(d: u64) -> Result<()> {
    if d < 3 || d % 2 == 0 {
        return Err(Error::InvalidInput(format!("modulus d = {d} must be odd and >= 3")));
    }
    Ok(())
}

fn check_class(d: u64, p: u64) -> Result<()> {
    check_modulus(d)?;
    if p % 2 == 0 || num_integer::gcd(p, d) != 1 {
        return Err(Error::NotCoprime { a: p, b: 2 * d });
    }
    Ok(())
}

/// The CM type: {((-1)^(m+1), m) : 1 <= m <= (d-1)/2, gcd(m, d) = 1}.
/// Membership is equivalent to the parity rule sign = +1 <=> rep odd.
pub fn cm_type(d: u64) -> Result<BTreeSet<GalEl>> {
    check_modulus(d)?;
    Ok((1..=(d - 1) / 2)
        .filter(|&m| num_integer::gcd(m, d) == 1)
        .map(|m| GalEl { sign: if m % 2 == 1 { 1 } else { -1 }, rep: m })
        .collect())
}

/// Full cyclic closure of ((-1)^((p-1)/2), mg(p, d)); a genuine subgroup
/// containing the identity.
pub fn decomposition_group(d: u64, p: u64) -> Result<BTreeSet<GalEl>> {
    check_class(d, p)?;
    let gen = GalEl { sign: if p % 4 == 1 { 1 } else { -1 }, rep: mg(p, d) };
    let identity = GalEl { sign: 1, rep: 1 };
    let mut out = BTreeSet::from([identity]);
    let mut cur = gen;
    while cur != identity {
        out.insert(cur);
        cur = gmul(cur, gen, d);
    }
    Ok(out)
}

fn in_phi(e: &GalEl) -> bool {
    (e.sign == 1) == (e.rep % 2 == 1)
}

fn slopes_impl(d: u64, p: u64) -> Result<SlopeMultiset> {
    let dp: Vec<GalEl> = decomposition_group(d, p)?.into_iter().collect();
    let order = dp.len() as u64;
    // visited flags indexed by (rep, sign); cosets partition the group
    let idx = |e: &GalEl| (e.rep as usize - 1) * 2 + (e.sign < 0) as usize;
    let mut visited = vec![false; d as usize];
    let mut out = SlopeMultiset::new();
    for rep in 1..=(d - 1) / 2 {
        if num_integer::gcd(rep, d) != 1 {
            continue;
        }
        for sign in [1i8, -1] {
            let tau = GalEl { sign, rep };
            if visited[idx(&tau)] {
                continue;
            }
            let mut in_type = 0u64;
            for delta in &dp {
                let e = gmul(*delta, tau, d);
                visited[idx(&e)] = true;
                if in_phi(&e) {
                    in_type += 1;
                }
            }
            out.insert(Ratio::new(in_type, order), order);
        }
    }
    Ok(out)
}

/// CM slopes of the Jacobian of H_ell at p, for ell an odd prime; total
/// length ell - 1.
pub fn slopes_multiset(ell: u64, p: u64) -> Result<SlopeMultiset> {
    if !arith::is_prime(ell) || ell == 2 {
        return Err(Error::InvalidInput(format!("ell = {ell} must be an odd prime")));
    }
    slopes_impl(ell, p)
}

/// The slope values of slopes_multiset without lengths.
pub fn slopes_set(ell: u64, p: u64) -> Result<BTreeSet<Slope>> {
    Ok(slopes_multiset(ell, p)?.slope_set())
}

/// CM slopes for odd d >= 3 (prime power or product of two primes in the
/// intended use; any odd modulus is accepted); total length phi(d).
pub fn slopes2_multiset(d: u64, p: u64) -> Result<SlopeMultiset> {
    slopes_impl(d, p)
}

/// Residue classes p mod 4*ell1*ell2 (p = 1 mod 4, p a primitive root mod
/// both primes) whose slopes2 multiset is all 1/2.
pub fn check_pair(ell1: u64, ell2: u64) -> Result<BTreeSet<u64>> {
    for ell in [ell1, ell2] {
        if ell < 3 || !arith::is_prime(ell) {
            return Err(Error::InvalidInput(format!("ell = {ell} must be an odd prime")));
        }
    }
    if ell1 == ell2 {
        return Err(Error::InvalidInput("the two primes must be distinct".into()));
    }
    let d = ell1 * ell2;
    let modulus = 4 * d;
    let mut out = BTreeSet::new();
    let mut c = 1u64;
    while c < modulus {
        if num_integer::gcd(c, modulus) == 1
            && mult_order(c, ell1)? == ell1 - 1
            && mult_order(c, ell2)? == ell2 - 1
            && slopes2_multiset(d, c)?.is_all_half()
        {
            out.insert(c);
        }
        c += 4;
    }
    Ok(out)
}

// ---- tests ----
