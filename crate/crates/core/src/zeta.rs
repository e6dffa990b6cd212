//! L-polynomials from point counts and their Newton polygons.
//!
//! The numerator P(T) = prod (1 - alpha_i T) of the zeta function is
//! reconstructed from the counts N_1..N_g by Newton's identities on the
//! power sums S_m = q^m + 1 - N_m, with the top half filled in by the
//! functional equation c_{2g-i} = q^{g-i} c_i. All arithmetic is exact:
//! failed divisibility or a Weil-bound violation rejects the input counts
//! instead of rounding.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::Error;
use crate::Result;

/// Exact slope value of a Newton polygon segment.
pub type Slope = Ratio<u64>;

// ---- slope multisets ----

/// Multiset of Newton/CM slopes: each slope carries a positive length, the
/// lengths summing to twice the dimension.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SlopeMultiset {
    inner: BTreeMap<Slope, u64>,
}

impl SlopeMultiset {
    pub fn new() -> SlopeMultiset {
        SlopeMultiset { inner: BTreeMap::new() }
    }

    pub fn insert(&mut self, slope: Slope, length: u64) {
        if length > 0 {
            *self.inner.entry(slope).or_insert(0) += length;
        }
    }

    pub fn from_pairs(pairs: &[(u64, u64, u64)]) -> SlopeMultiset {
        let mut s = SlopeMultiset::new();
        for &(num, den, len) in pairs {
            s.insert(Ratio::new(num, den), len);
        }
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Slope, &u64)> {
        self.inner.iter()
    }

    pub fn length(&self, slope: &Slope) -> u64 {
        self.inner.get(slope).copied().unwrap_or(0)
    }

    pub fn total_length(&self) -> u64 {
        self.inner.values().sum()
    }

    pub fn slope_set(&self) -> BTreeSet<Slope> {
        self.inner.keys().copied().collect()
    }

    pub fn is_all_half(&self) -> bool {
        self.inner.len() == 1 && self.inner.contains_key(&Ratio::new(1, 2))
    }

    /// Closed under s -> 1 - s with matching lengths.
    pub fn is_symmetric(&self) -> bool {
        let one = Ratio::from_integer(1u64);
        self.inner.iter().all(|(s, len)| {
            *s <= one && self.inner.get(&(one - s)) == Some(len)
        })
    }
}

// ---- L-polynomials ----

/// Zeta numerator P(T) = sum c_j T^j over F_q, with c_0 = 1, degree 2g, and
/// the functional equation c_{2g-i} = q^{g-i} c_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPoly {
    q: u64,
    g: u32,
    p: u64,
    vq: u32,
    coeffs: Vec<BigInt>,
}

impl LPoly {
    /// Validates shape, leading 1, and the functional equation.
    pub fn from_coeffs(q: u64, g: u32, coeffs: Vec<BigInt>) -> Result<LPoly> {
        let (p, vq) = prime_power(q)
            .ok_or_else(|| Error::InvalidLPoly(format!("q = {q} is not a prime power")))?;
        if coeffs.len() != 2 * g as usize + 1 {
            return Err(Error::InvalidLPoly(format!(
                "genus {g} needs {} coefficients, got {}",
                2 * g + 1,
                coeffs.len()
            )));
        }
        if !coeffs[0].is_one() {
            return Err(Error::InvalidLPoly("constant term must be 1".into()));
        }
        let qb = BigInt::from(q);
        for i in 0..=g as usize {
            let expect = &coeffs[i] * qb.pow(g - i as u32);
            if coeffs[2 * g as usize - i] != expect {
                return Err(Error::InvalidLPoly(format!(
                    "functional equation fails at index {i}"
                )));
            }
        }
        Ok(LPoly { q, g, p, vq, coeffs })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn char_p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let facs = arith::factor(q);
    if facs.len() == 1 {
        Some(facs[0])
    } else {
        None
    }
}

/// Reconstructs the L-polynomial of a genus-g curve over F_q from the point
/// counts N_1..N_g.
pub fn lpoly_from_counts(counts: &[u64], q: u64, g: u32) -> Result<LPoly> {
    if counts.len() != g as usize {
        return Err(Error::InvalidCounts(format!(
            "genus {g} needs exactly {g} counts, got {}",
            counts.len()
        )));
    }
    let qb = BigInt::from(q);
    // power sums of the reciprocal roots
    let mut s: Vec<BigInt> = Vec::with_capacity(g as usize + 1);
    s.push(BigInt::zero()); // unused slot to index from 1
    for (m, &nm) in counts.iter().enumerate() {
        let m = m as u32 + 1;
        let sm = qb.pow(m) + 1 - BigInt::from(nm);
        check_weil(&sm, m, q, g)?;
        s.push(sm);
    }
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=g as usize {
        let mut acc = s[m].clone();
        for j in 1..m {
            acc += &c[j] * &s[m - j];
        }
        let (quot, rem) = num_integer::Integer::div_rem(&(-acc), &BigInt::from(m));
        if !rem.is_zero() {
            return Err(Error::InvalidCounts(format!(
                "Newton's identity at m = {m} does not divide exactly"
            )));
        }
        c.push(quot);
    }
    for i in (0..g as usize).rev() {
        let val = &c[i] * qb.pow(g - i as u32);
        c.push(val);
    }
    LPoly::from_coeffs(q, g, c)
}

fn check_weil(sm: &BigInt, m: u32, q: u64, g: u32) -> Result<()> {
    // |S_m| <= 2g q^{m/2}, compared through squares to stay in integers
    let lhs = sm * sm;
    let rhs = BigInt::from(4 * g as u64 * g as u64) * BigInt::from(q).pow(m);
    if lhs > rhs {
        return Err(Error::InvalidCounts(format!(
            "count over F_q^{m} violates the Weil bound"
        )));
    }
    Ok(())
}

/// N_m derived from an L-polynomial by the power-sum recurrence; exact for
/// every m >= 1.
pub fn counts_from_lpoly(lp: &LPoly, m: u32) -> BigInt {
    assert!(m >= 1, "extension degree must be >= 1");
    let qb = BigInt::from(lp.q);
    let deg = lp.coeffs.len() - 1;
    let mut s: Vec<BigInt> = Vec::with_capacity(m as usize + 1);
    s.push(BigInt::zero());
    for k in 1..=m as usize {
        let mut acc = if k <= deg {
            BigInt::from(k as u64) * &lp.coeffs[k]
        } else {
            BigInt::zero()
        };
        for (i, si) in s.iter().enumerate().skip(1) {
            if k - i <= deg {
                acc += si * &lp.coeffs[k - i];
            }
        }
        s.push(-acc);
    }
    qb.pow(m) + 1 - &s[m as usize]
}

/// Newton polygon of the L-polynomial: lower convex hull of the points
/// (j, v_p(c_j)), slopes normalized by v_p(q).
pub fn newton_slopes(lp: &LPoly) -> SlopeMultiset {
    let mut points: Vec<(u64, u64)> = Vec::new();
    for (j, cj) in lp.coeffs.iter().enumerate() {
        if !cj.is_zero() {
            points.push((j as u64, valuation(cj, lp.p)));
        }
    }
    // monotone-chain lower hull; pop on non-convex or collinear middle points
    let mut hull: Vec<(u64, u64)> = Vec::new();
    for pt in points {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) as i128 * (pt.1 as i128 - a.1 as i128)
                - (b.1 as i128 - a.1 as i128) * (pt.0 - a.0) as i128;
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut out = SlopeMultiset::new();
    for w in hull.windows(2) {
        let (j0, v0) = w[0];
        let (j1, v1) = w[1];
        out.insert(Ratio::new(v1 - v0, (j1 - j0) * lp.vq as u64), j1 - j0);
    }
    out
}

fn valuation(c: &BigInt, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let mut c = c.abs();
    let mut v = 0;
    loop {
        let (quot, rem) = num_integer::Integer::div_rem(&c, &pb);
        if !rem.is_zero() {
            return v;
        }
        c = quot;
        v += 1;
    }
}

/// Maximality over F_{q^e} read off the L-polynomial: the derived count must
/// attain q^e + 1 + 2g q^{e/2}. e must be even.
pub fn is_maximal_from_lpoly(lp: &LPoly, e: u32) -> Result<bool> {
    if e == 0 || e % 2 != 0 {
        return Err(Error::OddExtension(e));
    }
    let qb = BigInt::from(lp.q);
    let target = qb.pow(e) + 1 + BigInt::from(2 * lp.g as u64) * qb.pow(e / 2);
    Ok(counts_from_lpoly(lp, e) == target)
}

/// Serialization-friendly view: decimal strings of the coefficients.
pub fn coeff_strings(lp: &LPoly) -> Vec<String> {
    lp.coeffs.iter().map(|c| format!("{c}")).collect()
}

// ---- tests ----
