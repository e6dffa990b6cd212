//! Finite fields F_{p^n} and elementary number-theoretic helpers.
//!
//! A [`FieldCtx`] owns the modulus and all precomputed tables; elements are
//! plain coefficient vectors of length n over the canonical monic irreducible
//! modulus. The canonical modulus for (p, n) is the lexicographically
//! smallest monic irreducible of degree n, comparing coefficient sequences
//! (c_0, c_1, ..., c_{n-1}) low degree first, so field constructions are
//! reproducible across runs and machines.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::arith;
use crate::error::Error;
use crate::intpoly::{self, FpPoly};
use crate::Result;

// ---- integer helpers ----

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i32 {
    assert!(p > 2 && arith::is_prime(p), "p = {p} must be an odd prime");
    let r = a.rem_euclid(p as i64) as u64;
    match arith::powmod(r, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        v => {
            debug_assert_eq!(v, p - 1);
            -1
        }
    }
}

/// Multiplicative order of a mod m (m >= 2, gcd(a, m) = 1).
pub fn mult_order(a: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidInput(format!("order needs modulus >= 2, got {m}")));
    }
    let a = a % m;
    if num_integer::gcd(a, m) != 1 {
        return Err(Error::NotCoprime { a, b: m });
    }
    let mut cur = a;
    let mut ord = 1u64;
    while cur != 1 {
        cur = arith::mulmod(cur, a, m);
        ord += 1;
    }
    Ok(ord)
}

/// Least k >= 1 with a^k = +/-1 mod m; the order of a in (Z/m)^x / {+/-1}.
pub fn pm_order(a: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidInput(format!("order needs modulus >= 2, got {m}")));
    }
    let a = a % m;
    if num_integer::gcd(a, m) != 1 {
        return Err(Error::NotCoprime { a, b: m });
    }
    let mut cur = a;
    let mut ord = 1u64;
    while cur != 1 && cur != m - 1 {
        cur = arith::mulmod(cur, a, m);
        ord += 1;
    }
    Ok(ord)
}

/// All primitive roots mod the prime p, as the set {g^m : gcd(m, p-1) = 1}.
pub fn primroots(p: u64) -> BTreeSet<u64> {
    assert!(arith::is_prime(p), "p = {p} must be prime");
    if p == 2 {
        return BTreeSet::from([1]);
    }
    let phi = p - 1;
    let facs = arith::factor(phi);
    let g = (2..p)
        .find(|&g| facs.iter().all(|&(q, _)| arith::powmod(g, phi / q, p) != 1))
        .expect("a primitive root exists");
    (1..phi)
        .filter(|&m| num_integer::gcd(m, phi) == 1)
        .map(|m| arith::powmod(g, m, p))
        .collect()
}

/// Chinese remainder theorem for pairwise coprime moduli; result in [0, prod).
pub fn crt(residues: &[u64], moduli: &[u64]) -> Result<u64> {
    if residues.len() != moduli.len() || moduli.is_empty() {
        return Err(Error::InvalidInput(format!(
            "need equally many residues and moduli, got {} and {}",
            residues.len(),
            moduli.len()
        )));
    }
    for (i, &mi) in moduli.iter().enumerate() {
        if mi == 0 {
            return Err(Error::InvalidInput(format!("modulus {i} is zero")));
        }
        for &mj in &moduli[i + 1..] {
            if num_integer::gcd(mi, mj) != 1 {
                return Err(Error::NotCoprime { a: mi, b: mj });
            }
        }
    }
    let mut x: u128 = (residues[0] % moduli[0]) as u128;
    let mut m: u128 = moduli[0] as u128;
    for (&r, &mi) in residues.iter().zip(moduli).skip(1) {
        let mi = mi as u128;
        let r = (r as u128) % mi;
        // solve x + m*t = r mod mi
        let minv = invmod((m % mi) as u64, mi as u64).expect("pairwise coprime");
        let t = ((r + mi - x % mi) % mi) * (minv as u128) % mi;
        x += m * t;
        m = m.checked_mul(mi).ok_or_else(|| {
            Error::InvalidInput("modulus product exceeds u128".into())
        })?;
    }
    u64::try_from(x).map_err(|_| Error::InvalidInput("CRT solution exceeds u64".into()))
}

/// Inverse of a mod m when gcd(a, m) = 1.
pub fn invmod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

// ---- Barrett reduction ----

/// Reduction mod p without hardware division; valid for operands < 2^62.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Reducer {
    p: u64,
    magic: u64,
}

impl Reducer {
    pub(crate) fn new(p: u64) -> Self {
        debug_assert!((3..1 << 31).contains(&p));
        Reducer { p, magic: ((1u128 << 64) / p as u128) as u64 }
    }

    #[inline]
    pub(crate) fn reduce(self, t: u64) -> u64 {
        debug_assert!(t < (1 << 62));
        let q = ((t as u128 * self.magic as u128) >> 64) as u64;
        let mut r = t - q * self.p;
        while r >= self.p {
            r -= self.p;
        }
        r
    }
}

// ---- field context ----

/// F_{p^n} with the canonical modulus and precomputed reduction tables.
///
/// Immutable after construction, so shared references may be used from
/// several threads at once.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u64,
    n: u32,
    modulus: FpPoly,
    red: Reducer,
    /// redrows[i] = x^(n+i) mod modulus, i in 0..n-1 (empty for n = 1).
    redrows: Vec<Vec<u64>>,
    /// frobrows[i] = x^(i*p) mod modulus, i in 0..n.
    frobrows: Vec<Vec<u64>>,
    /// p^n when it fits u64.
    order: Option<u64>,
}

/// Element of F_{p^n}: coefficients of 1, x, ..., x^(n-1), always length n.
///
/// Elements carry no back-reference; mixing elements across contexts is a
/// caller bug.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

impl FieldCtx {
    /// Builds F_{p^n}; rejects p = 2, non-prime p and n = 0.
    pub fn new(p: u64, n: u32) -> Result<FieldCtx> {
        intpoly::check_odd_prime(p)?;
        if n == 0 {
            return Err(Error::InvalidInput("extension degree must be >= 1".into()));
        }
        let modulus = canonical_modulus(p, n)?;
        let red = Reducer::new(p);
        let nn = n as usize;

        // rows for reducing degrees n..2n-2: x^n = -(low part of modulus)
        let mut redrows: Vec<Vec<u64>> = Vec::with_capacity(nn.saturating_sub(1));
        if nn >= 2 {
            let base: Vec<u64> = (0..nn).map(|i| (p - modulus.coeff(i)) % p).collect();
            redrows.push(base);
            for i in 1..nn - 1 {
                let prev = &redrows[i - 1];
                let carry = prev[nn - 1];
                let mut row = vec![0u64; nn];
                row[1..nn].copy_from_slice(&prev[..nn - 1]);
                if carry != 0 {
                    let first = &redrows[0];
                    for j in 0..nn {
                        row[j] = red.reduce(row[j] + carry * first[j]);
                    }
                }
                redrows.push(row);
            }
        }

        let mut ctx = FieldCtx {
            p,
            n,
            modulus,
            red,
            redrows,
            frobrows: Vec::new(),
            order: checked_pow_u64(p, n),
        };

        // frobrows[i] = x^(i*p) mod f, built from x^p mod f
        let mut frobrows = Vec::with_capacity(nn);
        let mut one = vec![0u64; nn];
        one[0] = 1;
        frobrows.push(one);
        if nn >= 2 {
            let xp = FpPoly::x(p).pow_mod(p, &ctx.modulus);
            let mut xp_row = vec![0u64; nn];
            xp_row[..xp.coeffs().len()].copy_from_slice(xp.coeffs());
            for i in 1..nn {
                let mut row = vec![0u64; nn];
                let mut wide = vec![0u64; 2 * nn - 1];
                ctx.mul_slices(&frobrows[i - 1], &xp_row, &mut wide, &mut row);
                frobrows.push(row);
            }
        }
        ctx.frobrows = frobrows;
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    /// p^n when it fits in u64.
    pub fn order_u64(&self) -> Option<u64> {
        self.order
    }

    pub fn order_u128(&self) -> u128 {
        (self.p as u128).pow(self.n)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.n as usize] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_int(&self, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.n as usize];
        coeffs[0] = c % self.p;
        FieldElement { coeffs }
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    /// The element whose coefficients are the base-p digits of idx.
    pub fn element_from_index(&self, idx: u64) -> FieldElement {
        let order = self.order.expect("field order exceeds u64");
        assert!(idx < order, "index {idx} out of range");
        let mut coeffs = vec![0; self.n as usize];
        let mut k = idx;
        for c in coeffs.iter_mut() {
            *c = k % self.p;
            k /= self.p;
        }
        FieldElement { coeffs }
    }

    /// Inverse of element_from_index.
    pub fn index_of(&self, a: &FieldElement) -> u64 {
        debug_assert!(self.order.is_some());
        let mut idx = 0u64;
        for &c in a.coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let nn = self.n as usize;
        let mut wide = vec![0u64; 2 * nn - 1];
        let mut out = vec![0u64; nn];
        self.mul_slices(&a.coeffs, &b.coeffs, &mut wide, &mut out);
        FieldElement { coeffs: out }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::InvalidInput("inverse of zero".into()));
        }
        let apoly = FpPoly::from_raw(self.p, a.coeffs.clone());
        let (g, u, _) = intpoly::ext_gcd(&apoly, &self.modulus);
        debug_assert_eq!(g.degree(), Some(0));
        debug_assert_eq!(g.coeff(0), 1);
        let u = u.rem(&self.modulus);
        let mut coeffs = vec![0; self.n as usize];
        coeffs[..u.coeffs().len()].copy_from_slice(u.coeffs());
        Ok(FieldElement { coeffs })
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, a: &FieldElement, e: &BigUint) -> FieldElement {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// The p-power Frobenius, evaluated as a linear map.
    pub fn frobenius(&self, a: &FieldElement) -> FieldElement {
        let mut out = vec![0u64; self.n as usize];
        self.frobenius_slices(&a.coeffs, &mut out);
        FieldElement { coeffs: out }
    }

    /// Norm down to F_p: the product of all n Frobenius conjugates.
    pub fn norm(&self, a: &FieldElement) -> u64 {
        let nn = self.n as usize;
        if nn == 1 {
            return a.coeffs[0];
        }
        let mut wide = vec![0u64; 2 * nn - 1];
        let mut tmp = vec![0u64; nn];
        let mut conj = a.coeffs.clone();
        let mut acc = a.coeffs.clone();
        for _ in 1..nn {
            self.frobenius_slices(&conj, &mut tmp);
            conj.copy_from_slice(&tmp);
            self.mul_assign_slice(&mut acc, &conj, &mut wide);
        }
        debug_assert!(acc[1..].iter().all(|&c| c == 0), "norm lands in F_p");
        acc[0]
    }

    /// Quadratic character: 0 on zero, +/-1 by a^((p^n - 1)/2) otherwise.
    pub fn quad_char(&self, a: &FieldElement) -> i32 {
        if self.is_zero(a) {
            return 0;
        }
        if self.n == 1 {
            return legendre(a.coeffs[0] as i64, self.p);
        }
        let e = (BigUint::from(self.p).pow(self.n) - 1u32) / 2u32;
        let r = self.pow_big(a, &e);
        if r == self.one() {
            1
        } else {
            debug_assert_eq!(r, self.from_int(self.p - 1));
            -1
        }
    }

    /// Deterministic enumeration of the whole field, budget-checked.
    pub fn enumerate(&self, budget: u64) -> Result<ElementIter<'_>> {
        let q = self.order_u128();
        if q > budget as u128 {
            return Err(Error::Infeasible { cost_estimate: q, budget });
        }
        Ok(ElementIter { ctx: self, cur: 0, end: q as u64 })
    }

    /// Enumeration of the index range [lo, hi), for partitioned drivers.
    pub fn enumerate_range(&self, lo: u64, hi: u64, budget: u64) -> Result<ElementIter<'_>> {
        let q = self.order_u128();
        if lo > hi || (hi as u128) > q {
            return Err(Error::InvalidInput(format!("bad range [{lo}, {hi}) for field of order {q}")));
        }
        if hi - lo > budget {
            return Err(Error::Infeasible { cost_estimate: (hi - lo) as u128, budget });
        }
        Ok(ElementIter { ctx: self, cur: lo, end: hi })
    }

    // ---- slice kernels (no per-call allocation) ----

    /// out = a*b in the field; wide is 2n-1 scratch.
    #[inline]
    pub(crate) fn mul_slices(&self, a: &[u64], b: &[u64], wide: &mut [u64], out: &mut [u64]) {
        self.mul_wide(a, b, wide);
        out.copy_from_slice(&wide[..a.len()]);
    }

    /// acc = acc*b in the field; wide is 2n-1 scratch.
    #[inline]
    pub(crate) fn mul_assign_slice(&self, acc: &mut [u64], b: &[u64], wide: &mut [u64]) {
        self.mul_wide(acc, b, wide);
        acc.copy_from_slice(&wide[..b.len()]);
    }

    #[inline]
    fn mul_wide(&self, a: &[u64], b: &[u64], wide: &mut [u64]) {
        let n = a.len();
        let red = self.red;
        wide.fill(0);
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                wide[i + j] = red.reduce(wide[i + j] + ai * bj);
            }
        }
        // fold degrees n..2n-2 down with the precomputed rows
        for i in (n..wide.len()).rev() {
            let c = wide[i];
            if c != 0 {
                let row = &self.redrows[i - n];
                for j in 0..n {
                    wide[j] = red.reduce(wide[j] + c * row[j]);
                }
            }
        }
    }

    /// out = Frobenius(a), as a matrix-vector product against frobrows.
    #[inline]
    pub(crate) fn frobenius_slices(&self, a: &[u64], out: &mut [u64]) {
        let red = self.red;
        out.fill(0);
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.frobrows[i];
            for (o, &r) in out.iter_mut().zip(row) {
                *o = red.reduce(*o + ai * r);
            }
        }
    }

    /// Norm via slices; b and tmp are n-length scratch, wide 2n-1.
    #[inline]
    pub(crate) fn norm_slices(
        &self,
        a: &[u64],
        conj: &mut [u64],
        tmp: &mut [u64],
        acc: &mut [u64],
        wide: &mut [u64],
    ) -> u64 {
        let n = a.len();
        if n == 1 {
            return a[0];
        }
        conj.copy_from_slice(a);
        acc.copy_from_slice(a);
        for _ in 1..n {
            self.frobenius_slices(conj, tmp);
            conj.copy_from_slice(tmp);
            self.mul_assign_slice(acc, conj, wide);
        }
        debug_assert!(acc[1..].iter().all(|&c| c == 0));
        acc[0]
    }

    pub(crate) fn reducer(&self) -> Reducer {
        self.red
    }
}

/// Deterministic element iterator in index order.
#[derive(Debug)]
pub struct ElementIter<'a> {
    ctx: &'a FieldCtx,
    cur: u64,
    end: u64,
}

impl Iterator for ElementIter<'_> {
    type Item = FieldElement;

    fn next(&mut self) -> Option<FieldElement> {
        if self.cur >= self.end {
            return None;
        }
        let e = self.ctx.element_from_index(self.cur);
        self.cur += 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.cur) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for ElementIter<'_> {}

fn checked_pow_u64(p: u64, n: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// Lexicographically smallest monic irreducible of degree n over F_p,
/// coefficients compared low degree first.
fn canonical_modulus(p: u64, n: u32) -> Result<FpPoly> {
    if n == 1 {
        return Ok(FpPoly::x(p));
    }
    let nn = n as usize;
    let total = (p as u128).pow(n);
    for k in 0..total {
        // big-endian digits of k: c_0 is the most significant, so increasing
        // k walks the candidates in lex order on (c_0, ..., c_{n-1})
        let mut cand = vec![0u64; nn + 1];
        cand[nn] = 1;
        let mut idx = k;
        for slot in cand[..nn].iter_mut().rev() {
            *slot = (idx % p as u128) as u64;
            idx /= p as u128;
        }
        let f = FpPoly::from_raw(p, cand);
        if intpoly::is_irreducible(&f)? {
            return Ok(f);
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

// ---- tests ----
