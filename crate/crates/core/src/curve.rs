//! The hyperelliptic curves y^2 = phi_d(x) over F_{p^n}: genus, exhaustive
//! point counting, the Dickson permutation test, and direct maximality
//! verdicts by counting.
//!
//! Counting walks every x in the field, adds 1 + chi(phi_d(x)) solutions
//! for the affine part, and finishes with the points above infinity. The
//! quadratic character is evaluated as the Legendre symbol of the norm down
//! to F_p, so the per-point cost is d field multiplications (Horner) plus
//! one norm.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::Error;
use crate::ff::FieldCtx;
use crate::intpoly;
use crate::Result;

/// Genus of the smooth projective model of y^2 = phi_d(x).
pub fn genus(d: u32) -> u32 {
    assert!(d >= 1, "degree must be positive");
    (d - 1) / 2
}

/// Points above x = infinity on the smooth model: one for odd degree, two
/// for even degree (the leading coefficient 1 is a square).
pub fn points_at_infinity(d: u32) -> u64 {
    if d % 2 == 1 {
        1
    } else {
        2
    }
}

/// The curve y^2 = phi_d(x) over F_{p^n}; requires gcd(p, 2d) = 1 so the
/// right-hand side is separable and the curve smooth.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    d: u32,
    p: u64,
    n: u32,
}

impl CurveSpec {
    pub fn new(d: u32, p: u64, n: u32) -> Result<CurveSpec> {
        if d == 0 {
            return Err(Error::InvalidInput("degree d must be >= 1".into()));
        }
        if n == 0 {
            return Err(Error::InvalidInput("extension degree must be >= 1".into()));
        }
        intpoly::check_odd_prime(p)?;
        if (d as u64) % p == 0 {
            return Err(Error::NotCoprime { a: p, b: 2 * d as u64 });
        }
        Ok(CurveSpec { d, p, n })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn genus(&self) -> u32 {
        genus(self.d)
    }

    pub fn points_at_infinity(&self) -> u64 {
        points_at_infinity(self.d)
    }

    pub fn order_u128(&self) -> u128 {
        (self.p as u128).pow(self.n)
    }
}

// ---- counting ----

/// Exhaustive point counter. Construction performs the budget check and
/// precomputes the square table (and the phi_d value table when n = 1), so
/// range counts are cheap to fan out across workers.
pub struct PointCounter {
    spec: CurveSpec,
    ctx: FieldCtx,
    q: u64,
    /// phi_d mod p, ascending, always d+1 entries.
    coeffs: Vec<u64>,
    /// chi on F_p by residue: -1 nonsquare, 0 zero, 1 square.
    sq: Vec<i8>,
    /// value table of phi_d on F_p, n = 1 only.
    val: Option<Vec<u32>>,
}

impl PointCounter {
    pub fn new(spec: &CurveSpec, budget: u64) -> Result<PointCounter> {
        let q128 = spec.order_u128();
        if q128 > budget as u128 {
            return Err(Error::Infeasible { cost_estimate: q128 * spec.d as u128, budget });
        }
        let q = q128 as u64;
        let ctx = FieldCtx::new(spec.p, spec.n)?;
        let phi = intpoly::reduce_mod(&intpoly::chebyshev(spec.d)?, spec.p)?;
        let mut coeffs = vec![0u64; spec.d as usize + 1];
        coeffs[..phi.coeffs().len()].copy_from_slice(phi.coeffs());

        let p = spec.p;
        let mut sq = vec![-1i8; p as usize];
        sq[0] = 0;
        for y in 1..p {
            sq[arith::mulmod(y, y, p) as usize] = 1;
        }
        let val = (spec.n == 1).then(|| {
            let red = ctx.reducer();
            (0..p)
                .map(|x| {
                    let mut acc = 0u64;
                    for &c in coeffs.iter().rev() {
                        acc = red.reduce(acc * x) + c;
                        if acc >= p {
                            acc -= p;
                        }
                    }
                    acc as u32
                })
                .collect()
        });
        Ok(PointCounter { spec: *spec, ctx, q, coeffs, sq, val })
    }

    pub fn spec(&self) -> &CurveSpec {
        &self.spec
    }

    pub fn field_order(&self) -> u64 {
        self.q
    }

    /// Number of affine points whose x-coordinate has enumeration index in
    /// [lo, hi). Disjoint ranges sum to the full affine count exactly.
    pub fn count_affine_range(&self, lo: u64, hi: u64) -> u64 {
        assert!(lo <= hi && hi <= self.q, "bad range [{lo}, {hi})");
        let p = self.spec.p;
        let mut chi_sum: i64 = 0;
        if let Some(val) = &self.val {
            for x in lo..hi {
                chi_sum += self.sq[val[x as usize] as usize] as i64;
            }
        } else {
            let n = self.spec.n as usize;
            let mut xd = digits_of(lo, p, n);
            let mut acc = vec![0u64; n];
            let mut wide = vec![0u64; 2 * n - 1];
            let mut conj = vec![0u64; n];
            let mut tmp = vec![0u64; n];
            let mut nacc = vec![0u64; n];
            for _ in lo..hi {
                horner(&self.ctx, &self.coeffs, &xd, &mut acc, &mut wide);
                let nv = self.ctx.norm_slices(&acc, &mut conj, &mut tmp, &mut nacc, &mut wide);
                chi_sum += self.sq[nv as usize] as i64;
                incr(&mut xd, p);
            }
        }
        ((hi - lo) as i64 + chi_sum) as u64
    }

    /// Full projective point count.
    pub fn count(&self) -> u64 {
        self.count_affine_range(0, self.q) + self.spec.points_at_infinity()
    }
}

/// Projective point count of y^2 = phi_d(x) over F_{p^n}, budget-guarded.
pub fn count_points(spec: &CurveSpec, budget: u64) -> Result<u64> {
    Ok(PointCounter::new(spec, budget)?.count())
}

/// Dickson criterion: phi_d permutes F_{p^n} iff gcd(p^{2n} - 1, d) = 1.
pub fn is_permutation(d: u32, p: u64, n: u32) -> bool {
    assert!(d >= 1 && n >= 1);
    let dd = d as u64;
    if dd == 1 {
        return true;
    }
    let r = arith::powmod(p % dd, 2 * n as u64, dd);
    num_integer::gcd((r + dd - 1) % dd, dd) == 1
}

/// Exhaustive bijectivity check of x -> phi_d(x) on F_{p^n}.
pub fn is_permutation_exhaustive(d: u32, p: u64, n: u32, budget: u64) -> Result<bool> {
    let spec = CurveSpec::new(d, p, n)?;
    let q128 = spec.order_u128();
    if q128 > budget as u128 {
        return Err(Error::Infeasible { cost_estimate: q128 * d as u128, budget });
    }
    let q = q128 as u64;
    let ctx = FieldCtx::new(p, n)?;
    let phi = intpoly::reduce_mod(&intpoly::chebyshev(d)?, p)?;
    let mut coeffs = vec![0u64; d as usize + 1];
    coeffs[..phi.coeffs().len()].copy_from_slice(phi.coeffs());
    let nn = n as usize;
    let mut seen = vec![false; q as usize];
    let mut xd = vec![0u64; nn];
    let mut acc = vec![0u64; nn];
    let mut wide = vec![0u64; 2 * nn - 1];
    for _ in 0..q {
        horner(&ctx, &coeffs, &xd, &mut acc, &mut wide);
        let mut idx = 0u64;
        for &c in acc.iter().rev() {
            idx = idx * p + c;
        }
        let slot = &mut seen[idx as usize];
        if *slot {
            return Ok(false);
        }
        *slot = true;
        incr(&mut xd, p);
    }
    Ok(true)
}

/// True iff the count over F_{p^n} attains q + 1 + 2g*sqrt(q); n must be
/// even so that sqrt(q) is an integer.
pub fn is_maximal_by_count(spec: &CurveSpec, budget: u64) -> Result<bool> {
    if spec.n % 2 != 0 {
        return Err(Error::OddExtension(spec.n));
    }
    let count = count_points(spec, budget)?;
    let target = spec.order_u128()
        + 1
        + 2 * spec.genus() as u128 * (spec.p as u128).pow(spec.n / 2);
    Ok(count as u128 == target)
}

// ---- kernels ----

/// acc = phi(x) by Horner; coeffs ascending with d+1 entries, x given by its
/// coefficient digits.
#[inline]
fn horner(ctx: &FieldCtx, coeffs: &[u64], xd: &[u64], acc: &mut [u64], wide: &mut [u64]) {
    let p = ctx.p();
    acc.fill(0);
    acc[0] = *coeffs.last().unwrap();
    for &c in coeffs.iter().rev().skip(1) {
        ctx.mul_assign_slice(acc, xd, wide);
        let s = acc[0] + c;
        acc[0] = if s >= p { s - p } else { s };
    }
}

/// Little-endian base-p increment; wraps silently at p^n (callers bound the
/// iteration count).
#[inline]
fn incr(digits: &mut [u64], p: u64) {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return;
        }
        *d = 0;
    }
}

fn digits_of(idx: u64, p: u64, n: usize) -> Vec<u64> {
    let mut out = vec![0u64; n];
    let mut k = idx;
    for slot in out.iter_mut() {
        *slot = k % p;
        k /= p;
    }
    out
}

// ---- tests ----
