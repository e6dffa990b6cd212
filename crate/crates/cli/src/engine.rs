//! Counting and reconstruction plumbing shared by the subcommands.

use chebmax_core::curve::{genus, CurveSpec, PointCounter};
use chebmax_core::zeta::{lpoly_from_counts, LPoly};
use chebmax_core::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Count points over F_{p^n}, splitting the affine range across workers.
pub fn parallel_count(spec: &CurveSpec, budget: u64, threads: usize) -> Result<u64> {
    let counter = PointCounter::new(spec, budget)?;
    let q = counter.field_order();
    let workers = effective_threads(threads, q);
    if workers <= 1 {
        return Ok(counter.count());
    }
    let w = workers as u64;
    let affine: u64 = std::thread::scope(|s| {
        (0..w)
            .map(|i| {
                let c = &counter;
                s.spawn(move || c.count_affine_range(q * i / w, q * (i + 1) / w))
            })
            .collect::<Vec<_>>()
            .into_iter()
            .map(|h| h.join().expect("counting worker panicked"))
            .sum()
    });
    Ok(affine + spec.points_at_infinity())
}

fn effective_threads(requested: usize, q: u64) -> usize {
    let auto = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let t = if requested == 0 { auto } else { requested };
    t.clamp(1, q.max(1) as usize)
}

/// Reconstruct the L-polynomial over F_p, together with the counts N_1..N_g used.
pub fn lpoly_for_curve(d: u32, p: u64, budget: u64, threads: usize) -> Result<(LPoly, Vec<u64>)> {
    let g = genus(d);
    let mut counts = Vec::with_capacity(g as usize);
    if g > 0 {
        // refuse the whole job before counting anything if the top level is out of reach
        let top = CurveSpec::new(d, p, g)?;
        if top.order_u128() > u128::from(budget) {
            return Err(Error::Infeasible {
                cost_estimate: top.order_u128().saturating_mul(u128::from(d)),
                budget,
            });
        }
        for e in 1..=g {
            let spec = CurveSpec::new(d, p, e)?;
            counts.push(parallel_count(&spec, budget, threads)?);
        }
    } else {
        CurveSpec::new(d, p, 1)?;
    }
    let lp = lpoly_from_counts(&counts, p, g)?;
    Ok((lp, counts))
}

// ---- factored display ----

/// Exponent pairs (a, b) when the polynomial is exactly a product of (1 + p^a x^b).
pub fn factored_form(lp: &LPoly) -> Option<Vec<(u32, u32)>> {
    let p = BigInt::from(lp.char_p());
    let mut rem = lp.coeffs().to_vec();
    let mut parts = Vec::new();
    while rem.len() > 1 {
        let b = (1..rem.len()).find(|&i| !rem[i].is_zero())?;
        let a = exact_log(&rem[b], &p)?;
        rem = divide_by_binomial(&rem, b, &rem[b].clone())?;
        parts.push((a, b as u32));
    }
    (rem.len() == 1 && rem[0].is_one()).then_some(parts)
}

/// Render factors as "(p^a x^b + 1)(...)" with the characteristic left symbolic.
pub fn render_factored(parts: &[(u32, u32)]) -> String {
    let mut out = String::new();
    for &(a, b) in parts {
        let coeff = match a {
            0 => String::new(),
            1 => "p ".to_string(),
            _ => format!("p^{a} "),
        };
        let var = if b == 1 { "x".to_string() } else { format!("x^{b}") };
        out.push_str(&format!("({coeff}{var} + 1)"));
    }
    out
}

// c = p^a exactly, for some a >= 0
fn exact_log(c: &BigInt, p: &BigInt) -> Option<u32> {
    if !c.is_positive() {
        return None;
    }
    let mut c = c.clone();
    let mut a = 0u32;
    while !c.is_one() {
        let (q, r) = num_integer::Integer::div_rem(&c, p);
        if !r.is_zero() {
            return None;
        }
        c = q;
        a += 1;
    }
    Some(a)
}

// f / (1 + c x^b) when the division is exact over Z
fn divide_by_binomial(f: &[BigInt], b: usize, c: &BigInt) -> Option<Vec<BigInt>> {
    if f.len() <= b {
        return None;
    }
    let qlen = f.len() - b;
    let mut work = f.to_vec();
    let mut quot = Vec::with_capacity(qlen);
    for i in 0..qlen {
        let qi = work[i].clone();
        if i + b < work.len() {
            work[i + b] = &work[i + b] - &qi * c;
        }
        quot.push(qi);
    }
    work[qlen..].iter().all(Zero::is_zero).then_some(quot)
}

// ---- tests ----
