//! Maximality classification for the curves y² = φ_d(x).
//!
//! Each verdict records which rule decided it and the evidence behind it.
//! The decided statuses predict, for every even extension degree, whether
//! the curve attains the Hasse–Weil bound; the undecided statuses surface
//! exactly the cases the implemented rules do not cover instead of guessing.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::gcd;
use num_traits::ToPrimitive;

use crate::arith::{euler_phi, factor, is_prime, mulmod, v2};
use crate::cmgal::{check_pair, slopes2_multiset, slopes_multiset};
use crate::error::Error;
use crate::ff::{legendre, mult_order, pm_order};
use crate::intpoly::{is_irreducible, odd_part, reduce_mod};
use crate::zeta::{LPoly, SlopeMultiset};
use crate::Result;

// ---- rule tags ----

pub const RULE_FACTOR_3_MOD_4: &str = "factor-3-mod-4-obstruction";
pub const RULE_PM_ORDER: &str = "pm-order-exponent";
pub const RULE_ODD_PM_ORDER: &str = "odd-pm-order-exponent";
pub const RULE_EVEN_PM_ORDER: &str = "even-pm-order-obstruction";
pub const RULE_PRIMITIVE_ROOT: &str = "primitive-root-descent";
pub const RULE_SLOPE_OBSTRUCTION: &str = "slope-obstruction";
pub const RULE_PM_ONE_CONGRUENCE: &str = "pm-one-congruence";
pub const RULE_QUOTIENT_OBSTRUCTION: &str = "quotient-curve-obstruction";
pub const RULE_2ADIC_MISMATCH: &str = "two-adic-valuation-mismatch";
pub const RULE_CM_CONSISTENT: &str = "cm-slopes-consistent";
pub const RULE_OPEN_CASE: &str = "undecided-open-case";

// ---- verdicts ----

/// Outcome of the classification rules for a pair (d, p).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Maximal over F_{p^{2n}} exactly when n is an odd multiple of the attached k.
    MaximalForExponents,
    /// Not maximal over any finite extension of F_p.
    NeverMaximal,
    /// Every implemented check passed, but no proven rule covers the case.
    ConsistentWithMaximal,
    /// Outside the reach of the implemented rules.
    Undecided,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::MaximalForExponents => "maximal-for-exponents",
            Status::NeverMaximal => "never-maximal",
            Status::ConsistentWithMaximal => "consistent-with-maximal",
            Status::Undecided => "undecided",
        })
    }
}

/// A classification result: status, deciding rule, and supporting evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub rule: &'static str,
    pub exponent_multiplier: Option<u64>,
    pub evidence: Vec<String>,
}

impl Verdict {
    /// The verdict's prediction for maximality over F_{p^e}, when it decides it.
    pub fn maximal_over(&self, e: u32) -> Option<bool> {
        match self.status {
            Status::MaximalForExponents => {
                let k = self.exponent_multiplier.expect("maximal verdict carries k");
                let e = u64::from(e);
                Some(e % 2 == 0 && (e / 2) % k == 0 && (e / 2 / k) % 2 == 1)
            }
            Status::NeverMaximal => Some(false),
            _ => None,
        }
    }
}

fn maximal(rule: &'static str, k: u64, evidence: Vec<String>) -> Verdict {
    Verdict { status: Status::MaximalForExponents, rule, exponent_multiplier: Some(k), evidence }
}

fn never(rule: &'static str, evidence: Vec<String>) -> Verdict {
    Verdict { status: Status::NeverMaximal, rule, exponent_multiplier: None, evidence }
}

fn slope_summary(s: &SlopeMultiset) -> String {
    let parts: Vec<String> =
        s.iter().map(|(slope, len)| format!("{slope} (length {len})")).collect();
    parts.join(", ")
}

// ---- prime degree ----

fn check_prime_pair(ell: u64, p: u64) -> Result<()> {
    if ell < 3 || ell % 2 == 0 || !is_prime(ell) {
        return Err(Error::NotOddPrime(ell));
    }
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if p == ell {
        return Err(Error::NotCoprime { a: p, b: 2 * ell });
    }
    Ok(())
}

/// Decide maximality of y² = φ_ℓ(x) in characteristic p, ℓ an odd prime.
pub fn classify_prime(ell: u64, p: u64) -> Result<Verdict> {
    check_prime_pair(ell, p)?;
    let verdict = match (ell % 4, p % 4) {
        (3, 1) => never(
            RULE_FACTOR_3_MOD_4,
            vec![format!("{ell} = 3 mod 4 while {p} = 1 mod 4")],
        ),
        (3, 3) => {
            let k = pm_order(p, ell)?;
            maximal(RULE_PM_ORDER, k, vec![format!("order of +-{p} mod {ell} is {k}")])
        }
        (1, 3) => {
            let k = pm_order(p, ell)?;
            if k % 2 == 1 {
                maximal(
                    RULE_ODD_PM_ORDER,
                    k,
                    vec![format!("order of +-{p} mod {ell} is {k}, odd")],
                )
            } else {
                never(
                    RULE_EVEN_PM_ORDER,
                    vec![format!("order of +-{p} mod {ell} is {k}, even")],
                )
            }
        }
        (1, 1) => {
            if mult_order(p, ell)? == ell - 1 {
                maximal(
                    RULE_PRIMITIVE_ROOT,
                    (ell - 1) / 2,
                    vec![format!("{p} generates (Z/{ell})^x")],
                )
            } else {
                let slopes = slopes_multiset(ell, p)?;
                if !slopes.is_all_half() {
                    never(
                        RULE_SLOPE_OBSTRUCTION,
                        vec![format!("Frobenius slopes {}", slope_summary(&slopes))],
                    )
                } else {
                    Verdict {
                        status: Status::Undecided,
                        rule: RULE_OPEN_CASE,
                        exponent_multiplier: None,
                        evidence: vec![format!(
                            "all slopes are 1/2 but {p} is not a primitive root mod {ell}"
                        )],
                    }
                }
            }
        }
        _ => unreachable!("odd primes are 1 or 3 mod 4"),
    };
    Ok(verdict)
}

// ---- odd degree ----

/// Decide maximality of y² = φ_d(x) in characteristic p, d odd, gcd(p, 2d) = 1.
pub fn classify_odd(d: u64, p: u64) -> Result<Verdict> {
    if d < 3 || d % 2 == 0 {
        return Err(Error::InvalidInput(format!("degree must be an odd integer >= 3, got {d}")));
    }
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if gcd(p, 2 * d) != 1 {
        return Err(Error::NotCoprime { a: p, b: 2 * d });
    }
    if p % 4 == 3 {
        return Ok(congruence_rule(d, p));
    }
    let fac = factor(d);
    if let Some(&(bad, _)) = fac.iter().find(|(l, _)| l % 4 == 3) {
        return Ok(never(
            RULE_FACTOR_3_MOD_4,
            vec![format!("prime factor {bad} of {d} is 3 mod 4 while {p} = 1 mod 4")],
        ));
    }
    if fac.len() == 1 && fac[0].1 == 1 {
        return classify_prime(d, p);
    }
    composite_rule(d, p, &fac)
}

/// Dispatch on the degree: prime rules for primes, odd-degree rules otherwise.
pub fn classify(d: u64, p: u64) -> Result<Verdict> {
    if d >= 3 && d % 2 == 1 && is_prime(d) {
        classify_prime(d, p)
    } else {
        classify_odd(d, p)
    }
}

// p = 3 mod 4: maximality is equivalent to <p> mod 4d containing -1 or 1+2d
fn congruence_rule(d: u64, p: u64) -> Verdict {
    let m = 4 * d;
    let base = p % m;
    let mut cur = base;
    let mut ord = 0u64;
    let mut witness = None;
    loop {
        ord += 1;
        if witness.is_none() && (cur == m - 1 || cur == 1 + 2 * d) {
            witness = Some(cur);
        }
        if cur == 1 {
            break;
        }
        cur = mulmod(cur, base, m);
    }
    match witness {
        Some(w) => {
            debug_assert_eq!(ord % 2, 0);
            maximal(
                RULE_PM_ONE_CONGRUENCE,
                ord / 2,
                vec![format!("<{p}> mod {m} has order {ord} and contains {w}")],
            )
        }
        None => never(
            RULE_PM_ONE_CONGRUENCE,
            vec![format!("<{p}> mod {m} contains neither {} nor {}", m - 1, 1 + 2 * d)],
        ),
    }
}

// p = 1 mod 4, d composite with every prime factor 1 mod 4
fn composite_rule(d: u64, p: u64, fac: &[(u64, u32)]) -> Result<Verdict> {
    match fac {
        [(ell, n)] if *n >= 2 => {
            let quotient = d / ell;
            let sub = classify_odd(quotient, p)?;
            if sub.status == Status::NeverMaximal {
                return Ok(never(
                    RULE_QUOTIENT_OBSTRUCTION,
                    vec![format!("quotient curve of degree {quotient} is never maximal ({})", sub.rule)],
                ));
            }
            let s2 = slopes2_multiset(d, p)?;
            if !s2.is_all_half() {
                return Ok(never(
                    RULE_SLOPE_OBSTRUCTION,
                    vec![format!("new-part slopes {}", slope_summary(&s2))],
                ));
            }
            if sub.status == Status::Undecided {
                return Ok(Verdict {
                    status: Status::Undecided,
                    rule: RULE_OPEN_CASE,
                    exponent_multiplier: None,
                    evidence: vec![format!("quotient curve of degree {quotient} is undecided")],
                });
            }
            Ok(Verdict {
                status: Status::ConsistentWithMaximal,
                rule: RULE_CM_CONSISTENT,
                exponent_multiplier: None,
                evidence: vec![
                    format!("new-part slopes at degree {d} are all 1/2"),
                    format!("quotient curve of degree {quotient}: {} ({})", sub.status, sub.rule),
                ],
            })
        }
        [(l1, 1), (l2, 1)] => {
            let va = classify_prime(*l1, p)?;
            let vb = classify_prime(*l2, p)?;
            for (l, v) in [(*l1, &va), (*l2, &vb)] {
                if v.status == Status::NeverMaximal {
                    return Ok(never(
                        RULE_QUOTIENT_OBSTRUCTION,
                        vec![format!("quotient curve of degree {l} is never maximal ({})", v.rule)],
                    ));
                }
            }
            if let (Some(ka), Some(kb)) = (va.exponent_multiplier, vb.exponent_multiplier) {
                if v2(ka) != v2(kb) {
                    return Ok(never(
                        RULE_2ADIC_MISMATCH,
                        vec![format!(
                            "exponent multipliers {ka} (degree {l1}) and {kb} (degree {l2}) \
                             have different 2-adic valuations"
                        )],
                    ));
                }
            }
            let s2 = slopes2_multiset(d, p)?;
            if !s2.is_all_half() {
                return Ok(never(
                    RULE_SLOPE_OBSTRUCTION,
                    vec![format!("new-part slopes {}", slope_summary(&s2))],
                ));
            }
            if va.status == Status::Undecided || vb.status == Status::Undecided {
                return Ok(Verdict {
                    status: Status::Undecided,
                    rule: RULE_OPEN_CASE,
                    exponent_multiplier: None,
                    evidence: vec![format!("a quotient curve is undecided")],
                });
            }
            Ok(Verdict {
                status: Status::ConsistentWithMaximal,
                rule: RULE_CM_CONSISTENT,
                exponent_multiplier: None,
                evidence: vec![
                    format!("new-part slopes at degree {d} are all 1/2"),
                    format!("quotient curve of degree {l1}: {} ({})", va.status, va.rule),
                    format!("quotient curve of degree {l2}: {} ({})", vb.status, vb.rule),
                ],
            })
        }
        _ => {
            // degrees with three or more prime factors have no dedicated rule;
            // the top-level slope obstruction still applies
            let s2 = slopes2_multiset(d, p)?;
            if !s2.is_all_half() {
                return Ok(never(
                    RULE_SLOPE_OBSTRUCTION,
                    vec![format!("new-part slopes {}", slope_summary(&s2))],
                ));
            }
            Ok(Verdict {
                status: Status::Undecided,
                rule: RULE_OPEN_CASE,
                exponent_multiplier: None,
                evidence: vec![format!("no implemented rule covers degree {d}")],
            })
        }
    }
}

// ---- descent certificate ----

/// Transcript of the quadratic-descent maximality argument for (ℓ, p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentCertificate {
    pub ell: u64,
    pub p: u64,
    pub legendre_value: i32,
    pub psi_irreducible: bool,
    pub slopes_all_half: bool,
    pub char_poly_middle: Option<i8>,
    pub conclusion: bool,
}

/// Run the descent argument; requires ℓ ≡ p ≡ 1 mod 4 prime, p a primitive root mod ℓ.
pub fn descent_certificate(ell: u64, p: u64) -> Result<DescentCertificate> {
    if ell % 4 != 1 || !is_prime(ell) {
        return Err(Error::HypothesisViolation(format!("{ell} is not a prime = 1 mod 4")));
    }
    if p % 4 != 1 || !is_prime(p) {
        return Err(Error::HypothesisViolation(format!("{p} is not a prime = 1 mod 4")));
    }
    if p == ell {
        return Err(Error::HypothesisViolation(format!("p = ell = {p}")));
    }
    if mult_order(p, ell)? != ell - 1 {
        return Err(Error::HypothesisViolation(format!("{p} is not a primitive root mod {ell}")));
    }
    let small = u32::try_from(ell)
        .map_err(|_| Error::InvalidInput(format!("degree {ell} is out of range")))?;
    let legendre_value = legendre(ell as i64, p);
    let psi_irreducible = is_irreducible(&reduce_mod(&odd_part(small)?, p)?)?;
    let slopes_all_half = slopes_multiset(ell, p)?.is_all_half();
    let conclusion = legendre_value == -1 && psi_irreducible && slopes_all_half;
    Ok(DescentCertificate {
        ell,
        p,
        legendre_value,
        psi_irreducible,
        slopes_all_half,
        char_poly_middle: if conclusion { Some(0) } else { None },
        conclusion,
    })
}

/// The Jacobian's group order mod 4, read off the L-polynomial as P(1) mod 4.
pub fn jacobian_order_mod4(lp: &LPoly) -> u8 {
    let four = num_bigint::BigInt::from(4);
    let r = ((lp.eval_at_one() % &four) + &four) % &four;
    r.to_u8().expect("residue mod 4 fits in u8")
}

// ---- surveys ----

pub const SURVEY_LIMIT: u64 = 101;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurveyMode {
    PrimeSweep,
    PairSweep,
    PrimePowerSweep,
}

/// One prime degree: its all-half residue classes vs its primitive-root classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSweepRow {
    pub ell: u64,
    pub all_half_classes: Vec<u64>,
    pub primitive_root_classes: Vec<u64>,
    pub agree: bool,
}

/// One admissible degree pair and the residue classes passing the pair check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSweepRow {
    pub ell1: u64,
    pub ell2: u64,
    pub witnesses: Vec<u64>,
}

/// One prime power: all-half classes vs generators of the unit group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePowerRow {
    pub ell: u64,
    pub exponent: u32,
    pub all_half_classes: Vec<u64>,
    pub generator_classes: Vec<u64>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurveyReport {
    Primes(Vec<PrimeSweepRow>),
    Pairs(Vec<PairSweepRow>),
    PrimePowers(Vec<PrimePowerRow>),
}

/// Run one of the three slope surveys over primes ℓ ≡ 1 mod 4 up to `max`.
pub fn survey(mode: SurveyMode, max: u64) -> Result<SurveyReport> {
    if max > SURVEY_LIMIT {
        return Err(Error::LimitExceeded { requested: max, limit: SURVEY_LIMIT });
    }
    let primes: Vec<u64> = (5..=max).step_by(4).filter(|&l| is_prime(l)).collect();
    match mode {
        SurveyMode::PrimeSweep => {
            let mut rows = Vec::new();
            for &ell in &primes {
                let mut all_half = Vec::new();
                let mut prim = Vec::new();
                for c in (1..4 * ell).step_by(4) {
                    if gcd(c, ell) != 1 {
                        continue;
                    }
                    if slopes_multiset(ell, c)?.is_all_half() {
                        all_half.push(c);
                    }
                    if mult_order(c, ell)? == ell - 1 {
                        prim.push(c);
                    }
                }
                let agree = all_half == prim;
                rows.push(PrimeSweepRow {
                    ell,
                    all_half_classes: all_half,
                    primitive_root_classes: prim,
                    agree,
                });
            }
            Ok(SurveyReport::Primes(rows))
        }
        SurveyMode::PairSweep => {
            let mut rows = Vec::new();
            for (i, &l1) in primes.iter().enumerate() {
                for &l2 in &primes[i + 1..] {
                    if v2(l1 - 1) != v2(l2 - 1) {
                        continue;
                    }
                    let witnesses: Vec<u64> = check_pair(l1, l2)?.into_iter().collect();
                    rows.push(PairSweepRow { ell1: l1, ell2: l2, witnesses });
                }
            }
            Ok(SurveyReport::Pairs(rows))
        }
        SurveyMode::PrimePowerSweep => {
            let mut rows = Vec::new();
            for &ell in &primes {
                for exponent in [2u32, 3] {
                    if exponent == 3 && ell > 29 {
                        continue;
                    }
                    let d = ell.pow(exponent);
                    let phi = euler_phi(d);
                    let mut all_half = Vec::new();
                    let mut gens = Vec::new();
                    for c in (1..4 * d).step_by(4) {
                        if gcd(c, ell) != 1 {
                            continue;
                        }
                        if slopes2_multiset(d, c)?.is_all_half() {
                            all_half.push(c);
                        }
                        if mult_order(c, d)? == phi {
                            gens.push(c);
                        }
                    }
                    let agree = all_half == gens;
                    rows.push(PrimePowerRow {
                        ell,
                        exponent,
                        all_half_classes: all_half,
                        generator_classes: gens,
                        agree,
                    });
                }
            }
            Ok(SurveyReport::PrimePowers(rows))
        }
    }
}

// ---- tests ----
