//! One function per subcommand, each producing (inputs, result, cost estimate).

use chebmax_core::classify::{
    classify, descent_certificate, jacobian_order_mod4, survey, SurveyMode, SurveyReport, Verdict,
};
use chebmax_core::cmgal::{check_pair, slopes2_multiset, slopes_multiset};
use chebmax_core::curve::CurveSpec;
use chebmax_core::intpoly::{chebyshev, reduce_mod, ZPoly};
use chebmax_core::zeta::{
    coeff_strings, counts_from_lpoly, is_maximal_from_lpoly, newton_slopes, SlopeMultiset,
};
use chebmax_core::{Error, Result};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::args::{Method, SurveyKind};
use crate::engine::{factored_form, lpoly_for_curve, parallel_count, render_factored};

pub type CmdOutput = (Value, Value, Option<u128>);

fn multiset_json(slopes: &SlopeMultiset) -> Value {
    let mut map = Map::new();
    for (slope, len) in slopes.iter() {
        map.insert(slope.to_string(), Value::from(*len));
    }
    Value::Object(map)
}

fn verdict_json(verdict: &Verdict) -> Value {
    json!({
        "status": verdict.status.to_string(),
        "rule": verdict.rule,
        "exponent_multiplier": verdict.exponent_multiplier,
        "evidence": verdict.evidence,
    })
}

// ---- subcommands ----

pub fn cmd_cheb(d: u32, modulus: Option<u64>, ascending: bool) -> Result<CmdOutput> {
    let poly = chebyshev(d)?;
    let poly = match modulus {
        Some(p) => {
            let reduced = reduce_mod(&poly, p)?;
            let coeffs: Vec<i64> = reduced.coeffs().iter().map(|&c| c as i64).collect();
            ZPoly::from_i64(&coeffs)
        }
        None => poly,
    };
    let display = if ascending { format!("{poly:#}") } else { format!("{poly}") };
    let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
    let inputs = json!({"d": d, "mod": modulus, "ascending": ascending});
    let payload = json!({"display": display, "degree": d, "coeffs": coeffs});
    Ok((inputs, payload, None))
}

pub fn cmd_count(d: u32, p: u64, n: u32, budget: u64, threads: usize) -> Result<CmdOutput> {
    let spec = CurveSpec::new(d, p, n)?;
    let count = parallel_count(&spec, budget, threads)?;
    let cost = spec.order_u128().saturating_mul(u128::from(d));
    let inputs = json!({"d": d, "p": p, "n": n});
    let payload = json!({
        "count": count,
        "field_order": spec.order_u128() as u64,
        "genus": spec.genus(),
        "points_at_infinity": spec.points_at_infinity(),
    });
    Ok((inputs, payload, Some(cost)))
}

pub fn cmd_lpoly(d: u32, p: u64, budget: u64, threads: usize) -> Result<CmdOutput> {
    let (lp, counts) = lpoly_for_curve(d, p, budget, threads)?;
    let factored = factored_form(&lp).map(|parts| render_factored(&parts));
    let cost = BigInt::from(p).pow(lp.genus()) * d;
    let cost = u128::try_from(cost).unwrap_or(u128::MAX);
    let inputs = json!({"d": d, "p": p});
    let payload = json!({
        "q": p,
        "genus": lp.genus(),
        "coeffs": coeff_strings(&lp),
        "counts": counts,
        "newton_slopes": multiset_json(&newton_slopes(&lp)),
        "factored": factored,
        "jacobian_order_mod4": jacobian_order_mod4(&lp),
    });
    Ok((inputs, payload, Some(cost)))
}

pub fn cmd_slopes(ell: u64, p: u64) -> Result<CmdOutput> {
    let slopes = slopes_multiset(ell, p)?;
    let inputs = json!({"ell": ell, "p": p});
    let payload = json!({
        "slopes": multiset_json(&slopes),
        "all_half": slopes.is_all_half(),
        "total_length": slopes.total_length(),
    });
    Ok((inputs, payload, None))
}

pub fn cmd_slopes2(d: u64, p: u64) -> Result<CmdOutput> {
    let slopes = slopes2_multiset(d, p)?;
    let inputs = json!({"d": d, "p": p});
    let payload = json!({
        "slopes": multiset_json(&slopes),
        "all_half": slopes.is_all_half(),
        "total_length": slopes.total_length(),
    });
    Ok((inputs, payload, None))
}

pub fn cmd_maximal(
    d: u32,
    p: u64,
    n: u32,
    method: Method,
    budget: u64,
    threads: usize,
) -> Result<CmdOutput> {
    let spec = CurveSpec::new(d, p, n)?;
    let inputs = json!({
        "d": d,
        "p": p,
        "n": n,
        "method": match method {
            Method::Count => "count",
            Method::Lpoly => "lpoly",
            Method::Classify => "classify",
        },
    });
    match method {
        Method::Count => {
            if n % 2 == 1 {
                return Err(Error::OddExtension(n));
            }
            let count = parallel_count(&spec, budget, threads)?;
            let bound = weil_bound(&spec);
            let payload = json!({
                "maximal": BigInt::from(count) == bound,
                "count": count,
                "bound": bound.to_string(),
            });
            let cost = spec.order_u128().saturating_mul(u128::from(d));
            Ok((inputs, payload, Some(cost)))
        }
        Method::Lpoly => {
            let (lp, _) = lpoly_for_curve(d, p, budget, threads)?;
            let maximal = is_maximal_from_lpoly(&lp, n)?;
            let payload = json!({
                "maximal": maximal,
                "count": counts_from_lpoly(&lp, n).to_string(),
                "bound": weil_bound(&spec).to_string(),
                "lpoly": coeff_strings(&lp),
            });
            let cost = BigInt::from(p).pow(lp.genus()) * d;
            Ok((inputs, payload, Some(u128::try_from(cost).unwrap_or(u128::MAX))))
        }
        Method::Classify => {
            let verdict = classify(u64::from(d), p)?;
            let payload = json!({
                "maximal": verdict.maximal_over(n),
                "verdict": verdict_json(&verdict),
            });
            Ok((inputs, payload, None))
        }
    }
}

// q + 1 + 2 g sqrt(q), the count a maximal curve over F_{p^n} attains (n even)
fn weil_bound(spec: &CurveSpec) -> BigInt {
    let half = BigInt::from(spec.p()).pow(spec.n() / 2);
    BigInt::from(spec.order_u128()) + 1 + 2 * spec.genus() * half
}

pub fn cmd_classify(d: u64, p: u64) -> Result<CmdOutput> {
    let verdict = classify(d, p)?;
    let inputs = json!({"d": d, "p": p});
    Ok((inputs, verdict_json(&verdict), None))
}

pub fn cmd_descent(ell: u64, p: u64) -> Result<CmdOutput> {
    let cert = descent_certificate(ell, p)?;
    let inputs = json!({"ell": ell, "p": p});
    let payload = json!({
        "legendre_value": cert.legendre_value,
        "psi_irreducible": cert.psi_irreducible,
        "slopes_all_half": cert.slopes_all_half,
        "char_poly_middle": cert.char_poly_middle,
        "conclusion": cert.conclusion,
    });
    Ok((inputs, payload, None))
}

pub fn cmd_survey(kind: SurveyKind, max: u64) -> Result<CmdOutput> {
    let (mode, name) = match kind {
        SurveyKind::PrimeSweep => (SurveyMode::PrimeSweep, "prime-sweep"),
        SurveyKind::PairSweep => (SurveyMode::PairSweep, "pair-sweep"),
        SurveyKind::PrimePowerSweep => (SurveyMode::PrimePowerSweep, "prime-power-sweep"),
    };
    let report = survey(mode, max)?;
    let inputs = json!({"mode": name, "max": max});
    let payload = match report {
        SurveyReport::Primes(rows) => {
            let all_agree = rows.iter().all(|r| r.agree);
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "ell": r.ell,
                        "all_half_classes": r.all_half_classes,
                        "primitive_root_classes": r.primitive_root_classes,
                        "agree": r.agree,
                    })
                })
                .collect();
            json!({"rows": rows, "all_agree": all_agree})
        }
        SurveyReport::Pairs(rows) => {
            let total: usize = rows.iter().map(|r| r.witnesses.len()).sum();
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| json!({"ell1": r.ell1, "ell2": r.ell2, "witnesses": r.witnesses}))
                .collect();
            json!({"rows": rows, "total_witnesses": total})
        }
        SurveyReport::PrimePowers(rows) => {
            let all_agree = rows.iter().all(|r| r.agree);
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "ell": r.ell,
                        "exponent": r.exponent,
                        "all_half_classes": r.all_half_classes,
                        "generator_classes": r.generator_classes,
                        "agree": r.agree,
                    })
                })
                .collect();
            json!({"rows": rows, "all_agree": all_agree})
        }
    };
    Ok((inputs, payload, None))
}

pub fn cmd_check_pairs(ell1: u64, ell2: u64) -> Result<CmdOutput> {
    let witnesses: Vec<u64> = check_pair(ell1, ell2)?.into_iter().collect();
    let inputs = json!({"ell": ell1, "ell2": ell2});
    let payload = json!({"witnesses": witnesses, "count": witnesses.len()});
    Ok((inputs, payload, None))
}

// ---- tests ----

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheb_display_matches_the_integer_polynomial() {
        let (_, payload, _) = cmd_cheb(5, None, false).unwrap();
        assert_eq!(payload["display"], "x^5 - 5*x^3 + 5*x");
        assert_eq!(payload["coeffs"], json!(["0", "5", "0", "-5", "0", "1"]));
        let (_, payload, _) = cmd_cheb(5, None, true).unwrap();
        assert_eq!(payload["display"], "5*x - 5*x^3 + x^5");
        let (_, payload, _) = cmd_cheb(5, Some(5), false).unwrap();
        assert_eq!(payload["display"], "x^5");
    }

    #[test]
    fn count_reports_curve_data() {
        let (_, payload, cost) = cmd_count(5, 13, 2, 1_000_000, 2).unwrap();
        assert_eq!(payload["count"], 170);
        assert_eq!(payload["field_order"], 169);
        assert_eq!(payload["genus"], 2);
        assert_eq!(payload["points_at_infinity"], 1);
        assert_eq!(cost, Some(169 * 5));
    }

    #[test]
    fn lpoly_carries_factored_display_and_slopes() {
        let (_, payload, _) = cmd_lpoly(5, 13, 1_000_000, 1).unwrap();
        assert_eq!(payload["coeffs"], json!(["1", "0", "0", "0", "169"]));
        assert_eq!(payload["factored"], "(p^2 x^4 + 1)");
        assert_eq!(payload["newton_slopes"], json!({"1/2": 4}));
        assert_eq!(payload["jacobian_order_mod4"], 2);
    }

    #[test]
    fn maximal_methods_agree_on_a_known_case() {
        for method in [Method::Count, Method::Lpoly, Method::Classify] {
            let (_, payload, _) = cmd_maximal(5, 13, 4, method, 1_000_000, 1).unwrap();
            assert_eq!(payload["maximal"], true, "method {method:?}");
        }
        let (_, payload, _) = cmd_maximal(5, 13, 2, Method::Count, 1_000_000, 1).unwrap();
        assert_eq!(payload["maximal"], false);
        assert_eq!(payload["count"], 170);
        assert_eq!(payload["bound"], "222");
    }

    #[test]
    fn slope_payload_uses_fraction_keys() {
        let (_, payload, _) = cmd_slopes(17, 53).unwrap();
        assert_eq!(payload["slopes"], json!({"1/4": 8, "3/4": 8}));
        assert_eq!(payload["all_half"], false);
        assert_eq!(payload["total_length"], 16);
    }

    #[test]
    fn survey_payload_summarises_rows() {
        let (_, payload, _) = cmd_survey(SurveyKind::PairSweep, 13).unwrap();
        assert_eq!(payload["total_witnesses"], 0);
        assert_eq!(payload["rows"][0]["ell1"], 5);
        assert_eq!(payload["rows"][0]["ell2"], 13);
    }

    #[test]
    fn odd_extensions_are_rejected_for_counting_methods() {
        assert!(matches!(
            cmd_maximal(5, 13, 3, Method::Count, 1_000_000, 1),
            Err(Error::OddExtension(3))
        ));
        assert!(matches!(
            cmd_maximal(5, 13, 3, Method::Lpoly, 1_000_000, 1),
            Err(Error::OddExtension(3))
        ));
    }
}
