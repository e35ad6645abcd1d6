//! Machine-readable payloads for exact values and results.
//!
//! Every exact value serializes to `{text, minpoly, interval, decimal}`;
//! `text` re-parses (see [`parse_value`]) to an equal value, so pipelines can
//! round-trip results without decimal loss. Coefficients are emitted as
//! strings because they routinely exceed 64 bits.

use crate::cf::Scanner;
use crate::constructions::GapEndpointPair;
use crate::exact::{QuadSurd, Rational, SurdSum};
use crate::spectra::{SpectrumResult, Witness};
use crate::verifiers::{AdmissibilityReport, AdmissibilityVerdict};
use crate::{Error, Result};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Decimal places used in the `decimal` field.
pub const DECIMAL_PLACES: usize = 30;

/// JSON for an exact value: canonical text, minimal-polynomial coefficients
/// (ascending, as strings), an isolating interval, and a 30-place decimal.
pub fn value_json(v: &SurdSum) -> Value {
    let iv = v.refine(64);
    let minpoly: Value = match v.minpoly() {
        Ok(coeffs) => Value::Array(
            coeffs
                .iter()
                .map(|c| Value::String(c.to_string()))
                .collect(),
        ),
        Err(_) => Value::Null,
    };
    json!({
        "text": v.to_string(),
        "minpoly": minpoly,
        "interval": {
            "lo": iv.lo().to_string(),
            "hi": iv.hi().to_string(),
        },
        "decimal": v.decimal(DECIMAL_PLACES),
    })
}

pub fn quadsurd_json(q: &QuadSurd) -> Value {
    value_json(&SurdSum::from_quadsurd(q))
}

pub fn spectrum_json(r: &SpectrumResult) -> Value {
    json!({
        "value": value_json(&r.value),
        "attained": r.attained,
        "witness": match r.witness {
            Witness::Index(i) => json!(i),
            Witness::Limit => json!("limit"),
        },
        "window": r.certification_window,
    })
}

pub fn gap_json(pair: &GapEndpointPair) -> Value {
    json!({
        "n": pair.n,
        "alpha_star": value_json(&pair.alpha_star),
        "beta": quadsurd_json(&pair.beta),
        "gap_width_decimal": pair.gap_width().decimal(DECIMAL_PLACES),
    })
}

pub fn admissibility_json(rep: &AdmissibilityReport, target: &SurdSum) -> Value {
    json!({
        "target": value_json(target),
        "max_period": rep.max_period,
        "alphabet_max": rep.alphabet_max,
        "pruned_by_pattern": rep.pruned_by_pattern,
        "candidates_checked": rep.candidates_checked,
        "candidates_pruned": rep.candidates_pruned,
        "verdict": match rep.verdict {
            AdmissibilityVerdict::WitnessFound => "witness-found",
            AdmissibilityVerdict::Exhausted => "exhausted",
        },
        "witness": rep.witness.as_ref().map(|w| w.letters().to_vec()),
        "note": "an exhaustion verdict certifies absence only up to max_period",
    })
}

fn scan_rational(sc: &mut Scanner) -> Result<Rational> {
    let num = sc.integer()?;
    if sc.try_eat('/') {
        let den = sc.integer()?;
        if den == BigInt::from(0) {
            return Err(sc.error("zero denominator"));
        }
        Ok(Rational::new(num, den))
    } else {
        Ok(Rational::from(num))
    }
}

fn scan_sqrt(sc: &mut Scanner) -> Result<BigInt> {
    for c in "sqrt(".chars() {
        sc.eat(c)?;
    }
    let d = sc.integer()?;
    sc.eat(')')?;
    Ok(d)
}

/// Parse the canonical text of an exact value: either the surd form
/// `(a + b*sqrt(d))/c` or the sum form `base + c1*sqrt(d1) + c2*sqrt(d2) + …`
/// with rational coefficients.
pub fn parse_value(input: &str) -> Result<SurdSum> {
    let mut sc = Scanner::new(input);
    let value = if sc.peek() == Some('(') {
        sc.eat('(')?;
        let a = sc.integer()?;
        sc.eat('+')?;
        let b = sc.integer()?;
        sc.eat('*')?;
        let d = scan_sqrt(&mut sc)?;
        sc.eat(')')?;
        sc.eat('/')?;
        let c = sc.integer()?;
        SurdSum::from_quadsurd(&QuadSurd::new(a, b, c, d)?)
    } else {
        let base = scan_rational(&mut sc)?;
        let mut sum = SurdSum::from_rational(base);
        while sc.try_eat('+') {
            let coeff = scan_rational(&mut sc)?;
            sc.eat('*')?;
            let d = scan_sqrt(&mut sc)?;
            let term = QuadSurd::new(
                BigInt::from(0),
                coeff.numer().clone(),
                coeff.denom().clone(),
                d,
            )?;
            sum = sum.add(&SurdSum::from_quadsurd(&term));
        }
        sum
    };
    if !sc.at_end() {
        return Err(Error::Parse {
            pos: sc.pos,
            msg: "trailing input after value".into(),
        });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn qs(a: i64, b: i64, c: i64, d: i64) -> QuadSurd {
        QuadSurd::new(a.into(), b.into(), c.into(), d.into()).unwrap()
    }

    #[test]
    fn printed_values_reparse_equal() {
        let vals = [
            SurdSum::from_quadsurd(&qs(-4, 1, 4, 30)),
            SurdSum::make(&qs(0, 1, 1, 2), &qs(-1, 2, 3, 3)),
            SurdSum::from_rational(Rational::new(BigInt::from(-7), BigInt::from(3))),
            crate::constructions::theorem1_lambda0(),
        ];
        for v in &vals {
            let text = v.to_string();
            let back = parse_value(&text).unwrap();
            assert_eq!(back.compare(v), Ordering::Equal, "text {text}");
        }
    }

    #[test]
    fn value_json_shape() {
        let v = SurdSum::from_quadsurd(&qs(0, 4, 7, 30));
        let j = value_json(&v);
        assert_eq!(j["minpoly"].as_array().unwrap().len(), 3); // 49x² − 480
        assert!(j["decimal"].as_str().unwrap().starts_with("3.1298431857"));
        let lo: f64 = j["interval"]["lo"]
            .as_str()
            .unwrap()
            .split('/')
            .map(|t| t.parse::<f64>().unwrap())
            .reduce(|a, b| a / b)
            .unwrap();
        assert!((lo - 3.1298).abs() < 1e-3);
    }
}
