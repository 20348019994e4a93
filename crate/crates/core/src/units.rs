//! Floating-point evaluation of the sine-product units attached to a pair.
//!
//! This is a numeric sanity layer only: the values never feed the exact
//! pipeline. Evaluation is IEEE double precision.

use crate::error::{Error, Result};
use crate::group::FieldParams;

/// Evaluated unit, real and imaginary parts.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct UnitValue {
    pub re: f64,
    pub im: f64,
    pub precision_bits: u32,
}

/// The normalised sine bracket on Q/Z: 2 sin(a pi) for a in (0, 1) and
/// exactly 1 at a = 0. The argument is num/den reduced into [0, 1).
pub fn sin_bracket(num: i64, den: i64) -> Result<f64> {
    if den <= 0 {
        return Err(Error::InvalidParams("denominator must be positive".to_string()));
    }
    let r = num.rem_euclid(den);
    if r == 0 {
        return Ok(1.0);
    }
    Ok(2.0 * (std::f64::consts::PI * r as f64 / den as f64).sin())
}

/// The individual double-product ratio factors of the unit for odd p < q,
/// in row-major (i, j) order. Exposed so reorder-stability can be probed.
pub fn sine_product_factors(p: i64, q: i64) -> Result<Vec<f64>> {
    if p <= 2 || q <= p {
        return Err(Error::InvalidParams(
            "sine product factors need odd primes p < q".to_string(),
        ));
    }
    let mut factors = Vec::new();
    for i in 0..=(p - 1) / 2 {
        for j in 0..=(q - 1) / 2 {
            let top = sin_bracket(i * q + j, p * q)?;
            let bottom = sin_bracket(j * p + i, p * q)?;
            factors.push(top / bottom);
        }
    }
    Ok(factors)
}

/// The double sine product for odd p < q.
pub fn v_pq(p: i64, q: i64) -> Result<f64> {
    Ok(sine_product_factors(p, q)?.iter().product())
}

/// The sine product for p = 2, reading the stray index in the displayed
/// formula as 4j + 1. Kept behind an explicit opt-in because the display is
/// ambiguous.
pub fn v_2q(q: i64) -> Result<f64> {
    if q <= 2 {
        return Err(Error::InvalidParams("q must be an odd prime".to_string()));
    }
    let mut value = sin_bracket(1, 4)? / sin_bracket(1, 4 * q)?;
    for j in 0..=(q - 1) / 2 {
        let num = sin_bracket(j, 2 * q)? * sin_bracket(2 * j - 1, 4 * q)?;
        let den =
            sin_bracket(4 * j + 1, 4 * q)? * sin_bracket(j, q)? * sin_bracket(2 * j - 1, 2 * q)?;
        value *= num / den;
    }
    Ok(value)
}

/// The unit value for the pair: the square root of q* when p = -1 (purely
/// imaginary for q* < 0), the prefactored sine product for odd p, and the
/// p = 2 product only when the interpretation flag is set.
pub fn eval_unit(
    params: &FieldParams,
    precision_bits: u32,
    p2_interpretation: bool,
) -> Result<UnitValue> {
    if precision_bits > 53 {
        return Err(Error::Unsupported(
            "precision beyond IEEE double is not supported".to_string(),
        ));
    }
    let bits = 53;
    let pv = params.p.value();
    let qv = params.q.value();
    if pv == -1 {
        let star = params.q.star();
        return Ok(if star >= 0 {
            UnitValue {
                re: (star as f64).sqrt(),
                im: 0.0,
                precision_bits: bits,
            }
        } else {
            UnitValue {
                re: 0.0,
                im: ((-star) as f64).sqrt(),
                precision_bits: bits,
            }
        });
    }
    if pv == 2 {
        if !p2_interpretation {
            return Err(Error::Unsupported(
                "the p = 2 sine product needs the interpretation flag".to_string(),
            ));
        }
        let v = v_2q(qv)?;
        return Ok(UnitValue {
            re: v,
            im: 0.0,
            precision_bits: bits,
        });
    }
    let v = v_pq(pv, qv)?;
    let prefactor = match (pv % 4, qv % 4) {
        (1, 1) => 1.0,
        (1, 3) => (pv as f64).sqrt(),
        (3, 1) => (qv as f64).sqrt(),
        _ => ((pv * qv) as f64).sqrt(),
    };
    Ok(UnitValue {
        re: prefactor * v,
        im: 0.0,
        precision_bits: bits,
    })
}
