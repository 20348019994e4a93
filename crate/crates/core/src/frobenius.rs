//! Decomposition and Frobenius data for the p = -1 family.
//!
//! Everything here concerns the quadratic layer over the cyclotomic field of
//! conductor 4q: ramification of 2 and q in it, Frobenius classes downstairs
//! determined by congruences, and their lifts upstairs. A lift is pinned down
//! exactly when the downstairs Frobenius lands in the subgroup generated by
//! the q-role generator with an even exponent (or is trivial); all remaining
//! classes carry both candidates, which give identical local factors -- the
//! consumer asserts that rather than guessing.

use crate::arith::{self, discrete_log, in_p0, legendre, mod_pow, sqrt_mod, SElement};
use crate::error::{Error, Result};
use crate::group::{closure, FieldParams, GroupElement};

/// Splitting behaviour of a rational prime in the quadratic layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecompositionType {
    Ramified,
    Split,
    Inert,
    /// Primes not dividing 2q, where the split/inert distinction in the
    /// quadratic layer is not needed separately.
    UnramifiedGeneric,
}

impl std::fmt::Display for DecompositionType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DecompositionType::Ramified => "ramified",
            DecompositionType::Split => "split",
            DecompositionType::Inert => "inert",
            DecompositionType::UnramifiedGeneric => "unramified_generic",
        };
        write!(f, "{s}")
    }
}

fn require_p_minus_one(params: &FieldParams) -> Result<()> {
    if params.p.value() != -1 {
        return Err(Error::Unsupported(format!(
            "Frobenius and L-function machinery covers the p = -1 family only, got p = {}",
            params.p.value()
        )));
    }
    Ok(())
}

/// Behaviour of 2 in the quadratic layer: ramified when q = 2 or (2/q) = -1;
/// otherwise split iff q* = 1 mod 16 and inert iff q* = 9 mod 16.
pub fn decomposition_at_2(params: &FieldParams) -> Result<DecompositionType> {
    require_p_minus_one(params)?;
    let q = params.q;
    if q.value() == 2 {
        return Ok(DecompositionType::Ramified);
    }
    if legendre(2, q)? == -1 {
        return Ok(DecompositionType::Ramified);
    }
    let r = (q.star() - 1).rem_euclid(16);
    debug_assert!(r % 8 == 0);
    Ok(if r == 0 {
        DecompositionType::Split
    } else {
        DecompositionType::Inert
    })
}

/// Behaviour of q in the quadratic layer: ramified iff q = 3 mod 4, split
/// iff q = 1 mod 8, inert iff q = 5 mod 8.
pub fn decomposition_at_q(params: &FieldParams) -> Result<DecompositionType> {
    require_p_minus_one(params)?;
    let qv = params.q.value();
    if qv == 2 {
        return Err(Error::Unsupported(
            "decomposition at q requires q odd".to_string(),
        ));
    }
    Ok(match qv % 8 {
        3 | 7 => DecompositionType::Ramified,
        1 => DecompositionType::Split,
        _ => DecompositionType::Inert,
    })
}

/// Splitting type of any prime in the quadratic layer.
pub fn decomposition_at(params: &FieldParams, ell: u64) -> Result<DecompositionType> {
    require_p_minus_one(params)?;
    let qv = params.q.value() as u64;
    if ell == 2 {
        decomposition_at_2(params)
    } else if ell == qv {
        decomposition_at_q(params)
    } else {
        Ok(DecompositionType::UnramifiedGeneric)
    }
}

pub fn is_ramified(params: &FieldParams, ell: u64) -> Result<bool> {
    Ok(decomposition_at(params, ell)? == DecompositionType::Ramified)
}

/// Frobenius class downstairs as the exponent pair (a, b): the class fixes
/// the 4q-th roots of unity up to l = (-1)^a mod 4 and l = g^b mod q.
///
/// For l = 2 the class is taken modulo inertia with the convention that it
/// fixes the fourth roots of unity (a = 0); when q = 3 mod 4 the exponent is
/// normalised to b = 2 mod 4 by adding q - 1 when 4 | b, which may push it
/// beyond q - 2 (the congruence l = g^b mod q still holds).
pub fn frobenius_in_g(params: &FieldParams, ell: u64) -> Result<(u8, u64)> {
    require_p_minus_one(params)?;
    let qv = params.q.value();
    if ell as i64 == qv {
        return Err(Error::Domain(
            "the Frobenius class at q is trivial; use the decomposition data".to_string(),
        ));
    }
    if qv == 2 {
        if ell == 2 {
            return Err(Error::Domain(
                "the Frobenius class at q is trivial; use the decomposition data".to_string(),
            ));
        }
        // the q-role generator sends zeta_8 to zeta_8^5
        return Ok(match ell % 8 {
            1 => (0, 0),
            3 => (1, 1),
            5 => (0, 1),
            7 => (1, 0),
            _ => unreachable!("odd prime"),
        });
    }
    let g = params.root_q.expect("odd q has a primitive root");
    if ell == 2 {
        let mut b = discrete_log(qv, g, 2)?;
        if qv % 4 == 3 && b % 4 == 0 {
            b += (qv - 1) as u64;
        }
        return Ok((0, b));
    }
    let a = if ell % 4 == 3 { 1 } else { 0 };
    let b = discrete_log(qv, g, ell as i64)?;
    Ok((a, b))
}

/// A Frobenius lift upstairs: either pinned exactly, or a pair of candidates
/// differing by the sign element whose local contributions coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrobLift {
    Exact(GroupElement),
    Ambiguous(GroupElement),
}

impl FrobLift {
    /// Candidate elements (one or two).
    pub fn candidates(&self, params: &FieldParams) -> Vec<GroupElement> {
        match self {
            FrobLift::Exact(x) => vec![*x],
            FrobLift::Ambiguous(x) => {
                vec![*x, params.multiply(*x, GroupElement::EPSILON)]
            }
        }
    }
}

/// Frobenius data at an unramified prime.
#[derive(Debug, Clone)]
pub struct FrobeniusData {
    pub ell: u64,
    pub a: u8,
    pub b: u64,
    /// Sign resolving the lift at odd l = 1 mod 4 with even b.
    pub u_ell: Option<i32>,
    /// Sign resolving the lift at l = 2 (q odd, 2 unramified).
    pub u_q: Option<i32>,
    pub lift: FrobLift,
}

/// The sign u_q resolving the lift of the Frobenius at 2: +1 exactly when
/// q is outside the A^2 + 64 B^2 set and 16 does not divide q* - 1, or q is
/// inside and 16 divides.
pub fn u_q_sign(params: &FieldParams) -> Result<i32> {
    require_p_minus_one(params)?;
    let q = params.q;
    if q.value() == 2 || legendre(2, q)? != 1 {
        return Err(Error::Domain(
            "u_q is defined only when 2 is unramified in the quadratic layer".to_string(),
        ));
    }
    let p0 = in_p0(q.value() as u64);
    let sixteen = (q.star() - 1).rem_euclid(16) == 0;
    Ok(if p0 == sixteen { 1 } else { -1 })
}

/// The sign u_l = (alpha/l) (-1)^(b/2) for odd l = 1 mod 4 with even b,
/// where alpha^2 = q* mod l.
pub fn u_ell_sign(params: &FieldParams, ell: u64, b: u64) -> Result<i32> {
    let l = SElement::new(ell as i64)?;
    let alpha = sqrt_mod(params.q.star(), ell as i64)?;
    let sym = legendre(alpha, l)?;
    Ok(if b % 4 == 0 { sym } else { -sym })
}

/// The lift of the Frobenius class at an unramified prime.
pub fn frobenius_lift(params: &FieldParams, ell: u64) -> Result<FrobeniusData> {
    require_p_minus_one(params)?;
    if is_ramified(params, ell)? {
        return Err(Error::Domain(format!(
            "no Frobenius class: {ell} is ramified in the quadratic layer"
        )));
    }
    let qv = params.q.value();
    let (_, qi) = params.twist;
    let sq = params.generator_element(qi);
    let sm1 = params.generator_element(0);

    if qv == 2 {
        let (a, b) = frobenius_in_g(params, ell)?;
        let base = params.multiply(params.pow(sm1, a as i64), params.pow(sq, b as i64));
        if ell % 8 == 1 {
            // pinned by the fourth power residue of 2
            let quartic = mod_pow(2, (ell - 1) / 4, ell) == 1;
            let lift = if quartic {
                GroupElement::IDENTITY
            } else {
                GroupElement::EPSILON
            };
            return Ok(FrobeniusData {
                ell,
                a,
                b,
                u_ell: Some(if quartic { 1 } else { -1 }),
                u_q: None,
                lift: FrobLift::Exact(lift),
            });
        }
        return Ok(FrobeniusData {
            ell,
            a,
            b,
            u_ell: None,
            u_q: None,
            lift: FrobLift::Ambiguous(base),
        });
    }

    if ell as i64 == qv {
        // q = 1 mod 4 here (q = 3 mod 4 is ramified); trivial downstairs
        let lift = if qv % 8 == 1 {
            GroupElement::IDENTITY
        } else {
            GroupElement::EPSILON
        };
        return Ok(FrobeniusData {
            ell,
            a: 0,
            b: 0,
            u_ell: None,
            u_q: None,
            lift: FrobLift::Exact(lift),
        });
    }

    if ell == 2 {
        let (a, b) = frobenius_in_g(params, ell)?;
        let uq = u_q_sign(params)?;
        let mut lift = params.pow(sq, b as i64);
        if uq == -1 {
            lift = params.multiply(lift, GroupElement::EPSILON);
        }
        return Ok(FrobeniusData {
            ell,
            a,
            b,
            u_ell: None,
            u_q: Some(uq),
            lift: FrobLift::Exact(lift),
        });
    }

    let (a, b) = frobenius_in_g(params, ell)?;
    let base = params.multiply(params.pow(sm1, a as i64), params.pow(sq, b as i64));
    if a == 0 && b % 2 == 0 {
        let u = u_ell_sign(params, ell, b)?;
        let lift = if u == 1 {
            base
        } else {
            params.multiply(base, GroupElement::EPSILON)
        };
        Ok(FrobeniusData {
            ell,
            a,
            b,
            u_ell: Some(u),
            u_q: None,
            lift: FrobLift::Exact(lift),
        })
    } else {
        Ok(FrobeniusData {
            ell,
            a,
            b,
            u_ell: None,
            u_q: None,
            lift: FrobLift::Ambiguous(base),
        })
    }
}

/// An inertia-subgroup candidate upstairs.
#[derive(Debug, Clone)]
pub struct InertiaCandidate {
    pub gens: Vec<GroupElement>,
    pub elements: Vec<GroupElement>,
}

/// Inertia subgroup candidates upstairs at a prime. Exactly one candidate at
/// primes whose ramification pins it (the sign element joins exactly at
/// primes ramified in the quadratic layer); two candidates differing by the
/// sign twist of the generator otherwise.
pub fn inertia_lift(params: &FieldParams, ell: u64) -> Result<Vec<InertiaCandidate>> {
    require_p_minus_one(params)?;
    let qv = params.q.value();
    let make = |gens: Vec<GroupElement>| {
        let elements = closure(params, &gens);
        InertiaCandidate { gens, elements }
    };
    let (_, qi) = params.twist;
    let sm1 = params.generator_element(0);
    let sq = params.generator_element(qi);
    let eps = GroupElement::EPSILON;

    if qv == 2 && ell == 2 {
        // totally ramified downstairs and ramified in the quadratic layer
        return Ok(vec![make(vec![sm1, sq, eps])]);
    }
    if ell == 2 {
        return Ok(if is_ramified(params, 2)? {
            vec![make(vec![sm1, eps])]
        } else {
            vec![
                make(vec![sm1]),
                make(vec![params.multiply(sm1, eps)]),
            ]
        });
    }
    if ell as i64 == qv {
        return Ok(if is_ramified(params, ell)? {
            vec![make(vec![sq, eps])]
        } else {
            vec![make(vec![sq]), make(vec![params.multiply(sq, eps)])]
        });
    }
    Ok(vec![make(vec![])])
}

/// Torsion bridge used by Prop-level tests: for q = 1 mod 4 with 2 a square
/// mod q, 4 | b_2 iff 2^((q-1)/4) = 1 mod q iff q is of the A^2 + 64 B^2 form.
pub fn b2_parity_matches_p0(q: i64) -> Result<bool> {
    let g = arith::primitive_root(q)?;
    let b2 = discrete_log(q, g, 2)?;
    let quartic = mod_pow(2, (q as u64 - 1) / 4, q as u64) == 1;
    Ok((b2 % 4 == 0) == quartic && quartic == in_p0(q as u64))
}
