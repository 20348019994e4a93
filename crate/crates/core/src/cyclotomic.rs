//! Exact arithmetic with roots of unity.
//!
//! A [`RootExp`] is a single root of unity e^{2πi num/den} stored as a reduced
//! fraction of a full turn, so -ζ is itself a `RootExp` (exponent shifted by
//! 1/2) and matrix entries never need ring arithmetic. A [`CycSum`] is a formal
//! integer combination of roots; equality is decided exactly by reducing the
//! difference modulo the n-th cyclotomic polynomial, with n the lcm of the
//! denominators. Floating-point evaluation is only used for display and for
//! character inner products.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;

use crate::arith::{gcd, lcm};

/// The root of unity e^{2πi num/den}, reduced, 0 ≤ num < den.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootExp {
    num: u64,
    den: u64,
}

impl RootExp {
    /// Canonicalises an arbitrary exponent num/den of a full turn.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let num = num.rem_euclid(den) as u64;
        let den = den as u64;
        if num == 0 {
            return RootExp { num: 0, den: 1 };
        }
        let g = gcd(num, den);
        RootExp {
            num: num / g,
            den: den / g,
        }
    }

    pub fn one() -> Self {
        RootExp { num: 0, den: 1 }
    }

    pub fn minus_one() -> Self {
        RootExp { num: 1, den: 2 }
    }

    pub fn is_one(self) -> bool {
        self.num == 0
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// Multiplicative order.
    pub fn order(self) -> u64 {
        self.den
    }

    pub fn mul(self, other: Self) -> Self {
        let den = lcm(self.den, other.den);
        let num = self.num as i64 * (den / self.den) as i64
            + other.num as i64 * (den / other.den) as i64;
        RootExp::new(num, den as i64)
    }

    pub fn inv(self) -> Self {
        RootExp::new(-(self.num as i64), self.den as i64)
    }

    pub fn conj(self) -> Self {
        self.inv()
    }

    /// Negation as a root: multiplication by e^{πi}.
    pub fn negate(self) -> Self {
        self.mul(RootExp::minus_one())
    }

    pub fn pow(self, e: i64) -> Self {
        RootExp::new(self.num as i64 * e, self.den as i64)
    }

    pub fn eval(self) -> Complex64 {
        let theta = 2.0 * std::f64::consts::PI * self.num as f64 / self.den as f64;
        Complex64::new(theta.cos(), theta.sin())
    }
}

impl PartialOrd for RootExp {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootExp {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // angle order; reduced fractions are equal only when identical
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Debug for RootExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({}/{})", self.num, self.den)
    }
}

impl fmt::Display for RootExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({}/{})", self.num, self.den)
    }
}

impl serde::Serialize for RootExp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RootExp", 2)?;
        st.serialize_field("num", &self.num)?;
        st.serialize_field("den", &self.den)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for RootExp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            num: i64,
            den: i64,
        }
        let raw = Raw::deserialize(d)?;
        if raw.den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(RootExp::new(raw.num, raw.den))
    }
}

/// Formal integer combination of roots of unity.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CycSum {
    terms: BTreeMap<RootExp, i128>,
}

impl CycSum {
    pub fn zero() -> Self {
        CycSum::default()
    }

    pub fn one() -> Self {
        CycSum::from_root(RootExp::one())
    }

    pub fn from_root(r: RootExp) -> Self {
        let mut s = CycSum::default();
        s.add_term(r, 1);
        s
    }

    pub fn from_int(k: i128) -> Self {
        let mut s = CycSum::default();
        s.add_term(RootExp::one(), k);
        s
    }

    pub fn add_term(&mut self, r: RootExp, mult: i128) {
        if mult == 0 {
            return;
        }
        let e = self.terms.entry(r).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.terms.remove(&r);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (RootExp, i128)> + '_ {
        self.terms.iter().map(|(r, m)| (*r, *m))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, m) in other.terms() {
            out.add_term(r, m);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, m) in other.terms() {
            out.add_term(r, -m);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = CycSum::default();
        for (r, m) in self.terms() {
            out.add_term(r, -m);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = CycSum::default();
        for (r1, m1) in self.terms() {
            for (r2, m2) in other.terms() {
                out.add_term(r1.mul(r2), m1 * m2);
            }
        }
        out
    }

    pub fn mul_root(&self, r: RootExp) -> Self {
        let mut out = CycSum::default();
        for (t, m) in self.terms() {
            out.add_term(t.mul(r), m);
        }
        out
    }

    pub fn scale(&self, k: i128) -> Self {
        let mut out = CycSum::default();
        if k == 0 {
            return out;
        }
        for (t, m) in self.terms() {
            out.add_term(t, m * k);
        }
        out
    }

    pub fn conj(&self) -> Self {
        let mut out = CycSum::default();
        for (t, m) in self.terms() {
            out.add_term(t.conj(), m);
        }
        out
    }

    pub fn eval(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (r, m) in self.terms() {
            acc += r.eval() * m as f64;
        }
        acc
    }

    /// lcm of the denominators appearing in the sum (1 for the empty sum).
    fn level(&self) -> u64 {
        self.terms.keys().fold(1u64, |acc, r| lcm(acc, r.den()))
    }

    /// Exact zero test: reduce modulo the n-th cyclotomic polynomial.
    pub fn is_zero(&self) -> bool {
        if self.terms.is_empty() {
            return true;
        }
        let n = self.level();
        let mut dense = vec![0i128; n as usize];
        for (r, m) in self.terms() {
            dense[(r.num() * (n / r.den())) as usize] += m;
        }
        let rem = reduce_mod_cyclotomic(dense, n);
        rem.iter().all(|&c| c == 0)
    }

    /// Exact equality.
    pub fn eq_exact(&self, other: &Self) -> bool {
        if self.terms == other.terms {
            return true;
        }
        self.sub(other).is_zero()
    }

    /// Exact extraction of a rational integer value, if the sum is one.
    pub fn as_integer(&self) -> Option<i128> {
        if self.terms.is_empty() {
            return Some(0);
        }
        if self.terms.len() == 1 {
            if let Some(m) = self.terms.get(&RootExp::one()) {
                return Some(*m);
            }
        }
        let n = self.level();
        let mut dense = vec![0i128; n as usize];
        for (r, m) in self.terms() {
            dense[(r.num() * (n / r.den())) as usize] += m;
        }
        let rem = reduce_mod_cyclotomic(dense, n);
        if rem.iter().skip(1).all(|&c| c == 0) {
            Some(rem[0])
        } else {
            None
        }
    }

    pub fn is_real_exact(&self) -> bool {
        self.eq_exact(&self.conj())
    }
}

impl fmt::Debug for CycSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (r, m) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{m}*{r}")?;
        }
        Ok(())
    }
}

/// Coefficients of the n-th cyclotomic polynomial, ascending degree.
///
/// Computed by dividing x^n - 1 by the cyclotomic polynomials of the proper
/// divisors of n; results are memoised process-wide.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i128> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<i128>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        vec![-1, 1]
    } else {
        let mut num = vec![0i128; n as usize + 1];
        num[0] = -1;
        num[n as usize] = 1;
        for d in 1..n {
            if n % d == 0 {
                num = poly_div_exact(&num, &cyclotomic_polynomial(d));
            }
        }
        num
    };
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// Exact division of integer polynomials (divisor monic up to sign).
fn poly_div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    debug_assert!(lead == 1 || lead == -1);
    let mut quot = vec![0i128; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd] / lead;
        quot[k] = c;
        if c != 0 {
            for (i, &dc) in den.iter().enumerate() {
                rem[k + i] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Remainder of a dense polynomial modulo the n-th cyclotomic polynomial.
fn reduce_mod_cyclotomic(mut v: Vec<i128>, n: u64) -> Vec<i128> {
    let phi = cyclotomic_polynomial(n);
    let d = phi.len() - 1;
    for k in (d..v.len()).rev() {
        let c = v[k];
        if c != 0 {
            for (i, &pc) in phi.iter().enumerate() {
                v[k - d + i] -= c * pc;
            }
        }
    }
    v.truncate(d);
    v
}

/// Polynomial in one variable with `CycSum` coefficients, ascending degree.
#[derive(Clone, Debug, Default)]
pub struct CycPoly {
    pub coeffs: Vec<CycSum>,
}

impl CycPoly {
    pub fn one() -> Self {
        CycPoly {
            coeffs: vec![CycSum::one()],
        }
    }

    pub fn from_int_coeffs(v: &[i64]) -> Self {
        CycPoly {
            coeffs: v.iter().map(|&c| CycSum::from_int(c as i128)).collect(),
        }
    }

    /// 1 + c T^k
    pub fn one_plus_term(c: CycSum, k: usize) -> Self {
        let mut coeffs = vec![CycSum::zero(); k + 1];
        coeffs[0] = CycSum::one();
        coeffs[k] = c;
        CycPoly { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return CycPoly { coeffs: vec![] };
        }
        let mut out = vec![CycSum::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.num_terms() == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.num_terms() == 0 {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        CycPoly { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CycPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Degree with exact-zero trailing coefficients ignored. Degree of an
    /// (exactly) zero polynomial is reported as 0.
    pub fn degree_exact(&self) -> usize {
        for k in (0..self.coeffs.len()).rev() {
            if !self.coeffs[k].is_zero() {
                return k;
            }
        }
        0
    }

    pub fn eq_exact(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = CycSum::zero();
        for k in 0..n {
            let a = self.coeffs.get(k).unwrap_or(&zero);
            let b = other.coeffs.get(k).unwrap_or(&zero);
            if !a.eq_exact(b) {
                return false;
            }
        }
        true
    }

    /// Exact extraction of rational-integer coefficients, trailing zeros
    /// trimmed to the exact degree.
    pub fn to_int_coeffs(&self) -> Option<Vec<i128>> {
        let d = self.degree_exact();
        let mut out = Vec::with_capacity(d + 1);
        for c in &self.coeffs[..=d] {
            out.push(c.as_integer()?);
        }
        Some(out)
    }

    pub fn is_real_exact(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real_exact())
    }

    pub fn eval_coeffs(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| c.eval()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rootexp_canonical() {
        assert_eq!(RootExp::new(2, 4), RootExp::new(1, 2));
        assert_eq!(RootExp::new(-1, 4), RootExp::new(3, 4));
        assert_eq!(RootExp::new(4, 4), RootExp::one());
        assert_eq!(RootExp::new(1, -2), RootExp::new(1, 2));
    }

    #[test]
    fn rootexp_arithmetic() {
        let z12 = RootExp::new(1, 12);
        assert_eq!(z12.pow(6), RootExp::minus_one());
        assert_eq!(z12.mul(z12.inv()), RootExp::one());
        assert_eq!(RootExp::new(1, 6).negate(), RootExp::new(2, 3));
        assert_eq!(RootExp::new(1, 3).conj(), RootExp::new(2, 3));
        assert_eq!(RootExp::new(1, 6).order(), 6);
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // degree is Euler phi
        for n in 1..=64u64 {
            let phi = (1..=n).filter(|&k| gcd(k, n) == 1).count();
            assert_eq!(cyclotomic_polynomial(n).len() - 1, phi);
        }
    }

    #[test]
    fn cycsum_zero_relations() {
        // 1 + z3 + z3^2 = 0
        let mut s = CycSum::zero();
        for k in 0..3 {
            s.add_term(RootExp::new(k, 3), 1);
        }
        assert!(s.is_zero());
        assert_eq!(s.as_integer(), Some(0));

        // z6 = 1 + z3 despite distinct term multisets
        let lhs = CycSum::from_root(RootExp::new(1, 6));
        let mut rhs = CycSum::one();
        rhs.add_term(RootExp::new(1, 3), 1);
        assert!(lhs.eq_exact(&rhs));
        assert!(!lhs.eq_exact(&CycSum::one()));
    }

    #[test]
    fn cycsum_integer_extraction() {
        let mut s = CycSum::from_root(RootExp::new(1, 5));
        for k in 2..5 {
            s.add_term(RootExp::new(k, 5), 1);
        }
        // sum of primitive 5th roots = -1
        assert_eq!(s.as_integer(), Some(-1));
        assert_eq!(CycSum::from_root(RootExp::new(1, 8)).as_integer(), None);
    }

    #[test]
    fn cycsum_eval_matches_exact() {
        let s = CycSum::from_root(RootExp::new(1, 6));
        let e = s.eval();
        assert!((e.re - 0.5).abs() < 1e-14);
        assert!((e.im - 0.75f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn cycpoly_products() {
        // prod over all 6th roots of (1 - zT) = 1 - T^6
        let mut p = CycPoly::one();
        for k in 0..6 {
            p = p.mul(&CycPoly::one_plus_term(
                CycSum::from_root(RootExp::new(k, 6)).neg(),
                1,
            ));
        }
        let mut expect = vec![0i64; 7];
        expect[0] = 1;
        expect[6] = -1;
        assert!(p.eq_exact(&CycPoly::from_int_coeffs(&expect)));
        assert_eq!(p.to_int_coeffs().unwrap(), vec![1, 0, 0, 0, 0, 0, -1]);
        assert_eq!(p.degree_exact(), 6);
        assert!(p.is_real_exact());
    }
}
