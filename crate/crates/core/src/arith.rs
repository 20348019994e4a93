//! Deterministic number-theoretic primitives: residue symbols, primitive
//! roots, discrete logarithms, modular square roots and prime machinery.
//!
//! Conventions fixed here pin down every label used downstream: the symbol
//! `(a/2) = (a/-1) = +1`, the smallest positive primitive root, and the
//! smaller of the two square roots mod an odd prime.

use crate::error::{Error, Result};

/// `base^exp mod m` via 128-bit intermediate products.
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m > 0);
    if m == 1 {
        return 0;
    }
    let mut base = (base % m) as u128;
    let m = m as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin, valid for all `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// An element of the index set S = {-1} ∪ {prime numbers}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct SElement(i64);

impl SElement {
    pub fn new(value: i64) -> Result<Self> {
        if value == -1 || (value >= 2 && is_prime(value as u64)) {
            Ok(SElement(value))
        } else {
            Err(Error::InvalidParams(format!(
                "{value} is neither -1 nor a prime number"
            )))
        }
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn is_odd_prime(self) -> bool {
        self.0 > 2
    }

    /// 4, 8 or p itself for p = -1, 2, odd prime.
    pub fn bar(self) -> i64 {
        match self.0 {
            -1 => 4,
            2 => 8,
            p => p,
        }
    }

    /// -1, 2 or (-1)^((p-1)/2) p for p = -1, 2, odd prime.
    pub fn star(self) -> i64 {
        match self.0 {
            -1 => -1,
            2 => 2,
            p => {
                if p % 4 == 1 {
                    p
                } else {
                    -p
                }
            }
        }
    }
}

/// Quadratic residue symbol with the convention `(a/2) = (a/-1) = +1`.
///
/// For an odd prime `p` this is the Legendre symbol, computed by Euler's
/// criterion; `p | a` is rejected rather than mapped to 0.
pub fn legendre(a: i64, p: SElement) -> Result<i32> {
    let pv = p.value();
    if pv == -1 || pv == 2 {
        return Ok(1);
    }
    let r = a.rem_euclid(pv) as u64;
    if r == 0 {
        return Err(Error::Domain(
            "symbol undefined at zero residue".to_string(),
        ));
    }
    let e = mod_pow(r, (pv as u64 - 1) / 2, pv as u64);
    Ok(if e == 1 { 1 } else { -1 })
}

/// p* for p in S.
pub fn p_star(p: SElement) -> i64 {
    p.star()
}

/// The unique isomorphism {±1} → Z/2.
pub fn log_minus_one(sym: i32) -> u8 {
    debug_assert!(sym == 1 || sym == -1);
    if sym == 1 {
        0
    } else {
        1
    }
}

/// Smallest positive primitive root modulo an odd prime `q`.
pub fn primitive_root(q: i64) -> Result<i64> {
    if q < 3 || !is_prime(q as u64) {
        return Err(Error::InvalidParams(format!("{q} is not an odd prime")));
    }
    let qm1 = (q - 1) as u64;
    let prime_factors = factorize(qm1);
    'candidate: for g in 2..q {
        for &r in &prime_factors {
            if mod_pow(g as u64, qm1 / r, q as u64) == 1 {
                continue 'candidate;
            }
        }
        return Ok(g);
    }
    unreachable!("every odd prime has a primitive root")
}

/// The unique `b` in `[0, q-2]` with `g^b ≡ x (mod q)`.
pub fn discrete_log(q: i64, g: i64, x: i64) -> Result<u64> {
    let qv = q as u64;
    let xr = x.rem_euclid(q) as u64;
    if xr == 0 {
        return Err(Error::Domain(format!("{x} is divisible by {q}")));
    }
    let gr = g.rem_euclid(q) as u64;
    let mut acc = 1u64;
    for b in 0..(qv - 1) {
        if acc == xr {
            return Ok(b);
        }
        acc = acc * gr % qv;
    }
    Err(Error::Domain(format!(
        "{g} is not a primitive root modulo {q}"
    )))
}

/// Canonical square root of `a` modulo an odd prime: the smaller of the two
/// roots in `[1, ell-1]`. Deterministic Tonelli-Shanks (the non-residue used
/// for the general case is the smallest one).
pub fn sqrt_mod(a: i64, ell: i64) -> Result<i64> {
    let p = SElement::new(ell)?;
    if !p.is_odd_prime() {
        return Err(Error::InvalidParams(format!("{ell} is not an odd prime")));
    }
    if legendre(a, p)? != 1 {
        return Err(Error::Domain(format!(
            "no square root: {a} is not a quadratic residue modulo {ell}"
        )));
    }
    let m = ell as u64;
    let ar = a.rem_euclid(ell) as u64;
    let root = if m % 4 == 3 {
        mod_pow(ar, (m + 1) / 4, m)
    } else {
        // Write m-1 = q 2^s and walk the 2-power part down.
        let mut q = m - 1;
        let mut s = 0u32;
        while q & 1 == 0 {
            q >>= 1;
            s += 1;
        }
        let mut z = 2u64;
        while mod_pow(z, (m - 1) / 2, m) != m - 1 {
            z += 1;
        }
        let mut c = mod_pow(z, q, m);
        let mut t = mod_pow(ar, q, m);
        let mut r = mod_pow(ar, (q + 1) / 2, m);
        let mut level = s;
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = ((t2 as u128 * t2 as u128) % m as u128) as u64;
                i += 1;
            }
            let mut b = c;
            for _ in 0..(level - i - 1) {
                b = ((b as u128 * b as u128) % m as u128) as u64;
            }
            r = ((r as u128 * b as u128) % m as u128) as u64;
            c = ((b as u128 * b as u128) % m as u128) as u64;
            t = ((t as u128 * c as u128) % m as u128) as u64;
            level = i;
        }
        r
    };
    debug_assert_eq!(((root as u128 * root as u128) % m as u128) as u64, ar);
    Ok(root.min(m - root) as i64)
}

/// Is `ell` of the form A² + 64 B²? Exhaustive search over B.
pub fn in_p0(ell: u64) -> bool {
    let mut b = 0u64;
    while 64 * b * b <= ell {
        if is_square(ell - 64 * b * b) {
            return true;
        }
        b += 1;
    }
    false
}

fn is_square(n: u64) -> bool {
    let r = (n as f64).sqrt() as u64;
    for c in r.saturating_sub(1)..=r + 1 {
        if c * c == n {
            return true;
        }
    }
    false
}

/// All primes ≤ bound, ascending (classical sieve).
pub fn sieve_primes(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Prime factors of n, without multiplicity, ascending.
pub fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// 2-adic valuation of n > 0.
pub fn v2(n: u64) -> u32 {
    debug_assert!(n > 0);
    n.trailing_zeros()
}

/// The Bezout pair (u, v) with u s + v t = 1 and 0 ≤ u < t.
///
/// Requires gcd(s, t) = 1 and t ≥ 2.
pub fn bezout_canonical(s: i64, t: i64) -> (i64, i64) {
    assert!(t >= 2 && s != 0);
    // u = s^{-1} mod t by extended Euclid, normalised into [0, t).
    let (mut r0, mut r1) = (t, s.rem_euclid(t));
    let (mut u0, mut u1) = (0i64, 1i64);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (u0, u1) = (u1, u0 - k * u1);
    }
    assert_eq!(r0, 1, "gcd(s, t) must be 1");
    let u = u0.rem_euclid(t);
    let v = (1 - u * s) / t;
    debug_assert_eq!(u * s + v * t, 1);
    (u, v)
}
