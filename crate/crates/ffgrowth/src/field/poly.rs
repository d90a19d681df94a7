//! Dense polynomials over F_p, used to bootstrap extension-field tables
//! and to search for irreducible moduli.
//!
//! Coefficients are stored low-degree first. The zero polynomial is the
//! empty vector; every other polynomial is kept trimmed (nonzero leading
//! coefficient).

/// Modular exponentiation in F_p.
pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue mod a prime, via Fermat.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic primality check by trial division. Sizes here are bounded
/// by the universe cap, so this is never the bottleneck.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factors of n, ascending, without multiplicity.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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

fn trim(c: &mut Vec<u64>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

pub(crate) fn is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// Degree of a nonzero polynomial.
fn degree(a: &[u64]) -> usize {
    debug_assert!(!is_zero(a));
    a.iter().rposition(|&c| c != 0).unwrap()
}

pub(crate) fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    trim(&mut out);
    out
}

pub(crate) fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if is_zero(a) || is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of a modulo m. m need not be monic.
pub(crate) fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    trim(&mut r);
    let dm = degree(m);
    let lead_inv = inv_mod(m[dm], p);
    while !is_zero(&r) {
        let dr = degree(&r);
        if dr < dm {
            break;
        }
        let factor = (r[dr] as u128 * lead_inv as u128 % p as u128) as u64;
        let shift = dr - dm;
        for (i, &mc) in m.iter().enumerate().take(dm + 1) {
            let sub = (factor as u128 * mc as u128 % p as u128) as u64;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    poly_rem(&poly_mul(a, b, p), m, p)
}

pub(crate) fn poly_powmod(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut sq = poly_rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mulmod(&acc, &sq, m, p);
        }
        sq = poly_mulmod(&sq, &sq, m, p);
        exp >>= 1;
    }
    acc
}

/// Monic gcd over F_p.
pub(crate) fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x: Vec<u64> = a.to_vec();
    let mut y: Vec<u64> = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !is_zero(&y) {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    if !is_zero(&x) {
        let lead_inv = inv_mod(x[degree(&x)], p);
        for c in &mut x {
            *c = (*c as u128 * lead_inv as u128 % p as u128) as u64;
        }
    }
    x
}

fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in a.iter().rev() {
        acc = ((acc as u128 * x as u128 + c as u128) % p as u128) as u64;
    }
    acc
}

/// Irreducibility of a monic polynomial of degree >= 1 over F_p.
///
/// Degrees 2 and 3 reduce to a root scan; higher degrees use the standard
/// x^(p^d) fixed-point conditions: m of degree k is irreducible iff
/// x^(p^k) = x mod m and gcd(x^(p^(k/l)) - x, m) = 1 for every prime l | k.
pub(crate) fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = degree(m);
    if k == 1 {
        return true;
    }
    // a root gives a linear factor
    if k <= 3 {
        return (0..p).all(|r| eval(m, r, p) != 0);
    }
    if m[0] == 0 {
        return false; // divisible by x
    }
    let x = [0u64, 1];
    for l in prime_factors(k as u64) {
        let d = k as u64 / l;
        let pd = (p as u128).pow(d as u32);
        debug_assert!(pd <= u64::MAX as u128);
        let xp = poly_powmod(&x, pd as u64, m, p);
        let g = poly_gcd(&poly_sub(&xp, &x, p), m, p);
        if is_zero(&g) || degree(&g) > 0 {
            return false;
        }
    }
    let q = (p as u128).pow(k as u32) as u64;
    let xq = poly_powmod(&x, q, m, p);
    is_zero(&poly_sub(&xq, &x, p))
}

/// Lexicographically smallest monic irreducible of degree k over F_p,
/// comparing the non-leading coefficients low-degree first.
pub(crate) fn find_irreducible(p: u64, k: u32) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1]; // canonical x - 0 placeholder
    }
    let k = k as usize;
    let total = (p as u128).pow(k as u32);
    let mut coeffs = vec![0u64; k + 1];
    coeffs[k] = 1;
    for counter in 0..total {
        // c_0 takes the most significant base-p digit, so ascending counter
        // order is ascending lex order on (c_0, ..., c_{k-1})
        let mut rem = counter;
        for i in (0..k).rev() {
            coeffs[i] = (rem % p as u128) as u64;
            rem /= p as u128;
        }
        if coeffs[0] != 0 && is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducibles of every degree exist over F_p")
}
