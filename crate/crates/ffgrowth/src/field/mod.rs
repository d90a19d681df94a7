//! Materialized finite fields F_{p^k}.
//!
//! Elements are indices in [0, q): the coefficient vector (c_0, ..., c_{k-1})
//! of a polynomial residue encodes as sum c_i * p^i, so 0 is the additive and
//! 1 the multiplicative identity, and indices are portable across runs and
//! into set files. Multiplication, inversion and Frobenius run off log/antilog
//! tables for a fixed primitive element; addition is digitwise in base p
//! (XOR when p = 2), so memory stays O(q) at every size.

mod poly;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::FSet;

/// Default bound on q = p^k; override with FFGROWTH_UNIVERSE_CAP.
pub const DEFAULT_UNIVERSE_CAP: u64 = 1 << 16;

/// Tables above this size would not fit in memory regardless of the cap.
const HARD_CAP: u64 = 1 << 24;

const INVALID: u32 = u32::MAX;

/// A field element, by index. Only meaningful next to its `FieldTable`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The (p, k, modulus) triple that pins a field construction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub k: u32,
    /// Monic irreducible of degree k, coefficients low-degree first.
    /// For k = 1 this is the canonical placeholder x - 0.
    pub modulus: Vec<u64>,
}

impl FieldSpec {
    pub fn q(&self) -> u64 {
        (self.p as u128).pow(self.k) as u64
    }

    /// Modulus rendered as a readable polynomial in x.
    pub fn modulus_display(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.reverse();
            terms.join(" + ")
        }
    }
}

/// A fully materialized field: log/antilog multiplication, inverse and
/// Frobenius tables, digitwise addition. Immutable after construction and
/// safe to share across threads.
pub struct FieldTable {
    spec: FieldSpec,
    q: u32,
    /// exp[i] = g^i for the canonical primitive element g, length q - 1.
    exp: Vec<u32>,
    /// log[x] with log[0] = INVALID sentinel.
    log: Vec<u32>,
    /// inv[x] with inv[0] = INVALID sentinel.
    inv: Vec<u32>,
    /// frob[x] = x^p.
    frob: Vec<u32>,
    neg: Vec<u32>,
}

/// Shared handle used throughout the crate.
pub type Field = Arc<FieldTable>;

/// Build F_{p^k} with the default (or env-overridden) universe cap.
///
/// When `modulus` is omitted the lexicographically smallest monic irreducible
/// of degree k is selected, so the construction is deterministic.
pub fn build(p: u64, k: u32, modulus: Option<&[u64]>) -> Result<Field> {
    build_with_cap(p, k, modulus, universe_cap())
}

/// The active universe cap: FFGROWTH_UNIVERSE_CAP if set, else the default.
pub fn universe_cap() -> u64 {
    std::env::var("FFGROWTH_UNIVERSE_CAP")
        .ok()
        .and_then(|v| v.parse::<u64>().ok())
        .unwrap_or(DEFAULT_UNIVERSE_CAP)
        .min(HARD_CAP)
}

pub fn build_with_cap(p: u64, k: u32, modulus: Option<&[u64]>, cap: u64) -> Result<Field> {
    if !poly::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k < 1 {
        return Err(Error::BadModulus("extension degree must be >= 1".into()));
    }
    let q = (p as u128).pow(k);
    if q > cap.min(HARD_CAP) as u128 {
        return Err(Error::UniverseTooLarge {
            q,
            cap: cap.min(HARD_CAP),
        });
    }
    let modulus = match modulus {
        // the modulus carries no information for k = 1; use the placeholder
        _ if k == 1 => vec![0, 1],
        Some(m) => {
            let m = m.to_vec();
            if m.len() != k as usize + 1 {
                return Err(Error::BadModulus(format!(
                    "need {} coefficients for degree {k}, got {}",
                    k + 1,
                    m.len()
                )));
            }
            if m[k as usize] != 1 {
                return Err(Error::BadModulus("modulus must be monic".into()));
            }
            if m.iter().any(|&c| c >= p) {
                return Err(Error::BadModulus(format!(
                    "coefficients must lie in [0, {p})"
                )));
            }
            if !poly::is_irreducible(&m, p) {
                return Err(Error::NotIrreducible(m, p));
            }
            m
        }
        None => poly::find_irreducible(p, k),
    };
    Ok(Arc::new(FieldTable::construct(FieldSpec { p, k, modulus })))
}

impl FieldTable {
    fn construct(spec: FieldSpec) -> FieldTable {
        let p = spec.p;
        let q = spec.q() as u32;
        let k = spec.k as usize;

        let encode = |coeffs: &[u64]| -> u32 {
            let mut idx = 0u64;
            for i in (0..k).rev() {
                idx = idx * p + coeffs.get(i).copied().unwrap_or(0);
            }
            idx as u32
        };
        let decode = |idx: u32| -> Vec<u64> {
            let mut rem = idx as u64;
            let mut coeffs = vec![0u64; k];
            for c in coeffs.iter_mut() {
                *c = rem % p;
                rem /= p;
            }
            coeffs
        };

        // canonical primitive element: smallest index generating F_q^*
        let generator = if q == 2 {
            1u32
        } else {
            let factors = poly::prime_factors(q as u64 - 1);
            (2..q)
                .find(|&g| {
                    let gp = decode(g);
                    factors.iter().all(|&l| {
                        let e = (q as u64 - 1) / l;
                        poly::poly_powmod(&gp, e, &spec.modulus, p) != vec![1]
                    })
                })
                .expect("F_q^* is cyclic")
        };

        let mut exp = vec![0u32; q as usize - 1];
        let mut log = vec![INVALID; q as usize];
        let gp = decode(generator);
        let mut acc = vec![1u64];
        for (i, slot) in exp.iter_mut().enumerate() {
            let idx = encode(&acc);
            *slot = idx;
            debug_assert!(log[idx as usize] == INVALID, "generator cycle collided");
            log[idx as usize] = i as u32;
            acc = poly::poly_mulmod(&acc, &gp, &spec.modulus, p);
        }
        debug_assert_eq!(acc, vec![1], "generator order is not q - 1");

        let mut inv = vec![INVALID; q as usize];
        let mut frob = vec![0u32; q as usize];
        for x in 1..q {
            let lx = log[x as usize] as u64;
            inv[x as usize] = exp[((q as u64 - 1 - lx) % (q as u64 - 1)) as usize];
            frob[x as usize] = exp[(lx * p % (q as u64 - 1)) as usize];
        }

        let mut neg = vec![0u32; q as usize];
        for x in 0..q {
            let coeffs: Vec<u64> = decode(x).iter().map(|&c| (p - c) % p).collect();
            neg[x as usize] = encode(&coeffs);
        }

        let table = FieldTable {
            spec,
            q,
            exp,
            log,
            inv,
            frob,
            neg,
        };
        table.sanity_check();
        table
    }

    /// Cheap O(q) consistency pass run at construction time.
    fn sanity_check(&self) {
        assert_eq!(self.add(self.zero(), self.one()), self.one());
        for x in 1..self.q {
            let x = Elem(x);
            let ix = Elem(self.inv[x.0 as usize]);
            assert_eq!(self.mul(x, ix), self.one(), "inv table broken at {x}");
            assert_eq!(self.add(x, Elem(self.neg[x.0 as usize])), self.zero());
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u64 {
        self.spec.p
    }

    pub fn k(&self) -> u32 {
        self.spec.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(1)
    }

    /// The canonical primitive element the log tables are built on.
    pub fn generator(&self) -> Elem {
        if self.q == 2 {
            Elem(1)
        } else {
            Elem(self.exp[1])
        }
    }

    /// Validate an index into an element.
    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index < self.q as u64 {
            Ok(Elem(index as u32))
        } else {
            Err(Error::BadSetFile(format!(
                "element index {index} out of range for q = {}",
                self.q
            )))
        }
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.q).map(Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.spec.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.spec.k == 1 {
            let s = a.0 as u64 + b.0 as u64;
            return Elem(if s >= p { (s - p) as u32 } else { s as u32 });
        }
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        while x > 0 || y > 0 {
            let mut d = x % p + y % p;
            if d >= p {
                d -= p;
            }
            out += d * place;
            x /= p;
            y /= p;
            place *= p;
        }
        Elem(out as u32)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.0 as usize])
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem(0);
        }
        let la = self.log[a.0 as usize] as u64;
        let lb = self.log[b.0 as usize] as u64;
        Elem(self.exp[((la + lb) % (self.q as u64 - 1)) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Elem(self.inv[a.0 as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if a.0 == 0 {
            return if e == 0 { Elem(1) } else { Elem(0) };
        }
        let la = self.log[a.0 as usize] as u128;
        let m = self.q as u128 - 1;
        Elem(self.exp[(la * e as u128 % m) as usize])
    }

    /// The Frobenius map x -> x^p.
    pub fn frob(&self, a: Elem) -> Elem {
        Elem(self.frob[a.0 as usize])
    }

    pub fn frob_iter(&self, a: Elem, times: u32) -> Elem {
        let mut x = a;
        for _ in 0..times {
            x = self.frob(x);
        }
        x
    }

    /// Smallest d >= 1 with x^(p^d) = x; always divides k.
    pub fn element_degree(&self, x: Elem) -> u32 {
        let mut y = self.frob(x);
        let mut d = 1;
        while y != x {
            y = self.frob(y);
            d += 1;
        }
        debug_assert_eq!(self.k() % d, 0);
        d
    }
}

impl fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FieldTable(p={}, k={}, q={})",
            self.p(),
            self.k(),
            self.q
        )
    }
}

/// A subfield F_{p^d}, d | k, materialized as a set of elements.
#[derive(Clone, Debug)]
pub struct Subfield {
    pub degree: u32,
    pub elements: FSet,
}

impl Subfield {
    /// The (p, d) pair identifying the abstract subfield.
    pub fn label(&self) -> (u64, u32) {
        (self.elements.field().p(), self.degree)
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// Every subfield of F_{p^k}: one per divisor d of k, as the fixed points of
/// frob^d, sorted by d ascending. The d = k entry is the whole field.
pub fn subfield_lattice(field: &Field) -> Vec<Subfield> {
    let k = field.k();
    let mut out = Vec::new();
    for d in 1..=k {
        if !k.is_multiple_of(d) {
            continue;
        }
        let mut elements = FSet::empty(field);
        for x in field.elems() {
            if field.frob_iter(x, d) == x {
                elements.insert(x);
            }
        }
        debug_assert_eq!(elements.len() as u128, (field.p() as u128).pow(d));
        out.push(Subfield {
            degree: d,
            elements,
        });
    }
    out
}

/// The subfield generated by B: F_{p^d} with d the lcm of the generator
/// degrees, cross-checked against a direct closure iteration.
pub fn generated_subfield(b: &FSet) -> Result<Subfield> {
    if b.is_empty() {
        return Err(Error::EmptySet);
    }
    let field = b.field();
    let mut d = 1u32;
    for x in b.iter() {
        d = lcm(d, field.element_degree(x));
    }

    // independent route: close B ∪ {0, 1} under +, ·, and inversion
    let mut closure = b.clone();
    closure.insert(field.zero());
    closure.insert(field.one());
    loop {
        let mut next = closure.clone();
        let members: Vec<Elem> = closure.iter().collect();
        for &x in &members {
            for &y in &members {
                next.insert(field.add(x, y));
                next.insert(field.mul(x, y));
            }
            if x != field.zero() {
                next.insert(field.inv(x).expect("nonzero"));
            }
        }
        if next.len() == closure.len() {
            break;
        }
        closure = next;
    }

    let by_degree: FSet = {
        let mut s = FSet::empty(field);
        for x in field.elems() {
            if field.frob_iter(x, d) == x {
                s.insert(x);
            }
        }
        s
    };
    assert_eq!(
        closure, by_degree,
        "closure and lcm-of-degrees routes disagree on the generated subfield"
    );
    Ok(Subfield {
        degree: d,
        elements: closure,
    })
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}
