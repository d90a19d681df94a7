//! Brute-force oracles, independent of the implementation paths they check:
//! double-loop set operations, literal tuple-enumeration energies, and an
//! exact minimal-cover solver. Everything here trades speed for obviousness.

#![allow(dead_code)] // each integration test pulls in the slice it needs

use num::rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ffgrowth::field::{Elem, Field, FieldTable};
use ffgrowth::set::FSet;

pub fn elems(a: &FSet) -> Vec<Elem> {
    a.iter().collect()
}

fn collect(field: &Field, items: Vec<Elem>) -> FSet {
    FSet::from_elems(field, items)
}

pub fn naive_sumset(a: &FSet, b: &FSet) -> FSet {
    let f = a.field();
    let mut out = Vec::new();
    for x in elems(a) {
        for y in elems(b) {
            out.push(f.add(x, y));
        }
    }
    collect(f, out)
}

pub fn naive_difference(a: &FSet, b: &FSet) -> FSet {
    let f = a.field();
    let mut out = Vec::new();
    for x in elems(a) {
        for y in elems(b) {
            out.push(f.sub(x, y));
        }
    }
    collect(f, out)
}

pub fn naive_product(a: &FSet, b: &FSet) -> FSet {
    let f = a.field();
    let mut out = Vec::new();
    for x in elems(a) {
        for y in elems(b) {
            out.push(f.mul(x, y));
        }
    }
    collect(f, out)
}

pub fn naive_dilate(c: Elem, a: &FSet) -> FSet {
    let f = a.field();
    collect(f, elems(a).into_iter().map(|x| f.mul(c, x)).collect())
}

pub fn naive_translate(t: Elem, a: &FSet) -> FSet {
    let f = a.field();
    collect(f, elems(a).into_iter().map(|x| f.add(t, x)).collect())
}

pub fn naive_square_set(a: &FSet) -> FSet {
    let f = a.field();
    collect(f, elems(a).into_iter().map(|x| f.mul(x, x)).collect())
}

pub fn naive_ratio_set(n: &FSet, d: &FSet) -> FSet {
    let f = n.field();
    let mut out = Vec::new();
    for n1 in elems(n) {
        for n2 in elems(n) {
            for d1 in elems(d) {
                for d2 in elems(d) {
                    if d1 == d2 {
                        continue;
                    }
                    let num = f.sub(n1, n2);
                    let den = f.sub(d1, d2);
                    out.push(f.div(num, den).expect("d1 != d2"));
                }
            }
        }
    }
    collect(f, out)
}

pub fn naive_distance_composite(a: &FSet) -> FSet {
    let d = naive_difference(a, a);
    let sq = naive_square_set(&d);
    naive_sumset(&sq, &sq)
}

/// E+(X, Y) by literal enumeration of (x1, x2, y1, y2).
pub fn naive_additive_energy(x: &FSet, y: &FSet) -> u128 {
    let f = x.field();
    let (xs, ys) = (elems(x), elems(y));
    let mut count = 0u128;
    for &x1 in &xs {
        for &x2 in &xs {
            for &y1 in &ys {
                for &y2 in &ys {
                    if f.add(x1, y1) == f.add(x2, y2) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Quadruples (a1, a2, b1, b2) in A^4 with a1 + r·b1 = a2 + r·b2.
pub fn naive_dilated_energy(a: &FSet, r: Elem) -> u128 {
    let f = a.field();
    let xs = elems(a);
    let mut count = 0u128;
    for &a1 in &xs {
        for &a2 in &xs {
            for &b1 in &xs {
                for &b2 in &xs {
                    if f.add(a1, f.mul(r, b1)) == f.add(a2, f.mul(r, b2)) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// The 6-tuple mixed energy by literal enumeration over (A×A×B)².
pub fn naive_mixed_energy(a: &FSet, b: &FSet) -> u128 {
    let f = a.field();
    let (av, bv) = (elems(a), elems(b));
    let lhs_values: Vec<Elem> = {
        let mut v = Vec::new();
        for &a1 in &av {
            for &a2 in &av {
                for &b1 in &bv {
                    v.push(f.add(f.mul(a1, a1), {
                        let d = f.sub(a2, b1);
                        f.mul(d, d)
                    }));
                }
            }
        }
        v
    };
    let mut count = 0u128;
    for &left in &lhs_values {
        for &right in &lhs_values {
            if left == right {
                count += 1;
            }
        }
    }
    count
}

/// Minimal number of translates of Y that fully cover X, by dynamic
/// programming over covered-subset bitmasks; |X| <= ~16.
pub fn exact_min_cover(x: &FSet, y: &FSet) -> usize {
    let f = x.field();
    let xs = elems(x);
    let n = xs.len();
    assert!(n <= 16, "exact cover oracle is exponential in |X|");
    let mut candidate_masks = Vec::new();
    for t in f.elems() {
        let mut mask = 0u32;
        for (i, &xe) in xs.iter().enumerate() {
            // xe ∈ t + Y ⟺ xe - t ∈ Y
            if y.contains(f.sub(xe, t)) {
                mask |= 1 << i;
            }
        }
        if mask != 0 {
            candidate_masks.push(mask);
        }
    }
    candidate_masks.sort_unstable();
    candidate_masks.dedup();
    let full = (1u32 << n) - 1;
    let mut dp = vec![u32::MAX; (full as usize) + 1];
    dp[0] = 0;
    for m in 0..=full {
        if dp[m as usize] == u32::MAX {
            continue;
        }
        for &c in &candidate_masks {
            let next = (m | c) as usize;
            if dp[next] > dp[m as usize] + 1 {
                dp[next] = dp[m as usize] + 1;
            }
        }
    }
    dp[full as usize] as usize
}

/// H(n) = 1 + 1/2 + ... + 1/n.
pub fn harmonic(n: u64) -> Ratio<u64> {
    (1..=n).map(|i| Ratio::new(1, i)).sum()
}

/// A seeded random subset with exactly n elements.
pub fn random_set(field: &Field, n: usize, rng: &mut ChaCha8Rng) -> FSet {
    let q = field.q();
    assert!(n <= q as usize);
    let mut out = FSet::empty(field);
    while out.len() < n {
        out.insert(Elem(rng.gen_range(0..q)));
    }
    out
}

/// A seeded random subset with size drawn from [lo, hi].
pub fn random_set_sized(field: &Field, lo: usize, hi: usize, rng: &mut ChaCha8Rng) -> FSet {
    let n = rng.gen_range(lo..=hi);
    random_set(field, n, rng)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random nonzero element.
pub fn random_elem(field: &FieldTable, rng: &mut ChaCha8Rng) -> Elem {
    Elem(rng.gen_range(0..field.q()))
}
