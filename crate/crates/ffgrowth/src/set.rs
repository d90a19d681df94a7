//! Subsets of F_q as bit-vectors over element indices, and the set-valued
//! expressions built from them: sumsets, dilates, square sets, ratio sets,
//! the distance composite, the four-case closure classification, and the
//! subfield-intersection hypothesis checks.
//!
//! `FSet` values are immutable in practice (operations return fresh sets),
//! so everything here is safe to evaluate concurrently over a shared field.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{subfield_lattice, Elem, Field};

/// A subset of F_q: one bit per element index, with a cached popcount.
#[derive(Clone)]
pub struct FSet {
    field: Field,
    bits: Vec<u64>,
    size: usize,
}

impl FSet {
    pub fn empty(field: &Field) -> FSet {
        let words = (field.q() as usize).div_ceil(64);
        FSet {
            field: field.clone(),
            bits: vec![0; words],
            size: 0,
        }
    }

    pub fn full(field: &Field) -> FSet {
        let mut s = FSet::empty(field);
        for x in field.elems() {
            s.insert(x);
        }
        s
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(field: &Field, elems: I) -> FSet {
        let mut s = FSet::empty(field);
        for x in elems {
            debug_assert!(x.0 < field.q());
            s.insert(x);
        }
        s
    }

    /// Convenience for tests and examples: build from raw indices.
    pub fn from_indices(field: &Field, indices: &[u32]) -> FSet {
        FSet::from_elems(field, indices.iter().map(|&i| Elem(i)))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn contains(&self, x: Elem) -> bool {
        let i = x.0 as usize;
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, x: Elem) -> bool {
        let i = x.0 as usize;
        let mask = 1u64 << (i % 64);
        let fresh = self.bits[i / 64] & mask == 0;
        if fresh {
            self.bits[i / 64] |= mask;
            self.size += 1;
        }
        fresh
    }

    pub fn remove(&mut self, x: Elem) -> bool {
        let i = x.0 as usize;
        let mask = 1u64 << (i % 64);
        let present = self.bits[i / 64] & mask != 0;
        if present {
            self.bits[i / 64] &= !mask;
            self.size -= 1;
        }
        present
    }

    /// Elements in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros();
                word &= word - 1;
                Some(Elem((w * 64) as u32 + bit))
            })
        })
    }

    pub fn smallest(&self) -> Option<Elem> {
        self.iter().next()
    }

    pub fn intersection_size(&self, other: &FSet) -> usize {
        self.bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn union_with(&mut self, other: &FSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
        self.size = self.bits.iter().map(|w| w.count_ones() as usize).sum();
    }

    /// Remove every element of `other` from `self`.
    pub fn subtract(&mut self, other: &FSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= !b;
        }
        self.size = self.bits.iter().map(|w| w.count_ones() as usize).sum();
    }

    pub fn is_subset_of(&self, other: &FSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    fn same_field(&self, other: &FSet) -> Result<()> {
        if self.field.spec() == other.field.spec() {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// {a + b : a ∈ self, b ∈ other}; empty if either side is.
    pub fn sumset(&self, other: &FSet) -> Result<FSet> {
        self.same_field(other)?;
        let f = &self.field;
        let mut out = FSet::empty(f);
        for a in self.iter() {
            for b in other.iter() {
                out.insert(f.add(a, b));
            }
        }
        Ok(out)
    }

    /// {a - b : a ∈ self, b ∈ other}.
    pub fn difference_set(&self, other: &FSet) -> Result<FSet> {
        self.same_field(other)?;
        let f = &self.field;
        let mut out = FSet::empty(f);
        for a in self.iter() {
            for b in other.iter() {
                out.insert(f.sub(a, b));
            }
        }
        Ok(out)
    }

    /// {a · b : a ∈ self, b ∈ other}.
    pub fn product_set(&self, other: &FSet) -> Result<FSet> {
        self.same_field(other)?;
        let f = &self.field;
        let mut out = FSet::empty(f);
        for a in self.iter() {
            for b in other.iter() {
                out.insert(f.mul(a, b));
            }
        }
        Ok(out)
    }

    /// {c · a : a ∈ self}.
    pub fn dilate(&self, c: Elem) -> FSet {
        let f = &self.field;
        FSet::from_elems(f, self.iter().map(|a| f.mul(c, a)))
    }

    /// {t + a : a ∈ self}.
    pub fn translate(&self, t: Elem) -> FSet {
        let f = &self.field;
        FSet::from_elems(f, self.iter().map(|a| f.add(t, a)))
    }

    /// The image {x² : x ∈ self} — not the product set.
    pub fn square_set(&self) -> FSet {
        let f = &self.field;
        FSet::from_elems(f, self.iter().map(|a| f.square(a)))
    }

    /// {-a : a ∈ self}.
    pub fn negate(&self) -> FSet {
        let f = &self.field;
        FSet::from_elems(f, self.iter().map(|a| f.neg(a)))
    }

    /// {a⁻¹ : a ∈ self, a ≠ 0}; zero is silently dropped.
    pub fn inverse_set(&self) -> FSet {
        let f = &self.field;
        FSet::from_elems(
            f,
            self.iter()
                .filter(|&a| a != f.zero())
                .map(|a| f.inv(a).expect("nonzero")),
        )
    }

    /// (A-A)² + (A-A)², the distance set of the grid A×A.
    pub fn distance_composite(&self) -> FSet {
        let diffs = self.difference_set(self).expect("same field");
        let sq = diffs.square_set();
        sq.sumset(&sq).expect("same field")
    }

    /// Affine image (x - a)/(b - a) for the two smallest elements a < b,
    /// so the result contains 0 and 1.
    pub fn normalize(&self) -> Result<FSet> {
        if self.len() < 2 {
            return Err(Error::Infeasible(
                "normalization needs at least two elements".into(),
            ));
        }
        let f = &self.field;
        let mut it = self.iter();
        let a = it.next().unwrap();
        let b = it.next().unwrap();
        let scale = f.inv(f.sub(b, a)).expect("b != a");
        Ok(FSet::from_elems(
            f,
            self.iter().map(|x| f.mul(f.sub(x, a), scale)),
        ))
    }
}

impl PartialEq for FSet {
    fn eq(&self, other: &Self) -> bool {
        self.field.spec() == other.field.spec() && self.bits == other.bits
    }
}

impl Eq for FSet {}

impl fmt::Display for FSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for FSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FSet(q={}, |A|={}, {self})", self.field.q(), self.size)
    }
}

/// R(N, D) = {(n1 - n2)/(d1 - d2) : n_i ∈ N, d_i ∈ D, d1 ≠ d2}.
///
/// The first argument supplies numerator pairs and the second denominator
/// pairs, so R(A, A) is `ratio_set(&a, &a)` and the variant whose
/// denominators come from X is `ratio_set(&y, &x)`.
pub fn ratio_set(numerators: &FSet, denominators: &FSet) -> Result<FSet> {
    numerators.same_field(denominators)?;
    if denominators.len() < 2 {
        return Err(Error::DegenerateDenominator);
    }
    let f = numerators.field();
    let numer_diffs = numerators.difference_set(numerators)?;
    let mut denom_diffs = denominators.difference_set(denominators)?;
    denom_diffs.remove(f.zero());
    let mut out = FSet::empty(f);
    for n in numer_diffs.iter() {
        for d in denom_diffs.iter() {
            out.insert(f.div(n, d).expect("nonzero denominator"));
        }
    }
    Ok(out)
}

/// Outcome of the closure trichotomy. Cases 1-3 carry the witness that
/// exhibits the violated closure; Case 4 means all three closures hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseLabel {
    Case1(CaseWitness),
    Case2(CaseWitness),
    Case3(CaseWitness),
    Case4,
}

impl CaseLabel {
    pub fn name(&self) -> &'static str {
        match self {
            CaseLabel::Case1(_) => "case1",
            CaseLabel::Case2(_) => "case2",
            CaseLabel::Case3(_) => "case3",
            CaseLabel::Case4 => "case4",
        }
    }

    pub fn witness(&self) -> Option<&CaseWitness> {
        match self {
            CaseLabel::Case1(w) | CaseLabel::Case2(w) | CaseLabel::Case3(w) => Some(w),
            CaseLabel::Case4 => None,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::Case4 => write!(f, "case4"),
            other => {
                let w = other.witness().unwrap();
                write!(
                    f,
                    "{} (r = {} escapes the ratio set: {w})",
                    other.name(),
                    w.r
                )
            }
        }
    }
}

/// The concrete elements behind a violated closure:
/// r = 1 + s (case 1), r = m·s (case 2) or r = m⁻¹·s (case 3),
/// where s = (n1 - n2)/(d1 - d2) lies in the ratio set and r escapes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseWitness {
    pub n1: Elem,
    pub n2: Elem,
    pub d1: Elem,
    pub d2: Elem,
    pub multiplier: Option<Elem>,
    pub r: Elem,
}

impl fmt::Display for CaseWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.multiplier {
            Some(m) => write!(
                f,
                "n=({},{}) d=({},{}) m={m}",
                self.n1, self.n2, self.d1, self.d2
            ),
            None => write!(f, "n=({},{}) d=({},{})", self.n1, self.n2, self.d1, self.d2),
        }
    }
}

/// Classify A by which closure of R(A, A) fails first: 1 + R ⊆ R, then
/// A·R ⊆ R, then A⁻¹·R ⊆ R (inverses over nonzero elements of A).
pub fn classify_case(a: &FSet) -> Result<CaseLabel> {
    classify_general(a, a, a)
}

/// The variant with R(X, Y) (numerators from Y, denominators from X):
/// tests 1 + R, Y·R, Y⁻¹·R.
pub fn classify_case_xy(x: &FSet, y: &FSet) -> Result<CaseLabel> {
    classify_general(y, x, y)
}

fn classify_general(numer: &FSet, denom: &FSet, mult: &FSet) -> Result<CaseLabel> {
    let r_set = ratio_set(numer, denom)?;
    let f = numer.field();

    // 1 + R ⊆ R
    for s in r_set.iter() {
        let r = f.add(f.one(), s);
        if !r_set.contains(r) {
            let (n1, n2, d1, d2) = realize_ratio(numer, denom, s);
            return Ok(CaseLabel::Case1(CaseWitness {
                n1,
                n2,
                d1,
                d2,
                multiplier: None,
                r,
            }));
        }
    }
    // M · R ⊆ R
    for m in mult.iter() {
        for s in r_set.iter() {
            let r = f.mul(m, s);
            if !r_set.contains(r) {
                let (n1, n2, d1, d2) = realize_ratio(numer, denom, s);
                return Ok(CaseLabel::Case2(CaseWitness {
                    n1,
                    n2,
                    d1,
                    d2,
                    multiplier: Some(m),
                    r,
                }));
            }
        }
    }
    // M⁻¹ · R ⊆ R, inverses over nonzero elements only
    for m in mult.iter().filter(|&m| m != f.zero()) {
        let mi = f.inv(m).expect("nonzero");
        for s in r_set.iter() {
            let r = f.mul(mi, s);
            if !r_set.contains(r) {
                let (n1, n2, d1, d2) = realize_ratio(numer, denom, s);
                return Ok(CaseLabel::Case3(CaseWitness {
                    n1,
                    n2,
                    d1,
                    d2,
                    multiplier: Some(m),
                    r,
                }));
            }
        }
    }
    Ok(CaseLabel::Case4)
}

/// Find pairs with (n1 - n2)/(d1 - d2) = s; exists whenever s came out of
/// `ratio_set(numer, denom)`.
fn realize_ratio(numer: &FSet, denom: &FSet, s: Elem) -> (Elem, Elem, Elem, Elem) {
    let f = numer.field();
    for d1 in denom.iter() {
        for d2 in denom.iter() {
            if d1 == d2 {
                continue;
            }
            let target = f.mul(s, f.sub(d1, d2));
            for n2 in numer.iter() {
                let n1 = f.add(n2, target);
                if numer.contains(n1) {
                    return (n1, n2, d1, d2);
                }
            }
        }
    }
    unreachable!("s was produced by the ratio set")
}

/// Re-derive a classification witness from its parts and confirm the escape.
pub fn verify_case(label: &CaseLabel, numer: &FSet, denom: &FSet, mult: &FSet) -> Result<bool> {
    let r_set = ratio_set(numer, denom)?;
    let f = numer.field();
    let check = |w: &CaseWitness, r: Elem| -> bool {
        numer.contains(w.n1)
            && numer.contains(w.n2)
            && denom.contains(w.d1)
            && denom.contains(w.d2)
            && w.d1 != w.d2
            && r == w.r
            && !r_set.contains(r)
    };
    let s_of = |w: &CaseWitness| {
        f.div(f.sub(w.n1, w.n2), f.sub(w.d1, w.d2))
            .expect("d1 != d2")
    };
    Ok(match label {
        CaseLabel::Case1(w) => w.multiplier.is_none() && check(w, f.add(f.one(), s_of(w))),
        CaseLabel::Case2(w) => match w.multiplier {
            Some(m) => mult.contains(m) && check(w, f.mul(m, s_of(w))),
            None => false,
        },
        CaseLabel::Case3(w) => match w.multiplier {
            Some(m) if m != f.zero() => {
                mult.contains(m) && check(w, f.mul(f.inv(m).expect("nonzero"), s_of(w)))
            }
            _ => false,
        },
        CaseLabel::Case4 => {
            let one_plus = r_set.translate(f.one());
            let prod = mult.product_set(&r_set)?;
            let inv_prod = mult.inverse_set().product_set(&r_set)?;
            one_plus.is_subset_of(&r_set)
                && prod.is_subset_of(&r_set)
                && inv_prod.is_subset_of(&r_set)
        }
    })
}

/// Result of a subfield-intersection hypothesis scan.
#[derive(Clone, Debug)]
pub struct HypothesisReport {
    pub theorem: u8,
    pub pass: bool,
    pub violation: Option<HypothesisViolation>,
    /// Number of (G, a, b) combinations tested.
    pub checked: u64,
}

#[derive(Clone, Debug)]
pub struct HypothesisViolation {
    pub subfield_degree: u32,
    pub subfield_size: u64,
    pub a: Elem,
    pub b: Elem,
    pub intersection: u64,
}

impl fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(
                f,
                "theorem {} hypothesis: pass ({} combinations checked)",
                self.theorem, self.checked
            ),
            Some(v) => write!(
                f,
                "theorem {} hypothesis: FAIL at G = F_{} (degree {}), a = {}, b = {}: \
                 |S ∩ (aG+b)| = {} and {}² > {}",
                self.theorem,
                v.subfield_size,
                v.subfield_degree,
                v.a,
                v.b,
                v.intersection,
                v.intersection,
                v.subfield_size
            ),
        }
    }
}

/// Theorem-1 hypothesis: |A ∩ aG| ≤ |G|^(1/2) for every subfield G and
/// every a ∈ F_q^*, compared in integers as |A ∩ aG|² ≤ |G|.
pub fn check_hypothesis_thm1(a: &FSet) -> HypothesisReport {
    hypothesis_scan(a, 1, false)
}

/// Theorem-2 hypothesis: the same bound for A+A against every aG + b.
pub fn check_hypothesis_thm2(a: &FSet) -> HypothesisReport {
    let s = a.sumset(a).expect("same field");
    hypothesis_scan(&s, 2, true)
}

fn hypothesis_scan(s: &FSet, theorem: u8, translate: bool) -> HypothesisReport {
    let field = s.field();
    let q = field.q();
    let mut checked = 0u64;
    for sub in subfield_lattice(field) {
        let g_size = sub.size() as u64;
        // distinct dilates only: aG = a'G iff a/a' lands in G, so marking
        // the nonzero elements of each processed dilate skips duplicates
        let mut covered = FSet::empty(field);
        for a_idx in 1..q {
            let a = Elem(a_idx);
            if covered.contains(a) {
                continue;
            }
            let ag = sub.elements.dilate(a);
            for x in ag.iter() {
                if x != field.zero() {
                    covered.insert(x);
                }
            }
            let b_range: &mut dyn Iterator<Item = Elem> = if translate {
                &mut field.elems()
            } else {
                &mut std::iter::once(field.zero())
            };
            for b in b_range {
                let count = ag.iter().filter(|&g| s.contains(field.add(g, b))).count() as u64;
                checked += 1;
                if count * count > g_size {
                    return HypothesisReport {
                        theorem,
                        pass: false,
                        violation: Some(HypothesisViolation {
                            subfield_degree: sub.degree,
                            subfield_size: g_size,
                            a,
                            b,
                            intersection: count,
                        }),
                        checked,
                    };
                }
            }
        }
    }
    HypothesisReport {
        theorem,
        pass: true,
        violation: None,
        checked,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build;

    fn f5() -> Field {
        build(5, 1, None).unwrap()
    }

    fn set(field: &Field, idx: &[u32]) -> FSet {
        FSet::from_indices(field, idx)
    }

    #[test]
    fn sumset_difference_examples() {
        let f = f5();
        let a = set(&f, &[0, 1]);
        assert_eq!(a.sumset(&a).unwrap(), set(&f, &[0, 1, 2]));
        assert_eq!(a.difference_set(&a).unwrap(), set(&f, &[0, 1, 4]));
        let empty = FSet::empty(&f);
        assert!(empty.sumset(&a).unwrap().is_empty());
    }

    #[test]
    fn field_mismatch_detected() {
        let f = f5();
        let g = build(7, 1, None).unwrap();
        let a = set(&f, &[0, 1]);
        let b = set(&g, &[0, 1]);
        assert!(matches!(a.sumset(&b), Err(Error::FieldMismatch)));
    }

    #[test]
    fn dilate_translate_examples() {
        let f = f5();
        let a = set(&f, &[0, 1, 2]);
        assert_eq!(a.dilate(Elem(2)), set(&f, &[0, 2, 4]));
        assert_eq!(a.dilate(Elem(1)), a);
        assert_eq!(a.translate(Elem(0)), a);
        assert_eq!(a.dilate(Elem(0)), set(&f, &[0]));
    }

    #[test]
    fn square_set_examples() {
        let f = f5();
        assert_eq!(set(&f, &[0, 1, 4]).square_set(), set(&f, &[0, 1]));
        assert_eq!(set(&f, &[0, 1]).square_set(), set(&f, &[0, 1]));
    }

    #[test]
    fn ratio_set_examples() {
        let f = f5();
        let a = set(&f, &[0, 1]);
        assert_eq!(ratio_set(&a, &a).unwrap(), set(&f, &[0, 1, 4]));

        let f7 = build(7, 1, None).unwrap();
        let b = set(&f7, &[0, 1, 2]);
        assert_eq!(ratio_set(&b, &b).unwrap(), FSet::full(&f7));

        let singleton = set(&f, &[3]);
        assert!(matches!(
            ratio_set(&a, &singleton),
            Err(Error::DegenerateDenominator)
        ));
    }

    #[test]
    fn distance_composite_examples() {
        let f = f5();
        assert_eq!(set(&f, &[0, 1]).distance_composite(), set(&f, &[0, 1, 2]));
        assert_eq!(set(&f, &[3]).distance_composite(), set(&f, &[0]));
        assert_eq!(FSet::full(&f).distance_composite(), FSet::full(&f));
    }

    #[test]
    fn classify_small_sets() {
        let f7 = build(7, 1, None).unwrap();
        let b = set(&f7, &[0, 1, 2]);
        assert_eq!(classify_case(&b).unwrap(), CaseLabel::Case4);

        let f = f5();
        let a = set(&f, &[0, 1]);
        let label = classify_case(&a).unwrap();
        match &label {
            CaseLabel::Case1(w) => {
                assert_eq!(w.r, Elem(2)); // R = {0,1,4}, 1 + 1 = 2 escapes
                assert!(verify_case(&label, &a, &a, &a).unwrap());
            }
            other => panic!("expected case1, got {other:?}"),
        }

        assert_eq!(classify_case(&FSet::full(&f)).unwrap(), CaseLabel::Case4);
    }

    #[test]
    fn classify_xy_variant_runs() {
        let f = build(13, 1, None).unwrap();
        let x = set(&f, &[0, 1, 3]);
        let y = set(&f, &[2, 5]);
        let label = classify_case_xy(&x, &y).unwrap();
        assert!(verify_case(&label, &y, &x, &y).unwrap());
    }

    #[test]
    fn hypothesis_thm1_examples() {
        let f7 = build(7, 1, None).unwrap();
        let small = set(&f7, &[0, 1]);
        assert!(check_hypothesis_thm1(&small).pass);

        let big = set(&f7, &[0, 1, 2]);
        let rep = check_hypothesis_thm1(&big);
        assert!(!rep.pass);
        let v = rep.violation.unwrap();
        assert_eq!(v.subfield_size, 7);
        assert_eq!(v.a, Elem(1));
        assert_eq!(v.intersection, 3);

        assert!(check_hypothesis_thm1(&FSet::empty(&f7)).pass);
    }

    #[test]
    fn hypothesis_thm2_uses_sumset() {
        let f7 = build(7, 1, None).unwrap();
        // A = {0,1}: A+A = {0,1,2}, 9 > 7 fails against G = F_7
        let a = set(&f7, &[0, 1]);
        assert!(!check_hypothesis_thm2(&a).pass);

        let single = set(&f7, &[3]);
        assert!(check_hypothesis_thm2(&single).pass);
    }

    #[test]
    fn dilate_dedup_counts_cosets() {
        // in F_{2^4}, the F_4 subfield has (16-1)/(4-1) = 5 distinct dilates
        let f = build(2, 4, None).unwrap();
        let lattice = subfield_lattice(&f);
        let g = &lattice[1];
        assert_eq!(g.size(), 4);
        let mut covered = FSet::empty(&f);
        let mut dilates = 0;
        for a in f.elems().skip(1) {
            if covered.contains(a) {
                continue;
            }
            dilates += 1;
            for x in g.elements.dilate(a).iter() {
                if x != f.zero() {
                    covered.insert(x);
                }
            }
        }
        assert_eq!(dilates, 5);
    }

    #[test]
    fn normalize_pins_zero_and_one() {
        let f = f5();
        let a = set(&f, &[2, 3, 4]);
        let n = a.normalize().unwrap();
        assert!(n.contains(Elem(0)));
        assert!(n.contains(Elem(1)));
        assert_eq!(n.len(), a.len());
        assert!(matches!(
            set(&f, &[2]).normalize(),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn inverse_set_drops_zero() {
        let f = f5();
        let a = set(&f, &[0, 2, 3]);
        assert_eq!(a.inverse_set(), set(&f, &[2, 3])); // 2⁻¹=3, 3⁻¹=2
    }
}
