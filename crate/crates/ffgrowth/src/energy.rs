//! Exact energy counts via representation-function histograms.
//!
//! The additive energy E⁺(X, Y) counts quadruples with x1 + y1 = x2 + y2 and
//! equals sum r(s)² for r(s) = #{(x, y) : x + y = s}. The mixed energy counts
//! 6-tuples (a1, a2, b1, a3, a4, b2) in (A×A×B)² with
//! a1² + (a2 - b1)² = a3² + (a4 - b2)², i.e. sum v(t)² for the obvious v.
//! Histograms are O(|X||Y| + q); the naive tuple enumerations live in the
//! test suite as oracles.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::field::Elem;
use crate::set::{ratio_set, FSet};

/// Counts of representations r(t) per field element t.
#[derive(Clone, Debug)]
pub struct RepHistogram {
    counts: Vec<u64>,
    total: u128,
}

impl RepHistogram {
    fn new(q: usize) -> RepHistogram {
        RepHistogram {
            counts: vec![0; q],
            total: 0,
        }
    }

    fn bump(&mut self, t: Elem) {
        self.counts[t.0 as usize] += 1;
        self.total += 1;
    }

    pub fn count(&self, t: Elem) -> u64 {
        self.counts[t.0 as usize]
    }

    /// Sum of all counts; equals the product of the source-set sizes.
    pub fn total(&self) -> u128 {
        self.total
    }

    /// Nonzero entries in ascending element order.
    pub fn support(&self) -> impl Iterator<Item = (Elem, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (Elem(i as u32), c))
    }

    pub fn support_size(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }

    pub fn sum_of_squares(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128 * c as u128).sum()
    }
}

impl Serialize for RepHistogram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        for (t, c) in self.support() {
            map.serialize_entry(&t.0, &c)?;
        }
        map.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EnergyKind {
    Additive,
    Mixed,
}

/// An exact energy value together with the histogram behind it.
#[derive(Clone, Debug, Serialize)]
pub struct EnergyReport {
    pub kind: EnergyKind,
    pub value: u128,
    pub histogram: RepHistogram,
    /// (role, size) descriptors of the input sets.
    pub operands: Vec<(String, usize)>,
}

impl fmt::Display for EnergyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            EnergyKind::Additive => "E+",
            EnergyKind::Mixed => "E_mixed",
        };
        let ops: Vec<String> = self
            .operands
            .iter()
            .map(|(role, size)| format!("|{role}| = {size}"))
            .collect();
        write!(
            f,
            "{kind} = {} ({}; support {})",
            self.value,
            ops.join(", "),
            self.histogram.support_size()
        )
    }
}

/// E⁺(X, Y), exactly.
pub fn additive_energy(x: &FSet, y: &FSet) -> Result<EnergyReport> {
    let f = x.field();
    x.sumset(y)?; // field check
    let mut hist = RepHistogram::new(f.q() as usize);
    for a in x.iter() {
        for b in y.iter() {
            hist.bump(f.add(a, b));
        }
    }
    Ok(EnergyReport {
        kind: EnergyKind::Additive,
        value: hist.sum_of_squares(),
        histogram: hist,
        operands: vec![("X".into(), x.len()), ("Y".into(), y.len())],
    })
}

/// The summand behind the ratio-sum: the number of quadruples
/// (a1, a2, b1, b2) ∈ A⁴ with a1 + r·b1 = a2 + r·b2. For r ≠ 0 this equals
/// E⁺(A, rA); for r = 0 the dilation collapses and the count is |A|³.
pub fn dilated_energy(a: &FSet, r: Elem) -> EnergyReport {
    let f = a.field();
    let mut hist = RepHistogram::new(f.q() as usize);
    for x in a.iter() {
        for y in a.iter() {
            hist.bump(f.add(x, f.mul(r, y)));
        }
    }
    EnergyReport {
        kind: EnergyKind::Additive,
        value: hist.sum_of_squares(),
        histogram: hist,
        operands: vec![("A".into(), a.len()), (format!("{r}·A"), a.len())],
    }
}

/// E(A², (A-B)²): 6-tuples in (A×A×B)² with a1² + (a2-b1)² = a3² + (a4-b2)².
pub fn mixed_energy(a: &FSet, b: &FSet) -> Result<EnergyReport> {
    let f = a.field();
    a.sumset(b)?; // field check
    let mut hist = RepHistogram::new(f.q() as usize);
    for a1 in a.iter() {
        let s1 = f.square(a1);
        for a2 in a.iter() {
            for b1 in b.iter() {
                hist.bump(f.add(s1, f.square(f.sub(a2, b1))));
            }
        }
    }
    Ok(EnergyReport {
        kind: EnergyKind::Mixed,
        value: hist.sum_of_squares(),
        histogram: hist,
        operands: vec![("A".into(), a.len()), ("B".into(), b.len())],
    })
}

/// The pigeonhole sum over the ratio set, its closed upper bound, and the
/// energy-minimizing witness r.
#[derive(Clone, Debug, Serialize)]
pub struct RatioEnergySum {
    pub sum: u128,
    /// |R(A,A)|·|A|² + |A|⁴.
    pub bound: u128,
    pub ratio_set_size: usize,
    pub witness_r: Elem,
    pub witness_energy: u128,
}

impl fmt::Display for RatioEnergySum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sum_r E+(A, rA) = {} <= {} over |R| = {}; witness r = {} with E+ = {}",
            self.sum, self.bound, self.ratio_set_size, self.witness_r, self.witness_energy
        )
    }
}

/// Sum of E⁺(A, rA) over r ∈ R(A, A), with r = 0 included (the dilate
/// degenerates there but 0 always lies in the ratio set).
pub fn energy_sum_over_ratios(a: &FSet) -> Result<RatioEnergySum> {
    let r_set = ratio_set(a, a)?;
    let n = a.len() as u128;
    let mut sum = 0u128;
    let mut witness: Option<(Elem, u128)> = None;
    for r in r_set.iter() {
        let term = dilated_energy(a, r).value;
        sum += term;
        if witness.is_none_or(|(_, best)| term < best) {
            witness = Some((r, term));
        }
    }
    let (witness_r, witness_energy) = witness.expect("ratio set contains 0");
    let bound = r_set.len() as u128 * n * n + n * n * n * n;
    assert!(
        sum <= bound,
        "pigeonhole bound violated: {sum} > {bound}; this is a bug"
    );
    Ok(RatioEnergySum {
        sum,
        bound,
        ratio_set_size: r_set.len(),
        witness_r,
        witness_energy,
    })
}

/// Both sides of |A|⁶ ≤ |A²+A²| · E(A², (A-B)²) for B = A+A, plus the
/// diagnostic exponent implied by the energy.
#[derive(Clone, Debug, Serialize)]
pub struct CsGrowthReport {
    pub set_size: usize,
    pub sumset_size: usize,
    pub sq_sumset_size: usize,
    pub energy: u128,
    /// |A|⁶.
    pub lhs: u128,
    /// |A²+A²| · energy.
    pub rhs: u128,
    pub holds: bool,
    /// 3 - log(E/|B|²) / log|A| when E < |A|³|B|² and |A| >= 2; logs are
    /// natural, the base conversion makes this the exponent to base |A|.
    pub epsilon: Option<f64>,
}

impl fmt::Display for CsGrowthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "|A|^6 = {} {} |A²+A²|·E = {}·{} = {}",
            self.lhs,
            if self.holds { "<=" } else { ">" },
            self.sq_sumset_size,
            self.energy,
            self.rhs
        )?;
        if let Some(eps) = self.epsilon {
            write!(f, " (implied epsilon {eps:.6})")?;
        }
        Ok(())
    }
}

/// The Cauchy-Schwarz growth inequality for B = A+A. Holds on every input;
/// a `holds = false` report signals an implementation bug.
pub fn cs_growth_check(a: &FSet) -> CsGrowthReport {
    let b = a.sumset(a).expect("same field");
    let squares = a.square_set();
    let sq_sum = squares.sumset(&squares).expect("same field");
    let energy = mixed_energy(a, &b).expect("same field").value;
    let n = a.len() as u128;
    let lhs = n.pow(6);
    let rhs = sq_sum.len() as u128 * energy;
    let epsilon = if a.len() >= 2 {
        let n3b2 = n.pow(3) * (b.len() as u128).pow(2);
        (energy < n3b2).then(|| {
            let log_e = (energy as f64).ln();
            let log_b2 = 2.0 * (b.len() as f64).ln();
            3.0 - (log_e - log_b2) / (a.len() as f64).ln()
        })
    } else {
        None
    };
    CsGrowthReport {
        set_size: a.len(),
        sumset_size: b.len(),
        sq_sumset_size: sq_sum.len(),
        energy,
        lhs,
        rhs,
        holds: lhs <= rhs,
        epsilon,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{build, Field};

    fn f5() -> Field {
        build(5, 1, None).unwrap()
    }

    fn set(field: &Field, idx: &[u32]) -> FSet {
        FSet::from_indices(field, idx)
    }

    #[test]
    fn additive_energy_examples() {
        let f = f5();
        let a = set(&f, &[0, 1]);
        let rep = additive_energy(&a, &a).unwrap();
        assert_eq!(rep.value, 6);
        assert_eq!(rep.histogram.total(), 4);
        assert_eq!(rep.histogram.count(Elem(1)), 2);

        let x = set(&f, &[0]);
        assert_eq!(additive_energy(&x, &a).unwrap().value, 2);

        let full = FSet::full(&f);
        assert_eq!(additive_energy(&full, &full).unwrap().value, 125);
    }

    #[test]
    fn mixed_energy_pinned_example() {
        let f = f5();
        let a = set(&f, &[0, 1]);
        let b = a.sumset(&a).unwrap();
        let rep = mixed_energy(&a, &b).unwrap();
        assert_eq!(rep.value, 44);
        let v: Vec<(Elem, u64)> = rep.histogram.support().collect();
        assert_eq!(
            v,
            vec![(Elem(0), 3), (Elem(1), 5), (Elem(2), 3), (Elem(4), 1)]
        );
        assert_eq!(rep.histogram.total(), 12); // |A|²|B|
    }

    #[test]
    fn mixed_energy_degenerate_cases() {
        let f = f5();
        let a = set(&f, &[3]);
        let b = set(&f, &[0]);
        assert_eq!(mixed_energy(&a, &b).unwrap().value, 1);
        let empty = FSet::empty(&f);
        assert_eq!(mixed_energy(&empty, &b).unwrap().value, 0);
    }

    #[test]
    fn ratio_sum_pinned_example() {
        let f = f5();
        let a = set(&f, &[0, 1]);
        // R = {0, 1, 4}: terms 8 (r = 0), 6, 6
        assert_eq!(dilated_energy(&a, Elem(0)).value, 8);
        assert_eq!(dilated_energy(&a, Elem(1)).value, 6);
        assert_eq!(dilated_energy(&a, Elem(4)).value, 6);
        let rep = energy_sum_over_ratios(&a).unwrap();
        assert_eq!(rep.sum, 20);
        assert_eq!(rep.bound, 28);
        assert_eq!(rep.witness_r, Elem(1)); // smallest index among the ties at 6
        assert_eq!(rep.witness_energy, 6);
        // pigeonhole: witness term is at most the average
        assert!(rep.witness_energy * rep.ratio_set_size as u128 <= rep.sum);
    }

    #[test]
    fn ratio_sum_closed_form() {
        // sum_r term(r) = |R||A|² + |A|³(|A|-1): diagonal quadruples count
        // once per r, off-diagonal ones pin a unique r in R
        let f = build(13, 1, None).unwrap();
        for idx in [&[0u32, 1, 5][..], &[2, 3, 7, 11], &[0, 1, 2, 3, 4]] {
            let a = set(&f, idx);
            let rep = energy_sum_over_ratios(&a).unwrap();
            let n = a.len() as u128;
            let expected = rep.ratio_set_size as u128 * n * n + n * n * n * (n - 1);
            assert_eq!(rep.sum, expected);
        }
    }

    #[test]
    fn dilated_energy_matches_set_energy_for_nonzero_r() {
        let f = build(13, 1, None).unwrap();
        let a = set(&f, &[0, 2, 3, 7]);
        for r in 1..13 {
            let r = Elem(r);
            let via_dilate = additive_energy(&a, &a.dilate(r)).unwrap().value;
            assert_eq!(dilated_energy(&a, r).value, via_dilate);
        }
    }

    #[test]
    fn cs_growth_pinned_example() {
        let f = f5();
        let a = set(&f, &[0, 1]);
        let rep = cs_growth_check(&a);
        assert_eq!(rep.lhs, 64);
        assert_eq!(rep.rhs, 3 * 44);
        assert!(rep.holds);
    }

    #[test]
    fn cs_growth_singleton() {
        let f = f5();
        let rep = cs_growth_check(&set(&f, &[2]));
        assert_eq!(rep.lhs, 1);
        assert!(rep.holds);
        assert!(rep.epsilon.is_none());
    }

    #[test]
    fn histogram_cauchy_schwarz_floor() {
        let f = build(13, 1, None).unwrap();
        let x = set(&f, &[0, 1, 3, 9]);
        let y = set(&f, &[2, 5, 6]);
        let rep = additive_energy(&x, &y).unwrap();
        let total = rep.histogram.total();
        let support = rep.histogram.support_size() as u128;
        // value >= total²/|support|
        assert!(rep.value * support >= total * total);
        // E+(X,Y) = E+(Y,X)
        assert_eq!(rep.value, additive_energy(&y, &x).unwrap().value);
    }
}
