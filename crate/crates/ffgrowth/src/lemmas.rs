//! Exact checkers and witness searches for the structural machinery:
//! the Plünnecke-Ruzsa inequalities, the almost-all-of-X sumset refinement,
//! greedy covering numbers, and the per-element cover profile behind the
//! 90%-coverage conclusions.
//!
//! The implicit constants (c(ε), C(ε)) are measured and reported, never
//! asserted; the two theorem-grade inequalities (Plünnecke sum and
//! difference forms) are flagged with `holds`, where a `false` can only
//! mean an implementation bug.

use std::fmt;

use num::bigint::BigUint;
use num::rational::Ratio;
use num::BigRational;

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::set::FSet;

/// Subset-enumeration limit for the exact searches.
pub const EXACT_SEARCH_LIMIT: usize = 12;

/// Both Plünnecke-Ruzsa forms in exact integer arithmetic.
#[derive(Clone, Debug)]
pub struct PlunneckeReport {
    /// |B1 + ... + Bk|.
    pub lhs: usize,
    /// Product of the |X + Bi|.
    pub rhs_num: BigUint,
    /// |X|^(k-1).
    pub rhs_den: BigUint,
    /// Sum form, and the difference form when it applies.
    pub holds: bool,
    pub difference: Option<DifferenceForm>,
}

/// |B1 - B2| <= |X+B1||X+B2| / |X|, reported for k = 2.
#[derive(Clone, Debug)]
pub struct DifferenceForm {
    pub lhs: usize,
    pub rhs_num: BigUint,
    pub rhs_den: BigUint,
    pub holds: bool,
}

impl fmt::Display for PlunneckeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sum form: |B1+...+Bk| = {} <= {}/{} [{}]",
            self.lhs,
            self.rhs_num,
            self.rhs_den,
            if self.holds { "holds" } else { "VIOLATED" }
        )?;
        if let Some(d) = &self.difference {
            write!(
                f,
                "; difference form: |B1-B2| = {} <= {}/{} [{}]",
                d.lhs,
                d.rhs_num,
                d.rhs_den,
                if d.holds { "holds" } else { "VIOLATED" }
            )?;
        }
        Ok(())
    }
}

/// |B1+...+Bk| <= |X+B1|...|X+Bk| / |X|^(k-1), and for k = 2 also
/// |B1-B2| <= |X+B1||X+B2| / |X|. Both are theorems: `holds = false`
/// signals a bug, never a property of the input.
pub fn plunnecke_check(x: &FSet, bs: &[FSet]) -> Result<PlunneckeReport> {
    if x.is_empty() {
        return Err(Error::EmptyX);
    }
    if bs.is_empty() {
        return Err(Error::NoSummands);
    }
    let mut iterated = bs[0].clone();
    for b in &bs[1..] {
        iterated = iterated.sumset(b)?;
    }
    let lhs = iterated.len();
    let mut rhs_num = BigUint::from(1u32);
    for b in bs {
        rhs_num *= BigUint::from(x.sumset(b)?.len());
    }
    let rhs_den = BigUint::from(x.len()).pow(bs.len() as u32 - 1);
    let sum_holds = BigUint::from(lhs) * &rhs_den <= rhs_num;

    let difference = if bs.len() == 2 {
        let lhs = bs[0].difference_set(&bs[1])?.len();
        let rhs_num =
            BigUint::from(x.sumset(&bs[0])?.len()) * BigUint::from(x.sumset(&bs[1])?.len());
        let rhs_den = BigUint::from(x.len());
        let holds = BigUint::from(lhs) * &rhs_den <= rhs_num;
        Some(DifferenceForm {
            lhs,
            rhs_num,
            rhs_den,
            holds,
        })
    } else {
        None
    };

    Ok(PlunneckeReport {
        lhs,
        rhs_num,
        rhs_den,
        holds: sum_holds && difference.as_ref().is_none_or(|d| d.holds),
        difference,
    })
}

/// A large subset X' of X with small |X' + B1 + ... + Bk|, and the measured
/// constant it achieves against the Plünnecke quotient.
#[derive(Clone, Debug)]
pub struct KatzShenResult {
    pub witness: FSet,
    pub witness_sumset_size: usize,
    /// |X'+ΣBi| · |X|^(k-1) / Π|X+Bi|, exact.
    pub c_measured: BigRational,
    pub exact: bool,
}

impl fmt::Display for KatzShenResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "|X'| = {} with |X'+B1+...+Bk| = {}, c_measured = {} ({})",
            self.witness.len(),
            self.witness_sumset_size,
            self.c_measured,
            if self.exact { "exact" } else { "greedy" }
        )
    }
}

fn katz_shen_target(x_len: usize, eps: Ratio<u64>) -> Result<usize> {
    if eps <= Ratio::new(0, 1) || eps >= Ratio::new(1, 1) {
        return Err(Error::BadEpsilon("(0, 1)"));
    }
    // ceil((1 - eps)|X|)
    let keep = (Ratio::from_integer(x_len as u64) * (Ratio::from_integer(1) - eps)).ceil();
    Ok(keep.to_integer() as usize)
}

fn measured_constant(witness_sumset: usize, x: &FSet, bs: &[FSet]) -> Result<BigRational> {
    let num = BigUint::from(witness_sumset) * BigUint::from(x.len()).pow(bs.len() as u32 - 1);
    let mut den = BigUint::from(1u32);
    for b in bs {
        den *= BigUint::from(x.sumset(b)?.len());
    }
    Ok(BigRational::new(num.into(), den.into()))
}

/// Greedy witness for the almost-all-of-X refinement: drop the elements of X
/// whose removal shrinks |X' + B1 + ... + Bk| the most, one at a time, until
/// |X'| = ceil((1-ε)|X|). Ties break toward the smallest element index.
pub fn katz_shen_search(x: &FSet, bs: &[FSet], eps: Ratio<u64>) -> Result<KatzShenResult> {
    if x.is_empty() {
        return Err(Error::EmptyX);
    }
    if bs.is_empty() {
        return Err(Error::NoSummands);
    }
    let target = katz_shen_target(x.len(), eps)?;
    let mut summands = bs[0].clone();
    for b in &bs[1..] {
        summands = summands.sumset(b)?;
    }

    let mut current = x.clone();
    while current.len() > target {
        let mut best: Option<(Elem, usize)> = None;
        for e in current.iter() {
            let mut trial = current.clone();
            trial.remove(e);
            let size = trial.sumset(&summands)?.len();
            if best.is_none_or(|(_, s)| size < s) {
                best = Some((e, size));
            }
        }
        let (e, _) = best.expect("current is nonempty");
        current.remove(e);
    }
    let witness_sumset_size = current.sumset(&summands)?.len();
    Ok(KatzShenResult {
        c_measured: measured_constant(witness_sumset_size, x, bs)?,
        witness: current,
        witness_sumset_size,
        exact: false,
    })
}

/// Exhaustive version of `katz_shen_search`: the true minimizer over all
/// subsets of size ceil((1-ε)|X|). Gated at |X| <= 12.
pub fn katz_shen_search_exact(x: &FSet, bs: &[FSet], eps: Ratio<u64>) -> Result<KatzShenResult> {
    if x.is_empty() {
        return Err(Error::EmptyX);
    }
    if bs.is_empty() {
        return Err(Error::NoSummands);
    }
    if x.len() > EXACT_SEARCH_LIMIT {
        return Err(Error::ExactSearchTooLarge {
            limit: EXACT_SEARCH_LIMIT,
            got: x.len(),
        });
    }
    let target = katz_shen_target(x.len(), eps)?;
    let mut summands = bs[0].clone();
    for b in &bs[1..] {
        summands = summands.sumset(b)?;
    }
    let elems: Vec<Elem> = x.iter().collect();
    let n = elems.len();
    let mut best: Option<(FSet, usize)> = None;
    // growing the subset can only grow the sumset, so size == target suffices
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != target {
            continue;
        }
        let subset = FSet::from_elems(
            x.field(),
            (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| elems[i]),
        );
        let size = subset.sumset(&summands)?.len();
        if best.as_ref().is_none_or(|&(_, s)| size < s) {
            best = Some((subset, size));
        }
    }
    let (witness, witness_sumset_size) = best.expect("target <= |X|");
    Ok(KatzShenResult {
        c_measured: measured_constant(witness_sumset_size, x, bs)?,
        witness,
        witness_sumset_size,
        exact: true,
    })
}

/// Outcome of the greedy translate cover.
#[derive(Clone, Debug)]
pub struct CoverResult {
    /// The chosen t, in selection order; the cover sets are t + Y.
    pub translates: Vec<Elem>,
    pub covered_fraction: Ratio<u64>,
    pub count: usize,
    /// min(|X+Y|, |X-Y|) / |Y|, the quantity the covering lemma compares
    /// the count against (up to its unspecified constant).
    pub bound: Ratio<u64>,
}

impl CoverResult {
    /// count / bound, the measured constant.
    pub fn ratio_to_bound(&self) -> Ratio<u64> {
        Ratio::from_integer(self.count as u64) / self.bound
    }
}

impl fmt::Display for CoverResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} translates cover {} of X (bound {}, measured C = {})",
            self.count,
            self.covered_fraction,
            self.bound,
            self.ratio_to_bound()
        )
    }
}

/// Greedily cover at least (1-ε)|X| by translates of Y: each round picks the
/// t whose translate t+Y hits the most uncovered elements (ties toward the
/// smallest t index).
pub fn greedy_cover(x: &FSet, y: &FSet, eps: Ratio<u64>) -> Result<CoverResult> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptySet);
    }
    if eps < Ratio::new(0, 1) || eps >= Ratio::new(1, 1) {
        return Err(Error::BadEpsilon("[0, 1)"));
    }
    let f = x.field();
    x.sumset(y)?; // field check
    let needed = (Ratio::from_integer(x.len() as u64) * (Ratio::from_integer(1) - eps))
        .ceil()
        .to_integer() as usize;

    let mut uncovered = x.clone();
    let mut translates = Vec::new();
    while x.len() - uncovered.len() < needed {
        let mut best: Option<(Elem, usize)> = None;
        for t in f.elems() {
            let gain = y
                .iter()
                .filter(|&g| uncovered.contains(f.add(t, g)))
                .count();
            if best.is_none_or(|(_, bg)| gain > bg) {
                best = Some((t, gain));
            }
        }
        let (t, gain) = best.expect("field is nonempty");
        debug_assert!(gain > 0, "uncovered x is always reachable by some t + Y");
        translates.push(t);
        for g in y.iter() {
            uncovered.remove(f.add(t, g));
        }
    }

    let bound_num = x.sumset(y)?.len().min(x.difference_set(y)?.len()) as u64;
    Ok(CoverResult {
        count: translates.len(),
        translates,
        covered_fraction: Ratio::new((x.len() - uncovered.len()) as u64, x.len() as u64),
        bound: Ratio::new(bound_num, y.len() as u64),
    })
}

/// One profiled element of the 90%-coverage scan.
#[derive(Clone, Debug)]
pub struct CoverProfileRow {
    pub base_point: Elem,
    /// |(A-b)²| resp. |(B-a)²|.
    pub target_size: usize,
    pub count: usize,
    pub covered_fraction: Ratio<u64>,
}

/// Cover counts of (A-b)² and (B-a)² by translates of -A², for every b ∈ B
/// and a ∈ A, against the threshold ceil(|A|^ε).
#[derive(Clone, Debug)]
pub struct Lemma32Profile {
    pub set_size: usize,
    pub sumset_size: usize,
    /// ceil(|A|^ε); rows are also compared against ceil(target_size^ε)
    /// because squaring collisions can make the two differ.
    pub threshold: usize,
    pub b_rows: Vec<CoverProfileRow>,
    pub a_rows: Vec<CoverProfileRow>,
    /// |{b ∈ B : count <= threshold}| and the same under the per-row threshold.
    pub y_star: usize,
    pub y_star_sized: usize,
    pub x_star: usize,
    pub x_star_sized: usize,
    /// |X*| / |A|^(1-ε) and |Y*| / |B|^(1-ε).
    pub x_star_ratio: f64,
    pub y_star_ratio: f64,
}

impl fmt::Display for Lemma32Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "cover profile: |A| = {}, |B| = {}, threshold {}",
            self.set_size, self.sumset_size, self.threshold
        )?;
        writeln!(
            f,
            "  Y* = {}/{} (sized threshold: {}), ratio vs |B|^(1-eps): {:.6}",
            self.y_star, self.sumset_size, self.y_star_sized, self.y_star_ratio
        )?;
        write!(
            f,
            "  X* = {}/{} (sized threshold: {}), ratio vs |A|^(1-eps): {:.6}",
            self.x_star, self.set_size, self.x_star_sized, self.x_star_ratio
        )
    }
}

/// Profile the covering conclusions at fixed coverage 9/10: for every b ∈ B
/// greedily cover (A-b)² by translates of -A², and for every a ∈ A cover
/// (B-a)², reporting the counts against ceil(|A|^ε).
pub fn lemma32_cover_profile(a: &FSet, eps: Ratio<u64>) -> Result<Lemma32Profile> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let f = a.field();
    let b = a.sumset(a)?;
    let neg_squares = a.square_set().negate();
    let tenth = Ratio::new(1, 10);

    let profile_one = |base: Elem, source: &FSet| -> Result<CoverProfileRow> {
        let target = source.translate(f.neg(base)).square_set();
        let cover = greedy_cover(&target, &neg_squares, tenth)?;
        Ok(CoverProfileRow {
            base_point: base,
            target_size: target.len(),
            count: cover.count,
            covered_fraction: cover.covered_fraction,
        })
    };

    let mut b_rows = Vec::with_capacity(b.len());
    for point in b.iter() {
        b_rows.push(profile_one(point, a)?);
    }
    let mut a_rows = Vec::with_capacity(a.len());
    for point in a.iter() {
        a_rows.push(profile_one(point, &b)?);
    }

    let eps_f = *eps.numer() as f64 / *eps.denom() as f64;
    let pow_ceil = |base: usize, e: f64| -> usize {
        if base == 0 {
            0
        } else {
            (base as f64).powf(e).ceil() as usize
        }
    };
    let threshold = pow_ceil(a.len(), eps_f);
    let stars = |rows: &[CoverProfileRow]| -> (usize, usize) {
        let fixed = rows.iter().filter(|r| r.count <= threshold).count();
        let sized = rows
            .iter()
            .filter(|r| r.count <= pow_ceil(r.target_size, eps_f))
            .count();
        (fixed, sized)
    };
    let (y_star, y_star_sized) = stars(&b_rows);
    let (x_star, x_star_sized) = stars(&a_rows);

    Ok(Lemma32Profile {
        set_size: a.len(),
        sumset_size: b.len(),
        threshold,
        y_star_ratio: y_star as f64 / (b.len() as f64).powf(1.0 - eps_f),
        x_star_ratio: x_star as f64 / (a.len() as f64).powf(1.0 - eps_f),
        b_rows,
        a_rows,
        y_star,
        y_star_sized,
        x_star,
        x_star_sized,
    })
}
