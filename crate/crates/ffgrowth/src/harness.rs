//! End-to-end growth measurement: generate or ingest sets, check the
//! subfield hypotheses, classify the closure case, compute every growth
//! quantity with its measured exponent, and hill-climb for low-growth sets.
//!
//! Everything is seed-deterministic: the same (model, field, n, seed) always
//! produces the same set, and a sweep with the same master seed produces
//! byte-identical CSV.

use std::fmt;

use num::bigint::BigUint;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::energy::{additive_energy, cs_growth_check, energy_sum_over_ratios, CsGrowthReport};
use crate::error::{Error, Result};
use crate::field::{subfield_lattice, Elem, Field};
use crate::set::{check_hypothesis_thm1, check_hypothesis_thm2, classify_case, CaseLabel, FSet};

/// Growth exponents measured against these targets, size^den >= n^num in
/// exact integers: delta against 1 + 1/21, the sum/square-sum max against
/// 1 + 1/42, the shifted sum against 1 + 1/84.
pub const DELTA_EXPONENT: (u32, u32) = (22, 21);
pub const MAXPAIR_EXPONENT: (u32, u32) = (43, 42);
pub const SHIFT_EXPONENT: (u32, u32) = (85, 84);

/// One measured set: every growth quantity, both hypothesis flags, the
/// closure case, the measured exponents, and the Cauchy-Schwarz diagnostics.
#[derive(Clone, Debug)]
pub struct GrowthRecord {
    pub p: u64,
    pub k: u32,
    pub q: u32,
    pub model: String,
    pub seed: Option<u64>,
    pub n: usize,
    /// |A+A|.
    pub size_sum: usize,
    /// |A²+A²|.
    pub size_sq_sum: usize,
    /// |A+A²|.
    pub size_shift: usize,
    /// |(A-A)²+(A-A)²|.
    pub delta: usize,
    pub hyp1: bool,
    pub hyp2: bool,
    /// None when |A| < 2 (the ratio set is undefined there).
    pub case: Option<CaseLabel>,
    pub exp_sum: Option<f64>,
    pub exp_sq_sum: Option<f64>,
    pub exp_shift: Option<f64>,
    pub exp_delta: Option<f64>,
    pub cs: CsGrowthReport,
}

impl GrowthRecord {
    pub const CSV_HEADER: &'static str = "p,k,q,model,seed,n,size_sum,size_sq_sum,size_shift,\
                                          delta,hyp1,hyp2,case,exp_sum,exp_sq_sum,exp_shift,exp_delta";

    pub fn csv_row(&self) -> String {
        let opt_f = |v: Option<f64>| v.map(|x| format!("{x:.6}")).unwrap_or_default();
        let seed = self.seed.map(|s| s.to_string()).unwrap_or_default();
        let case = self.case.as_ref().map(|c| c.name()).unwrap_or("-");
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.p,
            self.k,
            self.q,
            self.model,
            seed,
            self.n,
            self.size_sum,
            self.size_sq_sum,
            self.size_shift,
            self.delta,
            self.hyp1,
            self.hyp2,
            case,
            opt_f(self.exp_sum),
            opt_f(self.exp_sq_sum),
            opt_f(self.exp_shift),
            opt_f(self.exp_delta),
        )
    }
}

impl fmt::Display for GrowthRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "A ⊂ F_{} ({}, n = {}): |A+A| = {}, |A²+A²| = {}, |A+A²| = {}, Δ = {}",
            self.q,
            self.model,
            self.n,
            self.size_sum,
            self.size_sq_sum,
            self.size_shift,
            self.delta
        )?;
        writeln!(
            f,
            "  hypothesis 1: {}, hypothesis 2: {}, case: {}",
            if self.hyp1 { "pass" } else { "fail" },
            if self.hyp2 { "pass" } else { "fail" },
            self.case.as_ref().map(|c| c.name()).unwrap_or("-")
        )?;
        if let (Some(es), Some(eq), Some(eh), Some(ed)) = (
            self.exp_sum,
            self.exp_sq_sum,
            self.exp_shift,
            self.exp_delta,
        ) {
            writeln!(
                f,
                "  exponents (base |A|): sum {es:.6}, sq-sum {eq:.6}, shift {eh:.6}, delta {ed:.6}"
            )?;
        }
        write!(f, "  cauchy-schwarz: {}", self.cs)
    }
}

/// Measure a set loaded from outside any generation model.
pub fn measure(a: &FSet) -> GrowthRecord {
    measure_labeled(a, "file", None)
}

/// Measure with the provenance that lets a sweep row be regenerated.
pub fn measure_labeled(a: &FSet, model: &str, seed: Option<u64>) -> GrowthRecord {
    let f = a.field();
    let squares = a.square_set();
    let size_sum = a.sumset(a).expect("same field").len();
    let size_sq_sum = squares.sumset(&squares).expect("same field").len();
    let size_shift = a.sumset(&squares).expect("same field").len();
    let diff_squares = a.difference_set(a).expect("same field").square_set();
    let delta = diff_squares
        .sumset(&diff_squares)
        .expect("same field")
        .len();
    let n = a.len();
    if n > 0 {
        // containment gives these for free; failing them means a bug
        assert!(delta >= diff_squares.len());
        assert!(size_sum >= n);
        assert!(size_shift >= squares.len());
    }
    let exponent =
        |size: usize| -> Option<f64> { (n >= 2).then(|| (size as f64).ln() / (n as f64).ln()) };
    GrowthRecord {
        p: f.p(),
        k: f.k(),
        q: f.q(),
        model: model.to_string(),
        seed,
        n,
        size_sum,
        size_sq_sum,
        size_shift,
        delta,
        hyp1: check_hypothesis_thm1(a).pass,
        hyp2: check_hypothesis_thm2(a).pass,
        case: (n >= 2).then(|| classify_case(a).expect("|A| >= 2")),
        exp_sum: exponent(size_sum),
        exp_sq_sum: exponent(size_sq_sum),
        exp_shift: exponent(size_shift),
        exp_delta: exponent(delta),
        cs: cs_growth_check(a),
    }
}

/// Families of experiment sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenModel {
    /// n elements sampled without replacement.
    Uniform,
    /// {0, ..., n-1} under the canonical encoding; prime fields only.
    Interval,
    /// n elements of a dilate aG of a subfield G. Degree and dilate default
    /// to the smallest subfield that fits and a seeded nonzero a.
    SubfieldCoset {
        degree: Option<u32>,
        dilate: Option<u32>,
    },
    /// {g^0, ..., g^(n-1)} for the canonical primitive element g.
    Geometric,
}

impl GenModel {
    pub fn name(&self) -> &'static str {
        match self {
            GenModel::Uniform => "uniform",
            GenModel::Interval => "interval",
            GenModel::SubfieldCoset { .. } => "subfield_coset",
            GenModel::Geometric => "geometric",
        }
    }

    pub fn parse(s: &str) -> Result<GenModel> {
        match s {
            "uniform" => Ok(GenModel::Uniform),
            "interval" => Ok(GenModel::Interval),
            "subfield_coset" => Ok(GenModel::SubfieldCoset {
                degree: None,
                dilate: None,
            }),
            "geometric" => Ok(GenModel::Geometric),
            other => Err(Error::BadModel(other.to_string())),
        }
    }
}

/// Deterministic set generation: the same (model, field, n, seed) always
/// yields the same set.
pub fn generate(field: &Field, model: &GenModel, n: usize, seed: u64) -> Result<FSet> {
    let q = field.q() as usize;
    if n > q {
        return Err(Error::NTooLarge {
            n,
            why: format!("field has only {q} elements"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match model {
        GenModel::Uniform => {
            let picks = sample(&mut rng, q, n);
            Ok(FSet::from_elems(
                field,
                picks.iter().map(|i| Elem(i as u32)),
            ))
        }
        GenModel::Interval => {
            if field.k() != 1 {
                return Err(Error::BadModel(
                    "interval is defined for prime fields only".into(),
                ));
            }
            Ok(FSet::from_elems(field, (0..n as u32).map(Elem)))
        }
        GenModel::SubfieldCoset { degree, dilate } => {
            let lattice = subfield_lattice(field);
            let sub = match degree {
                Some(d) => lattice
                    .into_iter()
                    .find(|s| s.degree == *d)
                    .ok_or_else(|| Error::BadModel(format!("no subfield of degree {d}")))?,
                None => lattice
                    .into_iter()
                    .find(|s| s.size() >= n)
                    .ok_or(Error::NTooLarge {
                        n,
                        why: "no subfield is that large".into(),
                    })?,
            };
            if sub.size() < n {
                return Err(Error::NTooLarge {
                    n,
                    why: format!(
                        "subfield of degree {} has {} elements",
                        sub.degree,
                        sub.size()
                    ),
                });
            }
            let a = match dilate {
                Some(a) => {
                    let a = field.elem(*a as u64)?;
                    if a == field.zero() {
                        return Err(Error::BadModel("dilate must be nonzero".into()));
                    }
                    a
                }
                None => Elem(rng.gen_range(1..field.q())),
            };
            let coset: Vec<Elem> = sub.elements.dilate(a).iter().collect();
            let picks = sample(&mut rng, coset.len(), n);
            Ok(FSet::from_elems(field, picks.iter().map(|i| coset[i])))
        }
        GenModel::Geometric => {
            if n > q - 1 {
                return Err(Error::NTooLarge {
                    n,
                    why: format!("only {} distinct powers of the generator", q - 1),
                });
            }
            let g = field.generator();
            Ok(FSet::from_elems(
                field,
                (0..n as u64).map(|e| field.pow(g, e)),
            ))
        }
    }
}

/// A full sweep: records in (n, trial) order plus the pass-fraction summary.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub records: Vec<GrowthRecord>,
    pub summary: SweepSummary,
}

/// Fractions of hypothesis-1-passing trials that clear each growth exponent
/// with constant 1.
#[derive(Clone, Debug, Default)]
pub struct SweepSummary {
    pub total: usize,
    pub hyp1_passing: usize,
    pub delta_hits: usize,
    pub maxpair_hits: usize,
    pub shift_hits: usize,
}

impl SweepSummary {
    pub fn delta_fraction(&self) -> f64 {
        self.delta_hits as f64 / self.hyp1_passing.max(1) as f64
    }

    pub fn maxpair_fraction(&self) -> f64 {
        self.maxpair_hits as f64 / self.hyp1_passing.max(1) as f64
    }

    pub fn shift_fraction(&self) -> f64 {
        self.shift_hits as f64 / self.hyp1_passing.max(1) as f64
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} records, {} passing hypothesis 1; among those: \
             delta >= n^(22/21): {:.4}, max pair >= n^(43/42): {:.4}, \
             shifted >= n^(85/84): {:.4}",
            self.total,
            self.hyp1_passing,
            self.delta_fraction(),
            self.maxpair_fraction(),
            self.shift_fraction()
        )
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The seed a sweep hands to `generate` for a given (n, trial) cell.
pub fn derived_seed(master: u64, n: usize, trial: usize) -> u64 {
    splitmix64(master ^ splitmix64(((n as u64) << 32) | trial as u64))
}

/// One record per (n, trial): trials are independent and the output order
/// is fixed by (n, trial), never by completion order.
pub fn sweep(
    field: &Field,
    model: &GenModel,
    n_lo: usize,
    n_hi: usize,
    trials: usize,
    master_seed: u64,
) -> Result<SweepReport> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    if n_lo > n_hi {
        return Err(Error::NTooLarge {
            n: n_lo,
            why: "empty n range".into(),
        });
    }
    let mut records = Vec::with_capacity((n_hi - n_lo + 1) * trials);
    let mut summary = SweepSummary::default();
    for n in n_lo..=n_hi {
        for trial in 0..trials {
            let seed = derived_seed(master_seed, n, trial);
            let a = generate(field, model, n, seed)?;
            let record = measure_labeled(&a, model.name(), Some(seed));
            if a.len() >= 2 {
                assert!(
                    pigeonhole_cs_holds(&a),
                    "Cauchy-Schwarz pigeonhole failed on a sweep record; this is a bug"
                );
            }
            summary.total += 1;
            if record.hyp1 {
                summary.hyp1_passing += 1;
                if meets_growth(record.delta, n, DELTA_EXPONENT) {
                    summary.delta_hits += 1;
                }
                let maxpair = record.size_sum.max(record.size_sq_sum);
                if meets_growth(maxpair, n, MAXPAIR_EXPONENT) {
                    summary.maxpair_hits += 1;
                }
                if meets_growth(record.size_shift, n, SHIFT_EXPONENT) {
                    summary.shift_hits += 1;
                }
            }
            records.push(record);
        }
    }
    Ok(SweepReport { records, summary })
}

/// size >= n^(num/den), exactly: size^den >= n^num.
pub fn meets_growth(size: usize, n: usize, (num, den): (u32, u32)) -> bool {
    BigUint::from(size).pow(den) >= BigUint::from(n).pow(num)
}

/// |A + rA| · E⁺(A, rA) >= (|A||rA|)² for the pigeonhole witness r.
pub fn pigeonhole_cs_holds(a: &FSet) -> bool {
    let witness = match energy_sum_over_ratios(a) {
        Ok(rep) => rep.witness_r,
        Err(_) => return true, // |A| < 2: nothing to check
    };
    let ra = a.dilate(witness);
    let sum = a.sumset(&ra).expect("same field").len() as u128;
    let energy = additive_energy(a, &ra).expect("same field").value;
    let lhs = sum * energy;
    let rhs = (a.len() as u128 * ra.len() as u128).pow(2);
    lhs >= rhs
}

/// Search objective: the growth quantity being driven down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    /// Δ = |(A-A)²+(A-A)²|.
    Delta,
    /// max(|A+A|, |A²+A²|).
    MaxPair,
    /// |A+A²|.
    Shifted,
}

impl Objective {
    pub fn parse(s: &str) -> Result<Objective> {
        match s {
            "delta" => Ok(Objective::Delta),
            "maxpair" => Ok(Objective::MaxPair),
            "shifted" => Ok(Objective::Shifted),
            other => Err(Error::BadModel(format!("unknown objective: {other}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Objective::Delta => "delta",
            Objective::MaxPair => "maxpair",
            Objective::Shifted => "shifted",
        }
    }

    fn evaluate(&self, a: &FSet) -> usize {
        match self {
            Objective::Delta => a.distance_composite().len(),
            Objective::MaxPair => {
                let sq = a.square_set();
                a.sumset(a)
                    .expect("same field")
                    .len()
                    .max(sq.sumset(&sq).expect("same field").len())
            }
            Objective::Shifted => a.sumset(&a.square_set()).expect("same field").len(),
        }
    }
}

/// Which subfield hypothesis gates the search moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypothesisFilter {
    Thm1,
    Thm2,
}

impl HypothesisFilter {
    fn passes(&self, a: &FSet) -> bool {
        match self {
            HypothesisFilter::Thm1 => check_hypothesis_thm1(a).pass,
            HypothesisFilter::Thm2 => check_hypothesis_thm2(a).pass,
        }
    }
}

/// Final state of a hill-climb.
#[derive(Clone, Debug)]
pub struct SearchState {
    pub objective: Objective,
    pub seed: u64,
    pub iterations: usize,
    pub accepted: usize,
    pub rejected_by_hypothesis: usize,
    pub best_objective: usize,
    pub best_set: FSet,
    pub best: GrowthRecord,
}

impl fmt::Display for SearchState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "search({}): {} iterations, {} accepted, {} rejected by hypothesis",
            self.objective.name(),
            self.iterations,
            self.accepted,
            self.rejected_by_hypothesis
        )?;
        writeln!(f, "best objective = {}", self.best_objective)?;
        writeln!(f, "best set = {}", self.best_set)?;
        write!(f, "{}", self.best)
    }
}

/// Hill-climb over single-element swaps, accepting non-increases of the
/// objective and rejecting any swap that violates the chosen hypothesis.
/// Single trajectory per seed, no restarts.
pub fn extremal_search(
    field: &Field,
    n: usize,
    iterations: usize,
    seed: u64,
    objective: Objective,
    filter: HypothesisFilter,
) -> Result<SearchState> {
    if iterations == 0 {
        return Err(Error::ZeroIterations);
    }
    if n < 2 || n > field.q() as usize {
        return Err(Error::NTooLarge {
            n,
            why: format!("need 2 <= n <= q = {}", field.q()),
        });
    }

    // start from the interval in prime fields, else seeded uniform sets;
    // retry a bounded number of times to find a hypothesis-passing start
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut start = None;
    if field.k() == 1 {
        let interval = generate(field, &GenModel::Interval, n, seed)?;
        if filter.passes(&interval) {
            start = Some(interval);
        }
    }
    if start.is_none() {
        for attempt in 0..200u64 {
            let candidate = generate(field, &GenModel::Uniform, n, splitmix64(seed ^ attempt))?;
            if filter.passes(&candidate) {
                start = Some(candidate);
                break;
            }
        }
    }
    let mut current = start.ok_or_else(|| {
        Error::Infeasible(format!(
            "no hypothesis-passing start set of size {n} found; the hypothesis may be \
             unsatisfiable at this size (e.g. n² > q forces a violation at G = F_q)"
        ))
    })?;
    let mut current_obj = objective.evaluate(&current);
    let mut best_set = current.clone();
    let mut best_obj = current_obj;
    let mut accepted = 0usize;
    let mut rejected_by_hypothesis = 0usize;

    for _ in 0..iterations {
        let members: Vec<Elem> = current.iter().collect();
        let out = members[rng.gen_range(0..members.len())];
        let incoming = Elem(rng.gen_range(0..field.q()));
        if current.contains(incoming) {
            continue;
        }
        let mut candidate = current.clone();
        candidate.remove(out);
        candidate.insert(incoming);
        if !filter.passes(&candidate) {
            rejected_by_hypothesis += 1;
            continue;
        }
        let obj = objective.evaluate(&candidate);
        if obj <= current_obj {
            current = candidate;
            current_obj = obj;
            accepted += 1;
            if obj < best_obj {
                best_obj = obj;
                best_set = current.clone();
            }
        }
    }

    Ok(SearchState {
        objective,
        seed,
        iterations,
        accepted,
        rejected_by_hypothesis,
        best_objective: best_obj,
        best: measure_labeled(&best_set, "search", Some(seed)),
        best_set,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build;

    #[test]
    fn measure_pinned_example() {
        let f = build(5, 1, None).unwrap();
        let a = FSet::from_indices(&f, &[0, 1]);
        let rec = measure(&a);
        assert_eq!(rec.delta, 3);
        assert_eq!(rec.size_sum, 3);
        assert_eq!(rec.size_sq_sum, 3);
        assert_eq!(rec.size_shift, 3); // {0,1} + {0,1}
        let e = rec.exp_delta.unwrap();
        assert!((e - 3f64.log2()).abs() < 1e-12);
        assert!(e >= 1.0 + 1.0 / 21.0);
    }

    #[test]
    fn measure_singleton_has_no_exponents() {
        let f = build(5, 1, None).unwrap();
        let a = FSet::from_indices(&f, &[3]);
        let rec = measure(&a);
        assert_eq!(
            (rec.size_sum, rec.size_sq_sum, rec.size_shift, rec.delta),
            (1, 1, 1, 1)
        );
        assert!(rec.exp_delta.is_none());
        assert!(rec.case.is_none());
    }

    #[test]
    fn measure_full_field_saturates() {
        let f = build(7, 1, None).unwrap();
        let a = FSet::full(&f);
        let rec = measure(&a);
        assert_eq!(rec.size_sum, 7);
        assert_eq!(rec.size_sq_sum, 7);
        assert_eq!(rec.delta, 7);
    }

    #[test]
    fn growth_inequalities_on_records() {
        // Δ >= |(A-A)²|, |A+A| >= |A|, |A+A²| >= |A²|
        let f = build(13, 1, None).unwrap();
        for seed in 0..20 {
            let a = generate(&f, &GenModel::Uniform, 5, seed).unwrap();
            let rec = measure(&a);
            let dd_sq = a.difference_set(&a).unwrap().square_set();
            assert!(rec.delta >= dd_sq.len());
            assert!(rec.size_sum >= a.len());
            assert!(rec.size_shift >= a.square_set().len());
        }
    }

    #[test]
    fn generate_interval() {
        let f = build(101, 1, None).unwrap();
        let a = generate(&f, &GenModel::Interval, 10, 0).unwrap();
        assert_eq!(a, FSet::from_elems(&f, (0..10).map(Elem)));

        let ext = build(2, 4, None).unwrap();
        assert!(matches!(
            generate(&ext, &GenModel::Interval, 3, 0),
            Err(Error::BadModel(_))
        ));
    }

    #[test]
    fn generate_uniform_deterministic() {
        let f = build(101, 1, None).unwrap();
        let a = generate(&f, &GenModel::Uniform, 10, 1).unwrap();
        let b = generate(&f, &GenModel::Uniform, 10, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
        let c = generate(&f, &GenModel::Uniform, 10, 2).unwrap();
        assert_ne!(a, c); // different seed, almost surely different set
    }

    #[test]
    fn generate_subfield_coset() {
        let f = build(2, 4, None).unwrap();
        let model = GenModel::SubfieldCoset {
            degree: Some(2),
            dilate: Some(4),
        };
        let a = generate(&f, &model, 4, 7).unwrap();
        assert_eq!(a.len(), 4);
        let lattice = subfield_lattice(&f);
        let coset = lattice[1].elements.dilate(Elem(4));
        assert!(a.is_subset_of(&coset));
    }

    #[test]
    fn generate_subfield_coset_defaults() {
        // unspecified degree picks the smallest subfield that fits;
        // unspecified dilate is seeded and nonzero
        let f = build(2, 4, None).unwrap();
        let model = GenModel::SubfieldCoset {
            degree: None,
            dilate: None,
        };
        let a = generate(&f, &model, 3, 5).unwrap();
        let b = generate(&f, &model, 3, 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        // 3 elements need at least F_4; some dilate of it contains the set
        let lattice = subfield_lattice(&f);
        let f4 = &lattice[1].elements;
        let contained = f.elems().skip(1).any(|c| a.is_subset_of(&f4.dilate(c)));
        assert!(contained, "{a} is not inside any dilate of F_4");
    }

    #[test]
    fn generate_geometric() {
        let f = build(7, 1, None).unwrap();
        let a = generate(&f, &GenModel::Geometric, 3, 0).unwrap();
        let g = f.generator();
        assert!(a.contains(Elem(1)));
        assert!(a.contains(g));
        assert!(a.contains(f.mul(g, g)));
        assert!(matches!(
            generate(&f, &GenModel::Geometric, 7, 0),
            Err(Error::NTooLarge { .. })
        ));
    }

    #[test]
    fn generate_size_cap() {
        let f = build(5, 1, None).unwrap();
        assert!(matches!(
            generate(&f, &GenModel::Uniform, 6, 0),
            Err(Error::NTooLarge { .. })
        ));
    }

    #[test]
    fn sweep_small_and_reproducible() {
        let f = build(13, 1, None).unwrap();
        let report = sweep(&f, &GenModel::Uniform, 2, 3, 4, 7).unwrap();
        assert_eq!(report.records.len(), 8);
        assert_eq!(report.summary.total, 8);
        // all records at n <= 3 in F_13 pass hypothesis 1 (9 <= 13)
        assert_eq!(report.summary.hyp1_passing, 8);

        let again = sweep(&f, &GenModel::Uniform, 2, 3, 4, 7).unwrap();
        let rows: Vec<String> = report.records.iter().map(|r| r.csv_row()).collect();
        let rows2: Vec<String> = again.records.iter().map(|r| r.csv_row()).collect();
        assert_eq!(rows, rows2);

        assert!(matches!(
            sweep(&f, &GenModel::Uniform, 2, 3, 0, 7),
            Err(Error::ZeroTrials)
        ));
    }

    #[test]
    fn sweep_crossing_sqrt_q_flips_hypothesis_one() {
        // in a prime field the only subfield is F_q, so hypothesis 1 is
        // exactly n² <= q: n = 3 passes in F_13, n = 4 fails
        let f = build(13, 1, None).unwrap();
        let report = sweep(&f, &GenModel::Uniform, 3, 4, 5, 21).unwrap();
        for rec in &report.records {
            assert_eq!(rec.hyp1, rec.n * rec.n <= 13, "n = {}", rec.n);
        }
        assert_eq!(report.summary.hyp1_passing, 5);
    }

    #[test]
    fn sweep_records_regenerate() {
        let f = build(13, 1, None).unwrap();
        let report = sweep(&f, &GenModel::Uniform, 3, 3, 2, 99).unwrap();
        for rec in &report.records {
            let again = generate(&f, &GenModel::Uniform, rec.n, rec.seed.unwrap()).unwrap();
            let remeasured = measure_labeled(&again, "uniform", rec.seed);
            assert_eq!(remeasured.csv_row(), rec.csv_row());
        }
    }

    #[test]
    fn search_monotone_and_feasible() {
        let f = build(101, 1, None).unwrap();
        let n = 10; // floor(sqrt(101))
        let interval = generate(&f, &GenModel::Interval, n, 0).unwrap();
        let start_delta = Objective::Delta.evaluate(&interval);
        let state =
            extremal_search(&f, n, 50, 3, Objective::Delta, HypothesisFilter::Thm1).unwrap();
        assert!(state.best_objective <= start_delta);
        assert!(check_hypothesis_thm1(&state.best_set).pass);
        assert_eq!(state.best_set.len(), n);
    }

    #[test]
    fn search_single_iteration_returns_start_quality() {
        let f = build(101, 1, None).unwrap();
        let state = extremal_search(&f, 5, 1, 3, Objective::Delta, HypothesisFilter::Thm1).unwrap();
        assert!(state.best_objective >= 1);
        assert_eq!(state.iterations, 1);
    }

    #[test]
    fn search_detects_infeasible_size() {
        // n = 11 in F_101: 121 > 101, hypothesis 1 cannot hold
        let f = build(101, 1, None).unwrap();
        assert!(matches!(
            extremal_search(&f, 11, 10, 3, Objective::Delta, HypothesisFilter::Thm1),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn pigeonhole_cs_on_random_sets() {
        let f = build(101, 1, None).unwrap();
        for seed in 0..30 {
            let a = generate(&f, &GenModel::Uniform, 6, seed).unwrap();
            assert!(pigeonhole_cs_holds(&a));
        }
    }
}
