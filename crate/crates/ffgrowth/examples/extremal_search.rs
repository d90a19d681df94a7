//! Hill-climbing for low-growth sets: random single-element swaps,
//! accepting non-increases of the objective, with every move gated by the
//! subfield hypothesis. Stress-tests how tight the growth exponents are.
//!
//! Run with: cargo run --example extremal_search

use ffgrowth::field::{build, subfield_lattice, Elem};
use ffgrowth::harness::{
    extremal_search, generate, measure, GenModel, HypothesisFilter, Objective,
};
use ffgrowth::set::check_hypothesis_thm1;

fn main() -> ffgrowth::Result<()> {
    // Prime field at the hypothesis boundary n = floor(sqrt(q)).
    let f = build(101, 1, None)?;
    let n = 10;
    let interval = generate(&f, &GenModel::Interval, n, 0)?;
    let start = measure(&interval);
    println!(
        "start (interval, n = {n}): Δ = {}, |A+A| = {}, |A+A²| = {}",
        start.delta, start.size_sum, start.size_shift
    );

    let state = extremal_search(&f, n, 2000, 3, Objective::Delta, HypothesisFilter::Thm1)?;
    println!(
        "after 2000 swaps: best Δ = {} ({} accepted, {} rejected by hypothesis)",
        state.best_objective, state.accepted, state.rejected_by_hypothesis
    );
    println!("best set: {}", state.best_set);
    println!(
        "measured delta exponent: {:.4} (target direction: >= {:.4})",
        state.best.exp_delta.unwrap(),
        1.0 + 1.0 / 21.0
    );

    // In an extension field the truly extremal configuration is a subfield,
    // but subfields fail the hypothesis; the search never visits them.
    let f16 = build(2, 4, None)?;
    let f4 = subfield_lattice(&f16)
        .into_iter()
        .find(|s| s.degree == 2)
        .unwrap();
    let coset = f4.elements.dilate(Elem(7));
    let coset_rec = measure(&coset);
    println!(
        "\nF_16 benchmark: the dilated subfield 7·F_4 has Δ = {} but hypothesis 1 {} \
         (excluded from the search space)",
        coset_rec.delta,
        if check_hypothesis_thm1(&coset).pass {
            "passes"
        } else {
            "fails"
        }
    );

    let state = extremal_search(&f16, 4, 1500, 11, Objective::Delta, HypothesisFilter::Thm1)?;
    println!(
        "best hypothesis-passing 4-subset of F_16: Δ = {} on {}",
        state.best_objective, state.best_set
    );

    // Other objectives drive other quantities.
    let state = extremal_search(&f, n, 1500, 9, Objective::Shifted, HypothesisFilter::Thm1)?;
    println!(
        "\nobjective |A+A²| in F_101: best = {} on {}",
        state.best_objective, state.best_set
    );

    Ok(())
}
