//! The structural toolbox: Plünnecke-Ruzsa sumset inequalities, the
//! almost-all-of-X refinement with its measured constant, greedy covering
//! by translates, and the per-element 90%-coverage profile.
//!
//! Run with: cargo run --example covering_lemmas

use num::rational::Ratio;

use ffgrowth::field::build;
use ffgrowth::harness::{generate, GenModel};
use ffgrowth::lemmas::{
    greedy_cover, katz_shen_search, katz_shen_search_exact, lemma32_cover_profile, plunnecke_check,
};
use ffgrowth::set::FSet;

fn main() -> ffgrowth::Result<()> {
    // Plünnecke-Ruzsa: |B1+...+Bk| <= Π|X+Bi| / |X|^(k-1), in exact
    // integer arithmetic. It is a theorem, so `holds` is a self-check.
    let f13 = build(13, 1, None)?;
    let x = FSet::from_indices(&f13, &[0, 1, 5]);
    let b1 = FSet::from_indices(&f13, &[0, 2]);
    let b2 = FSet::from_indices(&f13, &[1, 3, 9]);
    let rep = plunnecke_check(&x, &[b1.clone(), b2.clone()])?;
    println!("X = {x}, B1 = {b1}, B2 = {b2}");
    println!("{rep}");

    // The refinement trades an ε-fraction of X for control of the full
    // iterated sumset; c_measured is the constant the witness achieves.
    let eps = Ratio::new(1, 3);
    let greedy = katz_shen_search(&x, &[b1.clone(), b2.clone()], eps)?;
    let exact = katz_shen_search_exact(&x, &[b1, b2], eps)?;
    println!("\ngreedy: {greedy}");
    println!("exact:  {exact}");
    println!("(greedy constant can never beat the exhaustive one)");

    // Covering a set by translates: greedy selection with the measured
    // count against min(|X+Y|, |X-Y|)/|Y|.
    let f7 = build(7, 1, None)?;
    let x = FSet::from_indices(&f7, &[0, 1, 2]);
    let y = FSet::from_indices(&f7, &[0, 1]);
    let cover = greedy_cover(&x, &y, Ratio::new(0, 1))?;
    println!("\ncover {x} by translates of {y}: {cover}");

    // The lemma-3.2 profile: for every b in B = A+A cover (A-b)² by
    // translates of -A² to 90%, and likewise (B-a)² for every a in A.
    let f101 = build(101, 1, None)?;
    let a = generate(&f101, &GenModel::Uniform, 10, 5)?;
    let profile = lemma32_cover_profile(&a, Ratio::new(1, 2))?;
    println!("\nrandom 10-subset of F_101, eps = 1/2:");
    println!("{profile}");
    let worst = profile
        .b_rows
        .iter()
        .chain(&profile.a_rows)
        .map(|r| r.count)
        .max()
        .unwrap();
    println!("  worst per-element cover count: {worst}");

    Ok(())
}
