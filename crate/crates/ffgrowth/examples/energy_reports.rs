//! Exact energies: the additive energy E+(X, Y) with its representation
//! histogram, the 6-tuple mixed energy, the pigeonhole sum over the ratio
//! set, and the Cauchy-Schwarz inequality |A|⁶ ≤ |A²+A²|·E that turns a
//! small energy into sumset growth.
//!
//! Run with: cargo run --example energy_reports

use ffgrowth::energy::{
    additive_energy, cs_growth_check, dilated_energy, energy_sum_over_ratios, mixed_energy,
};
use ffgrowth::field::{build, Elem};
use ffgrowth::harness::{generate, GenModel};
use ffgrowth::set::FSet;

fn main() -> ffgrowth::Result<()> {
    let f5 = build(5, 1, None)?;
    let a = FSet::from_indices(&f5, &[0, 1]);

    let rep = additive_energy(&a, &a)?;
    println!("A = {a} in F_5");
    println!("{rep}");
    for (s, r) in rep.histogram.support() {
        println!("  r({s}) = {r}   ({r} ways to write {s} as a sum)");
    }

    // The mixed energy counts 6-tuples with a1²+(a2-b1)² = a3²+(a4-b2)².
    let b = a.sumset(&a)?;
    let mixed = mixed_energy(&a, &b)?;
    println!("\nB = A+A = {b}");
    println!("{mixed}");

    // Summing E+(A, rA) over the ratio set: the diagonal quadruples count
    // once per r, everything else pins a unique r, so the sum stays below
    // |R||A|² + |A|⁴ and pigeonholing yields a low-energy witness r.
    let pigeon = energy_sum_over_ratios(&a)?;
    println!("\n{pigeon}");
    println!(
        "  (r = 0 term: {}, the collapsed dilate counts |A|³ quadruples)",
        dilated_energy(&a, Elem(0)).value
    );

    // Cauchy-Schwarz: |A|⁶ ≤ |A²+A²| · E(A², (A-B)²), an identity-grade
    // inequality that holds on every set.
    println!("\n{}", cs_growth_check(&a));

    let f101 = build(101, 1, None)?;
    for seed in [1u64, 2] {
        let a = generate(&f101, &GenModel::Uniform, 8, seed)?;
        let rep = cs_growth_check(&a);
        println!("\nrandom 8-subset of F_101 (seed {seed}): {rep}");
    }

    Ok(())
}
