//! The subfield-intersection hypotheses that make growth possible:
//! |A ∩ aG| ≤ |G|^(1/2) for every subfield G and dilate a (theorem-1 form),
//! and the same bound for A+A against every aG + b (theorem-2 form).
//! Comparisons are integer-exact: |A ∩ aG|² ≤ |G|.
//!
//! Run with: cargo run --example hypothesis_boundary

use ffgrowth::field::{build, subfield_lattice, Elem};
use ffgrowth::harness::{generate, GenModel};
use ffgrowth::set::{check_hypothesis_thm1, check_hypothesis_thm2, FSet};

fn main() -> ffgrowth::Result<()> {
    // In a prime field the only subfield is F_q itself, so hypothesis 1
    // is exactly |A|² <= q: the boundary sits at floor(sqrt(q)).
    let f101 = build(101, 1, None)?;
    for n in [10usize, 11] {
        let a = generate(&f101, &GenModel::Interval, n, 0)?;
        let rep = check_hypothesis_thm1(&a);
        println!("F_101, |A| = {n}: {rep}");
    }

    // Extension fields have real obstructions: a dilated subfield meets
    // itself fully, so it fails as soon as |A ∩ aG| exceeds sqrt(|G|).
    let f16 = build(2, 4, None)?;
    let f4 = subfield_lattice(&f16)
        .into_iter()
        .find(|s| s.degree == 2)
        .unwrap();
    let coset = f4.elements.dilate(Elem(7));
    println!(
        "\n7·F_4 inside F_16 (4 elements): {}",
        check_hypothesis_thm1(&coset)
    );

    // Trimming to sqrt(|G|) = 2 elements restores the hypothesis — as long
    // as 0 stays out, since {0, x} is itself the dilate x·F_2.
    let trimmed = FSet::from_elems(&f16, coset.iter().filter(|&x| x != f16.zero()).take(2));
    println!(
        "two nonzero elements of it:     {}",
        check_hypothesis_thm1(&trimmed)
    );

    // A uniform random set of the same size usually passes.
    let random = generate(&f16, &GenModel::Uniform, 4, 42)?;
    println!(
        "uniform 4-subset of F_16:       {}",
        check_hypothesis_thm1(&random)
    );

    // The theorem-2 form constrains A+A against every affine coset aG + b,
    // which is far more demanding.
    println!();
    for n in [2usize, 3, 6] {
        let a = generate(&f101, &GenModel::Interval, n, 0)?;
        let rep = check_hypothesis_thm2(&a);
        println!("F_101, interval |A| = {n}, |A+A| = {}: {rep}", 2 * n - 1);
    }

    Ok(())
}
