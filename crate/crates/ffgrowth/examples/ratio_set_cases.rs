//! Ratio sets R(A, A) = {(a1-a2)/(a3-a4)} and the closure trichotomy:
//! which of 1+R ⊆ R, A·R ⊆ R, A⁻¹·R ⊆ R fails first, with a concrete
//! witness when one does.
//!
//! Run with: cargo run --example ratio_set_cases

use ffgrowth::field::{build, subfield_lattice, Elem};
use ffgrowth::set::{classify_case, classify_case_xy, ratio_set, verify_case, FSet};

fn main() -> ffgrowth::Result<()> {
    let f5 = build(5, 1, None)?;
    let a = FSet::from_indices(&f5, &[0, 1]);
    let r = ratio_set(&a, &a)?;
    println!("A = {a} in F_5");
    println!("R(A,A) = {r}  (0 is always in: numerator pairs may coincide)");
    let label = classify_case(&a)?;
    println!("classification: {label}");
    println!("witness verifies: {}", verify_case(&label, &a, &a, &a)?);

    // Sets whose ratio set is everything are closed under all three maps.
    let f7 = build(7, 1, None)?;
    let b = FSet::from_indices(&f7, &[0, 1, 2]);
    println!(
        "\nB = {b} in F_7: R(B,B) = {} -> {}",
        ratio_set(&b, &b)?,
        classify_case(&b)?
    );

    // A dilated subfield has a tiny, perfectly closed ratio set.
    let f16 = build(2, 4, None)?;
    let sub = subfield_lattice(&f16)
        .into_iter()
        .find(|s| s.degree == 2)
        .unwrap();
    let coset = sub.elements.dilate(Elem(5));
    let r = ratio_set(&coset, &coset)?;
    println!(
        "\n5·F_4 inside F_16: R = {} (= F_4 itself, since ratios cancel the dilate) -> {}",
        r,
        classify_case(&coset)?
    );

    // The two-set variant R(X, Y), with numerator pairs from Y and
    // denominator pairs from X.
    let f13 = build(13, 1, None)?;
    let x = FSet::from_indices(&f13, &[0, 1, 3]);
    let y = FSet::from_indices(&f13, &[2, 5]);
    let label = classify_case_xy(&x, &y)?;
    println!("\nX = {x}, Y = {y} in F_13: R(X,Y) path gives {label}");
    println!("witness verifies: {}", verify_case(&label, &y, &x, &y)?);

    Ok(())
}
