//! The bit-vector set algebra: sumsets, difference and product sets,
//! dilates, square sets, and the distance composite (A-A)² + (A-A)².
//!
//! Run with: cargo run --example set_operations

use ffgrowth::field::{build, Elem};
use ffgrowth::set::FSet;

fn main() -> ffgrowth::Result<()> {
    let f = build(101, 1, None)?;

    let interval = FSet::from_elems(&f, (0..8).map(Elem));
    println!("A  = {interval}   (an interval: additively structured)");
    println!("A+A = {}", interval.sumset(&interval)?);
    println!("A·A = {}", interval.product_set(&interval)?);
    println!(
        "|A+A| = {} (small), |A·A| = {} (large): the sum-product tension",
        interval.sumset(&interval)?.len(),
        interval.product_set(&interval)?.len()
    );

    let g = f.generator();
    let geometric = FSet::from_elems(&f, (0..8).map(|e| f.pow(g, e)));
    println!("\nG  = {geometric}   (a geometric progression)");
    println!(
        "|G+G| = {} (large), |G·G| = {} (small): the mirror image",
        geometric.sumset(&geometric)?.len(),
        geometric.product_set(&geometric)?.len()
    );

    // Dilates and translates are cheap affine images.
    println!("\n2·A = {}", interval.dilate(Elem(2)));
    println!("A+1 = {}", interval.translate(Elem(1)));

    // Squaring is the image x -> x², not the product set; in odd
    // characteristic it can shrink.
    let a = FSet::from_indices(&f, &[1, 100, 10, 91]);
    println!("\nB = {a}, B² = {} (collisions: x and -x)", a.square_set());

    // The distance composite behind the distinct-distances statements.
    println!(
        "\nΔ-set of A: (A-A)²+(A-A)² = {}",
        interval.distance_composite()
    );
    println!(
        "|Δ(A)| = {} out of q = {}",
        interval.distance_composite().len(),
        f.q()
    );

    Ok(())
}
