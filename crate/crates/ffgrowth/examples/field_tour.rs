//! Build finite fields, poke at their arithmetic, and walk the subfield
//! lattice: Frobenius fixed points, element degrees, generated subfields.
//!
//! Run with: cargo run --example field_tour

use ffgrowth::field::{build, generated_subfield, subfield_lattice, Elem};
use ffgrowth::set::FSet;

fn main() -> ffgrowth::Result<()> {
    // A prime field needs no modulus.
    let f5 = build(5, 1, None)?;
    println!(
        "F_5: 2 + 4 = {}, 2 * 4 = {}, 4^-1 = {}",
        f5.add(Elem(2), Elem(4)),
        f5.mul(Elem(2), Elem(4)),
        f5.inv(Elem(4))?
    );

    // GF(4) with the explicit modulus x² + x + 1. Element indices encode
    // coefficient vectors in base p, so index 2 is ω (the polynomial x).
    let f4 = build(2, 2, Some(&[1, 1, 1]))?;
    let omega = Elem(2);
    println!(
        "\nGF(4), modulus {}: ω·ω = {} (that is ω + 1)",
        f4.spec().modulus_display(),
        f4.mul(omega, omega)
    );

    // Omitting the modulus picks the lexicographically smallest monic
    // irreducible, so constructions are reproducible everywhere.
    let f64 = build(2, 6, None)?;
    println!(
        "\nGF(64) uses modulus {} by default",
        f64.spec().modulus_display()
    );
    println!("its subfield lattice:");
    for sub in subfield_lattice(&f64) {
        println!(
            "  degree {} -> {} elements (fixed points of frob^{})",
            sub.degree,
            sub.size(),
            sub.degree
        );
    }

    // Element degree = size of the Frobenius orbit.
    println!("\nelement degrees in GF(64):");
    for d in [1u32, 2, 3, 6] {
        let count = f64.elems().filter(|&x| f64.element_degree(x) == d).count();
        println!("  degree {d}: {count} elements");
    }

    // The subfield generated by a set: lcm of generator degrees, verified
    // internally against a direct closure computation.
    let x = f64
        .elems()
        .find(|&x| f64.element_degree(x) == 3)
        .expect("degree-3 elements exist");
    let gen = generated_subfield(&FSet::from_elems(&f64, [x]))?;
    println!(
        "\nelement {x} has degree 3, so it generates F_{} ({} elements)",
        2u32.pow(gen.degree),
        gen.size()
    );

    Ok(())
}
