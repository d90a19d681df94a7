//! A seeded measurement sweep: generate sets across a size range, measure
//! every growth quantity, and report the fraction of hypothesis-passing
//! sets that clear the growth exponents with constant 1.
//!
//! Run with: cargo run --example growth_sweep

use ffgrowth::field::build;
use ffgrowth::harness::{sweep, GenModel, GrowthRecord};

fn main() -> ffgrowth::Result<()> {
    let f = build(101, 1, None)?;

    // Same master seed, same bytes, every time.
    let report = sweep(&f, &GenModel::Uniform, 6, 10, 20, 7)?;

    println!("{}", GrowthRecord::CSV_HEADER);
    for record in report.records.iter().take(8) {
        println!("{}", record.csv_row());
    }
    println!("... ({} records total)", report.records.len());
    println!("\n{}", report.summary);

    // Per-size view of the measured delta exponent.
    println!("\nmean measured exponents by n (base |A|):");
    for n in 6..=10usize {
        let rows: Vec<&GrowthRecord> = report.records.iter().filter(|r| r.n == n).collect();
        let mean = |f: &dyn Fn(&GrowthRecord) -> f64| {
            rows.iter().map(|r| f(r)).sum::<f64>() / rows.len() as f64
        };
        println!(
            "  n = {n:2}: delta {:.4}, sum {:.4}, shifted {:.4}",
            mean(&|r| r.exp_delta.unwrap()),
            mean(&|r| r.exp_sum.unwrap()),
            mean(&|r| r.exp_shift.unwrap()),
        );
    }

    // Structured families tell a different story: geometric progressions
    // have large sumsets by construction.
    let geo = sweep(&f, &GenModel::Geometric, 6, 10, 1, 7)?;
    println!("\ngeometric progressions:");
    for r in &geo.records {
        println!(
            "  n = {:2}: |A+A| = {:3}, |A·A-like growth via squares| = {:3}, Δ = {:3}",
            r.n, r.size_sum, r.size_sq_sum, r.delta
        );
    }

    Ok(())
}
