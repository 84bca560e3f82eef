//! Counting (2r-2)-secant (r-2)-planes, and the quadrisecant check against Cayley.
//!
//! Run with `cargo run --example quadrisecant_counts`.

use secant_planes::{castelnuovo, cayley_r3, consistency_check};

fn main() -> secant_planes::Result<()> {
    println!("quadrisecant lines to space curves of degree d and genus g:");
    for d in 6..=10 {
        let row: Vec<String> = (0..=4)
            .map(|g| castelnuovo(d, g, 3).map(|c| format!("{:>5}", c.value)))
            .collect::<Result<_, _>>()?;
        println!("  d={d}: {}", row.join(""));
    }

    let c = castelnuovo(12, 6, 4)?;
    let flags: Vec<_> = c.flags.iter().map(|f| f.as_str()).collect();
    println!("\nhexasecant planes, d=12 g=6 r=4: {} {flags:?}", c.value);

    let closed = cayley_r3(30, 20)?;
    println!("closed form at d=30 g=20: {}", closed.value);

    let report = consistency_check(60, 40)?;
    println!(
        "general sum vs closed form on {} pairs: {} mismatches",
        report.values.len(),
        report.mismatches.len()
    );
    Ok(())
}
