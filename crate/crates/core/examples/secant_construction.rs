//! Gluing data for a secant plane on a degenerate curve.
//!
//! Run with `cargo run --example secant_construction [g d r e f]`.

use secant_planes::chains::{assumption_degree_checks, merged_sequence_is_strict};
use secant_planes::series::eh_exists;
use secant_planes::{build_secant_construction, gamma_dimension_identity, SecantProblem};

fn main() -> secant_planes::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let [g, d, r, e, f] = match args[..] {
        [g, d, r, e, f] => [g, d, r, e, f],
        _ => [8, 10, 3, 4, 2],
    };
    let p = SecantProblem::new(g, d, r, e, f)?;
    let c = build_secant_construction(&p)?;
    println!("{p}");
    println!("  alpha  = {} (sum {})", c.alpha, c.alpha.sum());
    println!("  beta   = {} (sum {})", c.beta, c.beta.sum());
    println!(
        "  merged = {} strict={}",
        c.merged,
        merged_sequence_is_strict(&p)?
    );
    println!("  gamma  = {}", c.gamma);
    println!(
        "  gamma realizable on a genus {e} pointed curve: {}",
        eh_exists(&secant_planes::SeriesParams::new(e, r, d)?, &c.gamma)?
    );
    println!("  dimension identity: {}", gamma_dimension_identity(&p)?);
    let checks = assumption_degree_checks(&p);
    println!(
        "  degree check {} = e-1, ass4 {}, g-d+r >= e {}",
        checks.assumption2_degree, checks.ass4_holds, checks.gdr_ge_e
    );
    Ok(())
}
