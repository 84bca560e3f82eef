//! Vanishing thresholds for powers of a ramified line bundle.
//!
//! Run with `cargo run --example power_thresholds`.

use secant_planes::ramify::{dn_theta_coefficient, riemann_roch_ceiling, square_bound_branches};
use secant_planes::{power_bound, square_bound, SchubertIndex, SeriesParams};

fn main() -> secant_planes::Result<()> {
    let series = SeriesParams::new(3, 3, 6)?;
    let alpha = SchubertIndex::new(3, 6, vec![0, 0, 1, 2])?;
    let sq = square_bound(&series, &alpha)?;
    let (first, second) = square_bound_branches(&series, &alpha)?;
    println!("g^3_6 on genus 3 with alpha = {alpha}:");
    println!(
        "  L^2 threshold {} (branches {first}, {second}), h0 ceiling {}",
        sq.threshold,
        riemann_roch_ceiling(2, 6, 3)
    );
    println!("  {}", sq.claim);
    for n in 3..=6 {
        let b = power_bound(&series, &alpha, n)?;
        println!(
            "  L^{n}: threshold {} (m = {}), ceiling {}",
            b.threshold,
            b.m,
            riemann_roch_ceiling(n, 6, 3)
        );
    }

    println!("\ncanonical series on genus 4, unramified:");
    let canonical = SeriesParams::new(4, 3, 6)?;
    let zero = SchubertIndex::zero(3, 6)?;
    for n in 2..=5 {
        let b = if n == 2 {
            square_bound(&canonical, &zero)?
        } else {
            power_bound(&canonical, &zero, n)?
        };
        println!(
            "  L^{n}: threshold {}, [D_n] = {} theta",
            b.threshold,
            dn_theta_coefficient(n)?
        );
    }
    Ok(())
}
