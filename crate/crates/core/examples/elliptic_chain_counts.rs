//! Limit linear series on a chain of elliptic curves, counted and listed.
//!
//! Run with `cargo run --example elliptic_chain_counts`.

use secant_planes::chains::ChainSpec;
use secant_planes::{count_chain_series, enumerate_chain_series, SchubertIndex};

fn main() -> secant_planes::Result<()> {
    println!("pencils of degree r on a chain of genus 2r-2:");
    for r in 2..=8 {
        let spec = ChainSpec::unramified((2 * r - 2) as usize, 1, r)?;
        println!("  r={r}: {}", count_chain_series(&spec)?);
    }

    println!("\nrigid g^2_d:");
    for (g, d) in [(3, 4), (6, 6), (9, 8), (12, 10)] {
        let spec = ChainSpec::unramified(g, 2, d)?;
        println!("  g={g} d={d}: {}", count_chain_series(&spec)?);
    }

    let spec = ChainSpec::unramified(6, 1, 4)?;
    let listing = enumerate_chain_series(&spec, 3)?;
    println!(
        "\nfirst {} of {} pencils g^1_4 on a genus 6 chain:",
        listing.paths.len(),
        listing.total
    );
    for path in &listing.paths {
        let seqs: Vec<String> = path.sequences.iter().map(|s| s.to_string()).collect();
        println!(
            "  stays {:?}: {}",
            path.stationary_indices,
            seqs.join(" -> ")
        );
    }

    // A cusp at the first point absorbs one unit of rho.
    let cusp = SchubertIndex::new(1, 4, vec![0, 1])?;
    let spec = ChainSpec::new(5, cusp, SchubertIndex::zero(1, 4)?)?;
    println!(
        "\ng^1_4 on genus 5 with a cusp: {}",
        count_chain_series(&spec)?
    );
    Ok(())
}
