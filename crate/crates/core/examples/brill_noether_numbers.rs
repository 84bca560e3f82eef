//! Brill-Noether numbers, Schubert indices and realizability of ramification.
//!
//! Run with `cargo run --example brill_noether_numbers`.

use secant_planes::series::{eh_dimension, eh_exists, rho_ramified, EhDimension};
use secant_planes::{rho, SchubertIndex, SeriesParams};

fn main() -> secant_planes::Result<()> {
    println!("rho(g, r, d) for pencils and nets, genus 0..=8:");
    for r in 1..=2 {
        for g in 0..=8 {
            let d = (0..=2 * g + r).find(|&d| rho(g, r, d) >= 0).unwrap();
            println!("  g={g} r={r}: smallest degree {d}, rho = {}", rho(g, r, d));
        }
    }

    let curve = SeriesParams::new(3, 1, 3)?;
    println!("\ng^1_3 on genus 3: rho = {}", curve.rho());
    for entries in [vec![0, 0], vec![0, 1], vec![1, 1], vec![0, 2]] {
        let alpha = SchubertIndex::new(1, 3, entries)?;
        let a = alpha.to_vanishing();
        let dim = match eh_dimension(&curve, &alpha)? {
            EhDimension::Dimension(n) => n.to_string(),
            EhDimension::Empty => "empty".to_string(),
        };
        println!(
            "  alpha={alpha} vanishing={a} weight={} rho_adj={} exists={} dim={dim}",
            a.weight(),
            rho_ramified(&curve, &alpha)?,
            eh_exists(&curve, &alpha)?,
        );
    }
    Ok(())
}
