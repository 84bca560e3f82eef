//! Existence verdicts for secant planes to general curves.
//!
//! Run with `cargo run --example secant_verdicts`.

use secant_planes::secant::{
    coppens_martens_dim, expected_cycle_dim, family_dim_bound, uf_secant_problem,
    very_ample_guaranteed,
};
use secant_planes::{secant_verdict, SecantProblem};

fn report(p: &SecantProblem) {
    let v = secant_verdict(p);
    println!(
        "{p}: cycle dim {}, family dim {}, {}",
        expected_cycle_dim(p),
        family_dim_bound(p),
        v.status.as_str()
    );
    let failing: Vec<_> = v
        .witnesses
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| *n)
        .collect();
    if !failing.is_empty() {
        println!("    failing checks: {}", failing.join(", "));
    }
}

fn main() -> secant_planes::Result<()> {
    // The elliptic quartic in P^3 has no trisecant lines.
    report(&SecantProblem::new(1, 4, 3, 3, 1)?);
    // Quadrisecant lines to a general space curve.
    report(&SecantProblem::new(4, 9, 3, 4, 2)?);
    report(&SecantProblem::new(8, 10, 3, 4, 2)?);
    // e-secant planes through the uf specialization.
    report(&uf_secant_problem(12, 14, 2, 2)?);

    let p = SecantProblem::new(6, 9, 3, 4, 2)?;
    println!(
        "\nequidimensionality value at {p}: {:?}",
        coppens_martens_dim(&p)
    );
    for e in 1..=3 {
        println!(
            "{}-very ampleness of a general g^3_8 on genus 6 guaranteed: {}",
            e - 1,
            very_ample_guaranteed(6, 3, 8, e)?
        );
    }
    Ok(())
}
