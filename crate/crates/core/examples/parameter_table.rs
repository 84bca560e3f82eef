//! Drives the command-line front end in-process and prints a CSV sweep.
//!
//! Run with `cargo run --example parameter_table`.

use std::io;

use secant_planes::cli;

fn main() {
    let argv = [
        "secant-planes",
        "table",
        "verdict",
        "--g",
        "0..=6",
        "--d",
        "4..=8",
        "--r",
        "3",
        "--e",
        "4",
        "--f",
        "2",
    ];
    let code = cli::run(argv, &mut io::stdout(), &mut io::stderr());
    let json = [
        "secant-planes",
        "castelnuovo",
        "--d",
        "10",
        "--g",
        "2",
        "--r",
        "3",
    ];
    let code = code.max(cli::run(json, &mut io::stdout(), &mut io::stderr()));
    std::process::exit(code.into());
}
