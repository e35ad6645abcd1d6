//! The λ trajectory along a prefix of ζ_2 = [0; C_2(1), C_2(2), …]: certified
//! intervals at the doubly-marked positions climb toward alpha_2* from below.

use cf_spectra::constructions::{gbur_alpha_star, zeta_lambda_intervals, zeta_prefix};
use cf_spectra::exact::decimal_string;

fn main() {
    let n = 2;
    let blocks = 6;
    let z = zeta_prefix(n, blocks).unwrap();
    let alpha2 = gbur_alpha_star(n).unwrap();
    println!(
        "zeta_{n} prefix: {} letters over {} blocks; alpha_{n}* ≈ {}",
        z.word.len(),
        blocks,
        alpha2.decimal(12)
    );

    let rows = zeta_lambda_intervals(n, blocks, 24).unwrap();
    println!("\nmarked positions (certified λ intervals):");
    for (k, &i) in z.starred.iter().enumerate() {
        if let Some((_, iv)) = rows.iter().find(|(j, _)| *j == i) {
            println!(
                "  block {:>2}: index {:>3}  λ ∈ [{}, {}]",
                k + 1,
                i,
                decimal_string(iv.lo(), 12),
                decimal_string(iv.hi(), 12),
            );
        }
    }
    println!("\n(first rows of the CSV the `zeta` subcommand writes)");
    for (i, iv) in rows.iter().take(5) {
        println!(
            "  {i},{},{}",
            decimal_string(iv.lo(), 12),
            decimal_string(iv.hi(), 12)
        );
    }
}
