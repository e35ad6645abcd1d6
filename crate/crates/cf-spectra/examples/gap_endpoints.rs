//! The chain of maximal gaps (alpha_n*, beta_n) climbing toward 1+√5, all
//! exact, with the triple identity 2 + x_0 + y_0 = alpha_(n+1)*.

use cf_spectra::constructions::{w0_x0_y0, GapEndpointPair};
use cf_spectra::exact::SurdSum;
use std::cmp::Ordering;

fn main() {
    println!("{:>2}  {:<22} {:<22} gap width", "n", "alpha_n*", "beta_n");
    for n in 1..=6 {
        let pair = GapEndpointPair::new(n).unwrap();
        println!(
            "{n:>2}  {:<22} {:<22} {}",
            pair.alpha_star.decimal(18),
            SurdSum::from_quadsurd(&pair.beta).decimal(18),
            pair.gap_width().decimal(18),
        );
    }
    println!("limit: 1+√5 ≈ 3.236067977499789696…\n");

    for n in 1..=4 {
        let (w0, x0, y0) = w0_x0_y0(n).unwrap();
        let sum = SurdSum::make(&x0, &y0).add(&SurdSum::from_int(2));
        let target = cf_spectra::constructions::gbur_alpha_star(n + 1).unwrap();
        assert_eq!(sum.compare(&target), Ordering::Equal);
        println!(
            "n={n}: 2 + x0 + y0 = alpha_{}* exactly  (w0 = {w0})",
            n + 1
        );
    }
}
