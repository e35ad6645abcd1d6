//! Exact continued-fraction evaluation: parse, evaluate, expand back, and
//! print certificates (minimal polynomial, isolating interval, decimals).

use cf_spectra::cf::{canonical_period, eval_periodic, expand_surd, parse_periodic_cf};
use cf_spectra::exact::SurdSum;

fn main() {
    for expr in ["[0;(1)]", "[0;(2)]", "[0;(2,1,2,2)]", "[0;1,1,(2)]", "[1;(2)]", "[0;1,1,2]"] {
        let cf = parse_periodic_cf(expr).unwrap();
        let value = eval_periodic(&cf);
        let sum = SurdSum::from_quadsurd(&value);
        println!("{expr:>14}  =  {value}");
        println!("{:>14}     minpoly (ascending): {:?}", "", value.minpoly());
        println!("{:>14}     decimal: {}", "", sum.decimal(20));
        if !cf.is_finite() {
            let back = expand_surd(&value);
            println!("{:>14}     expands back to {}", "", canonical_period(&back));
        }
        println!();
    }

    // a 20-bit certified interval for the golden-ratio tail
    let golden = eval_periodic(&parse_periodic_cf("[0;(1)]").unwrap());
    let iv = golden.refine(20);
    println!("[0;(1)] lies in {iv} (width ≤ 2^-20)");
}
