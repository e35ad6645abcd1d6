//! λ values and the two spectrum functionals on bi-infinite sequences:
//! M (supremum, with exact attained/limit certificates) and L (limsup).

use cf_spectra::cf::parse_periodic_cf;
use cf_spectra::spectra::{l_value, lambda_at, m_value, mu_quadratic, BiSeq};

fn main() {
    // constant sequences hit the classical minima
    for (text, label) in [("<(1)||(1)>", "overline(1)"), ("<(2)||(2)>", "overline(2)")] {
        let b: BiSeq = text.parse().unwrap();
        let m = m_value(&b).unwrap();
        println!("M({label}) = {} ≈ {}", m.value, m.value.decimal(12));
    }

    // the four-letter period realizing the first gap's left endpoint
    let b: BiSeq = "<(2,2,1,2)||(2,2,1,2)>".parse().unwrap();
    let m = m_value(&b).unwrap();
    println!(
        "M(overline(2,2,1,2)) = {} ≈ {} (attained at {})",
        m.value,
        m.value.decimal(12),
        m.witness
    );

    // λ at single positions of a mixed sequence
    let b: BiSeq = "<(1)|2,2|(1,2)>".parse().unwrap();
    for i in -1..=2 {
        let lam = lambda_at(&b, i);
        println!("λ_{i}(<(1)|2,2|(1,2)>) ≈ {}", lam.decimal(12));
    }
    let l = l_value(&b).unwrap();
    println!(
        "L(<(1)|2,2|(1,2)>) = {} ≈ {} (in-period offset {})",
        l.value,
        l.value.decimal(12),
        l.witness
    );

    // Lagrange constants of quadratic irrationals
    for expr in ["[0;(1)]", "[0;(2)]", "[0;(1,1,2)]", "[0;(2,2,1,2)]"] {
        let mu = mu_quadratic(&parse_periodic_cf(expr).unwrap()).unwrap();
        println!("mu({expr}) = {} ≈ {}", mu, mu.decimal(12));
    }
}
