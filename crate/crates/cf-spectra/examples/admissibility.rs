//! Which spectrum values are Markoff values of purely periodic sequences?
//! The first gap's left endpoint is (witness found); the later ones are not
//! (exhaustion up to the period bound), matching their non-admissibility.

use cf_spectra::constructions::{gbur_alpha_star, gbur_beta, theorem1_lambda0};
use cf_spectra::exact::SurdSum;
use cf_spectra::verifiers::{admissible_search, AdmissibilityVerdict};

fn show(label: &str, target: &SurdSum, max_period: usize) {
    let rep = admissible_search(target, max_period, 4).unwrap();
    let verdict = match rep.verdict {
        AdmissibilityVerdict::WitnessFound => format!(
            "witness {:?}",
            rep.witness.as_ref().unwrap().letters()
        ),
        AdmissibilityVerdict::Exhausted => {
            format!("exhausted up to period {max_period}")
        }
    };
    println!(
        "{label:<22} ≈ {}  →  {verdict} ({} candidates, {} pruned)",
        target.decimal(10),
        rep.candidates_checked,
        rep.candidates_pruned,
    );
}

fn main() {
    show("alpha_1*", &gbur_alpha_star(1).unwrap(), 8);
    show(
        "beta_2",
        &SurdSum::from_quadsurd(&gbur_beta(2).unwrap()),
        8,
    );
    show("alpha_2*", &gbur_alpha_star(2).unwrap(), 10);
    show("theorem1 lambda_0", &theorem1_lambda0(), 8);
}
