//! Thin command-line front end over the library: evaluation, spectrum
//! values, gap endpoints, ζ trajectories, lemma verification suites, and the
//! bounded-period admissibility search. Output is deterministic JSON; exit
//! codes are 0 (ok), 1 (verification failure), 2 (usage or parse error).

use cf_spectra::cf::{eval_periodic, parse_periodic_cf};
use cf_spectra::constructions::{
    gbur_alpha_star, gbur_beta, zeta_lambda_intervals, zeta_prefix, GapEndpointPair,
};
use cf_spectra::exact::{decimal_string, SurdSum};
use cf_spectra::report::{
    admissibility_json, gap_json, parse_value, spectrum_json, value_json,
};
use cf_spectra::spectra::{l_value, lambda_at, m_value_windowed, mu_quadratic, BiSeq};
use cf_spectra::verifiers::{
    admissible_search, run_banned_contrapositive, run_comp_bounds_suite, run_firstelements_suite,
    run_lambda_window_suite, run_min_avoiding, run_parity_agreement_suite, run_repeat_suite,
    run_surgery_suite, SuiteReport,
};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cf-spectra", version, about = "Exact Lagrange/Markoff spectrum computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a continued fraction "[a0; p1, p2, (q1, q2)]" exactly
    Eval {
        /// continued fraction expression
        expr: String,
    },
    /// Spectrum values: lambda | m | l | mu
    Spectrum {
        /// one of: lambda, m, l, mu
        kind: String,
        /// a bi-sequence "<(L)|c|(R)>" (lambda/m/l) or a CF "[a0;…]" (mu)
        seq: String,
        /// position for lambda
        #[arg(short, long)]
        index: Option<i64>,
        /// exact certification window in periods per side
        #[arg(long, default_value_t = 2)]
        max_window: usize,
    },
    /// Gap endpoints (alpha_n*, beta_n)
    Gbur {
        n: u32,
    },
    /// Prefix of the sequence realizing alpha_n* with certified λ intervals
    Zeta {
        n: u32,
        /// number of blocks to concatenate
        blocks: u32,
        /// write the (index, lo, hi) trajectory as CSV here
        #[arg(long)]
        csv: Option<PathBuf>,
        /// slack cap for the certified windows
        #[arg(long, default_value_t = 24)]
        max_slack: usize,
    },
    /// Run a lemma verification suite:
    /// comp | repeat | surgery | parity | banned | min-avoiding | window | firstelements
    Verify {
        lemma: String,
        /// common-prefix length (comp) or block parameter (repeat)
        #[arg(long, default_value_t = 1)]
        n: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        /// word length (min-avoiding)
        #[arg(long, default_value_t = 10)]
        len: usize,
        /// period bound (banned)
        #[arg(long, default_value_t = 6)]
        max_period: usize,
    },
    /// Search purely periodic sequences for one whose Markoff value equals a
    /// target exactly
    Admissible {
        /// "gbur-alpha-star N" | "gbur-beta N" | "theorem1-lambda0" |
        /// a CF expression "[a0;…]" (its exact value) | a value text
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 12)]
        max_period: usize,
        #[arg(long, default_value_t = 4)]
        alphabet_max: u32,
    },
}

fn result_json(command: &str, inputs: Value, output: Value, status: &str) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "output": output,
        "status": status,
    })
}

fn parse_target(spec: &str) -> Result<SurdSum, String> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("gbur-alpha-star") {
        let n: u32 = rest.trim().parse().map_err(|_| "expected an integer n".to_string())?;
        return gbur_alpha_star(n).map_err(|e| e.to_string());
    }
    if let Some(rest) = spec.strip_prefix("gbur-beta") {
        let n: u32 = rest.trim().parse().map_err(|_| "expected an integer n".to_string())?;
        return gbur_beta(n)
            .map(|q| SurdSum::from_quadsurd(&q))
            .map_err(|e| e.to_string());
    }
    if spec == "theorem1-lambda0" {
        return Ok(cf_spectra::constructions::theorem1_lambda0());
    }
    if spec.starts_with('[') {
        let cf = parse_periodic_cf(spec).map_err(|e| e.to_string())?;
        return Ok(SurdSum::from_quadsurd(&eval_periodic(&cf)));
    }
    parse_value(spec).map_err(|e| e.to_string())
}

enum Outcome {
    Ok(Value),
    VerificationFailed(Value),
    Usage(String),
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Eval { expr } => match parse_periodic_cf(&expr) {
            Ok(cf) => {
                let value = SurdSum::from_quadsurd(&eval_periodic(&cf));
                let canon = cf_spectra::cf::canonical_period(&cf);
                Outcome::Ok(result_json(
                    "eval",
                    json!({"expr": expr}),
                    json!({"cf": canon.to_string(), "value": value_json(&value)}),
                    "ok",
                ))
            }
            Err(e) => Outcome::Usage(e.to_string()),
        },
        Command::Spectrum {
            kind,
            seq,
            index,
            max_window,
        } => {
            let inputs = json!({"kind": kind, "seq": seq, "index": index});
            let out = match kind.as_str() {
                "mu" => {
                    let cf = match parse_periodic_cf(&seq) {
                        Ok(cf) => cf,
                        Err(e) => return Outcome::Usage(e.to_string()),
                    };
                    mu_quadratic(&cf).map(|v| json!({"value": value_json(&v)}))
                }
                "lambda" | "m" | "l" => {
                    let b: BiSeq = match seq.parse() {
                        Ok(b) => b,
                        Err(e) => return Outcome::Usage(format!("{e}")),
                    };
                    match kind.as_str() {
                        "lambda" => {
                            let Some(i) = index else {
                                return Outcome::Usage("lambda needs --index".into());
                            };
                            Ok(json!({"value": value_json(&lambda_at(&b, i))}))
                        }
                        "m" => m_value_windowed(&b, max_window).map(|r| spectrum_json(&r)),
                        _ => l_value(&b).map(|r| spectrum_json(&r)),
                    }
                }
                other => return Outcome::Usage(format!("unknown spectrum kind '{other}'")),
            };
            match out {
                Ok(output) => Outcome::Ok(result_json("spectrum", inputs, output, "ok")),
                Err(e) => Outcome::Usage(e.to_string()),
            }
        }
        Command::Gbur { n } => match GapEndpointPair::new(n) {
            Ok(pair) => Outcome::Ok(result_json(
                "gbur",
                json!({"n": n}),
                gap_json(&pair),
                "ok",
            )),
            Err(e) => Outcome::Usage(e.to_string()),
        },
        Command::Zeta {
            n,
            blocks,
            csv,
            max_slack,
        } => {
            let prefix = match zeta_prefix(n, blocks) {
                Ok(z) => z,
                Err(e) => return Outcome::Usage(e.to_string()),
            };
            let rows = match zeta_lambda_intervals(n, blocks, max_slack) {
                Ok(r) => r,
                Err(e) => return Outcome::Usage(e.to_string()),
            };
            if let Some(path) = &csv {
                let mut text = String::from("index,lo,hi\n");
                for (i, iv) in &rows {
                    text.push_str(&format!(
                        "{i},{},{}\n",
                        decimal_string(iv.lo(), 15),
                        decimal_string(iv.hi(), 15),
                    ));
                }
                if let Err(e) = std::fs::write(path, text) {
                    return Outcome::Usage(format!("cannot write {}: {e}", path.display()));
                }
            }
            let starred_rows: Vec<Value> = prefix
                .starred
                .iter()
                .filter_map(|&i| {
                    rows.iter().find(|(j, _)| *j == i).map(|(_, iv)| {
                        json!({
                            "index": i,
                            "lo": decimal_string(iv.lo(), 15),
                            "hi": decimal_string(iv.hi(), 15),
                        })
                    })
                })
                .collect();
            Outcome::Ok(result_json(
                "zeta",
                json!({"n": n, "blocks": blocks, "max_slack": max_slack}),
                json!({
                    "prefix_len": prefix.word.len(),
                    "starred": prefix.starred,
                    "starred_intervals": starred_rows,
                    "rows": rows.len(),
                    "csv": csv.map(|p| p.display().to_string()),
                }),
                "ok",
            ))
        }
        Command::Verify {
            lemma,
            n,
            trials,
            seed,
            len,
            max_period,
        } => {
            let report: SuiteReport = match lemma.as_str() {
                "comp" => run_comp_bounds_suite(n as usize, trials, seed),
                "repeat" => run_repeat_suite(n as u32, trials, seed),
                "surgery" => run_surgery_suite(trials, seed),
                "parity" => run_parity_agreement_suite(trials, seed),
                "banned" => run_banned_contrapositive(max_period),
                "min-avoiding" => run_min_avoiding(len),
                "window" => run_lambda_window_suite(trials, seed),
                "firstelements" => run_firstelements_suite(),
                other => return Outcome::Usage(format!("unknown lemma suite '{other}'")),
            };
            let ok = report.ok();
            let payload = result_json(
                "verify",
                json!({"lemma": lemma}),
                serde_json::to_value(&report).expect("serializable"),
                if ok { "ok" } else { "failed" },
            );
            if ok {
                Outcome::Ok(payload)
            } else {
                Outcome::VerificationFailed(payload)
            }
        }
        Command::Admissible {
            target,
            max_period,
            alphabet_max,
        } => {
            let value = match parse_target(&target) {
                Ok(v) => v,
                Err(e) => return Outcome::Usage(e),
            };
            match admissible_search(&value, max_period, alphabet_max) {
                Ok(rep) => Outcome::Ok(result_json(
                    "admissible",
                    json!({"target": target, "max_period": max_period, "alphabet_max": alphabet_max}),
                    admissibility_json(&rep, &value),
                    "ok",
                )),
                Err(e) => Outcome::Usage(e.to_string()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Outcome::Ok(v) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("valid json"));
            ExitCode::SUCCESS
        }
        Outcome::VerificationFailed(v) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("valid json"));
            ExitCode::from(1)
        }
        Outcome::Usage(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
