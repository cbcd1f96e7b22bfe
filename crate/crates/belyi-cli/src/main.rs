//! Command-line front end: validate parameters, print the classifying
//! element and the boundary word, inspect the covering and the
//! modular-symbol model, and run the cross-verification sweep.
//!
//! Exit codes: 0 on success, 1 when the sweep finds a counterexample,
//! 2 on invalid input.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use belyi::covering::{gluing_table, lift_boundary_loop, EdgeKind};
use belyi::homology::{closed_form_delta, fermat_image, substitute, t_decomposition};
use belyi::modsym::{Mat2, SymbolCombination};
use belyi::verify::{run_modsym_suite, sweep, SweepOptions};
use belyi::CurveParams;

#[derive(Parser)]
#[command(
    name = "belyi",
    about = "Classifying elements of cyclic Belyi curves, computed exactly",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    /// The loop basis `[E_I]` ^ `[E_J]`.
    E,
    /// The invariant elements T_r.
    T,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Check (n, k) and print the derived constants.
    Validate { n: i64, k: i64 },
    /// Print the classifying element.
    Delta {
        n: i64,
        k: i64,
        #[arg(long, value_enum, default_value_t = Basis::E)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the boundary word around infinity.
    Word {
        n: i64,
        k: i64,
        /// Keep the trivial E_0 letters instead of stripping them.
        #[arg(long)]
        placeholders: bool,
    },
    /// Print the letters between E_i^-1 and E_i in the boundary word.
    Between { n: i64, k: i64, i: i64 },
    /// Print the sheet gluing table of the slit cover.
    Sheets { n: i64, k: i64 },
    /// Print the modular-symbol dictionary; --check runs the invariant suite.
    Modsym {
        n: i64,
        k: i64,
        #[arg(long)]
        check: bool,
        /// Random words for the coset fuzz when checking.
        #[arg(long, default_value_t = 10_000)]
        fuzz_words: usize,
        #[arg(long, default_value_t = 0xBE11)]
        seed: u64,
    },
    /// Print the homology image of the square-curve loop indexed by (i, j).
    FermatImage { n: i64, k: i64, i: i64, j: i64 },
    /// Print the classifying element with indices relabeled by j.
    Subst { n: i64, k: i64, j: i64 },
    /// Run the cross-verification sweep over all valid pairs.
    Verify {
        #[arg(long, default_value_t = 31)]
        max_n: u64,
        #[arg(long, default_value_t = 10_000)]
        fuzz_words: usize,
        #[arg(long, default_value_t = 0xBE11)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Validate { n, k } => {
            let p = params(n, k)?;
            println!("n = {}", p.n());
            println!("k = {}", p.k());
            println!("c = {}", p.c());
            println!("genus = {}", p.genus());
            let [a, b, c] = p.inertia();
            println!("inertia = ({a}, {b}, {c})");
        }
        Command::Delta {
            n,
            k,
            basis,
            format,
        } => {
            let p = params(n, k)?;
            println!("{}", render_delta(&p, basis, format));
        }
        Command::Word { n, k, placeholders } => {
            let p = params(n, k)?;
            let (_, word) = lift_boundary_loop(&p);
            let word = if placeholders {
                word
            } else {
                word.strip_placeholders()
            };
            println!("{word}");
        }
        Command::Between { n, k, i } => {
            let p = params(n, k)?;
            let (_, word) = lift_boundary_loop(&p);
            let letters = word.between(p.residue(i)).map_err(|e| e.to_string())?;
            let tokens: Vec<String> = letters.iter().map(|l| l.to_string()).collect();
            println!("{}", tokens.join("·"));
        }
        Command::Sheets { n, k } => {
            let p = params(n, k)?;
            let table = gluing_table(&p);
            for kind in EdgeKind::ALL {
                for sheet in 0..p.n() {
                    let from = p.residue(sheet as i64);
                    let to = table.target(kind, from);
                    println!("{}: {} -> {}", kind.label(), from, to);
                }
            }
        }
        Command::Modsym {
            n,
            k,
            check,
            fuzz_words,
            seed,
        } => {
            let p = params(n, k)?;
            println!(
                "A = {}, B = {}, tau = {}",
                Mat2::GEN_A,
                Mat2::GEN_B,
                Mat2::TAU
            );
            for r in 1..p.n() {
                let rho = SymbolCombination::rho(p.n(), p.residue(r as i64));
                let class = belyi::modsym::rho_to_e(&p, &rho).map_err(|e| e.to_string())?;
                println!("rho_{r} = {class}");
            }
            if check {
                match run_modsym_suite(&p, fuzz_words, seed) {
                    Ok(()) => println!("modsym suite: ok ({fuzz_words} fuzz words)"),
                    Err(detail) => {
                        eprintln!("modsym suite FAILED: {detail}");
                        return Ok(ExitCode::from(1));
                    }
                }
            }
        }
        Command::FermatImage { n, k, i, j } => {
            let p = params(n, k)?;
            println!("{}", fermat_image(&p, p.residue(i), p.residue(j)));
        }
        Command::Subst { n, k, j } => {
            let p = params(n, k)?;
            let delta = closed_form_delta(&p);
            let relabeled = substitute(&p, &delta, p.residue(j)).map_err(|e| e.to_string())?;
            println!("{relabeled}");
        }
        Command::Verify {
            max_n,
            fuzz_words,
            seed,
        } => {
            if max_n < 3 {
                return Err(format!("--max-n must be at least 3, got {max_n}"));
            }
            let opts = SweepOptions {
                max_n,
                fuzz_words,
                seed,
                ..SweepOptions::default()
            };
            let report = sweep(&opts);
            print!("{}", report.render());
            if !report.ok() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn params(n: i64, k: i64) -> Result<CurveParams, String> {
    CurveParams::new(n, k).map_err(|e| e.to_string())
}

fn render_delta(p: &CurveParams, basis: Basis, format: Format) -> String {
    match (basis, format) {
        (Basis::E, Format::Text) => closed_form_delta(p).to_string(),
        (Basis::E, Format::Latex) => closed_form_delta(p).latex(),
        (Basis::E, Format::Json) => {
            let delta = closed_form_delta(p);
            let terms: Vec<_> = delta
                .terms()
                .map(|(i, j, c)| json!({"i": i, "j": j, "coeff": c}))
                .collect();
            json!({
                "n": p.n(),
                "k": p.k(),
                "c": p.c(),
                "object": "delta",
                "basis": "E",
                "terms": terms,
            })
            .to_string()
        }
        (Basis::T, Format::Text) => t_decomposition(p).render(true),
        (Basis::T, Format::Latex) => t_decomposition(p).render(false),
        (Basis::T, Format::Json) => {
            let t = t_decomposition(p);
            let terms: Vec<_> = t
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(idx, &c)| json!({"r": idx + 1, "coeff": c}))
                .collect();
            json!({
                "n": p.n(),
                "k": p.k(),
                "c": p.c(),
                "object": "delta",
                "basis": "T",
                "terms": terms,
            })
            .to_string()
        }
    }
}
