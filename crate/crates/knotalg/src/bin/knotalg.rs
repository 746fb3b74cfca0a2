//! Command line front end: every computation the library exposes, driven
//! from the line-oriented text formats in `knotalg::io`. All printed
//! invariants are exact (integers, polynomials, p/q angles); nothing is
//! ever rounded.

use clap::{Parser, Subcommand};
use knotalg::forms::wall_triad_signature;
use knotalg::io::{
    parse_chain_triad_file, parse_complex_file, parse_mk_file, parse_root, parse_seifert_file,
    parse_wall_file,
};
use knotalg::polyarith::RootOfUnity;
use knotalg::seifert::{alexander, lt_invariants, mk_check};
use knotalg::verify::{run_suite, SuiteName};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "knotalg",
    about = "Exact Seifert form, Levine-Tristram and chain-splitting computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normalized Alexander polynomial of a Seifert form file
    Alexander { file: PathBuf },
    /// Levine-Tristram signature and nullity at one root of unity
    LtSig {
        file: PathBuf,
        /// root of unity as p/q (0/1 is rejected: xi = 1 is excluded)
        #[arg(long)]
        xi: String,
    },
    /// CSV profile of (nullity, signature) over all p/q with q <= Q
    LtProfile {
        file: PathBuf,
        #[arg(long)]
        denominator_max: u64,
        /// output format; only "csv" is supported
        #[arg(long, default_value = "csv")]
        out: String,
    },
    /// Wall non-additivity signature of a form with three lagrangians
    Wall { file: PathBuf },
    /// Homology of a chain complex file, degree by degree
    ChainHomology { file: PathBuf },
    /// Split a relative cobordism triad and certify the recovery identities
    TriadSplit { file: PathBuf },
    /// Evaluate the Murasugi-Kawauchi inequality on an instance file
    MkCheck { file: PathBuf },
    /// Run a named randomized verification suite deterministically
    Verify {
        /// one of: inv1, cor-inv, sequiv, lt-lemma, split, half-handle
        suite: String,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Batch-ingest a directory of Seifert form files
    Corpus {
        dir: PathBuf,
        #[arg(long, default_value = "table")]
        report: String,
    },
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))
}

fn run() -> Result<(), String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Alexander { file } => {
            let doc = parse_seifert_file(&read(&file)?)
                .map_err(|e| format!("{}: {}", file.display(), e))?;
            println!("{}", alexander(&doc.form));
        }
        Command::LtSig { file, xi } => {
            let doc = parse_seifert_file(&read(&file)?)
                .map_err(|e| format!("{}: {}", file.display(), e))?;
            let root = parse_root(0, &xi).map_err(|e| format!("--xi {}: {}", xi, e.message))?;
            let lt = lt_invariants(&doc.form, root).map_err(|e| e.to_string())?;
            println!("xi = {}", lt.xi);
            println!("nullity = {}", lt.nullity);
            println!("signature = {}", lt.signature);
            println!("alexander_zero = {}", lt.alexander_value_is_zero);
        }
        Command::LtProfile {
            file,
            denominator_max,
            out,
        } => {
            if out != "csv" {
                return Err(format!("unsupported output format '{}'", out));
            }
            let doc = parse_seifert_file(&read(&file)?)
                .map_err(|e| format!("{}: {}", file.display(), e))?;
            let roots = RootOfUnity::all_with_denominator_up_to(denominator_max);
            let mut rows = Vec::with_capacity(roots.len());
            for xi in roots {
                let lt = lt_invariants(&doc.form, xi).map_err(|e| e.to_string())?;
                rows.push(lt);
            }
            // signatures must be conjugation-symmetric; a violation would
            // mean the arithmetic is broken, so refuse to emit
            for lt in &rows {
                let conj = lt.xi.conjugate();
                let other = rows
                    .iter()
                    .find(|o| o.xi == conj)
                    .expect("conjugate root sampled");
                if other.signature != lt.signature || other.nullity != lt.nullity {
                    return Err(format!(
                        "internal error: profile not conjugation-symmetric at {}",
                        lt.xi
                    ));
                }
            }
            println!("p/q,nullity,signature,delta_zero");
            for lt in rows {
                println!(
                    "{},{},{},{}",
                    lt.xi, lt.nullity, lt.signature, lt.alexander_value_is_zero
                );
            }
        }
        Command::Wall { file } => {
            let t = parse_wall_file(&read(&file)?)
                .map_err(|e| format!("{}: {}", file.display(), e))?;
            println!("{}", wall_triad_signature(&t));
        }
        Command::ChainHomology { file } => {
            let doc = parse_complex_file(&read(&file)?)
                .map_err(|e| format!("{}: {}", file.display(), e))?;
            let groups = doc.complex.homology();
            if groups.is_empty() {
                println!("0");
            } else {
                let parts: Vec<String> = groups
                    .iter()
                    .map(|(r, h)| format!("H_{} = {}", r, h))
                    .collect();
                println!("{}", parts.join(", "));
            }
        }
        Command::TriadSplit { file } => {
            let t = parse_chain_triad_file(&read(&file)?)
                .map_err(|e| format!("{}: {}", file.display(), e))?;
            let s = knotalg::chain::split_triad(&t).map_err(|e| e.to_string())?;
            for (name, c) in [
                ("C''", &s.c_dprime),
                ("B''", &s.b_dprime),
                ("W-", &s.w_minus),
                ("W+", &s.w_plus),
            ] {
                if c.is_zero_complex() {
                    println!("{}: zero complex", name);
                } else {
                    let ranks: Vec<String> = (c.degree_lo()..=c.degree_hi())
                        .map(|r| format!("{}:{}", r, c.rank_at(r)))
                        .collect();
                    println!("{}: ranks {}", name, ranks.join(" "));
                }
            }
            let c = &s.certificates;
            println!("D recovered from cone(C'' -> C + C'): {}", c.d_recovered);
            println!("E recovered from cone(B'' -> W- + W+): {}", c.e_recovered);
            println!("C recovered from cone(B'' -> W- + C''): {}", c.c_recovered);
            println!(
                "C' recovered from cone(B'' -> C'' + W+): {}",
                c.c_prime_recovered
            );
            if !c.all() {
                return Err("a splitting certificate failed".into());
            }
        }
        Command::MkCheck { file } => {
            let inst = parse_mk_file(&read(&file)?)
                .map_err(|e| format!("{}: {}", file.display(), e))?;
            let r = mk_check(&inst).map_err(|e| e.to_string())?;
            println!(
                "lhs = {}, rhs = {}, holds = {}, slack = {}",
                r.lhs, r.rhs, r.holds, r.slack
            );
            if !r.holds {
                return Err("inequality violated".into());
            }
        }
        Command::Verify { suite, cases, seed } => {
            let name: SuiteName = suite.parse()?;
            let report = run_suite(name, cases, seed);
            println!("{}", report);
            if !report.passed() {
                return Err(format!("suite {} failed", report.name));
            }
        }
        Command::Corpus { dir, report } => {
            if report != "table" {
                return Err(format!("unsupported report format '{}'", report));
            }
            let mut entries: Vec<PathBuf> = std::fs::read_dir(&dir)
                .map_err(|e| format!("{}: {}", dir.display(), e))?
                .filter_map(|e| e.ok())
                .map(|e| e.path())
                .filter(|p| p.is_file())
                .collect();
            entries.sort();
            let minus_one = RootOfUnity::new(1, 2).expect("-1 is a valid root");
            let mut rows: Vec<(String, String, i64, usize)> = Vec::new();
            for path in entries {
                let text = match read(&path) {
                    Ok(t) => t,
                    Err(e) => {
                        eprintln!("skipped {}", e);
                        continue;
                    }
                };
                let doc = match parse_seifert_file(&text) {
                    Ok(d) => d,
                    Err(e) => {
                        eprintln!("skipped {}: {}", path.display(), e);
                        continue;
                    }
                };
                let label = doc.label.unwrap_or_else(|| {
                    path.file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_else(|| path.display().to_string())
                });
                let lt = lt_invariants(&doc.form, minus_one).map_err(|e| e.to_string())?;
                rows.push((
                    label,
                    alexander(&doc.form).to_string(),
                    lt.signature,
                    lt.nullity,
                ));
            }
            rows.sort();
            // disambiguate duplicate labels
            let mut seen: std::collections::HashMap<String, usize> = Default::default();
            println!("label\tdelta\tsigma(-1)\tnullity(-1)");
            for (label, delta, sig, null) in rows {
                let count = seen.entry(label.clone()).or_insert(0);
                *count += 1;
                let shown = if *count > 1 {
                    eprintln!("warning: duplicate label '{}'", label);
                    format!("{}#{}", label, count)
                } else {
                    label
                };
                println!("{}\t{}\t{}\t{}", shown, delta, sig, null);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::FAILURE
        }
    }
}
