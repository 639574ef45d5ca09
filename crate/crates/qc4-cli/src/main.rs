use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qc4::cosets::{all_cosets, CosetClass};
use qc4::distance::{
    min_distance_bruteforce, min_distance_bz, Budget, DistanceBound, DistanceResult,
    BRUTE_FORCE_CAP,
};
use qc4::error::Error;
use qc4::poly::parse_coeff_string;
use qc4::qc2::{build_qc_code, Qc2Spec};
use qc4::quantum::{compare_records, derive_closure, hermitian_construction, RecordsDb, Window};

use qc4_cli::catalog::{BASELINE_RECORDS_CSV, CATALOG};
use qc4_cli::dossier::CodeDossier;
use qc4_cli::reproduce::{reproduce, RowOutcome, RowSpec};
use qc4_cli::search::{search_nu, SearchConfig};

/// Exact construction and verification of 2-generator quasi-cyclic codes
/// over GF(4) and the binary quantum codes they induce.
#[derive(Parser)]
#[command(name = "qc4", version, about)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// 4-cyclotomic cosets modulo n with skew-symmetry classification
    Cosets {
        #[arg(long)]
        n: usize,
    },
    /// Build a code dossier from (n, g1, g2, nu) in coefficient notation
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        #[arg(long)]
        nu: String,
        /// Write the dossier to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify the dual-containment verdicts of a stored dossier
    Check { file: PathBuf },
    /// Compute the minimum distance and update the dossier in place
    Distance {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Wall-clock budget in seconds (bz only)
        #[arg(long, default_value_t = 900.0)]
        budget: f64,
    },
    /// Derive quantum parameters from a verified dossier (updates the file)
    Quantum { file: PathBuf },
    /// Propagation-rule closure of a dossier's quantum parameters
    Derive {
        file: PathBuf,
        #[arg(long)]
        max_n: u32,
        #[arg(long)]
        min_k: u32,
        #[arg(long)]
        min_n: Option<u32>,
        #[arg(long)]
        max_k: Option<u32>,
        #[arg(long, default_value_t = 8)]
        max_steps: usize,
    },
    /// Search over the mixing polynomial ν for dual-containing codes
    Search {
        #[arg(long)]
        config: PathBuf,
        /// Override the worker count from the config
        #[arg(long)]
        workers: Option<usize>,
        /// Write accepted dossiers (and an index) into this directory
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Compare stored dossiers against a records table
    Records {
        /// Records CSV; defaults to the bundled snapshot
        #[arg(long)]
        db: Option<PathBuf>,
        /// Directory of dossier JSON files
        #[arg(long)]
        candidates: PathBuf,
    },
    /// Rebuild the bundled catalog rows and compare against the records
    Reproduce {
        /// Records CSV; defaults to the bundled snapshot
        #[arg(long)]
        db: Option<PathBuf>,
        /// Distance budget per row, seconds
        #[arg(long, default_value_t = 900.0)]
        budget: f64,
        /// Comma-separated 1-based row numbers
        #[arg(long, value_delimiter = ',')]
        rows: Option<Vec<usize>>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Bf,
    Bz,
}

const EXIT_VALIDATION: u8 = 2;
const EXIT_BOUNDS_ONLY: u8 = 3;
const EXIT_INVARIANT: u8 = 4;

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::Invariant(_) | Error::AdjointMismatch => EXIT_INVARIANT,
        _ => EXIT_VALIDATION,
    }
}

fn load_db(path: &Option<PathBuf>) -> Result<RecordsDb, Error> {
    match path {
        Some(p) => RecordsDb::from_path(p),
        None => RecordsDb::from_reader(BASELINE_RECORDS_CSV.as_bytes()),
    }
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable report")
    );
}

fn describe_distance(d: &DistanceResult) -> String {
    let stats = format!(
        "{} words, {} information sets{}",
        d.stats.codewords_enumerated,
        d.stats.information_sets,
        d.stats
            .elapsed_secs
            .map(|s| format!(", {s:.2}s"))
            .unwrap_or_default()
    );
    match d.bound {
        DistanceBound::Exact { value } => format!("d = {value} (exact; {stats})"),
        DistanceBound::Bounds { lower, upper } => {
            format!("{lower} <= d <= {upper} (budget exhausted; {stats})")
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Cosets { n } => {
            let cosets = all_cosets(*n)?;
            if cli.json {
                #[derive(serde::Serialize)]
                struct Row<'a> {
                    rep: usize,
                    size: usize,
                    members: &'a [usize],
                    class: CosetClass,
                }
                let rows: Vec<Row> = cosets
                    .iter()
                    .map(|c| Row {
                        rep: c.rep(),
                        size: c.len(),
                        members: c.members(),
                        class: c.classify(),
                    })
                    .collect();
                print_json(&rows);
            } else {
                println!("4-cyclotomic cosets mod {n}:");
                for c in &cosets {
                    let class = match c.classify() {
                        CosetClass::SkewSymmetric => "skew-symmetric".to_string(),
                        CosetClass::PairedWith(p) => format!("paired with C{p}"),
                    };
                    println!("  C{:<3} size {:<2} {:?}  {class}", c.rep(), c.len(), c.members());
                }
            }
            Ok(0)
        }
        Command::Construct { n, g1, g2, nu, out } => {
            let spec = Qc2Spec::new(
                *n,
                &parse_coeff_string(g1)?,
                &parse_coeff_string(g2)?,
                &parse_coeff_string(nu)?,
            )?;
            let dossier = CodeDossier::build(spec)?;
            if let Some(path) = out {
                dossier.save(path)?;
            }
            if cli.json {
                print_json(&dossier);
            } else {
                println!(
                    "[{}, {}] code; dual [{}, {}]; dual-containing: {}",
                    dossier.classical.length,
                    dossier.classical.dimension,
                    dossier.dual.length,
                    dossier.dual.dimension,
                    dossier.checks.dual_containing
                );
                if let Some(path) = out {
                    println!("wrote {}", path.display());
                }
            }
            Ok(0)
        }
        Command::Check { file } => {
            let dossier = CodeDossier::load(file)?;
            if cli.json {
                print_json(&dossier.checks);
            } else {
                let c = &dossier.checks;
                println!("symbolic conditions:");
                println!("  g1 | g1^dual       : {}", c.symbolic.g1_divides_g1_dual);
                println!("  g2 | g2^dual       : {}", c.symbolic.g2_divides_g2_dual);
                println!("  cross mixing       : {}", c.symbolic.mixed_cross);
                println!("  self mixing (g1)   : {}", c.symbolic.mixed_self_g1);
                println!("  self mixing (g2)   : {}", c.symbolic.mixed_self_g2);
                println!("  dual rank matches  : {}", c.symbolic.dual_rank_matches);
                println!("  symbolic verdict   : {}", c.symbolic.holds);
                println!("matrix oracle        : {}", c.matrix_oracle);
                if !c.verdicts_agree {
                    println!("WARNING: verdicts disagree; the matrix oracle wins");
                }
                println!("dual-containing      : {}", c.dual_containing);
            }
            Ok(0)
        }
        Command::Distance { file, method, budget } => {
            let mut dossier = CodeDossier::load(file)?;
            let code = build_qc_code(&dossier.spec)?;
            let result = match method {
                Method::Bf => min_distance_bruteforce(&code)?,
                Method::Bz => min_distance_bz(&code, Budget::Seconds { limit: *budget })?,
                Method::Auto => {
                    if code.dimension() <= BRUTE_FORCE_CAP {
                        min_distance_bruteforce(&code)?
                    } else {
                        min_distance_bz(&code, Budget::Seconds { limit: *budget })?
                    }
                }
            };
            let bounds_only = result.exact().is_none();
            dossier.classical.distance = Some(result.clone());
            dossier.save(file)?;
            if cli.json {
                print_json(&result);
            } else {
                println!("{}", describe_distance(&result));
                println!("updated {}", file.display());
            }
            Ok(if bounds_only { EXIT_BOUNDS_ONLY } else { 0 })
        }
        Command::Quantum { file } => {
            let mut dossier = CodeDossier::load(file)?;
            let code = build_qc_code(&dossier.spec)?;
            let distance = dossier.classical.distance.clone().ok_or_else(|| {
                Error::Contract("dossier has no distance; run `qc4 distance` first".into())
            })?;
            let label = format!(
                "[{},{}] dossier {}",
                dossier.classical.length,
                dossier.classical.dimension,
                file.display()
            );
            let params = hermitian_construction(
                &code,
                dossier.checks.dual_containing,
                &distance,
                &label,
            )?;
            dossier.quantum = Some(params.clone());
            dossier.save(file)?;
            if cli.json {
                print_json(&params);
            } else {
                println!(
                    "[[{}, {}, {}]] (pure: {})",
                    params.n, params.k, params.d, params.pure
                );
                println!("updated {}", file.display());
            }
            Ok(0)
        }
        Command::Derive {
            file,
            max_n,
            min_k,
            min_n,
            max_k,
            max_steps,
        } => {
            let dossier = CodeDossier::load(file)?;
            let base = dossier.quantum.ok_or_else(|| {
                Error::Contract("dossier has no quantum parameters; run `qc4 quantum` first".into())
            })?;
            let window = Window {
                min_n: *min_n,
                max_n: Some(*max_n),
                min_k: Some(*min_k),
                max_k: *max_k,
            };
            let closure = derive_closure(&base, *max_steps, window);
            if cli.json {
                print_json(&closure);
            } else {
                for q in &closure {
                    let rules: Vec<&str> =
                        q.provenance.rules.iter().map(|r| r.name()).collect();
                    println!(
                        "[[{}, {}, {}]]  pure: {:<5}  via {}",
                        q.n,
                        q.k,
                        q.d,
                        q.pure,
                        if rules.is_empty() {
                            "base".to_string()
                        } else {
                            rules.join(" -> ")
                        }
                    );
                }
            }
            Ok(0)
        }
        Command::Search {
            config,
            workers,
            out_dir,
        } => {
            let text = std::fs::read_to_string(config)?;
            let mut cfg: SearchConfig = serde_json::from_str(&text).map_err(|e| Error::Parse {
                position: 0,
                message: format!("{}: {e}", config.display()),
            })?;
            if workers.is_some() {
                cfg.workers = *workers;
            }
            let outcome = search_nu(&cfg)?;
            if let Some(dir) = out_dir {
                std::fs::create_dir_all(dir)?;
                for (i, dossier) in outcome.dossiers.iter().enumerate() {
                    dossier.save(&dir.join(format!("code-{:04}.json", i + 1)))?;
                }
                let mut index = serde_json::to_string_pretty(&outcome)
                    .expect("serializable outcome");
                index.push('\n');
                std::fs::write(dir.join("search-index.json"), index)?;
            }
            if cli.json {
                print_json(&outcome);
            } else {
                println!(
                    "trials {}; accepted {} ({} symbolic rejections, {} below target, {} duplicates)",
                    outcome.summary.trials,
                    outcome.summary.accepted,
                    outcome.summary.rejected_symbolic,
                    outcome.summary.rejected_by_target,
                    outcome.summary.duplicates
                );
                for d in &outcome.dossiers {
                    let dist = d
                        .classical
                        .distance
                        .as_ref()
                        .map(describe_distance)
                        .unwrap_or_else(|| "unmeasured".into());
                    println!(
                        "  [{}, {}] nu={} {}",
                        d.classical.length,
                        d.classical.dimension,
                        qc4::poly::format_coeff_string(d.spec.nu()),
                        dist
                    );
                }
            }
            Ok(0)
        }
        Command::Records { db, candidates } => {
            let db = load_db(db)?;
            let mut params = Vec::new();
            let mut entries: Vec<PathBuf> = std::fs::read_dir(candidates)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            entries.sort();
            for path in &entries {
                if path.file_name().is_some_and(|n| n == "search-index.json") {
                    continue;
                }
                let dossier = CodeDossier::load(path)?;
                if let Some(q) = dossier.quantum {
                    params.push(q);
                }
            }
            let report = compare_records(&params, &db);
            if cli.json {
                print_json(&report);
            } else {
                for c in &report {
                    let record = c
                        .record
                        .as_ref()
                        .map(|r| format!("[[{}, {}, {}]]", r.n, r.k, r.d))
                        .unwrap_or_else(|| "—".into());
                    println!(
                        "[[{}, {}, {}]] vs {record}: {:?}",
                        c.candidate.n, c.candidate.k, c.candidate.d, c.status
                    );
                }
            }
            Ok(0)
        }
        Command::Reproduce { db, budget, rows } => {
            let db = load_db(db)?;
            let selected: Vec<RowSpec> = match rows {
                None => CATALOG.iter().map(RowSpec::from).collect(),
                Some(wanted) => CATALOG
                    .iter()
                    .filter(|e| wanted.contains(&e.index))
                    .map(RowSpec::from)
                    .collect(),
            };
            if selected.is_empty() {
                return Err(Error::Contract(format!(
                    "no catalog rows selected; available: 1..={}",
                    CATALOG.len()
                )));
            }
            let report = reproduce(&selected, *budget, &db);
            let mut failed = false;
            let mut bounds_only = false;
            for row in &report.rows {
                match &row.outcome {
                    RowOutcome::Failed { .. } => failed = true,
                    RowOutcome::Completed(data) => {
                        if data.distance_matches_claim.is_none() {
                            bounds_only = true;
                        }
                    }
                }
            }
            if cli.json {
                print_json(&report);
            } else {
                render_reproduce_text(&report);
            }
            Ok(if failed {
                EXIT_VALIDATION
            } else if bounds_only {
                EXIT_BOUNDS_ONLY
            } else {
                0
            })
        }
    }
}

fn render_reproduce_text(report: &qc4_cli::reproduce::ReproduceReport) {
    for row in &report.rows {
        let (n, k, d) = row.claimed;
        println!("row {} (claimed [{n}, {k}, {d}]):", row.index);
        match &row.outcome {
            RowOutcome::Failed { message } => println!("  FAILED: {message}"),
            RowOutcome::Completed(data) => {
                println!(
                    "  computed [{}, {}] (claim matched: {})",
                    data.dossier.classical.length,
                    data.dossier.classical.dimension,
                    data.dimension_matches_claim
                );
                println!(
                    "  dual-containing: {} (routes agree: {})",
                    data.dossier.checks.dual_containing, data.dossier.checks.verdicts_agree
                );
                if let Some(dist) = &data.dossier.classical.distance {
                    let verdict = match data.distance_matches_claim {
                        Some(true) => "matches claim",
                        Some(false) => "DISAGREES with claim",
                        None if data.distance_brackets_claim => "brackets claim",
                        None => "does NOT bracket claim",
                    };
                    println!("  distance: {} — {verdict}", describe_distance(dist));
                }
                if let Some(q) = &data.dossier.quantum {
                    println!("  quantum: [[{}, {}, {}]]", q.n, q.k, q.d);
                    println!("  derived candidates in window: {}", data.derived.len());
                }
            }
        }
    }
    println!();
    println!(
        "improvements vs records: {} (expected {})",
        report.improvements.len(),
        report.expected_improvements.len()
    );
    for (n, k, d) in &report.improvements {
        println!("  [[{n}, {k}, {d}]]");
    }
    println!("matches expected set: {}", report.matches_expected);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_for(&err))
        }
    }
}
