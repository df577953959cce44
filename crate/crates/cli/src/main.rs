use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ms_core::catalog::{
    emit_report, exit_code, list_catalogs, load_catalog, run_scenario, scenario_ids, ReportFormat,
    ScenarioOptions, CATALOG_SCHEMA, REPORT_SCHEMA,
};
use ms_core::hilbert::HilbertPoly;
use ms_core::idealcalc::Ideal;
use ms_core::multistruct::{Embedding, MultiStructure, StructureReport};
use ms_core::polyring::{parse_ideal, parse_ring, Limits, PolyRing};
use ms_core::Error;

const EXIT_FAIL: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ms",
    version,
    about = "Multiple structures on linear subvarieties"
)]
struct Cli {
    /// Largest S-pair degree before a computation gives up.
    #[arg(long, global = true)]
    max_degree: Option<i32>,
    /// Largest Gröbner basis size before a computation gives up.
    #[arg(long, global = true)]
    max_basis: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis of the ideal.
    Gb {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Filtration, layers and verdicts of the structure (needs a support line).
    Filt {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Local Cohen-Macaulay test with the failing Ext indices and locus.
    Cm {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Hilbert series and Hilbert polynomial of S/I.
    Hilb {
        file: PathBuf,
        /// Print the polynomial in the basis P_i(t) = C(t + i, i).
        #[arg(long)]
        pbasis: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification scenario, or `all`.
    Verify {
        /// Scenario id (see `ms catalog list`) or `all`.
        scenario: String,
        /// Run table rows and examples in this characteristic only.
        #[arg(long = "char")]
        characteristic: Option<u32>,
        /// Seed for randomized quotient searches.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random specializations per twist in quotient searches.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Inspect the builtin catalogs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Builtin catalogs and scenario ids.
    List,
    /// Entries of a builtin catalog or catalog file.
    Show {
        source: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The catalog JSON schema, or the report schema with `--report`.
    Schema {
        #[arg(long)]
        report: bool,
    },
}

struct Input {
    ring: Arc<PolyRing>,
    ideal: Ideal,
    support: Option<Ideal>,
}

/// Reads `ring ...`, `ideal (...)` and optionally `support (...)`.
/// Blank lines and `#` comments are skipped; a statement may continue over
/// lines until its parentheses balance.
fn read_input(path: &Path, limits: Limits) -> Result<Input, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    let mut statements: Vec<String> = Vec::new();
    let mut open = 0i32;
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if open > 0 {
            statements.last_mut().expect("open statement").push(' ');
            statements
                .last_mut()
                .expect("open statement")
                .push_str(line);
        } else {
            statements.push(line.to_string());
        }
        open += line.matches('(').count() as i32 - line.matches(')').count() as i32;
    }
    let mut ring = None;
    let mut ideal = None;
    let mut support = None;
    for s in &statements {
        if s.starts_with("ring") {
            ring = Some(
                parse_ring(s)
                    .map_err(|e| e.to_string())?
                    .with_limits(limits),
            );
        } else if let Some(rest) = s.strip_prefix("ideal") {
            ideal = Some(rest.trim().to_string());
        } else if let Some(rest) = s.strip_prefix("support") {
            support = Some(rest.trim().to_string());
        } else {
            return Err(format!("unrecognised statement `{}`", s));
        }
    }
    let ring = ring.ok_or("missing `ring` line")?;
    let parse = |t: &str| -> Result<Ideal, String> {
        let p = parse_ideal(t, &ring).map_err(|e| e.to_string())?;
        Ideal::new(&ring, p.generators).map_err(|e| e.to_string())
    };
    let ideal = parse(&ideal.ok_or("missing `ideal` line")?)?;
    let support = support.as_deref().map(parse).transpose()?;
    Ok(Input {
        ring,
        ideal,
        support,
    })
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn dense_text(h: &HilbertPoly) -> String {
    let mut out = String::new();
    for (i, c) in h.to_dense().iter().enumerate().rev() {
        let c = c.to_string();
        if c == "0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, c),
        };
        if out.is_empty() {
            out.push_str(if neg { "-" } else { "" });
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let var = match i {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{}", i),
        };
        out.push_str(&match (mag.as_str(), var.is_empty()) {
            (_, true) => mag,
            ("1", false) => var,
            (_, false) => format!("{}*{}", mag, var),
        });
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let mut limits = Limits::default();
    if let Some(d) = cli.max_degree {
        limits.max_degree = d;
    }
    if let Some(b) = cli.max_basis {
        limits.max_basis = b;
    }
    let load = |p: &Path| -> Result<Input, Error> {
        read_input(p, limits).map_err(|m| Error::InvalidParameters(m))
    };
    match cli.command {
        Command::Gb { file, format } => {
            let inp = load(&file)?;
            let basis = inp.ideal.basis()?;
            match format {
                Format::Text => basis.iter().for_each(|p| println!("{}", p)),
                Format::Json => print_json(&json!({
                    "ring": inp.ring.describe(),
                    "basis": basis.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                })),
            }
        }
        Command::Filt { file, format, seed } => {
            let inp = load(&file)?;
            let support = inp.support.ok_or_else(|| {
                Error::InvalidParameters("`filt` needs a `support (...)` line".into())
            })?;
            let emb = Arc::new(Embedding::from_ideal(&support)?);
            let ms = MultiStructure::new(&emb, inp.ideal)?;
            let report = StructureReport::build(&ms, seed)?;
            match format {
                Format::Json => print_json(&serde_json::to_value(&report).expect("json")),
                Format::Text => {
                    println!("ideal        {}", report.ideal);
                    println!("support      {}", report.support);
                    println!("multiplicity {}", report.multiplicity);
                    println!("hilbert      {}", report.hilbert);
                    for (j, t) in report.filtration.iter().enumerate() {
                        println!(
                            "I_{}  mult {}  {}  {}",
                            j,
                            t.multiplicity,
                            if t.locally_cm { "CM    " } else { "non-CM" },
                            t.ideal
                        );
                    }
                    for (j, l) in report.layers.iter().enumerate() {
                        println!(
                            "L_{}  rank {}  {}  Hilb {}",
                            j,
                            l.rank,
                            if l.locally_free {
                                "locally free"
                            } else {
                                "not locally free"
                            },
                            l.hilb
                        );
                    }
                    let v = &report.verdicts;
                    println!("locally CM {}  S1 {}  type I {}", v.cm, v.s1, v.type_i);
                    for w in &report.certificates.witnesses {
                        println!("witness: {}", w);
                    }
                }
            }
        }
        Command::Cm { file, format } => {
            let inp = load(&file)?;
            let data = inp.ideal.cm_data()?;
            let cm = data.bad_indices.is_empty();
            match format {
                Format::Json => print_json(&json!({
                    "locally_cm": cm,
                    "codim": data.codim,
                    "bad_ext_indices": data.bad_indices,
                    "non_cm_locus": data.locus.to_string(),
                })),
                Format::Text => {
                    println!("codim {}", data.codim);
                    println!("locally CM {}", cm);
                    if !cm {
                        println!(
                            "Ext^i nonzero on the punctured cone for i in {:?}",
                            data.bad_indices
                        );
                        println!("non-CM locus V{}", data.locus);
                    }
                }
            }
        }
        Command::Hilb {
            file,
            pbasis,
            format,
        } => {
            let inp = load(&file)?;
            let series = inp.ideal.series()?;
            let hp = inp.ideal.hilbert_polynomial()?;
            let poly = if pbasis {
                hp.to_string()
            } else {
                dense_text(&hp)
            };
            match format {
                Format::Json => print_json(&json!({
                    "series": series.to_string(),
                    "polynomial": poly,
                    "pbasis": hp.to_json(),
                })),
                Format::Text => {
                    println!("series     {}", series);
                    println!("polynomial {}", poly);
                }
            }
        }
        Command::Verify {
            scenario,
            characteristic,
            seed,
            samples,
            format,
        } => {
            if let Some(p) = characteristic {
                ms_core::polyring::Field::from_characteristic(p as u64)?;
            }
            let opts = ScenarioOptions {
                char: characteristic,
                seed,
                max_degree: cli.max_degree,
                samples,
            };
            let ids: Vec<&str> = if scenario == "all" {
                scenario_ids().to_vec()
            } else {
                vec![scenario.as_str()]
            };
            let mut results = Vec::new();
            for id in ids {
                results.push(run_scenario(id, &opts)?);
            }
            let fmt = match format {
                Format::Text => ReportFormat::Text,
                Format::Json => ReportFormat::Json,
            };
            print!("{}", emit_report(&results, fmt));
            if fmt == ReportFormat::Json {
                println!();
            }
            return Ok(exit_code(&results) as u8);
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for id in list_catalogs() {
                    let n = load_catalog(id)?.len();
                    println!("catalog  {:<10} {} entries", id, n);
                }
                for id in scenario_ids() {
                    println!("scenario {}", id);
                }
            }
            CatalogAction::Show { source, format } => {
                let entries = load_catalog(&source)?;
                match format {
                    Format::Json => print_json(&serde_json::to_value(&entries).expect("json")),
                    Format::Text => {
                        for e in entries {
                            println!(
                                "{:<12} mult {}  CM {}  type I {}  char {:?}  ({})",
                                e.id,
                                e.expected.multiplicity,
                                e.expected.locally_cm,
                                e.expected.type_i,
                                e.characteristics,
                                e.generators.join(", ")
                            );
                        }
                    }
                }
            }
            CatalogAction::Schema { report } => {
                let s = if report {
                    REPORT_SCHEMA
                } else {
                    CATALOG_SCHEMA
                };
                println!("{}", s.trim_end());
            }
        },
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(match e {
                Error::ResourceGuard(_) => EXIT_INCONCLUSIVE,
                Error::Syntax { .. }
                | Error::UnknownVariable(_)
                | Error::UnknownScenario(_)
                | Error::InvalidCharacteristic(_)
                | Error::InvalidParameters(_)
                | Error::Schema { .. } => EXIT_USAGE,
                _ => EXIT_FAIL,
            })
        }
    }
}
