use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use omplab::catalog::{catalog, catalog_entry, catalog_omps};
use omplab::format::{write_iop, write_omp, Model};
use omplab::implication::{arrow_table, condition_c_check};
use omplab::iop::{roundtrip_check, roundtrip_iop_check};
use omplab::logic::algebraizability::algebraizability_suite;
use omplab::logic::{soundness_check, Derivation, Judgment};
use omplab::search::{enumerate, equivalence_scan, find_c_violator};
use omplab::{ElementId, ElementSet, IopTable, ModelReport, Named};

/// Checks, conversions and searches for finite orthomodular posets and
/// their implication tables.
#[derive(Parser)]
#[command(name = "omplab", version)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the orthomodular law on an .omp model.
    Validate { model: PathBuf },
    /// Print arrow entries: one pair, or the whole table.
    Arrow {
        model: PathBuf,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true, conflicts_with = "table")]
        pair: Option<Vec<String>>,
        #[arg(long)]
        table: bool,
    },
    /// Check axioms O1..O10 on a table (an .omp model is converted first).
    Axioms { model: PathBuf },
    /// Round trip between the poset and the table presentation.
    Roundtrip { model: PathBuf },
    /// Check condition (C) on a table.
    Condc { model: PathBuf },
    /// Proof checking.
    Prove {
        #[command(subcommand)]
        cmd: ProveCmd,
    },
    /// Validity of the axioms and rules of L_OMP in a finite model.
    Soundness {
        model: PathBuf,
        #[arg(long, default_value_t = 3)]
        vars: usize,
    },
    /// Algebraizability conditions: fixture derivations plus semantic checks
    /// over the given models (default: the catalog).
    Algsuite { models: Vec<PathBuf> },
    /// Enumeration of small orthoposets.
    Search {
        #[command(subcommand)]
        cmd: SearchCmd,
    },
    /// Built-in models.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum ProveCmd {
    /// Check a derivation file. Hypotheses come from `# hyp` lines and
    /// `--hyp` flags, in that order.
    Check {
        file: PathBuf,
        #[arg(long)]
        hyp: Vec<String>,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    /// List orthoposets on n elements up to isomorphism.
    Enum {
        #[arg(long)]
        n: usize,
        /// Write each class as an .omp file here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        budget_ms: Option<u64>,
    },
    /// Orthomodular law versus the ten axioms over all sizes up to n.
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        budget_ms: Option<u64>,
    },
    /// Look for a table satisfying the ten axioms but not (C).
    Findc {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    /// Print a catalog model as .omp (or its table with --iop).
    Dump {
        name: String,
        #[arg(long)]
        iop: bool,
    },
}

enum Outcome {
    Report(ModelReport),
    Info { text: String, json: Value },
}

fn load(path: &Path) -> Result<Model> {
    Model::load(path).with_context(|| format!("loading {}", path.display()))
}

fn table_of(model: Model) -> IopTable {
    match model {
        Model::Omp(p) => arrow_table(&p),
        Model::Iop(t) => t,
    }
}

fn resolve(t: &IopTable, name: &str) -> Result<ElementId> {
    t.element(name)
        .with_context(|| format!("no element named `{name}`"))
}

fn set_json(t: &IopTable, s: ElementSet) -> Value {
    s.iter()
        .map(|x| json!({"index": x.index(), "name": t.name(x)}))
        .collect()
}

fn budget(ms: Option<u64>) -> Option<Duration> {
    ms.map(Duration::from_millis)
}

fn run(cmd: Cmd) -> Result<Outcome> {
    Ok(match cmd {
        Cmd::Validate { model } => match load(&model)? {
            Model::Omp(p) => Outcome::Report(p.validate_omp()),
            Model::Iop(_) => bail!("validate takes an .omp model; use `axioms` for tables"),
        },
        Cmd::Arrow { model, pair, table } => {
            let t = table_of(load(&model)?);
            match pair {
                Some(xy) if !table => {
                    let (x, y) = (resolve(&t, &xy[0])?, resolve(&t, &xy[1])?);
                    let v = t.arrow(x, y);
                    Outcome::Info {
                        text: format!("{} → {} = {}\n", t.name(x), t.name(y), t.set_name(v)),
                        json: json!({"x": t.name(x), "y": t.name(y), "value": set_json(&t, v)}),
                    }
                }
                _ => {
                    let mut text = String::new();
                    let mut rows = Vec::new();
                    for x in t.elements() {
                        for y in t.elements() {
                            let v = t.arrow(x, y);
                            let _ = writeln!(text, "{} → {} = {}", t.name(x), t.name(y), t.set_name(v));
                            rows.push(json!({"x": t.name(x), "y": t.name(y), "value": set_json(&t, v)}));
                        }
                    }
                    Outcome::Info { text, json: Value::Array(rows) }
                }
            }
        }
        Cmd::Axioms { model } => Outcome::Report(table_of(load(&model)?).check_axioms().into_report()),
        Cmd::Roundtrip { model } => Outcome::Report(match load(&model)? {
            Model::Omp(p) => roundtrip_check(&p),
            Model::Iop(t) => roundtrip_iop_check(&t),
        }),
        Cmd::Condc { model } => Outcome::Report(condition_c_check(&table_of(load(&model)?))),
        Cmd::Prove { cmd: ProveCmd::Check { file, hyp } } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let d = Derivation::parse(&text).with_context(|| format!("parsing {}", file.display()))?;
            let mut hyps = Derivation::declared_hypotheses(&text)?;
            for h in &hyp {
                hyps.push(Judgment::parse(h).map_err(|e| anyhow::anyhow!("--hyp `{h}`: {e}"))?);
            }
            Outcome::Report(d.check(&hyps))
        }
        Cmd::Soundness { model, vars } => Outcome::Report(soundness_check(&table_of(load(&model)?), vars)),
        Cmd::Algsuite { models } => {
            let tables = if models.is_empty() {
                catalog_omps()
                    .into_iter()
                    .map(|e| (e.name.clone(), arrow_table(&e.structure)))
                    .collect::<Vec<_>>()
            } else {
                models
                    .iter()
                    .map(|m| Ok((m.display().to_string(), table_of(load(m)?))))
                    .collect::<Result<Vec<_>>>()?
            };
            Outcome::Report(algebraizability_suite(&tables))
        }
        Cmd::Search { cmd } => search(cmd)?,
        Cmd::Catalog { cmd: CatalogCmd::List } => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for e in catalog() {
                let _ = writeln!(
                    text,
                    "{:<8} {:>3} elements  orthomodular: {:<3}  lattice: {}",
                    e.name,
                    e.structure.len(),
                    if e.expected.is_omp { "yes" } else { "no" },
                    if e.expected.is_lattice { "yes" } else { "no" }
                );
                rows.push(json!({
                    "name": e.name,
                    "elements": e.structure.len(),
                    "is_omp": e.expected.is_omp,
                    "is_lattice": e.expected.is_lattice,
                }));
            }
            Outcome::Info { text, json: Value::Array(rows) }
        }
        Cmd::Catalog { cmd: CatalogCmd::Dump { name, iop } } => {
            let e = catalog_entry(&name)?;
            let text = if iop { write_iop(&arrow_table(&e.structure)) } else { write_omp(&e.structure) };
            Outcome::Info {
                json: json!({"name": e.name, "format": if iop { "iop" } else { "omp" }, "text": text}),
                text,
            }
        }
    })
}

fn search(cmd: SearchCmd) -> Result<Outcome> {
    Ok(match cmd {
        SearchCmd::Enum { n, out, budget_ms } => {
            if n < 2 {
                bail!("--n must be at least 2");
            }
            let census = enumerate(n, budget(budget_ms));
            if let Some(dir) = &out {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            let mut text = format!(
                "n={n}: {} classes{}\n",
                census.count(),
                if census.complete { "" } else { " (partial: time budget exceeded)" }
            );
            let mut rows = Vec::new();
            for (i, p) in census.structures.iter().enumerate() {
                let omp = p.validate_omp().passed();
                let lattice = p.is_lattice();
                let _ = writeln!(
                    text,
                    "  #{i}: orthomodular: {}  lattice: {}",
                    if omp { "yes" } else { "no" },
                    if lattice { "yes" } else { "no" }
                );
                let file = out.as_ref().map(|dir| dir.join(format!("n{n}-{i:03}.omp")));
                if let Some(f) = &file {
                    fs::write(f, write_omp(p)).with_context(|| format!("writing {}", f.display()))?;
                }
                rows.push(json!({"index": i, "is_omp": omp, "is_lattice": lattice, "omp": write_omp(p)}));
            }
            Outcome::Info {
                text,
                json: json!({"n": n, "complete": census.complete, "classes": rows}),
            }
        }
        SearchCmd::Scan { n, budget_ms } => Outcome::Report(equivalence_scan(n, budget(budget_ms)).report),
        SearchCmd::Findc { n } => match find_c_violator(n) {
            Some(v) => {
                let t = &v.table;
                let text = format!(
                    "found: {} with {} → {} changed from {} to {}\n{}",
                    v.source,
                    t.name(v.x),
                    t.name(v.y),
                    t.set_name(v.original),
                    t.set_name(t.arrow(v.x, v.y)),
                    write_iop(t)
                );
                Outcome::Info {
                    json: json!({
                        "found": true,
                        "source": v.source,
                        "x": t.name(v.x),
                        "y": t.name(v.y),
                        "original": set_json(t, v.original),
                        "value": set_json(t, t.arrow(v.x, v.y)),
                        "iop": write_iop(t),
                    }),
                    text,
                }
            }
            None => Outcome::Info {
                text: format!("no violator with at most {n} elements\n"),
                json: json!({"found": false}),
            },
        },
    })
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("OMPLAB_THREADS") {
        let k: usize = v.parse().with_context(|| format!("OMPLAB_THREADS=`{v}` is not a number"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .context("configuring the thread pool")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = init_threads().and_then(|()| run(cli.cmd));
    match outcome {
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Ok(Outcome::Report(r)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r).expect("reports serialize"));
            } else {
                print!("{r}");
            }
            if r.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Outcome::Info { text, json }) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&json).expect("values serialize"));
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
    }
}
