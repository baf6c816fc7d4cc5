use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use cubelab::census::{census_cycle_permutation, census_graph6, verify_report, CensusReport};
use cubelab::check::{check_property, Property};
use cubelab::generators::{cycle_permutation_graph, named_graph, papillon, PapillonLayout, Permutation};
use cubelab::io::{read_graph, write_graph, Format};
use cubelab::iso::isomorphic_checked;
use cubelab::multipole::papillon_from_chains;
use cubelab::theorems::theorem_suite;
use cubelab::CubicGraph;

#[derive(Parser)]
#[command(name = "cubelab", version, about = "Cubic graph generation and E2F / PMH / PH classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph to stdout.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Decide one property of one graph; exit 2 when it fails.
    Check {
        /// e2f, pmh, ph or 2fh
        property: String,
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Test two graph files for isomorphism; exit 2 when they differ.
    Iso { a: PathBuf, b: PathBuf },
    Census {
        #[command(subcommand)]
        what: CensusCommand,
    },
    /// Run the papillon theorem suite for all r <= l with r + l <= max-sum.
    Theorems {
        #[arg(long, default_value_t = 6)]
        max_sum: usize,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Re-check every certificate in a census report.
    Verify {
        #[arg(long)]
        report: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    Papillon {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        l: usize,
        /// Assemble from chains of C4-poles instead of the edge formula.
        #[arg(long)]
        via_chains: bool,
        #[arg(long, default_value = "graph6")]
        format: String,
    },
    Cpg {
        /// Cycle notation over 1..=t, e.g. "(1 2)(3 4)".
        #[arg(long)]
        perm: String,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value = "graph6")]
        format: String,
    },
    Named {
        #[arg(long)]
        name: String,
        #[arg(long, default_value = "graph6")]
        format: String,
    },
}

#[derive(Subcommand)]
enum CensusCommand {
    /// All cycle permutation graphs with two t-cycles.
    Perm {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        allow_odd: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a graph6 corpus.
    G6 {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// File holding a graph in graph6, edge-list or JSON form.
    #[arg(long)]
    g6: Option<PathBuf>,
    /// Papillon parameters as R,L.
    #[arg(long)]
    papillon: Option<String>,
    #[arg(long)]
    named: Option<String>,
}

fn load(path: &Path) -> anyhow::Result<CubicGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn resolve(source: &GraphSource) -> anyhow::Result<(CubicGraph, Option<PapillonLayout>)> {
    if let Some(path) = &source.g6 {
        return Ok((load(path)?, None));
    }
    if let Some(spec) = &source.papillon {
        let parts: Vec<usize> = spec
            .split(',')
            .map(|p| p.trim().parse())
            .collect::<Result<_, _>>()
            .with_context(|| format!("expected R,L, found `{spec}`"))?;
        let [r, l] = parts[..] else { bail!("expected R,L, found `{spec}`") };
        if r == 0 || l == 0 {
            bail!("papillon parameters must be positive");
        }
        let (g, layout) = papillon(r, l);
        return Ok((g, Some(layout)));
    }
    let name = source.named.as_deref().expect("clap enforces one source");
    Ok((named_graph(name)?, None))
}

fn emit(g: &CubicGraph, format: &str) -> anyhow::Result<()> {
    let format: Format = format.parse()?;
    print!("{}", write_graph(g, format));
    Ok(())
}

fn write_or_print(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn summarise(report: &CensusReport) {
    eprintln!(
        "examined {} | non-isomorphic {} | Class I {} | E2F {} | PMH {} | {:.1}s",
        report.totals.examined,
        report.totals.non_isomorphic,
        report.counts.class_one,
        report.counts.e2f,
        report.counts.pmh,
        report.runtime.seconds
    );
    for row in &report.per_order {
        if !row.cyclic_connectivity.is_empty() {
            eprintln!("order {}: E2F cyclic connectivity {:?}", row.order, row.cyclic_connectivity);
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let ok = |pass: bool| if pass { ExitCode::SUCCESS } else { ExitCode::from(2) };
    match cli.command {
        Command::Gen { what } => {
            match what {
                GenCommand::Papillon { r, l, via_chains, format } => {
                    if r == 0 || l == 0 {
                        bail!("papillon parameters must be positive");
                    }
                    let g = if via_chains { papillon_from_chains(r, l)? } else { papillon(r, l).0 };
                    emit(&g, &format)?;
                }
                GenCommand::Cpg { perm, t, format } => {
                    let sigma = Permutation::parse(&perm, t)?;
                    emit(&cycle_permutation_graph(&sigma)?, &format)?;
                }
                GenCommand::Named { name, format } => emit(&named_graph(&name)?, &format)?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { property, source, json_out } => {
            let property: Property = property.parse()?;
            let (g, layout) = resolve(&source)?;
            let value = check_property(&g, layout.as_ref(), property)?;
            let holds = value["holds"].as_bool().unwrap_or(false);
            let text = serde_json::to_string_pretty(&value)? + "\n";
            match json_out {
                Some(p) => {
                    std::fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?;
                    println!("{}: {}", property.name(), holds);
                }
                None => print!("{text}"),
            }
            Ok(ok(holds))
        }
        Command::Iso { a, b } => {
            let (g, h) = (load(&a)?, load(&b)?);
            let mapping = isomorphic_checked(&g, &h)?;
            let value = serde_json::json!({ "isomorphic": mapping.is_some(), "mapping": mapping });
            println!("{}", serde_json::to_string(&value)?);
            Ok(ok(mapping.is_some()))
        }
        Command::Census { what } => {
            let (report, out) = match what {
                CensusCommand::Perm { t, allow_odd, out } => (census_cycle_permutation(t, allow_odd)?, out),
                CensusCommand::G6 { input, out } => (census_graph6(&input)?, out),
            };
            summarise(&report);
            write_or_print(out.as_deref(), &report.to_json())?;
            Ok(ok(report.all_checks_pass()))
        }
        Command::Theorems { max_sum, json_out } => {
            let report = theorem_suite(max_sum)?;
            for c in &report.checks {
                let params = c.params.map(|(r, l)| format!(" ({r},{l})")).unwrap_or_default();
                let status = if c.passed { "PASS" } else { "FAIL" };
                println!("{status} {}{params}{}", c.name, if c.detail.is_empty() { String::new() } else { format!(": {}", c.detail) });
            }
            if let Some(p) = json_out {
                std::fs::write(&p, serde_json::to_string_pretty(&report)? + "\n")?;
            }
            Ok(ok(report.all_passed()))
        }
        Command::Verify { report } => {
            let text = std::fs::read_to_string(&report).with_context(|| format!("reading {}", report.display()))?;
            let parsed = CensusReport::from_json(&text)?;
            let outcome = verify_report(&parsed);
            println!("{}", serde_json::to_string(&outcome)?);
            Ok(ok(outcome.passed()))
        }
    }
}

fn main() -> ExitCode {
    if let Ok(value) = std::env::var("CUBELAB_THREADS") {
        match value.parse::<usize>() {
            Ok(n) if n > 0 => {
                cubelab::configure_threads(n);
            }
            _ => {
                eprintln!("error: CUBELAB_THREADS must be a positive integer, found `{value}`");
                return ExitCode::from(1);
            }
        }
    }
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
