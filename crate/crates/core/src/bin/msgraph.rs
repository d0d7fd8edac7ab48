use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use msgraph::coloring::sigma_total_coloring;
use msgraph::domination::code_search;
use msgraph::export::to_dot;
use msgraph::multiset::DEFAULT_VERTEX_CAP;
use msgraph::structure::toroidal_assembly;
use msgraph::suites::{run_suite, Suite, SuiteInput};
use msgraph::{build_graph, Error, GeneratorFamily, Params, PermGraph};

#[derive(Parser)]
#[command(name = "msgraph", version, about = "Multiset star-transposition and pancake graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    St,
    Pc,
    Custom,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Dot,
    Coloring,
}

#[derive(clap::Args)]
struct Instance {
    #[arg(long, requires = "l", required_unless_present = "input")]
    k: Option<usize>,
    #[arg(long, requires = "k")]
    l: Option<usize>,
    /// Edge-list file to load instead of building from k and l.
    #[arg(long, conflicts_with_all = ["k", "l"])]
    input: Option<PathBuf>,
    /// Largest vertex count that will be built.
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    cap: u128,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and write it as an edge list.
    Build {
        #[arg(long, value_enum, default_value = "st")]
        family: Family,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        /// Involutions for the custom family, one `i a,b c,d` line each.
        #[arg(long, required_if_eq("family", "custom"))]
        pi: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: u128,
        /// Output path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and print one line per check.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[command(flatten)]
        instance: Instance,
        /// Also write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Recorded in the report; results do not depend on it.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// List every set that dominates each outside vertex exactly `ell` times.
    SearchCodes {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        ell: usize,
    },
    /// Write a graph or its repeat-position coloring.
    Export {
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, value_enum, default_value = "st")]
        family: Family,
        #[command(flatten)]
        instance: Instance,
        /// Export only the assembly T_d(1,2,3,4) for this d (dot format).
        #[arg(long)]
        toroidal: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("MSGRAPH_THREADS").ok().and_then(|s| s.parse().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::InstanceTooLarge { .. } => 3,
                Error::Precondition(_) => 1,
                _ => 2,
            })
        }
    }
}

fn load(instance: &Instance, family: Family) -> msgraph::Result<PermGraph> {
    if let Some(path) = &instance.input {
        return PermGraph::from_edge_list(&fs::read_to_string(path)?);
    }
    let params = Params::new(instance.k.unwrap_or_default(), instance.l.unwrap_or_default())?;
    let family = match family {
        Family::St => GeneratorFamily::Star,
        Family::Pc => GeneratorFamily::Pancake,
        Family::Custom => return Err(Error::Malformed("custom graphs are loaded with --input".into())),
    };
    msgraph::builder::build_graph_capped(params, family, instance.cap)
}

fn emit(out: Option<&Path>, text: &str) -> msgraph::Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(command: Command) -> msgraph::Result<ExitCode> {
    match command {
        Command::Build {
            family,
            k,
            l,
            pi,
            cap,
            out,
        } => {
            let params = Params::new(k, l)?;
            params.checked_vertex_count(cap)?;
            let family = match family {
                Family::St => GeneratorFamily::Star,
                Family::Pc => GeneratorFamily::Pancake,
                Family::Custom => {
                    let path = pi.ok_or_else(|| Error::Malformed("--pi is required".into()))?;
                    GeneratorFamily::parse_custom(&fs::read_to_string(path)?, params.len())?
                }
            };
            let g = build_graph(params, family)?;
            if !g.non_star_like.is_empty() {
                eprintln!("note: {} edges join positions holding equal symbols", g.non_star_like.len());
            }
            emit(out.as_deref(), &g.to_edge_list())?;
        }
        Command::Verify {
            suite,
            instance,
            json,
            seed,
        } => {
            let mut input = match &instance.input {
                Some(_) => SuiteInput::with_graph(load(&instance, Family::St)?),
                None => SuiteInput::new(instance.k.unwrap_or_default(), instance.l.unwrap_or_default())?,
            };
            input.seed = seed;
            input.cap = instance.cap;
            let report = run_suite(suite, &input)?;
            print!("{}", report.summary());
            if let Some(path) = json {
                fs::write(path, report.to_json())?;
            }
            if report.failed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::SearchCodes { instance, ell } => {
            let g = load(&instance, Family::St)?;
            let codes = code_search(&g.graph, ell)?;
            for code in &codes {
                let names: Vec<&str> = code.iter().map(|&v| g.graph.name(v)).collect();
                println!("{}", names.join(" "));
            }
            eprintln!("{} sets", codes.len());
        }
        Command::Export {
            format,
            family,
            instance,
            toroidal,
            out,
        } => {
            let g = load(&instance, family)?;
            let text = match (format, toroidal) {
                (Format::Edges, None) => g.to_edge_list(),
                (Format::Coloring, None) => sigma_total_coloring(&g)?.to_text(&g.graph),
                (Format::Dot, None) => {
                    let name = format!("{}({},{})", g.family.tag().to_uppercase(), g.params.k, g.params.ell);
                    let tc = sigma_total_coloring(&g).ok();
                    to_dot(&g.graph, tc.as_ref(), &name)
                }
                (Format::Dot, Some(d1)) => {
                    let tc = sigma_total_coloring(&g)?;
                    let t = toroidal_assembly(&g, &tc, d1, [1, 2, 3, 4])?;
                    to_dot(&t.assembly.graph, Some(&tc.restrict(&t.assembly)), &format!("T_{d1}(1,2,3,4)"))
                }
                (_, Some(_)) => return Err(Error::Malformed("--toroidal needs --format dot".into())),
            };
            emit(out.as_deref(), &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
