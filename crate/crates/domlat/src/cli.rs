//! `domlat <enumerate|context|arrows|verify|render|closures> <n|a..b> [options]`
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or cap error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use domlat_core::closure::{all_one_generated_closures_with, closure_of_partition, count_1x1_closures};
use domlat_core::context::{arrows_bruteforce, arrows_via_covers, standard_context};
use domlat_core::lattice::{enumerate_partitions, partition_count, DEFAULT_ENUMERATION_CAP, DEFAULT_LATTICE_CAP};
use domlat_core::theorems::predicted_arrows;
use domlat_core::{Error, FormalContext, Partition, PartitionLattice};

use crate::error::CliError;
use crate::formats::{csv, cxt, dot, json, listing};
use crate::range::NRange;
use crate::verify::{verify_range, DEFAULT_BF_CAP};

#[derive(Parser, Debug)]
#[command(name = "domlat", version, about = "Dominance lattice of integer partitions: standard contexts, arrows, closures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest n for operations that build the whole lattice.
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_CAP, value_parser = clap::value_parser!(u32).range(1..))]
    pub lattice_cap: u32,
    /// Largest n for the definitional brute-force arrows.
    #[arg(long, global = true, default_value_t = DEFAULT_BF_CAP, value_parser = clap::value_parser!(u32).range(1..))]
    pub bf_cap: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the partitions of n in descending lexicographic order.
    Enumerate {
        n: NRange,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Print only the number of partitions.
        #[arg(long)]
        count: bool,
        /// Also list the cover relation.
        #[arg(long)]
        covers: bool,
    },
    /// Export the standard context K(L_n).
    Context {
        n: NRange,
        #[arg(long, value_enum, default_value = "cxt")]
        format: Format,
    },
    /// List the arrow relations of K(L_n).
    Arrows {
        n: NRange,
        #[arg(long, value_enum, default_value = "covers")]
        method: Method,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Check all arrow characterisations for each n in a range.
    Verify { range: NRange },
    /// Draw L_n as a DOT digraph.
    Render {
        n: NRange,
        #[arg(long, value_enum, default_value = "hasse+arrows")]
        what: Render,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// One-generated arrow-closed subcontexts of K(L_n).
    Closures {
        n: NRange,
        /// Only the closure of this object (or attribute), e.g. `3,3,1`.
        #[arg(long)]
        generator: Option<String>,
        /// Print the number of 1x1 closures.
        #[arg(long = "count-1x1")]
        count_1x1: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Cxt,
    Csv,
    Json,
    Dot,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Bruteforce,
    Covers,
    Theorems,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Render {
    Hasse,
    #[value(name = "hasse+arrows")]
    HasseArrows,
}

/// Result of a command: text to emit and whether verification passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, passed: true }
    }
}

fn single(n: NRange) -> Result<u32, CliError> {
    if n.is_single() {
        Ok(n.start)
    } else {
        Err(CliError::usage(format!("expected a single n, got `{n}`")))
    }
}

fn cap(n: u32, cap: u32) -> Result<(), CliError> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap }.into());
    }
    Ok(())
}

fn unsupported(format: Format, command: &str) -> CliError {
    CliError::usage(format!("format {format:?} is not available for `{command}`").to_lowercase())
}

fn threads_from_env() -> Result<Option<usize>, CliError> {
    match std::env::var("DOMLAT_THREADS") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(Some(k)),
            _ => Err(CliError::usage(format!("DOMLAT_THREADS must be a positive integer, got `{s}`"))),
        },
        Err(_) => Ok(None),
    }
}

pub fn run(command: &Command, config: &RunConfig) -> Result<Outcome, CliError> {
    match command {
        Command::Enumerate { n, format, count, covers } => {
            let n = single(*n)?;
            if *count {
                cap(n, DEFAULT_ENUMERATION_CAP)?;
                return Ok(Outcome::ok(format!("{}\n", partition_count(n))));
            }
            enumerate(n, format.unwrap_or(Format::Text), *covers, config)
        }
        Command::Context { n, format } => {
            let n = single(*n)?;
            let ctx = standard_context(n)?;
            let text = match format {
                Format::Cxt => cxt::write_cxt(&ctx, &format!("K(L_{n})")),
                Format::Csv => csv::write_csv(&ctx, &arrows_via_covers(n)?)?,
                Format::Json => json::context_json(n, &ctx, &arrows_via_covers(n)?),
                other => return Err(unsupported(*other, "context")),
            };
            Ok(Outcome::ok(text))
        }
        Command::Arrows { n, method, format } => {
            let n = single(*n)?;
            if let Some(f) = format.filter(|f| *f != Format::Text) {
                return Err(unsupported(f, "arrows"));
            }
            let text = match method {
                Method::Bruteforce => {
                    cap(n, config.bf_cap)?;
                    let ctx = standard_context(n)?;
                    listing::write_arrows(&ctx, &arrows_bruteforce(&ctx))
                }
                Method::Covers => listing::write_arrows(&standard_context(n)?, &arrows_via_covers(n)?),
                Method::Theorems => {
                    predicted_arrows(n)?;
                    listing::write_predicted(n)
                }
            };
            Ok(Outcome::ok(text))
        }
        Command::Verify { range } => {
            let reports = verify_range(*range, config.bf_cap, threads_from_env()?)?;
            let mut text = String::new();
            for r in &reports {
                let _ = writeln!(text, "{r}");
            }
            Ok(Outcome { text, passed: reports.iter().all(|r| r.passed()) })
        }
        Command::Render { n, what, format } => {
            let n = single(*n)?;
            if let Some(f) = format.filter(|f| *f != Format::Dot) {
                return Err(unsupported(f, "render"));
            }
            cap(n, config.lattice_cap)?;
            let lattice = PartitionLattice::new(n, config.lattice_cap)?;
            let text = match what {
                Render::Hasse => dot::write_dot(&lattice, None),
                Render::HasseArrows if n >= 2 => {
                    let ctx = standard_context(n)?;
                    dot::write_dot(&lattice, Some((&ctx, &arrows_via_covers(n)?)))
                }
                Render::HasseArrows => dot::write_dot(&lattice, None),
            };
            Ok(Outcome::ok(text))
        }
        Command::Closures { n, generator, count_1x1, format } => {
            let n = single(*n)?;
            if *count_1x1 {
                return Ok(Outcome::ok(format!("{}\n", count_1x1_closures(n)?)));
            }
            closures(n, generator.as_deref(), format.unwrap_or(Format::Text))
        }
    }
}

fn enumerate(n: u32, format: Format, covers: bool, config: &RunConfig) -> Result<Outcome, CliError> {
    if format == Format::Dot {
        cap(n, config.lattice_cap)?;
        return Ok(Outcome::ok(dot::write_dot(&PartitionLattice::new(n, config.lattice_cap)?, None)));
    }
    let parts = enumerate_partitions(n, DEFAULT_ENUMERATION_CAP)?;
    let lattice = if covers {
        cap(n, config.lattice_cap)?;
        Some(PartitionLattice::new(n, config.lattice_cap)?)
    } else {
        None
    };
    let edges: Vec<(&Partition, &Partition)> = lattice
        .iter()
        .flat_map(|l| l.cover_edges().map(|(u, v)| (&l.elements()[u], &l.elements()[v])))
        .collect();
    let text = match format {
        Format::Text => {
            let mut out = String::new();
            for p in &parts {
                let _ = writeln!(out, "{p}");
            }
            for (u, v) in &edges {
                let _ = writeln!(out, "{u} > {v}");
            }
            out
        }
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Doc {
                n: u32,
                partitions: Vec<String>,
                #[serde(skip_serializing_if = "Option::is_none")]
                covers: Option<Vec<[String; 2]>>,
            }
            json::to_string(&Doc {
                n,
                partitions: parts.iter().map(ToString::to_string).collect(),
                covers: lattice
                    .is_some()
                    .then(|| edges.iter().map(|(u, v)| [u.to_string(), v.to_string()]).collect()),
            })
        }
        other => return Err(unsupported(other, "enumerate")),
    };
    Ok(Outcome::ok(text))
}

fn closure_line(ctx: &FormalContext, generator: &str, sub: &domlat_core::closure::Subcontext) -> String {
    let names = |ps: Vec<String>| ps.join(" ");
    let (h, m) = sub.format();
    format!(
        "{generator} {h}x{m} H=[{}] N=[{}]\n",
        names(sub.objects.iter().map(|&g| ctx.objects()[g].to_string()).collect()),
        names(sub.attributes.iter().map(|&a| ctx.attributes()[a].to_string()).collect()),
    )
}

fn closures(n: u32, generator: Option<&str>, format: Format) -> Result<Outcome, CliError> {
    let ctx = standard_context(n)?;
    let arrows = arrows_via_covers(n)?;
    let subs: Vec<(String, domlat_core::closure::Subcontext)> = match generator {
        Some(s) => {
            let p: Partition =
                s.parse().map_err(|e| CliError::usage(format!("generator `{s}`: {e}")))?;
            let sub = closure_of_partition(&ctx, &arrows, &p)?;
            vec![(p.to_string(), sub)]
        }
        None => all_one_generated_closures_with(ctx.objects().len(), ctx.attributes().len(), &arrows)
            .into_iter()
            .map(|sub| {
                let name = match sub.generator {
                    domlat_core::closure::Node::Object(g) => ctx.objects()[g].to_string(),
                    domlat_core::closure::Node::Attribute(m) => ctx.attributes()[m].to_string(),
                };
                (name, sub)
            })
            .collect(),
    };
    let text = match format {
        Format::Text => subs.iter().map(|(g, s)| closure_line(&ctx, g, s)).collect(),
        Format::Json => json::to_string(
            &subs.iter().map(|(g, s)| json::Closure::new(&ctx, g.clone(), s)).collect::<Vec<_>>(),
        ),
        other => return Err(unsupported(other, "closures")),
    };
    Ok(Outcome::ok(text))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    use std::io::Write;
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&cli.command, &cli.config).and_then(|o| emit(&o.text, cli.config.out.as_ref()).map(|_| o.passed)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("domlat: {e}");
            ExitCode::from(2)
        }
    }
}
