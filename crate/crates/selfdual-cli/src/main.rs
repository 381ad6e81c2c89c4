//! Command-line surface: Schur functions, characters, dimensions, lower
//! bounds, and golden-table verification, with text, CSV, or JSON output.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use selfdual::bounds::{
    enumerate_pairings, lower_bound_of_class, reproduce_table_with_jobs, trivial_multiplicity,
    PairingClass,
};
use selfdual::characters::{char_value, schur, CycleGroup};
use selfdual::lie::{make_context, Weight};

use selfdual_cli::doc::{
    build_pairing, parse_groups, parse_pairs, parse_points, parse_weight, PairsField,
    ProblemDocument,
};
use selfdual_cli::output::{
    bound_entry, render_bound, render_char, render_dim, render_schur, render_table, table_doc,
    BoundDoc, CharDoc, DimDoc, Format, SchurDoc,
};

#[derive(Parser)]
#[command(
    name = "selfdual",
    version,
    about = "Exact lower bounds for real self-dual spaces in osculating Schubert problems"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character of one irreducible module as a Laurent polynomial.
    Schur {
        /// Space dimension N (N >= 3).
        #[arg(long = "N")]
        n: i64,
        /// Fundamental coordinates, comma-separated, e.g. 0,1.
        #[arg(long)]
        weight: String,
    },
    /// Print the trivial multiplicity and ambient Grassmannian data.
    Dim {
        /// Problem document (TOML file).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Space dimension N, used with --points.
        #[arg(long = "N")]
        n: Option<i64>,
        /// Inline points, e.g. "(0,1)x6" or "(1,0)x3,(1,0)_1".
        #[arg(long)]
        points: Option<String>,
    },
    /// Print lower bounds for conjugate-pair assignments.
    Bound {
        /// Problem document (TOML file).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Space dimension N, used with --points.
        #[arg(long = "N")]
        n: Option<i64>,
        /// Inline points, e.g. "(0,1)x6" or "(1,0)x3,(1,0)_1".
        #[arg(long)]
        points: Option<String>,
        /// Number of conjugate pairs.
        #[arg(short = 'c', long = "pair-count")]
        c: Option<u32>,
        /// Explicit index pairs, e.g. "0-1,2-3".
        #[arg(long)]
        pairs: Option<String>,
        /// Report one result per inequivalent pairing class instead of
        /// only the leftmost class.
        #[arg(long)]
        all_pairings: bool,
    },
    /// Print a character value on a multiplicity space.
    Char {
        /// Space dimension N (N >= 3).
        #[arg(long = "N")]
        n: i64,
        /// Cycle data per tensor group, e.g. "(0,1):1,1,1,1,1,1;(1,0):2".
        #[arg(long)]
        groups: String,
        /// Target weight in fundamental coordinates; defaults to zero.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Recompute a golden table and compare every cell.
    Table {
        /// Table identifier (1 or 2).
        #[arg(long)]
        which: u8,
        /// Exit with status 2 when any cell mismatches.
        #[arg(long)]
        verify: bool,
        /// Worker threads for row evaluation (output is identical for
        /// any value).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Schur { n, weight } => cmd_schur(n, &weight, cli.format),
        Command::Dim { input, n, points } => cmd_dim(input, n, points, cli.format),
        Command::Bound {
            input,
            n,
            points,
            c,
            pairs,
            all_pairings,
        } => cmd_bound(input, n, points, c, pairs, all_pairings, cli.format),
        Command::Char { n, groups, mu } => cmd_char(n, &groups, mu.as_deref(), cli.format),
        Command::Table { which, verify, jobs } => cmd_table(which, verify, jobs, cli.format),
    }
}

fn cmd_schur(n: i64, weight: &str, format: Format) -> Result<u8, String> {
    let ctx = make_context(n).map_err(|e| e.to_string())?;
    let weight = Weight::new(parse_weight(weight)?);
    ctx.validate_weight(&weight).map_err(|e| e.to_string())?;
    let polynomial = schur(&ctx, &weight).to_string();
    let doc = SchurDoc {
        n,
        weight: weight.coords().to_vec(),
        polynomial,
    };
    println!("{}", render_schur(&doc, format));
    Ok(0)
}

/// Resolves the problem source: a document file or inline `--N`/`--points`.
fn load_document(
    input: Option<PathBuf>,
    n: Option<i64>,
    points: Option<String>,
) -> Result<ProblemDocument, String> {
    match (input, n, points) {
        (Some(path), None, None) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            ProblemDocument::parse(&text)
        }
        (None, Some(n), Some(points)) => Ok(ProblemDocument {
            n,
            points: parse_points(&points)?,
            pairs: None,
        }),
        _ => Err("provide either --input FILE or both --N and --points".into()),
    }
}

fn cmd_dim(
    input: Option<PathBuf>,
    n: Option<i64>,
    points: Option<String>,
    format: Format,
) -> Result<u8, String> {
    let document = load_document(input, n, points)?;
    let problem = document.build_problem()?;
    let (grassmann, grassmann_note) = DimDoc::grassmann_from(problem.grassmann());
    let doc = DimDoc {
        n: document.n,
        points: document.points.clone(),
        trivial_multiplicity: trivial_multiplicity(&problem).to_string(),
        grassmann,
        grassmann_note,
    };
    println!("{}", render_dim(&doc, format));
    Ok(0)
}

fn cmd_bound(
    input: Option<PathBuf>,
    n: Option<i64>,
    points: Option<String>,
    c: Option<u32>,
    pairs: Option<String>,
    all_pairings: bool,
    format: Format,
) -> Result<u8, String> {
    let document = load_document(input, n, points)?;
    let problem = document.build_problem()?;

    // Flags beat the document's own pairs field.
    let source = match (c, pairs) {
        (Some(_), Some(_)) => return Err("provide either --pair-count or --pairs, not both".into()),
        (Some(c), None) => PairsField::Count(c),
        (None, Some(s)) => PairsField::Explicit(parse_pairs(&s)?),
        (None, None) => document
            .pairs
            .clone()
            .ok_or("no pairing given: use --pair-count, --pairs, or a document pairs field")?,
    };

    let classes: Vec<PairingClass> = match source {
        PairsField::Explicit(idx_pairs) => {
            if all_pairings {
                return Err("--all-pairings needs a pair count, not explicit pairs".into());
            }
            let spec = build_pairing(&problem, &idx_pairs)?;
            vec![PairingClass::of(&problem, &spec)]
        }
        PairsField::Count(c) => {
            let all = enumerate_pairings(&problem, c);
            if all_pairings {
                all
            } else {
                all.into_iter().take(1).collect()
            }
        }
    };

    let results = classes
        .iter()
        .map(|class| bound_entry(class, &lower_bound_of_class(&problem, class)))
        .collect();
    let doc = BoundDoc {
        n: document.n,
        points: document.points.clone(),
        results,
    };
    println!("{}", render_bound(&doc, format));
    Ok(0)
}

fn cmd_char(n: i64, groups: &str, mu: Option<&str>, format: Format) -> Result<u8, String> {
    let ctx = make_context(n).map_err(|e| e.to_string())?;
    let group_docs = parse_groups(groups)?;
    let mut cycle_groups = Vec::with_capacity(group_docs.len());
    for g in &group_docs {
        let weight = Weight::new(g.weight.clone());
        ctx.validate_weight(&weight).map_err(|e| e.to_string())?;
        cycle_groups.push(CycleGroup::new(weight, g.cycles.clone()).map_err(|e| e.to_string())?);
    }
    if cycle_groups.is_empty() {
        return Err("at least one cycle group is required".into());
    }
    let mu = match mu {
        Some(s) => Weight::new(parse_weight(s)?),
        None => Weight::new(vec![0; ctx.rank()]),
    };
    ctx.validate_weight(&mu).map_err(|e| e.to_string())?;
    let value = char_value(&ctx, &cycle_groups, &mu);
    let doc = CharDoc {
        n,
        groups: group_docs,
        mu: mu.coords().to_vec(),
        value: value.to_string(),
    };
    println!("{}", render_char(&doc, format));
    Ok(0)
}

fn cmd_table(which: u8, verify: bool, jobs: usize, format: Format) -> Result<u8, String> {
    let start = Instant::now();
    let report = reproduce_table_with_jobs(which, jobs).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let doc = table_doc(&report);
    println!("{}", render_table(&doc, format));
    eprintln!("table {which} recomputed in {elapsed:.2?} with {} job(s)", jobs.max(1));
    if verify && !doc.all_matched {
        return Ok(2);
    }
    Ok(0)
}
