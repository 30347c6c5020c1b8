//! Command-line front end: statistics, enumeration, the tableau and
//! statistic-exchange bijections, operator graphs, graded generating
//! functions, and the exhaustive verification suite.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use minimaj::{
    crystal_graph, enumerate_partitions, from_tableaux, minimaj_to_maj_with_trace, render_blocks,
    run_all, to_schur_basis, to_tableaux, val_crystal, val_direct, val_rhs_syt, CheckConfig,
    CheckReport, Letter, OrderedMultisetPartition, SchurExpansion, ShiftReason, ShiftTrace,
    TableauTuple,
};

#[derive(Parser)]
#[command(
    name = "minimaj",
    version,
    about = "Exact combinatorics of ordered multiset partitions",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print both canonical orders and both statistics of a partition.
    Stats {
        /// Partition, e.g. "157|24|56|468|13|123"
        partition: String,
        #[arg(long)]
        json: bool,
    },
    /// List every partition with the given parameters, one per line.
    Enumerate {
        /// Total number of letters
        #[arg(long)]
        n: usize,
        /// Number of blocks
        #[arg(long)]
        k: usize,
        /// Largest allowed letter
        #[arg(long)]
        r: Letter,
        #[arg(long)]
        json: bool,
    },
    /// Map a partition to its descent key and tableau tuple.
    Phi {
        partition: String,
        #[arg(long)]
        json: bool,
    },
    /// Rebuild a partition from a JSON tuple on standard input.
    PhiInv {
        #[arg(long)]
        json: bool,
    },
    /// Map a partition to its major-index partner with the same weight.
    Psi {
        partition: String,
        /// Show every intermediate state of the block shifts
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Summarize the operator graph; optionally write it in DOT form.
    Crystal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: Letter,
        /// Write the graph to this path in Graphviz DOT format
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Print the graded generating function in the Schur basis.
    Val {
        /// Total number of letters
        #[arg(long)]
        n: usize,
        /// Grading index; the sum runs over partitions with k + 1 blocks
        #[arg(long)]
        k: usize,
        /// Number of variables
        #[arg(long)]
        r: Letter,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Run the exhaustive verification suite over small parameters.
    Verify {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Cap on the number of blocks (defaults to n)
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long, default_value_t = 4)]
        r_max: Letter,
        /// Allow bounds above n_max = 8
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Sum the statistic over every partition
    Direct,
    /// Read the expansion off the operator-graph components
    Crystal,
    /// Closed form over standard tableaux (needs r >= n)
    Syt,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Stats { partition, json } => cmd_stats(&partition, json)?,
        Command::Enumerate { n, k, r, json } => cmd_enumerate(n, k, r, json)?,
        Command::Phi { partition, json } => cmd_phi(&partition, json)?,
        Command::PhiInv { json } => cmd_phi_inv(json)?,
        Command::Psi { partition, trace, json } => cmd_psi(&partition, trace, json)?,
        Command::Crystal { n, k, r, dot, json } => cmd_crystal(n, k, r, dot, json)?,
        Command::Val { n, k, r, method, json } => cmd_val(n, k, r, method, json)?,
        Command::Verify { n_max, k_max, r_max, force, json } => {
            return cmd_verify(n_max, k_max, r_max, force, json);
        }
    }
    Ok(true)
}

fn parse_partition(text: &str) -> Result<OrderedMultisetPartition> {
    text.parse()
        .with_context(|| format!("invalid partition {text:?}"))
}

fn join_positions(values: &[usize]) -> String {
    if values.is_empty() {
        "none".to_string()
    } else {
        values
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn word_string(word: &[Letter]) -> String {
    if word.iter().all(|&x| x <= 9) {
        word.iter().map(ToString::to_string).collect()
    } else {
        word.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn partition_string(parts: &[usize]) -> String {
    format!(
        "({})",
        parts
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn cmd_stats(text: &str, json: bool) -> Result<()> {
    let p = parse_partition(text)?;
    let view = p.minimaj_order();
    let key = view.descent_data();
    if json {
        println!(
            "{}",
            serde_json::json!({
                "partition": p.to_string(),
                "minimaj_order": view.to_string(),
                "major_index_order": render_blocks(&p.major_index_order()),
                "minimaj": p.minimaj(),
                "major_index": p.major_index(),
                "descent_positions": key.positions(),
                "descent_blocks": key.block_indices(),
            })
        );
    } else {
        println!("partition: {p}");
        println!("minimaj order: {view}");
        println!("major-index order: {}", render_blocks(&p.major_index_order()));
        println!("minimaj: {}", p.minimaj());
        println!("major index: {}", p.major_index());
        println!("descent positions: {}", join_positions(key.positions()));
        println!("descent blocks: {}", join_positions(key.block_indices()));
    }
    Ok(())
}

fn cmd_enumerate(n: usize, k: usize, r: Letter, json: bool) -> Result<()> {
    let all = enumerate_partitions(n, k, r);
    if json {
        let texts: Vec<String> = all.iter().map(ToString::to_string).collect();
        println!("{}", serde_json::to_string(&texts)?);
    } else {
        for p in &all {
            println!("{p}");
        }
    }
    Ok(())
}

fn cmd_phi(text: &str, json: bool) -> Result<()> {
    let p = parse_partition(text)?;
    let (key, tuple) = to_tableaux(&p);
    if json {
        println!(
            "{}",
            serde_json::json!({
                "partition": p.to_string(),
                "key": key,
                "tuple": tuple,
                "reading_word": tuple.reading_word(),
            })
        );
    } else {
        println!("partition: {p}");
        println!("minimaj: {}", key.minimaj());
        println!("descent positions: {}", join_positions(key.positions()));
        println!("descent blocks: {}", join_positions(key.block_indices()));
        println!("reading word: {}", word_string(&tuple.reading_word()));
        println!("{tuple}");
    }
    Ok(())
}

fn cmd_phi_inv(json: bool) -> Result<()> {
    let mut input = String::new();
    std::io::stdin()
        .read_to_string(&mut input)
        .context("reading standard input")?;
    let value: serde_json::Value =
        serde_json::from_str(input.trim()).context("standard input is not JSON")?;
    let tuple_value = value.get("tuple").cloned().unwrap_or(value);
    let tuple: TableauTuple =
        serde_json::from_value(tuple_value).context("not a valid tableau tuple")?;
    let p = from_tableaux(&tuple)?;
    if json {
        println!("{}", serde_json::json!({ "partition": p.to_string() }));
    } else {
        println!("{p}");
    }
    Ok(())
}

fn reason_text(reason: ShiftReason) -> &'static str {
    match reason {
        ShiftReason::EmptyBlock => "empty block",
        ShiftReason::EndDescent => "end descent",
    }
}

fn print_trace(trace: &ShiftTrace) {
    println!("trace:");
    println!(
        "  start: {} (maj {})",
        render_blocks(&trace.states[0].major_index_order()),
        trace.states[0].major_index()
    );
    for (step, state) in trace.steps.iter().zip(&trace.states[1..]) {
        println!(
            "  shift at block {} ({}): move {} -> {} (maj {})",
            step.block_index,
            reason_text(step.reason),
            word_string(&step.moved),
            render_blocks(&state.major_index_order()),
            step.maj_after
        );
    }
}

fn cmd_psi(text: &str, trace: bool, json: bool) -> Result<()> {
    let p = parse_partition(text)?;
    let (image, shift_trace) = minimaj_to_maj_with_trace(&p);
    if json {
        let mut value = serde_json::json!({
            "partition": p.to_string(),
            "minimaj": p.minimaj(),
            "image": image.to_string(),
            "image_major_index_order": render_blocks(&image.major_index_order()),
            "major_index": image.major_index(),
        });
        if trace {
            value["trace"] = serde_json::to_value(&shift_trace)?;
        }
        println!("{value}");
    } else {
        println!("partition: {p}");
        println!("minimaj: {}", p.minimaj());
        println!("image: {image}");
        println!(
            "image (major-index order): {}",
            render_blocks(&image.major_index_order())
        );
        println!("major index: {}", image.major_index());
        if trace {
            print_trace(&shift_trace);
        }
    }
    Ok(())
}

fn cmd_crystal(n: usize, k: usize, r: Letter, dot: Option<PathBuf>, json: bool) -> Result<()> {
    let g = crystal_graph(n, k, r);
    if let Some(path) = &dot {
        std::fs::write(path, g.to_dot())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if json {
        let components: Vec<_> = g
            .components()
            .iter()
            .map(|c| {
                let source = &g.vertices()[c.source];
                serde_json::json!({
                    "size": c.vertices.len(),
                    "highest_weight": c.highest_weight.sorted_desc(),
                    "minimaj": source.minimaj(),
                    "source": source.minimaj_order().to_string(),
                })
            })
            .collect();
        let mut value = serde_json::json!({
            "vertices": g.vertices().len(),
            "edges": g.edges().len(),
            "components": components,
        });
        if let Some(path) = &dot {
            value["dot"] = serde_json::Value::String(path.display().to_string());
        }
        println!("{value}");
    } else {
        println!("vertices: {}", g.vertices().len());
        println!("edges: {}", g.edges().len());
        println!("components: {}", g.components().len());
        for (i, c) in g.components().iter().enumerate() {
            let source = &g.vertices()[c.source];
            println!(
                "component {}: size {}, highest weight {}, minimaj {}, source {}",
                i + 1,
                c.vertices.len(),
                partition_string(&c.highest_weight.sorted_desc()),
                source.minimaj(),
                source.minimaj_order()
            );
        }
        if let Some(path) = &dot {
            println!("dot: {}", path.display());
        }
    }
    Ok(())
}

fn cmd_val(n: usize, k: usize, r: Letter, method: Method, json: bool) -> Result<()> {
    let expansion: SchurExpansion = match method {
        Method::Direct => to_schur_basis(&val_direct(n, k, r))?,
        Method::Crystal => val_crystal(n, k, r),
        Method::Syt => val_rhs_syt(n, k + 1, r)?,
    };
    if json {
        let terms: Vec<_> = expansion
            .terms()
            .iter()
            .map(|(partition, coeff)| {
                serde_json::json!({
                    "partition": partition,
                    "coefficient": coeff.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                })
            })
            .collect();
        println!("{}", serde_json::json!({ "terms": terms }));
    } else {
        println!("{expansion}");
    }
    Ok(())
}

fn cmd_verify(
    n_max: usize,
    k_max: Option<usize>,
    r_max: Letter,
    force: bool,
    json: bool,
) -> Result<bool> {
    if n_max > 8 && !force {
        bail!("n_max = {n_max} would take very long; pass --force to run anyway");
    }
    let config = CheckConfig { n_max, k_max, r_max };
    let reports = run_all(&config);
    let ok = reports.iter().all(CheckReport::passed);
    if json {
        println!("{}", serde_json::to_string_pretty(&reports)?);
    } else {
        for report in &reports {
            match &report.counterexample {
                None => println!("{}: pass ({} cases)", report.name, report.cases),
                Some(ce) => println!(
                    "{}: FAIL ({} cases) counterexample: {}",
                    report.name, report.cases, ce
                ),
            }
        }
        println!("result: {}", if ok { "pass" } else { "FAIL" });
    }
    Ok(ok)
}
