//! Command-line surface: census, stochastic search, catalog verification,
//! format conversion, and filling-pattern recommendations.
//!
//! Exit status: 0 on success, 1 on verification failure, 2 on usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use regdiam_core::catalog;
use regdiam_core::codec::{decode_graph6, encode_graph6, format_edge_list, parse_edge_list};
use regdiam_core::enumerate::{
    min_diameter_census, regularity_for, stochastic_low_diameter_search, CensusQuery, Regularity,
    SearchQuery,
};
use regdiam_core::graph::{completion_ratio, required_edge_count, Graph};
use regdiam_core::pcm::{
    graph_from_mask, matrix_sketch, pattern_from_graph, recommend, PcmError, PcmMask,
    RecommendTarget,
};
use serde::Serialize;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

/// Default node budget for exhaustive censuses.
const DEFAULT_BUDGET: u64 = 100_000_000;
/// Default seed for randomized commands; always echoed in the output.
const DEFAULT_SEED: u64 = 1;

#[derive(Parser)]
#[command(
    name = "regdiam",
    about = "Minimal-diameter regular graphs and PCM filling patterns",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonFlags {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Recommend a filling pattern for n items.
    Recommend {
        #[arg(long)]
        n: usize,
        /// Largest acceptable diameter (default 3).
        #[arg(long = "max-d")]
        max_d: Option<u32>,
        /// Largest acceptable number of comparisons.
        #[arg(long = "max-comparisons")]
        max_comparisons: Option<usize>,
        /// Serve the census optimum with the smallest canonical form.
        #[arg(long = "census-optimum")]
        census_optimum: bool,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Exhaustive minimal-diameter census for one (n, k) cell.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Keep and print the graph6 of every minimal-diameter graph.
        #[arg(long = "store-optima")]
        store_optima: bool,
        /// Node budget (candidates examined). Default 100000000.
        #[arg(long)]
        budget: Option<u64>,
        /// Remove the node budget entirely.
        #[arg(long, conflicts_with = "budget")]
        unbounded: bool,
        /// Worker threads (default: REGDIAM_JOBS or all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Seeded stochastic search for graphs meeting a diameter target.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long = "target-d")]
        target_d: u32,
        /// RNG seed; identical seeds give byte-identical output.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        attempts: u64,
        /// Stop after this many distinct graphs.
        #[arg(long = "distinct-goal")]
        distinct_goal: Option<usize>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Verify the embedded catalog, one graph6 string, or a stdin stream.
    Verify {
        /// Check all 26 embedded reference graphs.
        #[arg(long)]
        catalog: bool,
        /// Check a single graph6 string (omit to read a stream from stdin).
        #[arg(long, conflicts_with = "catalog")]
        graph6: Option<String>,
        /// Expected regularity degree (quasi-regular when n*k is odd).
        #[arg(long = "expect-k", required_unless_present = "catalog")]
        expect_k: Option<usize>,
        /// Expected diameter.
        #[arg(long = "expect-d", required_unless_present = "catalog")]
        expect_d: Option<u32>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Convert between graph formats (stdin to stdout).
    Convert {
        #[arg(long = "from", value_enum)]
        from: FromFormat,
        #[arg(long = "to", value_enum)]
        to: ToFormat,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Edge count, completion ratio, and minimal diameter for a cell.
    Info {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        common: CommonFlags,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Write every entry as .g6 and .edges files into a directory.
    Export { dir: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum FromFormat {
    G6,
    Edges,
    Mask,
}

#[derive(Clone, Copy, ValueEnum)]
enum ToFormat {
    G6,
    Edges,
    Matrix,
    Csv,
}

fn main() -> ExitCode {
    // die quietly when the downstream pipe closes, like other line tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn default_jobs() -> Option<usize> {
    std::env::var("REGDIAM_JOBS").ok().and_then(|v| v.parse().ok())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Recommend { n, max_d, max_comparisons, census_optimum, common } => {
            cmd_recommend(n, max_d, max_comparisons, census_optimum, common.json)
        }
        Command::Census { n, k, store_optima, budget, unbounded, jobs, common } => {
            let budget = if unbounded { None } else { Some(budget.unwrap_or(DEFAULT_BUDGET)) };
            cmd_census(n, k, store_optima, budget, jobs.or_else(default_jobs), common.json)
        }
        Command::Search { n, k, target_d, seed, attempts, distinct_goal, common } => {
            cmd_search(n, k, target_d, seed, attempts, distinct_goal, common.json)
        }
        Command::Verify { catalog, graph6, expect_k, expect_d, common } => {
            if catalog {
                cmd_verify_catalog(common.json)
            } else {
                let k = expect_k.ok_or("--expect-k is required")?;
                let d = expect_d.ok_or("--expect-d is required")?;
                match graph6 {
                    Some(s) => cmd_verify_strings(vec![s], k, d, common.json),
                    None => {
                        let mut input = String::new();
                        std::io::stdin()
                            .read_to_string(&mut input)
                            .map_err(|e| e.to_string())?;
                        let strings: Vec<String> = input
                            .lines()
                            .map(str::trim)
                            .filter(|l| !l.is_empty())
                            .map(String::from)
                            .collect();
                        cmd_verify_strings(strings, k, d, common.json)
                    }
                }
            }
        }
        Command::Convert { from, to } => cmd_convert(from, to),
        Command::Catalog { action } => match action {
            CatalogAction::Export { dir } => cmd_catalog_export(&dir),
        },
        Command::Info { n, k, common } => cmd_info(n, k, common.json),
    }
}

// ---------------------------------------------------------------------------
// recommend
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct RecommendOut {
    n: usize,
    chosen_k: usize,
    expected_d: u32,
    comparisons: usize,
    c_num: u64,
    c_den: u64,
    c_value: f64,
    source: String,
    rationale: String,
    pairs: Vec<(usize, usize)>,
}

fn cmd_recommend(
    n: usize,
    max_d: Option<u32>,
    max_comparisons: Option<usize>,
    census_optimum: bool,
    json: bool,
) -> Result<ExitCode, String> {
    let target = RecommendTarget { max_diameter: max_d, max_comparisons, census_optimum };
    match recommend(n, target) {
        Ok(rec) => {
            let out = RecommendOut {
                n: rec.n,
                chosen_k: rec.chosen_k,
                expected_d: rec.expected_d,
                comparisons: rec.comparisons,
                c_num: rec.c.numerator,
                c_den: rec.c.denominator,
                c_value: rec.c.value(),
                source: format!("{:?}", rec.source).to_lowercase(),
                rationale: rec.rationale.clone(),
                pairs: rec.pattern.pairs.clone(),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!(
                    "n={} k={} d={} comparisons={} c={}/{}\u{2248}{:.4}",
                    out.n,
                    out.chosen_k,
                    out.expected_d,
                    out.comparisons,
                    out.c_num,
                    out.c_den,
                    out.c_value
                );
                println!("{}", out.rationale);
                for (i, j) in &out.pairs {
                    println!("{i}-{j}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(PcmError::Unsatisfiable { frontier }) => {
            if json {
                #[derive(Serialize)]
                struct FrontierOut {
                    unsatisfiable: bool,
                    frontier: Vec<(usize, u32, usize)>,
                }
                let out = FrontierOut {
                    unsatisfiable: true,
                    frontier: frontier.iter().map(|p| (p.k, p.d, p.edges)).collect(),
                };
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("no pattern satisfies the request; achievable:");
                for p in &frontier {
                    println!("  k={} d={} edges={}", p.k, p.d, p.edges);
                }
            }
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CensusOut {
    n: usize,
    k: usize,
    mode: String,
    d_min: Option<u32>,
    optima_count: u64,
    total_connected: u64,
    exhausted: bool,
    nodes: u64,
    c_num: u64,
    c_den: u64,
    optima: Vec<String>,
}

fn cmd_census(
    n: usize,
    k: usize,
    store_optima: bool,
    budget: Option<u64>,
    jobs: Option<usize>,
    json: bool,
) -> Result<ExitCode, String> {
    let q = CensusQuery { n, k, mode: None, store_optima, budget, jobs };
    let r = min_diameter_census(&q).map_err(|e| e.to_string())?;
    let out = CensusOut {
        n: r.n,
        k: r.k,
        mode: r.mode.to_string(),
        d_min: r.d_min,
        optima_count: r.optima_count,
        total_connected: r.total_connected,
        exhausted: r.exhausted,
        nodes: r.nodes,
        c_num: r.completion.numerator,
        c_den: r.completion.denominator,
        optima: r.optima.iter().map(|c| c.as_str().to_string()).collect(),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        let d = out.d_min.map_or("-".to_string(), |d| d.to_string());
        println!(
            "{} {} {} {} {} {}/{}",
            out.n, out.k, d, out.optima_count, out.exhausted, out.c_num, out.c_den
        );
        for g6 in &out.optima {
            println!("{g6}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SearchOut {
    n: usize,
    k: usize,
    target_d: u32,
    seed: u64,
    attempts_used: u64,
    successes: u64,
    distinct: usize,
    found: Vec<String>,
}

fn cmd_search(
    n: usize,
    k: usize,
    target_d: u32,
    seed: u64,
    attempts: u64,
    distinct_goal: Option<usize>,
    json: bool,
) -> Result<ExitCode, String> {
    let q = SearchQuery { n, k, mode: None, target_d, attempts, distinct_goal, seed };
    let r = stochastic_low_diameter_search(&q).map_err(|e| e.to_string())?;
    let out = SearchOut {
        n,
        k,
        target_d,
        seed,
        attempts_used: r.attempts_used,
        successes: r.successes,
        distinct: r.found.len(),
        found: r.found.iter().map(|c| c.as_str().to_string()).collect(),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!(
            "n={} k={} target_d={} seed={} attempts={} successes={} distinct={}",
            out.n, out.k, out.target_d, out.seed, out.attempts_used, out.successes, out.distinct
        );
        for g6 in &out.found {
            println!("{g6}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct VerifyEntryOut {
    n: usize,
    k: usize,
    name: Option<&'static str>,
    pass: bool,
    diameter: Option<u32>,
    graph6_status: String,
    corrected: bool,
}

fn cmd_verify_catalog(json: bool) -> Result<ExitCode, String> {
    let report = catalog::verify_catalog();
    if json {
        let out: Vec<VerifyEntryOut> = report
            .entries
            .iter()
            .map(|r| VerifyEntryOut {
                n: r.n,
                k: r.k,
                name: r.name,
                pass: r.pass,
                diameter: r.diameter_found,
                graph6_status: r.g6_status.to_string(),
                corrected: r.corrected,
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        print!("{}", catalog::render_report(&report));
    }
    Ok(if report.all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct VerifyStringOut {
    graph6: String,
    n: usize,
    connected: bool,
    degree_ok: bool,
    diameter: Option<u32>,
    diameter_ok: bool,
    pass: bool,
}

fn cmd_verify_strings(
    strings: Vec<String>,
    expect_k: usize,
    expect_d: u32,
    json: bool,
) -> Result<ExitCode, String> {
    let mut outs = Vec::new();
    let mut all_pass = true;
    for s in strings {
        let g = decode_graph6(&s).map_err(|e| format!("{s}: {e}"))?;
        let degree_ok = match regularity_for(g.n(), expect_k) {
            Regularity::Regular => g.is_k_regular(expect_k),
            Regularity::QuasiRegular => g.is_k_quasi_regular(expect_k),
        };
        let connected = g.is_connected();
        let diameter = g.diameter();
        let diameter_ok = diameter == Some(expect_d);
        let pass = degree_ok && connected && diameter_ok;
        all_pass &= pass;
        outs.push(VerifyStringOut {
            graph6: s,
            n: g.n(),
            connected,
            degree_ok,
            diameter,
            diameter_ok,
            pass,
        });
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&outs).unwrap());
    } else {
        for o in &outs {
            println!(
                "{} n={} connected={} degree={} diameter={} {}",
                o.graph6,
                o.n,
                if o.connected { "ok" } else { "FAIL" },
                if o.degree_ok { "ok" } else { "FAIL" },
                o.diameter.map_or("-".to_string(), |d| d.to_string()),
                if o.pass { "ok" } else { "FAIL" }
            );
        }
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// ---------------------------------------------------------------------------
// convert
// ---------------------------------------------------------------------------

fn cmd_convert(from: FromFormat, to: ToFormat) -> Result<ExitCode, String> {
    let mut input = String::new();
    std::io::stdin().read_to_string(&mut input).map_err(|e| e.to_string())?;
    let graphs: Vec<Graph> = match from {
        FromFormat::G6 => input
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| decode_graph6(l).map_err(|e| format!("{l}: {e}")))
            .collect::<Result<_, _>>()?,
        FromFormat::Edges => vec![parse_edge_list(&input).map_err(|e| e.to_string())?],
        FromFormat::Mask => {
            let mask = PcmMask::parse(&input).map_err(|e| e.to_string())?;
            vec![graph_from_mask(&mask).map_err(|e| e.to_string())?]
        }
    };
    for g in &graphs {
        match to {
            ToFormat::G6 => println!("{}", encode_graph6(g)),
            ToFormat::Edges => print!("{}", format_edge_list(g)),
            ToFormat::Matrix => print!("{}", matrix_sketch(g)),
            ToFormat::Csv => {
                let p = pattern_from_graph(g).map_err(|e| e.to_string())?;
                print!("{}", p.to_csv());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// catalog export
// ---------------------------------------------------------------------------

fn cmd_catalog_export(dir: &PathBuf) -> Result<ExitCode, String> {
    std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    for e in catalog::entries() {
        let stem = format!("n{:02}_k{}_d{}", e.n, e.k, e.d_claimed);
        let g = e.graph();
        std::fs::write(dir.join(format!("{stem}.g6")), format!("{}\n", encode_graph6(&g)))
            .map_err(|e| e.to_string())?;
        std::fs::write(dir.join(format!("{stem}.edges")), format_edge_list(&g))
            .map_err(|e| e.to_string())?;
    }
    println!("exported {} entries to {}", catalog::entries().len(), dir.display());
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// info
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct InfoOut {
    n: usize,
    k: usize,
    edges: usize,
    c_num: u64,
    c_den: u64,
    c_value: f64,
    d_min: Option<u32>,
    catalog_name: Option<&'static str>,
}

fn cmd_info(n: usize, k: usize, json: bool) -> Result<ExitCode, String> {
    let edges = required_edge_count(n, k).map_err(|e| e.to_string())?;
    let c = completion_ratio(n, k).map_err(|e| e.to_string())?;
    let entry = catalog::lookup(n, k).ok();
    let d_min = entry.map(|e| e.d_claimed);
    let out = InfoOut {
        n,
        k,
        edges,
        c_num: c.numerator,
        c_den: c.denominator,
        c_value: c.value(),
        d_min,
        catalog_name: entry.and_then(|e| e.name),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        let mut line =
            format!("edges={} c={}/{}\u{2248}{:.4}", out.edges, out.c_num, out.c_den, out.c_value);
        if let Some(d) = out.d_min {
            line.push_str(&format!(" d_min={d}"));
        }
        if let Some(name) = out.catalog_name {
            line.push_str(&format!(" (catalog: {name})"));
        }
        println!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}
