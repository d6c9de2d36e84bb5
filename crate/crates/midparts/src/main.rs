//! Command-line front end: tree analysis, extremal constructions,
//! closed-form bounds, verification campaigns, and the optimal-tree
//! search.
//!
//! Exit codes: 0 success / all assertions pass, 1 verification
//! failure, 2 usage or parse error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use midparts::bounds;
use midparts::constructions::{
    binary_caterpillar, binary_good, binary_rgood, comet, extended_good, extended_rgood,
    greedy_tree, rooted_greedy, split, split_forest, DegreeSequence,
};
use midparts::enumeration::{
    encode_rooted, free_trees, rooted_trees, EnumLimits, TreeFamilyConstraints,
};
use midparts::formats::{parse_edge_list, reports_to_json, to_dot, write_edge_list};
use midparts::tree_core::{
    count_subtrees_at, middle_report, vertex_functions, MiddleReport, RootedTree, Tree,
};
use midparts::verify::{
    diameter_attainment, explore_binary_conjecture, search_optimal_profiles, solve_with_oracle,
    verify_claim_minmax, verify_concavity, verify_degree_bounds, verify_enumeration,
    verify_greedy, verify_majorization, verify_middle_max, verify_rgood_extremes,
    verify_split_lemmas, MiddlePair, OptimalTable, ProfileSearchOptions, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "midparts",
    version,
    about = "Middle parts of trees: analysis, extremal constructions, bounds, and exhaustive verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a tree file: center, centroid, core, and their distances
    Analyze(AnalyzeArgs),
    /// Build a named extremal tree and emit it in edge-list format
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Evaluate a closed-form bound
    Bound(BoundArgs),
    /// Run a verification campaign over enumerated trees
    Verify(VerifyArgs),
    /// Minimize root-containing subtrees at fixed order and height
    Search(SearchArgs),
    /// Enumerate trees of a given order, one representative per class
    Enumerate(EnumerateArgs),
}

#[derive(clap::Args)]
struct AnalyzeArgs {
    /// Tree file in edge-list format
    file: PathBuf,
    /// Also report the root-subtree count at this vertex
    #[arg(long)]
    root: Option<usize>,
    /// Emit a JSON record instead of text
    #[arg(long)]
    json: bool,
    /// Write a DOT drawing with middle parts annotated
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Include the per-vertex functions
    #[arg(long)]
    verbose: bool,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Path on r vertices with n-r pendants at one end
    Comet {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Root path with a second path attached, all leaves at full depth
    Split {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        f: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Root joined to one split branch per parameter
    SplitForest {
        #[arg(long)]
        h: usize,
        #[arg(long, value_delimiter = ',')]
        ks: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Greedy tree of a degree sequence
    Greedy {
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rooted greedy tree with a chosen root degree
    RootedGreedy {
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<usize>,
        #[arg(long)]
        root_degree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Greedy tree with maximum degree k and one residual vertex
    ExtendedGood {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rooted greedy tree with root degree k-1 and one residual vertex
    ExtendedRgood {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Binary families: good, rgood, caterpillar
    Binary {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: BinaryKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BinaryKind {
    Good,
    Rgood,
    Caterpillar,
}

#[derive(clap::Args)]
struct BoundArgs {
    /// c-ct | ct-core | c-core | diam | deg-c-ct | deg-ct-core | deg-c-core | s-split
    name: String,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long)]
    h: Option<u64>,
    /// Print the formula instantiation
    #[arg(long)]
    explain: bool,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Campaign id: c-ct | ct-core | c-core | diam-c-ct | diam-c-core |
    /// diam-ct-core | claim-minmax | greedy | majorization |
    /// split-lemmas | concavity | binary-conjecture | rgood-extremes |
    /// enum-sanity | deg-bounds
    campaign: String,
    /// Order range, e.g. 3..14 or a single value
    #[arg(long)]
    n: Option<String>,
    /// Height range (split-lemmas)
    #[arg(long)]
    h: Option<String>,
    /// Maximum-degree range
    #[arg(long)]
    k: Option<String>,
    /// Diameter range
    #[arg(long)]
    d: Option<String>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Write the JSON report array here (written even on failure)
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    h: usize,
    /// Cross-check against the exhaustive rooted-tree minimum
    #[arg(long)]
    oracle: bool,
    /// List all achiever trees
    #[arg(long)]
    all: bool,
    /// Prune to the three optimal profile shapes
    #[arg(long)]
    restrict_types: bool,
    /// Apply the multiplicity cap for very wide forests
    #[arg(long)]
    multiplicity_cap: bool,
    /// Write the outcome as a JSON record
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(clap::Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    rooted: bool,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    max_diameter: Option<usize>,
    #[arg(long)]
    max_height: Option<usize>,
    /// Print only the number of isomorphism classes
    #[arg(long)]
    count_only: bool,
    /// Write edge-list blocks here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let limits = EnumLimits::from_env();
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args).map(|_| ExitCode::SUCCESS),
        Command::Construct { kind } => cmd_construct(kind).map(|_| ExitCode::SUCCESS),
        Command::Bound(args) => cmd_bound(args).map(|_| ExitCode::SUCCESS),
        Command::Verify(args) => cmd_verify(args, limits),
        Command::Search(args) => cmd_search(args, limits).map(|_| ExitCode::SUCCESS),
        Command::Enumerate(args) => cmd_enumerate(args, limits).map(|_| ExitCode::SUCCESS),
    }
}

fn fmt_set(set: &[usize]) -> String {
    let parts: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn fmt_multiset(mut degrees: Vec<usize>) -> String {
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let mut parts = Vec::new();
    let mut i = 0;
    while i < degrees.len() {
        let d = degrees[i];
        let mut count = 0;
        while i < degrees.len() && degrees[i] == d {
            count += 1;
            i += 1;
        }
        if count == 1 {
            parts.push(d.to_string());
        } else {
            parts.push(format!("{d}^{count}"));
        }
    }
    format!("{{{}}}", parts.join(","))
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, content: &str) -> Result<(), String> {
    std::fs::write(path, content).map_err(|e| format!("{}: {e}", path.display()))
}

fn analyze_json(
    tree: &Tree,
    report: &MiddleReport,
    root: Option<usize>,
    verbose: bool,
) -> serde_json::Value {
    let mut obj = serde_json::json!({
        "n": tree.n(),
        "center": report.center,
        "centroid": report.centroid,
        "core": report.core,
        "d_c_ct": report.d_c_ct,
        "d_ct_core": report.d_ct_core,
        "d_c_core": report.d_c_core,
    });
    if let Some(r) = root {
        let rt = RootedTree::new(tree.clone(), r).expect("validated root");
        obj["root"] = serde_json::json!(r);
        obj["height"] = serde_json::json!(rt.height());
        obj["root_count"] = serde_json::json!(count_subtrees_at(&rt).to_string());
    }
    if verbose {
        let vf = vertex_functions(tree);
        obj["ecc"] = serde_json::json!(vf.ecc);
        obj["dist"] = serde_json::json!(vf.dist);
        obj["subtrees"] =
            serde_json::json!(vf.subtrees.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    obj
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), String> {
    let text = read_file(&args.file)?;
    let parsed = parse_edge_list(&text).map_err(|e| format!("{}: {e}", args.file.display()))?;
    let root = match args.root {
        Some(r) if r >= parsed.tree.n() => {
            return Err(format!("--root {r} out of range for n={}", parsed.tree.n()));
        }
        Some(r) => Some(r),
        None => parsed.root,
    };
    let report = middle_report(&parsed.tree);
    if args.json {
        let obj = analyze_json(&parsed.tree, &report, root, args.verbose);
        println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
    } else {
        println!(
            "center: {} centroid: {} core: {} d(C,CT)={} d(CT,Core)={} d(C,Core)={}",
            fmt_set(&report.center),
            fmt_set(&report.centroid),
            fmt_set(&report.core),
            report.d_c_ct,
            report.d_ct_core,
            report.d_c_core
        );
        if let Some(r) = root {
            let rt = RootedTree::new(parsed.tree.clone(), r).expect("validated root");
            println!("root {r}: height={} root-count={}", rt.height(), count_subtrees_at(&rt));
        }
        if args.verbose {
            let vf = vertex_functions(&parsed.tree);
            println!("vertex ecc dist subtrees");
            for v in 0..parsed.tree.n() {
                println!("{v} {} {} {}", vf.ecc[v], vf.dist[v], vf.subtrees[v]);
            }
        }
    }
    if let Some(dot_path) = args.dot {
        write_file(&dot_path, &to_dot(&parsed.tree, &report, root))?;
    }
    Ok(())
}

fn emit_tree(
    tree: &Tree,
    root: Option<usize>,
    description: &str,
    out: Option<&Path>,
) -> Result<(), String> {
    let text = write_edge_list(tree, root, &[description.to_string()]);
    match out {
        Some(path) => write_file(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report_free(tree: &Tree, description: &str, out: Option<&Path>) -> Result<(), String> {
    println!("order={} degrees={}", tree.n(), fmt_multiset(tree.degree_multiset()));
    emit_tree(tree, None, description, out)
}

fn report_rooted(rt: &RootedTree, description: &str, out: Option<&Path>) -> Result<(), String> {
    println!(
        "order={} height={} root={} degrees={} count={}",
        rt.n(),
        rt.height(),
        rt.root(),
        fmt_multiset(rt.tree().degree_multiset()),
        count_subtrees_at(rt)
    );
    emit_tree(rt.tree(), Some(rt.root()), description, out)
}

fn cmd_construct(kind: ConstructKind) -> Result<(), String> {
    let err = |e: midparts::constructions::ConstructError| e.to_string();
    match kind {
        ConstructKind::Comet { n, r, out } => {
            let t = comet(n, r).map_err(err)?;
            report_free(&t, &format!("comet n={n} r={r}"), out.as_deref())
        }
        ConstructKind::Split { h, f, out } => {
            let t = split(h, f).map_err(err)?;
            report_rooted(&t, &format!("split h={h} f={f}"), out.as_deref())
        }
        ConstructKind::SplitForest { h, ks, out } => {
            let t = split_forest(h, &ks).map_err(err)?;
            let desc = format!(
                "split-forest h={h} ks={}",
                ks.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")
            );
            report_rooted(&t, &desc, out.as_deref())
        }
        ConstructKind::Greedy { degrees, out } => {
            let ds = DegreeSequence::new(degrees).map_err(err)?;
            let t = greedy_tree(&ds).map_err(err)?;
            report_rooted(&t, "greedy tree", out.as_deref())
        }
        ConstructKind::RootedGreedy { degrees, root_degree, out } => {
            let ds = DegreeSequence::new(degrees).map_err(err)?;
            let t = rooted_greedy(&ds, root_degree).map_err(err)?;
            report_rooted(&t, &format!("rooted greedy root-degree={root_degree}"), out.as_deref())
        }
        ConstructKind::ExtendedGood { n, k, out } => {
            let t = extended_good(n, k).map_err(err)?;
            report_free(&t, &format!("extended good n={n} k={k}"), out.as_deref())
        }
        ConstructKind::ExtendedRgood { n, k, out } => {
            let t = extended_rgood(n, k).map_err(err)?;
            report_rooted(&t, &format!("extended rgood n={n} k={k}"), out.as_deref())
        }
        ConstructKind::Binary { n, kind, out } => match kind {
            BinaryKind::Good => {
                let t = binary_good(n).map_err(err)?;
                report_free(&t, &format!("binary good n={n}"), out.as_deref())
            }
            BinaryKind::Rgood => {
                let t = binary_rgood(n).map_err(err)?;
                report_rooted(&t, &format!("binary rgood n={n}"), out.as_deref())
            }
            BinaryKind::Caterpillar => {
                let t = binary_caterpillar(n).map_err(err)?;
                report_free(&t, &format!("binary caterpillar n={n}"), out.as_deref())
            }
        },
    }
}

fn cmd_bound(args: BoundArgs) -> Result<(), String> {
    let need = |value: Option<u64>, flag: &str| {
        value.ok_or_else(|| format!("--{flag} is required for bound {}", args.name))
    };
    let berr = |e: bounds::BoundError| e.to_string();
    let (value, explanation) = match args.name.as_str() {
        "c-ct" => {
            let n = need(args.n, "n")?;
            let v = bounds::bound_center_centroid(n).map_err(berr)?;
            (v, format!("floor(({n}-3)/4) = {v}"))
        }
        "ct-core" => {
            let n = need(args.n, "n")?;
            let v = bounds::bound_centroid_core(n).map_err(berr)?;
            let comet_r = bounds::centroid_core_comet(n).map_err(berr)?;
            let lg = bounds::ilog2_floor(n).map_err(berr)?;
            let strengthened = v + lg < (n - 1) / 2;
            (
                v,
                format!(
                    "floor(({n}-1)/2) - floor(log2 {n}){} = {v}; attained by the {comet_r}-comet",
                    if strengthened { " - 1" } else { "" }
                ),
            )
        }
        "c-core" => {
            let n = need(args.n, "n")?;
            let v = bounds::bound_center_core(n).map_err(berr)?;
            let lg = bounds::ilog2_floor(n).map_err(berr)?;
            let c = n - lg - 2 * v;
            (v, format!("floor(({n} - {lg} - {c})/2) = {v}"))
        }
        "diam" => {
            let d = need(args.d, "d")?;
            let v = bounds::bound_diameter(d).map_err(berr)?;
            (v, format!("floor(({d}-2)/2) = {v}"))
        }
        "deg-c-ct" => {
            let (n, k) = (need(args.n, "n")?, need(args.k, "k")?);
            let v = bounds::bound_deg_center_centroid(n, k).map_err(berr)?;
            let half = (n + 1).div_ceil(2);
            let h_u = bounds::min_rooted_height(half, k).map_err(berr)?;
            (v, format!("floor(({n} - {half} - {h_u})/2) = {v} with h_u={h_u}"))
        }
        "deg-ct-core" => {
            let (n, k) = (need(args.n, "n")?, need(args.k, "k")?);
            let v = bounds::bound_deg_centroid_core(n, k).map_err(berr)?;
            let np = bounds::min_core_side_order(n, k).map_err(berr)?;
            let half = (n + 1).div_ceil(2);
            (v, format!("{n} - {np} - {half} + 1 = {v} with n'={np}"))
        }
        "deg-c-core" => {
            let (n, k) = (need(args.n, "n")?, need(args.k, "k")?);
            let v = bounds::bound_deg_center_core(n, k).map_err(berr)?;
            let np = bounds::min_core_side_order(n, k).map_err(berr)?;
            let hp = bounds::min_rooted_height(np, k).map_err(berr)?;
            (v, format!("({n} - {np}) - floor(({n} - {np} + {hp})/2) = {v} with n'={np}, h'={hp}"))
        }
        "s-split" => {
            let (h, k) = (need(args.h, "h")?, need(args.k, "k")?);
            let v = bounds::split_count(h, k).map_err(berr)?;
            (v, format!("{h} + {k}^2 + {k} + 1 = {v}"))
        }
        other => return Err(format!("unknown bound {other:?}")),
    };
    println!("{value}");
    if args.explain {
        println!("{explanation}");
    }
    Ok(())
}

/// Inclusive range syntax: `a..b` or a single value.
fn parse_range(raw: Option<&str>, default: (usize, usize)) -> Result<(usize, usize), String> {
    match raw {
        None => Ok(default),
        Some(s) => {
            let bad = || format!("bad range {s:?}; expected a..b or a single value");
            if let Some((a, b)) = s.split_once("..") {
                let lo = a.trim().parse().map_err(|_| bad())?;
                let hi = b.trim().parse().map_err(|_| bad())?;
                if lo > hi {
                    return Err(bad());
                }
                Ok((lo, hi))
            } else {
                let v: usize = s.trim().parse().map_err(|_| bad())?;
                Ok((v, v))
            }
        }
    }
}

fn print_report(report: &VerificationReport) {
    let status = if report.pass { "pass" } else { "FAIL" };
    let mut line = format!("[{status}] {}", report.claim);
    for (key, value) in &report.params {
        if key == "failures" {
            continue;
        }
        line.push_str(&format!(" {key}={value}"));
    }
    if let Some(e) = &report.extremum {
        line.push_str(&format!(" extremum={e}"));
    }
    if let Some(b) = &report.bound {
        line.push_str(&format!(" bound={b}"));
    }
    println!("{line}");
    if let Some(failures) = report.params.get("failures") {
        for failure in failures.split("; ") {
            println!("    failure: {failure}");
        }
    }
}

fn cmd_verify(args: VerifyArgs, limits: EnumLimits) -> Result<ExitCode, String> {
    let verr = |e: midparts::verify::VerifyError| e.to_string();
    let mut reports: Vec<VerificationReport> = Vec::new();
    let workers = args.workers;
    let free_cap = limits.free.min(14);
    let rooted_cap = limits.rooted.min(13);
    match args.campaign.as_str() {
        "c-ct" => {
            let (lo, hi) = parse_range(args.n.as_deref(), (3, free_cap))?;
            for n in lo..=hi {
                reports.push(
                    verify_middle_max(
                        MiddlePair::CenterCentroid,
                        n,
                        TreeFamilyConstraints::NONE,
                        limits,
                        workers,
                    )
                    .map_err(verr)?,
                );
            }
        }
        "ct-core" | "c-core" => {
            let pair = if args.campaign == "ct-core" {
                MiddlePair::CentroidCore
            } else {
                MiddlePair::CenterCore
            };
            let (lo, hi) = parse_range(args.n.as_deref(), (9, free_cap))?;
            for n in lo..=hi {
                reports.push(
                    verify_middle_max(pair, n, TreeFamilyConstraints::NONE, limits, workers)
                        .map_err(verr)?,
                );
            }
        }
        "diam-c-ct" | "diam-c-core" | "diam-ct-core" => {
            let pair = match args.campaign.as_str() {
                "diam-c-ct" => MiddlePair::CenterCentroid,
                "diam-c-core" => MiddlePair::CenterCore,
                _ => MiddlePair::CentroidCore,
            };
            let (dlo, dhi) = parse_range(args.d.as_deref(), (3, 7))?;
            for d in dlo..=dhi {
                let (nlo, nhi) = parse_range(args.n.as_deref(), (d + 1, free_cap))?;
                for n in nlo.max(d + 1)..=nhi {
                    let mut report = verify_middle_max(
                        pair,
                        n,
                        TreeFamilyConstraints::diameter(d),
                        limits,
                        workers,
                    )
                    .map_err(verr)?;
                    if pair != MiddlePair::CentroidCore {
                        if let Some(first) = diameter_attainment(pair, d, nhi).map_err(verr)? {
                            report
                                .params
                                .insert("comet_attains_from_n".to_string(), first.to_string());
                        }
                    }
                    reports.push(report);
                }
            }
        }
        "claim-minmax" => {
            let (lo, hi) = parse_range(args.n.as_deref(), (2, 10.min(rooted_cap)))?;
            for n in lo..=hi {
                reports.extend(verify_claim_minmax(n, limits, workers).map_err(verr)?);
            }
        }
        "greedy" => {
            let (_, n_max) = parse_range(args.n.as_deref(), (2, 9))?;
            let (_, k_max) = parse_range(args.k.as_deref(), (3, 4))?;
            reports.push(verify_greedy(n_max, k_max, limits).map_err(verr)?);
        }
        "majorization" => {
            let (_, n_max) = parse_range(args.n.as_deref(), (2, 9))?;
            let (klo, khi) = parse_range(args.k.as_deref(), (3, 4))?;
            for k in klo..=khi {
                reports.push(verify_majorization(n_max, k).map_err(verr)?);
            }
        }
        "split-lemmas" => {
            let (nlo, nhi) = parse_range(args.n.as_deref(), (6, rooted_cap))?;
            let (hlo, hhi) = parse_range(args.h.as_deref(), (2, 6))?;
            let table = OptimalTable::new(limits);
            for h in hlo..=hhi {
                for n in nlo.max(h + 1)..=nhi {
                    reports.push(verify_split_lemmas(n, h, limits, Some(&table)).map_err(verr)?);
                }
            }
        }
        "concavity" => {
            let (lo, hi) = parse_range(args.n.as_deref(), (2, 10))?;
            for n in lo..=hi {
                reports.push(verify_concavity(n, limits).map_err(verr)?);
            }
        }
        "binary-conjecture" => {
            let (lo, hi) = parse_range(args.n.as_deref(), (4, free_cap))?;
            for n in (lo..=hi).filter(|n| n % 2 == 0) {
                reports.push(explore_binary_conjecture(n, limits).map_err(verr)?);
            }
        }
        "rgood-extremes" => {
            let (nlo, nhi) = parse_range(args.n.as_deref(), (4, 12.min(rooted_cap)))?;
            let (klo, khi) = parse_range(args.k.as_deref(), (3, 4))?;
            for k in klo..=khi {
                for n in nlo.max(k + 1)..=nhi {
                    reports.push(verify_rgood_extremes(n, k, limits).map_err(verr)?);
                }
            }
        }
        "enum-sanity" => {
            reports.push(verify_enumeration(limits).map_err(verr)?);
        }
        "deg-bounds" => {
            let (klo, khi) = parse_range(args.k.as_deref(), (3, 4))?;
            for k in klo..=khi {
                let (nlo, nhi) = parse_range(args.n.as_deref(), (k + 1, 13.min(free_cap)))?;
                for n in nlo.max(k + 1)..=nhi {
                    reports.extend(verify_degree_bounds(n, k, limits, workers).map_err(verr)?);
                }
            }
        }
        other => return Err(format!("unknown campaign {other:?}")),
    }

    for report in &reports {
        print_report(report);
    }
    if let Some(path) = &args.report {
        write_file(path, &reports_to_json(&reports))?;
    }
    let all_pass = reports.iter().all(|r| r.pass);
    println!(
        "{}: {} reports, {}",
        args.campaign,
        reports.len(),
        if all_pass { "all pass" } else { "FAILURES PRESENT" }
    );
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_search(args: SearchArgs, limits: EnumLimits) -> Result<(), String> {
    let opts = ProfileSearchOptions {
        restrict_types: args.restrict_types,
        multiplicity_cap: args.multiplicity_cap,
    };
    let result = if args.oracle {
        solve_with_oracle(args.n, args.h, opts, limits).map_err(|e| e.to_string())?
    } else {
        search_optimal_profiles(args.n, args.h, opts).map_err(|e| e.to_string())?
    };
    let profiles: Vec<String> = result.profiles.iter().map(|p| p.to_string()).collect();
    let mut line = format!("min={} profiles=[{}]", result.min, profiles.join(","));
    if let Some(agree) = result.agreement {
        line.push_str(&format!(" oracle={}", if agree { "agree" } else { "DISAGREE" }));
    }
    println!("{line}");
    if args.all {
        if result.trees.is_empty() {
            for profile in &result.profiles {
                let forest = split_forest(profile.h, &profile.ks).map_err(|e| e.to_string())?;
                println!("{}", encode_rooted(&forest));
            }
        } else {
            for tree in &result.trees {
                println!("{tree}");
            }
        }
    }
    if let Some(path) = &args.report {
        write_file(path, &midparts::formats::optimal_to_json(&result))?;
    }
    Ok(())
}

fn cmd_enumerate(args: EnumerateArgs, limits: EnumLimits) -> Result<(), String> {
    let constraints = TreeFamilyConstraints {
        max_degree: args.max_degree,
        max_diameter: args.max_diameter,
        max_height: args.max_height,
    };
    let eerr = |e: midparts::enumeration::EnumError| e.to_string();
    if args.count_only {
        let count = midparts::enumeration::count_trees(args.n, constraints, args.rooted, limits)
            .map_err(eerr)?;
        println!("{count}");
        return Ok(());
    }
    let mut blocks: Vec<String> = Vec::new();
    if args.rooted {
        for (i, rt) in rooted_trees(args.n, constraints, limits).map_err(eerr)?.enumerate() {
            blocks.push(write_edge_list(rt.tree(), Some(rt.root()), &[format!("tree {i}")]));
        }
    } else {
        for (i, t) in free_trees(args.n, constraints, limits).map_err(eerr)?.enumerate() {
            blocks.push(write_edge_list(&t, None, &[format!("tree {i}")]));
        }
    }
    let text = blocks.join("\n");
    match args.out {
        Some(path) => write_file(&path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
