//! Command-line front end: enumeration listings, count reports, the
//! all-subsets census table, antichain histograms, and a verification
//! suite that checks every closed form against the brute-force oracles.
//!
//! Exit codes: 0 on success (all requested verifications passing), 1 on
//! a verification mismatch, 2 on usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use parideals::affweyl::{element_from_inversions, inversions, l_phi, phi_w, w_phi};
use parideals::alcove::{in_2a, n_product, weighted_abelian_sum};
use parideals::census::{
    census_for, count_abelian_formula, count_abelian_via_diagrams, count_ideals_formula,
    full_census, CountReport,
};
use parideals::diagrams::{nw_count, shape_of};
use parideals::ideals::{
    enumerate_ideals, is_abelian, is_valid_ideal, minimal_roots, Ideal, Parabolic,
};
use parideals::rootsys::{Family, Root, RootSystem, RootSystemType};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "parideals",
    about = "Enumerate ad-nilpotent and abelian ideals of parabolic subalgebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the ideals of p_I by their minimal roots
    Enumerate(Selection),
    /// Print the count report for one parabolic
    Count(Selection),
    /// Run the invariant suite for every I of the given type and rank
    Verify(TypeRank),
    /// Print the all-subsets census table
    Table(TableArgs),
    /// Print the antichain-size histogram of F_I
    Antichains(Selection),
}

#[derive(Args)]
struct TypeRank {
    /// Root system family: A, B, C, D, E, F or G
    #[arg(long = "type")]
    rtype: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Args)]
struct Selection {
    #[command(flatten)]
    type_rank: TypeRank,
    /// Comma-separated simple-root indices; empty for the Borel
    #[arg(long, default_value = "")]
    parabolic: String,
    /// Restrict to abelian ideals
    #[arg(long)]
    abelian_only: bool,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Write to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    type_rank: TypeRank,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn build_system(tr: &TypeRank) -> Result<RootSystem, String> {
    let family = Family::parse(&tr.rtype).ok_or_else(|| format!("unknown type {:?}", tr.rtype))?;
    let rtype = RootSystemType::new(family, tr.rank).map_err(|e| e.to_string())?;
    RootSystem::build(rtype).map_err(|e| e.to_string())
}

fn parse_parabolic(spec: &str, rank: usize) -> Result<Parabolic, String> {
    let mut indices = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let i: usize = part
            .parse()
            .map_err(|_| format!("bad parabolic index {part:?}"))?;
        if i < 1 || i > rank {
            return Err(format!("parabolic index {i} outside 1..={rank}"));
        }
        indices.push(i);
    }
    Ok(Parabolic::from_indices(&indices))
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("write {path:?}: {e}")),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn roots_string(roots: &[&Root]) -> String {
    let parts: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
    parts.join(" ")
}

fn enumerate_cmd(sel: &Selection) -> Result<String, String> {
    let rs = build_system(&sel.type_rank)?;
    let i_set = parse_parabolic(&sel.parabolic, rs.rank())?;
    let ideals: Vec<Ideal> = enumerate_ideals(&rs, &i_set)
        .into_iter()
        .filter(|id| !sel.abelian_only || is_abelian(&rs, id))
        .collect();
    let mut out = String::new();
    match sel.format {
        Format::Pretty => {
            writeln!(out, "# {} I={} ideals={}", rs.rtype(), i_set, ideals.len()).unwrap();
            for (k, id) in ideals.iter().enumerate() {
                let min = minimal_roots(&rs, &i_set, id);
                let min_roots: Vec<&Root> = min.iter().map(|i| rs.positive_root(i)).collect();
                writeln!(
                    out,
                    "{k}\tsize={}\tabelian={}\tmin={{{}}}",
                    id.size(),
                    if is_abelian(&rs, id) { "yes" } else { "no" },
                    roots_string(&min_roots),
                )
                .unwrap();
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = ideals
                .iter()
                .map(|id| {
                    let min = minimal_roots(&rs, &i_set, id);
                    serde_json::json!({
                        "size": id.size(),
                        "abelian": is_abelian(&rs, id),
                        "minimal_roots": min
                            .iter()
                            .map(|i| rs.positive_root(i).to_string())
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "type": rs.rtype().family.to_string(),
                "rank": rs.rank(),
                "I": i_set.indices(),
                "ideals": items,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).unwrap();
        }
        Format::Csv => {
            writeln!(out, "index,size,abelian,minimal_roots").unwrap();
            for (k, id) in ideals.iter().enumerate() {
                let min = minimal_roots(&rs, &i_set, id);
                let min_roots: Vec<&Root> = min.iter().map(|i| rs.positive_root(i)).collect();
                writeln!(
                    out,
                    "{k},{},{},{}",
                    id.size(),
                    is_abelian(&rs, id),
                    roots_string(&min_roots),
                )
                .unwrap();
            }
        }
    }
    Ok(out)
}

fn count_cmd(sel: &Selection) -> Result<String, String> {
    let rs = build_system(&sel.type_rank)?;
    let i_set = parse_parabolic(&sel.parabolic, rs.rank())?;
    let report = census_for(&rs, &i_set);
    let mut out = String::new();
    match sel.format {
        Format::Pretty => {
            if sel.abelian_only {
                writeln!(out, "{}", report.count_abelian).unwrap();
            } else {
                writeln!(
                    out,
                    "count_all={} count_abelian={}",
                    report.count_all, report.count_abelian
                )
                .unwrap();
            }
        }
        Format::Json => writeln!(out, "{}", report.to_json()).unwrap(),
        Format::Csv => {
            writeln!(out, "{}", CountReport::csv_header()).unwrap();
            writeln!(out, "{}", report.to_csv_row()).unwrap();
        }
    }
    Ok(out)
}

/// Dynkin row in the census tables: • for I-members, ∘ otherwise.
fn dynkin_row(rank: usize, i_set: &Parabolic) -> String {
    (1..=rank)
        .map(|i| if i_set.contains(i) { '•' } else { '∘' })
        .collect()
}

fn table_cmd(args: &TableArgs) -> Result<String, String> {
    let rs = build_system(&args.type_rank)?;
    let reports = full_census(&rs);
    let mut out = String::new();
    match args.format {
        Format::Pretty => {
            writeln!(out, "# {}  all parabolics", rs.rtype()).unwrap();
            writeln!(out, "{:<12} {:>10} {:>10}", "I", "#F_I", "#Ab_I").unwrap();
            for report in &reports {
                let i_set = Parabolic::from_indices(&report.parabolic);
                writeln!(
                    out,
                    "{:<12} {:>10} {:>10}",
                    dynkin_row(rs.rank(), &i_set),
                    report.count_all,
                    report.count_abelian
                )
                .unwrap();
            }
        }
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&reports).unwrap()).unwrap();
        }
        Format::Csv => {
            writeln!(out, "{}", CountReport::csv_header()).unwrap();
            for report in &reports {
                writeln!(out, "{}", report.to_csv_row()).unwrap();
            }
        }
    }
    Ok(out)
}

fn antichains_cmd(sel: &Selection) -> Result<String, String> {
    let rs = build_system(&sel.type_rank)?;
    let i_set = parse_parabolic(&sel.parabolic, rs.rank())?;
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for id in enumerate_ideals(&rs, &i_set) {
        if sel.abelian_only && !is_abelian(&rs, &id) {
            continue;
        }
        *histogram
            .entry(minimal_roots(&rs, &i_set, &id).len())
            .or_insert(0) += 1;
    }
    let bound = rs.rank() - i_set.cardinality();
    let mut out = String::new();
    match sel.format {
        Format::Pretty => {
            writeln!(out, "# {} I={} bound={}", rs.rtype(), i_set, bound).unwrap();
            for (size, count) in &histogram {
                writeln!(out, "{size}\t{count}").unwrap();
            }
        }
        Format::Json => {
            let doc = serde_json::json!({
                "type": rs.rtype().family.to_string(),
                "rank": rs.rank(),
                "I": i_set.indices(),
                "bound": bound,
                "histogram": histogram,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).unwrap();
        }
        Format::Csv => {
            writeln!(out, "antichain_size,count").unwrap();
            for (size, count) in &histogram {
                writeln!(out, "{size},{count}").unwrap();
            }
        }
    }
    Ok(out)
}

/// The per-type invariant suite: closed forms against the oracle for
/// every I, ideal validity, the antichain bound, and — at small rank —
/// the affine Weyl roundtrip, the 2A criterion and the weighted identity.
fn verify_cmd(tr: &TypeRank) -> Result<(String, bool), String> {
    let rs = build_system(tr)?;
    let l = rs.rank();
    let classical = rs.rtype().family.is_classical();
    let mut out = String::new();
    let mut ok = true;
    let mut check = |out: &mut String, label: &str, pass: bool| {
        writeln!(out, "{} {label}", if pass { "ok  " } else { "FAIL" }).unwrap();
        ok &= pass;
    };

    let subsets = Parabolic::all_subsets(l);
    let mut formula_ok = true;
    for i_set in &subsets {
        let ideals = enumerate_ideals(&rs, i_set);
        let valid = ideals.iter().all(|id| is_valid_ideal(&rs, i_set, id));
        check(&mut out, &format!("ideals valid for I={i_set}"), valid);

        let bound = l - i_set.cardinality();
        let bound_ok = ideals
            .iter()
            .all(|id| minimal_roots(&rs, i_set, id).len() <= bound);
        check(&mut out, &format!("antichain bound for I={i_set}"), bound_ok);

        let abelian = ideals.iter().filter(|id| is_abelian(&rs, id)).count();
        if classical {
            let all_match = count_ideals_formula(&rs, i_set)
                .map(|v| v == num::BigUint::from(ideals.len()))
                .unwrap_or(false);
            let ab_match = count_abelian_formula(&rs, i_set)
                .map(|v| v == num::BigUint::from(abelian))
                .unwrap_or(false);
            let diagram_match = shape_of(&rs, i_set)
                .and_then(|p| p.build())
                .and_then(|shape| nw_count(&shape))
                .map(|v| v == num::BigUint::from(ideals.len()))
                .unwrap_or(false);
            formula_ok &= all_match && ab_match && diagram_match;
            check(
                &mut out,
                &format!("formula==oracle for I={i_set}"),
                all_match && ab_match,
            );
            check(
                &mut out,
                &format!("diagram count==oracle for I={i_set}"),
                diagram_match,
            );
            if matches!(rs.rtype().family, Family::B | Family::D) {
                let via = count_abelian_via_diagrams(&rs, i_set)
                    .map(|v| v == num::BigUint::from(abelian))
                    .unwrap_or(false);
                check(
                    &mut out,
                    &format!("abelian diagram route for I={i_set}"),
                    via,
                );
            }
        }

        if l <= 4 {
            let weighted = weighted_abelian_sum(&rs, i_set);
            let expect = n_product(&rs, &i_set.indices()) * (1i64 << bound);
            check(
                &mut out,
                &format!("weighted abelian identity for I={i_set}"),
                weighted == expect,
            );
        }
    }

    if l <= 4 {
        let mut roundtrip = true;
        let mut alcove = true;
        for ideal in enumerate_ideals(&rs, &Parabolic::empty()) {
            let lset = l_phi(&rs, &ideal);
            let w = element_from_inversions(&rs, &lset).map_err(|e| e.to_string())?;
            roundtrip &= inversions(&rs, &w) == lset;
            let mut phi: Vec<Root> = ideal.roots(&rs).into_iter().cloned().collect();
            phi.sort();
            roundtrip &= phi_w(&rs, &w) == phi;
            alcove &= in_2a(&rs, &w_phi(&rs, &ideal)) == is_abelian(&rs, &ideal);
        }
        check(&mut out, "inversion-set roundtrip over F_0", roundtrip);
        check(&mut out, "2A criterion matches abelian oracle", alcove);
    }

    if classical {
        if formula_ok {
            writeln!(out, "formula==oracle for all {} subsets", subsets.len()).unwrap();
        } else {
            writeln!(out, "formula/oracle MISMATCH detected").unwrap();
        }
    } else {
        writeln!(
            out,
            "brute-force census verified for all {} subsets",
            subsets.len()
        )
        .unwrap();
    }
    Ok((out, ok))
}

fn run() -> Result<ExitCode, String> {
    if let Ok(threads) = std::env::var("PARIDEALS_THREADS") {
        let n: usize = threads
            .parse()
            .map_err(|_| format!("PARIDEALS_THREADS={threads:?} is not a number"))?;
        // ignore failure if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let cli = Cli::parse();
    match &cli.command {
        Command::Enumerate(sel) => {
            let text = enumerate_cmd(sel)?;
            emit(&sel.output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Count(sel) => {
            let text = count_cmd(sel)?;
            emit(&sel.output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table(args) => {
            let text = table_cmd(args)?;
            emit(&args.output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Antichains(sel) => {
            let text = antichains_cmd(sel)?;
            emit(&sel.output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(tr) => {
            let (text, ok) = verify_cmd(tr)?;
            emit(&None, &text)?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => usage_error(&msg),
    }
}
