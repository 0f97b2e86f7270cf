//! Command-line interface: catalog queries, coset enumeration, principal
//! isotropy subalgebras, orbit-type tables, Satake recipe runs, and the
//! golden verification suite.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use srep_core::liealg::Style;
use srep_core::pairs::{self, Params, SymmetricPairSpec};
use srep_core::rootsys::DEFAULT_GROUP_CAP;
use srep_core::{cosets, orbits, satake, verify, Error};

#[derive(Parser)]
#[command(
    name = "srep",
    about = "Local orbit types of isotropy representations of classical symmetric spaces",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Markdown,
    Latex,
}

#[derive(clap::Args, Clone)]
struct ParamArgs {
    /// Parameter n
    #[arg(long)]
    n: Option<i64>,
    /// Parameter p
    #[arg(long)]
    p: Option<i64>,
    /// Parameter m (four-parameter families)
    #[arg(long)]
    m: Option<i64>,
    /// Parameter i (four-parameter families)
    #[arg(long)]
    i: Option<i64>,
    /// Parameter j (four-parameter families)
    #[arg(long)]
    j: Option<i64>,
}

impl ParamArgs {
    fn to_params(&self) -> Params {
        let mut entries: Vec<(&'static str, i64)> = Vec::new();
        if let Some(n) = self.n {
            entries.push(("n", n));
        }
        if let Some(p) = self.p {
            entries.push(("p", p));
        }
        if let Some(m) = self.m {
            entries.push(("m", m));
        }
        if let Some(i) = self.i {
            entries.push(("i", i));
        }
        if let Some(j) = self.j {
            entries.push(("j", j));
        }
        Params::new(&entries)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List catalog families or resolve one pair
    Pairs {
        /// Family slug (omit to list the whole catalog)
        selector: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Coset representatives for W(Δ)/W(Δᵃ)
    Cosets {
        /// Pair slug with parameters, or a root-system selector like
        /// C3-D3, A4-A1xA2, B3-D1xB2
        selector: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Verify the system against the brute-force oracle
        #[arg(long)]
        oracle: bool,
        /// Group-size cap for brute-force checks
        #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The index of W(Δ)/W(Δᵃ) for a pair
    Index {
        selector: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// The hyperbolic principal isotropy subalgebra of a pair
    Hpis {
        selector: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Local orbit types (hyperbolic, or elliptic via the c-dual)
    Orbits {
        selector: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Enumerate elliptic orbit types through the c-dual pair
        #[arg(long)]
        elliptic: bool,
        /// Merge values up to isomorphism-level equality
        #[arg(long)]
        iso: bool,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Satake diagram triple and recipe trace for a pair
    Satake {
        selector: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the golden verification suite
    Verify {
        /// Rank bound for the brute-force index sweep
        #[arg(long, default_value_t = 6)]
        max_rank: u32,
        /// Group-size cap (raise with care)
        #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
        cap: usize,
    },
}

fn main() -> ExitCode {
    // Die quietly when the consumer of a pipe goes away (e.g. `srep pairs | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            let (kind, code) = match &e {
                Error::UnknownPair(_)
                | Error::ConstraintViolated { .. }
                | Error::Parse(_)
                | Error::UnsupportedEmbedding(_) => ("usage", ExitCode::from(2)),
                _ => ("internal", ExitCode::from(3)),
            };
            let payload = json!({"error": {"kind": kind, "message": e.to_string()}});
            eprintln!("{payload}");
            code
        }
    }
}

/// Resolve a pair selector: an exact catalog slug with `--n`-style flags, or
/// a digit-embedded instance like `sl4R-so22`.
fn resolve_pair(selector: &str, params: &ParamArgs) -> Result<SymmetricPairSpec, Error> {
    if pairs::family(selector).is_ok() {
        return pairs::lookup_pair(selector, &params.to_params());
    }
    if let Some(spec) = digit_selector(selector)? {
        return Ok(spec);
    }
    Err(Error::UnknownPair(format!(
        "{selector} (run `srep pairs` for the catalog)"
    )))
}

/// Digit-embedded instance selectors for the common single-digit cases.
fn digit_selector(selector: &str) -> Result<Option<SymmetricPairSpec>, Error> {
    let parse = |slug: &str, entries: &[(&'static str, i64)]| {
        pairs::lookup_pair(slug, &Params::new(entries)).map(Some)
    };
    let digits = |s: &str| -> Option<Vec<i64>> {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as i64))
            .collect()
    };
    if let Some(rest) = selector.strip_prefix("sl") {
        // sl4R-so22 and friends
        if let Some((g, h)) = rest.split_once('-') {
            if let Some(gn) = g.strip_suffix('R').and_then(digits) {
                if gn.len() == 1 {
                    let n = gn[0];
                    if let Some(hpq) = h.strip_prefix("so").and_then(digits) {
                        if hpq.len() == 2 && hpq[0] + hpq[1] == n {
                            return parse("slR-so", &[("n", n), ("p", hpq[0])]);
                        }
                    }
                    if let Some(hn) = h
                        .strip_prefix("sp")
                        .and_then(|t| t.strip_suffix('R'))
                        .and_then(digits)
                    {
                        if hn.len() == 1 && 2 * hn[0] == n {
                            return parse("slR-spR", &[("n", hn[0])]);
                        }
                    }
                }
            }
            if let Some(gn) = g.strip_suffix('C').and_then(digits) {
                if gn.len() == 1 {
                    let n = gn[0];
                    if let Some(hn) = h
                        .strip_prefix("sl")
                        .and_then(|t| t.strip_suffix('R'))
                        .and_then(digits)
                    {
                        if hn.len() == 1 && hn[0] == n {
                            return parse("slC-slR", &[("n", n)]);
                        }
                    }
                    if let Some(hpq) = h.strip_prefix("su").and_then(digits) {
                        if hpq.len() == 2 && hpq[0] + hpq[1] == n {
                            return parse("slC-su", &[("n", n), ("p", hpq[0])]);
                        }
                    }
                }
            }
        }
    }
    if let Some(rest) = selector.strip_prefix("sp") {
        if let Some((g, h)) = rest.split_once('-') {
            if let (Some(gn), Some(hn)) = (
                g.strip_suffix('C').and_then(digits),
                h.strip_prefix("sp")
                    .and_then(|t| t.strip_suffix('R'))
                    .and_then(digits),
            ) {
                if gn.len() == 1 && hn.len() == 1 && gn[0] == hn[0] {
                    return parse("spC-spR", &[("n", gn[0])]);
                }
            }
        }
    }
    if let Some(rest) = selector.strip_prefix("su") {
        if let Some((g, h)) = rest.split_once('-') {
            if let (Some(gpq), Some(hpq)) = (digits(g), h.strip_prefix("so").and_then(digits)) {
                if gpq.len() == 2 && hpq.len() == 2 && gpq == hpq {
                    return parse(
                        "su-so",
                        &[("n", gpq[0] + gpq[1]), ("p", gpq[0].min(gpq[1]))],
                    );
                }
            }
        }
    }
    Ok(None)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Pairs {
            selector,
            params,
            format,
        } => {
            match selector {
                None => match format {
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string_pretty(&pairs::catalog_json()).unwrap()
                    ),
                    _ => {
                        println!(
                            "{:<18} {:<14} {:<32} {:<24} {}",
                            "slug", "params", "pair", "Δ ⊇ Δᵃ", "index"
                        );
                        for f in pairs::catalog() {
                            println!(
                                "{:<18} {:<14} {:<32} {:<24} {}",
                                f.slug,
                                f.param_names.join(","),
                                format!("({}, {})", f.g_sym, f.h_sym),
                                format!("{} ⊇ {}", f.delta_sym, f.delta_a_sym),
                                f.index_sym
                            );
                        }
                    }
                },
                Some(sel) => {
                    let spec = resolve_pair(&sel, &params)?;
                    match format {
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&pairs::instance_json(&spec)).unwrap()
                        ),
                        _ => {
                            println!("pair      {}", spec.display());
                            println!(
                                "Δ ⊇ Δᵃ    {}{} ⊇ {}",
                                spec.resolved.delta.family,
                                spec.resolved.delta.rank,
                                spec.resolved.sub.label
                            );
                            println!(
                                "index     {} = {}",
                                spec.resolved.index_formula, spec.resolved.index
                            );
                            println!("hpis      {}", spec.resolved.hpis);
                            if !spec.resolved.case_remark.is_empty() {
                                println!("case      {}", spec.resolved.case_remark);
                            }
                            println!(
                                "h_Θ rules {}",
                                if spec.resolved.rules.is_some() {
                                    "encoded"
                                } else {
                                    "structural-only"
                                }
                            );
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Cosets {
            selector,
            params,
            oracle,
            cap,
            format,
        } => {
            // Root-system selectors take priority; fall back to pair slugs.
            let sub = match cosets::parse_pair_selector(&selector) {
                Ok(sub) => sub,
                Err(_) => resolve_pair(&selector, &params)?.resolved.sub,
            };
            if cap > DEFAULT_GROUP_CAP {
                eprintln!("warning: raising the group cap above {DEFAULT_GROUP_CAP} may be slow");
            }
            let cs = cosets::coset_reps(&sub)?;
            let report = if oracle {
                Some(cosets::verify_complete_system(&cs, cap)?)
            } else {
                None
            };
            match format {
                Format::Json => {
                    let payload = json!({
                        "subsystem": sub.label,
                        "index": cosets::coset_index(&sub).to_string(),
                        "index_formula": cosets::coset_index_formula(&sub),
                        "representatives": cs.reps.iter().map(|w| w.describe()).collect::<Vec<_>>(),
                        "oracle": report.as_ref().map(|r| json!({
                            "passed": r.passed(),
                            "count": r.count,
                            "ambient_order": r.ambient_order,
                            "subgroup_order": r.subgroup_order,
                        })),
                    });
                    println!("{}", serde_json::to_string_pretty(&payload).unwrap());
                }
                _ => {
                    println!("subsystem  {}", sub.label);
                    println!(
                        "index      {} = {}",
                        cosets::coset_index_formula(&sub),
                        cosets::coset_index(&sub)
                    );
                    for (i, w) in cs.reps.iter().enumerate() {
                        println!("  w{:<3} {}", i + 1, w.describe());
                    }
                    if let Some(r) = &report {
                        println!(
                            "oracle     {} (count {}, |W(Δ)| {}, |W(Δᵃ)| {})",
                            if r.passed() { "pass" } else { "FAIL" },
                            r.count,
                            r.ambient_order,
                            r.subgroup_order
                        );
                        if !r.passed() {
                            return Ok(ExitCode::from(1));
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Index { selector, params } => {
            let spec = resolve_pair(&selector, &params)?;
            println!("{}", spec.resolved.index);
            Ok(ExitCode::SUCCESS)
        }

        Command::Hpis {
            selector,
            params,
            format,
        } => {
            let spec = resolve_pair(&selector, &params)?;
            match format {
                Format::Json => println!("{}", spec.resolved.hpis.to_json()),
                Format::Latex => println!("{}", spec.resolved.hpis.render(Style::Latex)),
                _ => println!("{}", spec.resolved.hpis),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Orbits {
            selector,
            params,
            elliptic,
            iso,
            format,
        } => {
            let spec = resolve_pair(&selector, &params)?;
            let mode = if iso {
                orbits::MergeMode::Iso
            } else {
                orbits::MergeMode::Annotated
            };
            let set = if elliptic {
                let dual = pairs::c_dual(&spec)?;
                let mut set = orbits::local_orbit_types_with(&dual, mode)?;
                set.kind = orbits::OrbitKind::Elliptic;
                set.pair = format!(
                    "{} (elliptic, via c-dual {})",
                    spec.display(),
                    dual.display()
                );
                set
            } else {
                orbits::local_orbit_types_with(&spec, mode)?
            };
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&orbits::to_json(&set)).unwrap()
                ),
                Format::Latex => print!("{}", orbits::to_latex(&set)),
                _ => print!("{}", orbits::to_markdown(&set)),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Satake {
            selector,
            params,
            format,
        } => {
            let slug = if pairs::family(&selector).is_ok() {
                selector.clone()
            } else {
                resolve_pair(&selector, &params)?.family.slug.to_string()
            };
            let p = if pairs::family(&selector).is_ok() {
                params.to_params()
            } else {
                resolve_pair(&selector, &params)?.params.clone()
            };
            let triple = satake::triple_for(&slug, &p)?;
            let trace = satake::recipe_run(&triple)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&satake::trace_json(&trace)).unwrap()
                ),
                _ => {
                    print!("{}", satake::render_triple(&triple));
                    println!("---");
                    for f in &trace.factors {
                        println!(
                            "{}: nodes {:?} -> factor {}, h-part {}",
                            f.case, f.nodes, f.factor, f.h_part
                        );
                    }
                    println!(
                        "abelian: R^{} + so(2)^{}",
                        trace.abelian_r, trace.abelian_so2
                    );
                    println!("z_h = {}", trace.z_h);
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { max_rank, cap } => {
            if cap > DEFAULT_GROUP_CAP {
                eprintln!("warning: raising the group cap above {DEFAULT_GROUP_CAP} may be slow");
            }
            let items = verify::run_all(max_rank, cap);
            let mut failed = 0;
            for item in &items {
                let status = if item.passed { "ok  " } else { "FAIL" };
                println!("{status} {:<40} {}", item.name, item.detail);
                if !item.passed {
                    failed += 1;
                }
            }
            println!("---");
            println!("{} items, {} failed", items.len(), failed);
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
