//! Command-line surface for the classification engine: run the full
//! classification, drill into single cases, evaluate representation
//! expressions, verify the curvature identity, dump the catalog.

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use cohomog7::algebra::{CompactAlgebra, SimpleType};
use cohomog7::catalog;
use cohomog7::classify::cases::{evaluate_with_variant, TorusVariant};
use cohomog7::classify::report::{step_line, GoldenTable};
use cohomog7::classify::{enumerate_cases, CaseKey};
use cohomog7::concavity::{ConcavityError, Profile};
use cohomog7::expr::{self, EvalOutput};
use cohomog7::obstructions::transitive_sphere_table;
use std::path::PathBuf;
use std::process::ExitCode;

const GOLDEN: &str = include_str!("../data/golden_table1.json");

const EXIT_INCOMPLETE: u8 = 2;
const EXIT_GOLDEN_MISMATCH: u8 = 3;
const EXIT_UNKNOWN_NAME: u8 = 4;
const EXIT_PARSE: u8 = 5;
const EXIT_NONPOSITIVE: u8 = 6;

#[derive(Parser)]
#[command(
    name = "cohomog7",
    version,
    about = "Classification of compact positively curved cohomogeneity-one 7-manifolds"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Override the built-in golden candidate table (classify)
    #[arg(long, global = true)]
    golden: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Markdown,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full classification and print the report
    Classify,
    /// Evaluate a single case (g, K°)
    Case {
        /// Acting algebra, e.g. "b2" or "t1+2a1"
        #[arg(long)]
        g: String,
        /// Principal isotropy: an algebra ("t1+a1") or a catalog name
        #[arg(long)]
        k: String,
        /// Expected corank (optional consistency check)
        #[arg(long)]
        d: Option<u32>,
        /// Sub-case selector for g = a2, k = t2: h-eq-hprime | h-ne-hprime
        #[arg(long)]
        variant: Option<String>,
    },
    /// Evaluate a representation expression, e.g. "sym2(V0+V2)*V2:inv"
    Rep { expr: String },
    /// Verify the curvature identity on a profile
    VerifyConcavity {
        /// Built-in name (cos, cosh, exp, sin, `sinplus:<c>`, `const:<c>`,
        /// `poly:<c0,c1,...>`) or a path to a two-column sample file
        #[arg(long)]
        profile: String,
        #[arg(long, default_value_t = 1e-4)]
        step: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Domain override "a:b" for built-ins
        #[arg(long)]
        domain: Option<String>,
    },
    /// Dump the subalgebra catalog
    Catalog,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err((code, err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}

type CmdResult = Result<ExitCode, (u8, anyhow::Error)>;

fn run(cli: Cli) -> CmdResult {
    match cli.cmd {
        Cmd::Classify => classify(cli.format, cli.golden.as_deref()),
        Cmd::Case { g, k, d, variant } => case(cli.format, &g, &k, d, variant.as_deref()),
        Cmd::Rep { expr } => rep(cli.format, &expr),
        Cmd::VerifyConcavity {
            profile,
            step,
            tol,
            domain,
        } => verify_concavity(cli.format, &profile, step, tol, domain.as_deref()),
        Cmd::Catalog => catalog_dump(cli.format),
    }
}

fn classify(format: Format, golden_path: Option<&std::path::Path>) -> CmdResult {
    let report =
        cohomog7::run_classification().map_err(|e| (EXIT_INCOMPLETE, anyhow::Error::new(e)))?;
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Markdown => print!("{}", report.to_markdown()),
        Format::Json => print!("{}", report.to_json()),
    }
    let golden_raw = match golden_path {
        None => GOLDEN.to_string(),
        Some(p) => std::fs::read_to_string(p)
            .with_context(|| format!("reading golden table {}", p.display()))
            .map_err(|e| (EXIT_GOLDEN_MISMATCH, e))?,
    };
    let golden: GoldenTable = serde_json::from_str(&golden_raw)
        .context("parsing golden table")
        .map_err(|e| (EXIT_GOLDEN_MISMATCH, e))?;
    if !report.matches_golden(&golden) {
        return Err((
            EXIT_GOLDEN_MISMATCH,
            anyhow::anyhow!("candidate table deviates from the golden table"),
        ));
    }
    Ok(ExitCode::SUCCESS)
}

fn resolve_case(g: &str, k: &str, d: Option<u32>) -> Result<CaseKey, anyhow::Error> {
    let g_alg = CompactAlgebra::parse(g).map_err(|e| anyhow::anyhow!("{e}"))?;
    let k_alg = CompactAlgebra::parse(k).ok();
    let enumeration = enumerate_cases(7).expect("dimension 7 enumerates");
    for group in enumeration.groups {
        for key in group.keys {
            if key.g != g_alg {
                continue;
            }
            let k_matches =
                key.k.name == k || k_alg.as_ref().map(|a| *a == key.k.sub).unwrap_or(false);
            if !k_matches {
                continue;
            }
            if let Some(want) = d {
                if want != key.d {
                    anyhow::bail!("case ({g}, {k}) has corank {}, not {want}", key.d);
                }
            }
            return Ok(key);
        }
    }
    anyhow::bail!("no enumerated case matches g = {g}, k = {k}")
}

fn case(format: Format, g: &str, k: &str, d: Option<u32>, variant: Option<&str>) -> CmdResult {
    let key = resolve_case(g, k, d).map_err(|e| (EXIT_UNKNOWN_NAME, e))?;
    let variant = match variant {
        None => None,
        Some("h-eq-hprime") => Some(TorusVariant::EqualSingular),
        Some("h-ne-hprime") => Some(TorusVariant::DistinctSingular),
        Some(other) => {
            return Err((
                EXIT_UNKNOWN_NAME,
                anyhow::anyhow!("unknown variant {other:?}"),
            ));
        }
    };
    if variant.is_some() && !(key.g.render() == "a2" && key.k.name == "t2_in_a2") {
        return Err((
            EXIT_UNKNOWN_NAME,
            anyhow::anyhow!("variants exist only for the maximal-torus case g = a2, k = t2"),
        ));
    }
    let report = evaluate_with_variant(&key, variant)
        .map_err(|e| (EXIT_INCOMPLETE, anyhow::Error::new(e)))?;
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("case report serializes");
            s.push('\n');
            print!("{s}");
        }
        Format::Markdown => {
            println!(
                "### G = {} ({}), K° = {}\n",
                report.g_display, report.g_compact, report.k_algebra
            );
            println!("Verdict: **{:?}**\n", report.verdict.kind);
            for r in &report.verdict.reasons {
                println!("- {} — {}", r.filter, r.citation);
            }
            println!("\nTrace:\n");
            for s in &report.trace {
                println!("- {}", step_line(s));
            }
        }
        Format::Text => {
            println!(
                "G = {} ({}), K° = {}",
                report.g_display, report.g_compact, report.k_algebra
            );
            println!("verdict: {:?}", report.verdict.kind);
            for r in &report.verdict.reasons {
                println!("  reason: {} [{}]", r.filter, r.citation);
            }
            if !report.candidates.is_empty() {
                println!("singular candidates:");
                for c in &report.candidates {
                    println!(
                        "  {} ({}), S^{}{}",
                        c.name,
                        c.iso,
                        c.normal_sphere_dim,
                        if c.positions > 1 {
                            format!(", {} positions", c.positions)
                        } else {
                            String::new()
                        }
                    );
                }
            }
            println!("trace:");
            for s in &report.trace {
                println!("  {}", step_line(s));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn rep(format: Format, input: &str) -> CmdResult {
    let output = expr::eval_query(input).map_err(|e| (EXIT_PARSE, anyhow::Error::new(e)))?;
    let note = match &output {
        EvalOutput::Count(n) => cohomog7::classify::discrepancy_note(input, *n),
        _ => None,
    };
    match format {
        Format::Json => {
            let mut value = match &output {
                EvalOutput::Rep(v) => serde_json::json!({
                    "expr": input,
                    "result": v.render(),
                    "dim": v.dim(),
                }),
                EvalOutput::Count(n) => serde_json::json!({ "expr": input, "count": n }),
                EvalOutput::Dim(d) => serde_json::json!({ "expr": input, "dim": d }),
                EvalOutput::Fs(t) => serde_json::json!({ "expr": input, "type": t.to_string() }),
            };
            if let Some(n) = &note {
                value["note"] = serde_json::json!(n);
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("json value serializes")
            );
        }
        _ => {
            match &output {
                EvalOutput::Rep(v) => println!("{}", v.render()),
                EvalOutput::Count(n) => println!("{n}"),
                EvalOutput::Dim(d) => println!("{d}"),
                EvalOutput::Fs(t) => println!("{t}"),
            }
            if let Some(n) = &note {
                println!("{n}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_profile(arg: &str, domain: Option<&str>) -> Result<Profile, anyhow::Error> {
    let path = std::path::Path::new(arg);
    let mut profile = if path.exists() {
        let raw = std::fs::read_to_string(path)?;
        let mut rows = Vec::new();
        for (i, line) in raw.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut cols = line.split_whitespace();
            let t: f64 = cols
                .next()
                .ok_or_else(|| anyhow::anyhow!("line {}: missing t column", i + 1))?
                .parse()?;
            let f: f64 = cols
                .next()
                .ok_or_else(|| anyhow::anyhow!("line {}: missing f column", i + 1))?
                .parse()?;
            rows.push((t, f));
        }
        Profile::from_samples(&rows).map_err(anyhow::Error::new)?
    } else {
        Profile::parse(arg).map_err(anyhow::Error::new)?
    };
    if let Some(d) = domain {
        let (a, b) = d
            .split_once([':', ','])
            .ok_or_else(|| anyhow::anyhow!("domain must look like a:b"))?;
        profile = profile.with_domain(a.trim().parse()?, b.trim().parse()?);
    }
    Ok(profile)
}

fn verify_concavity(
    format: Format,
    profile_arg: &str,
    step: f64,
    tol: f64,
    domain: Option<&str>,
) -> CmdResult {
    let profile = load_profile(profile_arg, domain).map_err(|e| (EXIT_PARSE, e))?;
    let step = profile.native_step().unwrap_or(step);
    let report = match cohomog7::concavity::verify_profile(&profile, step, tol) {
        Ok(r) => r,
        Err(e @ ConcavityError::NonPositiveProfile { .. }) => {
            return Err((EXIT_NONPOSITIVE, anyhow::Error::new(e)));
        }
        Err(e) => return Err((EXIT_PARSE, anyhow::Error::new(e))),
    };
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("profile report serializes");
            s.push('\n');
            print!("{s}");
        }
        _ => {
            println!("profile: {}", report.profile);
            println!(
                "max identity residual: {:.3e} (tolerance {:.3e})",
                report.max_residual, report.tol
            );
            println!("curvature sign: {:?}", report.curvature_sign);
            println!("concave everywhere: {}", report.concave_everywhere);
            if !report.applicable {
                println!("warning: curvature is not positive throughout; the concavity conclusion does not apply");
            }
            println!(
                "identity: {}",
                if report.identity_pass { "pass" } else { "FAIL" }
            );
        }
    }
    if report.identity_pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Err((
            1,
            anyhow::anyhow!("identity residual exceeds the tolerance"),
        ))
    }
}

fn catalog_dump(format: Format) -> CmdResult {
    let embeddings = catalog::standard_embeddings();
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "version": 1,
                "simple_types": SimpleType::ALL.iter().map(|t| serde_json::json!({
                    "tag": t.tag(), "rank": t.rank(), "dim": t.dim(),
                })).collect::<Vec<_>>(),
                "maximal_rank_subalgebras": SimpleType::ALL.iter().map(|t| {
                    (t.tag().to_string(), catalog::maximal_rank_subalgebras(*t)
                        .into_iter()
                        .map(|(name, a)| serde_json::json!({"name": name, "algebra": a.render()}))
                        .collect::<Vec<_>>())
                }).collect::<std::collections::BTreeMap<_, _>>(),
                "transitive_sphere_table": transitive_sphere_table(),
                "embeddings": embeddings,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("catalog serializes")
            );
        }
        _ => {
            println!("maximal-rank subalgebras:");
            for t in SimpleType::ALL {
                let entries: Vec<String> = catalog::maximal_rank_subalgebras(t)
                    .into_iter()
                    .map(|(name, a)| format!("{name} = {}", a.render_compact()))
                    .collect();
                println!(
                    "  {}: {}",
                    t.tag(),
                    if entries.is_empty() {
                        "-".into()
                    } else {
                        entries.join(", ")
                    }
                );
            }
            println!("\ntransitive sphere pairs:");
            for row in transitive_sphere_table() {
                println!("  ({}, {}) on S^{}", row.host, row.isotropy, row.sphere_dim);
            }
            println!("\nembeddings:");
            for e in embeddings {
                println!(
                    "  {:<32} {} < {}{}",
                    e.name,
                    e.sub.render_compact(),
                    e.host.render_compact(),
                    if e.class_size > 1 {
                        format!("  ({} positions)", e.class_size)
                    } else {
                        String::new()
                    }
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
