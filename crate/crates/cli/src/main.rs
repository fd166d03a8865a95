//! Command line front end.  One verb per library operation; output is
//! canonical JSON (or CSV for the tabular commands), so repeated runs with
//! identical arguments and seed are byte-identical.  Usage problems exit
//! with status 2, failed computations or failed checks with status 1.

mod cache;

use cache::CharacterCache;
use clap::{Parser, Subcommand, ValueEnum};
use lierep::branching::{BranchingTable, Embedding};
use lierep::cartan::CartanSpec;
use lierep::character::FormalCharacter;
use lierep::cone::SupportCone;
use lierep::linalg::{rat_i, Rat};
use lierep::localization::{
    fixed_point_value, seeded_regular_point, sym_invariants, MomentCertificate,
};
use lierep::quasipoly::{default_degree_bound, fit, FitResult};
use lierep::roots::{RootSystem, Weight};
use lierep::verify::{standard_suites, verify_cone_vanishing, verify_face_reduction, FaceData, Report};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "lierep",
    version,
    about = "Exact branching, tensor, cone, and index computations for compact Lie groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Output format; csv is available for weights, tensor, branch, table,
    /// and stretch
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Never read or write the on-disk character cache
    #[arg(long, global = true)]
    no_cache: bool,

    /// Character cache root (default: $LIEREP_CACHE_DIR, then the per-user
    /// data directory)
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Simple and positive roots, Weyl vector, and Weyl group order
    Roots {
        #[arg(long = "type", value_name = "SPEC")]
        group: String,
    },
    /// Dimension of the irreducible with the given highest weight
    Dim {
        #[arg(long = "type", value_name = "SPEC")]
        group: String,
        #[arg(long, value_name = "COORDS")]
        weight: String,
    },
    /// Weight multiplicities of an irreducible character
    Weights {
        #[arg(long = "type", value_name = "SPEC")]
        group: String,
        #[arg(long, value_name = "COORDS")]
        weight: String,
    },
    /// Decompose a tensor product of two irreducibles
    Tensor {
        #[arg(long = "type", value_name = "SPEC")]
        group: String,
        #[arg(long, value_name = "COORDS")]
        lhs: String,
        #[arg(long, value_name = "COORDS")]
        rhs: String,
    },
    /// Decompose the restriction of one irreducible along an embedding
    Branch {
        #[arg(long, value_name = "EMB")]
        embedding: String,
        #[arg(long, value_name = "COORDS")]
        weight: String,
        /// Restrict the representation itself instead of its dual
        #[arg(long)]
        no_dual: bool,
    },
    /// All branching multiplicities for highest weights in a coordinate box
    Table {
        #[arg(long, value_name = "EMB")]
        embedding: String,
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        no_dual: bool,
    },
    /// Support cone and lattice of a branching table
    Cone {
        #[arg(long, value_name = "EMB")]
        embedding: String,
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        no_dual: bool,
    },
    /// Multiplicities along the ray k -> (k lhs, k rhs)
    Stretch {
        #[arg(long, value_name = "EMB")]
        embedding: String,
        /// Highest weight upstairs
        #[arg(long, value_name = "COORDS")]
        lhs: String,
        /// Highest weight downstairs
        #[arg(long, value_name = "COORDS")]
        rhs: String,
        #[arg(long, default_value_t = 12)]
        kmax: i64,
        #[arg(long)]
        no_dual: bool,
    },
    /// Fit a quasi-polynomial to a stretched ray and hold out the tail
    Fit {
        #[arg(long, value_name = "EMB")]
        embedding: String,
        #[arg(long, value_name = "COORDS")]
        lhs: String,
        #[arg(long, value_name = "COORDS")]
        rhs: String,
        /// Fit on samples k = 0..=kfit
        #[arg(long, default_value_t = 12)]
        kfit: i64,
        /// Check the fit exactly on k = kfit+1..=khold
        #[arg(long, value_name = "K")]
        khold: Option<i64>,
        /// Period bound for the search
        #[arg(long, default_value_t = 6)]
        period: usize,
        /// Degree bound for the search (default: half the generic reduced
        /// space dimension)
        #[arg(long, value_name = "D")]
        degree: Option<usize>,
        #[arg(long)]
        no_dual: bool,
    },
    /// Check the face reduction identity on every face point in a box
    FaceCheck {
        /// Builtin name (diagonal-cartan(SPEC), torus-facet-a2) or a path to
        /// a face JSON file
        #[arg(value_name = "FACE")]
        face: String,
        #[arg(long, default_value_t = 4)]
        bound: i64,
    },
    /// Graded invariant dimensions of a symmetric algebra with certificate
    SymInvariants {
        #[arg(long = "type", value_name = "SPEC")]
        group: String,
        /// Weight in the multiset; repeat for multiplicity
        #[arg(long = "weight", value_name = "COORDS", required = true)]
        weights: Vec<String>,
        #[arg(long, default_value_t = 8)]
        degree: usize,
    },
    /// Compare a character value with its fixed-point sum at a seeded point
    Localize {
        #[arg(long = "type", value_name = "SPEC")]
        group: String,
        #[arg(long, value_name = "COORDS")]
        weight: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run verification suites and print their reports
    Verify {
        /// all, cone-vanishing, stretch-fit, face-reduction, localization,
        /// sym-invariants, peter-weyl; default: all, or none when fixture
        /// files are given
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Box bound for face fixture files
        #[arg(long, value_name = "N")]
        bound: Option<i64>,
        /// Branching table or face data JSON files to check
        #[arg(value_name = "FIXTURE")]
        fixtures: Vec<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Compute(lierep::Error),
}

impl From<lierep::Error> for Failure {
    fn from(e: lierep::Error) -> Failure {
        Failure::Compute(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = CharacterCache::new(cli.no_cache, cli.cache_dir.clone());
    match run(&cli, &cache) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn parse_spec(s: &str) -> Result<CartanSpec, Failure> {
    s.parse().map_err(|e| usage(format!("bad group type {s:?}: {e}")))
}

fn root_system(s: &str) -> Result<Arc<RootSystem>, Failure> {
    Ok(RootSystem::new(parse_spec(s)?))
}

fn parse_weight(s: &str, rs: &Arc<RootSystem>) -> Result<Weight, Failure> {
    let coords: Result<Vec<i64>, _> = if s.trim().is_empty() {
        Ok(Vec::new())
    } else {
        s.split(',').map(|c| c.trim().parse::<i64>()).collect()
    };
    let w = Weight(coords.map_err(|_| usage(format!("bad weight {s:?}: expected comma-separated integers")))?);
    rs.check_weight(&w).map_err(|e| usage(e.to_string()))?;
    Ok(w)
}

fn parse_dominant(s: &str, rs: &Arc<RootSystem>) -> Result<Weight, Failure> {
    let w = parse_weight(s, rs)?;
    rs.check_dominant(&w).map_err(|e| usage(e.to_string()))?;
    Ok(w)
}

/// Builtin embedding names, or a path to an embedding JSON file.
fn parse_embedding(s: &str) -> Result<Embedding, Failure> {
    let norm = s.replace('_', "-");
    if let Some(inner) = norm.strip_prefix("diagonal(").and_then(|r| r.strip_suffix(')')) {
        return Ok(Embedding::diagonal(&parse_spec(inner)?)?);
    }
    if let Some(inner) = norm.strip_prefix("maximal-torus(").and_then(|r| r.strip_suffix(')')) {
        return Ok(Embedding::maximal_torus(&parse_spec(inner)?)?);
    }
    if norm == "levi(A2)" || norm == "levi-a2" {
        return Ok(Embedding::levi_a2()?);
    }
    let text = std::fs::read_to_string(s)
        .map_err(|e| usage(format!("{s:?} is not a builtin embedding or a readable file: {e}")))?;
    Ok(Embedding::from_json(&text)?)
}

/// Builtin face names, or a path to a face JSON file.
fn parse_face(s: &str) -> Result<FaceData, Failure> {
    let norm = s.replace('_', "-");
    if let Some(inner) = norm.strip_prefix("diagonal-cartan(").and_then(|r| r.strip_suffix(')')) {
        return Ok(FaceData::diagonal_cartan(&parse_spec(inner)?)?);
    }
    if norm == "torus-facet-a2" {
        return Ok(FaceData::torus_facet_a2()?);
    }
    let text = std::fs::read_to_string(s)
        .map_err(|e| usage(format!("{s:?} is not a builtin face or a readable file: {e}")))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| usage(format!("{s}: invalid JSON: {e}")))?;
    Ok(FaceData::from_json_value(&v)?)
}

/// Branch one highest weight through the disk cache.
fn branch_cached(
    cache: &CharacterCache,
    emb: &Embedding,
    hw: &Weight,
    dual: bool,
) -> Result<BTreeMap<Weight, i64>, Failure> {
    let top = if dual { emb.big().dual_weight(hw)? } else { hw.clone() };
    let ch = cache.character(emb.big(), &top)?;
    Ok(emb.restrict(&ch)?.decompose()?)
}

fn rat_string(x: &Rat) -> String {
    if x.denom() == &1.into() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("canonical value serializes"));
}

fn multiplicity_map(dec: &BTreeMap<Weight, i64>) -> Value {
    let mut obj = serde_json::Map::new();
    for (w, m) in dec {
        obj.insert(w.to_string(), json!(m));
    }
    Value::Object(obj)
}

fn print_multiplicities(dec: &BTreeMap<Weight, i64>, format: Format) {
    match format {
        Format::Json => print_json(&multiplicity_map(dec)),
        Format::Csv => {
            let mut out = String::from("weight,multiplicity\n");
            for (w, m) in dec {
                out.push_str(&format!("\"{w}\",{m}\n"));
            }
            print!("{out}");
        }
    }
}

fn json_only(format: Format) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(usage(
            "csv output is only available for weights, tensor, branch, table, and stretch",
        ));
    }
    Ok(())
}

fn run(cli: &Cli, cache: &CharacterCache) -> Result<bool, Failure> {
    match &cli.command {
        Cmd::Roots { group } => {
            json_only(cli.format)?;
            let rs = root_system(group)?;
            let simple: Vec<Vec<i64>> = rs.simple_roots().into_iter().map(|w| w.0).collect();
            let positive: Vec<Vec<i64>> =
                rs.positive_roots().iter().map(|r| r.fund.clone()).collect();
            print_json(&json!({
                "positive": positive,
                "rank": rs.rank(),
                "rho": rs.rho().0,
                "simple": simple,
                "weyl_order": rs.weyl_order().to_string(),
            }));
            Ok(true)
        }

        Cmd::Dim { group, weight } => {
            json_only(cli.format)?;
            let rs = root_system(group)?;
            let hw = parse_dominant(weight, &rs)?;
            let ch = cache.character(&rs, &hw)?;
            println!("{}", ch.dimension());
            Ok(true)
        }

        Cmd::Weights { group, weight } => {
            let rs = root_system(group)?;
            let hw = parse_dominant(weight, &rs)?;
            let ch = cache.character(&rs, &hw)?;
            print_multiplicities(ch.coeffs(), cli.format);
            Ok(true)
        }

        Cmd::Tensor { group, lhs, rhs } => {
            let rs = root_system(group)?;
            let a = parse_dominant(lhs, &rs)?;
            let b = parse_dominant(rhs, &rs)?;
            let product = cache.character(&rs, &a)?.product(&cache.character(&rs, &b)?)?;
            print_multiplicities(&product.decompose()?, cli.format);
            Ok(true)
        }

        Cmd::Branch { embedding, weight, no_dual } => {
            let emb = parse_embedding(embedding)?;
            let hw = parse_dominant(weight, emb.big())?;
            let dec = branch_cached(cache, &emb, &hw, !no_dual)?;
            print_multiplicities(&dec, cli.format);
            Ok(true)
        }

        Cmd::Table { embedding, bound, no_dual } => {
            let emb = parse_embedding(embedding)?;
            let table = BranchingTable::compute(&emb, *bound, !no_dual)?;
            match cli.format {
                Format::Json => print_json(&table.to_json_value()),
                Format::Csv => print!("{}", table.to_csv()),
            }
            Ok(true)
        }

        Cmd::Cone { embedding, bound, no_dual } => {
            json_only(cli.format)?;
            let emb = parse_embedding(embedding)?;
            let table = BranchingTable::compute(&emb, *bound, !no_dual)?;
            let cone = SupportCone::from_table(&table)?;
            print_json(&cone.to_json_value());
            Ok(true)
        }

        Cmd::Stretch { embedding, lhs, rhs, kmax, no_dual } => {
            let emb = parse_embedding(embedding)?;
            let big_hw = parse_dominant(lhs, emb.big())?;
            let small_hw = parse_dominant(rhs, emb.small())?;
            let samples = stretch_cached(cache, &emb, &big_hw, &small_hw, *kmax, !no_dual)?;
            match cli.format {
                Format::Json => {
                    let rows: Vec<Value> = samples.iter().map(|(k, m)| json!([k, m])).collect();
                    print_json(&Value::Array(rows));
                }
                Format::Csv => {
                    let mut out = String::from("k,multiplicity\n");
                    for (k, m) in &samples {
                        out.push_str(&format!("{k},{m}\n"));
                    }
                    print!("{out}");
                }
            }
            Ok(true)
        }

        Cmd::Fit { embedding, lhs, rhs, kfit, khold, period, degree, no_dual } => {
            json_only(cli.format)?;
            let emb = parse_embedding(embedding)?;
            let big_hw = parse_dominant(lhs, emb.big())?;
            let small_hw = parse_dominant(rhs, emb.small())?;
            let khold = khold.unwrap_or(*kfit).max(*kfit);
            let degree = degree.unwrap_or_else(|| default_degree_bound(&emb));
            let samples = stretch_cached(cache, &emb, &big_hw, &small_hw, khold, !no_dual)?;
            let window: BTreeMap<i64, i64> =
                samples.range(0..=*kfit).map(|(k, m)| (*k, *m)).collect();
            let (fit_value, holdout) = match fit(&window, *period, degree)? {
                FitResult::NoFit => (Value::Null, Value::Null),
                FitResult::Fit(qp) => {
                    let exact = samples
                        .range(kfit + 1..=khold)
                        .all(|(k, m)| qp.evaluate(*k) == rat_i(*m));
                    let holdout =
                        if khold > *kfit { json!(exact) } else { Value::Null };
                    (qp.to_json_value(), holdout)
                }
            };
            print_json(&json!({
                "fit": fit_value,
                "holdout_exact": holdout,
                "k_fit": kfit,
                "k_hold": khold,
                "max_degree": degree,
                "max_period": period,
            }));
            Ok(true)
        }

        Cmd::FaceCheck { face, bound } => {
            json_only(cli.format)?;
            let fd = parse_face(face)?;
            let report = verify_face_reduction(&fd, *bound)?;
            print_json(&report.to_json_value());
            Ok(report.passed())
        }

        Cmd::SymInvariants { group, weights, degree } => {
            json_only(cli.format)?;
            let rs = root_system(group)?;
            let mut coeffs: BTreeMap<Weight, i64> = BTreeMap::new();
            for s in weights {
                *coeffs.entry(parse_weight(s, &rs)?).or_insert(0) += 1;
            }
            let ch = FormalCharacter::from_coeffs(rs, coeffs)?;
            let si = sym_invariants(&ch, *degree)?;
            let certificate = match &si.certificate {
                MomentCertificate::Separating(xi) => json!({ "separating": xi }),
                MomentCertificate::ZeroCombination(comb) => {
                    let rows: Vec<Value> =
                        comb.iter().map(|(w, c)| json!([w.0, rat_string(c)])).collect();
                    json!({ "zero_combination": rows })
                }
            };
            print_json(&json!({
                "certificate": certificate,
                "dimensions": si.dimensions,
            }));
            Ok(true)
        }

        Cmd::Localize { group, weight, seed } => {
            json_only(cli.format)?;
            let rs = root_system(group)?;
            let hw = parse_dominant(weight, &rs)?;
            let (t, resamples) = seeded_regular_point(&rs, *seed)?;
            let direct = cache.character(&rs, &hw)?.value_at(&t)?;
            let local = fixed_point_value(&rs, &hw, &t)?;
            let agree = direct == local;
            let point: Vec<String> = t.iter().map(rat_string).collect();
            print_json(&json!({
                "agree": agree,
                "direct": rat_string(&direct),
                "fixed_point": rat_string(&local),
                "point": point,
                "resamples": resamples,
            }));
            Ok(agree)
        }

        Cmd::Verify { suite, seed, bound, fixtures } => {
            json_only(cli.format)?;
            let known = [
                "cone-vanishing",
                "stretch-fit",
                "face-reduction",
                "localization",
                "sym-invariants",
                "peter-weyl",
            ];
            let mut reports: Vec<Report> = Vec::new();
            // with fixtures and no explicit suite, check only the fixtures
            let selected = match suite.as_deref() {
                Some("all") => Some(None),
                Some(name) if known.contains(&name) => Some(Some(name)),
                Some(name) => {
                    return Err(usage(format!(
                        "unknown suite {name:?}; expected all or one of {}",
                        known.join(", ")
                    )))
                }
                None if fixtures.is_empty() => Some(None),
                None => None,
            };
            if let Some(filter) = selected {
                for report in standard_suites(*seed)? {
                    if filter.map_or(true, |name| report.suite == name) {
                        reports.push(report);
                    }
                }
            }
            for path in fixtures {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
                let v: Value = serde_json::from_str(&text)
                    .map_err(|e| usage(format!("{}: invalid JSON: {e}", path.display())))?;
                if v.get("entries").is_some() {
                    let table = BranchingTable::from_json_value(&v)?;
                    let emb = Embedding::new(
                        RootSystem::from_str_spec(&table.big_spec)?,
                        RootSystem::from_str_spec(&table.small_spec)?,
                        table.matrix.clone(),
                    )?;
                    reports.push(verify_cone_vanishing(&emb, table.bound, Some(&table))?);
                } else if v.get("word").is_some() {
                    let fd = FaceData::from_json_value(&v)?;
                    reports.push(verify_face_reduction(&fd, bound.unwrap_or(4))?);
                } else {
                    return Err(usage(format!(
                        "{}: not a branching table or face fixture",
                        path.display()
                    )));
                }
            }
            let passed = reports.iter().all(Report::passed);
            let rendered: Vec<Value> = reports.iter().map(Report::to_json_value).collect();
            print_json(&Value::Array(rendered));
            Ok(passed)
        }
    }
}

/// Multiplicities along the stretched ray, character lookups going through
/// the disk cache.
fn stretch_cached(
    cache: &CharacterCache,
    emb: &Embedding,
    big_hw: &Weight,
    small_hw: &Weight,
    k_max: i64,
    dual: bool,
) -> Result<BTreeMap<i64, i64>, Failure> {
    let mut out = BTreeMap::new();
    for k in 0..=k_max {
        let m = branch_cached(cache, emb, &big_hw.scale(k), dual)?
            .get(&small_hw.scale(k))
            .copied()
            .unwrap_or(0);
        out.insert(k, m);
    }
    Ok(out)
}
