//! Command-line front end.
//!
//! Exit status: 0 when everything ran and every verification passed, 1 when a
//! verification failed, 2 on malformed input, 3 when an enumeration budget
//! was exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::parabolic::ParabolicData;
use crate::repr_weights::{check_cor_uinv, check_levi_restriction, dominant_window};
use crate::report::Report;
use crate::root_datum::{LeviSubset, RootDatum, Weight};
use crate::vinberg::{eval_at_cp, pr_off_levi, CpPoint, VinbergCone};

pub const SCHEMA: &str = "renner/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "renner",
    version,
    about = "Root data, Renner cones and lemma verification for parabolic monoids",
    after_help = "Levi subsets are lists of 1-based Dynkin node labels in Bourbaki order, \
                  e.g. --levi 1,3. Use --levi \"\" for the Borel and --levi all to iterate \
                  over every subset.\n\
                  Bourbaki order: A_n, B_n, C_n chains 1..n with node n short in B_n and long \
                  in C_n; D_n branches at n-2; E_n has node 2 attached to node 4; F4 has \
                  nodes 1,2 long; G2 has node 1 short.\n\
                  RENNER_BUDGET overrides the Weyl, Hilbert and search budgets."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the root datum, its positive roots and coroots and the Weyl group order.
    Datum(Common),
    /// Print the Renner cone of each Levi with the unipotent monoid generators.
    ConeMbar(Common),
    /// Print the H- and V-representation of the Vinberg cone.
    ConeVinberg(Common),
    /// Print the Hilbert basis of the lattice points of each Renner cone.
    Hilbert(Common),
    /// Project a pair of weights through the idempotent of each Levi.
    Project {
        #[command(flatten)]
        common: Common,
        /// Pair of weights `l1;l2`, each a comma-separated coordinate list.
        #[arg(long)]
        pair: String,
    },
    /// Run lemma verifications.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        lemma: Lemma,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Type expression such as A2, B3, A1xA1 or A2xT1.
    #[arg(long = "type")]
    pub type_spec: String,
    /// Levi subset: comma-separated node labels, "" for none, or "all".
    #[arg(long, default_value = "all")]
    pub levi: String,
    /// Window height; defaults to 4 up to rank 2 and 3 above.
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub bound: Option<i64>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Record wall-clock time per report (output is then not reproducible).
    #[arg(long)]
    pub timings: bool,
    /// Corrupt the input before verifying.
    #[arg(long, value_enum, hide = true)]
    pub inject: Option<Injection>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Injection {
    /// Drop the first generator of the unipotent monoid.
    DropPosUp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Lemma {
    #[value(name = "wthull")]
    #[serde(rename = "wthull")]
    WtHull,
    #[value(name = "posU")]
    #[serde(rename = "posU")]
    PosU,
    #[value(name = "duality")]
    #[serde(rename = "duality")]
    Duality,
    #[value(name = "saturation")]
    #[serde(rename = "saturation")]
    Saturation,
    #[value(name = "levi-restriction")]
    #[serde(rename = "levi-restriction")]
    LeviRestriction,
    #[value(name = "uinv")]
    #[serde(rename = "uinv")]
    Uinv,
    #[value(name = "vinberg-image")]
    #[serde(rename = "vinberg-image")]
    VinbergImage,
    #[value(name = "all")]
    #[serde(rename = "all")]
    All,
}

impl Lemma {
    pub const EACH: [Lemma; 7] = [
        Lemma::WtHull,
        Lemma::PosU,
        Lemma::Duality,
        Lemma::Saturation,
        Lemma::LeviRestriction,
        Lemma::Uinv,
        Lemma::VinbergImage,
    ];

    fn expand(self) -> Vec<Lemma> {
        match self {
            Lemma::All => Lemma::EACH.to_vec(),
            l => vec![l],
        }
    }
}

/// Parses `""`, `"all"`, `"1,3"`, `"{1,3}"` or `"1 3"` into Levi subsets.
pub fn parse_levi(datum: &RootDatum, spec: &str) -> Result<Vec<LeviSubset>> {
    let trimmed = spec.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if trimmed.eq_ignore_ascii_case("all") {
        return Ok(LeviSubset::all_subsets(datum));
    }
    let labels = trimmed
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid Levi node `{t}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(vec![LeviSubset::from_labels(datum, labels)?])
}

/// Parses a comma-separated coordinate list.
pub fn parse_weight(datum: &RootDatum, spec: &str) -> Result<Weight> {
    let coords = spec
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("invalid coordinate `{t}`"))))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != datum.dim() {
        return Err(Error::DimensionMismatch {
            expected: datum.dim(),
            found: coords.len(),
        });
    }
    Ok(Weight::new(coords))
}

pub fn default_bound(datum: &RootDatum) -> i64 {
    if datum.rank() <= 2 {
        4
    } else {
        3
    }
}

/// The budget override from `RENNER_BUDGET`, if set.
pub fn limits_from_env() -> Result<Limits> {
    match std::env::var("RENNER_BUDGET") {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(|b| Limits::default().with_budget(b))
            .map_err(|_| Error::Parse(format!("RENNER_BUDGET must be a positive integer, got `{v}`"))),
        Err(_) => Ok(Limits::default()),
    }
}

/// Runs one lemma on one parabolic.
pub fn verify_lemma(
    pd: &ParabolicData,
    vinberg: Option<&VinbergCone>,
    lemma: Lemma,
    bound: i64,
) -> Result<Report> {
    let datum = pd.datum();
    let hw_bound = bound.min(2);
    match lemma {
        Lemma::WtHull => pd.check_weight_hull(bound),
        Lemma::PosU => pd.check_intersection_lemma(bound),
        Lemma::Duality => Ok(pd.check_duality(bound)),
        Lemma::Saturation => pd.check_saturation(bound),
        Lemma::LeviRestriction => {
            let mut window = dominant_window(datum, hw_bound);
            window.extend((0..datum.rank()).map(|i| datum.fundamental_weight(i)));
            window.sort();
            window.dedup();
            let mut report = Report::new(
                "levi-restriction",
                pd.instance(),
                format!("hw-window:{}", window.len()),
            );
            for hw in &window {
                report.absorb(check_levi_restriction(datum, pd.levi(), hw)?);
            }
            Ok(report)
        }
        Lemma::Uinv => check_cor_uinv(pd, &dominant_window(datum, hw_bound)),
        Lemma::VinbergImage => match vinberg {
            Some(vc) => vc.check_image(&CpPoint::new(pd.levi().clone()), pd, bound),
            None => Ok(Report::new("vinberg-image", pd.instance(), "not-applicable")),
        },
        Lemma::All => unreachable!("expanded by the caller"),
    }
}

struct Job {
    command: &'static str,
    common: Common,
    lemma: Option<Lemma>,
    pair: Option<String>,
}

struct Outcome {
    document: Value,
    table: String,
    failed: bool,
}

fn job_json(job: &Job, datum: &RootDatum, bound: i64) -> Value {
    let mut j = json!({
        "command": job.command,
        "type": datum.type_name(),
        "levi": job.common.levi,
        "bound": bound,
    });
    if let Some(l) = job.lemma {
        j["lemma"] = serde_json::to_value(l).expect("serializable");
    }
    if let Some(p) = &job.pair {
        j["pair"] = json!(p);
    }
    if let Some(i) = job.common.inject {
        j["inject"] = serde_json::to_value(i).expect("serializable");
    }
    j
}

fn build_parabolic(datum: &RootDatum, levi: &LeviSubset, job: &Job, limits: &Limits) -> Result<ParabolicData> {
    let pd = ParabolicData::build(datum, levi, limits)?;
    match job.common.inject {
        Some(Injection::DropPosUp) => {
            let gens: Vec<Vec<i64>> = pd.pos_up().generators().iter().skip(1).cloned().collect();
            pd.with_pos_up_generators(gens)
        }
        None => Ok(pd),
    }
}

fn execute(job: &Job, limits: &Limits) -> Result<Outcome> {
    let datum = RootDatum::parse(&job.common.type_spec)?;
    let levis = parse_levi(&datum, &job.common.levi)?;
    let bound = job.common.bound.unwrap_or_else(|| default_bound(&datum));
    let header = job_json(job, &datum, bound);
    let mut table = String::new();
    let mut results: Vec<Value> = Vec::new();
    let mut failed = false;

    match job.command {
        "datum" => {
            let weyl = datum.weyl_group(&LeviSubset::full(&datum), limits)?;
            let value = json!({
                "datum": datum,
                "simple_roots": datum.simple_roots(),
                "positive_roots": datum.positive_roots(),
                "positive_coroots": datum.positive_coroots(),
                "weyl_order": weyl.len(),
            });
            let _ = writeln!(table, "type          {}", datum.type_name());
            let _ = writeln!(table, "rank          {}", datum.rank());
            let _ = writeln!(table, "central rank  {}", datum.central_rank());
            let _ = writeln!(table, "cartan        {:?}", datum.cartan_matrix());
            let _ = writeln!(table, "|W|           {}", weyl.len());
            let _ = writeln!(table, "|R+|          {}", datum.positive_roots().len());
            results.push(value);
        }
        "cone-mbar" => {
            for levi in &levis {
                let pd = build_parabolic(&datum, levi, job, limits)?;
                let cone = pd.renner_cone();
                let _ = writeln!(
                    table,
                    "{:<22} generators {:?}  halfspaces {:?}",
                    pd.instance(),
                    cone.generators(),
                    cone.halfspaces()
                );
                results.push(json!({
                    "instance": pd.instance(),
                    "levi": levi.labels(),
                    "pos_up": pd.pos_up().generators(),
                    "renner_generators": pd.renner_generators(),
                    "cone": cone,
                }));
            }
        }
        "cone-vinberg" => {
            let vc = VinbergCone::new(&datum, limits)?;
            let _ = writeln!(
                table,
                "{:<8} dim {}  rays {}  halfspaces {}",
                datum.type_name(),
                vc.cone().dim(),
                vc.cone().generators().len(),
                vc.cone().halfspaces().len()
            );
            results.push(serde_json::to_value(&vc).expect("serializable"));
        }
        "hilbert" => {
            for levi in &levis {
                let pd = build_parabolic(&datum, levi, job, limits)?;
                let basis = pd.cartan_closure_semigroup()?;
                let _ = writeln!(table, "{:<22} {:?}", pd.instance(), basis.iter().map(|w| w.coords()).collect::<Vec<_>>());
                results.push(json!({ "instance": pd.instance(), "hilbert_basis": basis }));
            }
        }
        "project" => {
            let spec = job.pair.as_deref().unwrap_or_default();
            let (a, b) = spec
                .split_once(';')
                .ok_or_else(|| Error::Parse(format!("pair must look like `l1;l2`, got `{spec}`")))?;
            let l1 = parse_weight(&datum, a)?;
            let l2 = parse_weight(&datum, b)?;
            let vc = VinbergCone::new(&datum, limits)?;
            for levi in &levis {
                let cp = CpPoint::new(levi.clone());
                let image = vc.project_idempotent(&cp, &l1, &l2)?;
                let diff = &l2 - &l1;
                let eps = eval_at_cp(&datum, &diff, &cp)?;
                let pr = pr_off_levi(&datum, &diff, levi)?;
                let instance = format!("{} levi={}", datum.type_name(), levi);
                let _ = writeln!(table, "{instance:<22} eps {eps}  image {:?}  pr {:?}", image.coords(), pr);
                results.push(json!({
                    "instance": instance,
                    "epsilon": eps,
                    "projection": image,
                    "pr_off_levi": pr,
                }));
            }
        }
        "verify" => {
            let lemmas = job.lemma.expect("verify carries a lemma").expand();
            let vinberg = if lemmas.contains(&Lemma::VinbergImage) && datum.is_semisimple() {
                Some(VinbergCone::new(&datum, limits)?)
            } else {
                None
            };
            for levi in &levis {
                let pd = build_parabolic(&datum, levi, job, limits)?;
                for &lemma in &lemmas {
                    let start = Instant::now();
                    let mut report = verify_lemma(&pd, vinberg.as_ref(), lemma, bound)?;
                    if job.common.timings {
                        report.wall_ms = Some(start.elapsed().as_millis() as u64);
                    }
                    failed |= !report.pass;
                    let _ = writeln!(table, "{report}");
                    results.push(serde_json::to_value(&report).expect("serializable"));
                }
            }
            return Ok(Outcome {
                document: json!({ "schema": SCHEMA, "job": header, "reports": results }),
                table,
                failed,
            });
        }
        other => unreachable!("unknown command {other}"),
    }
    Ok(Outcome {
        document: json!({ "schema": SCHEMA, "job": header, "results": results }),
        table,
        failed,
    })
}

/// Indented JSON with arrays of scalars kept on one line.
fn write_json(out: &mut String, v: &Value, indent: usize) {
    let pad = |out: &mut String, n: usize| out.extend(std::iter::repeat("  ").take(n));
    match v {
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                pad(out, indent + 1);
                write_json(out, x, indent + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                pad(out, indent + 1);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_json(out, x, indent + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push('}');
        }
        _ => out.push_str(&v.to_string()),
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_budget() {
        EXIT_BUDGET
    } else {
        EXIT_USAGE
    }
}

/// Parses arguments, runs the job and writes its output; returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let job = match cli.command {
        Command::Datum(common) => Job { command: "datum", common, lemma: None, pair: None },
        Command::ConeMbar(common) => Job { command: "cone-mbar", common, lemma: None, pair: None },
        Command::ConeVinberg(common) => Job { command: "cone-vinberg", common, lemma: None, pair: None },
        Command::Hilbert(common) => Job { command: "hilbert", common, lemma: None, pair: None },
        Command::Project { common, pair } => Job { command: "project", common, lemma: None, pair: Some(pair) },
        Command::Verify { common, lemma } => Job { command: "verify", common, lemma: Some(lemma), pair: None },
    };
    let limits = match limits_from_env() {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let outcome = match execute(&job, &limits) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let text = match job.common.format {
        Format::Json => {
            let mut s = String::new();
            write_json(&mut s, &outcome.document, 0);
            s.push('\n');
            s
        }
        Format::Table => outcome.table,
    };
    let written = match &job.common.output {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    if outcome.failed {
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}
