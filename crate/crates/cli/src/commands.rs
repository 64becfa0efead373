use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use jacsyz_core::hypersurface::{
    bourbaki, groebner_dimension, jacobian_syzygies_with, tame_scan, CheckStatus, SyzygySet,
};
use jacsyz_core::invariants::sigma_invariants;
use jacsyz_core::oracle::minimal_generator_counts;
use jacsyz_core::{analyze, AnalysisOptions, HypersurfaceReport};

use crate::input::{InputSpec, Problem};
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "jacsyz", version, about = "Jacobian syzygies and Bourbaki ideals of projective hypersurfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Input file in the `vars:` / `f:` / `syz NAME:` format.
    pub file: PathBuf,
    /// Write the JSON report to this path (`-` for standard output).
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Place the syzygies declared in the input file first.
    #[arg(long)]
    pub use_declared_syzygies: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full pipeline: syzygies, classification, singular locus, Bourbaki ideals.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Evaluate the identity and bound ledger.
        #[arg(long)]
        check_bounds: bool,
        /// Run the linear-algebra oracle up to this degree.
        #[arg(long, value_name = "K")]
        max_degree: Option<u32>,
    },
    /// Bourbaki ideal and tameness for one subset of generators.
    Bourbaki {
        #[command(flatten)]
        common: Common,
        /// Comma-separated generator indices (1-based) or names.
        #[arg(long, value_name = "I1,...")]
        subset: Option<String>,
    },
    /// Search for a tame subset in order of increasing degree sum.
    TameScan {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Degree-by-degree generator counts from linear algebra alone.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "K")]
        max_degree: Option<u32>,
    },
    /// Run every applicable check; exit 0 only if none fails.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "K")]
        max_degree: Option<u32>,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Analyze { common, .. }
            | Command::Bourbaki { common, .. }
            | Command::TameScan { common, .. }
            | Command::Oracle { common, .. }
            | Command::Verify { common, .. } => common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Bourbaki { .. } => "bourbaki",
            Command::TameScan { .. } => "tame-scan",
            Command::Oracle { .. } => "oracle",
            Command::Verify { .. } => "verify",
        }
    }
}

/// Result of one command: exit code, human summary and JSON document.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub summary: String,
    pub json: Option<Value>,
}

impl Outcome {
    pub fn json_text(&self) -> Option<String> {
        self.json
            .as_ref()
            .map(|v| serde_json::to_string_pretty(v).expect("serializable") + "\n")
    }
}

fn load(common: &Common) -> Result<Problem, CliError> {
    let text = std::fs::read_to_string(&common.file)
        .map_err(|e| CliError::Io(format!("{}: {e}", common.file.display())))?;
    let mut problem = InputSpec::parse(&text)?.build()?;
    if !common.use_declared_syzygies {
        problem.declared.clear();
    }
    Ok(problem)
}

fn envelope(command: &str, body: Value) -> Value {
    let mut v = match body {
        Value::Object(m) => m,
        other => {
            let mut m = serde_json::Map::new();
            m.insert("result".into(), other);
            m
        }
    };
    v.insert("schema_version".into(), json!(SCHEMA_VERSION));
    v.insert("command".into(), json!(command));
    Value::Object(v)
}

fn to_json<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report serializes")
}

fn parse_subset(text: &str, syz: &SyzygySet) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(str::trim)
        .map(|t| {
            if let Some(i) = syz.index_of(t) {
                return Ok(i);
            }
            match t.parse::<usize>() {
                Ok(i) if (1..=syz.m).contains(&i) => Ok(i - 1),
                _ => Err(CliError::Core(jacsyz_core::Error::InvalidSubset(format!(
                    "`{t}` is neither a generator name nor an index in 1..={}",
                    syz.m
                )))),
            }
        })
        .collect()
}

fn default_oracle_degree(syz: &SyzygySet) -> u32 {
    syz.sorted_degrees.last().copied().unwrap_or(0) + 2
}

fn describe_generators(out: &mut String, syz: &SyzygySet) {
    let _ = writeln!(out, "generators: m = {}, exponents {:?}", syz.m, syz.sorted_degrees);
    for (i, (name, g)) in syz.names.iter().zip(&syz.generators).enumerate() {
        let entries: Vec<String> = g.entries().iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "  [{}] {name} (degree {}): ({})", i + 1, syz.degrees[i], entries.join(", "));
    }
}

fn summarize(r: &HypersurfaceReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "f = {}", r.f);
    let _ = writeln!(out, "variables: {} (n = {}, d = {})", r.vars.join(", "), r.n, r.d);
    let _ = writeln!(out, "classification: {}", r.classification.tag());
    describe_generators(&mut out, &r.syzygies);
    let _ = writeln!(out, "singular locus: dim {}, degree {}", r.sigma.s, r.sigma.deg_sigma);
    let _ = writeln!(out, "resolution of J_f: {:?}", r.jacobian_resolution_shifts);
    if let Some(t) = &r.tjurina {
        let _ = writeln!(out, "total Tjurina number {} (bound {}, mdr {})", t.tau, t.bound, t.r);
    }
    let _ = writeln!(
        out,
        "tame scan: {} ({} of {} subsets tested), b(V) = {}",
        r.tame_scan.status,
        r.tame_scan.verdicts.len(),
        r.tame_scan.total_subsets,
        r.b_of_v.map_or("none".into(), |b| b.to_string())
    );
    for b in &r.bourbaki_results {
        let gens: Vec<String> = b.minimal_generators.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "  B({}) = ({}), height(I) = {}, tame = {}",
            b.subset_names.join(","),
            gens.join(", "),
            b.minors_height.value,
            b.tame
        );
    }
    if !r.identity_checks.is_empty() {
        let count = |s| r.identity_checks.iter().filter(|c| c.status == s).count();
        let _ = writeln!(
            out,
            "checks: {} pass, {} fail, {} info, {} skipped",
            count(CheckStatus::Pass),
            count(CheckStatus::Fail),
            count(CheckStatus::Info),
            count(CheckStatus::Skipped)
        );
        for c in r.failed_checks() {
            let _ = writeln!(out, "  FAIL {}: {} vs {} {}", c.name, c.lhs, c.rhs, c.detail);
        }
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}

fn options(p: &Problem) -> AnalysisOptions {
    AnalysisOptions {
        declared: p.declared.clone(),
        arrangement: p.arrangement,
        ..Default::default()
    }
}

fn execute(cmd: &Command) -> Result<(String, Value), CliError> {
    let problem = load(cmd.common())?;
    match cmd {
        Command::Analyze { check_bounds, max_degree, .. } => {
            let opts = AnalysisOptions {
                check_identities: *check_bounds,
                oracle_degree: *max_degree,
                ..options(&problem)
            };
            let report = analyze(&problem.f, &opts)?;
            Ok((summarize(&report), to_json(&report)))
        }
        Command::Verify { max_degree, .. } => {
            let syz = jacobian_syzygies_with(&problem.f, &problem.declared)?;
            let opts = AnalysisOptions {
                oracle_degree: Some(max_degree.unwrap_or_else(|| default_oracle_degree(&syz))),
                ..options(&problem)
            };
            let report = analyze(&problem.f, &opts)?;
            let mut out = String::new();
            for c in &report.identity_checks {
                let tag = match c.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Info => "info",
                    CheckStatus::Skipped => "skip",
                };
                let _ = writeln!(out, "{tag:>4}  {}: {} vs {}", c.name, c.lhs, c.rhs);
            }
            let failed = report.failed_checks().count();
            let body = json!({
                "classification": report.classification,
                "exponents": report.syzygies.sorted_degrees,
                "failed": failed,
                "identity_checks": to_json(&report.identity_checks),
            });
            if failed > 0 {
                let _ = writeln!(out, "{failed} check(s) failed");
            }
            Ok((out, body))
        }
        Command::Bourbaki { subset, .. } => {
            let syz = jacobian_syzygies_with(&problem.f, &problem.declared)?;
            let idx = match subset {
                Some(s) => parse_subset(s, &syz)?,
                None => (0..syz.n - 1).collect(),
            };
            let b = bourbaki(&syz, &idx, true)?;
            let mut out = String::new();
            describe_generators(&mut out, &syz);
            let gens: Vec<String> = b.bourbaki_basis.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "subset ({}): rank ok = {}, delta = {}", b.subset_names.join(","), b.rank_ok, b.delta);
            let _ = writeln!(out, "height of the minors ideal: {}", b.minors_height.value);
            let _ = writeln!(out, "tame: {}", b.tame);
            let _ = writeln!(out, "Bourbaki ideal, reduced Groebner basis: ({})", gens.join(", "));
            Ok((out, to_json(&b)))
        }
        Command::TameScan { limit, .. } => {
            let syz = jacobian_syzygies_with(&problem.f, &problem.declared)?;
            let scan = tame_scan(&syz, Some(*limit))?;
            let mut out = String::new();
            let _ = writeln!(out, "status: {}", scan.status);
            let _ = writeln!(out, "b(V) = {}", scan.b_of_v.map_or("none".into(), |b| b.to_string()));
            if let Some(v) = scan.verdicts.iter().find(|v| v.tame) {
                let names: Vec<&str> = v.subset.iter().map(|&i| syz.names[i].as_str()).collect();
                let _ = writeln!(out, "first tame subset: ({})", names.join(","));
            }
            let mut body = to_json(&scan);
            body["generator_names"] = json!(syz.names);
            Ok((out, body))
        }
        Command::Oracle { max_degree, .. } => {
            let syz = jacobian_syzygies_with(&problem.f, &problem.declared)?;
            let k = max_degree.unwrap_or_else(|| default_oracle_degree(&syz));
            let counts = minimal_generator_counts(&problem.f, k)?;
            let sigma = sigma_invariants(&problem.f)?;
            let gb: Vec<i64> = (0..=k).map(|j| groebner_dimension(&sigma, syz.n, syz.d, j)).collect();
            let mut out = String::new();
            for (c, g) in counts.iter().zip(&gb) {
                let _ = writeln!(out, "k = {:>2}: dim {:>4} (groebner {:>4}), mu = {}", c.degree, c.dimension, g, c.mu);
            }
            let body = json!({
                "counts": to_json(&counts),
                "exponents": syz.sorted_degrees,
                "groebner_dimensions": gb,
                "k_max": k,
            });
            Ok((out, body))
        }
    }
}

/// Run one parsed command. Errors are folded into the exit code.
pub fn run(cli: &Cli) -> Outcome {
    let cmd = &cli.command;
    match execute(cmd) {
        Ok((summary, body)) => {
            let failed = body.get("failed").and_then(Value::as_u64).unwrap_or(0);
            let code = if failed > 0 {
                CliError::ChecksFailed(failed as usize).exit_code()
            } else {
                0
            };
            Outcome {
                code,
                summary,
                json: Some(envelope(cmd.name(), body)),
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            summary: format!("error: {e}\n"),
            json: None,
        },
    }
}

impl Cli {
    pub fn json_path(&self) -> Option<&PathBuf> {
        self.command.common().json.as_ref()
    }
}
