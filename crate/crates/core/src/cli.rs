//! Command-line front end. [`run`] does all the work and returns the exit
//! code and captured output, so the binary is a thin wrapper and tests can
//! drive every subcommand in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::covering::{ClosureCheck, SoftCoveringSpace};
use crate::document::read_document;
use crate::error::{Error, Result};
use crate::limit::ExhaustiveLimit;
use crate::sets::{SetFamily, Subset};
use crate::soft_set::SoftSet;
use crate::topology::{
    generate_from_subbase, lower_fixed_point_family, subbase_base, upper_fixed_point_family, TopologyCheck,
    TopologyFamily,
};
use crate::verify::sweep::{sweep_coverings, CoveringSource, SweepReport, MAX_ENUMERATED};
use crate::verify::{
    check_partition_coincidence, compare_upper_closure, evaluate_at, verify_properties, Claim, Mode,
    PartitionCoincidence, PropertyId, PropertyOutcome, UpperClosureComparison, VerificationReport, Witness,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "softrough", version, about = "Soft covering based rough sets over finite universes")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Load soft sets that are not coverings (only `check` accepts them).
    #[arg(long, global = true)]
    allow_noncovering: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Subbase,
    LowerFixed,
    UpperFixed,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lower and upper approximations and the three regions of a set.
    Approx {
        space: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Minimal descriptions of one element, or of all of them.
    Mdesc {
        space: PathBuf,
        #[arg(long)]
        element: Option<String>,
    },
    /// A family of open sets built from the covering, and whether it is a topology.
    Topology {
        space: PathBuf,
        #[arg(long, value_enum, default_value = "subbase")]
        method: Method,
    },
    /// Interior, closure and boundary of a set.
    TopoOps {
        space: PathBuf,
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value = "subbase")]
        method: Method,
    },
    /// Full, covering, partition and intersection-union-closed tests.
    Check { space: PathBuf },
    /// Check catalog properties, exhaustively or on seeded samples.
    Verify {
        space: PathBuf,
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Catalog id such as T15.1; repeat to select several.
        #[arg(long = "property", value_name = "ID")]
        properties: Vec<String>,
        /// Evaluate pointwise laws at this X instead of searching.
        #[arg(long)]
        x: Option<String>,
        #[arg(long, requires = "x")]
        y: Option<String>,
        /// Report elapsed time.
        #[arg(long)]
        timing: bool,
    },
    /// Compare S^- with the closure of the subbase topology, and on a
    /// partition the three operator pairs.
    Compare { space: PathBuf },
    /// Check properties across every covering of a small universe, or
    /// across seeded random coverings.
    Sweep {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = Mode::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        max_blocks: Option<usize>,
        /// Defaults to the four biconditionals.
        #[arg(long = "property", value_name = "ID")]
        properties: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

enum Loaded {
    Space(SoftCoveringSpace),
    SoftOnly { soft_set: SoftSet, reason: String },
}

impl Loaded {
    fn soft_set(&self) -> &SoftSet {
        match self {
            Loaded::Space(s) => s.soft_set(),
            Loaded::SoftOnly { soft_set, .. } => soft_set,
        }
    }
}

fn load(path: &Path, allow_noncovering: bool) -> Result<Loaded> {
    let doc = read_document(path)?;
    if !allow_noncovering {
        return doc.to_space().map(Loaded::Space);
    }
    let soft_set = doc.to_soft_set()?;
    Ok(match SoftCoveringSpace::new(soft_set.clone()) {
        Ok(space) => Loaded::Space(space),
        Err(Error::NotACovering(reason)) => Loaded::SoftOnly { soft_set, reason },
        Err(other) => return Err(other),
    })
}

fn load_space(path: &Path, allow_noncovering: bool, command: &str) -> Result<SoftCoveringSpace> {
    match load(path, allow_noncovering)? {
        Loaded::Space(space) => Ok(space),
        Loaded::SoftOnly { reason, .. } => Err(Error::Validation {
            field: "blocks".into(),
            message: format!("not a covering soft set: {reason}; `{command}` needs a covering"),
        }),
    }
}

fn render<T: Serialize>(json: bool, report: &T, text: impl FnOnce() -> String) -> String {
    if json {
        let mut out = serde_json::to_string_pretty(report).expect("reports serialize");
        out.push('\n');
        out
    } else {
        text()
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn family_lines(out: &mut String, family: &SetFamily) {
    for set in family.iter() {
        let _ = writeln!(out, "{set}");
    }
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let limit = ExhaustiveLimit::from_env()?;
    let json = cli.json;
    let allow = cli.allow_noncovering;
    match &cli.command {
        Command::Approx { space, set } => {
            let space = load_space(space, allow, "approx")?;
            let x = Subset::parse(space.universe(), set)?;
            Ok((EXIT_OK, approx(&space, &x, json)?))
        }
        Command::Mdesc { space, element } => {
            let space = load_space(space, allow, "mdesc")?;
            Ok((EXIT_OK, mdesc(&space, element.as_deref(), json)?))
        }
        Command::Topology { space, method } => {
            let space = load_space(space, allow, "topology")?;
            Ok((EXIT_OK, topology(&space, *method, limit, json)?))
        }
        Command::TopoOps { space, set, method } => {
            let space = load_space(space, allow, "topo-ops")?;
            let x = Subset::parse(space.universe(), set)?;
            Ok((EXIT_OK, topo_ops(&space, &x, *method, limit, json)?))
        }
        Command::Check { space } => Ok((EXIT_OK, check(&load(space, allow)?, json))),
        Command::Verify {
            space,
            exhaustive,
            samples,
            seed,
            properties,
            x,
            y,
            timing,
        } => {
            let space = load_space(space, allow, "verify")?;
            let properties = parse_properties(properties, &PropertyId::ALL)?;
            if let Some(x) = x {
                return point_check(&space, &properties, x, y.as_deref(), json);
            }
            let mode = match (exhaustive, samples) {
                (true, _) => Mode::Exhaustive,
                (false, Some(n)) => Mode::sampled(*n, seed.unwrap_or(Mode::DEFAULT_SEED)),
                (false, None) if space.universe().len() <= limit.0 => Mode::Exhaustive,
                (false, None) => Mode::sampled(Mode::DEFAULT_SAMPLES, seed.unwrap_or(Mode::DEFAULT_SEED)),
            };
            let report = verify_properties(&space, &properties, mode, limit)?;
            let code = if report.violations().next().is_some() { EXIT_VIOLATION } else { EXIT_OK };
            Ok((code, verify_output(&report, *timing, json)))
        }
        Command::Compare { space } => {
            let space = load_space(space, allow, "compare")?;
            Ok((EXIT_OK, compare(&space, limit, json)?))
        }
        Command::Sweep {
            size,
            samples,
            seed,
            max_blocks,
            properties,
        } => {
            let properties = parse_properties(properties, &PropertyId::BICONDITIONALS)?;
            let source = match samples {
                None => CoveringSource::All { size: *size, max_blocks: *max_blocks },
                Some(count) => CoveringSource::Random {
                    count: *count,
                    seed: *seed,
                    min_size: *size,
                    max_size: *size,
                    max_blocks: max_blocks.unwrap_or(*size + 2),
                },
            };
            if let CoveringSource::All { size, .. } = source {
                if size == 0 || size > MAX_ENUMERATED {
                    return Err(Error::Validation {
                        field: "size".into(),
                        message: format!(
                            "all coverings can be listed for 1 to {MAX_ENUMERATED} elements; use --samples for {size}"
                        ),
                    });
                }
            }
            let report = sweep_coverings(source, &properties, limit)?;
            let code = if report.violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
            Ok((code, sweep_output(&source, &report, json)))
        }
    }
}

fn parse_properties(raw: &[String], default: &[PropertyId]) -> Result<Vec<PropertyId>> {
    if raw.is_empty() {
        return Ok(default.to_vec());
    }
    let mut out: Vec<PropertyId> = Vec::new();
    for r in raw {
        for part in r.split(',').filter(|p| !p.trim().is_empty()) {
            let p: PropertyId = part.parse()?;
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct ApproxReport {
    set: Subset,
    lower: Subset,
    upper: Subset,
    positive: Subset,
    negative: Subset,
    boundary: Subset,
    definable: bool,
}

fn approx(space: &SoftCoveringSpace, x: &Subset, json: bool) -> Result<String> {
    let r = space.regions(x)?;
    let report = ApproxReport {
        set: x.clone(),
        lower: r.lower,
        upper: r.upper,
        positive: r.positive,
        negative: r.negative,
        boundary: r.boundary,
        definable: r.definable,
    };
    Ok(render(json, &report, || {
        format!(
            "set: {}\nlower: {}\nupper: {}\npositive: {}\nnegative: {}\nboundary: {}\nstatus: {}\n",
            report.set,
            report.lower,
            report.upper,
            report.positive,
            report.negative,
            report.boundary,
            if report.definable { "definable" } else { "rough" }
        )
    }))
}

fn mdesc(space: &SoftCoveringSpace, element: Option<&str>, json: bool) -> Result<String> {
    let elements: Vec<&str> = match element {
        Some(e) => vec![e],
        None => space.universe().elements().iter().map(String::as_str).collect(),
    };
    let descriptions = elements
        .iter()
        .map(|e| space.minimal_description(e))
        .collect::<Result<Vec<_>>>()?;
    Ok(render(json, &descriptions, || {
        let mut out = String::new();
        for d in &descriptions {
            let _ = writeln!(out, "Md({}):", d.element);
            family_lines(&mut out, &d.blocks);
        }
        out
    }))
}

fn build_family(space: &SoftCoveringSpace, method: Method, limit: ExhaustiveLimit) -> Result<TopologyFamily> {
    match method {
        Method::Subbase => Ok(generate_from_subbase(space)),
        Method::LowerFixed => lower_fixed_point_family(space, limit),
        Method::UpperFixed => upper_fixed_point_family(space, limit),
    }
}

#[derive(Serialize)]
struct TopologyReport {
    method: String,
    base: Option<SetFamily>,
    opens: SetFamily,
    topology: TopologyCheck,
    closed_sets: TopologyCheck,
}

fn check_line(check: &TopologyCheck) -> String {
    match &check.violation {
        None => "yes".into(),
        Some(v) => format!("no: {v}"),
    }
}

fn topology(space: &SoftCoveringSpace, method: Method, limit: ExhaustiveLimit, json: bool) -> Result<String> {
    let family = build_family(space, method, limit)?;
    let report = TopologyReport {
        method: family.origin().to_string(),
        base: (method == Method::Subbase).then(|| subbase_base(space)),
        opens: family.opens().clone(),
        topology: family.is_topology(limit)?,
        closed_sets: family.closed_set_check(limit)?,
    };
    Ok(render(json, &report, || {
        let mut out = format!("method: {}\n", report.method);
        if let Some(base) = &report.base {
            let _ = writeln!(out, "base ({}):", base.len());
            family_lines(&mut out, base);
        }
        let _ = writeln!(out, "opens ({}):", report.opens.len());
        family_lines(&mut out, &report.opens);
        let _ = writeln!(out, "topology: {}", check_line(&report.topology));
        let _ = writeln!(out, "closed-set axioms: {}", check_line(&report.closed_sets));
        out
    }))
}

#[derive(Serialize)]
struct TopoOpsReport {
    method: String,
    set: Subset,
    interior: Subset,
    closure: Subset,
    boundary: Subset,
}

fn topo_ops(space: &SoftCoveringSpace, x: &Subset, method: Method, limit: ExhaustiveLimit, json: bool) -> Result<String> {
    let family = build_family(space, method, limit)?;
    let report = TopoOpsReport {
        method: family.origin().to_string(),
        set: x.clone(),
        interior: family.interior(x)?,
        closure: family.closure(x)?,
        boundary: family.boundary(x)?,
    };
    Ok(render(json, &report, || {
        format!(
            "method: {}\nset: {}\ninterior: {}\nclosure: {}\nboundary: {}\n",
            report.method, report.set, report.interior, report.closure, report.boundary
        )
    }))
}

#[derive(Serialize)]
struct CheckReport {
    full: bool,
    covering: bool,
    partition: bool,
    /// Absent when the soft set is not a covering.
    intersection_union_closed: Option<ClosureCheck>,
}

fn check(loaded: &Loaded, json: bool) -> String {
    let soft = loaded.soft_set();
    let report = CheckReport {
        full: soft.is_full(),
        covering: soft.is_covering(),
        partition: soft.is_partition(),
        intersection_union_closed: match loaded {
            Loaded::Space(s) => Some(s.is_intersection_union_closed()),
            Loaded::SoftOnly { .. } => None,
        },
    };
    render(json, &report, || {
        let closed = match &report.intersection_union_closed {
            None => "n/a (not a covering)".to_string(),
            Some(ClosureCheck { witness: None, .. }) => "yes".to_string(),
            Some(ClosureCheck { witness: Some(w), .. }) => format!(
                "no: {} ∩ {} = {}, blocks inside cover {}",
                w.first, w.second, w.intersection, w.covered
            ),
        };
        format!(
            "full: {}\ncovering: {}\npartition: {}\nintersection-union-closed: {}\n",
            yes_no(report.full),
            yes_no(report.covering),
            yes_no(report.partition),
            closed
        )
    })
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    #[serde(flatten)]
    report: &'a VerificationReport,
    violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

fn outcome_lines(out: &mut String, e: &PropertyOutcome) {
    let expected = match (e.claim, e.witness.is_some()) {
        (Claim::FailsInGeneral, true) => " (expected)",
        (Claim::Holds, true) if e.is_violation() => " (VIOLATION)",
        _ => "",
    };
    let _ = writeln!(out, "{} {}{}: {} [examined {}]", e.property, e.status, expected, e.statement, e.examined);
    if let Some(w) = &e.witness {
        let _ = writeln!(out, "  witness: {w}");
    }
    if let Some(n) = &e.note {
        let _ = writeln!(out, "  note: {n}");
    }
}

fn verify_output(report: &VerificationReport, timing: bool, json: bool) -> String {
    let output = VerifyOutput {
        report,
        violations: report.violations().count(),
        elapsed_ms: timing.then(|| millis(report.elapsed)),
    };
    render(json, &output, || {
        let mut out = format!("space: {}\nmode: {}\n", report.space, report.mode);
        for e in &report.entries {
            outcome_lines(&mut out, e);
        }
        let _ = writeln!(out, "violations: {}", output.violations);
        if let Some(ms) = output.elapsed_ms {
            let _ = writeln!(out, "elapsed: {ms} ms");
        }
        out
    })
}

#[derive(Serialize)]
struct PointResult {
    property: PropertyId,
    claim: Claim,
    x: Subset,
    y: Option<Subset>,
    holds: bool,
    witness: Option<Witness>,
}

fn point_check(
    space: &SoftCoveringSpace,
    properties: &[PropertyId],
    x: &str,
    y: Option<&str>,
    json: bool,
) -> Result<(i32, String)> {
    let x = Subset::parse(space.universe(), x)?;
    let y = y.map(|y| Subset::parse(space.universe(), y)).transpose()?;
    let mut results = Vec::new();
    for &p in properties {
        let witness = evaluate_at(space, p, &x, y.as_ref())?;
        results.push(PointResult {
            property: p,
            claim: p.claim(),
            x: x.clone(),
            y: y.clone(),
            holds: witness.is_none(),
            witness,
        });
    }
    let code = if results.iter().any(|r| !r.holds && r.claim == Claim::Holds) {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    };
    let text = render(json, &results, || {
        let mut out = String::new();
        for r in &results {
            let at = match &r.y {
                Some(y) => format!("X={} Y={}", r.x, y),
                None => format!("X={}", r.x),
            };
            match &r.witness {
                None => {
                    let _ = writeln!(out, "{} holds at {at}", r.property);
                }
                Some(w) => {
                    let _ = writeln!(out, "{} fails at {at}", r.property);
                    let _ = writeln!(out, "  witness: {w}");
                }
            }
        }
        out
    });
    Ok((code, text))
}

#[derive(Serialize)]
struct CompareReport {
    upper_closure: UpperClosureComparison,
    partition: Option<PartitionCoincidence>,
}

fn compare(space: &SoftCoveringSpace, limit: ExhaustiveLimit, json: bool) -> Result<String> {
    let report = CompareReport {
        upper_closure: compare_upper_closure(space, limit)?,
        partition: if space.soft_set().is_partition() {
            Some(check_partition_coincidence(space, limit)?)
        } else {
            None
        },
    };
    Ok(render(json, &report, || {
        let c = &report.upper_closure;
        let mut out = format!("subsets: {}\n", c.examined);
        let _ = writeln!(out, "S^-(X) = cl(X): {}", c.equal);
        let rows = [
            ("S^-(X) ⊂ cl(X)", c.upper_inside_closure, &c.upper_inside_example),
            ("cl(X) ⊂ S^-(X)", c.closure_inside_upper, &c.closure_inside_example),
            ("incomparable", c.incomparable, &c.incomparable_example),
        ];
        for (label, count, example) in rows {
            let _ = write!(out, "{label}: {count}");
            if let Some(p) = example {
                let _ = write!(out, ", first X={}: S^-(X)={}, cl(X)={}", p.x, p.upper, p.closure);
            }
            out.push('\n');
        }
        if let Some(p) = &c.soft_boundary_inside_example {
            let _ = writeln!(out, "BND_S(X) ⊂ Bnd(X): first X={}: BND_S(X)={}, Bnd(X)={}", p.x, p.soft_boundary, p.boundary);
        }
        if let Some(p) = &c.boundary_inside_soft_example {
            let _ = writeln!(out, "Bnd(X) ⊂ BND_S(X): first X={}: BND_S(X)={}, Bnd(X)={}", p.x, p.soft_boundary, p.boundary);
        }
        match &report.partition {
            None => out.push_str("partition: no\n"),
            Some(p) => {
                let _ = writeln!(out, "partition: yes, disagreements over {} subsets: {}", p.examined, p.disagreements.len());
                for d in &p.disagreements {
                    let _ = writeln!(
                        out,
                        "  X={} {}: soft {}, classical {}, topological {}",
                        d.x, d.operator, d.soft, d.classical, d.topological
                    );
                }
            }
        }
        out
    }))
}

fn sweep_output(source: &CoveringSource, report: &SweepReport, json: bool) -> String {
    render(json, report, || {
        let mut out = match source {
            CoveringSource::All { size, max_blocks: None } => format!("source: all coverings of {size} elements\n"),
            CoveringSource::All { size, max_blocks: Some(m) } => {
                format!("source: all coverings of {size} elements with at most {m} blocks\n")
            }
            CoveringSource::Random { count, seed, max_size, max_blocks, .. } => format!(
                "source: {count} random coverings of {max_size} elements, at most {max_blocks} blocks, seed {seed}\n"
            ),
        };
        let _ = writeln!(out, "spaces: {}", report.spaces);
        let _ = writeln!(out, "intersection-union-closed: {}", report.intersection_union_closed);
        for t in &report.tallies {
            let _ = writeln!(out, "{}: holds on {}, fails on {}", t.property, t.holds, t.fails);
        }
        let _ = writeln!(out, "violations: {}", report.violations.len());
        for v in &report.violations {
            let blocks: Vec<String> = v.blocks.iter().map(|b| b.to_string()).collect();
            let _ = writeln!(out, "  blocks {}", blocks.join(" "));
            outcome_lines(&mut out, &v.outcome);
        }
        out
    })
}
