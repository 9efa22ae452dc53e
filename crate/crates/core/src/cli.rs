//! The `grouplab` command line. [`run`] is the whole program; the binary
//! only forwards `std::env::args` and exits with the returned code.
//!
//! Exit codes: 0 success, 1 a check failed or a probe found no witness,
//! 2 usage or input error, 3 resource cap exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::corpus::corpus;
use crate::error::{Error, Result};
use crate::group::read_generator_file;
use crate::paperlab::{
    self, alt10_probe, exponential_subgroups, min_power_by_membership,
    probe_verdict, relative_order_by_membership, tally, Caps, GroupContext, ProbeKind,
    RunOptions, Status, Verdict, ALT10_PROBE_ID,
};
use crate::perm::Perm;
use crate::structure;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "grouplab", version, about = "Subgroup lattices and exhaustive theorem checks for small permutation groups")]
struct Cli {
    #[command(flatten)]
    global: GlobalFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalFlags {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order for which a multiplication table and lattice are built.
    #[arg(long, global = true, default_value_t = Caps::default().max_order)]
    max_order: usize,
    /// Largest number of subgroups a lattice may have.
    #[arg(long, global = true, default_value_t = Caps::default().max_subgroups)]
    max_subgroups: usize,
    /// Largest number of elements enumerated outside the lattice code.
    #[arg(long, global = true, default_value_t = Caps::default().max_elements)]
    max_elements: usize,
    /// Report elapsed milliseconds in verdicts (makes output run-dependent).
    #[arg(long, global = true)]
    timings: bool,
}

impl GlobalFlags {
    fn caps(&self) -> Caps {
        Caps {
            max_order: self.max_order,
            max_subgroups: self.max_subgroups,
            max_elements: self.max_elements,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structure report: order, exponent, Sylow data, Fitting subgroup, series.
    Analyze {
        #[arg(long)]
        group: String,
    },
    /// Run named checks on one group.
    Verify {
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',', required = true)]
        check: Vec<String>,
        #[arg(long)]
        group: String,
    },
    /// Run every check on every corpus group, then the probes.
    VerifyAll {
        /// Only the registry over the corpus; no probes.
        #[arg(long)]
        corpus_only: bool,
        /// Worker threads (defaults to the number of CPUs).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// S(G) by brute force, compared with the Fitting subgroup.
    SSet {
        #[arg(long)]
        group: String,
    },
    /// Relative order of an element with respect to a subgroup.
    Relorder {
        #[arg(long)]
        group: String,
        /// Generator file for the subgroup.
        #[arg(long)]
        subgroup: PathBuf,
        /// Element in cycle notation.
        #[arg(long)]
        element: String,
    },
    /// List the subgroup lattice, or write it as a DOT graph.
    Lattice {
        #[arg(long)]
        group: String,
        /// Write DOT to this path, or to stdout when no path is given.
        #[arg(long, num_args = 0..=1, default_missing_value = "-")]
        dot: Option<String>,
    },
    /// Search for one of the known counterexamples, or run the Alt(10) probe.
    Probe {
        /// POWERSET_NOT_CLOSED, EXP_NOT_SUBNORMAL, EXP_INDEX_NOT_MULT,
        /// EXP_JOIN_FAIL, EXP_NOT_INHERITED or ALT10.
        #[arg(long)]
        kind: String,
        /// Group to search; defaults to the group the witness is known in.
        #[arg(long)]
        group: Option<String>,
    },
}

/// Runs the program with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the program writing to the given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit code for an error that aborted a command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceCap(_) => EXIT_CAP,
        Error::InternalDisagreement(_) | Error::ValidationFailed(_) => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io {
        path: "<output>".into(),
        reason: e.to_string(),
    }
}

fn print_json(out: &mut dyn Write, value: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    writeln!(out, "{text}").map_err(io)
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let flags = &cli.global;
    let caps = flags.caps();
    match &cli.command {
        Command::Analyze { group } => analyze(group, caps, out),
        Command::Verify { check, group } => {
            for id in check {
                paperlab::lookup(id)?;
            }
            let ctx = GroupContext::from_spec(group, caps)?;
            let verdicts: Vec<Verdict> = check
                .iter()
                .map(|id| paperlab::verify(id, &ctx))
                .collect::<Result<_>>()?;
            emit_verdicts(&verdicts, flags, out, err)?;
            Ok(verdicts_exit_code(&verdicts))
        }
        Command::VerifyAll {
            corpus_only,
            threads,
        } => {
            if *threads == Some(0) {
                return Err(Error::bad_param("threads", "must be positive"));
            }
            let opts = RunOptions {
                caps,
                threads: *threads,
                corpus_only: *corpus_only,
            };
            let verdicts = paperlab::verify_all(&corpus(), &opts)?;
            emit_verdicts(&verdicts, flags, out, err)?;
            // Skips are expected here: probe-only groups never get lattice checks.
            Ok(if tally(&verdicts).1 > 0 { EXIT_FAILED } else { EXIT_OK })
        }
        Command::SSet { group } => s_set(group, caps, flags.json, out),
        Command::Relorder {
            group,
            subgroup,
            element,
        } => relorder(group, subgroup, element, flags.json, out),
        Command::Lattice { group, dot } => lattice(group, dot.as_deref(), caps, flags.json, out),
        Command::Probe { kind, group } => {
            let verdict = if kind == ALT10_PROBE_ID {
                if let Some(g) = group {
                    if g != "alt:10" {
                        return Err(Error::bad_param("group", "the ALT10 probe always runs on alt:10"));
                    }
                }
                alt10_probe()
            } else {
                let kind: ProbeKind = kind.parse()?;
                let spec = group.as_deref().unwrap_or(kind.default_group());
                probe_verdict(kind, &GroupContext::from_spec(spec, caps)?)
            };
            emit_verdicts(std::slice::from_ref(&verdict), flags, out, err)?;
            Ok(verdicts_exit_code(std::slice::from_ref(&verdict)))
        }
    }
}

fn verdicts_exit_code(verdicts: &[Verdict]) -> i32 {
    let (_, failed, skipped) = tally(verdicts);
    if failed > 0 {
        EXIT_FAILED
    } else if skipped > 0 {
        EXIT_CAP
    } else {
        EXIT_OK
    }
}

fn emit_verdicts(verdicts: &[Verdict], flags: &GlobalFlags, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    if flags.json {
        let array: Vec<Value> = verdicts.iter().map(|v| v.to_json(flags.timings)).collect();
        print_json(out, &Value::Array(array))?;
    } else {
        for v in verdicts {
            let mut line = format!("{:<8} {:<20} {}", v.status.as_str().to_uppercase(), v.check, v.group);
            if let Status::Skipped(reason) = &v.status {
                line.push_str(&format!("  ({reason})"));
            }
            if flags.timings {
                line.push_str(&format!("  {:.1} ms", v.elapsed.as_secs_f64() * 1000.0));
            }
            writeln!(out, "{line}").map_err(io)?;
            if let Some(w) = &v.witness {
                writeln!(out, "         witness: {w}").map_err(io)?;
            }
        }
    }
    let (p, f, s) = tally(verdicts);
    writeln!(err, "{p}/{f}/{s}").map_err(io)?;
    Ok(())
}

fn analyze(spec: &str, caps: Caps, out: &mut dyn Write) -> Result<i32> {
    let ctx = GroupContext::from_spec(spec, caps)?;
    let exponent = ctx.group().exponent(caps.max_elements)?;
    let lattice = ctx.lattice()?;
    let report = structure::analyze(lattice)?;
    if exponent != report.exponent as u128 {
        return Err(Error::InternalDisagreement(format!(
            "exponent {exponent} from cycle types or enumeration, {} from the table",
            report.exponent
        )));
    }
    let mut value = report.to_json();
    value["group"] = json!(spec);
    print_json(out, &value)?;
    Ok(EXIT_OK)
}

fn s_set(spec: &str, caps: Caps, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let ctx = GroupContext::from_spec(spec, caps)?;
    let s = ctx.s_set()?;
    let f = ctx.fitting()?;
    let equal = s == f;
    if as_json {
        print_json(out, &json!({
            "group": spec,
            "s_set": s.describe_full(),
            "fitting": f.describe_full(),
            "equal": equal,
        }))?;
    } else {
        let gens = |h: &crate::Subgroup| {
            let g: Vec<String> = h.generators().iter().map(Perm::to_string).collect();
            if g.is_empty() { "()".to_string() } else { g.join(", ") }
        };
        writeln!(out, "S(G): order {} generated by {}", s.order(), gens(s)).map_err(io)?;
        writeln!(out, "F(G): order {} generated by {}", f.order(), gens(f)).map_err(io)?;
        writeln!(out, "equal: {equal}").map_err(io)?;
    }
    Ok(if equal { EXIT_OK } else { EXIT_FAILED })
}

fn relorder(spec: &str, subgroup: &Path, element: &str, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let g = crate::group::construct(&crate::GroupSpec::parse(spec)?)?;
    let h = read_generator_file(subgroup)?;
    if h.degree() != g.degree() {
        return Err(Error::DegreeMismatch(h.degree(), g.degree()));
    }
    if !h.is_subgroup_of(&g)? {
        return Err(Error::NotContained);
    }
    let x = Perm::parse(element, g.degree())?;
    if !g.contains(&x)? {
        return Err(Error::NotInParent);
    }
    let o = relative_order_by_membership(&h, &x)?;
    let m = min_power_by_membership(&h, &x)?;
    if o != m {
        return Err(Error::InternalDisagreement(format!(
            "relative order {o} but least power into the subgroup {m}"
        )));
    }
    if as_json {
        print_json(out, &json!({
            "group": spec,
            "element": x.to_string(),
            "element_order": x.order().to_string(),
            "relative_order": o.to_string(),
            "min_power_into": m.to_string(),
        }))?;
    } else {
        writeln!(out, "relative order of {x}: {o} (element order {})", x.order()).map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn lattice(spec: &str, dot: Option<&str>, caps: Caps, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let ctx = GroupContext::from_spec(spec, caps)?;
    let l = ctx.lattice()?;
    let exponential = ctx.exponential()?;
    match dot {
        Some("-") => write!(out, "{}", l.to_dot(exponential)).map_err(io)?,
        Some(path) => std::fs::write(path, l.to_dot(exponential)).map_err(|e| Error::Io {
            path: path.to_string(),
            reason: e.to_string(),
        })?,
        None if as_json => {
            let rows: Vec<Value> = l
                .iter()
                .map(|(i, s)| {
                    let mut row = s.describe();
                    row["index"] = json!(s.index());
                    row["normal"] = json!(l.is_normal(i));
                    row["exponential"] = json!(exponential[i]);
                    row["subnormal_defect"] = json!(s.subnormal_defect());
                    row
                })
                .collect();
            print_json(out, &json!({ "group": spec, "subgroups": rows }))?;
        }
        None => {
            writeln!(out, "{:>5} {:>6} {:>6}  {:<6} {:<11} {:<7} generators", "#", "order", "index", "normal", "exponential", "defect")
                .map_err(io)?;
            for (i, s) in l.iter() {
                let gens: Vec<String> = s.generators().iter().map(Perm::to_string).collect();
                let defect = s.subnormal_defect().map_or("-".to_string(), |d| d.to_string());
                writeln!(
                    out,
                    "{:>5} {:>6} {:>6}  {:<6} {:<11} {:<7} {}",
                    i,
                    s.order(),
                    s.index(),
                    l.is_normal(i),
                    exponential[i],
                    defect,
                    gens.join(", ")
                )
                .map_err(io)?;
            }
            let count = exponential_subgroups(l).len();
            writeln!(out, "{} subgroups, {} exponential", l.len(), count).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}
