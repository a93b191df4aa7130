//! Command-line front end. [`run`] takes the argument vector and output
//! streams so it can be driven from tests.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::alexander::alexander_polynomial;
use crate::covers::{branched_cover_order, branched_cover_structure};
use crate::error::{Error, KnotError};
use crate::group::DEFAULT_COSET_BUDGET;
use crate::knot::{parse_knot, KnotExpr, SurgeryParams};
use crate::surgery::{
    classify, examples_iter, surgered_pi1, Certificate, Pi1, SmoothVerdict, SurgeryReport,
    TopVerdict,
};
use crate::wirtinger::knot_group;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDETERMINED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "twistrim",
    version,
    about = "Knot-group, Alexander polynomial and branched-cover invariants for twist rim surgery"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 3 when the fundamental group is undetermined
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Alexander polynomial of a knot
    Alexander { knot: String },
    /// Fundamental group of the surgered surface complement
    Pi1 {
        knot: String,
        #[command(flatten)]
        surgery: SurgeryArgs,
        #[arg(long, default_value_t = DEFAULT_COSET_BUDGET)]
        budget: usize,
        /// Run coset enumeration even when the congruence settles the answer
        #[arg(long)]
        enumerate: bool,
    },
    /// Homology of the d-fold cyclic branched cover
    Cover {
        knot: String,
        #[arg(long)]
        d: i64,
        /// Also compute the group structure
        #[arg(long)]
        structure: bool,
    },
    /// Full surgery report
    Classify {
        knot: String,
        #[command(flatten)]
        surgery: SurgeryArgs,
        /// Surface is a degree-d curve in CP² (implies --sw)
        #[arg(long)]
        cp2: bool,
        /// Assume a nontrivial relative Seiberg-Witten invariant
        #[arg(long)]
        sw: bool,
        #[arg(long, default_value_t = DEFAULT_COSET_BUDGET)]
        budget: usize,
    },
    /// Stream ribbon examples T(p,q) # mirror(T(p,q)) that are smoothly
    /// knotted but topologically standard
    Search {
        #[arg(long)]
        pmax: u32,
        #[arg(long)]
        qmax: u32,
        #[arg(long)]
        dmax: u64,
        #[arg(long)]
        mmax: i64,
    },
}

#[derive(Args, Debug)]
struct SurgeryArgs {
    #[arg(long)]
    d: u64,
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

impl From<KnotError> for Failure {
    fn from(e: KnotError) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // A closed downstream pipe (e.g. `| head`) is a normal way to stop a search.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure(EXIT_OK, String::new());
        }
        Failure(1, e.to_string())
    }
}

/// Parses `argv` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            if !msg.is_empty() {
                let _ = writeln!(err, "error: {msg}");
            }
            code
        }
    }
}

fn knot_arg(text: &str) -> Result<KnotExpr, Failure> {
    Ok(parse_knot(text)?)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Alexander { knot } => {
            let k = knot_arg(knot)?;
            let delta = alexander_polynomial(&knot_group(&k)?)?;
            if cli.json {
                let v =
                    json!({ "knot": k.to_string(), "alexander": delta, "text": delta.to_string() });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{delta}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Pi1 {
            knot,
            surgery,
            budget,
            enumerate,
        } => {
            let k = knot_arg(knot)?;
            let params = SurgeryParams::new(surgery.d, surgery.m)?;
            let group = knot_group(&k)?;
            let (pi1, obstruction) = surgered_pi1(&group, params.d, params.m, *budget, !enumerate)?;
            if cli.json {
                let v = json!({
                    "knot": k.to_string(),
                    "d": params.d,
                    "m": params.m,
                    "pi1": pi1,
                    "pi1_obstruction": obstruction,
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{}", pi1_text(&pi1, params.d))?;
            }
            Ok(strict_code(cli.strict, &pi1))
        }
        Command::Cover { knot, d, structure } => {
            let k = knot_arg(knot)?;
            let group = knot_group(&k)?;
            let delta = alexander_polynomial(&group)?;
            let order = branched_cover_order(&delta, *d)?;
            let st = if *structure {
                Some(branched_cover_structure(&group, *d)?)
            } else {
                None
            };
            if cli.json {
                let mut v = json!({ "knot": k.to_string(), "d": d, "order": order });
                if let Some(s) = &st {
                    v["structure"] = serde_json::to_value(s).expect("invariants serialize");
                    v["structure_text"] = json!(s.to_string());
                }
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "order {order}")?;
                if let Some(s) = st {
                    writeln!(out, "structure {s}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Classify {
            knot,
            surgery,
            cp2,
            sw,
            budget,
        } => {
            let k = knot_arg(knot)?;
            let mut params = SurgeryParams::new(surgery.d, surgery.m)?.with_sw(*sw);
            if *cp2 {
                params = params.with_cp2()?;
            }
            let report = classify(&k, &params, *budget)?;
            if cli.json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                write_report(out, &report)?;
            }
            Ok(strict_code(cli.strict, &report.pi1))
        }
        Command::Search {
            pmax,
            qmax,
            dmax,
            mmax,
        } => {
            if *pmax < 2 || *qmax < 2 || *dmax < 2 || *mmax < 2 {
                return Err(Failure(
                    EXIT_USAGE,
                    "search bounds must be at least 2".into(),
                ));
            }
            for row in examples_iter(*pmax, *qmax, *dmax, *mmax) {
                let row = row?;
                if cli.json {
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&row).expect("row serializes")
                    )?;
                } else {
                    writeln!(
                        out,
                        "p={} q={} d={} m={} alexander={} order={} smooth={} top={}",
                        row.p,
                        row.q,
                        row.d,
                        row.m,
                        row.report.alexander,
                        row.report.branched_cover.order,
                        smooth_word(&row.report.smoothly_knotted),
                        top_word(&row.report.topologically_standard),
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn strict_code(strict: bool, pi1: &Pi1) -> i32 {
    if strict && pi1.is_undetermined() {
        EXIT_UNDETERMINED
    } else {
        EXIT_OK
    }
}

fn certificate_word(c: Certificate) -> &'static str {
    match c {
        Certificate::Theorem => "theorem",
        Certificate::Enumeration => "enumeration",
        Certificate::Abelianization => "abelianization",
        Certificate::BudgetExhausted => "budget exhausted",
    }
}

fn pi1_text(pi1: &Pi1, d: u64) -> String {
    match *pi1 {
        Pi1::Cyclic { order, certificate } => {
            format!("pi1 = Z/{order} [{}]", certificate_word(certificate))
        }
        Pi1::Finite { order, certificate } => format!(
            "pi1 finite of order {order}, not Z/{d} [{}]",
            certificate_word(certificate)
        ),
        Pi1::Undetermined { certificate } => {
            format!("pi1 undetermined [{}]", certificate_word(certificate))
        }
    }
}

fn smooth_word(v: &SmoothVerdict) -> &'static str {
    match v {
        SmoothVerdict::Yes { .. } => "yes",
        SmoothVerdict::NoEvidence { .. } => "no-evidence",
    }
}

fn top_word(v: &TopVerdict) -> &'static str {
    match v {
        TopVerdict::Yes { .. } => "yes",
        TopVerdict::No { .. } => "no",
        TopVerdict::Unknown { .. } => "unknown",
    }
}

fn write_report(out: &mut dyn Write, r: &SurgeryReport) -> std::io::Result<()> {
    writeln!(out, "knot: {}", r.knot)?;
    writeln!(out, "d = {}, m = {}", r.d, r.m)?;
    writeln!(out, "alexander: {}", r.alexander)?;
    writeln!(out, "{}", pi1_text(&r.pi1, r.d))?;
    writeln!(
        out,
        "pi1 obstruction: {}",
        if r.pi1_obstruction { "yes" } else { "no" }
    )?;
    writeln!(out, "branched cover order: {}", r.branched_cover.order)?;
    writeln!(
        out,
        "ribbon: {}",
        match r.ribbon {
            crate::surgery::Ribbon::Certified => "certified",
            crate::surgery::Ribbon::Unknown => "unknown",
        }
    )?;
    match &r.smoothly_knotted {
        SmoothVerdict::Yes { reason } | SmoothVerdict::NoEvidence { reason } => writeln!(
            out,
            "smoothly knotted: {} ({reason})",
            smooth_word(&r.smoothly_knotted)
        )?,
    }
    match &r.topologically_standard {
        TopVerdict::Yes { reason } => writeln!(out, "topologically standard: yes ({reason})")?,
        TopVerdict::No { failed } | TopVerdict::Unknown { failed } => writeln!(
            out,
            "topologically standard: {} (failed: {})",
            top_word(&r.topologically_standard),
            failed.join("; ")
        )?,
    }
    if let Some(c) = &r.cp2 {
        writeln!(out, "cp2: degree {}, genus {}", c.degree, c.genus)?;
    }
    Ok(())
}
