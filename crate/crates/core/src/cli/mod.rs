//! Command-line front end. [`run`] parses arguments, writes the report and
//! returns the exit code: 0 when every check passed, 1 when some check
//! failed, 2 for parse errors, 3 when a size cap is hit and 4 for any other
//! failed precondition.

pub mod spec;
pub mod suite;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::abgroup::FgAbGroup;
use crate::cohomology::{herbrand, tate};
use crate::error::Error;
use crate::localfield::{build_tower, Check};

pub const DEFAULT_SEED: u64 = 20240611;

#[derive(Parser, Debug)]
#[command(name = "tatecoh", version, about = "Exact Tate cohomology of finite groups and unramified local reciprocity")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tate cohomology groups over a range of degrees.
    Tate {
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        module: String,
        /// `a..b`, inclusive.
        #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
        range: String,
    },
    /// Herbrand quotient `|H_T^0| / |H_T^1|` over a cyclic group.
    Herbrand {
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        module: String,
    },
    /// Unramified local reciprocity for `L/Q_p` of degree `f` at precision `p^N`.
    Reciprocity {
        #[arg(short = 'p', long = "prime")]
        p: u64,
        #[arg(short = 'f', long = "degree")]
        f: usize,
        #[arg(short = 'N', long = "precision")]
        n: u32,
    },
    /// A batch of identity checks.
    Suite { name: SuiteName },
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    Identities,
    Hilbert90,
    TateTheorem,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Malformed(_) => 2,
        Error::SizeCap { .. } => 3,
        _ => 4,
    }
}

struct Report {
    json: Value,
    text: String,
    pass: bool,
}

fn factors(g: &FgAbGroup) -> Vec<String> {
    g.invariant_factors().iter().map(|x| x.to_string()).collect()
}

fn show(g: &FgAbGroup) -> String {
    let f = g.invariant_factors();
    if f.is_empty() {
        return "0".into();
    }
    f.iter().map(|d| if d.sign() == num_bigint::Sign::NoSign { "Z".into() } else { format!("Z/{d}") }).collect::<Vec<_>>().join(" + ")
}

fn checks_text(checks: &[Check]) -> String {
    let mut s = String::new();
    for c in checks {
        let mark = if c.pass { "pass" } else { "FAIL" };
        if c.detail.is_empty() {
            s += &format!("{mark}  {}\n", c.name);
        } else {
            s += &format!("{mark}  {}  ({})\n", c.name, c.detail);
        }
    }
    s
}

fn execute(cli: &Cli) -> crate::Result<Report> {
    match &cli.command {
        Command::Tate { group, module, range } => {
            let g = group.as_deref().map(spec::parse_group).transpose()?;
            let m = spec::parse_module(g.as_ref(), module)?;
            let (lo, hi) = spec::parse_range(range)?;
            let mut rows = Vec::new();
            let mut text = format!("group order {}, module {module} of rank {}\n", m.group().order(), m.rank());
            for r in lo..=hi {
                let h = tate(&m, r)?;
                text += &format!("H_T^{r:<3} {}\n", show(h.group()));
                rows.push(json!({ "r": r, "invariant_factors": factors(h.group()), "group": h.group().canonical() }));
            }
            let json = json!({
                "command": "tate",
                "inputs": { "group": group, "module": module, "range": [lo, hi] },
                "module": m,
                "results": rows,
                "pass": true,
            });
            Ok(Report { json, text, pass: true })
        }
        Command::Herbrand { group, module } => {
            let g = group.as_deref().map(spec::parse_group).transpose()?;
            let m = spec::parse_module(g.as_ref(), module)?;
            let h = herbrand(&m)?;
            let h0 = tate(&m, 0)?;
            let h1 = tate(&m, 1)?;
            let json = json!({
                "command": "herbrand",
                "inputs": { "group": group, "module": module },
                "results": { "h": h.to_string(), "h0": factors(h0.group()), "h1": factors(h1.group()) },
                "pass": true,
            });
            let text = format!("H_T^0 = {}\nH_T^1 = {}\nh = {h}\n", show(h0.group()), show(h1.group()));
            Ok(Report { json, text, pass: true })
        }
        Command::Reciprocity { p, f, n } => {
            let t = build_tower(*p, *f, *n)?;
            let report = crate::localfield::reciprocity_check(&t, cli.seed)?;
            let pass = report.all_pass();
            let mut text = format!(
                "L/K unramified of degree {f} over Q_{p}, precision {p}^{n}\nK^×/Nm(L^×) = {}\nunits checked: {}\n",
                if report.norm_quotient.is_empty() { "0".into() } else { format!("Z/{}", report.norm_quotient.join(" + Z/")) },
                report.units_checked,
            );
            text += &checks_text(&report.checks);
            let json = json!({
                "command": "reciprocity",
                "inputs": { "p": p, "f": f, "N": n, "seed": cli.seed },
                "results": report,
                "pass": pass,
            });
            Ok(Report { json, text, pass })
        }
        Command::Suite { name } => {
            let checks = match name {
                SuiteName::Identities => suite::identities(cli.seed)?,
                SuiteName::Hilbert90 => suite::hilbert90()?,
                SuiteName::TateTheorem => suite::tate_theorem(cli.seed)?,
            };
            let pass = checks.iter().all(|c| c.pass);
            let passed = checks.iter().filter(|c| c.pass).count();
            let text = format!("{}{passed}/{} checks passed\n", checks_text(&checks), checks.len());
            let json = json!({
                "command": "suite",
                "inputs": { "name": name, "seed": cli.seed },
                "results": checks,
                "pass": pass,
            });
            Ok(Report { json, text, pass })
        }
    }
}

/// Runs the command line, writing the report to `out` and errors to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok(r) => {
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&r.json).expect("reports serialize"))
            } else {
                write!(out, "{}elapsed {} ms\n", r.text, start.elapsed().as_millis())
            };
            if r.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                let _ = writeln!(out, "{}", json!({ "error": e.to_string(), "exit_code": code }));
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}
