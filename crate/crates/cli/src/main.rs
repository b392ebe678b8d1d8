//! `fcy`: build grid lattices J(m,n), run the checks, export tables and quivers.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use fcy_core::antichain::{antichains_below, build_resolution};
use fcy_core::auslander::{complement_bijection, find_isomorphism, higher_auslander, quadratic_dual};
use fcy_core::combinatorics::{inverse_phi_r, orbit_trace, phi_r, yildirim_antichain, EnhancedPartition};
use fcy_core::export::{self, antichain_row, AntichainRow, SCHEMA};
use fcy_core::k0::{coxeter_order_check, coxeter_polynomial, poly_string, roots_on_unit_circle};
use fcy_core::lattice::build_lattice_capped;
use fcy_core::suite::{run_check, CheckId, CheckOutcome, Faults, Status};
use fcy_core::ycat::{presentation, Variant};
use fcy_core::{Configuration, GridLattice, Partition, QuiverPresentation};

#[derive(Parser, Debug)]
#[command(name = "fcy", version, about = "Fractional Calabi-Yau checks on the grid lattices J(m,n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Rows of the grid.
    #[arg(long, global = true, default_value_t = 2)]
    m: usize,
    /// Columns of the grid.
    #[arg(long, global = true, default_value_t = 2)]
    n: i32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Refuse lattices with more elements than this.
    #[arg(long, global = true, default_value_t = 100_000)]
    cap: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Elements of J(m,n); DOT gives the covering relation.
    Lattice,
    /// Classify antichains: every antichain below --alpha, or the family C_alpha.
    Antichain {
        #[arg(long)]
        alpha: Option<String>,
    },
    /// The projective resolution of the family member C_alpha.
    Resolve {
        #[arg(long)]
        alpha: String,
    },
    /// Hom-degree table for all pairs, cross-checked against the linear-algebra oracle.
    Hom,
    /// The f~ trace of --alpha (a partition) or --config (beads), with the sum of |S|.
    Orbit {
        #[arg(long, conflicts_with = "config")]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        config: Option<String>,
    },
    /// The Serre matrix on K0: order check and Coxeter polynomial.
    Coxeter,
    /// Quiver presentation of Y(m,n) in the generators u, v or w.
    Presentation {
        #[arg(long, default_value = "u")]
        variant: String,
    },
    /// The higher Auslander algebra A_s^d, its quadratic dual, or the duality check.
    Auslander {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        dual: bool,
        /// Compare A_s^d with the dual of A_{d+2}^{s-2}.
        #[arg(long)]
        check: bool,
    },
    /// Run the checks on J(m,n).
    Verify {
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Comma-separated subset of checks.
        #[arg(long, hide = true, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, hide = true)]
        corrupt_sign: bool,
    },
}

/// Rendered output and whether every requested check held.
struct Report {
    body: String,
    ok: bool,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, ok: true }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn unsupported(cmd: &str, f: Format) -> anyhow::Error {
    anyhow::anyhow!("{cmd} has no {f:?} output")
}

fn lattice(c: &Common) -> Result<GridLattice> {
    Ok(build_lattice_capped(c.m, c.n, c.cap)?)
}

fn partition(c: &Common, s: &str) -> Result<Partition> {
    let p = Partition::parse(s, c.n)?;
    if p.m() != c.m {
        bail!("partition {p} has {} parts, expected m = {}", p.m(), c.m);
    }
    Ok(p)
}

fn presentation_out(p: &QuiverPresentation, f: Format) -> Result<String> {
    match f {
        Format::Text => Ok(p.to_text()),
        Format::Json => Ok(pretty(&p.to_json())),
        Format::Dot => Ok(p.to_dot()),
        Format::Csv => Err(unsupported("presentation", f)),
    }
}

fn cmd_lattice(c: &Common) -> Result<Report> {
    let l = lattice(c)?;
    Ok(Report::ok(match c.format {
        Format::Text => export::lattice_text(&l),
        Format::Json => pretty(&export::lattice_json(&l)),
        Format::Dot => export::lattice_dot(&l),
        Format::Csv => return Err(unsupported("lattice", c.format)),
    }))
}

fn cmd_antichain(c: &Common, alpha: Option<&str>) -> Result<Report> {
    let l = lattice(c)?;
    let rows: Vec<AntichainRow> = match alpha {
        Some(a) => antichains_below(&partition(c, a)?).iter().map(antichain_row).collect(),
        None => l.elements.iter().map(|a| antichain_row(&yildirim_antichain(&EnhancedPartition::plain(a)))).collect(),
    };
    Ok(Report::ok(match c.format {
        Format::Json => pretty(&export::antichains_json(&rows)),
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let f = r.flags;
                let _ = writeln!(
                    s,
                    "{{{}}} below {}: strong={} inclusive={} intersective={} boolean={} witness={}",
                    r.members.join(" "),
                    r.top,
                    f.strong,
                    f.inclusive,
                    f.intersective,
                    f.boolean,
                    r.witness
                );
            }
            s
        }
        _ => return Err(unsupported("antichain", c.format)),
    }))
}

fn cmd_resolve(c: &Common, alpha: &str) -> Result<Report> {
    lattice(c)?;
    let a = partition(c, alpha)?;
    let r = build_resolution(&yildirim_antichain(&EnhancedPartition::plain(&a)));
    Ok(Report::ok(match c.format {
        Format::Text => export::resolution_text(&r),
        Format::Json => pretty(&export::resolution_json(&r)),
        _ => return Err(unsupported("resolve", c.format)),
    }))
}

fn cmd_hom(c: &Common) -> Result<Report> {
    let rows = export::hom_table(&lattice(c)?)?;
    let ok = rows.iter().all(|r| r.agrees);
    let body = match c.format {
        Format::Csv => export::hom_table_csv(&rows)?,
        Format::Json => pretty(&export::hom_table_json(&rows)),
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let deg = r.degree.map_or("-".to_string(), |d| d.to_string());
                let _ = writeln!(s, "{} -> {}: degree {deg}{}", r.alpha, r.beta, if r.agrees { "" } else { "  MISMATCH" });
            }
            let bad = rows.iter().filter(|r| !r.agrees).count();
            let _ = writeln!(s, "{} pairs, {bad} disagree with the oracle", rows.len());
            s
        }
        Format::Dot => return Err(unsupported("hom", c.format)),
    };
    Ok(Report { body, ok })
}

fn cmd_orbit(c: &Common, alpha: Option<&str>, config: Option<&str>) -> Result<Report> {
    let start = match (alpha, config) {
        (Some(a), _) => EnhancedPartition::plain(&partition(c, a)?),
        (None, Some(r)) => inverse_phi_r(&Configuration::parse(r, c.m, c.n)?),
        (None, None) => bail!("orbit needs --alpha or --config"),
    };
    let first = phi_r(&start)?;
    let steps = orbit_trace(&start)?;
    let total: usize = steps.iter().map(|s| s.s).sum();
    let want = c.m as i64 * i64::from(c.n);
    let ok = steps.last().map(|s| &s.configuration) == Some(&first) && total as i64 == want;
    let body = match c.format {
        Format::Json => pretty(&export::orbit_json(c.m, c.n, &first.to_string(), &steps)),
        Format::Text => {
            let mut s = format!("start {first}\n");
            for (i, st) in steps.iter().enumerate() {
                let _ = writeln!(s, "{:>3}: {}  |S| = {}", i + 1, st.configuration, st.s);
            }
            let _ = writeln!(s, "{} steps, sum |S| = {total} (mn = {want})", steps.len());
            s
        }
        _ => return Err(unsupported("orbit", c.format)),
    };
    Ok(Report { body, ok })
}

fn cmd_coxeter(c: &Common) -> Result<Report> {
    let l = lattice(c)?;
    let r = coxeter_order_check(c.m, c.n)?;
    let body = match c.format {
        Format::Json => pretty(&export::coxeter_json(&r)),
        Format::Text => {
            let p = coxeter_polynomial(&l)?;
            let period = 2 * (c.m + c.n as usize + 1);
            format!(
                "M^{} = {} Id: {}\nCoxeter polynomial: {}\nroots are {}-th roots of unity: {}\n",
                r.exponent,
                r.sign,
                r.holds,
                poly_string(&p),
                period,
                roots_on_unit_circle(&p, period)
            )
        }
        _ => return Err(unsupported("coxeter", c.format)),
    };
    Ok(Report { body, ok: r.holds })
}

fn cmd_presentation(c: &Common, variant: &str) -> Result<Report> {
    lattice(c)?;
    let p = presentation(c.m, c.n, Variant::parse(variant)?)?;
    Ok(Report::ok(presentation_out(&p, c.format)?))
}

fn cmd_auslander(c: &Common, s: usize, d: usize, dual: bool, check: bool) -> Result<Report> {
    let a = higher_auslander(s, d)?;
    if !check {
        let p = if dual { quadratic_dual(&a)? } else { a };
        return Ok(Report::ok(presentation_out(&p, c.format)?));
    }
    if s < 2 {
        bail!("the duality check needs s >= 2");
    }
    let b = quadratic_dual(&higher_auslander(d + 2, s - 2)?)?;
    let vm = complement_bijection(s, d, &a, &b)?;
    let witness = find_isomorphism(&a, &b, &vm)?;
    let ok = witness.is_some();
    let flipped = witness.as_ref().map(|w| w.scaling.iter().filter(|&&x| x < 0).count());
    let body = match c.format {
        Format::Json => pretty(&json!({
            "schema": SCHEMA,
            "s": s,
            "d": d,
            "isomorphic": ok,
            "rescaled_arrows": flipped,
        })),
        Format::Text => match flipped {
            Some(k) => format!("A_{s}^{d} is the quadratic dual of A_{}^{} ({k} arrows rescaled by -1)\n", d + 2, s - 2),
            None => format!("A_{s}^{d} does not match the quadratic dual of A_{}^{}\n", d + 2, s - 2),
        },
        _ => return Err(unsupported("auslander --check", c.format)),
    };
    Ok(Report { body, ok })
}

fn cmd_verify(c: &Common, jobs: usize, checks: &[String], corrupt_sign: bool) -> Result<Report> {
    lattice(c)?;
    let ids: Vec<CheckId> = if checks.is_empty() {
        CheckId::ALL.to_vec()
    } else {
        checks.iter().map(|s| CheckId::parse(s)).collect::<fcy_core::Result<_>>()?
    };
    let faults = Faults { corrupt_sign };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().context("worker pool")?;
    let outcomes: Vec<CheckOutcome> =
        pool.install(|| ids.par_iter().map(|&id| run_check(id, c.m, c.n, faults)).collect::<fcy_core::Result<_>>())?;
    let ok = outcomes.iter().all(CheckOutcome::passed);
    let body = match c.format {
        Format::Json => pretty(&json!({
            "schema": SCHEMA,
            "m": c.m,
            "n": c.n,
            "passed": ok,
            "checks": outcomes,
        })),
        Format::Text => {
            let mut s = format!("verify J({},{})\n", c.m, c.n);
            for o in &outcomes {
                let tag = match o.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skip => "SKIP",
                };
                let _ = writeln!(s, "  {tag} {:<12} {}", o.check.name(), o.detail);
            }
            let _ = writeln!(s, "{}", if ok { "all checks pass" } else { "some checks fail" });
            s
        }
        _ => return Err(unsupported("verify", c.format)),
    };
    Ok(Report { body, ok })
}

fn run(cli: &Cli) -> Result<Report> {
    let c = &cli.common;
    match &cli.command {
        Command::Lattice => cmd_lattice(c),
        Command::Antichain { alpha } => cmd_antichain(c, alpha.as_deref()),
        Command::Resolve { alpha } => cmd_resolve(c, alpha),
        Command::Hom => cmd_hom(c),
        Command::Orbit { alpha, config } => cmd_orbit(c, alpha.as_deref(), config.as_deref()),
        Command::Coxeter => cmd_coxeter(c),
        Command::Presentation { variant } => cmd_presentation(c, variant),
        Command::Auslander { s, d, dual, check } => cmd_auslander(c, *s, *d, *dual, *check),
        Command::Verify { jobs, checks, corrupt_sign } => cmd_verify(c, *jobs, checks, *corrupt_sign),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.common.out {
        Some(path) => fs::write(path, &report.body).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{}", report.body);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
