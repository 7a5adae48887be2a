//! Argument handling and output formatting for the `hookkron` binary.

pub mod verify;

use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hookkron::hook_rule::{counts, decompose_tensor_hook, pw_m, pw_set};
use hookkron::render::{picture_ascii_with_route, tableau_ascii};
use hookkron::{lr, Balance, Cell, PartialTableau, Partition, Picture, TypedPicture};
use serde::Serialize;
use serde_json::json;

#[derive(Debug, Parser)]
#[command(name = "hookkron", version, about = "Kronecker products with hooks, counted by pictures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Ascii, global = true)]
    pub format: Format,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Directory for persisted character tables.
    #[arg(long, env = "HOOKKRON_CACHE", global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Ascii,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose L(λ) ⊗ L(n−m, 1^m) by counting pictures.
    Decompose {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        m: usize,
    },
    /// Multiplicities in L(λ) ⊗ Λ_m(ℂⁿ).
    Exterior {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        m: usize,
        /// Restrict to a single μ.
        #[arg(long)]
        mu: Option<Partition>,
    },
    /// List the pictures of type (λ, μ; ζ), for one ζ or for every ζ of size n−m.
    Pictures {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long, conflicts_with = "m", required_unless_present = "m")]
        zeta: Option<Partition>,
        #[arg(long)]
        m: Option<usize>,
        /// Overlay the bumping route of this cocorner of λ/ζ, e.g. `1,3`.
        #[arg(long)]
        route: Option<Cell>,
    },
    /// Littlewood–Richardson coefficient LR^λ_{ζ,ξ}.
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        zeta: Partition,
        #[arg(long)]
        xi: Partition,
    },
    /// Check picture counts against the character oracle for every λ, μ, m.
    Verify {
        /// Largest n in the sweep.
        #[arg(long)]
        n: usize,
        /// Smallest n in the sweep.
        #[arg(long, default_value_t = 1)]
        n_min: usize,
    },
    /// Pretty-print a tableau or picture given as JSON.
    Render {
        /// Read from this file instead of stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Overlay a bumping route: a value for tableaux, a cocorner for pictures.
        #[arg(long)]
        route: Option<String>,
    },
}

/// Process exit status for a finished command.
pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8> {
    hookkron::oracle::set_cache_dir(cli.cache.clone());
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            bail!("--jobs must be at least 1");
        }
        builder = builder.num_threads(j);
    }
    let pool = builder.build()?;
    // buffered so that the worker pool never touches the caller's writer
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut buf));
    out.write_all(&buf)?;
    result
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<u8> {
    match &cli.command {
        Command::Decompose { lambda, m } => decompose(cli.format, lambda, *m, out),
        Command::Exterior { lambda, m, mu } => exterior(cli.format, lambda, *m, mu.as_ref(), out),
        Command::Pictures { lambda, mu, zeta, m, route } => {
            pictures(cli.format, lambda, mu, zeta.as_ref(), *m, *route, out)
        }
        Command::Lr { lambda, zeta, xi } => {
            let v = lr(lambda, zeta, xi)?;
            match cli.format {
                Format::Json => writeln!(out, "{}", json!({"lambda": lambda, "zeta": zeta, "xi": xi, "lr": v}))?,
                Format::Tsv => writeln!(out, "{lambda}\t{zeta}\t{xi}\t{v}")?,
                Format::Ascii => writeln!(out, "{v}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { n, n_min } => {
            hookkron::oracle::character_table(*n)?;
            let report = verify::sweep(&verify::PictureCounter, *n_min, *n)?;
            write_report(&report, out)
        }
        Command::Render { input, route } => render(cli.format, input.as_ref(), route.as_deref(), out),
    }
}

pub fn write_report(report: &verify::Report, out: &mut dyn Write) -> Result<u8> {
    for f in &report.failures {
        writeln!(out, "FAIL {f}")?;
    }
    if report.passed() {
        writeln!(out, "{} checks: all pass", report.checks)?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "{} checks: {} failed", report.checks, report.failures.len())?;
        Ok(EXIT_VERIFY_FAILED)
    }
}

fn check_m(n: usize, m: usize, inclusive: bool) -> Result<()> {
    let ok = if inclusive { m <= n } else { m < n };
    if !ok {
        let bound = if inclusive { "<=" } else { "<" };
        bail!("m out of range: need 0 <= m {bound} {n}, got {m}");
    }
    Ok(())
}

fn decompose(format: Format, lambda: &Partition, m: usize, out: &mut dyn Write) -> Result<u8> {
    check_m(lambda.size(), m, false)?;
    let table = decompose_tensor_hook(lambda, m)?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&table)?)?,
        Format::Tsv => {
            writeln!(out, "mu\tph\tpw\tby_zeta")?;
            for r in &table.rows {
                writeln!(out, "{}\t{}\t{}\t{}", r.mu, r.ph, r.pw, serde_json::to_string(&r.by_zeta)?)?;
            }
        }
        Format::Ascii => {
            for r in &table.rows {
                writeln!(out, "{} → ph={} pw={}", r.mu, r.ph, r.pw)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn exterior(format: Format, lambda: &Partition, m: usize, mu: Option<&Partition>, out: &mut dyn Write) -> Result<u8> {
    let n = lambda.size();
    check_m(n, m, true)?;
    #[derive(Serialize)]
    struct Row {
        mu: Partition,
        pw: usize,
    }
    let rows: Vec<Row> = match mu {
        Some(mu) => vec![Row { mu: mu.clone(), pw: counts(lambda, mu, m)?.pw }],
        None => {
            use rayon::prelude::*;
            let rows: Vec<hookkron::Result<Row>> = Partition::all(n)
                .into_par_iter()
                .map(|mu| Ok(Row { pw: counts(lambda, &mu, m)?.pw, mu }))
                .collect();
            let mut kept = Vec::new();
            for r in rows {
                let r = r?;
                if r.pw > 0 {
                    kept.push(r);
                }
            }
            kept
        }
    };
    match format {
        Format::Json => writeln!(out, "{}", json!({"lambda": lambda, "m": m, "rows": rows}))?,
        Format::Tsv => {
            writeln!(out, "mu\tpw")?;
            for r in &rows {
                writeln!(out, "{}\t{}", r.mu, r.pw)?;
            }
        }
        Format::Ascii => {
            for r in &rows {
                writeln!(out, "{} → pw={}", r.mu, r.pw)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn balance_json(b: Balance) -> serde_json::Value {
    match b {
        Balance::Cocorner(z) => json!({"cocorner": [z.row, z.col]}),
        Balance::Corner(v) => json!({"corner": [v.row, v.col]}),
        Balance::Neither => json!(null),
        Balance::Both { cocorner, corner } => {
            json!({"cocorner": [cocorner.row, cocorner.col], "corner": [corner.row, corner.col]})
        }
    }
}

fn balance_text(b: Balance) -> String {
    match b {
        Balance::Cocorner(z) => format!("balanced cocorner {z}"),
        Balance::Corner(v) => format!("balanced corner {v}"),
        Balance::Neither => "no balance feature".into(),
        Balance::Both { cocorner, corner } => format!("balanced cocorner {cocorner} and corner {corner}"),
    }
}

fn pictures(
    format: Format,
    lambda: &Partition,
    mu: &Partition,
    zeta: Option<&Partition>,
    m: Option<usize>,
    route: Option<Cell>,
    out: &mut dyn Write,
) -> Result<u8> {
    let list: Vec<TypedPicture> = match (zeta, m) {
        (Some(z), _) => pw_set(lambda, mu, z)?,
        (None, Some(m)) => {
            check_m(lambda.size(), m, true)?;
            pw_m(lambda, mu, m)?
        }
        (None, None) => bail!("one of --zeta or --m is required"),
    };
    if format == Format::Tsv {
        writeln!(out, "zeta\tbalance\tmap")?;
    }
    for (k, t) in list.iter().enumerate() {
        let b = t.balance();
        let overlay = match route {
            Some(z) => Some(t.picture.bump_route(z).with_context(|| format!("route of {z} for picture {}", k + 1))?),
            None => None,
        };
        match format {
            Format::Json => {
                let mut v = json!({"zeta": t.zeta, "balance": balance_json(b), "picture": t.picture});
                if let Some(r) = &overlay {
                    let cells: Vec<[usize; 2]> = r.cells.iter().map(|c| [c.row, c.col]).collect();
                    v["route"] = json!(cells);
                }
                writeln!(out, "{v}")?;
            }
            Format::Tsv => {
                let map = serde_json::to_value(&t.picture)?["map"].clone();
                writeln!(out, "{}\t{}\t{}", t.zeta, balance_json(b), map)?;
            }
            Format::Ascii => {
                if k > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "#{} zeta={} {}", k + 1, t.zeta, balance_text(b))?;
                let cells = overlay.as_ref().map(|r| r.cells.clone()).unwrap_or_default();
                write!(out, "{}", picture_ascii_with_route(&t.picture, &cells))?;
                if let Some(r) = &overlay {
                    writeln!(out, "route of {}: destination {}", route.unwrap(), r.destination())?;
                }
            }
        }
    }
    if format == Format::Ascii && list.is_empty() {
        writeln!(out, "no pictures")?;
    }
    Ok(EXIT_OK)
}

fn render(format: Format, input: Option<&PathBuf>, route: Option<&str>, out: &mut dyn Write) -> Result<u8> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let value: serde_json::Value = serde_json::from_str(&text).context("input is not JSON")?;
    if value.get("map").is_some() {
        let p: Picture = serde_json::from_value(value).context("input is not a valid picture")?;
        let cells = match route {
            Some(z) => p.bump_route(z.parse::<Cell>()?)?.cells,
            None => Vec::new(),
        };
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&p)?)?,
            _ => write!(out, "{}", picture_ascii_with_route(&p, &cells))?,
        }
    } else {
        let t: PartialTableau = serde_json::from_value(value).context("input is not a valid tableau")?;
        let cells = match route {
            Some(a) => t.bump_route(a.parse::<u32>().context("tableau routes take a value")?)?.cells,
            None => Vec::new(),
        };
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&t)?)?,
            _ => write!(out, "{}", tableau_ascii(&t, &cells))?,
        }
    }
    Ok(EXIT_OK)
}
