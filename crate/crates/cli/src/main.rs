use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use serde::Serialize;
use sigrep::oracle::{buchberger_with_cofactors, is_groebner};
use sigrep::poly::interreduce;
use sigrep::{
    parse_poly, prepare, verify_representation, GBWithReps, ModuleVector, Ring, SystemFile,
};

/// Gröbner bases with representations over the input generators.
#[derive(Parser)]
#[command(name = "sigrep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced Gröbner basis of a system.
    Gb {
        file: PathBuf,
        /// Also print each element as a combination of the generators.
        #[arg(long)]
        reps: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide membership of a polynomial and print its cofactors.
    Detach {
        file: PathBuf,
        #[arg(long = "poly", value_name = "EXPR", allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare the signature pipeline against plain Buchberger.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(anyhow::Error),
    Verification(String),
    Disagreement(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Verification(_) => 2,
            Failure::Disagreement(_) => 3,
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

#[derive(Serialize)]
struct GbJson {
    basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reps: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
struct DetachJson {
    member: bool,
    cofactors: Option<Vec<String>>,
    remainder: String,
}

#[derive(Serialize)]
struct CheckJson {
    agree: bool,
    basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<Vec<String>>,
}

fn load(path: &Path) -> anyhow::Result<SystemFile> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    SystemFile::parse(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn setup(path: &Path) -> Result<(SystemFile, GBWithReps), Failure> {
    let sys = load(path)?;
    let prep = prepare(&sys.ring, &sys.gens).map_err(|e| Failure::Verification(e.to_string()))?;
    Ok((sys, prep))
}

fn render_all(polys: &[sigrep::Polynomial], ring: &Ring) -> Vec<String> {
    polys.iter().map(|p| p.render(ring)).collect()
}

fn render_vector(v: &ModuleVector, ring: &Ring) -> String {
    format!("[{}]", v.render(ring).join(", "))
}

fn print_json<T: Serialize>(out: &mut impl Write, value: &T) -> anyhow::Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn cmd_gb(out: &mut impl Write, file: &Path, reps: bool, json: bool) -> Result<(), Failure> {
    let (sys, prep) = setup(file)?;
    let ring = &sys.ring;
    for (g, v) in prep.reduced().iter().zip(prep.reps()) {
        if !verify_representation(g, v, &sys.gens, ring) {
            return Err(Failure::Verification(format!(
                "representation of {} does not verify",
                g.render(ring)
            )));
        }
    }
    if json {
        let reps = reps.then(|| prep.reps().iter().map(|v| v.render(ring)).collect());
        print_json(
            out,
            &GbJson {
                basis: render_all(prep.reduced(), ring),
                reps,
            },
        )?;
        return Ok(());
    }
    writeln!(out, "reduced basis ({} elements):", prep.reduced().len())
        .map_err(anyhow::Error::from)?;
    for (i, (g, v)) in prep.reduced().iter().zip(prep.reps()).enumerate() {
        writeln!(out, "  g{} = {}", i + 1, g.render(ring)).map_err(anyhow::Error::from)?;
        if reps {
            writeln!(out, "       rep {}", render_vector(v, ring)).map_err(anyhow::Error::from)?;
        }
    }
    if reps {
        writeln!(
            out,
            "verified: every representation multiplies back exactly"
        )
        .map_err(anyhow::Error::from)?;
    }
    Ok(())
}

fn cmd_detach(out: &mut impl Write, file: &Path, expr: &str, json: bool) -> Result<(), Failure> {
    let (sys, prep) = setup(file)?;
    let ring = &sys.ring;
    let f = parse_poly(expr, ring).with_context(|| format!("cannot parse polynomial `{expr}`"))?;
    let res = prep
        .detach(&f)
        .map_err(|e| Failure::Verification(e.to_string()))?;
    if let Some(u) = &res.cofactors {
        if !verify_representation(&f, u, &sys.gens, ring) {
            return Err(Failure::Verification(
                "cofactors do not multiply back to the query".into(),
            ));
        }
    }
    if json {
        let value = DetachJson {
            member: res.member,
            cofactors: res.cofactors.as_ref().map(|u| u.render(ring)),
            remainder: res.remainder.render(ring),
        };
        print_json(out, &value)?;
        return Ok(());
    }
    let text = match &res.cofactors {
        Some(u) => format!(
            "MEMBER\ncofactors: {}\nverified: cofactors times generators equals the query\n",
            render_vector(u, ring)
        ),
        None => format!("NOT-MEMBER\nremainder: {}\n", res.remainder.render(ring)),
    };
    out.write_all(text.as_bytes())
        .map_err(anyhow::Error::from)?;
    Ok(())
}

fn cmd_check(out: &mut impl Write, file: &Path, json: bool) -> Result<(), Failure> {
    let (sys, prep) = setup(file)?;
    let ring = &sys.ring;
    let oracle = buchberger_with_cofactors(ring, &sys.gens)
        .map_err(|e| Failure::Verification(e.to_string()))?;
    let expected = interreduce(&oracle.polys(), ring);
    let agree = expected == prep.reduced() && is_groebner(prep.reduced(), ring);
    let basis = render_all(prep.reduced(), ring);
    let oracle_basis = render_all(&expected, ring);
    if json {
        let value = CheckJson {
            agree,
            basis,
            oracle: (!agree).then_some(oracle_basis),
        };
        print_json(out, &value)?;
    } else if agree {
        writeln!(out, "agree: {} elements", basis.len()).map_err(anyhow::Error::from)?;
    } else {
        let mut text = String::from("DISAGREE\npipeline:\n");
        basis
            .iter()
            .for_each(|b| text.push_str(&format!("  {b}\n")));
        text.push_str("oracle:\n");
        oracle_basis
            .iter()
            .for_each(|b| text.push_str(&format!("  {b}\n")));
        out.write_all(text.as_bytes())
            .map_err(anyhow::Error::from)?;
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Disagreement(
            "pipeline and oracle bases differ".into(),
        ))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Gb { file, reps, json } => cmd_gb(&mut out, &file, reps, json),
        Command::Detach { file, poly, json } => cmd_detach(&mut out, &file, &poly, json),
        Command::Check { file, json } => cmd_check(&mut out, &file, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let code = failure.code();
            match failure {
                Failure::Usage(e) => eprintln!("error: {e:#}"),
                Failure::Verification(msg) => eprintln!("verification failed: {msg}"),
                Failure::Disagreement(msg) => eprintln!("{}", anyhow!(msg)),
            }
            ExitCode::from(code)
        }
    }
}
