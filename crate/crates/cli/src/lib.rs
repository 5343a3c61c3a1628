//! Command-line front end for the `nsalg` engine.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use nsalg::analysis::{simplicity_probe, singular_vectors, ProbeOptions, SimplicityReport, Verdict};
use nsalg::module::{induce, verma, whittaker_bmodule, BModuleSpec, InducedModule, WhittakerData};
use nsalg::pbw::parse_word;
use nsalg::rational::parse_rational;
use nsalg::{
    antisymmetry_residual, bracket, jacobi_residual, normal_order, Element, Error, Generator,
    HalfInt, Kind, Rational,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_REDUCIBLE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "nsalg", version, about = "Exact computations in the Neveu-Schwarz superalgebra")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Super-bracket of two generators.
    Bracket { x: String, y: String },
    /// PBW normal form of a product of generators.
    NormalOrder { word: String },
    /// Action of an element on a vector of a truncated module.
    Act {
        element: String,
        vector: String,
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Verma module M(h, ell).
    Verma {
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, allow_hyphen_values = true)]
        ell: String,
        #[arg(long, default_value_t = 4)]
        cap: u32,
        #[arg(long)]
        probe: bool,
    },
    /// Induced module of a Whittaker datum.
    Whittaker {
        #[arg(long)]
        k: u32,
        /// Value of psi on a generator, e.g. `L3=1/2`.
        #[arg(long = "set", value_name = "Lj=VAL", allow_hyphen_values = true)]
        set: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        ell: String,
        #[arg(long, default_value_t = 4)]
        cap: u32,
        #[arg(long)]
        probe: bool,
    },
    /// Module induced from a spec file.
    Induce {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        ell: String,
        #[arg(long, default_value_t = 4)]
        cap: u32,
        #[arg(long)]
        probe: bool,
    },
    /// Simplicity probe on a truncated module.
    ProbeSimplicity {
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Super-Jacobi and antisymmetry on generators with |2 index| <= bound.
    CheckJacobi {
        #[arg(long, default_value_t = 8)]
        bound: i64,
    },
    /// Singular vectors of M(h, ell) at a level in {1/2, 1, 3/2, 2}.
    SingularVectors {
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, allow_hyphen_values = true)]
        ell: String,
        #[arg(long)]
        level: String,
    },
    /// Check the relations of a spec file.
    Validate {
        #[arg(long)]
        spec: PathBuf,
    },
}

/// A module given by a spec file, a Whittaker datum or a highest weight.
#[derive(Args, Debug)]
struct ModuleArgs {
    #[arg(long, conflicts_with_all = ["h", "k"])]
    spec: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "k")]
    h: Option<String>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long = "set", value_name = "Lj=VAL", requires = "k", allow_hyphen_values = true)]
    set: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    ell: String,
    #[arg(long, default_value_t = 4)]
    cap: u32,
}

impl ModuleArgs {
    fn build(&self) -> Result<InducedModule, Error> {
        let ell = rational(&self.ell)?;
        if let Some(path) = &self.spec {
            return Ok(induce(&read_spec(path)?, ell, self.cap));
        }
        if let Some(k) = self.k {
            return whittaker_module(k, &self.set, ell, self.cap);
        }
        match &self.h {
            Some(h) => Ok(verma(rational(h)?, ell, self.cap)),
            None => Err(Error::Format("one of --spec, --h or --k is required".into())),
        }
    }
}

fn rational(s: &str) -> Result<Rational, Error> {
    Ok(parse_rational(s)?)
}

fn read_spec(path: &PathBuf) -> Result<BModuleSpec, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
    BModuleSpec::from_json(&text)
}

fn whittaker_module(k: u32, set: &[String], ell: Rational, cap: u32) -> Result<InducedModule, Error> {
    let mut psi = WhittakerData::new(k, ell.clone());
    for item in set {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Error::Format(format!("expected Lj=VAL, got `{item}`")))?;
        let g = Generator::from_file_key(key.trim())?;
        if g.kind() != Kind::L {
            return Err(Error::Format(format!("psi is set on L generators only, got `{key}`")));
        }
        psi.set(g.index().as_int(), rational(value)?);
    }
    Ok(induce(&whittaker_bmodule(&psi)?, ell, cap))
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

fn report_output(r: &SimplicityReport, as_json: bool) -> Output {
    let code = if r.verdict == Verdict::Reducible {
        EXIT_REDUCIBLE
    } else {
        EXIT_OK
    };
    let text = if as_json {
        r.to_json()
    } else {
        r.to_string().trim_end().to_string()
    };
    Output { text, code }
}

fn module_output(m: &InducedModule, probe: bool, cli: &Cli) -> Output {
    if probe {
        let opts = ProbeOptions {
            seed: cli.seed,
            ..ProbeOptions::default()
        };
        return report_output(&simplicity_probe(m, &opts), cli.json);
    }
    let basis: Vec<String> = m.basis().iter().map(|k| m.format_key(k)).collect();
    if cli.json {
        return Output::ok(pretty(&json!({ "cap": m.cap(), "dim": m.dim(), "basis": basis })));
    }
    let mut text = format!("cap: {}\ndim: {}", m.cap(), m.dim());
    for b in basis {
        text.push_str("\n  ");
        text.push_str(&b);
    }
    Output::ok(text)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn element_output(e: &Element, as_json: bool) -> Output {
    if as_json {
        Output::ok(pretty(&json!({ "element": e.to_string() })))
    } else {
        Output::ok(e.to_string())
    }
}

fn check_jacobi(bound: i64, as_json: bool) -> Output {
    let gens: Vec<Generator> = nsalg::algebra::generators_up_to(bound);
    let mut failures = Vec::new();
    let mut pairs = 0usize;
    let mut triples = 0usize;
    for &x in &gens {
        for &y in &gens {
            pairs += 1;
            let r = antisymmetry_residual(x, y);
            if !r.is_zero() {
                failures.push(format!("antisymmetry ({x}, {y}): {r}"));
            }
            for &z in &gens {
                triples += 1;
                let r = jacobi_residual(x, y, z);
                if !r.is_zero() {
                    failures.push(format!("jacobi ({x}, {y}, {z}): {r}"));
                }
            }
        }
    }
    let code = if failures.is_empty() { EXIT_OK } else { EXIT_REDUCIBLE };
    let text = if as_json {
        pretty(&json!({ "bound": bound, "pairs": pairs, "triples": triples, "failures": failures }))
    } else {
        let mut text = format!("pairs: {pairs}\ntriples: {triples}\nfailures: {}", failures.len());
        for f in &failures {
            text.push('\n');
            text.push_str(f);
        }
        text
    };
    Output { text, code }
}

fn execute(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Bracket { x, y } => {
            let (x, y): (Generator, Generator) = (x.parse()?, y.parse()?);
            Ok(element_output(&bracket(x, y), cli.json))
        }
        Command::NormalOrder { word } => Ok(element_output(&normal_order(&parse_word(word)?), cli.json)),
        Command::Act { element, vector, module } => {
            let m = module.build()?;
            let x: Element = element.parse()?;
            let v = m.parse_vector(vector)?;
            let image = m.format_vector(&m.act(&x, &v)?);
            if cli.json {
                Ok(Output::ok(pretty(&json!({ "vector": image }))))
            } else {
                Ok(Output::ok(image))
            }
        }
        Command::Verma { h, ell, cap, probe } => {
            let m = verma(rational(h)?, rational(ell)?, *cap);
            Ok(module_output(&m, *probe, cli))
        }
        Command::Whittaker { k, set, ell, cap, probe } => {
            let m = whittaker_module(*k, set, rational(ell)?, *cap)?;
            Ok(module_output(&m, *probe, cli))
        }
        Command::Induce { spec, ell, cap, probe } => {
            let m = induce(&read_spec(spec)?, rational(ell)?, *cap);
            Ok(module_output(&m, *probe, cli))
        }
        Command::ProbeSimplicity { module } => Ok(module_output(&module.build()?, true, cli)),
        Command::CheckJacobi { bound } => Ok(check_jacobi(*bound, cli.json)),
        Command::SingularVectors { h, ell, level } => {
            let level: HalfInt = level.parse()?;
            let m = nsalg::analysis::verma_for_level(rational(h)?, rational(ell)?, level)?;
            let found: Vec<String> = singular_vectors(rational(h)?, rational(ell)?, level)?
                .iter()
                .map(|v| m.format_vector(v))
                .collect();
            if cli.json {
                return Ok(Output::ok(pretty(
                    &json!({ "level": level.to_string(), "vectors": found }),
                )));
            }
            if found.is_empty() {
                Ok(Output::ok("none".into()))
            } else {
                Ok(Output::ok(found.join("\n")))
            }
        }
        Command::Validate { spec } => {
            let report = read_spec(spec)?.validate();
            let text = if cli.json {
                pretty(&json!({ "valid": report.is_valid(), "violations": report.violations }))
            } else {
                report.to_string().trim_end().to_string()
            };
            let code = if report.is_valid() { EXIT_OK } else { EXIT_ERROR };
            Ok(Output { text, code })
        }
    }
}

/// Parses `argv`, runs the command and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.text);
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
