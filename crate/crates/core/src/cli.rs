//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 domain error, 3 cap
//! exceeded. [`run`] returns the exit code together with the text of both
//! output streams so that the binary stays a thin wrapper.

use std::ffi::OsString;
use std::path::Path;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{classify, decide_stable_equiv, invariants_of, Category, FamilyData, Invariants};
use crate::error::{Error, ErrorClass, Result};
use crate::f2::{arf, closure_cap, group_closure, orbits, F2Vector, QuadraticFormF2};
use crate::forms::AugmentedForm;
use crate::models::{model_m_sigma, model_n_almost_spin, model_p, realize_form, Han1};
use crate::words::{fox_derivative, parse_word, Group, Presentation};

#[derive(Parser, Debug)]
#[command(name = "stable4", version, about = "Stable classification invariants of 4-manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// `M_0`: hyperbolic, spin, null bordant
    M0,
    /// `M_1`: odd
    M1,
    /// `P(gamma)` from a square presentation
    P,
    /// almost spin null-bordant model
    N,
    /// a model with prescribed invariants
    Realize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the classification table of a family
    Classify {
        /// `z3`, `nil:<z>`, or a family file
        #[arg(long)]
        family: String,
        /// `0`, `infinity`, or a bit-string; defaults to the family file's `w`
        #[arg(long)]
        w: Option<String>,
        #[arg(long, default_value = "smooth")]
        category: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Decide stable equivalence of two invariant tuples or HAN1 files
    Decide {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value = "smooth")]
        category: String,
        #[arg(long)]
        family: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Build a model form and print its HAN1 data
    Model {
        #[arg(long, value_enum)]
        kind: Kind,
        /// `z3`, `nil:<z>`, `zn:<n>`, or a presentation file
        #[arg(long, default_value = "z3")]
        presentation: String,
        /// generator values for `P`, `H_2` coordinates for `M1`
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        w: Option<String>,
        /// invariant tuple file for `realize`
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value = "smooth")]
        category: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the parity of a form (or HAN1) file
    Parity {
        #[arg(long)]
        form: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Fox derivative of a word
    Fox {
        #[arg(long)]
        word: String,
        #[arg(long)]
        gen: String,
        /// reduce coefficients in this group (`z3`, `nil:<z>`, `zn:<n>`, or a file);
        /// without it the word is read in the free group on its letters
        #[arg(long)]
        presentation: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Arf invariant of a quadratic form over F_2
    Arf {
        #[arg(long)]
        q: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Orbits of H_2 under the family action
    Orbits {
        #[arg(long)]
        family: String,
        /// use the stabilizer of this `w`
        #[arg(long)]
        w: Option<String>,
        /// restrict to the kernel of `<w, ->`
        #[arg(long, requires = "w")]
        kernel: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Size of the group generated by the family's out-generators
    Closure {
        #[arg(long)]
        family: String,
        /// also list the elements
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

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
                Outcome { code: 1, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(cli.command) {
        Ok(mut stdout) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = match e.class() {
                ErrorClass::Usage => 1,
                ErrorClass::Domain => 2,
                ErrorClass::Cap => 3,
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn read_json(path: &str) -> Result<Value> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

/// `z3`, `nil:<z>`, `zn:<n>`, or the path of a presentation file.
fn load_presentation(spec: &str) -> Result<Presentation> {
    let param = |prefix: &str| -> Result<i64> {
        spec[prefix.len()..].parse().map_err(|_| Error::Parse(format!("bad parameter in `{spec}`")))
    };
    if spec == "z3" {
        Ok(Presentation::z3())
    } else if spec.starts_with("nil:") {
        Presentation::nil(param("nil:")?)
    } else if spec.starts_with("zn:") {
        let n = param("zn:")?;
        if n < 1 {
            return Err(Error::InvalidParameter(format!("zn needs n >= 1, got {n}")));
        }
        Ok(Presentation::zn(n as usize))
    } else if Path::new(spec).exists() {
        Presentation::from_json(&std::fs::read_to_string(spec)?)
    } else {
        Err(Error::Io(format!("no such presentation `{spec}`")))
    }
}

fn parse_bits(text: &str) -> Result<Vec<bool>> {
    Ok(text.parse::<F2Vector>()?.to_vec())
}

fn load_invariants(path: &str, category: Category) -> Result<Invariants> {
    let value = read_json(path)?;
    if value.get("form").is_some() {
        Ok(invariants_of(&Han1::from_json(&value)?, category))
    } else {
        Invariants::from_json(&value)
    }
}

fn load_form(path: &str) -> Result<AugmentedForm> {
    let value = read_json(path)?;
    match value.get("form") {
        Some(form) => AugmentedForm::from_json(form),
        None => AugmentedForm::from_json(&value),
    }
}

fn execute(command: Command) -> Result<String> {
    match command {
        Command::Classify { family, w, category, format } => {
            let family = FamilyData::from_spec(&family)?;
            let w = match (w, &family.w) {
                (Some(w), _) => w.parse()?,
                (None, Some(w)) => w.clone(),
                (None, None) => return Err(Error::Parse("missing --w".into())),
            };
            let table = classify(&w, category.parse()?, &family)?;
            Ok(match format {
                Format::Json => pretty(&table.to_json()),
                Format::Table => table.to_table(),
            })
        }
        Command::Decide { a, b, category, family, format } => {
            let category: Category = category.parse()?;
            let family = FamilyData::from_spec(&family)?;
            let a = load_invariants(&a, category)?;
            let b = load_invariants(&b, category)?;
            let equivalent = decide_stable_equiv(&a, &b, category, &family)?;
            let verdict = if equivalent { "EQUIVALENT" } else { "DISTINCT" };
            Ok(match format {
                Format::Json => pretty(&json!({ "verdict": verdict, "equivalent": equivalent })),
                Format::Table => verdict.to_string(),
            })
        }
        Command::Model { kind, presentation, gamma, w, target, category, format } => {
            let presentation = load_presentation(&presentation)?;
            let group: Arc<Group> = presentation.group().clone();
            let d = group.h2_dimension();
            let han1 = match kind {
                Kind::M0 => model_m_sigma(group, false, F2Vector::zero(d))?,
                Kind::M1 => {
                    let gamma = match gamma {
                        Some(g) => g.parse()?,
                        None => F2Vector::zero(d),
                    };
                    model_m_sigma(group, true, gamma)?
                }
                Kind::P => {
                    let gamma = gamma.ok_or_else(|| Error::Parse("missing --gamma".into()))?;
                    model_p(&presentation, &parse_bits(&gamma)?)?
                }
                Kind::N => {
                    let w = w.ok_or_else(|| Error::Parse("missing --w".into()))?;
                    model_n_almost_spin(group, w.parse()?)?
                }
                Kind::Realize => {
                    let target = target.ok_or_else(|| Error::Parse("missing --target".into()))?;
                    let target = Invariants::from_json(&read_json(&target)?)?;
                    realize_form(&presentation, &target, category.parse()?)?
                }
            };
            Ok(match format {
                Format::Json => pretty(&han1.to_json()),
                Format::Table => {
                    let tau = han1.tau.map_or("-".to_string(), |t| t.to_string());
                    format!(
                        "w          {}\nsignature  {}\nparity     {}\ntau        {}\nbasis      {}\n\n{}",
                        han1.w,
                        han1.signature,
                        han1.parity(),
                        tau,
                        han1.basis.join(" "),
                        han1.form
                    )
                }
            })
        }
        Command::Parity { form, format } => {
            let parity = load_form(&form)?.parity();
            Ok(match format {
                Format::Json => pretty(&json!({ "parity": parity })),
                Format::Table => parity.to_string(),
            })
        }
        Command::Fox { word, gen, presentation, format } => {
            let group = match presentation {
                Some(spec) => load_presentation(&spec)?.group().clone(),
                None => Arc::new(free_group_of(&word, &gen)?),
            };
            let w = parse_word(&word, group.generators())?;
            let index = group
                .generators()
                .iter()
                .position(|g| *g == gen)
                .ok_or_else(|| Error::UnknownGenerator(gen.clone()))?;
            let d = fox_derivative(&w, index, &group)?;
            Ok(match format {
                Format::Json => pretty(&d.to_json()),
                Format::Table => d.to_string(),
            })
        }
        Command::Arf { q, format } => {
            let q: QuadraticFormF2 = serde_json::from_value(read_json(&q)?)?;
            let q = QuadraticFormF2::new(q.bilinear, q.values)?;
            let a = u8::from(arf(&q)?);
            Ok(match format {
                Format::Json => pretty(&json!({ "arf": a })),
                Format::Table => a.to_string(),
            })
        }
        Command::Orbits { family, w, kernel, format } => {
            let family = FamilyData::from_spec(&family)?;
            let w: Option<F2Vector> = w.map(|w| w.parse()).transpose()?;
            let gens = match &w {
                Some(w) => family.stabilizer(w)?,
                None => family.out_generators.clone(),
            };
            let in_kernel = |x: &F2Vector| w.is_none_or(|w| !w.dot(x));
            let subset: Option<&dyn Fn(&F2Vector) -> bool> = if kernel { Some(&in_kernel) } else { None };
            let result = orbits(family.d, &gens, subset)?;
            Ok(match format {
                Format::Json => {
                    let list: Vec<Value> = result
                        .iter()
                        .map(|o| {
                            json!({
                                "representative": o[0].to_string(),
                                "size": o.len(),
                                "members": o.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    pretty(&json!({ "family": family.name, "d": family.d, "orbits": list }))
                }
                Format::Table => {
                    let mut out = String::new();
                    for o in &result {
                        let members: Vec<String> = o.iter().map(|v| v.to_string()).collect();
                        out.push_str(&format!("{}  {:>3}  {}\n", o[0], o.len(), members.join(" ")));
                    }
                    out
                }
            })
        }
        Command::Closure { family, list, format } => {
            let family = FamilyData::from_spec(&family)?;
            let group = if family.out_generators.is_empty() {
                [crate::f2::F2Matrix::identity(family.d)].into_iter().collect()
            } else {
                group_closure(&family.out_generators, closure_cap())?
            };
            Ok(match format {
                Format::Json => {
                    let mut v = json!({ "family": family.name, "d": family.d, "size": group.len() });
                    if list {
                        v["elements"] = json!(group.iter().map(|m| m.to_bitstrings()).collect::<Vec<_>>());
                    }
                    pretty(&v)
                }
                Format::Table => {
                    let mut out = format!("{}\n", group.len());
                    if list {
                        for m in &group {
                            out.push_str(&format!("{}\n", m.to_bitstrings().join(" ")));
                        }
                    }
                    out
                }
            })
        }
    }
}

/// The free group on the generator names of `word`, in order of first
/// appearance, followed by `gen` if it does not occur.
fn free_group_of(word: &str, gen: &str) -> Result<Group> {
    let mut names: Vec<String> = Vec::new();
    let tokens = word.split_whitespace().map(|t| t.split('^').next().unwrap_or(t));
    for name in tokens.chain([gen]) {
        if name != "1" && !names.iter().any(|n| n == name) {
            names.push(name.to_string());
        }
    }
    Group::free(names)
}
