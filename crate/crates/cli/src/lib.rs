//! Command-line front end. Every command loads its inputs, calls one library
//! routine and renders the result; exit code 0 means every check passed, 1
//! that one failed, 2 that the input could not be used.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use quadbracket::bialgebra::{
    affine_restriction_at_unit, bialgebra_axioms_check, cocommutator_from_bracket,
    cocommutator_to_linear_bracket, pencil_check, translation_oracle,
};
use quadbracket::bracket::{
    bracket_to_delta, compat_direct, derivation_check, jacobiator, schouten_operator_check,
    translate,
};
use quadbracket::catalog::{self, CatalogEntry, ConformanceReport};
use quadbracket::coboundary::{cybe_check, derive_bracket_from_r, element_schouten, mybe_check};
use quadbracket::{json, AlgebraSpec, CheckReport, Error, PolyBracket, RMatrix, Rational};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Jacobi,
    Compat,
    Schouten,
    Derivation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Part {
    Algebra,
    Bracket,
    R,
    Unit,
}

/// Inputs are file paths, `-` for stdin, or `catalog:key(params)`.
#[derive(Debug, Parser)]
#[command(
    name = "quadbracket",
    version,
    about = "Exact checks for quadratic Poisson brackets on associative algebras"
)]
pub struct JobSpec {
    #[arg(long, value_enum, global = true, default_value = "json")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Associativity and unit of an algebra.
    Validate { algebra: String },
    /// Run one checker on a bracket.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        algebra: String,
        bracket: String,
    },
    /// The quadratic bracket of an r-matrix.
    Derive { algebra: String, r: String },
    /// `[[r, r]]` with the CYBE and MYBE verdicts; the exit code follows MYBE.
    SchoutenR { algebra: String, r: String },
    /// Cocommutator of a compatible bracket and the bialgebra axioms.
    Bialgebra { algebra: String, bracket: String },
    /// Jacobi along `B + t·Δ*`; three or more values certify the whole pencil.
    Pencil {
        algebra: String,
        bracket: String,
        #[arg(long = "t", required = true, allow_hyphen_values = true, value_parser = parse_rational)]
        t: Vec<Rational>,
    },
    /// The bracket after moving the origin to `t·unit`, checked against `B + t·Δ*`.
    Translate {
        algebra: String,
        bracket: String,
        #[arg(long = "t", allow_hyphen_values = true, value_parser = parse_rational)]
        t: Rational,
    },
    /// Restriction to the hyperplane where the unit coordinate equals one.
    Restrict { algebra: String, bracket: String },
    /// Compare a tabulated bracket with the bracket its r-matrix derives.
    Conformance {
        #[command(subcommand)]
        target: ConformanceTarget,
    },
    /// List or emit built-in examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConformanceTarget {
    Quaternion {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        b: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        c: Rational,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Emit {
        /// `key` or `key(p1,p2,...)`.
        key: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_rational)]
        params: Vec<Rational>,
        /// Emit only one JSON form, ready to feed to another command.
        #[arg(long, value_enum)]
        part: Option<Part>,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|e| e.to_string())
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// An unusable input, with the JSON pointer of the offending field if known.
#[derive(Debug)]
struct InputError {
    source: String,
    pointer: Option<String>,
    message: String,
}

impl InputError {
    fn new(source: &str, message: impl Into<String>) -> Self {
        InputError {
            source: source.to_string(),
            pointer: None,
            message: message.into(),
        }
    }

    fn from_lib(source: &str, e: Error) -> Self {
        match e {
            Error::Malformed { pointer, message } => InputError {
                source: source.to_string(),
                pointer: Some(pointer),
                message,
            },
            other => InputError::new(source, other.to_string()),
        }
    }

    fn render(&self) -> String {
        match &self.pointer {
            Some(p) => format!("error: {}: at {:?}: {}\n", self.source, p, self.message),
            None => format!("error: {}: {}\n", self.source, self.message),
        }
    }

    fn to_json(&self) -> Value {
        json!({ "error": { "input": self.source, "pointer": self.pointer, "message": self.message } })
    }
}

type Res<T> = std::result::Result<T, InputError>;

/// A rendered result: the JSON value, its text form and whether it passed.
struct Rendered {
    json: Value,
    text: String,
    passed: bool,
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

enum Loaded {
    Catalog(Box<CatalogEntry>),
    Json(Value),
}

/// `key` or `key(p1, p2, ...)`.
fn parse_catalog_ref(s: &str) -> Res<(String, Vec<Rational>)> {
    let s = s.trim();
    let Some(open) = s.find('(') else {
        return Ok((s.to_string(), Vec::new()));
    };
    let inner = s[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| InputError::new(s, "unbalanced parentheses"))?;
    let params = inner
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| parse_rational(p).map_err(|e| InputError::new(s, e)))
        .collect::<Res<Vec<_>>>()?;
    Ok((s[..open].to_string(), params))
}

fn build_entry(name: &str, key: &str, params: &[Rational]) -> Res<CatalogEntry> {
    catalog::build(key, params).map_err(|e| InputError::from_lib(name, e))
}

impl Inputs<'_> {
    fn load(&mut self, arg: &str) -> Res<Loaded> {
        if let Some(reference) = arg.strip_prefix("catalog:") {
            let (key, params) = parse_catalog_ref(reference)?;
            return Ok(Loaded::Catalog(Box::new(build_entry(arg, &key, &params)?)));
        }
        let text = if arg == "-" {
            if self.stdin_used {
                return Err(InputError::new(arg, "stdin can be read only once"));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| InputError::new(arg, e.to_string()))?;
            s
        } else {
            fs::read_to_string(arg).map_err(|e| InputError::new(arg, e.to_string()))?
        };
        serde_json::from_str(&text)
            .map(Loaded::Json)
            .map_err(|e| InputError::new(arg, format!("invalid JSON: {e}")))
    }

    fn algebra(&mut self, arg: &str) -> Res<AlgebraSpec> {
        match self.load(arg)? {
            Loaded::Catalog(entry) => Ok(entry.spec),
            Loaded::Json(v) => {
                json::algebra_from_json(&v).map_err(|e| InputError::from_lib(arg, e))
            }
        }
    }

    /// A catalog entry stands for its first bracket, or else for the bracket
    /// derived from its first r-matrix.
    fn bracket(&mut self, arg: &str, spec: &AlgebraSpec) -> Res<PolyBracket> {
        let b = match self.load(arg)? {
            Loaded::Catalog(entry) => match (entry.brackets.first(), entry.r_matrices.first()) {
                (Some((_, b)), _) => b.clone(),
                (None, Some((_, r))) => derive_bracket_from_r(&entry.spec, r)
                    .map_err(|e| InputError::from_lib(arg, e))?,
                (None, None) => {
                    return Err(InputError::new(
                        arg,
                        "catalog entry has no bracket or r-matrix",
                    ))
                }
            },
            Loaded::Json(v) => {
                json::bracket_from_json(&v).map_err(|e| InputError::from_lib(arg, e))?
            }
        };
        if b.dim() != spec.dim() {
            return Err(InputError::from_lib(
                arg,
                Error::DimensionMismatch {
                    expected: spec.dim(),
                    found: b.dim(),
                },
            ));
        }
        Ok(b)
    }

    fn r_matrix(&mut self, arg: &str, spec: &AlgebraSpec) -> Res<RMatrix> {
        let r = match self.load(arg)? {
            Loaded::Catalog(entry) => entry
                .r_matrices
                .first()
                .map(|(_, r)| r.clone())
                .ok_or_else(|| InputError::new(arg, "catalog entry has no r-matrix"))?,
            Loaded::Json(v) => {
                json::rmatrix_from_json(&v).map_err(|e| InputError::from_lib(arg, e))?
            }
        };
        if r.dim() != spec.dim() {
            return Err(InputError::from_lib(
                arg,
                Error::DimensionMismatch {
                    expected: spec.dim(),
                    found: r.dim(),
                },
            ));
        }
        Ok(r)
    }
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

fn report(r: CheckReport) -> Rendered {
    Rendered {
        json: to_value(&r),
        text: r.to_string(),
        passed: r.passed(),
    }
}

fn lib(ctx: &str) -> impl Fn(Error) -> InputError + '_ {
    move |e| InputError::from_lib(ctx, e)
}

fn vector_text(v: &[Rational]) -> String {
    format!(
        "({})",
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn execute(command: Command, inputs: &mut Inputs) -> Res<Rendered> {
    Ok(match command {
        Command::Validate { algebra } => {
            let spec = inputs.algebra(&algebra)?;
            let assoc = spec.check_associative();
            let unit = if assoc.passed() {
                spec.find_unit()
            } else {
                None
            };
            let unit_text = unit.as_deref().map_or("none".to_string(), vector_text);
            Rendered {
                text: format!("{assoc}\nunit: {unit_text}"),
                json: json!({ "associativity": to_value(&assoc), "unit": unit.map(|u| to_value(&u)) }),
                passed: assoc.passed(),
            }
        }
        Command::Check {
            kind,
            algebra,
            bracket,
        } => {
            let spec = inputs.algebra(&algebra)?;
            let b = inputs.bracket(&bracket, &spec)?;
            report(match kind {
                CheckKind::Jacobi => jacobiator(&b),
                CheckKind::Compat => compat_direct(&spec, &b).map_err(lib(&bracket))?,
                CheckKind::Schouten => schouten_operator_check(&b).map_err(lib(&bracket))?,
                CheckKind::Derivation => {
                    let delta = bracket_to_delta(&b).map_err(lib(&bracket))?;
                    derivation_check(&spec, &delta).map_err(lib(&bracket))?
                }
            })
        }
        Command::Derive { algebra, r } => {
            let spec = inputs.algebra(&algebra)?;
            let rm = inputs.r_matrix(&r, &spec)?;
            let b = derive_bracket_from_r(&spec, &rm).map_err(lib(&r))?;
            Rendered {
                json: json::bracket_to_json(&b),
                text: b.render_table(),
                passed: true,
            }
        }
        Command::SchoutenR { algebra, r } => {
            let spec = inputs.algebra(&algebra)?;
            let rm = inputs.r_matrix(&r, &spec)?;
            let t = element_schouten(&spec, &rm).map_err(lib(&r))?;
            let cybe = cybe_check(&spec, &rm).map_err(lib(&r))?;
            let mybe = mybe_check(&spec, &rm).map_err(lib(&r))?;
            Rendered {
                text: format!("[[r,r]] = {t}\n{cybe}\n{mybe}"),
                json: json!({ "tensor": t.to_json(), "cybe": to_value(&cybe), "mybe": to_value(&mybe) }),
                passed: mybe.passed(),
            }
        }
        Command::Bialgebra { algebra, bracket } => {
            let spec = inputs.algebra(&algebra)?;
            let b = inputs.bracket(&bracket, &spec)?;
            let d = cocommutator_from_bracket(&spec, &b).map_err(lib(&bracket))?;
            let axioms = bialgebra_axioms_check(&spec, &d).map_err(lib(&bracket))?;
            let images: Vec<String> = (0..d.dim())
                .map(|m| format!("Δ(e{}) = {}", m + 1, d.image(m)))
                .collect();
            Rendered {
                text: format!("{}\n{axioms}", images.join("\n")),
                json: json!({ "cocommutator": json::cocommutator_to_json(&d), "axioms": to_value(&axioms) }),
                passed: axioms.passed(),
            }
        }
        Command::Pencil {
            algebra,
            bracket,
            t,
        } => {
            let spec = inputs.algebra(&algebra)?;
            let b = inputs.bracket(&bracket, &spec)?;
            let linear = cocommutator_to_linear_bracket(
                &cocommutator_from_bracket(&spec, &b).map_err(lib(&bracket))?,
            );
            let certify = t.iter().collect::<BTreeSet<_>>().len() >= 3;
            report(pencil_check(&spec, &b, &linear, &t, certify).map_err(lib(&bracket))?)
        }
        Command::Translate {
            algebra,
            bracket,
            t,
        } => {
            let spec = inputs.algebra(&algebra)?;
            let b = inputs.bracket(&bracket, &spec)?;
            let unit = spec
                .find_unit()
                .ok_or_else(|| InputError::from_lib(&algebra, Error::NoUnit))?;
            let moved = translate(&b, &unit, &t).map_err(lib(&bracket))?;
            let oracle =
                translation_oracle(&spec, &b, std::slice::from_ref(&t)).map_err(lib(&bracket))?;
            Rendered {
                text: format!("{}\n{oracle}", moved.render_table()),
                json: json!({ "t": t.to_string(), "bracket": json::bracket_to_json(&moved), "translation": to_value(&oracle) }),
                passed: oracle.passed(),
            }
        }
        Command::Restrict { algebra, bracket } => {
            let spec = inputs.algebra(&algebra)?;
            let b = inputs.bracket(&bracket, &spec)?;
            let res = affine_restriction_at_unit(&spec, &b).map_err(lib(&bracket))?;
            let coords: Vec<usize> = res.coordinates.iter().map(|c| c + 1).collect();
            let name = |v: usize| format!("x^{}", coords[v]);
            let lines: Vec<String> = res
                .bracket
                .table()
                .into_iter()
                .map(|(i, j, p)| format!("{{{},{}}} = {}", name(i), name(j), p.display_with(&name)))
                .collect();
            Rendered {
                text: lines.join("\n"),
                json: json!({ "coordinates": coords, "bracket": json::bracket_to_json(&res.bracket) }),
                passed: true,
            }
        }
        Command::Conformance {
            target: ConformanceTarget::Quaternion { a, b, c },
        } => {
            let rep = catalog::quaternion_conformance(&a, &b, &c).map_err(lib("conformance"))?;
            Rendered {
                text: conformance_text(&rep),
                json: to_value(&rep),
                passed: rep.derived_passes(),
            }
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            let json = catalog::KEYS
                .iter()
                .map(|(key, params, description)| {
                    let params: Vec<&str> = params.split(',').filter(|p| !p.is_empty()).collect();
                    json!({ "key": key, "params": params, "description": description })
                })
                .collect();
            let text = catalog::KEYS
                .iter()
                .map(|(key, params, description)| {
                    let sig = if params.is_empty() {
                        key.to_string()
                    } else {
                        format!("{key}({params})")
                    };
                    format!("{sig:<28} {description}")
                })
                .collect::<Vec<_>>()
                .join("\n");
            Rendered {
                json: Value::Array(json),
                text,
                passed: true,
            }
        }
        Command::Catalog {
            action: CatalogAction::Emit { key, params, part },
        } => {
            let (key, inline) = parse_catalog_ref(&key)?;
            let params = if inline.is_empty() { params } else { inline };
            let entry = build_entry(&key, &key, &params)?;
            emit(&entry, part)?
        }
    })
}

fn emit(entry: &CatalogEntry, part: Option<Part>) -> Res<Rendered> {
    let missing = |what: &str| InputError::new(&entry.key, format!("catalog entry has no {what}"));
    let (json, text) = match part {
        None => {
            let json = json!({
                "key": entry.key,
                "description": entry.description,
                "algebra": json::algebra_to_json(&entry.spec),
                "unit": entry.unit.as_ref().map(to_value),
                "brackets": entry.brackets.iter().map(|(n, b)| json!({ "name": n, "bracket": json::bracket_to_json(b) })).collect::<Vec<_>>(),
                "r_matrices": entry.r_matrices.iter().map(|(n, r)| json!({ "name": n, "r": json::rmatrix_to_json(r) })).collect::<Vec<_>>(),
            });
            let mut text = vec![format!(
                "{}: {} (dimension {})",
                entry.key,
                entry.description,
                entry.spec.dim()
            )];
            if let Some(u) = &entry.unit {
                text.push(format!("unit: {}", vector_text(u)));
            }
            for (n, b) in &entry.brackets {
                text.push(format!("bracket {n}:\n{}", b.render_table()));
            }
            for (n, r) in &entry.r_matrices {
                text.push(format!("r-matrix {n}: {}", r.tensor()));
            }
            (json, text.join("\n"))
        }
        Some(Part::Algebra) => (
            json::algebra_to_json(&entry.spec),
            product_table(&entry.spec),
        ),
        Some(Part::Bracket) => {
            let (_, b) = entry.brackets.first().ok_or_else(|| missing("bracket"))?;
            (json::bracket_to_json(b), b.render_table())
        }
        Some(Part::R) => {
            let (_, r) = entry
                .r_matrices
                .first()
                .ok_or_else(|| missing("r-matrix"))?;
            (json::rmatrix_to_json(r), r.tensor().to_string())
        }
        Some(Part::Unit) => {
            let u = entry.unit.as_ref().ok_or_else(|| missing("unit"))?;
            (to_value(u), vector_text(u))
        }
    };
    Ok(Rendered {
        json,
        text,
        passed: true,
    })
}

/// `e_i·e_j = ...` for every nonzero basis product.
fn product_table(spec: &AlgebraSpec) -> String {
    let mut lines = vec![format!("{} (dimension {})", spec.name(), spec.dim())];
    for i in 0..spec.dim() {
        for j in 0..spec.dim() {
            let terms = spec.basis_product(i, j);
            if terms.is_empty() {
                continue;
            }
            let rhs: Vec<String> = terms
                .iter()
                .map(|(k, c)| format!("{c} e{}", k + 1))
                .collect();
            lines.push(format!("e{}·e{} = {}", i + 1, j + 1, rhs.join(" + ")));
        }
    }
    lines.join("\n")
}

fn conformance_text(rep: &ConformanceReport) -> String {
    let [a, b, c] = &rep.params;
    let lambda = rep
        .lambda
        .as_ref()
        .map_or("any".to_string(), ToString::to_string);
    let mut lines = vec![
        format!("quaternion conformance at a = {a}, b = {b}, c = {c}"),
        format!(
            "λ = {lambda}: {}/{} coefficients agree",
            rep.matched_coefficients, rep.total_coefficients
        ),
    ];
    for p in &rep.pairs {
        let mark = if p.agree { "agree" } else { "DIFFER" };
        lines.push(format!(
            "{{x^{},x^{}}}: {mark}; table = {}; λ·derived = {}; difference = {}",
            p.pair.0, p.pair.1, p.table, p.derived, p.difference
        ));
    }
    lines.push("derived bracket:".into());
    lines.extend(rep.derived_checks.iter().map(|r| format!("  {r}")));
    lines.push("tabulated bracket:".into());
    lines.extend(rep.table_checks.iter().map(|r| format!("  {r}")));
    for (label, s) in [
        ("table", &rep.table_sphere),
        ("derived", &rep.derived_sphere),
    ] {
        lines.push(format!("sphere evidence ({label}): {}", s.evidence));
        for e in &s.entries {
            let values: Vec<String> = e.values.iter().map(ToString::to_string).collect();
            lines.push(format!(
                "  {{N,x^{}}} = {}; divisible by N-1: {}; values [{}]",
                e.index,
                e.bracket,
                e.identically_zero || e.quotient_by_norm_minus_one.is_some(),
                values.join(", ")
            ));
        }
    }
    lines.join("\n")
}

/// Parses `args` (program name first) and runs the job. `stdin` serves `-`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let job = match JobSpec::try_parse_from(args) {
        Ok(job) => job,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Output {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let format = job.format;
    let mut inputs = Inputs {
        stdin,
        stdin_used: false,
    };
    match execute(job.command, &mut inputs) {
        Ok(r) => Output {
            code: if r.passed { 0 } else { 1 },
            stdout: match format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&r.json).expect("values serialize")
                ),
                Format::Text => format!("{}\n", r.text),
            },
            stderr: String::new(),
        },
        Err(e) => Output {
            code: 2,
            stdout: match format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&e.to_json()).expect("values serialize")
                ),
                Format::Text => String::new(),
            },
            stderr: e.render(),
        },
    }
}
