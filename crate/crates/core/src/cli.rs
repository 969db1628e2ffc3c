//! The `coxassoc` command line.
//!
//! Exit codes: `0` success, `1` other failures, `2` invalid configuration,
//! `3` non-finite Coxeter matrix, `4` a verification disagreed.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::coxeter::{CoxeterSystem, Word};
use crate::error::Error;
use crate::format::{fmt_sig, json_matrix, json_number};
use crate::geometry::{polytope_json, to_off, BasePoint, Realization, DEFAULT_EPSILON};
use crate::isometry::{classify_cambrian_fans, classify_reducible, verify_against_oracle, Classification};
use crate::sortable::c_singletons;

/// Environment variable overriding the default tolerance.
pub const EPSILON_ENV: &str = "COXASSOC_EPSILON";

/// Largest accepted tolerance.
pub const MAX_EPSILON: f64 = 1e-3;

/// `|W|` is only reported up to this size.
const ORDER_REPORT_LIMIT: u128 = 1_000_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NON_FINITE: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "coxassoc", version, about = "Permutahedra, c-associahedra and their isometry classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Roots, group order, longest element, Coxeter elements and graph automorphisms.
    Inspect {
        #[command(flatten)]
        common: Common,
    },
    /// The c-singletons and their Hasse diagram.
    Singletons {
        #[command(flatten)]
        common: Common,
        /// Coxeter element as comma-separated generator labels.
        #[arg(long = "c")]
        c: String,
    },
    /// A polytope as JSON or OFF.
    Polytope {
        #[command(flatten)]
        common: Common,
        /// Coxeter element; required for the associahedron.
        #[arg(long = "c")]
        c: Option<String>,
        #[arg(long, default_value = "balanced")]
        kappa: String,
        #[arg(long, value_enum, default_value_t = Kind::Associahedron)]
        kind: Kind,
    },
    /// Isometry classes of associahedra over all Coxeter elements.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "balanced")]
        kappa: String,
        /// Cross-check against the pairwise congruence search.
        #[arg(long)]
        verify_oracle: bool,
        /// Threads for the congruence search.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report `runtime_ms` as null so output is reproducible byte for byte.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Named type such as A3, H3, I2(5) or A1xA2.
    #[arg(long = "type", conflicts_with = "matrix", required_unless_present = "matrix")]
    type_code: Option<String>,
    /// JSON file `{"labels": [...], "m": [[...]]}`.
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Geometric tolerance in (0, 1e-3].
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long, value_enum)]
    emit: Option<Emit>,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Emit {
    Json,
    Off,
    Dot,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    #[value(name = "associahedron")]
    Associahedron,
    #[value(name = "permutahedron")]
    Permutahedron,
    /// The polytope cut out by `H_(e,s)` and `H_(w0,s)`.
    #[value(name = "p")]
    P,
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonFinite(_) => EXIT_NON_FINITE,
            Error::InvalidMatrix(_)
            | Error::UnknownType(_)
            | Error::UnknownLabel(_)
            | Error::NotCoxeterWord(_)
            | Error::NotReduced(_)
            | Error::InvalidBasePoint(_) => EXIT_INVALID,
            _ => EXIT_FAILURE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INVALID, message: message.into() }
}

/// What a command produced: the text to emit and the exit code.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn json(value: Value, code: i32) -> Self {
        let mut text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
        text.push('\n');
        Output { text, code }
    }
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, std::env::var(EPSILON_ENV).ok(), out, err)
}

/// [`run`] with the value of `COXASSOC_EPSILON` supplied explicitly.
pub fn run_with_env<I, T>(args: I, env_epsilon: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let (common, result) = match &cli.command {
        Command::Inspect { common } => (common, inspect(common, env_epsilon)),
        Command::Singletons { common, c } => (common, singletons(common, env_epsilon, c)),
        Command::Polytope { common, c, kappa, kind } => {
            (common, polytope(common, env_epsilon, c.as_deref(), kappa, *kind))
        }
        Command::Classify { common, kappa, verify_oracle, jobs, no_timing } => {
            (common, classify(common, env_epsilon, kappa, *verify_oracle, *jobs, *no_timing))
        }
    };
    match result {
        Ok(output) => {
            let written = match &common.out {
                Some(path) => std::fs::write(path, &output.text).map_err(|e| format!("{}: {e}", path.display())),
                None => out.write_all(output.text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => output.code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_FAILURE
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn epsilon(common: &Common, env_epsilon: Option<String>) -> Result<f64, Failure> {
    let eps = match (common.epsilon, env_epsilon) {
        (Some(e), _) => e,
        (None, Some(text)) => text
            .trim()
            .parse::<f64>()
            .map_err(|_| invalid(format!("{EPSILON_ENV}={text} is not a number")))?,
        (None, None) => DEFAULT_EPSILON,
    };
    if eps > 0.0 && eps <= MAX_EPSILON {
        Ok(eps)
    } else {
        Err(invalid(format!("epsilon {eps} outside (0, {MAX_EPSILON}]")))
    }
}

fn system(common: &Common) -> Result<(CoxeterSystem, String), Failure> {
    match (&common.type_code, &common.matrix) {
        (Some(code), _) => Ok((CoxeterSystem::from_type(code)?, code.clone())),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
            Ok((CoxeterSystem::from_json(&text)?, path.display().to_string()))
        }
        (None, None) => Err(invalid("one of --type or --matrix is required")),
    }
}

fn emit_format(common: &Common, allowed: &[Emit], default: Emit) -> Result<Emit, Failure> {
    let emit = common.emit.unwrap_or(default);
    if allowed.contains(&emit) {
        Ok(emit)
    } else {
        Err(invalid(format!("--emit {emit:?} is not available for this command").to_lowercase()))
    }
}

fn word_text(sys: &CoxeterSystem, w: &Word) -> String {
    sys.format_word(w)
}

fn inspect(common: &Common, env_epsilon: Option<String>) -> Result<Output, Failure> {
    let eps = epsilon(common, env_epsilon)?;
    let emit = emit_format(common, &[Emit::Json, Emit::Text], Emit::Text)?;
    let (sys, name) = system(common)?;
    let order = sys.group_order();
    let w0 = sys.longest_element();
    let w0_word = word_text(&sys, &sys.reduced_word(&w0));
    let elements: Vec<String> = sys.coxeter_elements().iter().map(|c| word_text(&sys, &c.word)).collect();
    let autos: Vec<Vec<String>> = sys
        .graph_automorphisms()
        .iter()
        .map(|mu| (0..sys.rank()).map(|s| sys.labels()[mu.apply(s)].clone()).collect())
        .collect();
    let matrix: Vec<Vec<Value>> = sys
        .coxeter_matrix()
        .iter()
        .map(|row| row.iter().map(|&m| if m == 0 { Value::Null } else { json!(m) }).collect())
        .collect();
    let value = json!({
        "system": name,
        "labels": sys.labels(),
        "rank": sys.rank(),
        "coxeter_matrix": matrix,
        "irreducible": sys.is_irreducible(),
        "positive_roots": sys.positive_root_count(),
        "group_order": (order <= ORDER_REPORT_LIMIT).then_some(order as u64),
        "w0": w0_word,
        "w0_length": w0.length(),
        "coxeter_elements": elements,
        "graph_automorphisms": autos,
        "epsilon": json_number(eps),
    });
    if emit == Emit::Json {
        return Ok(Output::json(value, EXIT_OK));
    }
    let mut text = String::new();
    text.push_str(&format!("system: {name}\n"));
    text.push_str(&format!("rank: {}\n", sys.rank()));
    text.push_str(&format!("irreducible: {}\n", sys.is_irreducible()));
    text.push_str(&format!("positive roots: {}\n", sys.positive_root_count()));
    if order <= ORDER_REPORT_LIMIT {
        text.push_str(&format!("group order: {order}\n"));
    } else {
        text.push_str(&format!("group order: > {ORDER_REPORT_LIMIT}\n"));
    }
    text.push_str(&format!("w0: {w0_word} (length {})\n", w0.length()));
    text.push_str(&format!("coxeter elements ({}): {}\n", elements.len(), elements.join(" ")));
    let autos_text: Vec<String> = autos.iter().map(|a| format!("[{}]", a.join(","))).collect();
    text.push_str(&format!("graph automorphisms ({}): {}\n", autos.len(), autos_text.join(" ")));
    text.push_str(&format!("epsilon: {}\n", fmt_sig(eps)));
    Ok(Output { text, code: EXIT_OK })
}

fn singletons(common: &Common, env_epsilon: Option<String>, c: &str) -> Result<Output, Failure> {
    let eps = epsilon(common, env_epsilon)?;
    let emit = emit_format(common, &[Emit::Json, Emit::Dot], Emit::Json)?;
    let (sys, name) = system(common)?;
    let c = sys.parse_word(c)?;
    let lattice = c_singletons(&sys, &c)?;
    if emit == Emit::Dot {
        return Ok(Output { text: lattice.to_dot(&sys), code: EXIT_OK });
    }
    let nodes: Vec<Value> = lattice
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| json!({"id": i, "word": word_text(&sys, &n.word), "length": n.word.len()}))
        .collect();
    let value = json!({
        "system": name,
        "c": word_text(&sys, &c),
        "w0_sorting_word": word_text(&sys, &lattice.w0_sorting_word),
        "nodes": nodes,
        "edges": lattice.hasse_edges,
        "epsilon": json_number(eps),
    });
    Ok(Output::json(value, EXIT_OK))
}

fn polytope(
    common: &Common,
    env_epsilon: Option<String>,
    c: Option<&str>,
    kappa: &str,
    kind: Kind,
) -> Result<Output, Failure> {
    let eps = epsilon(common, env_epsilon)?;
    let emit = emit_format(common, &[Emit::Json, Emit::Off], Emit::Json)?;
    let (sys, name) = system(common)?;
    let base = BasePoint::parse(kappa, sys.rank())?;
    let real = Realization::with_epsilon(&sys, base, eps)?;
    let (poly, c_text) = match kind {
        Kind::Associahedron => {
            let c = sys.parse_word(c.ok_or_else(|| invalid("--c is required for the associahedron"))?)?;
            (real.associahedron(&c)?, Some(word_text(&sys, &c)))
        }
        Kind::Permutahedron => (real.permutahedron(), None),
        Kind::P => (real.polytope_p()?, None),
    };
    if emit == Emit::Off {
        return Ok(Output { text: to_off(&poly)?, code: EXIT_OK });
    }
    let mut value = polytope_json(&sys, &poly);
    let extra = json!({
        "system": name,
        "kind": format!("{kind:?}").to_lowercase(),
        "c": c_text,
        "kappa": real.base().kappa().iter().map(|&k| json_number(k)).collect::<Vec<_>>(),
        "epsilon": json_number(eps),
    });
    if let (Value::Object(map), Value::Object(more)) = (&mut value, extra) {
        map.extend(more);
    }
    Ok(Output::json(value, EXIT_OK))
}

fn classes_json(sys: &CoxeterSystem, cl: &Classification) -> Value {
    let classes: Vec<Value> = cl
        .classes
        .iter()
        .map(|class| {
            let witnesses: Vec<Value> = class
                .witnesses
                .iter()
                .map(|w| {
                    json!({
                        "from": word_text(sys, &w.from),
                        "to": word_text(sys, &w.to),
                        "provenance": w.isometry.provenance.describe(sys),
                        "matrix": json_matrix(&w.isometry.matrix),
                    })
                })
                .collect();
            json!({
                "members": class.members.iter().map(|m| word_text(sys, m)).collect::<Vec<_>>(),
                "witnesses": witnesses,
            })
        })
        .collect();
    Value::Array(classes)
}

fn classify(
    common: &Common,
    env_epsilon: Option<String>,
    kappa: &str,
    verify_oracle: bool,
    jobs: usize,
    no_timing: bool,
) -> Result<Output, Failure> {
    let eps = epsilon(common, env_epsilon)?;
    emit_format(common, &[Emit::Json], Emit::Json)?;
    if jobs == 0 {
        return Err(invalid("--jobs must be at least 1"));
    }
    let (sys, name) = system(common)?;
    let base = BasePoint::parse(kappa, sys.rank())?;
    let real = Realization::with_epsilon(&sys, base, eps)?;
    let start = Instant::now();
    let kappa_json: Vec<Value> = real.base().kappa().iter().map(|&k| json_number(k)).collect();

    if !sys.is_irreducible() {
        let report = classify_reducible(&real)?;
        let checks: Vec<Value> = report
            .checks
            .iter()
            .map(|c| {
                json!({
                    "c": word_text(&sys, &c.c),
                    "components": c.components.iter().map(|&k| {
                        sys.components()[k].iter().map(|&s| sys.labels()[s].clone()).collect::<Vec<_>>()
                    }).collect::<Vec<_>>(),
                    "twisted": word_text(&sys, &c.twisted),
                    "vertex_sets_agree": c.vertex_sets_agree,
                    "w_a_is_singleton": c.w_a_is_singleton,
                })
            })
            .collect();
        let holds = report.all_hold();
        let value = json!({
            "system": name,
            "reducible": true,
            "kappa": kappa_json,
            "checks": checks,
            "all_hold": holds,
            "runtime_ms": (!no_timing).then(|| start.elapsed().as_millis() as u64),
            "epsilon": json_number(eps),
        });
        return Ok(Output::json(value, if holds { EXIT_OK } else { EXIT_DISAGREEMENT }));
    }

    let fans = classify_cambrian_fans(&sys, real.base())?;
    let (classification, oracle) = if verify_oracle {
        let report = verify_against_oracle(&real, jobs)?;
        let oracle = json!({
            "classes": report.oracle_classes.iter()
                .map(|c| c.iter().map(|w| word_text(&sys, w)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "witnesses_verified": report.witnesses_verified,
            "counterexample": report.counterexample.as_ref().map(|(a, b, same, congruent)| json!({
                "c1": word_text(&sys, a),
                "c2": word_text(&sys, b),
                "same_class": same,
                "congruent": congruent,
            })),
        });
        let agree = report.agreement && report.witnesses_verified;
        (report.classification, Some((agree, oracle)))
    } else {
        (crate::isometry::classify_associahedra(&real)?, None)
    };
    let code = match &oracle {
        Some((false, _)) => EXIT_DISAGREEMENT,
        _ => EXIT_OK,
    };
    let value = json!({
        "system": name,
        "kappa": kappa_json,
        "balanced": real.base().is_balanced(),
        "classes": classes_json(&sys, &classification),
        "fan_classes": classes_json(&sys, &fans.classification),
        "fan_caveat": fans.caveat,
        "oracle_agreement": oracle.as_ref().map(|(agree, _)| *agree),
        "oracle": oracle.map(|(_, o)| o),
        "runtime_ms": (!no_timing).then(|| start.elapsed().as_millis() as u64),
        "epsilon": json_number(eps),
    });
    Ok(Output::json(value, code))
}
