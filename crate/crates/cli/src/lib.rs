//! Command-line front end. [`run`] is the whole program minus process I/O so
//! that tests can drive it directly.

pub mod args;
pub mod schema;

use std::fs;
use std::path::Path;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use nilcone::chain::ChainHiggsBundle;
use nilcone::hecke::{apply_moves, intersection_count, HeckeMove, IntersectionEnumerator};
use nilcone::multgl::{
    euler_prefactor, mult_type111, mult_type12_rank3, mult_type_n, pairing_series_of_polys, GlType,
};
use nilcone::multsimple::{mult_simple, polynomiality_scan, MVector};
use nilcone::polyalg::IntPoly;
use nilcone::rootsys::{cominuscule_nodes, degrees, height_histogram, Family, RootSystem};
use nilcone::{Error, Result};
use serde::Serialize;
use serde_json::{json, Value};

use args::{Cli, Command, Format, MultCommand, Output, TypeArgs};
use schema::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource { .. } => EXIT_RESOURCE,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_DOMAIN,
    }
}

/// Parses `argv` (program name first) and runs the selected command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let echoed = argv.iter().skip(1).cloned().collect();
    match dispatch(cli.command, echoed) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {} [field: {}]: {e}\n", e.name(), e.field().unwrap_or("-")),
        },
    }
}

struct Computed {
    command: &'static str,
    inputs: Value,
    result: Value,
}

fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::Internal(e.to_string()))
}

fn dispatch(cmd: Command, argv: Vec<String>) -> Result<String> {
    let start = Instant::now();
    let (out, computed) = match cmd {
        Command::Mult(MultCommand::Gl(a)) => (a.out.clone(), cmd_mult_gl(&a)?),
        Command::Mult(MultCommand::Simple(a)) => (a.out.clone(), cmd_mult_simple(&a)?),
        Command::Classify(a) => (a.out.clone(), cmd_classify(&a)?),
        Command::Hecke(a) => (a.out.clone(), cmd_hecke(&a)?),
        Command::Rootinfo(a) => (a.out.clone(), cmd_rootinfo(&a.ty)?),
        Command::Scan(a) => (a.out.clone(), cmd_scan(&a)?),
        Command::Pair(a) => (a.out.clone(), cmd_pair(&a)?),
        Command::Count(a) => (a.out.clone(), cmd_count(&a)?),
    };
    let report = Report {
        schema: SCHEMA_VERSION,
        command: computed.command.to_string(),
        argv,
        inputs: computed.inputs,
        result: computed.result,
        version: env!("CARGO_PKG_VERSION").to_string(),
        timing_ms: out.timing.then(|| start.elapsed().as_millis() as u64),
    };
    render(&to_value(&report)?, &out)
}

fn render(report: &Value, out: &Output) -> Result<String> {
    match out.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Internal(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Text => Ok(render_text(report)),
    }
}

/// One `path  value` line per leaf, keys aligned.
pub fn render_text(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten(v, String::new(), &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn flatten(v: &Value, path: String, rows: &mut Vec<(String, String)>) {
    let join = |p: &str, k: &str| if p.is_empty() { k.to_string() } else { format!("{p}.{k}") };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                flatten(x, join(&path, k), rows);
            }
        }
        Value::Array(a) if !a.is_empty() && a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            rows.push((path, items.join(" ")));
        }
        Value::Array(a) if !a.is_empty() => {
            for (i, x) in a.iter().enumerate() {
                flatten(x, join(&path, &i.to_string()), rows);
            }
        }
        _ => rows.push((path, scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(_) => "[]".to_string(),
        Value::Object(_) => "{}".to_string(),
        other => other.to_string(),
    }
}

fn read_file(path: &Path, field: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::domain(field, format!("cannot read {}: {e}", path.display())))
}

fn load_chain(path: &Path) -> Result<ChainHiggsBundle> {
    ChainHiggsBundle::parse_json(&read_file(path, "chain_file")?)
}

fn root_system(t: &TypeArgs) -> Result<RootSystem> {
    RootSystem::new(t.family.parse::<Family>()?, t.rank)
}

fn type_inputs(t: &TypeArgs) -> Value {
    json!({"type": t.family.to_uppercase(), "rank": t.rank})
}

fn cmd_mult_gl(a: &args::MultGlArgs) -> Result<Computed> {
    let kind: GlType = a.kind.parse()?;
    let (inputs, m) = match kind {
        GlType::Bundle => {
            let n = a.n.ok_or_else(|| Error::domain("n", "--n is required for type n"))?;
            (json!({"g": a.g, "n": n, "type": "n"}), mult_type_n(a.g, n)?)
        }
        GlType::Chain => {
            let c = match (&a.m, &a.chain_file) {
                (Some(m), None) => ChainHiggsBundle::from_m_vector(a.g, m, 0)?,
                (None, Some(p)) => {
                    let c = load_chain(p)?;
                    if c.genus() != a.g {
                        return Err(Error::domain(
                            "g",
                            format!("--g {} disagrees with chain genus {}", a.g, c.genus()),
                        ));
                    }
                    c
                }
                _ => return Err(Error::domain("m", "give exactly one of --m and --chain-file")),
            };
            if let Some(n) = a.n {
                if n != c.rank() as i64 {
                    return Err(Error::domain("n", format!("--n {n} disagrees with chain rank {}", c.rank())));
                }
            }
            let inputs = json!({"g": a.g, "n": c.rank(), "type": "chain", "m": c.m_vector()});
            (inputs, mult_type111(&c)?)
        }
        GlType::Type12 => {
            if let Some(n) = a.n.filter(|&n| n != 3) {
                return Err(Error::domain("n", format!("type12 is rank 3, got --n {n}")));
            }
            let s = a
                .twol_minus_v
                .ok_or_else(|| Error::domain("twol_minus_v", "--twol-minus-v is required for type12"))?;
            let inputs = json!({"g": a.g, "n": 3, "type": "type12", "twol_minus_v": s});
            (inputs, mult_type12_rank3(a.g, s)?)
        }
    };
    Ok(Computed {
        command: "mult gl",
        inputs,
        result: to_value(&m.to_json())?,
    })
}

fn cmd_mult_simple(a: &args::MultSimpleArgs) -> Result<Computed> {
    let r = root_system(&a.ty)?;
    let m = MVector(a.m.clone());
    let res = mult_simple(&r, &m)?;
    let mut inputs = type_inputs(&a.ty);
    inputs["m"] = to_value(&m)?;
    Ok(Computed {
        command: "mult simple",
        inputs,
        result: to_value(&res.to_json())?,
    })
}

fn cmd_classify(a: &args::ClassifyArgs) -> Result<Computed> {
    let c = load_chain(&a.chain_file)?;
    let v = c.classify();
    let res = ClassifyResult {
        stable: c.is_stable(),
        very_stable: v.is_very_stable(),
        reason: v.reason(),
        m: c.m_vector(),
    };
    Ok(Computed {
        command: "classify",
        inputs: json!({"chain": to_value(&c.to_json())?}),
        result: to_value(&res)?,
    })
}

fn cmd_hecke(a: &args::HeckeArgs) -> Result<Computed> {
    let c = load_chain(&a.chain_file)?;
    let text = match (&a.moves_file, &a.moves) {
        (Some(p), None) => read_file(p, "moves_file")?,
        (None, Some(s)) => s.clone(),
        _ => return Err(Error::domain("moves", "give exactly one of --moves and --moves-file")),
    };
    let moves: Vec<HeckeMove> =
        serde_json::from_str(&text).map_err(|e| Error::invariant("moves_json_schema", e.to_string()))?;
    let (out, steps) = apply_moves(&c, &moves)?;
    let res = HeckeResult {
        chain: out.to_json(),
        steps,
    };
    Ok(Computed {
        command: "hecke",
        inputs: json!({"chain": to_value(&c.to_json())?, "moves": to_value(&moves)?}),
        result: to_value(&res)?,
    })
}

fn cmd_rootinfo(t: &TypeArgs) -> Result<Computed> {
    let r = root_system(t)?;
    let info = RootInfo {
        lie_type: r.lie_type().to_string(),
        numbering: "bourbaki".to_string(),
        cartan: r.cartan().rows().to_vec(),
        positive_roots: r
            .positive_roots()
            .iter()
            .map(|a| RootJson {
                coeffs: a.coeffs().to_vec(),
                height: a.height(),
            })
            .collect(),
        histogram: height_histogram(&r).into_iter().map(|(h, c)| (h.to_string(), c)).collect(),
        degrees: degrees(&r)?.as_slice().to_vec(),
        cominuscule_nodes: cominuscule_nodes(&r).into_iter().collect(),
    };
    Ok(Computed {
        command: "rootinfo",
        inputs: type_inputs(t),
        result: to_value(&info)?,
    })
}

fn cmd_scan(a: &args::ScanArgs) -> Result<Computed> {
    let r = root_system(&a.ty)?;
    let rep = polynomiality_scan(&r, a.bound, a.cap)?;
    let entries = rep.to_json();
    let res = ScanResult {
        total: entries.len(),
        polynomial_count: rep.polynomial_count(),
        entries,
    };
    let mut inputs = type_inputs(&a.ty);
    inputs["bound"] = json!(a.bound);
    inputs["cap"] = json!(a.cap);
    Ok(Computed {
        command: "scan",
        inputs,
        result: to_value(&res)?,
    })
}

fn series_strings(pa: &IntPoly, pb: &IntPoly, a: &args::PairArgs) -> Result<Vec<String>> {
    let s = pairing_series_of_polys(pa, pb, a.g, a.n, a.order)?;
    Ok(s.coeffs().iter().map(ToString::to_string).collect())
}

fn cmd_pair(a: &args::PairArgs) -> Result<Computed> {
    if a.a.is_empty() || a.b.is_empty() {
        return Err(Error::domain("a", "--a and --b need at least one coefficient"));
    }
    let pa = IntPoly::from_i64s(&a.a);
    let pb = IntPoly::from_i64s(&a.b);
    let series = series_strings(&pa, &pb, a)?;
    let swapped = series_strings(&pb, &pa, a)?;
    let res = PairResult {
        symmetric: series == swapped,
        series,
        order: a.order,
        prefactor_exponent: euler_prefactor(a.g, a.n)?,
    };
    Ok(Computed {
        command: "pair",
        inputs: json!({"g": a.g, "n": a.n, "a": a.a, "b": a.b, "order": a.order}),
        result: to_value(&res)?,
    })
}

fn cmd_count(a: &args::CountArgs) -> Result<Computed> {
    let c = load_chain(&a.chain_file)?;
    let count = intersection_count(&c)?;
    let (enumerated, assignments) = if a.enumerate {
        let mut it = IntersectionEnumerator::new(&c, a.cap)?;
        if a.list {
            let all: Vec<_> = it.by_ref().collect();
            (Some(all.len() as u64), Some(all))
        } else {
            let mut k = 0u64;
            while it.advance().is_some() {
                k += 1;
            }
            (Some(k), None)
        }
    } else {
        (None, None)
    };
    let res = CountResult {
        count: count.to_string(),
        enumerated,
        assignments,
    };
    Ok(Computed {
        command: "count",
        inputs: json!({"chain": to_value(&c.to_json())?, "enumerate": a.enumerate, "cap": a.cap}),
        result: to_value(&res)?,
    })
}
