//! Text and JSON output for executed sessions.
//!
//! Text output is one block per command: a `> command` header followed by
//! the result. JSON output is a single object
//! `{"schema": 1, "results": [...], "error": {...}}` where each result
//! carries `index`, `command` and result-specific fields, and `error` is
//! present only when a command failed. Object keys are sorted, so equal
//! inputs give byte-identical output.

use serde_json::{json, Map, Value};

use super::exec::{ExecError, Execution, OutputValue};
use super::parse::ParseError;
use crate::borel::PrimeFactorization;
use crate::decomp::ExtNat;
use crate::monomial::{Monomial, Variables};
use crate::prime::MonomialPrime;
use crate::resolution::VerifyMode;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

fn prime_names(p: MonomialPrime, vars: &Variables) -> Value {
    json!(vars.mask_names(p.mask()))
}

fn mono(m: &Monomial, vars: &Variables) -> Value {
    json!(m.display(vars).to_string())
}

fn monos(ms: &[Monomial], vars: &Variables) -> Value {
    Value::Array(ms.iter().map(|m| mono(m, vars)).collect())
}

fn prime_powers<'a>(it: impl IntoIterator<Item = (&'a MonomialPrime, &'a u32)>, vars: &Variables) -> Value {
    Value::Array(it.into_iter().map(|(&p, &e)| json!({ "prime": prime_names(p, vars), "exp": e })).collect())
}

fn factorization(f: &PrimeFactorization, vars: &Variables) -> Value {
    prime_powers(f.factors(), vars)
}

fn mode_json(mode: VerifyMode) -> Value {
    match mode {
        VerifyMode::D2 => json!({ "mode": "d2" }),
        VerifyMode::Exactness { bound } => json!({ "mode": "exactness", "bound": bound }),
        VerifyMode::Band { band } => json!({ "mode": "band", "band": band }),
    }
}

fn mode_text(mode: VerifyMode) -> String {
    match mode {
        VerifyMode::D2 => "d^2 = 0".to_string(),
        VerifyMode::Exactness { bound } => format!("exact through degree {bound}"),
        VerifyMode::Band { band } => format!("exact for j - i <= {band}"),
    }
}

fn value_json(v: &OutputValue, vars: &Variables) -> Map<String, Value> {
    let obj = match v {
        OutputValue::Ideal(i) => json!({ "ideal": monos(i.generators(), vars) }),
        OutputValue::Bool(b) => json!({ "value": b }),
        OutputValue::Poset(p) => json!({
            "poset": p.covers().iter().map(|&(i, j)| json!([vars.name(i), vars.name(j)])).collect::<Vec<_>>()
        }),
        OutputValue::QGenerators(g) => json!({ "qgens": monos(g, vars) }),
        OutputValue::Factorization(f) => json!({ "factorization": factorization(f, vars) }),
        OutputValue::Primary(d) => json!({ "primary": prime_powers(d.components(), vars) }),
        OutputValue::Primes(ps) => json!({ "assprimes": ps.iter().map(|&p| prime_names(p, vars)).collect::<Vec<_>>() }),
        OutputValue::Irreducible(cs) => {
            let comps: Vec<Value> = cs
                .iter()
                .map(|c| {
                    let mut m = Map::new();
                    for (i, e) in c.exps().iter().enumerate() {
                        let e = match e {
                            ExtNat::Fin(k) => json!(k),
                            ExtNat::Inf => json!("inf"),
                        };
                        m.insert(vars.name(i).to_string(), e);
                    }
                    Value::Object(m)
                })
                .collect();
            json!({ "irreducible": comps })
        }
        OutputValue::Colon(c) => json!({
            "numerator": factorization(&c.numerator, vars),
            "denominator": factorization(&c.denominator, vars),
        }),
        OutputValue::Number { name, value } => json!({ *name: value }),
        OutputValue::Cm(c) => json!({ "cohen_macaulay": c.is_cohen_macaulay(), "case": c.to_string() }),
        OutputValue::Resolution { method, construction, betti, minimal } => json!({
            "method": method.name(),
            "construction": construction,
            "ranks": betti.ranks(),
            "betti": betti.to_json(),
            "minimal": minimal,
        }),
        OutputValue::Betti(b) => json!({ "betti": b.to_json() }),
        OutputValue::Certificate(c) => {
            let mut m = mode_json(c.mode);
            m["ok"] = json!(true);
            m["points"] = json!(c.points);
            m
        }
        OutputValue::Complex(cx) => json!({ "complex": cx.to_json(vars) }),
    };
    match obj {
        Value::Object(m) => m,
        _ => unreachable!("every result is an object"),
    }
}

fn value_text(v: &OutputValue, vars: &Variables) -> String {
    match v {
        OutputValue::Ideal(i) => i.display(vars).to_string(),
        OutputValue::Bool(b) => b.to_string(),
        OutputValue::Poset(p) => p.display(vars).to_string(),
        OutputValue::QGenerators(g) => {
            let parts: Vec<String> = g.iter().map(|m| m.display(vars).to_string()).collect();
            format!("Q({})", parts.join(", "))
        }
        OutputValue::Factorization(f) => f.display(vars).to_string(),
        OutputValue::Primary(d) => d.display(vars).to_string(),
        OutputValue::Primes(ps) => {
            let parts: Vec<String> = ps.iter().map(|p| p.display(vars).to_string()).collect();
            format!("{{{}}}", parts.join(", "))
        }
        OutputValue::Irreducible(cs) => {
            if cs.is_empty() {
                return "(1)".to_string();
            }
            let parts: Vec<String> = cs.iter().map(|c| c.display(vars).to_string()).collect();
            parts.join(" ∩ ")
        }
        OutputValue::Colon(c) => format!("{} : {}", c.numerator.display(vars), c.denominator.display(vars)),
        OutputValue::Number { value, .. } => value.to_string(),
        OutputValue::Cm(c) => format!("{} ({c})", c.is_cohen_macaulay()),
        OutputValue::Resolution { method, construction, betti, minimal } => {
            let ranks: Vec<String> = betti.ranks().iter().map(usize::to_string).collect();
            format!(
                "{}: {construction}\nranks: {}\nminimal: {minimal}\n{}",
                method.name(),
                ranks.join(" "),
                betti.to_text().trim_end()
            )
        }
        OutputValue::Betti(b) => b.to_text().trim_end().to_string(),
        OutputValue::Certificate(c) => format!("ok: {} ({} multidegrees)", mode_text(c.mode), c.points),
        OutputValue::Complex(cx) => cx.display(vars).to_string().trim_end().to_string(),
    }
}

fn error_json(e: &ExecError) -> Value {
    json!({
        "index": e.index,
        "command": e.command,
        "line": e.location.line,
        "column": e.location.column,
        "message": e.error.to_string(),
    })
}

/// Render the outputs of `exec`; a failed command is included last.
pub fn render(exec: &Execution, format: Format) -> String {
    let vars = &exec.vars;
    match format {
        Format::Json => {
            let results: Vec<Value> = exec
                .outputs
                .iter()
                .map(|o| {
                    let mut m = value_json(&o.value, vars);
                    m.insert("index".into(), json!(o.index));
                    m.insert("command".into(), json!(o.command));
                    Value::Object(m)
                })
                .collect();
            let mut top = json!({ "schema": SCHEMA_VERSION, "results": results });
            if let Some(e) = &exec.error {
                top["error"] = error_json(e);
            }
            let mut s = serde_json::to_string_pretty(&top).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            if exec.outputs.is_empty() && exec.error.is_none() {
                return "[]\n".to_string();
            }
            let mut s = String::new();
            for o in &exec.outputs {
                s.push_str(&format!("> {}\n{}\n", o.command, value_text(&o.value, vars)));
            }
            if let Some(e) = &exec.error {
                s.push_str(&render_error(e));
            }
            s
        }
    }
}

/// `error: ...` line for a failed command.
pub fn render_error(e: &ExecError) -> String {
    format!("error: {e}\n")
}

pub fn render_parse_error(e: &ParseError, format: Format) -> String {
    match format {
        Format::Text => format!("parse error: {e}\n"),
        Format::Json => {
            let v = json!({
                "schema": SCHEMA_VERSION,
                "error": {
                    "kind": "parse",
                    "line": e.location.line,
                    "column": e.location.column,
                    "message": e.to_string(),
                }
            });
            let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
            s.push('\n');
            s
        }
    }
}
