//! JSON and TSV rendering. Object keys come out sorted and numbers are exact
//! fraction strings, so identical inputs give identical bytes.

use serde_json::{json, Map, Value};
use sylrank_core::report::{ClauseReport, Witness};
use sylrank_core::{ExtendedValue, VerificationReport};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

pub fn value(v: &ExtendedValue) -> Value {
    Value::String(v.to_string())
}

pub fn values(vs: &[ExtendedValue]) -> Value {
    Value::Array(vs.iter().map(value).collect())
}

fn witness(w: &Witness) -> Value {
    let matrices: Map<String, Value> = w.matrices.iter().map(|(k, m)| (k.clone(), Value::String(m.clone()))).collect();
    let vals: Map<String, Value> = w.values.iter().map(|(k, v)| (k.clone(), value(v))).collect();
    json!({
        "ring": w.ring,
        "matrices": matrices,
        "values": vals,
        "relation": w.relation,
    })
}

fn clause(c: &ClauseReport) -> Value {
    json!({
        "clause": c.clause,
        "samples": c.samples,
        "failures": c.failures,
        "status": c.status.as_str(),
        "witness": c.witness.as_ref().map_or(Value::Null, witness),
    })
}

pub fn report(r: &VerificationReport) -> Value {
    let notes: Map<String, Value> = r.notes.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
    json!({
        "subject": r.subject,
        "label": r.label,
        "seed": r.seed,
        "passed": r.passed(),
        "clauses": r.clauses.iter().map(clause).collect::<Vec<_>>(),
        "notes": notes,
    })
}

/// Adds `schema_version` to a top-level object.
pub fn document(mut body: Value) -> Value {
    if let Value::Object(map) = &mut body {
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    }
    body
}

pub fn render(doc: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(doc).expect("JSON values always serialize");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut lines = Vec::new();
            flatten("", doc, &mut lines);
            let mut s = lines.join("\n");
            s.push('\n');
            s
        }
    }
}

/// One `path<TAB>value` line per leaf; arrays are indexed, objects dotted.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push(format!("{prefix}\t"));
            }
            for (i, x) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Value::String(s) => out.push(format!("{prefix}\t{}", s.replace(['\t', '\n'], " "))),
        Value::Null => out.push(format!("{prefix}\t")),
        other => out.push(format!("{prefix}\t{other}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted() {
        let doc = document(json!({"value": "0/1", "b": [1, 2]}));
        assert_eq!(render(&doc, Format::Json), "{\"b\":[1,2],\"schema_version\":1,\"value\":\"0/1\"}\n");
        assert_eq!(render(&doc, Format::Tsv), "b.0\t1\nb.1\t2\nschema_version\t1\nvalue\t0/1\n");
    }

    #[test]
    fn extended_values() {
        assert_eq!(value(&ExtendedValue::ratio(2, 4)), json!("1/2"));
        assert_eq!(value(&ExtendedValue::Infinite), json!("inf"));
        assert_eq!(value(&ExtendedValue::zero()), json!("0/1"));
    }
}
