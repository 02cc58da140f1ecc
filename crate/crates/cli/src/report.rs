use hcycle_core::harmonic::Mode;
use hcycle_core::{ChainComplex, Selection};
use num_bigint::BigInt;
use serde_json::Value;

/// Rewrites every JSON integer as a decimal string.
pub fn stringify_integers(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Value::String(n.to_string()),
        Value::Array(a) => Value::Array(a.into_iter().map(stringify_integers).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, stringify_integers(v))).collect()),
        other => other,
    }
}

pub fn emit_json(v: &Value) {
    let text = serde_json::to_string_pretty(&stringify_integers(v.clone())).expect("values serialize");
    println!("{text}");
}

pub fn join(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub fn labels(x: &ChainComplex, s: &Selection) -> Vec<String> {
    s.labels(x).into_iter().map(str::to_string).collect()
}

pub fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Brute => "brute",
        Mode::Fast => "fast",
        Mode::Both => "both",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn integers_become_strings() {
        let v = stringify_integers(json!({"a": 1, "b": [2, -3, 0.5], "c": {"d": true}}));
        assert_eq!(v, json!({"a": "1", "b": ["2", "-3", 0.5], "c": {"d": true}}));
    }
}
