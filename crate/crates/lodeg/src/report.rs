//! Run reports: a key-sorted JSON document, or a plain-text rendering of it.

use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub input: Value,
    pub config: Value,
    pub results: Value,
    pub warnings: Vec<String>,
    /// Stage name to milliseconds. Left empty unless timings were requested,
    /// so that reports stay byte-identical across runs.
    pub timings: Map<String, Value>,
}

impl RunReport {
    pub fn to_value(&self) -> Value {
        // serde_json's map is ordered by key, so the output is sorted
        let mut m = Map::new();
        m.insert("command".into(), Value::String(self.command.clone()));
        m.insert("config".into(), self.config.clone());
        m.insert("input".into(), self.input.clone());
        m.insert("results".into(), self.results.clone());
        m.insert("timings".into(), Value::Object(self.timings.clone()));
        m.insert(
            "warnings".into(),
            Value::Array(self.warnings.iter().cloned().map(Value::String).collect()),
        );
        Value::Object(m)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for (section, value) in [("input", &self.input), ("config", &self.config), ("results", &self.results)] {
            out.push_str(&format!("{section}:\n"));
            render(&mut out, value, 1);
        }
        if !self.warnings.is_empty() {
            out.push_str("warnings:\n");
            for w in &self.warnings {
                out.push_str(&format!("  - {w}\n"));
            }
        }
        if !self.timings.is_empty() {
            out.push_str("timings (ms):\n");
            render(&mut out, &Value::Object(self.timings.clone()), 1);
        }
        out
    }
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Array(a) if a.is_empty() => Some("-".into()),
        Value::Object(m) if m.is_empty() => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = a.iter().filter_map(inline).collect();
            Some(format!("({})", parts.join(", ")))
        }
        _ => None,
    }
}

fn render(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(out, x, depth + 1);
                    }
                }
            }
        }
        other => {
            if let Some(s) = inline(other) {
                out.push_str(&format!("{pad}{s}\n"));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> RunReport {
        RunReport {
            command: "bidegrees".into(),
            input: json!({"sha256": "ab", "path": "s.json"}),
            config: json!({"seed": 1, "primes": [2147483647u32]}),
            results: json!({"bidegrees": [2, 2, 2], "d": 2}),
            warnings: vec![],
            timings: Map::new(),
        }
    }

    #[test]
    fn json_keys_are_sorted_and_reparse() {
        let s = sample().to_json();
        let keys: Vec<String> = match serde_json::from_str::<Value>(&s).unwrap() {
            Value::Object(m) => m.keys().cloned().collect(),
            _ => unreachable!(),
        };
        assert_eq!(keys, ["command", "config", "input", "results", "timings", "warnings"]);
        assert!(s.find("\"path\"").unwrap() < s.find("\"sha256\"").unwrap());
    }

    #[test]
    fn text_rendering() {
        let t = sample().to_text();
        assert!(t.contains("  bidegrees: (2, 2, 2)\n"), "{t}");
        assert!(t.starts_with("command: bidegrees\n"));
        let mut r = sample();
        r.results = json!({"slice": [], "extra": {}});
        let t = r.to_text();
        assert!(t.contains("  slice: -\n") && t.contains("  extra: -\n"), "{t}");
    }
}
