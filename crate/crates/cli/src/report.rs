//! Key-value text and JSON rendering of command results.

use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub citations: Vec<String>,
    pub assumptions: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            results: Map::new(),
            citations: Vec::new(),
            assumptions: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), v.into());
        self
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), v.into());
        self
    }

    pub fn cite(&mut self, id: &str) {
        if !self.citations.iter().any(|c| c == id) {
            self.citations.push(id.to_string());
        }
    }

    pub fn assume(&mut self, a: &str) {
        if !self.assumptions.iter().any(|c| c == a) {
            self.assumptions.push(a.to_string());
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), self.command.clone().into());
        m.insert("inputs".into(), Value::Object(self.inputs.clone()));
        m.insert("results".into(), Value::Object(self.results.clone()));
        m.insert("citations".into(), self.citations.clone().into());
        m.insert("assumptions".into(), self.assumptions.clone().into());
        Value::Object(m)
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        section(&mut out, "inputs", &self.inputs);
        section(&mut out, "results", &self.results);
        list(&mut out, "citations", &self.citations);
        list(&mut out, "assumptions", &self.assumptions);
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn section(out: &mut String, title: &str, m: &Map<String, Value>) {
    if m.is_empty() {
        return;
    }
    out.push_str(&format!("{title}:\n"));
    for (k, v) in m {
        entry(out, 1, k, v);
    }
}

fn list(out: &mut String, title: &str, items: &[String]) {
    if items.is_empty() {
        return;
    }
    out.push_str(&format!("{title}:\n"));
    for i in items {
        out.push_str(&format!("  - {i}\n"));
    }
}

fn entry(out: &mut String, depth: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, v) in m {
                entry(out, depth + 1, k, v);
            }
        }
        Value::Array(items) if items.is_empty() || items.iter().all(Value::is_number) => {
            out.push_str(&format!("{pad}{key}: {}\n", inline(v)));
        }
        Value::Array(items) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for item in items {
                match item {
                    Value::Object(m) => {
                        let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}={}", inline(v))).collect();
                        out.push_str(&format!("{pad}  - {}\n", parts.join(", ")));
                    }
                    other => out.push_str(&format!("{pad}  - {}\n", inline(other))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{key}: {}\n", scalar(other))),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => {
            let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}={}", inline(v))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => scalar(other),
    }
}
