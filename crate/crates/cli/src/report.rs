use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Self { name: name.into(), pass }
    }
}

/// A table printed as TSV, or as an array of objects in JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub query: Vec<(String, String)>,
    pub method: String,
    pub value: String,
    pub checks: Vec<Check>,
    pub table: Option<Table>,
    /// Extra key/value lines; not part of pass/fail.
    pub notes: Vec<(String, String)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

impl Report {
    pub fn new(method: impl Into<String>) -> Self {
        Self { method: method.into(), ..Self::default() }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.query.push((key.to_string(), value.to_string()));
        self
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        let query: Map<String, Value> = self.query.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        let checks: Vec<Value> = self.checks.iter().map(|c| json!({"name": c.name, "pass": c.pass})).collect();
        let mut out = json!({
            "query": query,
            "method": self.method,
            "value": self.value,
            "checks": checks,
        });
        if let Some(t) = &self.table {
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|r| Value::Object(t.header.iter().cloned().zip(r.iter().map(|v| Value::String(v.clone()))).collect()))
                .collect();
            out["rows"] = Value::Array(rows);
        }
        for (k, v) in &self.notes {
            out[k] = Value::String(v.clone());
        }
        out
    }

    /// Tables print as header plus rows; otherwise `value<TAB>method`.
    /// Checks follow as `name<TAB>pass|fail`.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        match &self.table {
            Some(t) => {
                s.push_str(&t.header.join("\t"));
                s.push('\n');
                for r in &t.rows {
                    s.push_str(&r.join("\t"));
                    s.push('\n');
                }
            }
            None => {
                s.push_str(&format!("{}\t{}\n", self.value, self.method));
            }
        }
        for (k, v) in &self.notes {
            s.push_str(&format!("{k}\t{v}\n"));
        }
        for c in &self.checks {
            s.push_str(&format!("{}\t{}\n", c.name, if c.pass { "pass" } else { "fail" }));
        }
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.to_json()),
            Format::Tsv => self.to_tsv(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_schema() {
        let mut r = Report::new("det").param("N", 2);
        r.value = "6".into();
        r.checks.push(Check::new("x", true));
        let v = r.to_json();
        assert_eq!(v["value"], "6");
        assert_eq!(v["query"]["N"], "2");
        assert_eq!(v["checks"][0]["pass"], true);
        assert_eq!(r.to_tsv(), "6\tdet\nx\tpass\n");
    }
}
