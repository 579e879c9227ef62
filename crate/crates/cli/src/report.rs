use serde_json::Value;

/// What a command produced. Usage problems never reach the report stage.
pub enum Outcome {
    Done(Report),
    Usage(String),
}

enum Line {
    Heading(String),
    Row(String, String),
    Text(String),
}

pub struct Report {
    pub ok: bool,
    json: Value,
    lines: Vec<Line>,
}

impl Report {
    pub fn new(json: Value) -> Self {
        Report { ok: true, json, lines: Vec::new() }
    }

    pub fn set_json(&mut self, json: Value) {
        self.json = json;
    }

    pub fn failed(mut self) -> Self {
        self.ok = false;
        self
    }

    pub fn heading(&mut self, s: impl Into<String>) {
        self.lines.push(Line::Heading(s.into()));
    }

    pub fn row(&mut self, key: impl Into<String>, value: impl ToString) {
        self.lines.push(Line::Row(key.into(), value.to_string()));
    }

    pub fn text(&mut self, s: impl Into<String>) {
        self.lines.push(Line::Text(s.into()));
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            return format!("{}\n", serde_json::to_string_pretty(&self.json).expect("serializable"));
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.lines.len() {
            match &self.lines[i] {
                Line::Heading(h) => {
                    out.push_str(&format!("== {h}\n"));
                    i += 1;
                }
                Line::Text(t) => {
                    out.push_str(t);
                    out.push('\n');
                    i += 1;
                }
                Line::Row(..) => {
                    let start = i;
                    while i < self.lines.len() && matches!(self.lines[i], Line::Row(..)) {
                        i += 1;
                    }
                    let rows: Vec<(&str, &str)> = self.lines[start..i]
                        .iter()
                        .map(|l| match l {
                            Line::Row(k, v) => (k.as_str(), v.as_str()),
                            _ => unreachable!(),
                        })
                        .collect();
                    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                    for (k, v) in rows {
                        out.push_str(&format!("{k:<width$}  {v}\n"));
                    }
                }
            }
        }
        out
    }
}
