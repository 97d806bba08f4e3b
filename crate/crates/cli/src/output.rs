use serde::Serialize;
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

/// A rendered command result. `ok` is false when a property check failed.
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
    pub tsv: Table,
    pub ok: bool,
}

impl Output {
    pub fn new(text: String, json: &impl Serialize, tsv: Table, ok: bool) -> Self {
        Output { text, json: serde_json::to_value(json).expect("reports are plain data"), tsv, ok }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Tsv => self.tsv.to_string(),
        }
    }
}

/// Rows of tab-separated cells under a header. Several sections may be stacked.
#[derive(Default)]
pub struct Table {
    sections: Vec<(Vec<String>, Vec<Vec<String>>)>,
}

impl Table {
    pub fn section(&mut self, header: &[&str]) -> &mut Vec<Vec<String>> {
        self.sections.push((header.iter().map(|h| h.to_string()).collect(), Vec::new()));
        &mut self.sections.last_mut().expect("just pushed").1
    }
}

impl std::fmt::Display for Table {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, (header, rows)) in self.sections.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            writeln!(f, "{}", header.join("\t"))?;
            for row in rows {
                writeln!(f, "{}", row.join("\t"))?;
            }
        }
        Ok(())
    }
}

/// `[a, b, c]` with each entry formatted by `fmt`.
pub fn list<T>(items: &[T], fmt: impl Fn(&T) -> String) -> String {
    let inner: Vec<String> = items.iter().map(fmt).collect();
    format!("[{}]", inner.join(", "))
}

pub fn push_line(s: &mut String, line: impl AsRef<str>) {
    writeln!(s, "{}", line.as_ref()).expect("writing to a String cannot fail");
}
