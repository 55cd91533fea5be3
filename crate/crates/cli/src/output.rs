use serde_json::{json, Map, Value};

/// Table-format body of a command result.
pub enum Body {
    /// Preformatted lines, e.g. `q3 = s1^3 - 3*s1*s2 + 3*s3`.
    Lines(Vec<String>),
    Table {
        headers: Vec<&'static str>,
        rows: Vec<Vec<String>>,
        footer: Vec<String>,
    },
}

pub struct Rendered {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub results: Value,
    pub body: Body,
}

impl Rendered {
    pub fn json(&self) -> String {
        let doc = json!({
            "schema": 1,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
        });
        to_json_text(&doc)
    }

    pub fn table(&self) -> String {
        match &self.body {
            Body::Lines(lines) => lines.iter().map(|l| format!("{l}\n")).collect(),
            Body::Table { headers, rows, footer } => {
                let mut out = align(headers, rows);
                for line in footer {
                    out.push_str(line);
                    out.push('\n');
                }
                out
            }
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

fn align(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(headers.to_vec());
    out.push_str(&line(widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

/// Integers as JSON numbers when they fit in `i64`, otherwise as decimal strings.
pub fn int(v: &genus_core::BigInt) -> Value {
    i64::try_from(v).map_or_else(|_| Value::String(v.to_string()), Value::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_are_padded() {
        let text = align(&["m", "index"], &[vec!["1".into(), "12".into()], vec!["10".into(), "3".into()]]);
        assert_eq!(text, "m   index\n--  -----\n1   12\n10  3\n");
    }

    #[test]
    fn large_integers_become_strings() {
        let big: genus_core::BigInt = "123456789012345678901234567890".parse().unwrap();
        assert!(int(&big).is_string());
        assert_eq!(int(&genus_core::BigInt::from(-7)), json!(-7));
    }
}
