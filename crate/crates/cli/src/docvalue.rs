//! Deterministic structured-document values and their JSON emitter.
//!
//! Reports must serialize byte-identically for a fixed input and config:
//! map keys are kept sorted (`BTreeMap`), integers print bare, and reals
//! print with 12 significant digits in exponent form. Output is plain
//! JSON so downstream tooling needs no custom reader.

use std::collections::BTreeMap;
use std::fmt::Write;

/// A self-describing document node.
#[derive(Debug, Clone, PartialEq)]
pub enum Doc {
    Null,
    Bool(bool),
    Int(i64),
    Real(f64),
    Str(String),
    List(Vec<Doc>),
    Map(BTreeMap<String, Doc>),
}

impl Doc {
    pub fn str(s: impl Into<String>) -> Doc {
        Doc::Str(s.into())
    }

    pub fn list(items: impl IntoIterator<Item = Doc>) -> Doc {
        Doc::List(items.into_iter().collect())
    }

    pub fn map(entries: impl IntoIterator<Item = (&'static str, Doc)>) -> Doc {
        Doc::Map(
            entries
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        )
    }

    /// Renders as JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out.push('\n');
        out
    }

    fn write(&self, out: &mut String, indent: usize) {
        match self {
            Doc::Null => out.push_str("null"),
            Doc::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Doc::Int(i) => {
                let _ = write!(out, "{i}");
            }
            Doc::Real(x) => out.push_str(&format_real(*x)),
            Doc::Str(s) => write_json_string(out, s),
            Doc::List(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    newline_indent(out, indent + 1);
                    item.write(out, indent + 1);
                }
                newline_indent(out, indent);
                out.push(']');
            }
            Doc::Map(entries) => {
                if entries.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push('{');
                for (i, (k, v)) in entries.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    newline_indent(out, indent + 1);
                    write_json_string(out, k);
                    out.push_str(": ");
                    v.write(out, indent + 1);
                }
                newline_indent(out, indent);
                out.push('}');
            }
        }
    }
}

fn newline_indent(out: &mut String, indent: usize) {
    out.push('\n');
    for _ in 0..indent {
        out.push_str("  ");
    }
}

/// 12 significant digits, exponent form, `-0` normalized away.
pub fn format_real(x: f64) -> String {
    debug_assert!(x.is_finite(), "reports never contain non-finite reals");
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

fn write_json_string(out: &mut String, s: &str) {
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}
