//! Rendering: deterministic JSON, CSV, and human-readable text.
//!
//! Every float anywhere in the output goes through one formatter,
//! `{:.16e}` — 17 significant digits, enough to round-trip any f64
//! exactly — so identical invocations produce byte-identical output and
//! machine consumers recover the library's values to the bit.

use std::io;

use serde::Serialize;

/// One float, full precision, fixed layout.
pub fn fmt_f64(value: f64) -> String {
    format!("{value:.16e}")
}

/// JSON formatter that differs from the compact default only in float
/// layout.
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serialize to a single JSON line (plus trailing newline). Struct fields
/// serialize in declaration order, so the byte stream is a pure function
/// of the values.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("output records serialize infallibly");
    let mut out = String::from_utf8(buf).expect("serializer emits UTF-8");
    out.push('\n');
    out
}

/// Quote a CSV field if it contains a delimiter, quote, or newline.
pub fn csv_field(raw: &str) -> String {
    if raw.contains(',') || raw.contains('"') || raw.contains('\n') {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_owned()
    }
}

/// Join pre-rendered fields into one CSV row.
pub fn csv_row(fields: &[String]) -> String {
    let mut row = fields.join(",");
    row.push('\n');
    row
}
