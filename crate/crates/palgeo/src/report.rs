//! Report serialization with fixed-width floats.
//!
//! All numbers are emitted with 17 significant digits so identical runs
//! produce byte-identical, lossless CSV and JSON artifacts.

use serde::Serialize;
use std::io::{self, Write};

/// A float rendered with 17 significant digits.
pub fn f17(x: f64) -> String {
    format!("{x:.16e}")
}

struct F17Formatter;

impl serde_json::ser::Formatter for F17Formatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }
}

/// Serializes any value to JSON with 17-significant-digit floats.
pub fn to_json_string<T: Serialize>(value: &T) -> crate::Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, F17Formatter);
    value.serialize(&mut ser).map_err(crate::Error::from)?;
    Ok(String::from_utf8(out).expect("json is utf-8"))
}
