use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::CliError;

/// A float rendered with 17 significant digits; non-finite values become null.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F17(pub f64);

impl F17 {
    pub fn text(self) -> String {
        if self.0.is_finite() {
            format!("{:.16e}", self.0)
        } else {
            "null".into()
        }
    }
}

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(self.text()).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

pub fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Usage(format!("cannot encode output: {e}")))
}

/// CSV with a header row.
pub fn csv<R, I>(header: &[&str], rows: I) -> Result<String, CliError>
where
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
    I: IntoIterator<Item = R>,
{
    let fail = |e: csv::Error| CliError::Usage(format!("cannot encode csv: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(fail)?;
    for r in rows {
        w.write_record(r).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

/// Coordinates joined by spaces, so they sit in one CSV field.
pub fn coords<T: ToString>(c: &[T]) -> String {
    c.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn latex_tuple<T: ToString>(c: &[T]) -> String {
    format!("({})", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

/// A two-or-more column LaTeX table.
pub fn latex_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("\\begin{{tabular}}{{{}}}\n", "l".repeat(header.len()));
    out.push_str(&format!("{} \\\\\n\\hline\n", header.join(" & ")));
    for r in rows {
        out.push_str(&format!("{} \\\\\n", r.join(" & ")));
    }
    out.push_str("\\end{tabular}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f17_keeps_seventeen_digits() {
        let s = serde_json::to_string(&vec![F17(0.1), F17(-2.5e-3), F17(f64::NAN)]).unwrap();
        assert_eq!(s, "[1.0000000000000001e-1,-2.5000000000000001e-3,null]");
        let back: Vec<Option<f64>> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, vec![Some(0.1), Some(-2.5e-3), None]);
    }

    #[test]
    fn csv_quotes_commas() {
        let out = csv(&["a", "b"], [vec!["1", "x, y"]]).unwrap();
        assert_eq!(out, "a,b\n1,\"x, y\"\n");
    }
}
