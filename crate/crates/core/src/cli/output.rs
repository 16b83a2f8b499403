use std::io::Write;

use crate::error::{Error, Result};

/// Fixed 12-significant-digit scientific notation; identical on every platform.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x:.11e}")
    }
}

pub fn format_opt(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

/// Writes a header and rows as `\n`-terminated CSV.
pub fn write_csv<W: Write>(out: W, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<()> {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let io = |e: csv::Error| Error::Numerical(format!("writing CSV: {e}"));
    writer.write_record(header).map_err(io)?;
    for row in rows {
        writer.write_record(&row).map_err(io)?;
    }
    writer.flush().map_err(|e| Error::Numerical(format!("writing CSV: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format() {
        assert_eq!(format_float(100.0), "1.00000000000e2");
        assert_eq!(format_float(-0.0896992966212406), "-8.96992966212e-2");
        assert_eq!(format_float(f64::NAN), "nan");
        assert_eq!(format_opt(None), "");
    }

    #[test]
    fn csv_quotes_and_newlines() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &["a", "b"], vec![vec!["1".into(), "x, y".into()]]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "a,b\n1,\"x, y\"\n");
    }
}
