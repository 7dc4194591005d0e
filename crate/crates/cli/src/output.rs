use serde_json::{json, Value};

use crate::cli::Format;

/// Result of one command, renderable in every output format.
#[derive(Debug, Default)]
pub struct Output {
    /// Payload of the json envelope.
    pub json: Value,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Plain rendering when the result is a single value or free text;
    /// otherwise plain output is the aligned table.
    pub plain: Option<String>,
    /// Side remarks, printed on stderr for plain and csv output.
    pub notes: Vec<String>,
}

impl Output {
    pub fn table(headers: &[&str], rows: Vec<Vec<String>>, json: Value) -> Self {
        Output { json, headers: headers.iter().map(|h| h.to_string()).collect(), rows, ..Output::default() }
    }

    pub fn with_plain(mut self, plain: impl Into<String>) -> Self {
        self.plain = Some(plain.into());
        self
    }
}

pub struct Meta<'a> {
    pub command: &'a str,
    pub deterministic: bool,
}

pub fn render(output: &Output, format: Format, meta: &Meta<'_>) -> String {
    match format {
        Format::Plain => match &output.plain {
            Some(text) => format!("{text}\n"),
            None => aligned(&output.headers, &output.rows),
        },
        Format::Csv => csv_text(&output.headers, &output.rows),
        Format::Json => {
            let mut doc = serde_json::Map::new();
            doc.insert("tool".into(), json!("padovan"));
            doc.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
            doc.insert("command".into(), json!(meta.command));
            if !meta.deterministic {
                let now = std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0);
                doc.insert("timestamp".into(), json!(now));
            }
            doc.insert("result".into(), output.json.clone());
            let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("json values always serialize");
            text.push('\n');
            text
        }
    }
}

fn aligned(headers: &[String], rows: &[Vec<String>]) -> String {
    let columns = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let numeric: Vec<bool> =
        (0..columns).map(|c| rows.iter().all(|r| r.get(c).is_none_or(|v| v.parse::<f64>().is_ok()))).collect();
    let mut out = String::new();
    for line in std::iter::once(headers).chain(rows.iter().map(Vec::as_slice)) {
        let cells: Vec<String> = line
            .iter()
            .zip(widths.iter().zip(&numeric))
            .map(|(cell, (&w, &right))| if right { format!("{cell:>w$}") } else { format!("{cell:<w$}") })
            .take(columns)
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn csv_text(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(headers).expect("writing to memory");
    for row in rows {
        writer.write_record(row).expect("writing to memory");
    }
    String::from_utf8(writer.into_inner().expect("flushing to memory")).expect("csv of utf-8 fields is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Output {
        Output::table(
            &["a", "rho"],
            vec![vec!["1".into(), "0".into()], vec!["10".into(), "17".into()]],
            json!({"rows": [{"a": 1, "rho": "0"}]}),
        )
    }

    #[test]
    fn plain_is_right_aligned() {
        let meta = Meta { command: "coeffs", deterministic: true };
        assert_eq!(render(&sample(), Format::Plain, &meta), " a  rho\n 1    0\n10   17\n");
    }

    #[test]
    fn csv_has_header() {
        let meta = Meta { command: "coeffs", deterministic: true };
        assert_eq!(render(&sample(), Format::Csv, &meta), "a,rho\n1,0\n10,17\n");
    }

    #[test]
    fn json_round_trips() {
        let meta = Meta { command: "coeffs", deterministic: true };
        let text = render(&sample(), Format::Json, &meta);
        let parsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text);
        assert!(parsed.get("timestamp").is_none());
        let live = render(&sample(), Format::Json, &Meta { command: "coeffs", deterministic: false });
        assert!(serde_json::from_str::<Value>(&live).unwrap().get("timestamp").is_some());
    }
}
