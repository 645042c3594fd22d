//! Row formats for `seq`.

use std::io::{self, Write};

use serde::Serialize;

use crate::cli::Format;
use crate::seq::{Row, SequenceQuery};

#[derive(Serialize)]
struct JsonRow {
    n: i64,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    interior: Option<String>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    query: &'a SequenceQuery,
    rows: Vec<JsonRow>,
}

fn cells(row: &Row) -> Vec<String> {
    let mut v = vec![row.n.to_string(), row.value.to_string()];
    if let Some(i) = &row.interior {
        v.push(i.to_string());
    }
    if let Some(m) = row.matches {
        v.push(m.to_string());
    }
    v
}

fn header(query: &SequenceQuery, rows: &[Row]) -> Vec<&'static str> {
    let mut h = vec!["n", "value"];
    if query.interior {
        h.push("interior");
    }
    if rows.first().is_some_and(|r| r.matches.is_some()) {
        h.push("match");
    }
    h
}

pub fn write_rows(out: &mut impl Write, query: &SequenceQuery, rows: &[Row]) -> io::Result<()> {
    match query.format {
        Format::Bfile => {
            for r in rows {
                writeln!(out, "{} {}", r.n, r.value)?;
            }
        }
        Format::Csv => {
            writeln!(out, "{}", header(query, rows).join(","))?;
            for r in rows {
                writeln!(out, "{}", cells(r).join(","))?;
            }
        }
        Format::Json => {
            let doc = JsonDoc {
                query,
                rows: rows
                    .iter()
                    .map(|r| JsonRow {
                        n: r.n,
                        value: r.value.to_string(),
                        interior: r.interior.as_ref().map(ToString::to_string),
                        matches: r.matches,
                    })
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Table => {
            let head: Vec<String> = header(query, rows).into_iter().map(String::from).collect();
            let body: Vec<Vec<String>> = rows.iter().map(cells).collect();
            let mut widths: Vec<usize> = head.iter().map(String::len).collect();
            for line in &body {
                for (w, c) in widths.iter_mut().zip(line) {
                    *w = (*w).max(c.len());
                }
            }
            for line in std::iter::once(&head).chain(&body) {
                let padded: Vec<String> = line.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                writeln!(out, "{}", padded.join("  "))?;
            }
        }
    }
    Ok(())
}
