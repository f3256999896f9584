//! Text renderers. Markdown tables are also parsed back so the `table`
//! output can be checked against its JSON form.

use std::fmt::Write as _;

use dynkin_core::rational::{self, Rational};
use dynkin_core::table::{closed_forms, TableColumn};
use dynkin_core::verify::VerifyReport;
use dynkin_core::{Error, Family, LieType, Result};
use serde::Serialize;

pub const TABLE_ROWS: [&str; 5] = ["principal index", "D", "a", "b", "D/(b·rk)"];

pub fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialisable") + "\n"
}

pub fn csv_rows<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("serialisable");
    }
    String::from_utf8(w.into_inner().expect("in-memory")).expect("utf-8")
}

fn header(col: &TableColumn) -> String {
    if col.closed_forms.is_some() {
        format!("{} (n={})", col.label, col.lie_type.rank())
    } else {
        col.label.clone()
    }
}

fn cell(value: String, form: Option<&str>) -> String {
    match form {
        Some(f) if f != value => format!("{value} = {f}"),
        _ => value,
    }
}

fn cells(col: &TableColumn) -> [String; 5] {
    let f = col.closed_forms.as_ref();
    [
        cell(
            rational::render(&col.principal_index),
            f.map(|f| f.principal_index.as_str()),
        ),
        cell(rational::render(&col.d), f.map(|f| f.d.as_str())),
        cell(col.a.to_string(), f.map(|f| f.a.as_str())),
        cell(col.b.to_string(), f.map(|f| f.b.as_str())),
        rational::render(&col.d_over_b_rank),
    ]
}

/// One column per family, rows in the order of [`TABLE_ROWS`].
pub fn table_markdown(cols: &[TableColumn]) -> String {
    let mut out = String::from("| |");
    for c in cols {
        write!(out, " {} |", header(c)).unwrap();
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(cols.len()));
    out.push('\n');
    let rendered: Vec<[String; 5]> = cols.iter().map(cells).collect();
    for (r, name) in TABLE_ROWS.iter().enumerate() {
        write!(out, "| {name} |").unwrap();
        for c in &rendered {
            write!(out, " {} |", c[r]).unwrap();
        }
        out.push('\n');
    }
    out
}

fn split_row(line: &str) -> Vec<String> {
    let inner = line.trim().trim_start_matches('|').trim_end_matches('|');
    inner.split('|').map(|c| c.trim().to_string()).collect()
}

fn parse_header(h: &str) -> Result<LieType> {
    match h.split_once(" (n=") {
        Some((label, rank)) => {
            let family = label
                .strip_suffix("_n")
                .and_then(|l| l.chars().next())
                .and_then(Family::from_letter)
                .ok_or_else(|| Error::Parse(format!("bad column header {h:?}")))?;
            let rank = rank
                .trim_end_matches(')')
                .parse()
                .map_err(|_| Error::Parse(format!("bad rank in {h:?}")))?;
            LieType::new(family, rank)
        }
        None => h.parse(),
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    rational::parse(s).ok_or_else(|| Error::Parse(format!("bad number {s:?}")))
}

fn parse_int(s: &str) -> Result<i64> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

/// Value part of a cell, dropping a trailing `= closed form`.
fn value_of(cell: &str) -> &str {
    cell.split_once(" = ").map_or(cell, |(v, _)| v)
}

/// Inverse of [`table_markdown`].
pub fn parse_table_markdown(text: &str) -> Result<Vec<TableColumn>> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if lines.len() != 2 + TABLE_ROWS.len() {
        return Err(Error::Parse(format!("expected 7 table lines, got {}", lines.len())));
    }
    let headers = split_row(lines[0]);
    let rows: Vec<Vec<String>> = lines[2..].iter().map(|l| split_row(l)).collect();
    for (row, name) in rows.iter().zip(TABLE_ROWS) {
        if row.len() != headers.len() || row[0] != name {
            return Err(Error::Parse(format!("malformed row {name:?}")));
        }
    }
    let mut cols = Vec::new();
    for (j, h) in headers.iter().enumerate().skip(1) {
        let lie_type = parse_header(h)?;
        let classical = lie_type.family().is_classical();
        cols.push(TableColumn {
            label: if classical {
                format!("{}_n", lie_type.family().letter())
            } else {
                lie_type.to_string()
            },
            lie_type,
            principal_index: parse_rational(value_of(&rows[0][j]))?,
            d: parse_rational(value_of(&rows[1][j]))?,
            a: parse_int(value_of(&rows[2][j]))?,
            b: parse_int(value_of(&rows[3][j]))?,
            d_over_b_rank: parse_rational(&rows[4][j])?,
            closed_forms: closed_forms(lie_type.family()),
        });
    }
    Ok(cols)
}

#[derive(Serialize)]
struct TableCsvRow<'a> {
    label: &'a str,
    lie_type: String,
    principal_index: String,
    d: String,
    a: i64,
    b: i64,
    d_over_b_rank: String,
    principal_index_form: &'a str,
    d_form: &'a str,
    a_form: &'a str,
    b_form: &'a str,
}

pub fn table_csv(cols: &[TableColumn]) -> String {
    let rows: Vec<TableCsvRow> = cols
        .iter()
        .map(|c| {
            let f = c.closed_forms.as_ref();
            TableCsvRow {
                label: &c.label,
                lie_type: c.lie_type.to_string(),
                principal_index: rational::render(&c.principal_index),
                d: rational::render(&c.d),
                a: c.a,
                b: c.b,
                d_over_b_rank: rational::render(&c.d_over_b_rank),
                principal_index_form: f.map_or("", |f| &f.principal_index),
                d_form: f.map_or("", |f| &f.d),
                a_form: f.map_or("", |f| &f.a),
                b_form: f.map_or("", |f| &f.b),
            }
        })
        .collect();
    csv_rows(&rows)
}

pub fn markdown_rows(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n", headers.join(" | "));
    out.push('|');
    out.push_str(&"---|".repeat(headers.len()));
    out.push('\n');
    for r in rows {
        writeln!(out, "| {} |", r.join(" | ")).unwrap();
    }
    out
}

pub fn verify_markdown(report: &VerifyReport) -> String {
    let rows: Vec<Vec<String>> = report
        .outcomes
        .iter()
        .map(|o| {
            vec![
                o.check.to_string(),
                o.cases.to_string(),
                o.failures.len().to_string(),
                if o.passed() { "pass" } else { "FAIL" }.to_string(),
            ]
        })
        .collect();
    let mut out = markdown_rows(&["check", "cases", "failures", "status"], &rows);
    for o in &report.outcomes {
        for f in &o.failures {
            writeln!(out, "\n- {}: {f}", o.check).unwrap();
        }
    }
    let failed = report.outcomes.iter().filter(|o| !o.passed()).count();
    if failed == 0 {
        writeln!(out, "\nall {} checks passed", report.outcomes.len()).unwrap();
    } else {
        writeln!(out, "\n{failed} of {} checks failed", report.outcomes.len()).unwrap();
    }
    out
}

#[derive(Serialize)]
struct VerifyCsvRow {
    check: String,
    cases: usize,
    failures: usize,
    passed: bool,
}

pub fn verify_csv(report: &VerifyReport) -> String {
    let rows: Vec<VerifyCsvRow> = report
        .outcomes
        .iter()
        .map(|o| VerifyCsvRow {
            check: o.check.to_string(),
            cases: o.cases,
            failures: o.failures.len(),
            passed: o.passed(),
        })
        .collect();
    csv_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dynkin_core::table::table;

    #[test]
    fn markdown_round_trip() {
        for rank in [2, 5, 9] {
            let cols = table(rank).unwrap();
            let md = table_markdown(&cols);
            assert_eq!(parse_table_markdown(&md).unwrap(), cols);
        }
    }

    #[test]
    fn markdown_layout() {
        let md = table_markdown(&table(5).unwrap());
        let lines: Vec<&str> = md.lines().collect();
        assert!(lines[0].starts_with("| | A_n (n=5) | B_n (n=5) |"));
        assert!(lines[0].ends_with("| E6 | E7 | E8 | F4 | G2 |"));
        assert!(lines[2].starts_with("| principal index | 35 = C(n+2,3) |"));
        assert!(lines[6].starts_with("| D/(b·rk) | 1/2 | 1 | 2 | 1 |"));
        assert!(lines[6].ends_with("| 3/2 | 2 | 3 | 3 | 3 |"));
    }

    #[test]
    fn csv_has_header() {
        let csv = table_csv(&table(4).unwrap());
        let mut lines = csv.lines();
        assert_eq!(
            lines.next(),
            Some("label,lie_type,principal_index,d,a,b,d_over_b_rank,principal_index_form,d_form,a_form,b_form")
        );
        assert_eq!(csv.lines().count(), 10);
    }
}
