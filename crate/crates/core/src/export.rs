//! CSV and JSON writers for the tables.
//!
//! CSV columns are `n,p,q,count` for valley/triple-fall tables and
//! `n,k,count` for Eulerian rows. JSON documents have the shape
//! `{"kind", "max_n", "rows"}` with counts written as decimal strings.

use std::io::Write;

use serde::Serialize;

use crate::scalar::Count;
use crate::series::Specializations;
use crate::tables::{EulerianRow, TableKind, TriStatTable};

#[derive(Debug, Serialize)]
struct TriStatRecord {
    n: usize,
    p: usize,
    q: usize,
    count: String,
}

#[derive(Debug, Serialize)]
struct EulerianRecord {
    n: usize,
    k: usize,
    count: String,
}

#[derive(Debug, Serialize)]
struct Document<R> {
    kind: &'static str,
    max_n: usize,
    rows: Vec<R>,
}

fn kind_name(kind: TableKind) -> &'static str {
    match kind {
        TableKind::All => "tristat",
        TableKind::Irreducible => "tristat-irreducible",
    }
}

fn tristat_records<C: Count>(table: &TriStatTable<C>, max_n: usize) -> Vec<TriStatRecord> {
    table
        .entries()
        .filter(|e| e.0 <= max_n)
        .map(|(n, p, q, c)| TriStatRecord {
            n,
            p,
            q,
            count: c.to_string(),
        })
        .collect()
}

fn eulerian_records<C: Count>(rows: &[EulerianRow<C>]) -> Vec<EulerianRecord> {
    rows.iter()
        .flat_map(|r| {
            r.counts
                .iter()
                .enumerate()
                .map(move |(k, c)| EulerianRecord {
                    n: r.n,
                    k,
                    count: c.to_string(),
                })
        })
        .collect()
}

fn write_csv<R: Serialize, W: Write>(out: W, records: &[R]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Nonzero entries with `n <= max_n`, sorted by `(n, p, q)`.
pub fn write_tristat_csv<C: Count, W: Write>(
    out: W,
    table: &TriStatTable<C>,
    max_n: usize,
) -> csv::Result<()> {
    let records = tristat_records(table, max_n);
    if records.is_empty() {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["n", "p", "q", "count"])?;
        w.flush()?;
        return Ok(());
    }
    write_csv(out, &records)
}

/// Every `k` in `0..n` (zeros included) for each row.
pub fn write_eulerian_csv<C: Count, W: Write>(out: W, rows: &[EulerianRow<C>]) -> csv::Result<()> {
    write_csv(out, &eulerian_records(rows))
}

pub fn tristat_json<C: Count>(table: &TriStatTable<C>, max_n: usize) -> String {
    let doc = Document {
        kind: kind_name(table.kind()),
        max_n,
        rows: tristat_records(table, max_n),
    };
    serde_json::to_string_pretty(&doc).expect("plain records serialize")
}

pub fn eulerian_json<C: Count>(rows: &[EulerianRow<C>]) -> String {
    let max_n = rows.len().saturating_sub(1);
    let doc = Document {
        kind: "eulerian",
        max_n,
        rows: eulerian_records(rows),
    };
    serde_json::to_string_pretty(&doc).expect("plain records serialize")
}

#[derive(Debug, Serialize)]
struct SpecialsRecord {
    n: usize,
    catalan: String,
    motzkin: String,
    narayana: Vec<String>,
    triple_falls: Vec<String>,
}

fn strings(v: &[num_bigint::BigInt]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

/// One row per `n`: the Catalan and Motzkin terms, the Narayana row and
/// the triple-fall distribution.
pub fn specializations_json(specs: &Specializations) -> String {
    let rows = (0..specs.catalan.len())
        .map(|n| SpecialsRecord {
            n,
            catalan: specs.catalan[n].to_string(),
            motzkin: specs.motzkin[n].to_string(),
            narayana: strings(&specs.narayana[n]),
            triple_falls: strings(&specs.triple_falls[n]),
        })
        .collect();
    let doc = Document {
        kind: "specials",
        max_n: specs.catalan.len().saturating_sub(1),
        rows,
    };
    serde_json::to_string_pretty(&doc).expect("plain records serialize")
}
