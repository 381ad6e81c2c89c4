//! Report documents and the three output formats.
//!
//! Every integer that can exceed machine range is rendered as an exact
//! decimal string; JSON reports are typed documents whose parse/render
//! round-trip is the identity.

use serde::{Deserialize, Serialize};

use selfdual::bounds::{BoundResult, PairingClass, TableReport};
use selfdual::lie::GrassmannDims;

use crate::doc::{GroupDoc, PointDoc};

#[derive(Copy, Clone, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Quotes a CSV field when needed (commas, quotes, newlines).
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}

// ---------------------------------------------------------------------------
// schur
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct SchurDoc {
    pub n: i64,
    pub weight: Vec<u32>,
    pub polynomial: String,
}

pub fn render_schur(doc: &SchurDoc, format: Format) -> String {
    match format {
        Format::Text => doc.polynomial.clone(),
        Format::Csv => format!(
            "n,weight,polynomial\n{},{},{}",
            doc.n,
            csv_field(&join(&doc.weight, ";")),
            csv_field(&doc.polynomial)
        ),
        Format::Json => to_json(doc),
    }
}

// ---------------------------------------------------------------------------
// dim
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct GrassmannDoc {
    pub d: u64,
    pub d_reduced: u64,
    pub total_k: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct DimDoc {
    pub n: i64,
    pub points: Vec<PointDoc>,
    pub trivial_multiplicity: String,
    pub grassmann: Option<GrassmannDoc>,
    pub grassmann_note: Option<String>,
}

impl DimDoc {
    pub fn grassmann_from(dims: Result<GrassmannDims, impl std::fmt::Display>) -> (Option<GrassmannDoc>, Option<String>) {
        match dims {
            Ok(g) => (
                Some(GrassmannDoc {
                    d: g.d,
                    d_reduced: g.d_reduced,
                    total_k: g.total_k,
                }),
                None,
            ),
            Err(e) => (None, Some(e.to_string())),
        }
    }
}

pub fn render_dim(doc: &DimDoc, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = format!("trivial_multiplicity = {}", doc.trivial_multiplicity);
            match (&doc.grassmann, &doc.grassmann_note) {
                (Some(g), _) => {
                    out.push_str(&format!(
                        "\nd = {}\nd_reduced = {}\ntotal_k = {}",
                        g.d, g.d_reduced, g.total_k
                    ));
                }
                (None, Some(note)) => out.push_str(&format!("\nambient space undefined: {note}")),
                (None, None) => {}
            }
            out
        }
        Format::Csv => {
            let (d, dr, tk) = doc.grassmann.as_ref().map_or(
                (String::new(), String::new(), String::new()),
                |g| (g.d.to_string(), g.d_reduced.to_string(), g.total_k.to_string()),
            );
            format!(
                "n,trivial_multiplicity,d,d_reduced,total_k,note\n{},{},{},{},{},{}",
                doc.n,
                doc.trivial_multiplicity,
                d,
                dr,
                tk,
                csv_field(doc.grassmann_note.as_deref().unwrap_or(""))
            )
        }
        Format::Json => to_json(doc),
    }
}

// ---------------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ClassDoc {
    pub weight: Vec<u32>,
    pub k: u32,
    pub size: u32,
    pub pairs: u32,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct BoundEntryDoc {
    pub c: u32,
    pub classes: Vec<ClassDoc>,
    pub signature: String,
    pub bound: String,
    pub dimension: String,
    pub parity_floor: u8,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct BoundDoc {
    pub n: i64,
    pub points: Vec<PointDoc>,
    pub results: Vec<BoundEntryDoc>,
}

pub fn bound_entry(class: &PairingClass, result: &BoundResult) -> BoundEntryDoc {
    BoundEntryDoc {
        c: class.c(),
        classes: class
            .classes()
            .iter()
            .map(|e| ClassDoc {
                weight: e.weight().coords().to_vec(),
                k: e.k(),
                size: e.size(),
                pairs: e.pairs(),
            })
            .collect(),
        signature: result.signature().to_string(),
        bound: result.bound().to_string(),
        dimension: result.dimension().to_string(),
        parity_floor: result.parity_floor(),
    }
}

fn class_label(entry: &BoundEntryDoc) -> String {
    let parts: Vec<String> = entry
        .classes
        .iter()
        .map(|c| {
            let weight = format!(
                "({})",
                c.weight.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            );
            let k = if c.k > 0 { format!("_{}", c.k) } else { String::new() };
            format!("{weight}{k}: {}", c.pairs)
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn render_bound(doc: &BoundDoc, format: Format) -> String {
    match format {
        Format::Text => {
            if doc.results.is_empty() {
                return "no valid pairing".to_string();
            }
            doc.results
                .iter()
                .map(|r| {
                    format!(
                        "pairing {}: signature {}, bound {}, dimension {}, parity_floor {}",
                        class_label(r),
                        r.signature,
                        r.bound,
                        r.dimension,
                        r.parity_floor
                    )
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
        Format::Csv => {
            let mut out = String::from("c,pairing,signature,bound,dimension,parity_floor");
            for r in &doc.results {
                let counts = r
                    .classes
                    .iter()
                    .map(|c| c.pairs.to_string())
                    .collect::<Vec<_>>()
                    .join(";");
                out.push_str(&format!(
                    "\n{},{},{},{},{},{}",
                    r.c,
                    csv_field(&counts),
                    r.signature,
                    r.bound,
                    r.dimension,
                    r.parity_floor
                ));
            }
            out
        }
        Format::Json => to_json(doc),
    }
}

// ---------------------------------------------------------------------------
// char
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CharDoc {
    pub n: i64,
    pub groups: Vec<GroupDoc>,
    pub mu: Vec<u32>,
    pub value: String,
}

pub fn render_char(doc: &CharDoc, format: Format) -> String {
    match format {
        Format::Text => doc.value.clone(),
        Format::Csv => {
            let groups = doc
                .groups
                .iter()
                .map(|g| {
                    format!(
                        "({}):{}",
                        join(&g.weight, ","),
                        join(&g.cycles, ",")
                    )
                })
                .collect::<Vec<_>>()
                .join(";");
            format!(
                "n,groups,mu,value\n{},{},{},{}",
                doc.n,
                csv_field(&groups),
                csv_field(&join(&doc.mu, ";")),
                doc.value
            )
        }
        Format::Json => to_json(doc),
    }
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CellDoc {
    pub c: u32,
    pub expected: Vec<String>,
    pub computed: Vec<String>,
    pub pair_counts: Vec<Vec<u32>>,
    pub matched: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct RowDoc {
    pub label: String,
    pub expected_dim: String,
    pub computed_dim: String,
    pub dim_matched: bool,
    pub cells: Vec<CellDoc>,
    pub all_matched: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct TableDoc {
    pub table: u8,
    pub n: i64,
    pub max_c: u32,
    pub rows: Vec<RowDoc>,
    pub all_matched: bool,
    pub mismatches: usize,
}

pub fn table_doc(report: &TableReport) -> TableDoc {
    TableDoc {
        table: report.table,
        n: report.n,
        max_c: report.max_c,
        rows: report
            .rows
            .iter()
            .map(|row| RowDoc {
                label: row.label.clone(),
                expected_dim: row.expected_dim.to_string(),
                computed_dim: row.computed_dim.to_string(),
                dim_matched: row.dim_matched(),
                cells: row
                    .cells
                    .iter()
                    .map(|cell| CellDoc {
                        c: cell.c,
                        expected: cell.expected.iter().map(|v| v.to_string()).collect(),
                        computed: cell.computed.iter().map(|v| v.to_string()).collect(),
                        pair_counts: cell.classes.iter().map(PairingClass::pair_counts).collect(),
                        matched: cell.matched(),
                    })
                    .collect(),
                all_matched: row.all_matched(),
            })
            .collect(),
        all_matched: report.all_matched(),
        mismatches: report.mismatch_count(),
    }
}

fn cell_text(cell: &CellDoc) -> String {
    let shown = if cell.computed.is_empty() {
        "-".to_string()
    } else {
        cell.computed.join(",")
    };
    if cell.matched {
        format!("c={}: {} [ok]", cell.c, shown)
    } else {
        let expected = if cell.expected.is_empty() {
            "-".to_string()
        } else {
            cell.expected.join(",")
        };
        format!("c={}: {} [MISMATCH expected {}]", cell.c, shown, expected)
    }
}

pub fn render_table(doc: &TableDoc, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = format!("table {} (N = {}, c up to {})", doc.table, doc.n, doc.max_c);
            for row in &doc.rows {
                let dim = if row.dim_matched {
                    format!("dim {} [ok]", row.computed_dim)
                } else {
                    format!(
                        "dim {} [MISMATCH expected {}]",
                        row.computed_dim, row.expected_dim
                    )
                };
                let cells = row.cells.iter().map(cell_text).collect::<Vec<_>>().join(" | ");
                out.push_str(&format!("\n{}: {} | {}", row.label, dim, cells));
            }
            let matching = doc.rows.iter().filter(|r| r.all_matched).count();
            out.push_str(&format!(
                "\n{matching}/{} rows match; {} mismatching cells",
                doc.rows.len(),
                doc.mismatches
            ));
            out
        }
        Format::Csv => {
            let mut out = String::from("label,column,expected,computed,matched");
            for row in &doc.rows {
                out.push_str(&format!(
                    "\n{},dim,{},{},{}",
                    csv_field(&row.label),
                    row.expected_dim,
                    row.computed_dim,
                    row.dim_matched
                ));
                for cell in &row.cells {
                    out.push_str(&format!(
                        "\n{},c={},{},{},{}",
                        csv_field(&row.label),
                        cell.c,
                        csv_field(&cell.expected.join(";")),
                        csv_field(&cell.computed.join(";")),
                        cell.matched
                    ));
                }
            }
            out
        }
        Format::Json => to_json(doc),
    }
}

fn join<T: ToString>(values: &[T], sep: &str) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}
