//! Report serialization: aligned tables, CSV and JSON.
//!
//! JSON documents are produced from the report types' `Serialize` impls, so
//! key names and order follow the struct definitions.

use std::fmt::Write as _;

use serde::Serialize;

use crate::conjecture::SweepReport;
use crate::existence::{ExistenceCertificate, RealizedBijection};
use crate::group::GroupSpec;
use crate::maps::VerificationReport;
use crate::spectrum::OrderSpectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Json,
}

/// Pipe-delimited table, every column padded to its widest cell.
pub fn aligned_table(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let mut s = String::from("|");
        for (cell, w) in cells.iter().zip(&widths) {
            let pad = w - cell.chars().count();
            let _ = write!(s, " {cell}{} |", " ".repeat(pad));
        }
        s.push('\n');
        s
    };
    let mut out = line(headers);
    out.push('|');
    for w in &widths {
        out.push_str(&"-".repeat(w + 2));
        out.push('|');
    }
    out.push('\n');
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

fn csv_string(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

/// Pretty-printed JSON document with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize infallibly");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct SpectrumDoc<'a> {
    group: &'a GroupSpec,
    spectrum: &'a OrderSpectrum,
}

pub fn render_spectrum(group: &GroupSpec, spectrum: &OrderSpectrum, format: OutputFormat) -> String {
    let rows: Vec<Vec<String>> = spectrum
        .entries()
        .iter()
        .map(|(d, c)| vec![d.to_string(), c.to_string()])
        .collect();
    match format {
        OutputFormat::Table => {
            let mut out = format!("group: {group} (order {})\nspectrum: {spectrum}\n", group.order());
            out.push_str(&aligned_table(&["order".into(), "count".into()], &rows));
            out
        }
        OutputFormat::Csv => csv_string(&["order", "count"], &rows),
        OutputFormat::Json => to_json(&SpectrumDoc { group, spectrum }),
    }
}

pub fn render_verification(report: &VerificationReport, format: OutputFormat) -> String {
    let domain = report.map.domain().to_string();
    let codomain = report.map.codomain().to_string();
    match format {
        OutputFormat::Table => {
            let headers = [
                format!("Order of {domain}"),
                domain.clone(),
                codomain.clone(),
                format!("Order of {codomain}"),
            ];
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.domain_order.to_string(),
                        r.element.to_string(),
                        r.image.to_string(),
                        r.image_order.to_string(),
                    ]
                })
                .collect();
            let mut out = format!("map: {}\n", report.map);
            out.push_str(&aligned_table(&headers, &rows));
            let _ = writeln!(out, "mode: {}", report.mode);
            let _ = writeln!(out, "bijective: {}", yes_no(report.bijective));
            let _ = writeln!(out, "verdict: {}", report.verdict);
            if let Some(w) = &report.failure {
                let _ = writeln!(out, "witness: {w}");
            }
            out
        }
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.element.to_string(),
                        r.domain_order.to_string(),
                        r.image.to_string(),
                        r.image_order.to_string(),
                        r.holds.to_string(),
                    ]
                })
                .collect();
            csv_string(&["element", "domain_order", "image", "image_order", "holds"], &rows)
        }
        OutputFormat::Json => to_json(report),
    }
}

#[derive(Serialize)]
struct ExistenceDoc<'a> {
    source_group: &'a GroupSpec,
    target_group: &'a GroupSpec,
    certificate: &'a ExistenceCertificate,
    realized: Option<&'a RealizedBijection>,
}

fn join(values: &[u64]) -> String {
    let parts: Vec<String> = values.iter().map(u64::to_string).collect();
    parts.join(";")
}

pub fn render_existence(
    src: &GroupSpec,
    dst: &GroupSpec,
    cert: &ExistenceCertificate,
    realized: Option<&RealizedBijection>,
    format: OutputFormat,
) -> String {
    let realized_rows = |r: &RealizedBijection| -> Vec<Vec<String>> {
        r.rows
            .iter()
            .map(|row| {
                vec![
                    row.element_order.to_string(),
                    row.element.to_string(),
                    row.image.to_string(),
                    row.image_order.to_string(),
                ]
            })
            .collect()
    };
    match format {
        OutputFormat::Table => {
            let mut out = format!("{src} -> {dst} (mode {})\n", cert.mode);
            let _ = writeln!(out, "source spectrum: {}", cert.source);
            let _ = writeln!(out, "target spectrum: {}", cert.target);
            let _ = writeln!(
                out,
                "feasible: {} (flow {} of {})",
                yes_no(cert.feasible),
                cert.flow_value,
                cert.source.group_order()
            );
            if let Some(assignment) = &cert.assignment {
                let rows: Vec<Vec<String>> = assignment
                    .iter()
                    .map(|a| {
                        vec![
                            a.source_order.to_string(),
                            a.target_order.to_string(),
                            a.count.to_string(),
                        ]
                    })
                    .collect();
                out.push_str(&aligned_table(
                    &["source order".into(), "target order".into(), "count".into()],
                    &rows,
                ));
            }
            if let Some(w) = &cert.witness {
                let _ = writeln!(
                    out,
                    "witness: source orders {{{}}} hold {} elements; compatible target orders {{{}}} hold {}",
                    join(&w.source_orders).replace(';', ","),
                    w.source_count,
                    join(&w.neighbour_orders).replace(';', ","),
                    w.neighbour_count
                );
            }
            if let Some(r) = realized {
                out.push_str(&aligned_table(
                    &[
                        format!("Order of {src}"),
                        src.to_string(),
                        dst.to_string(),
                        format!("Order of {dst}"),
                    ],
                    &realized_rows(r),
                ));
                let _ = writeln!(out, "element-level verdict: {}", r.verdict);
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = match (&cert.assignment, &cert.witness) {
                (Some(assignment), _) => {
                    let rows: Vec<Vec<String>> = assignment
                        .iter()
                        .map(|a| {
                            vec![
                                a.source_order.to_string(),
                                a.target_order.to_string(),
                                a.count.to_string(),
                            ]
                        })
                        .collect();
                    csv_string(&["source_order", "target_order", "count"], &rows)
                }
                (None, Some(w)) => csv_string(
                    &["source_orders", "source_count", "neighbour_orders", "neighbour_count"],
                    &[vec![
                        join(&w.source_orders),
                        w.source_count.to_string(),
                        join(&w.neighbour_orders),
                        w.neighbour_count.to_string(),
                    ]],
                ),
                (None, None) => String::new(),
            };
            if let Some(r) = realized {
                out.push('\n');
                let rows: Vec<Vec<String>> = realized_rows(r)
                    .into_iter()
                    .map(|row| vec![row[1].clone(), row[0].clone(), row[2].clone(), row[3].clone()])
                    .collect();
                out.push_str(&csv_string(
                    &["element", "element_order", "image", "image_order"],
                    &rows,
                ));
            }
            out
        }
        OutputFormat::Json => to_json(&ExistenceDoc {
            source_group: src,
            target_group: dst,
            certificate: cert,
            realized,
        }),
    }
}

pub fn render_sweep(sweep: &SweepReport, format: OutputFormat) -> String {
    let pairs = |ps: &[crate::conjecture::CoefficientPair]| -> String {
        let parts: Vec<String> = ps.iter().map(|p| format!("{{{},{}}}", p.x, p.y)).collect();
        parts.join(" ")
    };
    let rows: Vec<Vec<String>> = sweep
        .reports
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.valid_pairs.len().to_string(),
                r.counterexamples.len().to_string(),
                pairs(&r.counterexamples),
                yes_no(r.conjecture_holds).to_string(),
            ]
        })
        .collect();
    match format {
        OutputFormat::Table => {
            let mut out = aligned_table(
                &[
                    "n".into(),
                    "valid pairs".into(),
                    "counterexamples".into(),
                    "pairs".into(),
                    "holds".into(),
                ],
                &rows,
            );
            let s = &sweep.summary;
            let _ = writeln!(
                out,
                "summary: n in [{}, {}]: {} checked, {} holding, {} with counterexamples, {} valid pairs, {} counterexample pairs",
                sweep.n_min,
                sweep.n_max,
                s.n_checked,
                s.n_holding,
                s.n_with_counterexamples,
                s.total_valid_pairs,
                s.total_counterexamples
            );
            out
        }
        OutputFormat::Csv => csv_string(&["n", "valid_pairs", "counterexamples", "pairs", "holds"], &rows),
        OutputFormat::Json => to_json(sweep),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_alignment() {
        let t = aligned_table(
            &["a".into(), "long header".into()],
            &[vec!["wide cell".into(), "x".into()]],
        );
        assert_eq!(
            t,
            "| a         | long header |\n|-----------|-------------|\n| wide cell | x           |\n"
        );
    }

    #[test]
    fn spectrum_formats() {
        let g: GroupSpec = "Z6".parse().unwrap();
        let s = g.order_spectrum().unwrap();
        assert!(render_spectrum(&g, &s, OutputFormat::Table).contains("spectrum: 1:1, 2:1, 3:2, 6:2"));
        assert_eq!(
            render_spectrum(&g, &s, OutputFormat::Csv),
            "order,count\n1,1\n2,1\n3,2\n6,2\n"
        );
        let json: serde_json::Value = serde_json::from_str(&render_spectrum(&g, &s, OutputFormat::Json)).unwrap();
        assert_eq!(json["group"], "Z6");
        assert_eq!(json["spectrum"]["entries"][3]["count"], 2);
    }
}
