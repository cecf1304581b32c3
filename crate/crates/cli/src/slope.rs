use std::io::Write;

use rayon::prelude::*;
use serde_json::Value;
use tautslope::divisors::{slope_report, FamilyParams, SlopeReport};
use tautslope::numeric::approx;

use crate::range::Span;
use crate::{FamilyArg, Format};

pub struct Grid {
    pub family: FamilyArg,
    pub r: Option<Span>,
    pub s: Span,
    pub i: Option<Span>,
    pub k: Option<Span>,
}

/// Expands the grid. A point that fails its family's preconditions is an
/// error when it is the only point, and is skipped (with a note on
/// stderr) inside a larger grid.
pub fn expand(grid: &Grid) -> Result<Vec<FamilyParams>, String> {
    let need = |v: Option<Span>, flag: &str| v.ok_or_else(|| format!("--family {} needs --{flag}", grid.family.name()));
    let forbid = |v: Option<Span>, flag: &str| match v {
        Some(_) => Err(format!("--{flag} does not apply to --family {}", grid.family.name())),
        None => Ok(()),
    };
    let mut candidates = Vec::new();
    match grid.family {
        FamilyArg::Gp => {
            forbid(grid.i, "i")?;
            forbid(grid.k, "k")?;
            for r in need(grid.r, "r")?.iter() {
                for s in grid.s.iter() {
                    candidates.push(FamilyParams::gp(r, s));
                }
            }
        }
        FamilyArg::Hypersurface => {
            forbid(grid.i, "i")?;
            let k = need(grid.k, "k")?;
            for r in need(grid.r, "r")?.iter() {
                for s in grid.s.iter() {
                    for k in k.iter() {
                        candidates.push(FamilyParams::hypersurface(r, s, k));
                    }
                }
            }
        }
        FamilyArg::Syzygy => {
            if grid.r.is_some() {
                return Err("--r does not apply to --family syzygy; it is fixed by i and s".into());
            }
            forbid(grid.k, "k")?;
            for i in need(grid.i, "i")?.iter() {
                for s in grid.s.iter() {
                    candidates.push(FamilyParams::syzygy(i, s));
                }
            }
        }
    }
    let single = candidates.len() == 1;
    let mut points = Vec::new();
    for c in candidates {
        match c {
            Ok(p) => points.push(p),
            Err(e) if single => return Err(e.to_string()),
            Err(e) => eprintln!("skipping: {e}"),
        }
    }
    if points.is_empty() {
        return Err("no valid grid points".into());
    }
    points.sort();
    points.dedup();
    Ok(points)
}

pub fn compute(points: &[FamilyParams]) -> Result<Vec<SlopeReport>, String> {
    let mut out: Vec<SlopeReport> = points
        .par_iter()
        .map(|p| slope_report(p).map_err(|e| format!("{p}: {e}")))
        .collect::<Result<_, _>>()?;
    out.sort_by_key(|row| row.params);
    Ok(out)
}

const APPROX_COLUMN: &str = "slope_approx";

pub fn emit(rows: &[SlopeReport], format: Format, decimal: bool, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let values: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let mut v = serde_json::to_value(row).expect("slope report serializes");
                    if decimal {
                        v[APPROX_COLUMN] = Value::String(approx(&row.slope));
                    }
                    v
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &values)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header: Vec<&str> = SlopeReport::CSV_HEADER.to_vec();
            if decimal {
                header.push(APPROX_COLUMN);
            }
            w.write_record(&header)?;
            for row in rows {
                let mut fields = row.csv_fields();
                if decimal {
                    fields.push(approx(&row.slope));
                }
                w.write_record(&fields)?;
            }
            w.flush()
        }
        Format::Pretty => {
            let mut table: Vec<Vec<String>> = Vec::with_capacity(rows.len() + 1);
            let mut header: Vec<String> = SlopeReport::CSV_HEADER.iter().map(|s| s.to_string()).collect();
            if decimal {
                header.push(format!("{APPROX_COLUMN} (approx.)"));
            }
            table.push(header);
            for row in rows {
                let mut fields = row.csv_fields();
                if decimal {
                    fields.push(format!("~{}", approx(&row.slope)));
                }
                table.push(fields);
            }
            let widths: Vec<usize> = (0..table[0].len())
                .map(|c| table.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            for row in &table {
                let line: Vec<String> = row.iter().zip(&widths).map(|(f, w)| format!("{f:>w$}")).collect();
                writeln!(out, "{}", line.join("  ").trim_end())?;
            }
            Ok(())
        }
    }
}
