//! Renders analyses, summary tables, verification reports, and catalog
//! listings as plain text, JSON, CSV, or markdown.
//!
//! Output is byte-deterministic: rationals print reduced with a positive
//! denominator and no `/1`, vertex lists arrive sorted from enumeration,
//! and JSON objects are emitted with sorted keys. Exact lengths render as
//! `pi*sqrt(r)` with `r` rational; decimal columns are advisory 12
//! significant-digit approximations and never feed back into any check.

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::catalog::{Analysis, ListingEntry, SpaceClass, TableRow};
use crate::verify::Check;
use crate::{Error, Rat, Result};

/// Output format selector shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Md,
}

impl Format {
    pub fn parse(text: &str) -> Result<Format> {
        match text.to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            other => Err(Error::BadQuery(format!(
                "unknown format {other:?}; expected json, csv, md, or text"
            ))),
        }
    }
}

/// `pi*sqrt(r)` with `r` in lowest terms.
pub fn sqrt_expr(r: &Rat) -> String {
    format!("pi*sqrt({r})")
}

/// Advisory decimal value of `pi*sqrt(r)` to 12 significant digits.
pub fn decimal_str(r: &Rat) -> String {
    let v = std::f64::consts::PI * r.to_f64().unwrap_or(f64::NAN).sqrt();
    if !v.is_finite() || v <= 0.0 {
        return format!("{v}");
    }
    let magnitude = v.abs().log10().floor() as i32;
    let precision = (11 - magnitude).max(0) as usize;
    format!("{v:.precision$}")
}

fn class_str(class: SpaceClass) -> &'static str {
    match class {
        SpaceClass::Quotient => "quotient",
        SpaceClass::Group => "group",
    }
}

fn json_decimal(text: &str) -> Value {
    text.parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map(Value::Number)
        .unwrap_or_else(|| Value::String(text.to_string()))
}

fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') || text.contains('\n') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

/// Pads every cell in `rows` so each column is as wide as its widest
/// entry, then joins with the given separators. Used by both the aligned
/// text and aligned markdown layouts.
fn align(header: &[String], rows: &[Vec<String>], markdown: bool) -> String {
    let cols = header.len();
    let mut width = vec![0usize; cols];
    for row in std::iter::once(header).chain(rows.iter().map(|r| r.as_slice())) {
        for (i, cell) in row.iter().enumerate() {
            width[i] = width[i].max(cell.chars().count());
        }
    }
    let pad = |row: &[String]| -> String {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, cell)| format!("{cell:<w$}", w = width[i]))
            .collect();
        if markdown {
            format!("| {} |", cells.join(" | "))
        } else {
            cells.join("  ").trim_end().to_string()
        }
    };
    let mut out = Vec::new();
    out.push(pad(header));
    if markdown {
        let rule: Vec<String> = width.iter().map(|w| "-".repeat(*w)).collect();
        out.push(format!("| {} |", rule.join(" | ")));
    }
    for row in rows {
        out.push(pad(row));
    }
    out.join("\n") + "\n"
}

/// The effective squared coefficients after applying the metric scale:
/// `(epsilon * q_i, epsilon * q_d)`.
fn scaled(a: &Analysis, epsilon: &Rat) -> (Rat, Option<Rat>) {
    (
        epsilon * &a.metric.i_sq_coeff,
        a.metric.d_sq_coeff.as_ref().map(|d| epsilon * d),
    )
}

fn gamma_elements(a: &Analysis) -> Vec<String> {
    a.gamma
        .members
        .iter()
        .map(|&i| a.group.elements[i].name())
        .collect()
}

pub fn info_json(a: &Analysis, epsilon: &Rat) -> Value {
    let inequalities: Vec<Value> = a
        .polytope
        .inequalities
        .iter()
        .map(|iq| {
            json!({
                "label": iq.tag.label(),
                "coeffs": iq.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "bound": iq.bound.to_string(),
            })
        })
        .collect();
    let vertices = match &a.vertices {
        Some(list) => Value::Array(
            list.iter()
                .map(|v| {
                    Value::Array(
                        v.coords
                            .iter()
                            .map(|c| Value::String(c.to_string()))
                            .collect(),
                    )
                })
                .collect(),
        ),
        None => Value::Null,
    };
    let vertex_count = match &a.vertices {
        Some(list) => json!(list.len()),
        None => Value::Null,
    };
    let facets = match &a.facets {
        Some(list) => Value::Array(
            list.iter()
                .map(|f| {
                    json!({
                        "wall": f.tag.label(),
                        "dim": f.dim,
                        "vertex_count": f.vertex_count,
                    })
                })
                .collect(),
        ),
        None => Value::Null,
    };
    let (i_eff, d_eff) = scaled(a, epsilon);
    json!({
        "schema_version": 1,
        "space": {
            "label": a.entry.label,
            "name": a.entry.name,
            "class": class_str(a.entry.class),
        },
        "sigma": a.entry.sigma.to_string(),
        "gamma": {
            "name": a.gamma.name,
            "order": a.gamma.order(),
            "isometry_class": a.isometry_class,
            "elements": gamma_elements(a),
        },
        "center": {
            "order": a.group.order(),
            "structure": a.group.structure.to_string(),
        },
        "polytope": {
            "inequalities": inequalities,
            "vertices": vertices,
            "vertex_count": vertex_count,
        },
        "cut_locus": { "facets": facets },
        "result": {
            "i_sq_coeff": a.metric.i_sq_coeff.to_string(),
            "d_sq_coeff": match &a.metric.d_sq_coeff {
                Some(d) => Value::String(d.to_string()),
                None => Value::Null,
            },
            "epsilon": epsilon.to_string(),
            "i_exact": sqrt_expr(&i_eff),
            "d_exact": match &d_eff {
                Some(d) => Value::String(sqrt_expr(d)),
                None => Value::Null,
            },
            "i_decimal": json_decimal(&decimal_str(&i_eff)),
            "d_decimal": match &d_eff {
                Some(d) => json_decimal(&decimal_str(d)),
                None => Value::Null,
            },
            "d_known": a.metric.d_known,
            "beyond_paper": a.metric.beyond_tables,
        },
    })
}

fn coeff_row(coeffs: &[Rat]) -> String {
    let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn point_row(coords: &[Rat]) -> String {
    let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn info_text(a: &Analysis, epsilon: &Rat) -> String {
    let mut out = String::new();
    let push = |out: &mut String, line: String| {
        out.push_str(&line);
        out.push('\n');
    };
    push(
        &mut out,
        format!(
            "space: {}  [{}, {}]",
            a.entry.name,
            a.entry.label,
            class_str(a.entry.class)
        ),
    );
    push(&mut out, format!("sigma: {}", a.entry.sigma));
    push(
        &mut out,
        format!("center: {} (order {})", a.group.structure, a.group.order()),
    );
    push(
        &mut out,
        format!(
            "gamma: {} (order {}) = {{{}}}",
            a.gamma.name,
            a.gamma.order(),
            gamma_elements(a).join(", ")
        ),
    );
    push(&mut out, format!("isometry class: {}", a.isometry_class));
    push(
        &mut out,
        format!("polytope inequalities ({}):", a.polytope.inequalities.len()),
    );
    for iq in &a.polytope.inequalities {
        push(
            &mut out,
            format!(
                "  {} . c <= {}  ({})",
                coeff_row(&iq.coeffs),
                iq.bound,
                iq.tag.label()
            ),
        );
    }
    match &a.vertices {
        Some(list) => {
            push(&mut out, format!("vertices ({}):", list.len()));
            for v in list {
                push(&mut out, format!("  {}", point_row(&v.coords)));
            }
        }
        None => push(
            &mut out,
            "vertices: not enumerated (rank above the enumeration cap)".to_string(),
        ),
    }
    match &a.facets {
        Some(list) => {
            push(&mut out, format!("cut locus facets ({}):", list.len()));
            for f in list {
                push(
                    &mut out,
                    format!(
                        "  {}: dim {}, {} vertices",
                        f.tag.label(),
                        f.dim,
                        f.vertex_count
                    ),
                );
            }
        }
        None => push(
            &mut out,
            "cut locus facets: not enumerated (rank above the enumeration cap)".to_string(),
        ),
    }
    push(&mut out, format!("epsilon: {epsilon}"));
    let (i_eff, d_eff) = scaled(a, epsilon);
    push(
        &mut out,
        format!(
            "q_i: {}  i = {} = {}",
            a.metric.i_sq_coeff,
            sqrt_expr(&i_eff),
            decimal_str(&i_eff)
        ),
    );
    match (&a.metric.d_sq_coeff, &d_eff) {
        (Some(q), Some(d)) => {
            let marker = if a.metric.beyond_tables {
                "  [beyond the tabulated closed forms]"
            } else {
                ""
            };
            push(
                &mut out,
                format!(
                    "q_d: {}  d = {} = {}{}",
                    q,
                    sqrt_expr(d),
                    decimal_str(d),
                    marker
                ),
            );
        }
        _ => push(
            &mut out,
            "q_d: unknown (rank above the enumeration cap, no closed form)".to_string(),
        ),
    }
    out
}

const INFO_CSV_HEADER: [&str; 20] = [
    "label",
    "name",
    "class",
    "sigma",
    "center",
    "center_order",
    "gamma",
    "gamma_order",
    "isometry_class",
    "epsilon",
    "q_i",
    "q_d",
    "i_exact",
    "d_exact",
    "i_decimal",
    "d_decimal",
    "d_known",
    "beyond_paper",
    "inequality_count",
    "vertex_count",
];

pub fn info_csv(a: &Analysis, epsilon: &Rat) -> String {
    let (i_eff, d_eff) = scaled(a, epsilon);
    let blank = String::new();
    let fields = vec![
        a.entry.label.clone(),
        a.entry.name.clone(),
        class_str(a.entry.class).to_string(),
        a.entry.sigma.to_string(),
        a.group.structure.to_string(),
        a.group.order().to_string(),
        a.gamma.name.clone(),
        a.gamma.order().to_string(),
        a.isometry_class.clone(),
        epsilon.to_string(),
        a.metric.i_sq_coeff.to_string(),
        a.metric
            .d_sq_coeff
            .as_ref()
            .map(|d| d.to_string())
            .unwrap_or_else(|| blank.clone()),
        sqrt_expr(&i_eff),
        d_eff.as_ref().map(sqrt_expr).unwrap_or_else(|| blank.clone()),
        decimal_str(&i_eff),
        d_eff
            .as_ref()
            .map(decimal_str)
            .unwrap_or_else(|| blank.clone()),
        a.metric.d_known.to_string(),
        a.metric.beyond_tables.to_string(),
        a.polytope.inequalities.len().to_string(),
        a.vertices
            .as_ref()
            .map(|v| v.len().to_string())
            .unwrap_or(blank),
    ];
    let header: Vec<String> = INFO_CSV_HEADER.iter().map(|s| s.to_string()).collect();
    format!("{}\n{}\n", csv_line(&header), csv_line(&fields))
}

pub fn info_md(a: &Analysis, epsilon: &Rat) -> String {
    let (i_eff, d_eff) = scaled(a, epsilon);
    let mut out = String::new();
    out.push_str(&format!("# {} with gamma = {}\n\n", a.entry.name, a.gamma.name));
    let s = |k: &str, v: String| vec![k.to_string(), v];
    let mut rows = vec![
        s("family", a.entry.label.clone()),
        s("class", class_str(a.entry.class).to_string()),
        s("sigma", a.entry.sigma.to_string()),
        s(
            "center",
            format!("{} (order {})", a.group.structure, a.group.order()),
        ),
        s(
            "gamma",
            format!(
                "{} = {{{}}}",
                a.gamma.name,
                gamma_elements(a).join(", ")
            ),
        ),
        s("isometry class", a.isometry_class.clone()),
        s("epsilon", epsilon.to_string()),
        s(
            "i",
            format!("{} = {}", sqrt_expr(&i_eff), decimal_str(&i_eff)),
        ),
    ];
    match &d_eff {
        Some(d) => {
            let marker = if a.metric.beyond_tables { " (beyond)" } else { "" };
            rows.push(s(
                "d",
                format!("{} = {}{}", sqrt_expr(d), decimal_str(d), marker),
            ));
        }
        None => rows.push(s("d", "unknown".to_string())),
    }
    out.push_str(&align(
        &["field".to_string(), "value".to_string()],
        &rows,
        true,
    ));
    out.push_str("\n## Polytope\n\n");
    let ineq_rows: Vec<Vec<String>> = a
        .polytope
        .inequalities
        .iter()
        .map(|iq| {
            vec![
                iq.tag.label(),
                coeff_row(&iq.coeffs),
                iq.bound.to_string(),
            ]
        })
        .collect();
    out.push_str(&align(
        &[
            "wall".to_string(),
            "coefficients".to_string(),
            "bound".to_string(),
        ],
        &ineq_rows,
        true,
    ));
    if let Some(list) = &a.vertices {
        out.push_str(&format!("\n## Vertices ({})\n\n", list.len()));
        for v in list {
            out.push_str(&format!("- {}\n", point_row(&v.coords)));
        }
    }
    if let Some(list) = &a.facets {
        out.push_str("\n## Cut locus\n\n");
        let facet_rows: Vec<Vec<String>> = list
            .iter()
            .map(|f| {
                vec![
                    f.tag.label(),
                    f.dim.to_string(),
                    f.vertex_count.to_string(),
                ]
            })
            .collect();
        out.push_str(&align(
            &[
                "wall".to_string(),
                "dim".to_string(),
                "vertices".to_string(),
            ],
            &facet_rows,
            true,
        ));
    }
    out
}

pub fn render_info(a: &Analysis, epsilon: &Rat, format: Format) -> String {
    match format {
        Format::Text => info_text(a, epsilon),
        Format::Json => format!("{:#}\n", info_json(a, epsilon)),
        Format::Csv => info_csv(a, epsilon),
        Format::Md => info_md(a, epsilon),
    }
}

fn table_cells(row: &TableRow, epsilon: &Rat) -> (String, String) {
    let i_eff = epsilon * &row.q_i;
    let i = sqrt_expr(&i_eff);
    let d = match &row.q_d {
        Some(q) => {
            let d_eff = epsilon * q;
            if row.beyond_tables {
                format!("{} [beyond]", sqrt_expr(&d_eff))
            } else {
                sqrt_expr(&d_eff)
            }
        }
        None => "unknown".to_string(),
    };
    (i, d)
}

fn table_grid(rows: &[TableRow], epsilon: &Rat) -> (Vec<String>, Vec<Vec<String>>) {
    let with_notes = rows.iter().any(|r| r.note.is_some());
    let mut header: Vec<String> = ["family", "space", "sigma", "gamma", "i", "d"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    if with_notes {
        header.push("note".to_string());
    }
    let grid = rows
        .iter()
        .map(|row| {
            let (i, d) = table_cells(row, epsilon);
            let mut cells = vec![
                row.label.clone(),
                row.name.clone(),
                row.sigma.clone(),
                row.gamma.clone(),
                i,
                d,
            ];
            if with_notes {
                cells.push(row.note.clone().unwrap_or_default());
            }
            cells
        })
        .collect();
    (header, grid)
}

pub fn table_json(id: &str, rows: &[TableRow], epsilon: &Rat) -> Value {
    let row_values: Vec<Value> = rows
        .iter()
        .map(|row| {
            let i_eff = epsilon * &row.q_i;
            let d_eff = row.q_d.as_ref().map(|q| epsilon * q);
            json!({
                "label": row.label,
                "name": row.name,
                "sigma": row.sigma,
                "gamma": row.gamma,
                "gamma_order": row.gamma_order,
                "isometry_class": row.isometry_class,
                "q_i": row.q_i.to_string(),
                "q_d": match &row.q_d {
                    Some(q) => Value::String(q.to_string()),
                    None => Value::Null,
                },
                "i_exact": sqrt_expr(&i_eff),
                "d_exact": match &d_eff {
                    Some(d) => Value::String(sqrt_expr(d)),
                    None => Value::Null,
                },
                "i_decimal": json_decimal(&decimal_str(&i_eff)),
                "d_decimal": match &d_eff {
                    Some(d) => json_decimal(&decimal_str(d)),
                    None => Value::Null,
                },
                "beyond_paper": row.beyond_tables,
                "note": match &row.note {
                    Some(n) => Value::String(n.clone()),
                    None => Value::Null,
                },
            })
        })
        .collect();
    json!({
        "schema_version": 1,
        "table": id,
        "epsilon": epsilon.to_string(),
        "rows": row_values,
    })
}

pub fn table_csv(rows: &[TableRow], epsilon: &Rat) -> String {
    let header: Vec<String> = [
        "label",
        "name",
        "sigma",
        "gamma",
        "gamma_order",
        "isometry_class",
        "q_i",
        "q_d",
        "i_exact",
        "d_exact",
        "i_decimal",
        "d_decimal",
        "beyond_paper",
        "note",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let mut out = csv_line(&header);
    out.push('\n');
    for row in rows {
        let i_eff = epsilon * &row.q_i;
        let d_eff = row.q_d.as_ref().map(|q| epsilon * q);
        let blank = String::new();
        let fields = vec![
            row.label.clone(),
            row.name.clone(),
            row.sigma.clone(),
            row.gamma.clone(),
            row.gamma_order.to_string(),
            row.isometry_class.clone(),
            row.q_i.to_string(),
            row.q_d
                .as_ref()
                .map(|q| q.to_string())
                .unwrap_or_else(|| blank.clone()),
            sqrt_expr(&i_eff),
            d_eff.as_ref().map(sqrt_expr).unwrap_or_else(|| blank.clone()),
            decimal_str(&i_eff),
            d_eff
                .as_ref()
                .map(decimal_str)
                .unwrap_or_else(|| blank.clone()),
            row.beyond_tables.to_string(),
            row.note.clone().unwrap_or(blank),
        ];
        out.push_str(&csv_line(&fields));
        out.push('\n');
    }
    out
}

pub fn render_table(id: &str, rows: &[TableRow], epsilon: &Rat, format: Format) -> String {
    match format {
        Format::Text => {
            let (header, grid) = table_grid(rows, epsilon);
            align(&header, &grid, false)
        }
        Format::Md => {
            let (header, grid) = table_grid(rows, epsilon);
            align(&header, &grid, true)
        }
        Format::Csv => table_csv(rows, epsilon),
        Format::Json => format!("{:#}\n", table_json(id, rows, epsilon)),
    }
}

pub fn verify_json(max_rank: u32, checks: &[Check]) -> Value {
    let ok = checks.iter().all(|c| c.passed || c.skipped);
    let list: Vec<Value> = checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "status": c.status(),
                "detail": c.detail,
            })
        })
        .collect();
    json!({
        "schema_version": 1,
        "max_rank": max_rank,
        "passed": ok,
        "checks": list,
    })
}

pub fn render_verify(max_rank: u32, checks: &[Check], format: Format) -> String {
    match format {
        Format::Json => format!("{:#}\n", verify_json(max_rank, checks)),
        Format::Csv => {
            let header = vec![
                "name".to_string(),
                "status".to_string(),
                "detail".to_string(),
            ];
            let mut out = csv_line(&header);
            out.push('\n');
            for c in checks {
                out.push_str(&csv_line(&[
                    c.name.to_string(),
                    c.status().to_string(),
                    c.detail.clone(),
                ]));
                out.push('\n');
            }
            out
        }
        Format::Md => {
            let rows: Vec<Vec<String>> = checks
                .iter()
                .map(|c| {
                    vec![c.name.to_string(), c.status().to_string(), c.detail.clone()]
                })
                .collect();
            align(
                &[
                    "check".to_string(),
                    "status".to_string(),
                    "detail".to_string(),
                ],
                &rows,
                true,
            )
        }
        Format::Text => {
            let mut out = String::new();
            for c in checks {
                out.push_str(&format!("{:<4} {}: {}\n", c.status(), c.name, c.detail));
            }
            let passed = checks.iter().filter(|c| c.passed && !c.skipped).count();
            let failed = checks.iter().filter(|c| !c.passed).count();
            let skipped = checks.iter().filter(|c| c.skipped).count();
            out.push_str(&format!(
                "{} checks: {} passed, {} failed, {} skipped\n",
                checks.len(),
                passed,
                failed,
                skipped
            ));
            out
        }
    }
}

fn listing_grid(entries: &[ListingEntry]) -> (Vec<String>, Vec<Vec<String>>) {
    let header: Vec<String> = ["family", "space", "class", "sigma", "delta", "center", "forms"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let grid = entries
        .iter()
        .map(|e| {
            vec![
                e.entry.label.clone(),
                e.entry.name.clone(),
                class_str(e.entry.class).to_string(),
                e.entry.sigma.to_string(),
                e.entry.delta.to_string(),
                e.center.to_string(),
                if e.forms.is_empty() {
                    "none".to_string()
                } else {
                    e.forms.join(" ")
                },
            ]
        })
        .collect();
    (header, grid)
}

pub fn listing_json(entries: &[ListingEntry]) -> Value {
    let list: Vec<Value> = entries
        .iter()
        .map(|e| {
            json!({
                "label": e.entry.label,
                "name": e.entry.name,
                "class": class_str(e.entry.class),
                "sigma": e.entry.sigma.to_string(),
                "delta": e.entry.delta.to_string(),
                "psi_sq": e.entry.psi_sq.to_string(),
                "center": e.center.to_string(),
                "forms": e.forms,
                "no_forms_reason": match &e.no_forms {
                    Some(r) => Value::String(r.clone()),
                    None => Value::Null,
                },
            })
        })
        .collect();
    json!({
        "schema_version": 1,
        "spaces": list,
    })
}

pub fn render_listing(entries: &[ListingEntry], format: Format) -> String {
    match format {
        Format::Json => format!("{:#}\n", listing_json(entries)),
        Format::Csv => {
            let (header, grid) = listing_grid(entries);
            let mut out = csv_line(&header);
            out.push('\n');
            for row in &grid {
                out.push_str(&csv_line(row));
                out.push('\n');
            }
            out
        }
        Format::Md => {
            let (header, grid) = listing_grid(entries);
            align(&header, &grid, true)
        }
        Format::Text => {
            let (header, grid) = listing_grid(entries);
            align(&header, &grid, false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{analyze, catalog_listing, spaces, table_rows, TableId};
    use crate::verify::run_all;
    use crate::{frac, rat};

    fn sample() -> Analysis {
        let entry = spaces::e_one().unwrap();
        analyze(&entry, "Z3", 8).unwrap()
    }

    #[test]
    fn exact_strings_and_decimals_are_canonical() {
        assert_eq!(sqrt_expr(&rat(8)), "pi*sqrt(8)");
        assert_eq!(sqrt_expr(&frac(27, 2)), "pi*sqrt(27/2)");
        assert_eq!(sqrt_expr(&frac(-3, -6)), "pi*sqrt(1/2)");
        assert_eq!(decimal_str(&rat(1)), "3.14159265359");
        assert_eq!(decimal_str(&rat(16)), "12.5663706144");
        assert_eq!(decimal_str(&frac(1, 4)), "1.57079632679");
        assert_eq!(decimal_str(&rat(0)), "0");
    }

    #[test]
    fn info_json_matches_the_published_schema() {
        let a = sample();
        let v = info_json(&a, &rat(1));
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["space"]["label"], "E I");
        assert_eq!(v["space"]["name"], "E6/Sp(4)");
        assert_eq!(v["space"]["class"], "quotient");
        assert_eq!(v["sigma"], "E6");
        assert_eq!(v["gamma"]["name"], "Z3");
        assert_eq!(v["gamma"]["order"], 3);
        assert_eq!(v["center"]["order"], 3);
        assert_eq!(v["center"]["structure"], "Z3");
        assert_eq!(
            v["polytope"]["inequalities"].as_array().unwrap().len(),
            a.polytope.inequalities.len()
        );
        assert_eq!(v["polytope"]["vertex_count"], 19);
        assert_eq!(
            v["polytope"]["vertices"].as_array().unwrap().len(),
            19
        );
        assert!(v["cut_locus"]["facets"].is_array());
        assert_eq!(v["result"]["i_sq_coeff"], "8");
        assert_eq!(v["result"]["d_sq_coeff"], "16");
        assert_eq!(v["result"]["epsilon"], "1");
        assert_eq!(v["result"]["i_exact"], "pi*sqrt(8)");
        assert_eq!(v["result"]["d_exact"], "pi*sqrt(16)");
        assert_eq!(v["result"]["d_known"], true);
        assert_eq!(v["result"]["beyond_paper"], false);
        let i_dec = v["result"]["i_decimal"].as_f64().unwrap();
        assert!((i_dec - 8.88576587632).abs() < 1e-9);
    }

    #[test]
    fn epsilon_scales_the_rendered_lengths_only() {
        let a = sample();
        let v = info_json(&a, &frac(1, 2));
        assert_eq!(v["result"]["i_sq_coeff"], "8");
        assert_eq!(v["result"]["i_exact"], "pi*sqrt(4)");
        assert_eq!(v["result"]["d_exact"], "pi*sqrt(8)");
        assert_eq!(v["result"]["epsilon"], "1/2");
    }

    #[test]
    fn text_csv_and_md_renderings_are_deterministic_and_complete() {
        let a = sample();
        let text = info_text(&a, &rat(1));
        assert!(text.contains("space: E6/Sp(4)  [E I, quotient]"));
        assert!(text.contains("center: Z3 (order 3)"));
        assert!(text.contains("i = pi*sqrt(8) = 8.88576587632"));
        assert!(text.contains("vertices (19):"));
        assert_eq!(text, info_text(&a, &rat(1)));

        let csv = info_csv(&a, &rat(1));
        let mut lines = csv.lines();
        let header = lines.next().unwrap();
        let row = lines.next().unwrap();
        assert_eq!(header.split(',').count(), INFO_CSV_HEADER.len());
        assert!(row.contains("pi*sqrt(8)"));
        assert!(row.starts_with("E I,E6/Sp(4),quotient,E6,Z3,3,Z3,3,Z3,1,8,16,"));

        let md = info_md(&a, &rat(1));
        assert!(md.starts_with("# E6/Sp(4) with gamma = Z3"));
        assert!(md.contains("| field"));
        assert!(md.contains("## Vertices (19)"));
    }

    #[test]
    fn table_renderings_cover_all_formats() {
        let rows = table_rows(TableId::Quotients, Some("E I,E IV"), 8).unwrap();
        let text = render_table("8.1", &rows, &rat(1), Format::Text);
        assert!(text.starts_with("family"));
        assert!(text.contains("pi*sqrt(8)"));
        assert!(text.contains("pi*sqrt(32/3)"));
        let md = render_table("8.1", &rows, &rat(1), Format::Md);
        assert!(md.contains("| family"));
        assert!(md.contains("| ------"));
        let csv = render_table("8.1", &rows, &rat(1), Format::Csv);
        assert!(csv.starts_with("label,name,sigma,gamma,"));
        let v = table_json("8.1", &rows, &rat(1));
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["table"], "8.1");
        assert_eq!(v["rows"].as_array().unwrap().len(), rows.len());
        assert_eq!(v["rows"][0]["label"], "E I");
        assert_eq!(v["rows"][0]["i_exact"], "pi*sqrt(8)");
    }

    #[test]
    fn beyond_rows_carry_a_marker() {
        let rows = table_rows(TableId::Quotients, Some("A I"), 8).unwrap();
        let text = render_table("8.1", &rows, &rat(1), Format::Text);
        assert!(text.contains("[beyond]"));
        let v = table_json("8.1", &rows, &rat(1));
        let beyond: Vec<bool> = v["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["beyond_paper"].as_bool().unwrap())
            .collect();
        assert!(beyond.contains(&true));
        assert!(beyond.contains(&false));
    }

    #[test]
    fn verify_and_listing_render_in_every_format() {
        let checks = run_all(2);
        let text = render_verify(2, &checks, Format::Text);
        assert!(text.contains("ok   killing-norms:"));
        assert!(text.contains("skip"));
        assert!(text.trim_end().ends_with("skipped"));
        let v = verify_json(2, &checks);
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["max_rank"], 2);
        assert_eq!(v["passed"], true);
        let csv = render_verify(2, &checks, Format::Csv);
        assert!(csv.starts_with("name,status,detail"));
        let md = render_verify(2, &checks, Format::Md);
        assert!(md.contains("| check"));

        let entries = catalog_listing().unwrap();
        let text = render_listing(&entries, Format::Text);
        assert!(text.contains("SU(6)/SO(6)"));
        assert!(text.contains("E7/(E6 x SO(2))"));
        assert!(text.contains("Spin(8)"));
        let v = listing_json(&entries);
        assert_eq!(v["schema_version"], 1);
        let spaces = v["spaces"].as_array().unwrap();
        assert_eq!(spaces.len(), 51);
        let su6 = spaces
            .iter()
            .find(|s| s["name"] == "SU(6)/SO(6)")
            .unwrap();
        assert_eq!(su6["center"], "Z6");
        assert_eq!(su6["forms"].as_array().unwrap().len(), 3);
        let odd = spaces
            .iter()
            .find(|s| s["name"] == "SO(10)/U(5)")
            .unwrap();
        assert_eq!(odd["sigma"], "BC2");
        assert!(odd["forms"].as_array().unwrap().is_empty());
        assert!(odd["no_forms_reason"]
            .as_str()
            .unwrap()
            .contains("non-reduced"));
        let csv = render_listing(&entries, Format::Csv);
        assert!(csv.lines().count() == entries.len() + 1);
    }

    #[test]
    fn format_parser_accepts_the_four_names() {
        assert_eq!(Format::parse("json").unwrap(), Format::Json);
        assert_eq!(Format::parse("TEXT").unwrap(), Format::Text);
        assert_eq!(Format::parse("Csv").unwrap(), Format::Csv);
        assert_eq!(Format::parse("md").unwrap(), Format::Md);
        assert!(Format::parse("yaml").is_err());
    }
}
