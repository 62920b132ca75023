//! Text and JSON renderings. Both carry the same information.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::json;

use quartic_forms::invariants::{FormSource, GSet, SymTensor4, G_LABELS};
use quartic_forms::polyalg::Rational;
use quartic_forms::transforms::{CheckRow, ComposedRow, LAWS};
use quartic_forms::Matrix2;

fn pretty(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn index_label(offset: usize, idx: &[usize; 4]) -> [usize; 4] {
    idx.map(|i| i + offset + 1)
}

fn form_vars(w: &SymTensor4<Rational>) -> Vec<&'static str> {
    w.variables().to_vec()
}

pub fn invariants_text(
    g: &GSet<Rational>,
    forms: &[SymTensor4<Rational>],
    source: FormSource,
) -> String {
    let mut out = String::new();
    for (label, v) in G_LABELS.iter().zip(g.to_array()) {
        let _ = writeln!(out, "G{label} = {v}");
    }
    let _ = writeln!(out, "forms: {} construction", source.name());
    for (k, w) in forms.iter().enumerate() {
        let _ = writeln!(
            out,
            "omega[{}]({}) = {}",
            k + 1,
            form_vars(w).join(", "),
            w.to_poly()
        );
        for (idx, c) in w.components() {
            let l = index_label(w.offset(), idx);
            let _ = writeln!(
                out,
                "  omega[{}]_{}{}{}{} = {c}",
                k + 1,
                l[0],
                l[1],
                l[2],
                l[3]
            );
        }
    }
    out
}

pub fn invariants_json(
    g: &GSet<Rational>,
    forms: &[SymTensor4<Rational>],
    source: FormSource,
) -> String {
    let g: BTreeMap<&str, String> = G_LABELS
        .iter()
        .copied()
        .zip(g.to_array().map(|v| v.to_string()))
        .collect();
    let forms: Vec<_> = forms
        .iter()
        .enumerate()
        .map(|(k, w)| {
            let components: Vec<_> = w
                .components()
                .map(|(idx, c)| json!({"index": index_label(w.offset(), idx), "value": c.to_string()}))
                .collect();
            json!({
                "q": k + 1,
                "variables": form_vars(w),
                "polynomial": w.to_poly().to_string(),
                "components": components,
            })
        })
        .collect();
    pretty(&json!({"construction": source.name(), "g": g, "forms": forms}))
}

pub fn rows_text(rows: &[CheckRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let status = if r.pass { "PASS" } else { "FAIL" };
        let _ = write!(out, "{status} {} trial={} seed={}", r.law, r.trial, r.seed);
        if let Some(res) = &r.residual {
            let _ = write!(out, " residual: {res}");
        }
        out.push('\n');
    }
    for law in LAWS {
        let (total, passed) = rows
            .iter()
            .filter(|r| r.law == law)
            .fold((0, 0), |(t, p), r| (t + 1, p + usize::from(r.pass)));
        let _ = writeln!(out, "# {law}: {passed}/{total} passed");
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    let _ = writeln!(out, "# {} checks, {failed} failed", rows.len());
    out
}

pub fn rows_json(rows: &[CheckRow]) -> String {
    pretty(&rows)
}

fn point_text(t: &Matrix2<Rational>) -> String {
    t.as_point().map(|v| v.to_string()).join(", ")
}

pub fn composed_text(t: &Matrix2<Rational>, rows: &[ComposedRow<Rational>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "T = {t}, det T = {}, z = ({})", t.det(), point_text(t));
    let _ = writeln!(
        out,
        "{:<6} {:>16} {:>16}  equal",
        "G", "lhs", "det T * omega(z)"
    );
    for r in rows {
        let eq = if r.holds() { "yes" } else { "NO" };
        let _ = writeln!(out, "{:<6} {:>16} {:>16}  {eq}", r.label, r.lhs, r.rhs);
    }
    out
}

pub fn composed_json(t: &Matrix2<Rational>, rows: &[ComposedRow<Rational>]) -> String {
    let rows: Vec<_> = rows
        .iter()
        .map(|r| json!({"g": r.label, "lhs": r.lhs.to_string(), "rhs": r.rhs.to_string(), "equal": r.holds()}))
        .collect();
    pretty(&json!({
        "matrix": t.rows().iter().map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "det": t.det().to_string(),
        "z": t.as_point().map(|v| v.to_string()),
        "rows": rows,
    }))
}
