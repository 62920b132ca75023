//! Side-by-side comparison of the three constructions of each form with all
//! eight coefficient components left as indeterminates.

use std::collections::BTreeSet;
use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    derived_form, g_determinants, printed_form, symmetrized_form, InvariantError, SymTensor4,
};
use crate::cubicmap::CoeffTensor;
use crate::polyalg::MultiPoly;

/// One monomial on which at least two constructions disagree. Coefficients
/// are form coefficients (not divided by index multiplicity), printed as
/// polynomials in `F1_111 .. F2_222`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscrepancyRow {
    pub q: usize,
    pub monomial: [u32; 4],
    pub printed: String,
    pub derived: String,
    #[serde(rename = "theorem3")]
    pub symmetrized: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DiscrepancyReport {
    pub rows: Vec<DiscrepancyRow>,
}

/// Rows for every monomial where `printed`, `derived` and `symmetrized`
/// do not all coincide.
pub fn compare_constructions(
    q: usize,
    printed: &SymTensor4<MultiPoly>,
    derived: &SymTensor4<MultiPoly>,
    symmetrized: &SymTensor4<MultiPoly>,
) -> Vec<DiscrepancyRow> {
    let [a, b, c] = [printed, derived, symmetrized].map(SymTensor4::coefficients);
    let monomials: BTreeSet<[u32; 4]> = a.keys().chain(b.keys()).chain(c.keys()).copied().collect();
    let show = |m: &[u32; 4], map: &std::collections::BTreeMap<[u32; 4], MultiPoly>| {
        map.get(m)
            .map_or_else(|| "0".to_string(), ToString::to_string)
    };
    monomials
        .into_iter()
        .rev()
        .filter(|m| !(a.get(m) == b.get(m) && b.get(m) == c.get(m)))
        .map(|m| DiscrepancyRow {
            q,
            monomial: m,
            printed: show(&m, &a),
            derived: show(&m, &b),
            symmetrized: show(&m, &c),
        })
        .collect()
}

/// Runs the comparison for `q = 1..6` on the fully symbolic tensor.
pub fn discrepancy_report() -> Result<DiscrepancyReport, InvariantError> {
    let f = CoeffTensor::<MultiPoly>::symbolic();
    let g = g_determinants(&f);
    let per_q: Vec<Vec<DiscrepancyRow>> = (1..=6usize)
        .into_par_iter()
        .map(|q| {
            Ok(compare_constructions(
                q,
                &printed_form(q, &g)?,
                &derived_form(q, &f)?,
                &symmetrized_form(q, &f)?,
            ))
        })
        .collect::<Result<_, InvariantError>>()?;
    Ok(DiscrepancyReport {
        rows: per_q.into_iter().flatten().collect(),
    })
}

fn monomial_text(m: &[u32; 4]) -> String {
    let s: String = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| {
            if e == 1 {
                format!("z{}", v + 1)
            } else {
                format!("z{}^{e}", v + 1)
            }
        })
        .collect();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

impl DiscrepancyReport {
    pub fn rows_for(&self, q: usize) -> impl Iterator<Item = &DiscrepancyRow> {
        self.rows.iter().filter(move |r| r.q == q)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("# quartic form constructions: printed table vs derived quotient vs symmetrized pseudotensor\n");
        out.push_str("# indeterminates: ");
        out.push_str(&CoeffTensor::<MultiPoly>::var_names().join(" "));
        out.push('\n');
        for q in 1..=6 {
            let rows: Vec<_> = self.rows_for(q).collect();
            if rows.is_empty() {
                let _ = writeln!(out, "q={q}: all three constructions agree");
                continue;
            }
            let _ = writeln!(out, "q={q}: {} mismatching monomial(s)", rows.len());
            for r in rows {
                let _ = writeln!(out, "  {}", monomial_text(&r.monomial));
                let _ = writeln!(out, "    printed:     {}", r.printed);
                let _ = writeln!(out, "    derived:     {}", r.derived);
                let _ = writeln!(out, "    symmetrized: {}", r.symmetrized);
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.rows).expect("rows serialize");
        s.push('\n');
        s
    }
}
