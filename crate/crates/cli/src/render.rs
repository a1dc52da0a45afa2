//! Plain-text tables.

use crate::document::{Flag, ResultDocument};
use std::fmt::Write;

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{:<w$}", c, w = *w))
            .collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    out.push_str(&line(header.to_vec()));
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
}

pub fn poincare_string(dims: &[u64]) -> String {
    let terms: Vec<String> = dims
        .iter()
        .enumerate()
        .filter(|(_, &d)| d != 0)
        .map(|(k, &d)| match (k, d) {
            (0, d) => d.to_string(),
            (1, 1) => "t".into(),
            (1, d) => format!("{}t", d),
            (k, 1) => format!("t^{}", k),
            (k, d) => format!("{}t^{}", d, k),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn betti_line(out: &mut String, name: &str, dims: &[u64]) {
    let list: Vec<String> = dims.iter().map(u64::to_string).collect();
    writeln!(out, "{}: {}", name, poincare_string(dims)).unwrap();
    writeln!(out, "  betti (degrees 0..{}): {}", dims.len().saturating_sub(1), list.join(" ")).unwrap();
}

fn flag_name(f: Flag) -> &'static str {
    match f {
        Flag::PaperAnchored => "paper-anchored",
        Flag::Derived => "derived",
        Flag::Forced => "forced",
    }
}

pub fn render(doc: &ResultDocument) -> String {
    let mut out = String::new();
    if let Some(input) = &doc.input {
        let mut parts = vec![input.kind.clone()];
        for (name, v) in [("radii", &input.radii), ("lengths", &input.lengths)] {
            if let Some(v) = v {
                parts.push(format!("{} {}", name, v.join(" ")));
            }
        }
        for (name, v) in [("weights", &input.weights), ("speeds", &input.speeds)] {
            if let Some(v) = v {
                let v: Vec<String> = v.iter().map(i64::to_string).collect();
                parts.push(format!("{} {}", name, v.join(" ")));
            }
        }
        if let Some(shift) = &input.shift {
            parts.push(format!("shift {}", shift));
        }
        writeln!(out, "model: {}", parts.join(", ")).unwrap();
    }
    if let Some(level) = &doc.level {
        match &doc.verdict {
            Some(v) => writeln!(out, "level {}: {}", level, v).unwrap(),
            None => writeln!(out, "level {}", level).unwrap(),
        }
    }
    if let Some(points) = &doc.fixed_points {
        writeln!(out, "\nfixed points").unwrap();
        let rows: Vec<Vec<String>> = points
            .iter()
            .map(|p| {
                let w: Vec<String> = p.weights.iter().map(i64::to_string).collect();
                vec![
                    p.label.clone(),
                    p.value.clone(),
                    format!("({})", w.join(",")),
                    p.ell_plus.to_string(),
                    p.ell_minus.to_string(),
                ]
            })
            .collect();
        table(&mut out, &["label", "value", "weights", "l+", "l-"], &rows);
    }
    if let Some(levels) = &doc.critical_values {
        writeln!(out, "\ncritical values").unwrap();
        let rows: Vec<Vec<String>> = levels.iter().map(|l| vec![l.value.clone(), l.points.to_string()]).collect();
        table(&mut out, &["value", "points"], &rows);
    }
    if let Some(r) = &doc.reduced {
        out.push('\n');
        betti_line(&mut out, "reduced space", r);
    }
    if let Some(d) = &doc.desing {
        out.push('\n');
        betti_line(&mut out, "partial desingularization", d);
    }
    if let Some(s) = &doc.singular {
        let dims: Vec<u64> = s.iter().map(|n| n.value).collect();
        out.push('\n');
        betti_line(&mut out, "quotient at the level", &dims);
        let rows: Vec<Vec<String>> = s
            .iter()
            .map(|n| {
                vec![
                    n.degree.to_string(),
                    n.value.to_string(),
                    flag_name(n.flag).into(),
                    n.oracle.clone().unwrap_or_default(),
                ]
            })
            .collect();
        table(&mut out, &["degree", "b", "flag", "oracle"], &rows);
    }
    if let Some(les) = &doc.les {
        writeln!(out, "\nexact sequence H(M_0) -> H(desing) -> C").unwrap();
        let rows: Vec<Vec<String>> = les
            .iter()
            .map(|r| {
                let sing = match (r.singular, r.singular_range) {
                    (Some(v), _) => v.to_string(),
                    (None, Some([lo, hi])) => format!("[{}, {}]", lo, hi),
                    (None, None) => "?".into(),
                };
                vec![
                    r.degree.to_string(),
                    sing,
                    r.desing.to_string(),
                    r.cokernel.to_string(),
                    r.status.clone(),
                ]
            })
            .collect();
        table(&mut out, &["degree", "H(M_0)", "H(desing)", "C", "status"], &rows);
    }
    if let Some(links) = &doc.links {
        writeln!(out, "\nsingular points and their links").unwrap();
        let rows: Vec<Vec<String>> = links
            .iter()
            .map(|l| {
                vec![
                    l.point.clone().unwrap_or_default(),
                    l.ell_plus.to_string(),
                    l.ell_minus.to_string(),
                    poincare_string(&l.betti),
                ]
            })
            .collect();
        table(&mut out, &["point", "l+", "l-", "link"], &rows);
    }
    if let Some(k) = &doc.kirwan {
        writeln!(out, "\nequivariant cohomology against the quotient").unwrap();
        let rows: Vec<Vec<String>> = k
            .even
            .iter()
            .map(|e| {
                vec![
                    e.degree.to_string(),
                    e.equivariant.to_string(),
                    e.singular.to_string(),
                    e.margin.to_string(),
                ]
            })
            .collect();
        table(&mut out, &["degree", "H_S1(M)", "b(M_0)", "margin"], &rows);
        for o in &k.odd_obstructions {
            writeln!(
                out,
                "ODD-OBSTRUCTION degree {}: b_{} = {} but H^{}_S1(M) = 0, so no degree-preserving surjection onto H(M_0)",
                o.degree, o.degree, o.singular, o.degree
            )
            .unwrap();
        }
    }
    if let Some(p) = &doc.polygon {
        writeln!(out, "\npolygon space: {}", p.verdict).unwrap();
        betti_line(&mut out, "  poincare polynomial", &p.betti);
        if p.duality_defect.is_empty() {
            if p.verdict == "regular" || p.verdict == "singular" {
                writeln!(out, "  Poincaré duality holds").unwrap();
            }
        } else {
            let d: Vec<String> = p.duality_defect.iter().map(usize::to_string).collect();
            writeln!(out, "  Poincaré duality fails in degrees {}", d.join(" ")).unwrap();
        }
    }
    out
}
