//! Plain-text rendering of reports.

use std::fmt::Write;

use schubaut::report::{CharacterTerms, CohomologySection, QueryReport, SurveyReport, SystemInfo};
use schubaut::rootsys::format_lattice;

fn word(labels: &[usize]) -> String {
    if labels.is_empty() {
        "e".into()
    } else {
        labels.iter().map(|l| format!("s{l}")).collect::<Vec<_>>().join(" ")
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn root_set(roots: &[Vec<i32>]) -> String {
    let parts: Vec<String> = roots.iter().map(|r| format_lattice(r)).collect();
    format!("{{{}}}", parts.join(", "))
}

/// `e^(a1+a2) + 2 e^(0)`, or `0` for the zero character.
pub fn character(terms: &CharacterTerms) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (mu, m) in terms {
        let e = format!("e^({})", format_lattice(mu));
        if out.is_empty() {
            match *m {
                1 => out.push_str(&e),
                -1 => write!(out, "-{e}").unwrap(),
                m => write!(out, "{m} {e}").unwrap(),
            }
        } else {
            let sign = if *m < 0 { '-' } else { '+' };
            match m.abs() {
                1 => write!(out, " {sign} {e}").unwrap(),
                a => write!(out, " {sign} {a} {e}").unwrap(),
            }
        }
    }
    out
}

fn dim(terms: &CharacterTerms) -> i64 {
    terms.iter().map(|(_, m)| m).sum()
}

fn poincare(coeffs: &[u64]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "q".into(),
            (1, c) => format!("{c}q"),
            (k, 1) => format!("q^{k}"),
            (k, c) => format!("{c}q^{k}"),
        })
        .collect();
    parts.join(" + ")
}

fn header(out: &mut String, sys: &SystemInfo) {
    write!(
        out,
        "{}{}  ({}simply laced)  highest root {}",
        sys.letter,
        sys.rank,
        if sys.simply_laced { "" } else { "not " },
        format_lattice(&sys.highest_root)
    )
    .unwrap();
    if let Some(short) = &sys.highest_short_root {
        write!(out, ", highest short root {}", format_lattice(short)).unwrap();
    }
    out.push('\n');
    let rows: Vec<String> = sys
        .cartan
        .iter()
        .map(|r| r.iter().map(|c| format!("{c:>2}")).collect::<Vec<_>>().join(" "))
        .collect();
    writeln!(out, "Cartan matrix (Bourbaki labels 1..{}): [{}]", sys.rank, rows.join(" | ")).unwrap();
}

fn cohomology(out: &mut String, c: &CohomologySection) {
    writeln!(out, "  {}{}", c.bundle, if c.exact { "" } else { "  (H^1 bracketed)" }).unwrap();
    writeln!(out, "    H^0 (dim {}): {}", dim(&c.h0), character(&c.h0)).unwrap();
    match &c.h1_upper {
        None => writeln!(out, "    H^1 (dim {}): {}", dim(&c.h1), character(&c.h1)).unwrap(),
        Some(upper) => {
            writeln!(out, "    H^1 contains (dim {}): {}", dim(&c.h1), character(&c.h1)).unwrap();
            writeln!(out, "    H^1 within   (dim {}): {}", dim(upper), character(upper)).unwrap();
        }
    }
    writeln!(out, "    Euler characteristic: {}", character(&c.euler)).unwrap();
    if let Some(roots) = &c.h0_roots {
        writeln!(
            out,
            "    H^0 as a subspace: roots {} plus {} Cartan directions",
            root_set(roots),
            c.h0_cartan_dim.unwrap_or(0)
        )
        .unwrap();
    }
    if let Some(note) = &c.note {
        writeln!(out, "    method: {note}").unwrap();
    }
}

pub fn query(r: &QueryReport) -> String {
    let mut out = String::new();
    header(&mut out, &r.system);
    writeln!(out, "w = {}  (length {})", word(&r.w.word), r.w.length).unwrap();

    let s = &r.schubert;
    out.push_str("\nSchubert variety X(w)\n");
    writeln!(out, "  dimension: {}", s.dim).unwrap();
    writeln!(out, "  smooth: {}", yes(s.smooth)).unwrap();
    writeln!(out, "  rationally smooth: {}", yes(s.rationally_smooth)).unwrap();
    writeln!(out, "  tangent space dim at the base point: {}", s.tangent_dim_at_base).unwrap();
    writeln!(out, "  Poincare polynomial: {}", poincare(&s.poincare)).unwrap();
    let stab: Vec<String> = s.stabilizer.iter().map(usize::to_string).collect();
    writeln!(out, "  stabilizer P_w: simple roots {{{}}}, dim {}", stab.join(", "), r.verdict.dim_p_w).unwrap();

    let v = &r.verdict;
    out.push_str("\nAutomorphisms\n");
    writeln!(out, "  w^-1(highest root) < 0: {}", yes(v.criterion)).unwrap();
    writeln!(out, "  H^0(w, b) = 0: {}", yes(v.h0_borel_vanishes)).unwrap();
    writeln!(out, "  H^0(w, g/b) is the adjoint module: {}", yes(v.h0_tangent_is_adjoint)).unwrap();
    writeln!(out, "  semistable locus for the highest root nonempty: {}", yes(v.semistable_nonempty)).unwrap();
    writeln!(out, "  untouched positive roots: {}", root_set(&v.untouched_roots)).unwrap();
    if let Some(g) = &v.group {
        writeln!(out, "  dim K_w: {}", g.dim_k).unwrap();
        writeln!(
            out,
            "  dim Aut0: {}{}",
            if g.dim_aut0_exact { "" } else { ">= " },
            g.dim_aut0
        )
        .unwrap();
        let surj = match g.phi_surjective {
            Some(b) => yes(b),
            None => "unknown",
        };
        writeln!(out, "  P_w -> Aut0 surjective: {surj}, injective: {}", yes(g.phi_injective)).unwrap();
        if let Some(k) = &g.kernel {
            writeln!(
                out,
                "  kernel: torus of dim {} (codim {}), component group of order {}, root subgroups {}",
                k.torus_dim,
                k.torus_codim,
                k.component_group_order,
                root_set(&k.unipotent_roots)
            )
            .unwrap();
        }
    }
    writeln!(out, "  verdict: {}", v.summary).unwrap();

    if !r.cohomology.is_empty() {
        out.push_str("\nCohomology\n");
        for c in &r.cohomology {
            cohomology(&mut out, c);
        }
    }
    out
}

pub fn survey(r: &SurveyReport) -> String {
    let mut out = String::new();
    header(&mut out, &r.system);
    writeln!(
        out,
        "|W| = {}, {} rows{}\n",
        r.group_order,
        r.rows.len(),
        if r.smooth_only { " (smooth only)" } else { "" }
    )
    .unwrap();
    let words: Vec<String> = r
        .rows
        .iter()
        .map(|row| {
            if row.word.is_empty() {
                "e".into()
            } else {
                row.word.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            }
        })
        .collect();
    let width = words.iter().map(String::len).max().unwrap_or(0).max(4);
    writeln!(out, "{:<width$}  len  smooth  criterion  dim_K  verdict", "word").unwrap();
    for (row, w) in r.rows.iter().zip(&words) {
        let dk = row.dim_k.map_or("-".to_string(), |d| d.to_string());
        writeln!(
            out,
            "{w:<width$}  {:>3}  {:<6}  {:<9}  {dk:>5}  {}",
            row.length,
            yes(row.smooth),
            yes(row.criterion),
            row.verdict
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn character_text() {
        let t = vec![(vec![0, 0], 2), (vec![1, 1], 1), (vec![0, -1], -1)];
        assert_eq!(character(&t), "2 e^(0) + e^(a1+a2) - e^(-a2)");
        assert_eq!(character(&vec![]), "0");
    }

    #[test]
    fn poincare_text() {
        assert_eq!(poincare(&[1, 2, 2, 1]), "1 + 2q + 2q^2 + q^3");
    }
}
