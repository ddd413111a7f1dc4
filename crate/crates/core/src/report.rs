//! Serializable reports for single queries and surveys.
//!
//! Words are printed with 1-based Bourbaki labels, characters as sorted lists of
//! `[coordinates, multiplicity]` pairs in the simple-root basis.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::autreport::{kernel_structure, verdict, AutVerdict, DimValue};
use crate::bmod::line_bundle_cohomology;
use crate::charring::SignedCharacter;
use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};
use crate::weyl::{enumerate_group, WeylElement};

pub const SCHEMA_VERSION: u32 = 1;

pub type CharacterTerms = Vec<(Vec<i32>, i64)>;

fn terms(c: &SignedCharacter) -> CharacterTerms {
    c.to_pairs()
}

fn root_list<'a>(roots: impl IntoIterator<Item = &'a Root>) -> Vec<Vec<i32>> {
    roots.into_iter().map(|r| r.coeffs().to_vec()).collect()
}

fn labels(set: &BTreeSet<usize>) -> Vec<usize> {
    set.iter().map(|i| i + 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemInfo {
    #[serde(rename = "type")]
    pub letter: String,
    pub rank: usize,
    pub simply_laced: bool,
    pub highest_root: Vec<i32>,
    pub highest_short_root: Option<Vec<i32>>,
    pub cartan: Vec<Vec<i32>>,
}

impl SystemInfo {
    pub fn new(rs: &RootSystem) -> Self {
        SystemInfo {
            letter: rs.letter().to_string(),
            rank: rs.rank(),
            simply_laced: rs.is_simply_laced(),
            highest_root: rs.highest_long_root().coeffs().to_vec(),
            highest_short_root: rs.highest_short_root().map(|r| r.coeffs().to_vec()),
            cartan: rs.cartan().to_vec(),
        }
    }
}

/// A cohomology computation requested on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyRequest {
    Borel,
    Tangent,
    Line(Vec<i32>),
}

impl CohomologyRequest {
    /// Parses `b`, `g/b` or `line:c1,c2,...`.
    pub fn parse(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "b" => Ok(CohomologyRequest::Borel),
            "g/b" => Ok(CohomologyRequest::Tangent),
            other => {
                let Some(rest) = other.strip_prefix("line:") else {
                    return Err(format!("expected b, g/b or line:<coords>, got {other:?}"));
                };
                rest.split(',')
                    .enumerate()
                    .map(|(i, t)| {
                        t.trim()
                            .parse::<i32>()
                            .map_err(|e| format!("line weight coordinate {} ({t:?}): {e}", i + 1))
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map(CohomologyRequest::Line)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportOptions {
    pub cohomology: Vec<CohomologyRequest>,
    pub kernel: bool,
    pub cap: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            cohomology: vec![CohomologyRequest::Tangent, CohomologyRequest::Borel],
            kernel: false,
            cap: crate::weyl::DEFAULT_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementInfo {
    pub word: Vec<usize>,
    pub length: usize,
}

impl ElementInfo {
    pub fn new(w: &WeylElement) -> Self {
        ElementInfo {
            word: w.labels(),
            length: w.length(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertSection {
    pub dim: usize,
    pub smooth: bool,
    pub rationally_smooth: bool,
    pub tangent_dim_at_base: usize,
    /// Left descents, as 1-based labels: the simple roots of `P_w` beyond `B`.
    pub stabilizer: Vec<usize>,
    pub poincare: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelSection {
    pub torus_dim: usize,
    pub torus_codim: usize,
    pub component_group_order: u64,
    pub unipotent_roots: Vec<Vec<i32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSection {
    /// `null` when not known.
    pub phi_surjective: Option<bool>,
    pub phi_injective: bool,
    pub dim_k: usize,
    pub dim_aut0: usize,
    /// `false` when `dim_aut0` is only a lower bound.
    pub dim_aut0_exact: bool,
    pub kernel: Option<KernelSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictSection {
    pub criterion: bool,
    pub h0_borel_vanishes: bool,
    pub semistable_nonempty: bool,
    pub h0_tangent_is_adjoint: bool,
    pub dim_p_w: usize,
    pub untouched_roots: Vec<Vec<i32>>,
    /// Present only for smooth `X(w)`.
    pub group: Option<GroupSection>,
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologySection {
    pub bundle: String,
    pub h0: CharacterTerms,
    /// Lower bound for `H^1`; equal to it when `exact`.
    pub h1: CharacterTerms,
    pub h1_upper: Option<CharacterTerms>,
    pub euler: CharacterTerms,
    pub exact: bool,
    /// For B-submodules: root spaces spanning `H^0` and the dimension of its Cartan part.
    pub h0_roots: Option<Vec<Vec<i32>>>,
    pub h0_cartan_dim: Option<usize>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryReport {
    pub schema_version: u32,
    pub system: SystemInfo,
    pub w: ElementInfo,
    pub schubert: SchubertSection,
    pub verdict: VerdictSection,
    pub cohomology: Vec<CohomologySection>,
}

/// One-line description used in surveys.
pub fn summary(v: &AutVerdict) -> String {
    match (&v.group, v.simply_laced, v.criterion_holds) {
        (None, _, _) => "singular: cohomology only".into(),
        (Some(_), true, true) => "Aut0 = P_w".into(),
        (Some(g), true, false) => format!("Aut0 = P_w/K_w, dim K_w = {}", g.dim_k),
        (Some(_), false, true) => "P_w embeds in Aut0".into(),
        (Some(g), false, false) => format!("P_w -> Aut0 has kernel of dim {}", g.dim_k),
    }
}

fn verdict_section(v: &AutVerdict) -> VerdictSection {
    VerdictSection {
        criterion: v.criterion_holds,
        h0_borel_vanishes: v.h0_borel_vanishes,
        semistable_nonempty: v.semistable_nonempty,
        h0_tangent_is_adjoint: v.h0_tangent_is_adjoint,
        dim_p_w: v.dim_p_w,
        untouched_roots: root_list(&v.untouched_roots),
        group: v.group.as_ref().map(|g| GroupSection {
            phi_surjective: g.phi_surjective,
            phi_injective: g.phi_injective,
            dim_k: g.dim_k,
            dim_aut0: g.dim_aut0.value(),
            dim_aut0_exact: matches!(g.dim_aut0, DimValue::Exact(_)),
            kernel: g.kernel.as_ref().map(|k| KernelSection {
                torus_dim: k.torus_dim,
                torus_codim: k.torus_codim,
                component_group_order: k.component_group_order,
                unipotent_roots: root_list(&k.unipotent_roots),
            }),
        }),
        summary: summary(v),
    }
}

/// Full report for one Weyl group element.
///
/// With `options.kernel` set, non-simply-laced systems yield the refusal error of
/// [`kernel_structure`].
pub fn single_report(rs: &RootSystem, w: &WeylElement, options: &ReportOptions) -> Result<QueryReport> {
    if options.kernel {
        kernel_structure(rs, w, options.cap)?;
    }
    let v = verdict(rs, w, options.cap)?;
    let mut cohomology = Vec::new();
    for req in &options.cohomology {
        cohomology.push(match req {
            CohomologyRequest::Tangent => CohomologySection {
                bundle: "g/b".into(),
                h0: terms(&v.tangent.h0),
                h1: terms(&v.tangent.h1),
                h1_upper: None,
                euler: terms(&(&v.tangent.h0 - &v.tangent.h1)),
                exact: true,
                h0_roots: None,
                h0_cartan_dim: None,
                note: None,
            },
            CohomologyRequest::Borel => {
                let b = &v.tangent.borel;
                CohomologySection {
                    bundle: "b".into(),
                    h0: terms(&b.h0.character(rs)),
                    h1: terms(&b.h1),
                    h1_upper: None,
                    euler: terms(&b.euler),
                    exact: true,
                    h0_roots: Some(b.h0.root_indices().iter().map(|&k| rs.root(k).coeffs().to_vec()).collect()),
                    h0_cartan_dim: Some(b.h0.cartan_dim()),
                    note: None,
                }
            }
            CohomologyRequest::Line(lambda) => {
                let lb = line_bundle_cohomology(rs, w, lambda)?;
                CohomologySection {
                    bundle: format!(
                        "line:{}",
                        lambda.iter().map(i32::to_string).collect::<Vec<_>>().join(",")
                    ),
                    h0: terms(&lb.h0),
                    h1: terms(&lb.h1_lower),
                    h1_upper: (!lb.exact).then(|| terms(&lb.h1_upper)),
                    euler: terms(&lb.euler),
                    exact: lb.exact,
                    h0_roots: None,
                    h0_cartan_dim: None,
                    note: Some(lb.method),
                }
            }
        });
    }
    Ok(QueryReport {
        schema_version: SCHEMA_VERSION,
        system: SystemInfo::new(rs),
        w: ElementInfo::new(w),
        schubert: SchubertSection {
            dim: w.length(),
            smooth: v.smooth,
            rationally_smooth: v.rationally_smooth,
            tangent_dim_at_base: v.tangent_dim_at_base,
            stabilizer: labels(&v.stabilizer),
            poincare: v.poincare.clone(),
        },
        verdict: verdict_section(&v),
        cohomology,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub word: Vec<usize>,
    pub length: usize,
    pub smooth: bool,
    pub criterion: bool,
    /// `null` for singular `X(w)`.
    pub dim_k: Option<usize>,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub schema_version: u32,
    pub system: SystemInfo,
    pub smooth_only: bool,
    pub group_order: usize,
    pub rows: Vec<SurveyRow>,
}

/// Verdicts for every element of the Weyl group, ordered by length then word.
pub fn survey(rs: &RootSystem, smooth_only: bool, cap: usize) -> Result<SurveyReport> {
    let group = enumerate_group(rs, cap)?;
    survey_elements(rs, &group, smooth_only, cap)
}

/// Same as [`survey`] over a precomputed, sorted list of elements.
pub fn survey_elements(
    rs: &RootSystem,
    group: &[WeylElement],
    smooth_only: bool,
    cap: usize,
) -> Result<SurveyReport> {
    let rows: Vec<Option<SurveyRow>> = group
        .par_iter()
        .map(|w| -> Result<Option<SurveyRow>> {
            let v = verdict(rs, w, cap)?;
            if smooth_only && !v.smooth {
                return Ok(None);
            }
            Ok(Some(SurveyRow {
                word: w.labels(),
                length: w.length(),
                smooth: v.smooth,
                criterion: v.criterion_holds,
                dim_k: v.group.as_ref().map(|g| g.dim_k),
                verdict: summary(&v),
            }))
        })
        .collect::<Result<_>>()?;
    Ok(SurveyReport {
        schema_version: SCHEMA_VERSION,
        system: SystemInfo::new(rs),
        smooth_only,
        group_order: group.len(),
        rows: rows.into_iter().flatten().collect(),
    })
}

/// Parses a comma-separated list of 1-based labels, reporting the position of a bad entry.
pub fn parse_word(rs: &RootSystem, text: &str) -> Result<WeylElement> {
    let text = text.trim();
    if text.is_empty() || text == "e" {
        return Ok(WeylElement::identity(rs));
    }
    let mut word = Vec::new();
    for (pos, tok) in text.split(',').enumerate() {
        let l: usize = tok.trim().parse().map_err(|_| {
            Error::Parse(format!("word entry {} ({:?}) is not a positive integer", pos + 1, tok.trim()))
        })?;
        word.push(l);
    }
    WeylElement::from_labels(rs, &word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::TypeLetter;

    #[test]
    fn cohomology_requests() {
        assert_eq!(CohomologyRequest::parse("b"), Ok(CohomologyRequest::Borel));
        assert_eq!(CohomologyRequest::parse("g/b"), Ok(CohomologyRequest::Tangent));
        assert_eq!(
            CohomologyRequest::parse("line:1,0"),
            Ok(CohomologyRequest::Line(vec![1, 0]))
        );
        assert!(CohomologyRequest::parse("line:1,x").unwrap_err().contains("coordinate 2"));
        assert!(CohomologyRequest::parse("tangent").is_err());
    }

    #[test]
    fn a2_survey() {
        let rs = RootSystem::build(TypeLetter::A, 2).unwrap();
        let s = survey(&rs, false, 1000).unwrap();
        assert_eq!(s.rows.len(), 6);
        assert!(s.rows.iter().all(|r| r.smooth));
        let flagged: Vec<_> = s.rows.iter().filter(|r| r.criterion).map(|r| r.word.clone()).collect();
        assert_eq!(flagged, vec![vec![1, 2], vec![2, 1], vec![1, 2, 1]]);
    }

    #[test]
    fn report_round_trips_through_json() {
        let rs = RootSystem::build(TypeLetter::B, 2).unwrap();
        let w = parse_word(&rs, "2,1").unwrap();
        let opts = ReportOptions {
            cohomology: vec![
                CohomologyRequest::Tangent,
                CohomologyRequest::Borel,
                CohomologyRequest::Line(vec![1, 0]),
            ],
            ..ReportOptions::default()
        };
        let r = single_report(&rs, &w, &opts).unwrap();
        let text = serde_json::to_string_pretty(&r).unwrap();
        let back: QueryReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }

    #[test]
    fn bad_words() {
        let rs = RootSystem::build(TypeLetter::A, 2).unwrap();
        assert!(parse_word(&rs, "1,x").unwrap_err().to_string().contains("entry 2"));
        assert!(matches!(parse_word(&rs, "1,3"), Err(Error::IndexOutOfRange { .. })));
        assert!(parse_word(&rs, "").unwrap().is_identity());
    }
}
