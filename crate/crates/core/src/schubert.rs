//! Smoothness, stabilizers and Poincare polynomials of Schubert varieties `X(w)`.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::rootsys::RootSystem;
use crate::weyl::{bruhat_leq, interval_below, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertFacts {
    pub w: WeylElement,
    pub dim: usize,
    pub smooth: bool,
    pub rationally_smooth: bool,
    pub tangent_dim_at_base: usize,
    /// Simple roots (0-based) generating the stabilizer `P_w` over `B`.
    pub left_descents: BTreeSet<usize>,
    pub poincare: Vec<u64>,
}

/// Dimension of the Zariski tangent space of `X(w)` at the base point: the number of
/// positive roots `beta` with `s_beta <= w`.
///
/// The singular locus is closed and B-stable, so it contains the base point as soon
/// as it is nonempty; this count therefore decides smoothness.
pub fn tangent_dim_at_base(rs: &RootSystem, w: &WeylElement) -> Result<usize> {
    let mut n = 0;
    for r in rs.reflections() {
        if bruhat_leq(rs, r, w)? {
            n += 1;
        }
    }
    Ok(n)
}

pub fn is_smooth(rs: &RootSystem, w: &WeylElement) -> Result<bool> {
    Ok(tangent_dim_at_base(rs, w)? == w.length())
}

/// Simple roots of the parabolic subgroup stabilizing `X(w)`.
pub fn stabilizer_parabolic(rs: &RootSystem, w: &WeylElement) -> BTreeSet<usize> {
    w.left_descents(rs)
}

/// Dimension of the standard parabolic generated by `B` and the simple roots in `j`.
pub fn parabolic_dim(rs: &RootSystem, j: &BTreeSet<usize>) -> usize {
    let levi = rs
        .positive_roots()
        .iter()
        .filter(|r| r.coeffs().iter().enumerate().all(|(i, &c)| c == 0 || j.contains(&i)))
        .count();
    rs.num_positive() + rs.rank() + levi
}

/// Coefficients of `sum_{v <= w} t^{l(v)}`, constant term first.
pub fn poincare_polynomial(rs: &RootSystem, w: &WeylElement, cap: usize) -> Result<Vec<u64>> {
    let mut coeffs = vec![0u64; w.length() + 1];
    for v in interval_below(rs, w, cap)? {
        coeffs[v.length()] += 1;
    }
    Ok(coeffs)
}

pub fn is_palindromic(coeffs: &[u64]) -> bool {
    coeffs.iter().eq(coeffs.iter().rev())
}

pub fn schubert_facts(rs: &RootSystem, w: &WeylElement, cap: usize) -> Result<SchubertFacts> {
    let tangent = tangent_dim_at_base(rs, w)?;
    let poincare = poincare_polynomial(rs, w, cap)?;
    Ok(SchubertFacts {
        w: w.clone(),
        dim: w.length(),
        smooth: tangent == w.length(),
        rationally_smooth: is_palindromic(&poincare),
        tangent_dim_at_base: tangent,
        left_descents: stabilizer_parabolic(rs, w),
        poincare,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::TypeLetter;
    use crate::weyl::{enumerate_group, longest_element, DEFAULT_CAP};

    #[test]
    fn extremes() {
        let rs = RootSystem::build(TypeLetter::B, 3).unwrap();
        let e = WeylElement::identity(&rs);
        assert_eq!(tangent_dim_at_base(&rs, &e).unwrap(), 0);
        assert_eq!(poincare_polynomial(&rs, &e, DEFAULT_CAP).unwrap(), vec![1]);
        assert!(stabilizer_parabolic(&rs, &e).is_empty());
        let w0 = longest_element(&rs);
        assert_eq!(tangent_dim_at_base(&rs, &w0).unwrap(), rs.num_positive());
        assert!(is_smooth(&rs, &w0).unwrap());
        assert_eq!(stabilizer_parabolic(&rs, &w0).len(), 3);
        assert_eq!(parabolic_dim(&rs, &stabilizer_parabolic(&rs, &w0)), 21);
    }

    #[test]
    fn a2_all_smooth() {
        let rs = RootSystem::build(TypeLetter::A, 2).unwrap();
        for w in enumerate_group(&rs, DEFAULT_CAP).unwrap() {
            assert!(is_smooth(&rs, &w).unwrap(), "{w}");
        }
        let w = WeylElement::from_labels(&rs, &[1, 2]).unwrap();
        assert_eq!(stabilizer_parabolic(&rs, &w).into_iter().collect::<Vec<_>>(), vec![0]);
        let w0 = longest_element(&rs);
        assert_eq!(poincare_polynomial(&rs, &w0, DEFAULT_CAP).unwrap(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn a3_3412_singular() {
        let rs = RootSystem::build(TypeLetter::A, 3).unwrap();
        let w = WeylElement::from_labels(&rs, &[2, 1, 3, 2]).unwrap();
        assert!(tangent_dim_at_base(&rs, &w).unwrap() > 4);
        assert!(!is_smooth(&rs, &w).unwrap());
        let f = schubert_facts(&rs, &w, DEFAULT_CAP).unwrap();
        assert!(!f.rationally_smooth);
    }

    #[test]
    fn b2_poincare() {
        let rs = RootSystem::build(TypeLetter::B, 2).unwrap();
        let w = WeylElement::from_labels(&rs, &[2, 1]).unwrap();
        assert_eq!(poincare_polynomial(&rs, &w, DEFAULT_CAP).unwrap(), vec![1, 2, 1]);
    }
}
