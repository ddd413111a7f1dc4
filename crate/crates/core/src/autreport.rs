//! Automorphism-group verdicts for Schubert varieties.
//!
//! The action map `P_w -> Aut^0(X(w))` is surjective for smooth `X(w)` in
//! simply-laced types, and it is injective exactly when `w^{-1}(a_0)` is a negative
//! root (`a_0` the highest root). This module assembles those facts from the
//! cohomology computed in [`crate::bmod`].

use std::collections::BTreeSet;

use crate::bmod::{tangent_cohomology, TangentCohomology};
use crate::charring::{adjoint_character, demazure_char};
use crate::error::{Error, Result};
use crate::linalg::elementary_divisors;
use crate::rootsys::{format_lattice, Root, RootSystem};
use crate::schubert::{is_palindromic, parabolic_dim, poincare_polynomial, tangent_dim_at_base};
use crate::weyl::{interval_below, WeylElement};

/// Whether `w^{-1}(a_0)` is a negative root.
pub fn criterion(rs: &RootSystem, w: &WeylElement) -> bool {
    let img = w.inverse(rs).apply_index(rs.highest_long_index());
    !rs.is_positive_index(img)
}

/// Positive roots `a` with `v^{-1}(a) > 0` for every `v <= w`, by root index.
pub fn untouched_roots(rs: &RootSystem, w: &WeylElement, cap: usize) -> Result<BTreeSet<usize>> {
    let touched = touched_roots(rs, w, cap)?;
    Ok((0..rs.num_positive()).filter(|k| !touched.contains(k)).collect())
}

/// `Union over v <= w of R+(v^{-1})`.
fn touched_roots(rs: &RootSystem, w: &WeylElement, cap: usize) -> Result<BTreeSet<usize>> {
    let mut touched = BTreeSet::new();
    for v in interval_below(rs, w, cap)? {
        touched.extend(v.inverse(rs).inversion_indices(rs));
    }
    Ok(touched)
}

/// The kernel of `P_w -> Aut^0(X(w))`, generated by a subtorus and root subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelStructure {
    pub torus_dim: usize,
    /// `|J_w|`, the number of simple reflections below `w`.
    pub torus_codim: usize,
    pub component_group_order: u64,
    pub unipotent_roots: BTreeSet<Root>,
}

impl KernelStructure {
    pub fn dim(&self) -> usize {
        self.torus_dim + self.unipotent_roots.len()
    }
}

/// Kernel description valid in simply-laced types.
///
/// The torus part is the common kernel of the characters `beta` over all roots
/// touched by the interval below `w`. Its identity component has codimension
/// `|J_w|`; its component group is read off from the elementary divisors of the
/// coordinate matrix of those roots.
pub fn kernel_structure(rs: &RootSystem, w: &WeylElement, cap: usize) -> Result<KernelStructure> {
    let touched = touched_roots(rs, w, cap)?;
    let untouched: BTreeSet<Root> = (0..rs.num_positive())
        .filter(|k| !touched.contains(k))
        .map(|k| rs.root(k).clone())
        .collect();
    if !rs.is_simply_laced() {
        let listed: Vec<String> = untouched.iter().map(|r| format_lattice(r.coeffs())).collect();
        return Err(Error::Unsupported(format!(
            "{} is not simply laced, so the kernel of P_w -> Aut(X(w)) is not described by a \
             torus and untouched root subgroups; for w = {w} the untouched roots are {{{}}} and \
             their root subgroups need not act trivially on X(w)",
            rs.name(),
            listed.join(", ")
        )));
    }
    let support = w.support();
    let rows: Vec<Vec<i64>> = touched
        .iter()
        .map(|&k| rs.root(k).coeffs().iter().map(|&c| c as i64).collect())
        .collect();
    let divisors = elementary_divisors(&rows);
    if divisors.len() != support.len() {
        return Err(Error::Invariant(format!(
            "roots below {w} span a lattice of rank {}, expected |J_w| = {}",
            divisors.len(),
            support.len()
        )));
    }
    Ok(KernelStructure {
        torus_dim: rs.rank() - support.len(),
        torus_codim: support.len(),
        component_group_order: divisors.iter().map(|&d| d as u64).product(),
        unipotent_roots: untouched,
    })
}

/// A dimension that is either known exactly or only bounded from below.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimValue {
    Exact(usize),
    AtLeast(usize),
}

impl DimValue {
    pub fn value(self) -> usize {
        match self {
            DimValue::Exact(n) | DimValue::AtLeast(n) => n,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, DimValue::Exact(_))
    }
}

/// Automorphism-group facts, present only for smooth `X(w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFacts {
    /// `None` when not known (non-simply-laced types).
    pub phi_surjective: Option<bool>,
    pub phi_injective: bool,
    /// Simply-laced kernel description.
    pub kernel: Option<KernelStructure>,
    /// Dimension of the kernel, the dimension of `H^0(w, b)`.
    pub dim_k: usize,
    pub dim_aut0: DimValue,
}

#[derive(Debug, Clone)]
pub struct AutVerdict {
    pub w: WeylElement,
    pub smooth: bool,
    pub rationally_smooth: bool,
    pub tangent_dim_at_base: usize,
    pub poincare: Vec<u64>,
    pub criterion_holds: bool,
    pub simply_laced: bool,
    pub stabilizer: BTreeSet<usize>,
    pub dim_p_w: usize,
    pub untouched_roots: BTreeSet<Root>,
    pub h0_borel_vanishes: bool,
    pub semistable_nonempty: bool,
    /// Equality with `ch g` (simply laced) or containment of `ch g` (otherwise).
    pub h0_tangent_is_adjoint: bool,
    pub group: Option<GroupFacts>,
    pub tangent: TangentCohomology,
}

/// Whether the zero weight occurs in `H^0(X(w^{-1}), L(a_0))`.
pub fn semistable_nonempty(rs: &RootSystem, w: &WeylElement) -> Result<bool> {
    let ch = demazure_char(rs, &w.inverse(rs), rs.highest_long_root().coeffs())?;
    Ok(ch.mult(&vec![0; rs.rank()]) > 0)
}

pub fn verdict(rs: &RootSystem, w: &WeylElement, cap: usize) -> Result<AutVerdict> {
    let tangent_dim = tangent_dim_at_base(rs, w)?;
    let smooth = tangent_dim == w.length();
    let poincare = poincare_polynomial(rs, w, cap)?;
    let crit = criterion(rs, w);
    let simply_laced = rs.is_simply_laced();
    let stabilizer = w.left_descents(rs);
    let dim_p_w = parabolic_dim(rs, &stabilizer);
    let untouched: BTreeSet<Root> = untouched_roots(rs, w, cap)?
        .into_iter()
        .map(|k| rs.root(k).clone())
        .collect();
    let tangent = tangent_cohomology(rs, w)?;
    if !tangent.h1.is_zero() {
        return Err(Error::Invariant(format!(
            "H^1(w, g/b) = {:?} is nonzero for w = {w}",
            tangent.h1.to_pairs()
        )));
    }
    let adjoint = adjoint_character(rs);
    let h0_tangent_is_adjoint = if simply_laced {
        tangent.h0 == adjoint
    } else {
        tangent.h0.contains(&adjoint)
    };
    let h0_b = &tangent.borel.h0;

    let group = if smooth {
        let dim_k = h0_b.dim();
        let kernel = if simply_laced {
            let k = kernel_structure(rs, w, cap)?;
            if k.dim() != dim_k {
                return Err(Error::Invariant(format!(
                    "kernel of dimension {} from torus and root subgroups, but H^0(w, b) has dimension {dim_k}",
                    k.dim()
                )));
            }
            Some(k)
        } else {
            None
        };
        let image = dim_p_w - dim_k;
        Some(GroupFacts {
            phi_surjective: simply_laced.then_some(true),
            phi_injective: crit,
            kernel,
            dim_k,
            dim_aut0: if simply_laced {
                DimValue::Exact(image)
            } else {
                DimValue::AtLeast(image)
            },
        })
    } else {
        None
    };

    Ok(AutVerdict {
        w: w.clone(),
        smooth,
        rationally_smooth: is_palindromic(&poincare),
        tangent_dim_at_base: tangent_dim,
        poincare,
        criterion_holds: crit,
        simply_laced,
        stabilizer,
        dim_p_w,
        untouched_roots: untouched,
        h0_borel_vanishes: h0_b.is_zero(),
        semistable_nonempty: semistable_nonempty(rs, w)?,
        h0_tangent_is_adjoint,
        group,
        tangent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::TypeLetter;
    use crate::weyl::{longest_element, DEFAULT_CAP};

    fn sys(l: TypeLetter, n: usize) -> RootSystem {
        RootSystem::build(l, n).unwrap()
    }

    #[test]
    fn criterion_examples() {
        let rs = sys(TypeLetter::A, 2);
        assert!(criterion(&rs, &longest_element(&rs)));
        assert!(!criterion(&rs, &WeylElement::from_labels(&rs, &[1]).unwrap()));
        assert!(criterion(&rs, &WeylElement::from_labels(&rs, &[1, 2]).unwrap()));
    }

    #[test]
    fn p1_kernel() {
        let rs = sys(TypeLetter::A, 2);
        let s1 = WeylElement::from_labels(&rs, &[1]).unwrap();
        let k = kernel_structure(&rs, &s1, DEFAULT_CAP).unwrap();
        assert_eq!(k.torus_dim, 1);
        assert_eq!(k.component_group_order, 1);
        let roots: BTreeSet<Root> = [vec![0, 1], vec![1, 1]].into_iter().map(Root::new).collect();
        assert_eq!(k.unipotent_roots, roots);
        assert_eq!(k.dim(), 3);
        let v = verdict(&rs, &s1, DEFAULT_CAP).unwrap();
        let g = v.group.unwrap();
        assert_eq!(g.dim_k, 3);
        assert_eq!(g.dim_aut0, DimValue::Exact(3));
    }

    #[test]
    fn s1s2_in_a2() {
        let rs = sys(TypeLetter::A, 2);
        let w = WeylElement::from_labels(&rs, &[1, 2]).unwrap();
        let v = verdict(&rs, &w, DEFAULT_CAP).unwrap();
        assert!(v.smooth && v.criterion_holds && v.h0_tangent_is_adjoint && v.semistable_nonempty);
        assert_eq!(v.stabilizer.iter().copied().collect::<Vec<_>>(), vec![0]);
        assert_eq!(v.group.unwrap().dim_aut0, DimValue::Exact(6));
    }

    #[test]
    fn b2_refusal_names_untouched_root() {
        let rs = sys(TypeLetter::B, 2);
        let w = WeylElement::from_labels(&rs, &[2, 1]).unwrap();
        let un = untouched_roots(&rs, &w, DEFAULT_CAP).unwrap();
        assert!(un.contains(&rs.index_of(&[1, 1]).unwrap()));
        let err = kernel_structure(&rs, &w, DEFAULT_CAP).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
        assert!(err.to_string().contains("a1+a2"), "{err}");
    }

    #[test]
    fn longest_element_everywhere() {
        for rs in [sys(TypeLetter::A, 3), sys(TypeLetter::B, 2), sys(TypeLetter::G, 2)] {
            let w0 = longest_element(&rs);
            let v = verdict(&rs, &w0, DEFAULT_CAP).unwrap();
            assert!(v.smooth && v.criterion_holds && v.h0_tangent_is_adjoint);
            assert!(v.untouched_roots.is_empty());
            let g = v.group.unwrap();
            assert_eq!(g.dim_k, 0);
            assert_eq!(g.dim_aut0.value(), rs.num_roots() + rs.rank());
        }
    }
}
