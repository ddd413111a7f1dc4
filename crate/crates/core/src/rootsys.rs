//! Root systems of the simple types in Bourbaki numbering.
//!
//! Roots are generated by closing the simple roots under the simple
//! reflections; the classical root counts are only used as checksums.
//! Everything is expressed in the basis of simple roots, with the invariant
//! form normalised so that short roots have squared length 2.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::WeylElement;

const MAX_CLASSICAL_RANK: usize = 32;

const ALLOWED: &str =
    "allowed are A1..A32, B2..B32, C2..C32, D4..D32, E6, E7, E8, F4, G2";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => TypeLetter::A,
            'B' => TypeLetter::B,
            'C' => TypeLetter::C,
            'D' => TypeLetter::D,
            'E' => TypeLetter::E,
            'F' => TypeLetter::F,
            'G' => TypeLetter::G,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::E => 'E',
            TypeLetter::F => 'F',
            TypeLetter::G => 'G',
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, TypeLetter::A | TypeLetter::D | TypeLetter::E)
    }
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A root, as integer coordinates in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_lattice(&self.0))
    }
}

/// Renders a root-lattice vector as a combination of `a1, a2, ...`.
pub fn format_lattice(coeffs: &[i32]) -> String {
    let mut out = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("a{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A weight with rational coordinates in the simple-root basis.
///
/// Root-lattice weights have integral coordinates; fundamental weights and
/// `rho` generally do not.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(Vec<Rational64>);

impl Weight {
    pub fn new(coeffs: Vec<Rational64>) -> Self {
        Weight(coeffs)
    }

    pub fn from_lattice(coeffs: &[i32]) -> Self {
        Weight(coeffs.iter().map(|&c| Rational64::from_integer(c as i64)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational64::zero(); rank])
    }

    pub fn coeffs(&self) -> &[Rational64] {
        &self.0
    }

    /// Integral coordinates, if this weight lies in the root lattice.
    pub fn to_lattice(&self) -> Option<Vec<i32>> {
        self.0
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i32() } else { None })
            .collect()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: Rational64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Long,
    Short,
}

#[derive(Debug)]
pub struct RootSystem {
    letter: TypeLetter,
    rank: usize,
    /// `cartan[i][j] = <a_i, a_j^vee>`.
    cartan: Vec<Vec<i32>>,
    /// Invariant form on simple roots, short roots normalised to 2.
    gram: Vec<Vec<i64>>,
    /// Positive roots (simple roots first, then by height), followed by their negatives
    /// in the same order.
    roots: Vec<Root>,
    norms: Vec<i64>,
    lookup: HashMap<Vec<i32>, usize>,
    n_pos: usize,
    highest_long: usize,
    highest_short: Option<usize>,
    simple_reflections: Vec<Vec<u16>>,
    two_rho: Vec<i32>,
    reflections: OnceLock<Vec<WeylElement>>,
}

impl RootSystem {
    pub fn build(letter: TypeLetter, rank: usize) -> Result<RootSystem> {
        let invalid = || Error::InvalidType {
            letter: letter.as_char(),
            rank,
            allowed: ALLOWED,
        };
        let ok = match letter {
            TypeLetter::A => (1..=MAX_CLASSICAL_RANK).contains(&rank),
            TypeLetter::B | TypeLetter::C => (2..=MAX_CLASSICAL_RANK).contains(&rank),
            TypeLetter::D => (4..=MAX_CLASSICAL_RANK).contains(&rank),
            TypeLetter::E => (6..=8).contains(&rank),
            TypeLetter::F => rank == 4,
            TypeLetter::G => rank == 2,
        };
        if !ok {
            return Err(invalid());
        }

        let (norms, edges) = dynkin(letter, rank);
        let mut gram = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            gram[i][i] = norms[i];
        }
        for &(i, j) in &edges {
            let v = -norms[i].max(norms[j]) / 2;
            gram[i][j] = v;
            gram[j][i] = v;
        }
        let cartan: Vec<Vec<i32>> = (0..rank)
            .map(|i| (0..rank).map(|j| (2 * gram[i][j] / norms[j]) as i32).collect())
            .collect();

        let positive = close_under_reflections(&cartan, rank);
        let n_pos = positive.len();
        let mut roots: Vec<Root> = positive.into_iter().map(Root).collect();
        let negatives: Vec<Root> = roots.iter().map(Root::neg).collect();
        roots.extend(negatives);

        let expected = classical_root_count(letter, rank);
        if roots.len() != expected {
            return Err(Error::Invariant(format!(
                "{letter}{rank}: generated {} roots, expected {expected}",
                roots.len()
            )));
        }

        let lookup: HashMap<Vec<i32>, usize> =
            roots.iter().enumerate().map(|(k, r)| (r.0.clone(), k)).collect();
        let norm_of = |v: &[i32]| -> i64 {
            let mut s = 0i64;
            for i in 0..rank {
                for j in 0..rank {
                    s += v[i] as i64 * v[j] as i64 * gram[i][j];
                }
            }
            s
        };
        let norms_all: Vec<i64> = roots.iter().map(|r| norm_of(&r.0)).collect();
        let max_norm = *norms_all.iter().max().unwrap();

        // Highest long and highest short roots are the positive roots of maximal height in
        // their length class.
        let mut highest_long = 0;
        let mut highest_short = None::<usize>;
        for k in 0..n_pos {
            if norms_all[k] == max_norm {
                if roots[k].height() > roots[highest_long].height() || norms_all[highest_long] != max_norm {
                    highest_long = k;
                }
            } else if highest_short.is_none_or(|h| roots[k].height() > roots[h].height()) {
                highest_short = Some(k);
            }
        }

        let simple_reflections = (0..rank)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| {
                        let p = simple_pairing_raw(&cartan, &r.0, i);
                        let mut img = r.0.clone();
                        img[i] -= p;
                        lookup[&img] as u16
                    })
                    .collect()
            })
            .collect();

        let mut two_rho = vec![0i32; rank];
        for r in &roots[..n_pos] {
            for (t, c) in two_rho.iter_mut().zip(&r.0) {
                *t += c;
            }
        }

        Ok(RootSystem {
            letter,
            rank,
            cartan,
            gram,
            roots,
            norms: norms_all,
            lookup,
            n_pos,
            highest_long,
            highest_short,
            simple_reflections,
            two_rho,
            reflections: OnceLock::new(),
        })
    }

    pub fn letter(&self) -> TypeLetter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.letter, self.rank)
    }

    pub fn is_simply_laced(&self) -> bool {
        self.letter.is_simply_laced()
    }

    /// `cartan()[i][j] = <a_i, a_j^vee>`.
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    /// Index of the root with the given coordinates.
    pub fn index_of(&self, coeffs: &[i32]) -> Option<usize> {
        self.lookup.get(coeffs).copied()
    }

    pub fn is_root(&self, coeffs: &[i32]) -> bool {
        self.lookup.contains_key(coeffs)
    }

    pub fn is_positive_index(&self, idx: usize) -> bool {
        idx < self.n_pos
    }

    pub fn negate_index(&self, idx: usize) -> usize {
        if idx < self.n_pos {
            idx + self.n_pos
        } else {
            idx - self.n_pos
        }
    }

    /// Root index of the simple root `a_{i+1}`.
    pub fn simple_index(&self, i: usize) -> usize {
        i
    }

    /// Position of `coeffs` among the simple roots, if it is one.
    pub fn simple_position(&self, coeffs: &[i32]) -> Option<usize> {
        let idx = self.index_of(coeffs)?;
        (idx < self.rank).then_some(idx)
    }

    pub fn highest_long_root(&self) -> &Root {
        &self.roots[self.highest_long]
    }

    pub fn highest_long_index(&self) -> usize {
        self.highest_long
    }

    /// Highest short root; `None` in simply-laced types.
    pub fn highest_short_root(&self) -> Option<&Root> {
        self.highest_short.map(|k| &self.roots[k])
    }

    pub fn highest_short_index(&self) -> Option<usize> {
        self.highest_short
    }

    pub fn norm_of_index(&self, idx: usize) -> i64 {
        self.norms[idx]
    }

    pub fn length_class(&self, idx: usize) -> LengthClass {
        let max = *self.norms.iter().max().unwrap();
        if self.norms[idx] == max {
            LengthClass::Long
        } else {
            LengthClass::Short
        }
    }

    pub fn is_short_index(&self, idx: usize) -> bool {
        self.length_class(idx) == LengthClass::Short
    }

    /// `2 rho` in the simple-root basis.
    pub fn two_rho(&self) -> &[i32] {
        &self.two_rho
    }

    pub fn rho(&self) -> Weight {
        Weight(
            self.two_rho
                .iter()
                .map(|&c| Rational64::new(c as i64, 2))
                .collect(),
        )
    }

    /// The invariant form `(u, v)` on root-lattice vectors.
    pub fn form(&self, u: &[i32], v: &[i32]) -> i64 {
        let mut s = 0i64;
        for i in 0..self.rank {
            if u[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += u[i] as i64 * v[j] as i64 * self.gram[i][j];
            }
        }
        s
    }

    fn form_rational(&self, u: &Weight, v: &[i32]) -> Rational64 {
        let mut s = Rational64::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += u.0[i] * Rational64::from_integer(v[j] as i64 * self.gram[i][j]);
            }
        }
        s
    }

    /// `<mu, a_i^vee>` for a root-lattice vector and the simple root `a_{i+1}`.
    pub fn simple_pairing(&self, mu: &[i32], i: usize) -> i32 {
        simple_pairing_raw(&self.cartan, mu, i)
    }

    /// `<mu, beta^vee>` for a root-lattice vector and the root with index `idx`.
    pub fn pairing_index(&self, mu: &[i32], idx: usize) -> i32 {
        let num = 2 * self.form(mu, &self.roots[idx].0);
        let den = self.norms[idx];
        debug_assert_eq!(num % den, 0);
        (num / den) as i32
    }

    /// `<mu, alpha^vee> = 2 (mu, alpha) / (alpha, alpha)`, exactly.
    pub fn pairing(&self, mu: &Weight, alpha: &Root) -> Result<Rational64> {
        self.check_dim(mu.0.len())?;
        let idx = self
            .index_of(&alpha.0)
            .ok_or_else(|| Error::NotARoot(alpha.0.clone()))?;
        let num = self.form_rational(mu, &alpha.0) * 2;
        Ok(num / Rational64::from_integer(self.norms[idx]))
    }

    /// `s_alpha(mu) = mu - <mu, alpha^vee> alpha`.
    pub fn reflect(&self, mu: &Weight, alpha: &Root) -> Result<Weight> {
        let p = self.pairing(mu, alpha)?;
        Ok(mu.sub(&Weight::from_lattice(&alpha.0).scale(p)))
    }

    pub fn reflect_lattice(&self, mu: &[i32], idx: usize) -> Vec<i32> {
        let p = self.pairing_index(mu, idx);
        mu.iter()
            .zip(&self.roots[idx].0)
            .map(|(m, r)| m - p * r)
            .collect()
    }

    /// Permutation of root indices induced by the simple reflection `s_{i+1}`.
    pub fn simple_reflection_perm(&self, i: usize) -> &[u16] {
        &self.simple_reflections[i]
    }

    pub fn is_dominant(&self, mu: &[i32]) -> bool {
        (0..self.rank).all(|i| self.simple_pairing(mu, i) >= 0)
    }

    pub(crate) fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.rank {
            return Err(Error::Dimension {
                expected: self.rank,
                got,
            });
        }
        Ok(())
    }

    /// Reflections `s_beta` for every positive root, in root order. Computed once.
    pub fn reflections(&self) -> &[WeylElement] {
        self.reflections.get_or_init(|| {
            (0..self.n_pos)
                .map(|k| WeylElement::reflection(self, k))
                .collect()
        })
    }
}

fn simple_pairing_raw(cartan: &[Vec<i32>], mu: &[i32], i: usize) -> i32 {
    mu.iter().enumerate().map(|(j, &m)| m * cartan[j][i]).sum()
}

/// Simple-root squared lengths and Dynkin edges (0-based), Bourbaki numbering.
fn dynkin(letter: TypeLetter, rank: usize) -> (Vec<i64>, Vec<(usize, usize)>) {
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match letter {
        TypeLetter::A => (vec![2; rank], chain(rank)),
        TypeLetter::B => {
            let mut norms = vec![4; rank];
            norms[rank - 1] = 2;
            (norms, chain(rank))
        }
        TypeLetter::C => {
            let mut norms = vec![2; rank];
            norms[rank - 1] = 4;
            (norms, chain(rank))
        }
        TypeLetter::D => {
            let mut edges = chain(rank - 1);
            edges.push((rank - 3, rank - 1));
            (vec![2; rank], edges)
        }
        TypeLetter::E => {
            let mut edges = vec![(0, 2), (1, 3)];
            edges.extend((2..rank - 1).map(|i| (i, i + 1)));
            (vec![2; rank], edges)
        }
        TypeLetter::F => (vec![4, 4, 2, 2], chain(4)),
        TypeLetter::G => (vec![2, 6], chain(2)),
    }
}

pub fn classical_root_count(letter: TypeLetter, n: usize) -> usize {
    match letter {
        TypeLetter::A => n * (n + 1),
        TypeLetter::B | TypeLetter::C => 2 * n * n,
        TypeLetter::D => 2 * n * (n - 1),
        TypeLetter::E => match n {
            6 => 72,
            7 => 126,
            _ => 240,
        },
        TypeLetter::F => 48,
        TypeLetter::G => 12,
    }
}

/// Positive roots reachable from the simple roots by simple reflections, simple roots
/// first and the rest ordered by height.
fn close_under_reflections(cartan: &[Vec<i32>], rank: usize) -> Vec<Vec<i32>> {
    let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 1;
        seen.insert(e.clone(), ());
        queue.push_back(e);
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..rank {
            let p = simple_pairing_raw(cartan, &r, i);
            if p == 0 {
                continue;
            }
            let mut img = r.clone();
            img[i] -= p;
            if !seen.contains_key(&img) {
                seen.insert(img.clone(), ());
                queue.push_back(img);
            }
        }
    }
    let mut positive: Vec<Vec<i32>> = seen
        .into_keys()
        .filter(|r| r.iter().all(|&c| c >= 0))
        .collect();
    positive.sort_by(|a, b| {
        let ha: i32 = a.iter().sum();
        let hb: i32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    positive
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn rejects_degenerate_types() {
        for (l, n) in [
            (TypeLetter::A, 0),
            (TypeLetter::B, 1),
            (TypeLetter::C, 1),
            (TypeLetter::D, 3),
            (TypeLetter::E, 5),
            (TypeLetter::E, 9),
            (TypeLetter::F, 3),
            (TypeLetter::G, 3),
        ] {
            let err = RootSystem::build(l, n).unwrap_err();
            assert!(err.to_string().contains("allowed are"), "{err}");
        }
    }

    #[test]
    fn a2_data() {
        let rs = RootSystem::build(TypeLetter::A, 2).unwrap();
        assert_eq!(rs.num_roots(), 6);
        assert_eq!(rs.highest_long_root().coeffs(), &[1, 1]);
        assert!(rs.highest_short_root().is_none());
        let mu = Weight::from_lattice(&[1, 1]);
        assert_eq!(rs.pairing(&mu, rs.root(0)).unwrap(), q(1));
        let a2 = Weight::from_lattice(&[0, 1]);
        assert_eq!(
            rs.reflect(&a2, rs.root(0)).unwrap(),
            Weight::from_lattice(&[1, 1])
        );
    }

    #[test]
    fn b2_matches_bourbaki_convention() {
        let rs = RootSystem::build(TypeLetter::B, 2).unwrap();
        assert_eq!(rs.num_roots(), 8);
        assert_eq!(rs.cartan()[0][1], -2);
        assert_eq!(rs.cartan()[1][0], -1);
        assert_eq!(rs.highest_long_root().coeffs(), &[1, 2]);
        assert_eq!(rs.highest_short_root().unwrap().coeffs(), &[1, 1]);
        let a1 = Weight::from_lattice(&[1, 0]);
        assert_eq!(rs.pairing(&a1, &Root::new(vec![0, 1])).unwrap(), q(-2));
        assert_eq!(
            rs.reflect(&a1, &Root::new(vec![0, 1])).unwrap(),
            Weight::from_lattice(&[1, 2])
        );
    }

    #[test]
    fn g2_highest_roots() {
        let rs = RootSystem::build(TypeLetter::G, 2).unwrap();
        assert_eq!(rs.num_roots(), 12);
        assert_eq!(rs.highest_long_root().coeffs(), &[3, 2]);
        assert_eq!(rs.highest_short_root().unwrap().coeffs(), &[2, 1]);
        assert_eq!(rs.length_class(0), LengthClass::Short);
    }

    #[test]
    fn pairing_rejects_non_roots() {
        let rs = RootSystem::build(TypeLetter::A, 2).unwrap();
        let mu = Weight::from_lattice(&[1, 0]);
        assert!(matches!(
            rs.pairing(&mu, &Root::new(vec![2, 0])),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn rational_weights_pair_exactly() {
        let rs = RootSystem::build(TypeLetter::B, 2).unwrap();
        // rho pairs to 1 with every simple coroot
        let rho = rs.rho();
        for i in 0..2 {
            let mut e = vec![0; 2];
            e[i] = 1;
            assert_eq!(rs.pairing(&rho, &Root::new(e)).unwrap(), q(1));
        }
    }

    #[test]
    fn distinguished_roots_are_dominant_everywhere() {
        let all = [
            (TypeLetter::A, 1),
            (TypeLetter::A, 4),
            (TypeLetter::B, 3),
            (TypeLetter::C, 3),
            (TypeLetter::D, 5),
            (TypeLetter::E, 6),
            (TypeLetter::E, 7),
            (TypeLetter::E, 8),
            (TypeLetter::F, 4),
            (TypeLetter::G, 2),
        ];
        for (l, n) in all {
            let rs = RootSystem::build(l, n).unwrap();
            assert!(rs.is_dominant(rs.highest_long_root().coeffs()), "{}", rs.name());
            if let Some(b) = rs.highest_short_root() {
                assert!(rs.is_dominant(b.coeffs()), "{}", rs.name());
            }
            assert_eq!(rs.highest_short_root().is_none(), rs.is_simply_laced());
        }
    }
}
