//! Weyl group elements as permutations of the root list.
//!
//! Simple root indices are 0-based throughout this crate; the 1-based
//! Bourbaki labels only appear at the edges (parsing and rendering).

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, TypeLetter, Weight};

/// Default bound on the number of elements any enumeration may produce.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemId {
    pub letter: TypeLetter,
    pub rank: usize,
}

impl SystemId {
    pub fn of(rs: &RootSystem) -> Self {
        SystemId {
            letter: rs.letter(),
            rank: rs.rank(),
        }
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// An element of the Weyl group, stored as the permutation it induces on the
/// root list together with its lexicographically least reduced word.
#[derive(Debug, Clone)]
pub struct WeylElement {
    system: SystemId,
    perm: Vec<u16>,
    word: Vec<u8>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        let r = self.system.rank;
        self.system == other.system && self.perm[..r] == other.perm[..r]
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.system.hash(state);
        self.perm[..self.system.rank].hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by length, then by canonical word.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.system, self.word.len(), &self.word).cmp(&(other.system, other.word.len(), &other.word))
    }
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            system: SystemId::of(rs),
            perm: (0..rs.num_roots() as u16).collect(),
            word: Vec::new(),
        }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self> {
        Self::from_word(rs, &[i])
    }

    /// Product of simple reflections `s_{i_1} ... s_{i_k}` for a word of 0-based indices.
    /// The word need not be reduced.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let n = rs.num_roots();
        let mut perm: Vec<u16> = (0..n as u16).collect();
        for &i in word {
            if i >= rs.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i + 1,
                    rank: rs.rank(),
                });
            }
            let s = rs.simple_reflection_perm(i);
            // (w s)(beta) = w(s(beta))
            perm = s.iter().map(|&b| perm[b as usize]).collect();
        }
        Ok(Self::from_perm_unchecked(rs, perm))
    }

    /// Same as [`from_word`](Self::from_word) but with 1-based Bourbaki labels.
    pub fn from_labels(rs: &RootSystem, labels: &[usize]) -> Result<Self> {
        let word = labels
            .iter()
            .map(|&l| {
                if l == 0 || l > rs.rank() {
                    Err(Error::IndexOutOfRange {
                        index: l,
                        rank: rs.rank(),
                    })
                } else {
                    Ok(l - 1)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_word(rs, &word)
    }

    fn from_perm_unchecked(rs: &RootSystem, perm: Vec<u16>) -> Self {
        let word = canonical_word(rs, &perm);
        WeylElement {
            system: SystemId::of(rs),
            perm,
            word,
        }
    }

    /// The reflection `s_beta` for the positive root with index `idx`.
    pub fn reflection(rs: &RootSystem, idx: usize) -> Self {
        let perm = (0..rs.num_roots())
            .map(|k| {
                let img = rs.reflect_lattice(rs.root(k).coeffs(), idx);
                rs.index_of(&img).expect("reflection of a root is a root") as u16
            })
            .collect();
        Self::from_perm_unchecked(rs, perm)
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Canonical (lexicographically least) reduced word, 0-based.
    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&i| i as usize).collect()
    }

    /// Canonical reduced word as 1-based labels.
    pub fn labels(&self) -> Vec<usize> {
        self.word.iter().map(|&i| i as usize + 1).collect()
    }

    /// Image of the root with index `idx`.
    pub fn apply_index(&self, idx: usize) -> usize {
        self.perm[idx] as usize
    }

    pub fn apply_root(&self, rs: &RootSystem, beta: &Root) -> Result<Root> {
        self.check(rs)?;
        let idx = rs
            .index_of(beta.coeffs())
            .ok_or_else(|| Error::NotARoot(beta.coeffs().to_vec()))?;
        Ok(rs.root(self.apply_index(idx)).clone())
    }

    /// Linear action on a root-lattice vector.
    pub fn apply_lattice(&self, rs: &RootSystem, mu: &[i32]) -> Vec<i32> {
        let mut out = vec![0i32; rs.rank()];
        for (i, &m) in mu.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let img = rs.root(self.perm[i] as usize).coeffs();
            for (o, c) in out.iter_mut().zip(img) {
                *o += m * c;
            }
        }
        out
    }

    /// Linear action on a rational weight.
    pub fn apply_weight(&self, rs: &RootSystem, mu: &Weight) -> Result<Weight> {
        self.check(rs)?;
        rs.check_dim(mu.coeffs().len())?;
        let mut out = vec![Rational64::from_integer(0); rs.rank()];
        for (i, m) in mu.coeffs().iter().enumerate() {
            let img = rs.root(self.perm[i] as usize).coeffs();
            for (o, &c) in out.iter_mut().zip(img) {
                *o += m * Rational64::from_integer(c as i64);
            }
        }
        Ok(Weight::new(out))
    }

    pub fn inverse(&self, rs: &RootSystem) -> Self {
        let mut inv = vec![0u16; self.perm.len()];
        for (k, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = k as u16;
        }
        Self::from_perm_unchecked(rs, inv)
    }

    /// The product `self * other` (apply `other` first).
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> Result<Self> {
        self.check(rs)?;
        self.same_system(other)?;
        let perm = other.perm.iter().map(|&b| self.perm[b as usize]).collect();
        Ok(Self::from_perm_unchecked(rs, perm))
    }

    /// `R+(w)`: positive roots sent to negative roots.
    pub fn inversion_indices(&self, rs: &RootSystem) -> Vec<usize> {
        (0..rs.num_positive())
            .filter(|&k| !rs.is_positive_index(self.perm[k] as usize))
            .collect()
    }

    pub fn inversions(&self, rs: &RootSystem) -> BTreeSet<Root> {
        self.inversion_indices(rs)
            .into_iter()
            .map(|k| rs.root(k).clone())
            .collect()
    }

    /// Simple roots `a_i` with `l(s_i w) < l(w)`, i.e. `w^{-1}(a_i) < 0`.
    pub fn left_descents(&self, rs: &RootSystem) -> BTreeSet<usize> {
        let n = self.perm.len();
        let mut inv = vec![0u16; n];
        for (k, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = k as u16;
        }
        (0..rs.rank())
            .filter(|&i| !rs.is_positive_index(inv[i] as usize))
            .collect()
    }

    /// Simple roots `a_i` with `l(w s_i) < l(w)`, i.e. `w(a_i) < 0`.
    pub fn right_descents(&self, rs: &RootSystem) -> BTreeSet<usize> {
        (0..rs.rank())
            .filter(|&i| !rs.is_positive_index(self.perm[i] as usize))
            .collect()
    }

    /// Simple reflections occurring in a (any) reduced word.
    pub fn support(&self) -> BTreeSet<usize> {
        self.word.iter().map(|&i| i as usize).collect()
    }

    /// `s_i * self`.
    pub fn left_mul_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let s = rs.simple_reflection_perm(i);
        let perm = self.perm.iter().map(|&b| s[b as usize]).collect();
        Self::from_perm_unchecked(rs, perm)
    }

    /// `self * s_i`.
    pub fn right_mul_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let s = rs.simple_reflection_perm(i);
        let perm = s.iter().map(|&b| self.perm[b as usize]).collect();
        Self::from_perm_unchecked(rs, perm)
    }

    /// The dot action `w . lambda = w(lambda + rho) - rho`.
    pub fn dot_action(&self, rs: &RootSystem, lambda: &Weight) -> Result<Weight> {
        let rho = rs.rho();
        Ok(self.apply_weight(rs, &lambda.add(&rho))?.sub(&rho))
    }

    /// Dot action on root-lattice weights, staying in integers via `2 rho`.
    pub fn dot_lattice(&self, rs: &RootSystem, lambda: &[i32]) -> Vec<i32> {
        // w.l = w(l) + (w(2rho) - 2rho)/2 and w(2rho) - 2rho is twice a lattice vector
        let wl = self.apply_lattice(rs, lambda);
        let two_rho = rs.two_rho();
        let w2r = self.apply_lattice(rs, two_rho);
        wl.iter()
            .zip(w2r.iter().zip(two_rho))
            .map(|(a, (b, c))| a + (b - c) / 2)
            .collect()
    }

    fn check(&self, rs: &RootSystem) -> Result<()> {
        let id = SystemId::of(rs);
        if id != self.system {
            return Err(Error::MixedSystems(self.system.to_string(), id.to_string()));
        }
        Ok(())
    }

    fn same_system(&self, other: &WeylElement) -> Result<()> {
        if self.system != other.system {
            return Err(Error::MixedSystems(
                self.system.to_string(),
                other.system.to_string(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for (k, &i) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// Lexicographically least reduced word of the element with root permutation `perm`.
///
/// Peels off the smallest left descent each time; the inverse permutation is
/// updated in place so each step costs one pass over the roots.
fn canonical_word(rs: &RootSystem, perm: &[u16]) -> Vec<u8> {
    let n = perm.len();
    let mut inv = vec![0u16; n];
    for (k, &p) in perm.iter().enumerate() {
        inv[p as usize] = k as u16;
    }
    let mut word = Vec::new();
    while let Some(i) = (0..rs.rank()).find(|&i| !rs.is_positive_index(inv[i] as usize)) {
        word.push(i as u8);
        // u' = s_i u, so u'^{-1}(beta) = u^{-1}(s_i beta)
        let s = rs.simple_reflection_perm(i);
        inv = (0..n).map(|b| inv[s[b] as usize]).collect();
    }
    word
}

/// Bruhat order `v <= w`, by the lifting property.
pub fn bruhat_leq(rs: &RootSystem, v: &WeylElement, w: &WeylElement) -> Result<bool> {
    v.check(rs)?;
    v.same_system(w)?;
    let mut v = v.clone();
    let mut w = w.clone();
    loop {
        if v.length() > w.length() {
            return Ok(false);
        }
        if w.is_identity() {
            return Ok(v.is_identity());
        }
        if v.length() == w.length() {
            return Ok(v == w);
        }
        let s = w.word[0] as usize;
        let ws = w.left_mul_simple(rs, s);
        if v.left_descents(rs).contains(&s) {
            v = v.left_mul_simple(rs, s);
        }
        w = ws;
    }
}

/// All elements of the Weyl group, sorted by length then canonical word.
pub fn enumerate_group(rs: &RootSystem, cap: usize) -> Result<Vec<WeylElement>> {
    let e = WeylElement::identity(rs);
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(e.clone());
    queue.push_back(e);
    while let Some(u) = queue.pop_front() {
        for i in 0..rs.rank() {
            let v = u.right_mul_simple(rs, i);
            if v.length() > u.length() && seen.insert(v.clone()) {
                if seen.len() > cap {
                    return Err(Error::TooLarge {
                        what: format!("the Weyl group of {}", rs.name()),
                        cap,
                    });
                }
                queue.push_back(v);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// The longest element.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    loop {
        let asc = (0..rs.rank()).find(|&i| rs.is_positive_index(w.perm[i] as usize));
        match asc {
            Some(i) => w = w.right_mul_simple(rs, i),
            None => return w,
        }
    }
}

/// The Bruhat interval `[e, w]`, sorted by length then canonical word.
pub fn interval_below(rs: &RootSystem, w: &WeylElement, cap: usize) -> Result<Vec<WeylElement>> {
    w.check(rs)?;
    // Subwords of a reduced word, grown one letter at a time from the right.
    let mut current: HashSet<WeylElement> = HashSet::new();
    current.insert(WeylElement::identity(rs));
    for &i in w.word.iter().rev() {
        let mut next = current.clone();
        for u in &current {
            next.insert(u.left_mul_simple(rs, i as usize));
        }
        if next.len() > cap {
            return Err(Error::TooLarge {
                what: format!("the Bruhat interval below {w}"),
                cap,
            });
        }
        current = next;
    }
    let mut out: Vec<_> = current.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Every reduced word of `w` (0-based), in lexicographic order.
pub fn reduced_words(rs: &RootSystem, w: &WeylElement, cap: usize) -> Result<Vec<Vec<usize>>> {
    w.check(rs)?;
    let mut memo: HashMap<WeylElement, Vec<Vec<usize>>> = HashMap::new();
    let words = reduced_words_rec(rs, w, &mut memo, cap)?;
    Ok(words)
}

fn reduced_words_rec(
    rs: &RootSystem,
    w: &WeylElement,
    memo: &mut HashMap<WeylElement, Vec<Vec<usize>>>,
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    if w.is_identity() {
        return Ok(vec![Vec::new()]);
    }
    if let Some(ws) = memo.get(w) {
        return Ok(ws.clone());
    }
    let mut out = Vec::new();
    for i in w.left_descents(rs) {
        let rest = w.left_mul_simple(rs, i);
        for tail in reduced_words_rec(rs, &rest, memo, cap)? {
            let mut word = Vec::with_capacity(tail.len() + 1);
            word.push(i);
            word.extend(tail);
            out.push(word);
            if out.len() > cap {
                return Err(Error::TooLarge {
                    what: format!("the reduced words of {w}"),
                    cap,
                });
            }
        }
    }
    memo.insert(w.clone(), out.clone());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(l: TypeLetter, n: usize) -> RootSystem {
        RootSystem::build(l, n).unwrap()
    }

    #[test]
    fn words_reduce() {
        let rs = sys(TypeLetter::A, 2);
        let e = WeylElement::from_labels(&rs, &[1, 1]).unwrap();
        assert!(e.is_identity());
        let w0 = WeylElement::from_labels(&rs, &[1, 2, 1]).unwrap();
        assert_eq!(w0.length(), 3);
        assert_eq!(w0, WeylElement::from_labels(&rs, &[2, 1, 2]).unwrap());
        assert_eq!(w0, longest_element(&rs));
        let b2 = sys(TypeLetter::B, 2);
        assert_eq!(WeylElement::from_labels(&b2, &[2, 1]).unwrap().length(), 2);
    }

    #[test]
    fn out_of_range_labels() {
        let rs = sys(TypeLetter::A, 2);
        assert!(matches!(
            WeylElement::from_labels(&rs, &[3]),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        ));
        assert!(WeylElement::from_labels(&rs, &[0]).is_err());
    }

    #[test]
    fn inversion_sets() {
        let rs = sys(TypeLetter::A, 2);
        let s1 = WeylElement::from_labels(&rs, &[1]).unwrap();
        assert_eq!(
            s1.inversions(&rs).into_iter().collect::<Vec<_>>(),
            vec![Root::new(vec![1, 0])]
        );
        let b2 = sys(TypeLetter::B, 2);
        let w = WeylElement::from_labels(&b2, &[1, 2]).unwrap();
        let inv: BTreeSet<Root> = [vec![0, 1], vec![1, 2]].into_iter().map(Root::new).collect();
        assert_eq!(w.inversions(&b2), inv);
    }

    #[test]
    fn descents() {
        let rs = sys(TypeLetter::A, 2);
        let w = WeylElement::from_labels(&rs, &[1, 2]).unwrap();
        assert_eq!(w.left_descents(&rs).into_iter().collect::<Vec<_>>(), vec![0]);
        assert_eq!(w.right_descents(&rs).into_iter().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn bruhat_small_cases() {
        let rs = sys(TypeLetter::A, 2);
        let a = WeylElement::from_labels(&rs, &[1, 2]).unwrap();
        let b = WeylElement::from_labels(&rs, &[2, 1]).unwrap();
        assert!(!bruhat_leq(&rs, &a, &b).unwrap());
        assert!(!bruhat_leq(&rs, &b, &a).unwrap());
        let s1 = WeylElement::from_labels(&rs, &[1]).unwrap();
        assert!(bruhat_leq(&rs, &s1, &a).unwrap());
        assert!(bruhat_leq(&rs, &s1, &b).unwrap());
    }

    #[test]
    fn mixed_systems_rejected() {
        let a2 = sys(TypeLetter::A, 2);
        let b2 = sys(TypeLetter::B, 2);
        let u = WeylElement::from_labels(&a2, &[1]).unwrap();
        let v = WeylElement::from_labels(&b2, &[1]).unwrap();
        assert!(matches!(bruhat_leq(&a2, &u, &v), Err(Error::MixedSystems(..))));
    }

    #[test]
    fn interval_b2() {
        let rs = sys(TypeLetter::B, 2);
        let w = WeylElement::from_labels(&rs, &[2, 1]).unwrap();
        let iv = interval_below(&rs, &w, DEFAULT_CAP).unwrap();
        let words: Vec<_> = iv.iter().map(|u| u.labels()).collect();
        assert_eq!(words, vec![vec![], vec![1], vec![2], vec![2, 1]]);
    }

    #[test]
    fn group_orders() {
        for (l, n, order) in [
            (TypeLetter::A, 3, 24),
            (TypeLetter::B, 3, 48),
            (TypeLetter::D, 4, 192),
            (TypeLetter::G, 2, 12),
            (TypeLetter::F, 4, 1152),
        ] {
            let rs = sys(l, n);
            assert_eq!(enumerate_group(&rs, DEFAULT_CAP).unwrap().len(), order);
        }
    }

    #[test]
    fn caps_are_enforced() {
        let rs = sys(TypeLetter::A, 3);
        assert!(matches!(
            enumerate_group(&rs, 10),
            Err(Error::TooLarge { .. })
        ));
        let w0 = longest_element(&rs);
        assert!(matches!(
            interval_below(&rs, &w0, 5),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn dot_action_examples() {
        let rs = sys(TypeLetter::A, 2);
        let s1 = WeylElement::from_labels(&rs, &[1]).unwrap();
        // <-a1, a1> = -2, so s1 . (-a1) = -a1 + a1 = 0
        let lam = Weight::from_lattice(&[-1, 0]);
        assert_eq!(s1.dot_action(&rs, &lam).unwrap(), Weight::zero(2));
        assert_eq!(s1.dot_lattice(&rs, &[-1, 0]), vec![0, 0]);
        let minus_rho = rs.rho().scale(Rational64::from_integer(-1));
        assert_eq!(s1.dot_action(&rs, &minus_rho).unwrap(), minus_rho);
    }

    #[test]
    fn reduced_word_count_a3_longest() {
        let rs = sys(TypeLetter::A, 3);
        let w0 = longest_element(&rs);
        assert_eq!(reduced_words(&rs, &w0, DEFAULT_CAP).unwrap().len(), 16);
    }

    #[test]
    fn reflections_square_to_identity() {
        let rs = sys(TypeLetter::G, 2);
        for r in rs.reflections() {
            assert!(r.compose(&rs, r).unwrap().is_identity());
            assert_eq!(r.length() % 2, 1);
        }
    }
}
