//! Virtual characters over the root lattice and Demazure operators.

use std::collections::btree_map::{self, BTreeMap};
use std::collections::{BTreeSet, VecDeque};
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};
use crate::weyl::WeylElement;

/// A finite integer combination of formal exponentials `e^mu`, `mu` in the root
/// lattice. Zero multiplicities are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SignedCharacter {
    terms: BTreeMap<Vec<i32>, i64>,
}

impl SignedCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(mu: &[i32]) -> Self {
        let mut c = Self::zero();
        c.add_term(mu, 1);
        c
    }

    pub fn from_weights<'a, I>(weights: I) -> Self
    where
        I: IntoIterator<Item = &'a [i32]>,
    {
        let mut c = Self::zero();
        for mu in weights {
            c.add_term(mu, 1);
        }
        c
    }

    pub fn add_term(&mut self, mu: &[i32], mult: i64) {
        if mult == 0 {
            return;
        }
        match self.terms.get_mut(mu) {
            Some(m) => {
                *m += mult;
                if *m == 0 {
                    self.terms.remove(mu);
                }
            }
            None => {
                self.terms.insert(mu.to_vec(), mult);
            }
        }
    }

    pub fn mult(&self, mu: &[i32]) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all multiplicities (the virtual dimension).
    pub fn dim(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Vec<i32>, i64> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Vec<i32>> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_negative(&self) -> bool {
        self.terms.values().any(|&m| m < 0)
    }

    /// Whether `self - other` has no negative multiplicities.
    pub fn contains(&self, other: &SignedCharacter) -> bool {
        other.terms.iter().all(|(mu, &m)| self.mult(mu) >= m)
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        SignedCharacter {
            terms: self.terms.iter().map(|(mu, m)| (mu.clone(), m * k)).collect(),
        }
    }

    /// Terms as a sorted list of `(coordinates, multiplicity)`.
    pub fn to_pairs(&self) -> Vec<(Vec<i32>, i64)> {
        self.terms.iter().map(|(k, v)| (k.clone(), *v)).collect()
    }
}

impl FromIterator<(Vec<i32>, i64)> for SignedCharacter {
    fn from_iter<I: IntoIterator<Item = (Vec<i32>, i64)>>(iter: I) -> Self {
        let mut c = Self::zero();
        for (mu, m) in iter {
            c.add_term(&mu, m);
        }
        c
    }
}

impl AddAssign<&SignedCharacter> for SignedCharacter {
    fn add_assign(&mut self, rhs: &SignedCharacter) {
        for (mu, &m) in &rhs.terms {
            self.add_term(mu, m);
        }
    }
}

impl SubAssign<&SignedCharacter> for SignedCharacter {
    fn sub_assign(&mut self, rhs: &SignedCharacter) {
        for (mu, &m) in &rhs.terms {
            self.add_term(mu, -m);
        }
    }
}

impl Add for &SignedCharacter {
    type Output = SignedCharacter;
    fn add(self, rhs: &SignedCharacter) -> SignedCharacter {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SignedCharacter {
    type Output = SignedCharacter;
    fn sub(self, rhs: &SignedCharacter) -> SignedCharacter {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for SignedCharacter {
    type Output = SignedCharacter;
    fn add(mut self, rhs: SignedCharacter) -> SignedCharacter {
        self += &rhs;
        self
    }
}

impl Sub for SignedCharacter {
    type Output = SignedCharacter;
    fn sub(mut self, rhs: SignedCharacter) -> SignedCharacter {
        self -= &rhs;
        self
    }
}

impl Neg for SignedCharacter {
    type Output = SignedCharacter;
    fn neg(self) -> SignedCharacter {
        self.scale(-1)
    }
}

/// `D_i` for the simple root `a_{i+1}`, applied termwise:
/// `n = <mu, a^vee> >= 0` gives `e^mu + ... + e^{mu - n a}`, `n = -1` gives 0 and
/// `n <= -2` gives `-(e^{mu + a} + ... + e^{mu + (-n-1) a})`.
pub fn apply_demazure(rs: &RootSystem, i: usize, c: &SignedCharacter) -> SignedCharacter {
    let mut out = SignedCharacter::zero();
    let mut mu2 = Vec::new();
    for (mu, &m) in c.iter() {
        let n = rs.simple_pairing(mu, i);
        if n >= 0 {
            for k in 0..=n {
                mu2.clear();
                mu2.extend_from_slice(mu);
                mu2[i] -= k;
                out.add_term(&mu2, m);
            }
        } else {
            for k in 1..=(-n - 1) {
                mu2.clear();
                mu2.extend_from_slice(mu);
                mu2[i] += k;
                out.add_term(&mu2, -m);
            }
        }
    }
    out
}

/// Demazure operator for a simple root given by its coordinates.
pub fn demazure_op(rs: &RootSystem, alpha: &Root, c: &SignedCharacter) -> Result<SignedCharacter> {
    let i = rs
        .simple_position(alpha.coeffs())
        .ok_or_else(|| Error::NotSimple(alpha.coeffs().to_vec()))?;
    Ok(apply_demazure(rs, i, c))
}

/// `D_{i_1} ... D_{i_r} c` for a word `i_1 ... i_r` (0-based); the last letter acts first.
pub fn demazure_along(rs: &RootSystem, word: &[usize], c: &SignedCharacter) -> SignedCharacter {
    let mut out = c.clone();
    for &i in word.iter().rev() {
        out = apply_demazure(rs, i, &out);
    }
    out
}

/// `chi(w, lambda) = sum_j (-1)^j ch H^j(X(w), L(lambda))`.
pub fn demazure_char(rs: &RootSystem, w: &WeylElement, lambda: &[i32]) -> Result<SignedCharacter> {
    rs.check_dim(lambda.len())?;
    Ok(demazure_along(rs, &w.word(), &SignedCharacter::monomial(lambda)))
}

/// Euler characteristic of the bundle attached to a module with the given weights.
pub fn euler_char_module<'a, I>(rs: &RootSystem, w: &WeylElement, weights: I) -> Result<SignedCharacter>
where
    I: IntoIterator<Item = &'a [i32]>,
{
    let c = SignedCharacter::from_weights(weights);
    if let Some(mu) = c.support().next() {
        rs.check_dim(mu.len())?;
    }
    Ok(demazure_along(rs, &w.word(), &c))
}

/// Character of the adjoint representation.
pub fn adjoint_character(rs: &RootSystem) -> SignedCharacter {
    let mut c = SignedCharacter::from_weights(rs.roots().iter().map(|r| r.coeffs()));
    c.add_term(&vec![0; rs.rank()], rs.rank() as i64);
    c
}

/// Character of the irreducible module of highest weight `lambda` by Freudenthal's
/// recursion. Independent of the Demazure machinery.
pub fn weyl_char_oracle(rs: &RootSystem, lambda: &[i32]) -> Result<SignedCharacter> {
    rs.check_dim(lambda.len())?;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let rank = rs.rank();
    let two_rho = rs.two_rho();
    let ll = rs.form(lambda, lambda);
    let l2r = rs.form(lambda, two_rho);

    // Dominant weights below lambda, processed by increasing depth.
    let mut dominant = BTreeSet::new();
    let mut queue = VecDeque::new();
    dominant.insert(lambda.to_vec());
    queue.push_back(lambda.to_vec());
    while let Some(mu) = queue.pop_front() {
        for beta in rs.positive_roots() {
            let nu: Vec<i32> = mu.iter().zip(beta.coeffs()).map(|(a, b)| a - b).collect();
            let below = lambda.iter().zip(&nu).all(|(l, n)| l - n >= 0);
            if below && rs.is_dominant(&nu) && dominant.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }

    let mut mult: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
    let mut order: Vec<Vec<i32>> = dominant.into_iter().collect();
    order.sort_by_key(|mu| lambda.iter().zip(mu).map(|(l, m)| l - m).sum::<i32>());

    let dominant_mult = |mult: &BTreeMap<Vec<i32>, i64>, nu: &[i32]| -> i64 {
        let d = dominant_conjugate(rs, nu);
        mult.get(&d).copied().unwrap_or(0)
    };

    for mu in order {
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        // (|l+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{a>0} sum_{k>=1} (mu + k a, a) m(mu + k a)
        let denom = ll - rs.form(&mu, &mu) + l2r - rs.form(&mu, two_rho);
        let mut num = 0i64;
        for beta in rs.positive_roots() {
            let mut k = 1;
            loop {
                let nu: Vec<i32> = mu
                    .iter()
                    .zip(beta.coeffs())
                    .map(|(a, b)| a + k * b)
                    .collect();
                if lambda.iter().zip(&nu).any(|(l, n)| l - n < 0) {
                    break;
                }
                let m = dominant_mult(&mult, &nu);
                if m != 0 {
                    num += 2 * rs.form(&nu, beta.coeffs()) * m;
                }
                k += 1;
            }
        }
        if denom <= 0 || num % denom != 0 {
            return Err(Error::Invariant(format!(
                "Freudenthal recursion at {mu:?}: {num}/{denom}"
            )));
        }
        let m = num / denom;
        if m > 0 {
            mult.insert(mu, m);
        }
    }

    // Spread dominant multiplicities over Weyl orbits.
    let mut out = SignedCharacter::zero();
    for (mu, m) in &mult {
        for nu in orbit(rs, mu) {
            out.add_term(&nu, *m);
        }
    }
    debug_assert_eq!(rank, lambda.len());
    Ok(out)
}

/// The dominant element of the Weyl orbit of `mu`.
pub fn dominant_conjugate(rs: &RootSystem, mu: &[i32]) -> Vec<i32> {
    let mut v = mu.to_vec();
    loop {
        let neg = (0..rs.rank()).find(|&i| rs.simple_pairing(&v, i) < 0);
        match neg {
            Some(i) => {
                let p = rs.simple_pairing(&v, i);
                v[i] -= p;
            }
            None => return v,
        }
    }
}

fn orbit(rs: &RootSystem, mu: &[i32]) -> BTreeSet<Vec<i32>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(mu.to_vec());
    queue.push_back(mu.to_vec());
    while let Some(v) = queue.pop_front() {
        for i in 0..rs.rank() {
            let p = rs.simple_pairing(&v, i);
            if p == 0 {
                continue;
            }
            let mut u = v.clone();
            u[i] -= p;
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    seen
}
