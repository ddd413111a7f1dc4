//! Brute-force oracles shared by the integration tests. They only use the basic
//! primitives (building elements from words, root data) and none of the algorithms
//! under test.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use schubaut::weyl::{enumerate_group, DEFAULT_CAP};
use schubaut::{RootSystem, TypeLetter, WeylElement};

pub fn sys(letter: TypeLetter, rank: usize) -> RootSystem {
    RootSystem::build(letter, rank).unwrap()
}

pub fn group(rs: &RootSystem) -> Vec<WeylElement> {
    enumerate_group(rs, DEFAULT_CAP).unwrap()
}

/// Every product of a subword of the canonical reduced word of `w`.
pub fn subword_products(rs: &RootSystem, w: &WeylElement) -> HashSet<WeylElement> {
    let word = w.word();
    let n = word.len();
    assert!(n < 24, "subword oracle is exponential");
    let mut out = HashSet::new();
    for mask in 0u32..(1 << n) {
        let sub: Vec<usize> = (0..n).filter(|k| mask & (1 << k) != 0).map(|k| word[k]).collect();
        out.insert(WeylElement::from_word(rs, &sub).unwrap());
    }
    out
}

/// Number of positive roots `beta` whose reflection is a subword product.
pub fn tangent_count_brute(rs: &RootSystem, w: &WeylElement) -> usize {
    let below = subword_products(rs, w);
    (0..rs.num_positive())
        .filter(|&k| {
            // s_beta = u s_i u^{-1} for beta = u(a_i), found by walking down to a simple root
            let mut beta = rs.root(k).coeffs().to_vec();
            let mut path = Vec::new();
            while rs.simple_position(&beta).is_none() {
                let i = (0..rs.rank())
                    .find(|&i| rs.simple_pairing(&beta, i) > 0)
                    .unwrap();
                let p = rs.simple_pairing(&beta, i);
                beta[i] -= p;
                path.push(i);
            }
            let i = rs.simple_position(&beta).unwrap();
            let mut full = path.clone();
            full.push(i);
            full.extend(path.iter().rev());
            let s_beta = WeylElement::from_word(rs, &full).unwrap();
            below.contains(&s_beta)
        })
        .count()
}

fn braid_order(rs: &RootSystem, i: usize, j: usize) -> usize {
    match rs.cartan()[i][j] * rs.cartan()[j][i] {
        0 => 2,
        1 => 3,
        2 => 4,
        3 => 6,
        p => panic!("unexpected Cartan product {p}"),
    }
}

/// All reduced words of `w`, by closing its canonical word under braid moves.
pub fn braid_closure(rs: &RootSystem, w: &WeylElement) -> BTreeSet<Vec<usize>> {
    let start = w.word();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(word) = queue.pop_front() {
        for i in 0..rs.rank() {
            for j in 0..rs.rank() {
                if i == j {
                    continue;
                }
                let m = braid_order(rs, i, j);
                let pattern: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
                let replacement: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
                if word.len() < m {
                    continue;
                }
                for p in 0..=word.len() - m {
                    if word[p..p + m] == pattern[..] {
                        let mut next = word.clone();
                        next[p..p + m].copy_from_slice(&replacement);
                        if seen.insert(next.clone()) {
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
    }
    seen
}

pub fn is_simple_negative(rs: &RootSystem, mu: &[i32]) -> bool {
    (0..rs.rank()).any(|i| {
        let mut e = vec![0; rs.rank()];
        e[i] = -1;
        e == mu
    })
}
