//! Small exact linear algebra: rational row reduction and integer elementary divisors.

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

pub type Q = Rational64;

/// Reduced row echelon form with zero rows dropped.
pub fn rref(rows: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(p) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for x in m[pivot_row].iter_mut() {
            *x *= inv;
        }
        for r in 0..m.len() {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..ncols {
                    let v = m[pivot_row][c];
                    m[r][c] -= f * v;
                }
            }
        }
        pivot_row += 1;
    }
    m.truncate(pivot_row);
    m
}

fn pivot_col(row: &[Q]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

/// Reduces `v` modulo the row span of an RREF basis. Zero iff `v` is in the span.
pub fn reduce(basis: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    let mut v = v.to_vec();
    for row in basis {
        let p = pivot_col(row).expect("rref rows are nonzero");
        if !v[p].is_zero() {
            let f = v[p];
            for (x, r) in v.iter_mut().zip(row) {
                *x -= f * r;
            }
        }
    }
    v
}

pub fn in_span(basis: &[Vec<Q>], v: &[Q]) -> bool {
    reduce(basis, v).iter().all(Zero::is_zero)
}

pub fn dot(u: &[Q], v: &[Q]) -> Q {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Basis (RREF) of `{x in span(basis) : f(x) = 0}`.
pub fn kernel_in_span(basis: &[Vec<Q>], f: &[Q]) -> Vec<Vec<Q>> {
    let values: Vec<Q> = basis.iter().map(|b| dot(f, b)).collect();
    let Some(k) = values.iter().position(|v| !v.is_zero()) else {
        return basis.to_vec();
    };
    let mut rows = Vec::with_capacity(basis.len().saturating_sub(1));
    for (j, b) in basis.iter().enumerate() {
        if j == k {
            continue;
        }
        let c = values[j] / values[k];
        rows.push(b.iter().zip(&basis[k]).map(|(x, y)| x - c * y).collect());
    }
    rref(&rows)
}

/// The canonical `x in span(basis)` with `f(x) = 1`: the particular solution reduced
/// modulo `span(basis) ∩ ker f`. `None` if `f` vanishes on the span.
pub fn canonical_unit_solution(basis: &[Vec<Q>], f: &[Q]) -> Option<Vec<Q>> {
    let values: Vec<Q> = basis.iter().map(|b| dot(f, b)).collect();
    let k = values.iter().position(|v| !v.is_zero())?;
    let x: Vec<Q> = basis[k].iter().map(|c| c / values[k]).collect();
    Some(reduce(&kernel_in_span(basis, f), &x))
}

/// Nonzero elementary divisors of an integer matrix (Smith normal form diagonal).
pub fn elementary_divisors(mat: &[Vec<i64>]) -> Vec<i64> {
    let mut m: Vec<Vec<i64>> = mat.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block as pivot
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if m[r][c] != 0 && best.is_none_or(|(br, bc)| m[r][c].abs() < m[br][bc].abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        for r in t + 1..rows {
            let q = Integer::div_floor(&m[r][t], &m[t][t]);
            if q != 0 {
                for c in t..cols {
                    m[r][c] -= q * m[t][c];
                }
            }
            if m[r][t] != 0 {
                clean = false;
            }
        }
        for c in t + 1..cols {
            let q = Integer::div_floor(&m[t][c], &m[t][t]);
            if q != 0 {
                for r in t..rows {
                    m[r][c] -= q * m[r][t];
                }
            }
            if m[t][c] != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // pivot must divide the rest of the block
        let bad = (t + 1..rows)
            .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
            .find(|&(r, c)| m[r][c] % m[t][t] != 0);
        if let Some((r, _)) = bad {
            for c in t..cols {
                let v = m[r][c];
                m[t][c] += v;
            }
            continue;
        }
        out.push(m[t][t].abs());
        t += 1;
    }
    out
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

pub fn to_q(v: &[i32]) -> Vec<Q> {
    v.iter().map(|&x| Q::from_integer(x as i64)).collect()
}

/// Renders a rational vector compactly, e.g. `[1, -1/2]`.
pub fn format_q(v: &[Q]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|x| {
            if x.is_integer() {
                x.to_integer().to_string()
            } else {
                format!("{}{}/{}", if x.is_negative() { "-" } else { "" }, x.numer().abs(), x.denom())
            }
        })
        .collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n)
    }

    #[test]
    fn rref_drops_dependent_rows() {
        let rows = vec![vec![q(1), q(2)], vec![q(2), q(4)], vec![q(0), q(1)]];
        let r = rref(&rows);
        assert_eq!(r, vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
    }

    #[test]
    fn kernel_and_unit_solution() {
        let basis = rref(&[vec![q(1), q(0)], vec![q(0), q(1)]]);
        let f = vec![q(2), q(-1)];
        let k = kernel_in_span(&basis, &f);
        assert_eq!(k.len(), 1);
        assert!(dot(&f, &k[0]).is_zero());
        let h = canonical_unit_solution(&basis, &f).unwrap();
        assert_eq!(dot(&f, &h), q(1));
        assert!(canonical_unit_solution(&k, &f).is_none());
    }

    #[test]
    fn smith_divisors() {
        assert_eq!(elementary_divisors(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(elementary_divisors(&[vec![2, -1], vec![-1, 2]]), vec![1, 3]);
        assert_eq!(elementary_divisors(&[vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(elementary_divisors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }
}
