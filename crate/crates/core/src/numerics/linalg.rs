use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{DenseMatrix, Field, Rational};

/// Exact rank by fraction-free (Bareiss) elimination.
pub fn rank(m: &DenseMatrix<Rational>) -> usize {
    let n = m.dim();
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();

    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in rank + 1..n {
            if rows[r][col].is_zero() && rows[r].iter().all(Zero::is_zero) {
                continue;
            }
            for c in col + 1..n {
                let v = &rows[rank][col] * &rows[r][c] - &rows[r][col] * &rows[rank][c];
                rows[r][c] = v / &prev;
            }
            rows[r][col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

/// Characteristic polynomial det(λI − A) by Faddeev–LeVerrier, coefficients
/// from the constant term upward.
pub fn char_poly<T: Field>(a: &DenseMatrix<T>) -> Vec<T> {
    let n = a.dim();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut m = DenseMatrix::<T>::zeros(n);
    for k in 1..=n {
        m = a.mul(&m).expect("square").add_scalar(&coeffs[n - k + 1]);
        let am = a.mul(&m).expect("square");
        coeffs[n - k] = am.trace().fneg().fdiv(&T::from_i64(k as i64));
    }
    coeffs
}

/// Incrementally maintained reduced row-echelon basis of a subspace.
#[derive(Clone, Debug, Default)]
pub struct Rref {
    len: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<Rational>>,
}

impl Rref {
    pub fn new(len: usize) -> Self {
        Rref { len, pivots: Vec::new(), rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
    }

    /// Adds `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip().expect("nonzero pivot");
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Coordinates of `v` in the row basis, or None if `v` is outside the span.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let c: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        self.reduce(&mut rest);
        rest.iter().all(Rational::is_zero).then_some(c)
    }
}
