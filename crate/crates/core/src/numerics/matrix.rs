use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Approx, Rational};
use crate::error::{Error, Result};

/// Minimal field interface shared by the two scalar backends.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn fadd(&self, o: &Self) -> Self;
    fn fsub(&self, o: &Self) -> Self;
    fn fmul(&self, o: &Self) -> Self;
    /// Division; callers guarantee a nonzero divisor.
    fn fdiv(&self, o: &Self) -> Self;
    fn fneg(&self) -> Self;
    fn to_f64(&self) -> f64;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn fadd(&self, o: &Self) -> Self {
        self + o
    }
    fn fsub(&self, o: &Self) -> Self {
        self - o
    }
    fn fmul(&self, o: &Self) -> Self {
        self * o
    }
    fn fdiv(&self, o: &Self) -> Self {
        self / o
    }
    fn fneg(&self) -> Self {
        -self
    }
    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }
}

impl Field for Approx {
    fn zero() -> Self {
        Approx(0.0)
    }
    fn one() -> Self {
        Approx(1.0)
    }
    fn from_rational(r: &Rational) -> Self {
        Approx(r.to_f64())
    }
    fn is_zero(&self) -> bool {
        self.0 == 0.0
    }
    fn fadd(&self, o: &Self) -> Self {
        *self + *o
    }
    fn fsub(&self, o: &Self) -> Self {
        *self - *o
    }
    fn fmul(&self, o: &Self) -> Self {
        *self * *o
    }
    fn fdiv(&self, o: &Self) -> Self {
        *self / *o
    }
    fn fneg(&self) -> Self {
        -*self
    }
    fn to_f64(&self) -> f64 {
        self.0
    }
}

/// Square matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Field> DenseMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix { dim, data: vec![T::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, T::one())
    }

    pub fn scalar(dim: usize, c: T) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = c.clone();
        }
        m
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        DenseMatrix { dim, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(dim, row.len()));
            }
            data.extend(row);
        }
        Ok(DenseMatrix { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.dim + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            let out_row = &mut out.data[i * n..(i + 1) * n];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (o, b) in out_row.iter_mut().zip(other.row(k)) {
                    if !b.is_zero() {
                        *o = o.fadd(&a.fmul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(x, y)| x.fadd(y)).collect();
        Ok(DenseMatrix { dim: self.dim, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(x, y)| x.fsub(y)).collect();
        Ok(DenseMatrix { dim: self.dim, data })
    }

    pub fn scale(&self, c: &T) -> Self {
        let data = self.data.iter().map(|x| x.fmul(c)).collect();
        DenseMatrix { dim: self.dim, data }
    }

    pub fn add_scalar(&self, c: &T) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            let v = m.get(i, i).fadd(c);
            m.set(i, i, v);
        }
        m
    }

    pub fn trace(&self) -> T {
        (0..self.dim).fold(T::zero(), |acc, i| acc.fadd(self.get(i, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Largest entrywise absolute difference.
    pub fn max_deviation(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| (x.to_f64() - y.to_f64()).abs())
            .fold(0.0, f64::max))
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix { dim: self.dim, data: self.data.iter().map(f).collect() }
    }

    /// Evaluates Π_r (A − r·I).
    pub fn poly_from_roots(&self, roots: &[T]) -> Result<Self> {
        let mut acc = Self::identity(self.dim);
        for r in roots {
            acc = acc.mul(&self.add_scalar(&r.fneg()))?;
        }
        Ok(acc)
    }
}

impl DenseMatrix<Rational> {
    pub fn to_approx(&self) -> DenseMatrix<Approx> {
        self.map(|r| Approx::from(r))
    }
}

impl<T: fmt::Debug> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.dim {
            writeln!(f, "  {:?}", &self.data[i * self.dim..(i + 1) * self.dim])?;
        }
        write!(f, "]")
    }
}

/// A single scalar from either backend.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Exact(Rational),
    Approx(Approx),
}

impl Scalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64(),
            Scalar::Approx(x) => x.0,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{}", r.to_fraction_string()),
            Scalar::Approx(x) => write!(f, "{x}"),
        }
    }
}

/// Matrix with a homogeneous scalar kind; mixing kinds promotes to `Approx`.
#[derive(Clone, Debug)]
pub enum Matrix {
    Exact(DenseMatrix<Rational>),
    Approx(DenseMatrix<Approx>),
}

impl Matrix {
    pub fn identity(dim: usize) -> Self {
        Matrix::Exact(DenseMatrix::identity(dim))
    }

    pub fn zeros(dim: usize) -> Self {
        Matrix::Exact(DenseMatrix::zeros(dim))
    }

    pub fn dim(&self) -> usize {
        match self {
            Matrix::Exact(m) => m.dim(),
            Matrix::Approx(m) => m.dim(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Matrix::Exact(_))
    }

    pub fn to_approx(&self) -> DenseMatrix<Approx> {
        match self {
            Matrix::Exact(m) => m.to_approx(),
            Matrix::Approx(m) => m.clone(),
        }
    }

    pub fn as_exact(&self) -> Option<&DenseMatrix<Rational>> {
        match self {
            Matrix::Exact(m) => Some(m),
            Matrix::Approx(_) => None,
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        match self {
            Matrix::Exact(m) => Scalar::Exact(m.get(i, j).clone()),
            Matrix::Approx(m) => Scalar::Approx(*m.get(i, j)),
        }
    }

    fn binary(
        &self,
        other: &Matrix,
        exact: impl Fn(&DenseMatrix<Rational>, &DenseMatrix<Rational>) -> Result<DenseMatrix<Rational>>,
        approx: impl Fn(&DenseMatrix<Approx>, &DenseMatrix<Approx>) -> Result<DenseMatrix<Approx>>,
    ) -> Result<Matrix> {
        match (self, other) {
            (Matrix::Exact(x), Matrix::Exact(y)) => Ok(Matrix::Exact(exact(x, y)?)),
            _ => Ok(Matrix::Approx(approx(&self.to_approx(), &other.to_approx())?)),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.binary(other, |x, y| x.mul(y), |x, y| x.mul(y))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.binary(other, |x, y| x.add(y), |x, y| x.add(y))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.binary(other, |x, y| x.sub(y), |x, y| x.sub(y))
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        match self {
            Matrix::Exact(m) => Matrix::Exact(m.scale(c)),
            Matrix::Approx(m) => Matrix::Approx(m.scale(&Approx::from(c))),
        }
    }

    /// Exact comparison when both sides are rational, tolerance otherwise.
    pub fn mat_eq(&self, other: &Matrix) -> Result<bool> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(match (self, other) {
            (Matrix::Exact(x), Matrix::Exact(y)) => x == y,
            _ => self.to_approx() == other.to_approx(),
        })
    }

    pub fn max_deviation(&self, other: &Matrix) -> Result<f64> {
        match (self, other) {
            (Matrix::Exact(x), Matrix::Exact(y)) => x.max_deviation(y),
            _ => self.to_approx().max_deviation(&other.to_approx()),
        }
    }

    /// Row-major entries for JSON dumps.
    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.entry(i, j)).collect())
            .collect()
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{char_poly, rat, sqrt_checked};
    use proptest::prelude::*;

    fn small_matrix(vals: &[i64]) -> DenseMatrix<Rational> {
        let n = (vals.len() as f64).sqrt() as usize;
        DenseMatrix::from_fn(n, |i, j| Rational::from_int(vals[i * n + j]))
    }

    #[test]
    fn identity_and_reflexivity() {
        let a = Matrix::Exact(small_matrix(&[1, 2, 3, 4]));
        let prod = Matrix::identity(2).mul(&a).unwrap();
        assert!(prod.mat_eq(&a).unwrap());
        assert!(a.mat_eq(&a).unwrap());
        assert_eq!(
            Matrix::identity(2).mul(&Matrix::identity(3)).unwrap_err(),
            Error::DimensionMismatch(2, 3)
        );
    }

    #[test]
    fn mixed_kinds_promote() {
        let s = sqrt_checked(&rat(3, 4)).unwrap();
        let x = Matrix::Approx(
            DenseMatrix::from_rows(vec![
                vec![Approx(-0.5), s],
                vec![s, Approx(0.5)],
            ])
            .unwrap(),
        );
        let sq = x.mul(&x).unwrap();
        assert!(!sq.is_exact());
        assert!(sq.mat_eq(&Matrix::identity(2)).unwrap());
    }

    #[test]
    fn two_by_two_char_poly() {
        // [[-1/2, u],[v, 1/2]] with u*v = 3/4
        let m = DenseMatrix::from_rows(vec![
            vec![rat(-1, 2), rat(3, 2)],
            vec![rat(1, 2), rat(1, 2)],
        ])
        .unwrap();
        let cp = char_poly(&m);
        assert_eq!(cp, vec![rat(-1, 1), Rational::zero(), Rational::one()]);
    }

    proptest! {
        #[test]
        fn mul_associates(v in proptest::collection::vec(-5i64..5, 27)) {
            let a = small_matrix(&v[0..9]);
            let b = small_matrix(&v[9..18]);
            let c = small_matrix(&v[18..27]);
            let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
