//! Dense row-major matrices over any [`Field`].

use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::field::{Field, FromScalar};
use crate::{ExactError, FieldScalar, Poly, Result};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type FieldMatrix = Matrix<FieldScalar>;

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(ExactError::ShapeMismatch {
                op: "construct",
                left: (rows, cols),
                right: (entries.len(), 1),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::ShapeMismatch {
                op: "from_rows",
                left: (r, c),
                right: (r, rows.iter().map(Vec::len).max().unwrap_or(0)),
            });
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row_vecs(&self) -> Vec<&[T]> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).collect()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<U, E>(&self, f: impl FnMut(&T) -> std::result::Result<U, E>) -> std::result::Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<std::result::Result<_, _>>()?,
        })
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn column(&self, j: usize) -> Matrix<T> {
        Matrix::from_fn(self.rows, 1, |i, _| self.get(i, j).clone())
    }

    /// Concatenates column blocks left to right.
    pub fn hstack(blocks: &[Matrix<T>]) -> Result<Self> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if let Some(b) = blocks.iter().find(|b| b.rows != rows) {
            return Err(ExactError::ShapeMismatch {
                op: "hstack",
                left: (rows, 0),
                right: b.shape(),
            });
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for b in blocks {
                entries.extend(b.entries[i * b.cols..(i + 1) * b.cols].iter().cloned());
            }
        }
        Ok(Matrix { rows, cols, entries })
    }
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn column_vector(values: Vec<T>) -> Self {
        let n = values.len();
        Matrix { rows: n, cols: 1, entries: values }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Field::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape("add", other)?;
        Ok(self.zip_with(other, |a, b| a.clone() + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape("sub", other)?;
        Ok(self.zip_with(other, |a, b| a.clone() - b))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(ExactError::ShapeMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc + &(a.clone() * other.get(k, j));
            }
            acc
        }))
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s)
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn trace(&self) -> Result<T> {
        self.require_square()?;
        Ok((0..self.rows).fold(T::zero(), |acc, i| acc + self.get(i, i)))
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<T> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m = self.clone();
        let mut sign = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = !sign;
                    }
                    None => return Ok(T::zero()),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (pivot.clone() * m.get(i, j) - m.get(i, k).clone() * m.get(k, j)).try_div(&prev)?;
                    m.set(i, j, v);
                }
                m.set(i, k, T::zero());
            }
            prev = pivot;
        }
        let det = m.get(n - 1, n - 1).clone();
        Ok(if sign { -det } else { det })
    }

    /// Inverse by fraction-free Gauss–Jordan on `[M | I]`.
    ///
    /// After the sweep the left block is diagonal (every diagonal entry equals
    /// the last pivot), so one division per row finishes the job.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let mut aug = Matrix::hstack(&[self.clone(), Matrix::identity(n)])?;
        let w = 2 * n;
        let mut prev = T::one();
        for k in 0..n {
            if aug.get(k, k).is_zero() {
                let r = (k + 1..n).find(|&r| !aug.get(r, k).is_zero()).ok_or(ExactError::Singular)?;
                aug.swap_rows(k, r);
            }
            let pivot = aug.get(k, k).clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let factor = aug.get(i, k).clone();
                for j in 0..w {
                    if j == k {
                        continue;
                    }
                    let v = (pivot.clone() * aug.get(i, j) - factor.clone() * aug.get(k, j)).try_div(&prev)?;
                    aug.set(i, j, v);
                }
                aug.set(i, k, T::zero());
            }
            prev = pivot;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            let row_scale = aug.get(i, i).inv()?;
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone() * &row_scale);
            }
        }
        Ok(inv)
    }

    /// Characteristic polynomial `det(λI − M)` by Faddeev–LeVerrier.
    ///
    /// Only divides by the integers `1..=n`, so it works over any field of
    /// characteristic zero without pivoting.
    pub fn charpoly(&self) -> Result<Poly<T>> {
        self.require_square()?;
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let ident = Matrix::identity(n);
        let mut m_k = Matrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            m_k = self.try_mul(&m_k)?.try_add(&ident.scale(&coeffs[n - k + 1]))?;
            let am = self.try_mul(&m_k)?;
            let c = -(am.trace()?.try_div(&T::from_i64(k as i64))?);
            coeffs[n - k] = c;
        }
        Ok(Poly::new(coeffs))
    }

    pub fn embed<U: FromScalar>(&self) -> Matrix<U>
    where
        T: Into<FieldScalar>,
    {
        self.map(|x| U::from_scalar(&x.clone().into()))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Largest absolute entry after conversion by `f`.
    pub fn max_abs_by(&self, f: impl Fn(&T) -> f64) -> f64 {
        self.entries.iter().map(|x| f(x).abs()).fold(0.0, f64::max)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn check_same_shape(&self, op: &'static str, other: &Self) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(ExactError::ShapeMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(ExactError::NotSquare(self.rows, self.cols));
        }
        Ok(())
    }
}

impl Matrix<FieldScalar> {
    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(FieldScalar::to_f64)
    }

    /// Embeds into any type containing Q(√2,√3).
    pub fn lift<U: FromScalar>(&self) -> Matrix<U> {
        self.map(U::from_scalar)
    }
}

impl Matrix<f64> {
    pub fn max_abs(&self) -> f64 {
        self.max_abs_by(|x| *x)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

impl<T: Field> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, o: &Matrix<T>) -> Matrix<T> {
        self.try_add(o).expect("matrix add: shape mismatch")
    }
}

impl<T: Field> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, o: &Matrix<T>) -> Matrix<T> {
        self.try_sub(o).expect("matrix sub: shape mismatch")
    }
}

impl<T: Field> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, o: &Matrix<T>) -> Matrix<T> {
        self.try_mul(o).expect("matrix mul: shape mismatch")
    }
}

impl<T: Field> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Serialize> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[T]> = if self.cols == 0 {
            vec![&[]; self.rows]
        } else {
            self.entries.chunks(self.cols).collect()
        };
        rows.serialize(s)
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<T>>::deserialize(d)?;
        Matrix::from_rows(rows).map_err(D::Error::custom)
    }
}
