//! Dense matrices over exact rationals.
//!
//! Everything in the engine bottoms out here: block products, Kronecker
//! products, row reduction and the kernel/solve routines that back the
//! split-mono and split-epi searches. Matrices with zero rows or columns are
//! ordinary values and represent the unique maps to and from a zero space.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact scalar. Always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, LinalgError> {
    let t = s.trim();
    let bad = || LinalgError::Parse(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("ragged rows: expected {expected} columns, row {row} has {found}")]
    Ragged {
        expected: usize,
        row: usize,
        found: usize,
    },
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}", self.rows, self.cols)?;
        f.debug_list().entries(self.to_string_rows()).finish()
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(LinalgError::Ragged {
                    expected: c,
                    row: i,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data,
        })
    }

    /// Integer convenience constructor; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer matrix")
    }

    /// Builds a `rows x cols` matrix; needed when `rows` is 0 and the column
    /// count cannot be read off the data.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(format_rational).collect())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::Shape {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Kronecker product, left factor major:
    /// `out[i*b.rows + k][j*b.cols + l] = a[i][j] * b[k][l]`.
    pub fn kron(&self, b: &Matrix) -> Matrix {
        let (r, c) = (self.rows * b.rows, self.cols * b.cols);
        let mut out = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        let v = b.get(k, l);
                        if !v.is_zero() {
                            out.data[(i * b.rows + k) * c + j * b.cols + l] = a * v;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::Shape {
                op: "hstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let cols = self.cols + other.cols;
        Ok(Matrix::from_fn(self.rows, cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    /// Reduced row echelon form with left-to-right pivots.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, row * m.cols + j);
                }
            }
            let inv = m.get(row, col).recip();
            for j in col..m.cols {
                let v = &m.data[row * m.cols + j] * &inv;
                m.data[row * m.cols + j] = v;
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let sub = &factor * m.get(row, j);
                    if !sub.is_zero() {
                        m.data[r * m.cols + j] -= sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Columns form a basis of `{x : self * x = 0}`, one per free variable in
    /// increasing column order.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.cols, free.len());
        for (t, &fc) in free.iter().enumerate() {
            k.set(fc, t, Rational::one());
            for (r, &pc) in pivots.iter().enumerate() {
                k.set(pc, t, -reduced.get(r, fc).clone());
            }
        }
        k
    }

    /// Some `X` with `self * X = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve_right(&self, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
        if self.rows != b.rows {
            return Err(LinalgError::Shape {
                op: "solve_right",
                left: self.shape(),
                right: b.shape(),
            });
        }
        let n = self.cols;
        let aug = self.hstack(b)?;
        let Rref { reduced, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(n, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, reduced.get(r, n + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Some `X` with `X * self = b`.
    pub fn solve_left(&self, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
        Ok(self.transpose().solve_right(&b.transpose())?.map(|x| x.transpose()))
    }

    pub fn max_abs_height(&self) -> BigInt {
        self.data
            .iter()
            .map(|q| q.numer().abs().max(q.denom().clone()))
            .max()
            .unwrap_or_else(BigInt::one)
    }
}

#[derive(Debug, Clone)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_string_rows().serialize(s)
    }
}

/// Deserializes from nested arrays of `"p/q"` strings (bare integers are
/// accepted too). Column count of an empty matrix is 0.
impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Cell {
            Str(String),
            Int(i64),
        }
        let rows: Vec<Vec<Cell>> = Vec::deserialize(d)?;
        let rows = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| match c {
                        Cell::Str(s) => parse_rational(&s),
                        Cell::Int(i) => Ok(rat(i)),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    #[test]
    fn matmul_examples() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let p = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.matmul(&p).unwrap(), m(&[&[2, 1], &[4, 3]]));

        let x = m(&[&[1, -2, 5], &[0, 3, 7], &[4, 4, -1]]);
        assert_eq!(Matrix::identity(3).matmul(&x).unwrap(), x);

        let h = Matrix::from_rows(vec![vec![ratio(1, 2)]]).unwrap();
        let t = Matrix::from_rows(vec![vec![ratio(2, 3)]]).unwrap();
        assert_eq!(h.matmul(&t).unwrap().get(0, 0), &ratio(1, 3));
    }

    #[test]
    fn matmul_empty_and_mismatch() {
        let a = Matrix::zeros(0, 3);
        let b = Matrix::zeros(3, 2);
        assert_eq!(a.matmul(&b).unwrap().shape(), (0, 2));
        let c = Matrix::zeros(3, 0);
        let d = Matrix::zeros(0, 4);
        assert_eq!(c.matmul(&d).unwrap(), Matrix::zeros(3, 4));
        assert!(matches!(
            b.matmul(&b),
            Err(LinalgError::Shape { op: "matmul", .. })
        ));
    }

    #[test]
    fn kernel_examples() {
        // RREF of [1 1] is itself; free column 1 gives (-1, 1).
        assert_eq!(m(&[&[1, 1]]).kernel_basis(), m(&[&[-1], &[1]]));
        assert_eq!(m(&[&[1, 2], &[3, 4]]).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(2, 3).kernel_basis(), Matrix::identity(3));
        assert_eq!(Matrix::zeros(0, 2).kernel_basis(), Matrix::identity(2));
    }

    #[test]
    fn solve_examples() {
        let a = m(&[&[1, 0], &[0, 0]]);
        assert_eq!(
            a.solve_right(&m(&[&[1], &[0]])).unwrap(),
            Some(m(&[&[1], &[0]]))
        );
        assert_eq!(a.solve_right(&m(&[&[0], &[1]])).unwrap(), None);
        let b = m(&[&[3, -1, 0], &[2, 5, 7]]);
        assert_eq!(Matrix::identity(2).solve_right(&b).unwrap(), Some(b.clone()));
        assert!(a.solve_right(&Matrix::zeros(3, 1)).is_err());
        // zero-size systems
        assert_eq!(
            Matrix::zeros(0, 2).solve_right(&Matrix::zeros(0, 1)).unwrap(),
            Some(Matrix::zeros(2, 1))
        );
        assert_eq!(Matrix::zeros(2, 0).solve_right(&m(&[&[0], &[1]])).unwrap(), None);
    }

    #[test]
    fn kron_examples() {
        let s = m(&[&[2]]);
        let p = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(s.kron(&p), m(&[&[0, 2], &[2, 0]]));
        assert_eq!(Matrix::identity(2).kron(&Matrix::identity(3)), Matrix::identity(6));
        assert_eq!(Matrix::zeros(0, 2).kron(&Matrix::zeros(3, 1)).shape(), (0, 2));
        // left-major placement
        let a = m(&[&[1, 2]]);
        let b = m(&[&[1], &[10]]);
        assert_eq!(a.kron(&b), m(&[&[1, 2], &[10, 20]]));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&ratio(-2, 4)), "-1/2");
        assert_eq!(format_rational(&rat(3)), "3");
        assert_eq!(parse_rational("6/-4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        let mtx = m(&[&[1, 0], &[-3, 2]]).scale(&ratio(1, 3));
        let js = serde_json::to_string(&mtx).unwrap();
        assert_eq!(js, r#"[["1/3","0"],["-1","2/3"]]"#);
        assert_eq!(serde_json::from_str::<Matrix>(&js).unwrap(), mtx);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-3i64..=3, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
    }

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(small_rational(), rows * cols)
            .prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| v[i * cols + j].clone()))
    }

    proptest! {
        #[test]
        fn matmul_is_associative(
            (a, b, d) in (0usize..4, 0usize..4, 0usize..4, 0usize..4)
                .prop_flat_map(|(r, k, c, n)| (matrix(r, k), matrix(k, c), matrix(c, n)))
        ) {
            let lhs = a.matmul(&b).unwrap().matmul(&d).unwrap();
            let rhs = a.matmul(&b.matmul(&d).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kernel_is_annihilated_and_rank_nullity(a in (0usize..5, 0usize..5).prop_flat_map(|(r, c)| matrix(r, c))) {
            let k = a.kernel_basis();
            prop_assert!(a.matmul(&k).unwrap().is_zero());
            prop_assert_eq!(k.rank(), k.cols());
            prop_assert_eq!(a.rank() + k.cols(), a.cols());
        }

        #[test]
        fn solve_right_is_sound(
            (a, b) in (0usize..4, 0usize..4, 0usize..3)
                .prop_flat_map(|(r, c, k)| (matrix(r, c), matrix(r, k)))
        ) {
            match a.solve_right(&b).unwrap() {
                Some(x) => prop_assert_eq!(a.matmul(&x).unwrap(), b),
                None => prop_assert!(a.hstack(&b).unwrap().rank() > a.rank()),
            }
        }

        #[test]
        fn kron_mixed_product(
            (a, b, c, d) in (matrix(2, 2), matrix(2, 2), matrix(2, 2), matrix(2, 2))
        ) {
            let lhs = a.kron(&b).matmul(&c.kron(&d)).unwrap();
            let rhs = a.matmul(&c).unwrap().kron(&b.matmul(&d).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
