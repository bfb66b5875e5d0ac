use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};
use std::str::FromStr;

use super::local2::Local2Rational;
use super::modp::BitMatrix;
use crate::error::{Error, Result};

/// Dense row-major matrix over [`Local2Rational`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Local2Rational>,
}

/// Row echelon data over the local ring: every pivot is 1 and each pivot
/// column is zero outside its pivot row.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<Local2Rational>>,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Local2Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Local2Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Local2Rational::one();
        }
        m
    }

    pub fn diagonal(entries: &[Local2Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Integer matrix from nested rows; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix literal");
            data.extend(row.iter().map(|&x| Local2Rational::from(x)));
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_rows(rows: Vec<Vec<Local2Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(ambient: usize, cols: &[Vec<Local2Rational>]) -> Self {
        let mut m = Self::zeros(ambient, cols.len());
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), ambient);
            for (i, x) in v.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Local2Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Local2Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Local2Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Local2Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn trace(&self) -> Local2Rational {
        let mut t = Local2Rational::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Local2Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut r = Matrix::identity(self.rows);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    pub fn mul_vec(&self, v: &[Local2Rational]) -> Vec<Local2Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = Local2Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += &(a * b);
                    }
                }
                s
            })
            .collect()
    }

    /// Kronecker product with `self` as the outer factor.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut m = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            m[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        m
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(r, c);
        let (mut i0, mut j0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(i0 + i, j0 + j)] = b[(i, j)].clone();
                }
            }
            i0 += b.rows;
            j0 += b.cols;
        }
        m
    }

    /// Horizontal concatenation.
    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let r = blocks.first().map_or(0, |b| b.rows);
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(r, c);
        let mut j0 = 0;
        for b in blocks {
            assert_eq!(b.rows, r);
            for i in 0..r {
                for j in 0..b.cols {
                    m[(i, j0 + j)] = b[(i, j)].clone();
                }
            }
            j0 += b.cols;
        }
        m
    }

    /// Vertical concatenation.
    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let c = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        let mut r = 0;
        for b in blocks {
            assert_eq!(b.cols, c);
            data.extend_from_slice(&b.data);
            r += b.rows;
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mod2(&self) -> BitMatrix {
        let mut b = BitMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self[(i, j)].mod2() {
                    b.set(i, j, true);
                }
            }
        }
        b
    }

    /// Determinant by elimination with minimal-valuation pivots.
    pub fn det(&self) -> Local2Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Local2Rational::one();
        for c in 0..n {
            let best = (c..n)
                .filter_map(|i| a[i][c].val2().map(|v| (v, i)))
                .min();
            let Some((_, p)) = best else {
                return Local2Rational::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let pivot = a[c][c].clone();
            det = &det * &pivot;
            for i in c + 1..n {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].checked_div(&pivot).expect("minimal valuation pivot divides");
                for j in c..n {
                    if !a[c][j].is_zero() {
                        let t = &f * &a[c][j];
                        a[i][j] -= &t;
                    }
                }
            }
        }
        det
    }

    /// A square matrix is unimodular over the local ring iff its determinant is odd.
    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.mod2().is_invertible()
    }

    /// Inverse over the local ring; `None` unless the determinant is a unit.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = Matrix::identity(n).to_rows();
        for c in 0..n {
            let p = (c..n).find(|&i| a[i][c].is_unit())?;
            a.swap(p, c);
            inv.swap(p, c);
            let s = a[c][c].inverse()?;
            for x in a[c].iter_mut() {
                *x = &*x * &s;
            }
            for x in inv[c].iter_mut() {
                *x = &*x * &s;
            }
            for i in 0..n {
                if i == c || a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].clone();
                for j in 0..n {
                    if !a[c][j].is_zero() {
                        let t = &f * &a[c][j];
                        a[i][j] -= &t;
                    }
                    if !inv[c][j].is_zero() {
                        let t = &f * &inv[c][j];
                        inv[i][j] -= &t;
                    }
                }
            }
        }
        Matrix::from_rows(inv).ok()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        echelon(self.to_rows(), self.cols).pivots.len()
    }

    /// Parses the text format: a header line `rows cols` followed by one line
    /// per row with entries `p` or `p/q` separated by single spaces.
    pub fn parse_text(s: &str) -> Result<Matrix> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header `{}`", header))))
            .collect::<Result<_>>()?;
        let [rows, cols] = dims[..] else {
            return Err(Error::Parse(format!("bad header `{}`", header)));
        };
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing matrix row".into()))?;
            let row: Vec<Local2Rational> = line
                .split(' ')
                .filter(|t| !t.is_empty())
                .map(Local2Rational::from_str)
                .collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Matrix::new(rows, cols, data)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Row-reduces `rows` (each of length `ncols`) over the local ring.
///
/// The pivot is always an entry of minimal 2-adic valuation among the rows
/// not yet used, ties broken by smallest (row, column). Its row is divided by
/// the pivot, which keeps every entry 2-integral. Rows are only ever scaled
/// by nonzero factors, so the row space over the rationals is preserved, and
/// the returned nonzero rows are a 2-integral basis with unit pivots.
pub fn echelon(mut rows: Vec<Vec<Local2Rational>>, ncols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut done = 0;
    while done < rows.len() {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in rows.iter().enumerate().skip(done) {
            for (j, x) in row.iter().enumerate() {
                if let Some(v) = x.val2() {
                    if best.is_none_or(|(bv, _, _)| v < bv) {
                        best = Some((v, i, j));
                        if v == 0 {
                            break;
                        }
                    }
                }
            }
            if best.is_some_and(|(v, _, _)| v == 0) {
                break;
            }
        }
        let Some((_, pi, pj)) = best else { break };
        rows.swap(done, pi);
        let inv = {
            let p = &rows[done][pj];
            let v = p.val2().unwrap();
            let unit = p.div_pow2(v).unwrap();
            let uinv = unit.inverse().unwrap();
            (v, uinv)
        };
        for x in rows[done].iter_mut() {
            if !x.is_zero() {
                *x = &x.div_pow2(inv.0).expect("pivot has minimal valuation") * &inv.1;
            }
        }
        let prow = rows[done].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == done || row[pj].is_zero() {
                continue;
            }
            let f = row[pj].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    let t = &f * p;
                    *x -= &t;
                }
            }
        }
        pivots.push(pj);
        done += 1;
    }
    rows.truncate(done);
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    Echelon { rows, pivots }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Local2Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Local2Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Local2Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        out
    }
}

impl Mul for Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Matrix) -> Matrix {
        &self * &rhs
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
            if i + 1 < self.rows {
                f.write_str(", ")?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let m = Matrix::new(
            2,
            2,
            vec![
                Local2Rational::from(1),
                Local2Rational::new(-2, 3).unwrap(),
                Local2Rational::zero(),
                Local2Rational::from(7),
            ],
        )
        .unwrap();
        let s = m.to_text();
        assert_eq!(s, "2 2\n1 -2/3\n0 7\n");
        assert_eq!(Matrix::parse_text(&s).unwrap(), m);
        assert!(Matrix::parse_text("2 2\n1 2\n").is_err());
    }

    #[test]
    fn determinant_and_unimodularity() {
        // cofactor oracle: 3*1 - 1*1 = 2
        let a = Matrix::from_i64(&[&[3, 1], &[1, 1]]);
        assert_eq!(a.det(), Local2Rational::from(2));
        assert!(!a.is_unimodular());
        assert!(Matrix::identity(4).is_unimodular());
        assert!(!Matrix::from_i64(&[&[2, 0], &[0, 1]]).is_unimodular());
        let b = Matrix::from_i64(&[&[1, 2, 0], &[0, 3, 1], &[5, 0, 1]]);
        // 1*(3-0) - 2*(0-5) + 0 = 13
        assert_eq!(b.det(), Local2Rational::from(13));
        let inv = b.inverse().unwrap();
        assert!((&b * &inv).is_identity());
    }

    #[test]
    fn kron_shape_and_entries() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k[(0, 1)], Local2Rational::from(1));
        assert_eq!(k[(3, 2)], Local2Rational::from(4));
        assert_eq!(k.trace(), Local2Rational::zero());
    }

    #[test]
    fn echelon_keeps_entries_integral() {
        let e = echelon(vec![vec![2.into(), 1.into()], vec![4.into(), 6.into()]], 2);
        assert_eq!(e.pivots.len(), 2);
        let e = echelon(vec![vec![2.into(), 4.into()], vec![6.into(), 12.into()]], 2);
        assert_eq!(e.pivots, vec![0]);
        assert_eq!(e.rows[0], vec![Local2Rational::from(1), Local2Rational::from(2)]);
    }
}
