//! Word-sized residue arithmetic used to pick independent candidates quickly,
//! and dense bit matrices over the field with two elements.

/// The Mersenne prime 2^61 - 1.
pub const P: u64 = (1 << 61) - 1;

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

/// Incremental echelon basis of vectors mod `P`, used to test independence.
#[derive(Debug, Default, Clone)]
pub struct ModPEchelon {
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModPEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; inserts it and returns true if independent.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    if *r != 0 {
                        *x = sub(*x, mul(c, *r, P), P);
                    }
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(piv) => {
                let s = inv(v[piv], P);
                for x in v.iter_mut() {
                    *x = mul(*x, s, P);
                }
                // keep the basis fully reduced on earlier pivots
                for (_, row) in self.rows.iter_mut() {
                    let c = row[piv];
                    if c != 0 {
                        for (x, r) in row.iter_mut().zip(&v) {
                            if *r != 0 {
                                *x = sub(*x, mul(c, *r, P), P);
                            }
                        }
                    }
                }
                self.rows.push((piv, v));
                true
            }
        }
    }
}

/// Dense matrix over GF(2) with rows packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.data[r * self.words + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.words + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words;
        for k in 0..w {
            let s = self.data[src * w + k];
            self.data[dst * w + k] ^= s;
        }
    }

    pub fn xor_assign(&mut self, other: &BitMatrix) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let w = out.words;
                    for j in 0..w {
                        out.data[i * w + j] ^= other.data[k * w + j];
                    }
                }
            }
        }
        out
    }

    /// Rank by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        self.clone().eliminate().len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Row-reduces in place; returns the pivot columns in order.
    pub fn eliminate(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            if p != r {
                let w = self.words;
                for k in 0..w {
                    self.data.swap(p * w + k, r * w + k);
                }
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Bits of row `r`, packed.
    pub fn row_words(&self, r: usize) -> &[u64] {
        self.row(r)
    }

    /// Basis of the right null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let pivots = m.eliminate();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![false; self.cols];
                x[f] = true;
                for (i, &p) in pivots.iter().enumerate() {
                    if m.get(i, f) {
                        x[p] = true;
                    }
                }
                x
            })
            .collect()
    }
}

/// Incremental echelon form over GF(2) that tracks which inserted vectors
/// combine to each reduced row, so a dependency can be reported.
#[derive(Debug, Clone)]
pub struct F2Echelon {
    len: usize,
    rows: Vec<(usize, Vec<u64>, Vec<u64>)>,
}

impl F2Echelon {
    pub fn new(len: usize) -> Self {
        F2Echelon { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` (with combination tag `tag`). Returns `Ok(())` if `v` was
    /// independent and has been inserted, or `Err(combination)` describing
    /// the dependency: the set of tags summing to zero mod 2.
    pub fn insert(&mut self, v: &[bool], tag: usize, ntags: usize) -> Result<(), Vec<usize>> {
        let words = self.len.div_ceil(64).max(1);
        let twords = ntags.div_ceil(64).max(1);
        let mut bits = vec![0u64; words];
        for (i, &b) in v.iter().enumerate() {
            if b {
                bits[i / 64] |= 1 << (i % 64);
            }
        }
        let mut comb = vec![0u64; twords];
        comb[tag / 64] |= 1 << (tag % 64);
        for (piv, row, rc) in &self.rows {
            if (bits[piv / 64] >> (piv % 64)) & 1 == 1 {
                for (a, b) in bits.iter_mut().zip(row) {
                    *a ^= b;
                }
                for (a, b) in comb.iter_mut().zip(rc) {
                    *a ^= b;
                }
            }
        }
        let lead = bits
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize);
        match lead {
            Some(piv) => {
                self.rows.push((piv, bits, comb));
                Ok(())
            }
            None => Err((0..ntags)
                .filter(|t| (comb[t / 64] >> (t % 64)) & 1 == 1)
                .collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_p() {
        for a in [1u64, 2, 3, 12345, P - 1] {
            assert_eq!(mul(a, inv(a, P), P), 1);
        }
    }

    #[test]
    fn bit_rank_and_kernel() {
        let mut m = BitMatrix::zeros(2, 3);
        m.set(0, 0, true);
        m.set(0, 1, true);
        m.set(1, 1, true);
        m.set(1, 2, true);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k, vec![vec![true, true, true]]);
        assert!(BitMatrix::identity(5).is_invertible());
    }

    #[test]
    fn f2_echelon_reports_dependency() {
        let mut e = F2Echelon::new(3);
        assert!(e.insert(&[true, true, false], 0, 3).is_ok());
        assert!(e.insert(&[false, true, true], 1, 3).is_ok());
        assert_eq!(e.insert(&[true, false, true], 2, 3), Err(vec![0, 1, 2]));
    }
}
