//! Exact linear algebra over the rationals and over the integers.
//!
//! Small dense matrices only; everything here runs at rank <= 16 and is
//! shared by the root-system, cone, fitting, and verification code.

use num::{BigInt, BigRational, Integer, One, Zero};

pub type Rat = BigRational;
pub type Int = BigInt;

pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Dense rational matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        QMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        QMat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat_i(x)).collect()).collect())
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn matvec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn matmul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        let mut out = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    /// Gauss-Jordan elimination in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let t = &self[(r, j)] * &inv;
                self[(r, j)] = t;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let t = &self[(r, j)] * &f;
                        self[(i, j)] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Inverse, or None when singular.
    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = QMat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
            return None;
        }
        let mut out = QMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(out)
    }

    /// Solves self * x = rhs; None when inconsistent.  Free variables are set
    /// to zero, so the answer is deterministic.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = QMat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (k, &c) in pivots.iter().enumerate() {
            x[c] = aug[(k, self.cols)].clone();
        }
        Some(x)
    }

    /// Basis of the right kernel {x : Mx = 0}.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (k, &c) in pivots.iter().enumerate() {
                    v[c] = -m[(k, f)].clone();
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Divides an integer vector by the gcd of its entries.  Zero stays zero.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let mut g: i64 = 0;
    for &x in v {
        g = g.gcd(&x.abs());
    }
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|&x| x / g).collect()
}

/// Clears denominators of a rational vector into a primitive integer vector.
pub fn clear_denominators(v: &[Rat]) -> Vec<i64> {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let mut g = Int::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return vec![0; v.len()];
    }
    ints.iter()
        .map(|x| i64::try_from(x / &g).expect("cleared coordinate exceeds i64"))
        .collect()
}

/// Smith normal form of an integer matrix: returns (d, t) with s*M*t = diag(d)
/// for some unimodular s (not returned) and unimodular t (column transform).
/// Only the column transform is needed by callers (integer kernels).
fn smith_columns(mut m: Vec<Vec<i128>>, cols: usize) -> (Vec<i128>, Vec<Vec<i128>>) {
    let rows = m.len();
    let mut t: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();
    let n = rows.min(cols);
    let mut k = 0;
    while k < n {
        // find a nonzero pivot in the remaining block
        let Some((pi, pj)) = (k..rows)
            .flat_map(|i| (k..cols).map(move |j| (i, j)))
            .find(|&(i, j)| m[i][j] != 0)
        else {
            break;
        };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        for trow in t.iter_mut() {
            trow.swap(k, pj);
        }
        loop {
            // clear column k by row ops, column entries of row k by column ops
            let mut done = true;
            for i in k + 1..rows {
                if m[i][k] != 0 {
                    let q = m[i][k].div_euclid(m[k][k]);
                    for j in 0..cols {
                        m[i][j] -= q * m[k][j];
                    }
                    if m[i][k] != 0 {
                        m.swap(k, i);
                        done = false;
                    }
                }
            }
            for j in k + 1..cols {
                if m[k][j] != 0 {
                    let q = m[k][j].div_euclid(m[k][k]);
                    for row in m.iter_mut() {
                        let d = q * row[k];
                        row[j] -= d;
                    }
                    // t tracks the column operations applied to m
                    for i in 0..cols {
                        let d = q * t[i][k];
                        t[i][j] -= d;
                    }
                    if m[k][j] != 0 {
                        for row in m.iter_mut() {
                            row.swap(k, j);
                        }
                        for trow in t.iter_mut() {
                            trow.swap(k, j);
                        }
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[k][k] < 0 {
            for row in m.iter_mut() {
                row[k] = -row[k];
            }
            for trow in t.iter_mut() {
                trow[k] = -trow[k];
            }
        }
        k += 1;
    }
    let d = (0..n).map(|i| m[i][i]).collect();
    (d, t)
}

/// Integer basis of {x in Z^c : Mx = 0}, canonicalized by Hermite reduction.
pub fn integer_kernel(m: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let mm: Vec<Vec<i128>> = m
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols);
            r.iter().map(|&x| i128::from(x)).collect()
        })
        .collect();
    let (d, t) = smith_columns(mm, cols);
    let rank = d.iter().filter(|&&x| x != 0).count();
    let basis: Vec<Vec<i64>> = (rank..cols)
        .map(|j| {
            (0..cols)
                .map(|i| i64::try_from(t[i][j]).expect("kernel entry exceeds i64"))
                .collect()
        })
        .collect();
    hermite_rows(basis)
}

/// Row Hermite normal form of a full-row-rank integer matrix: canonical basis
/// of the row lattice (positive pivots, entries above pivots reduced).
pub fn hermite_rows(rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    if rows.is_empty() {
        return rows;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        // make one nonzero entry in column c below r via Euclid on rows
        loop {
            let nz: Vec<usize> = (r..m.len()).filter(|&i| m[i][c] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let &imin = nz
                .iter()
                .min_by_key(|&&i| m[i][c].abs())
                .expect("nonempty");
            m.swap(r, imin);
            for i in r + 1..m.len() {
                if m[i][c] != 0 {
                    let q = m[i][c].div_euclid(m[r][c]);
                    for j in 0..cols {
                        let d = q * m[r][j];
                        m[i][j] -= d;
                    }
                }
            }
        }
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        if m[r][c] < 0 {
            for x in m[r].iter_mut() {
                *x = -*x;
            }
        }
        let pivot = m[r][c];
        for i in 0..r {
            let q = m[i][c].div_euclid(pivot);
            if q != 0 {
                for j in 0..cols {
                    let d = q * m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m.iter()
        .map(|row| {
            row.iter()
                .map(|&x| i64::try_from(x).expect("hermite entry exceeds i64"))
                .collect()
        })
        .collect()
}
