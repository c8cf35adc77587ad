//! Dense matrices and incremental row reduction over a cyclotomic field.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalars::{Cyclotomic, RootOfUnity};

#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    conductor: u64,
    data: Vec<Cyclotomic>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| (0..self.cols).map(|j| self[(i, j)].to_string()).collect()).collect();
        write!(f, "Matrix{rows:?}")
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Cyclotomic;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(conductor: u64, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, conductor, data: vec![Cyclotomic::zero(conductor); rows * cols] }
    }

    pub fn identity(conductor: u64, n: usize) -> Self {
        Self::scalar(conductor, n, RootOfUnity::one())
    }

    pub fn scalar(conductor: u64, n: usize, c: RootOfUnity) -> Self {
        let mut m = Self::zeros(conductor, n, n);
        let c = Cyclotomic::from_root_in(conductor, c);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    /// Builds from rows, embedding every entry into `conductor`.
    pub fn from_rows(conductor: u64, rows: Vec<Vec<Cyclotomic>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        let mut data = Vec::with_capacity(r * c);
        for x in rows.into_iter().flatten() {
            if conductor % x.conductor() != 0 {
                return None;
            }
            data.push(x.embed(conductor));
        }
        Some(Matrix { rows: r, cols: c, conductor, data })
    }

    pub fn to_rows(&self) -> Vec<Vec<Cyclotomic>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[Cyclotomic]>::to_vec).collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn set(&mut self, i: usize, j: usize, x: Cyclotomic) {
        self.data[i * self.cols + j] = x.embed(self.conductor);
    }

    pub fn embed(&self, conductor: u64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            conductor,
            data: self.data.iter().map(|x| x.embed(conductor)).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Matrix::zeros(self.conductor, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn scale_root(&self, c: RootOfUnity) -> Matrix {
        if c.is_one() {
            return self.clone();
        }
        let c = Cyclotomic::from_root_in(self.conductor, c);
        Matrix {
            data: self.data.iter().map(|x| if x.is_zero() { x.clone() } else { x * &c }).collect(),
            ..self.clone()
        }
    }

    /// Kronecker product; row `(i, k)` of the result is `i·other.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(self.conductor, r, c);
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
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.conductor, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Cyclotomic {
        (0..self.rows.min(self.cols)).fold(Cyclotomic::zero(self.conductor), |acc, i| &acc + &self[(i, i)])
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(self.conductor, n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if p != col {
                for j in 0..n {
                    a.data.swap(p * n + j, col * n + j);
                    inv.data.swap(p * n + j, col * n + j);
                }
            }
            let pinv = a[(col, col)].inv()?;
            for j in 0..n {
                a.data[col * n + j] = &a.data[col * n + j] * &pinv;
                inv.data[col * n + j] = &inv.data[col * n + j] * &pinv;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    if !a[(col, j)].is_zero() {
                        a.data[r * n + j] = &a.data[r * n + j] - &(&f * &a.data[col * n + j]);
                    }
                    if !inv[(col, j)].is_zero() {
                        inv.data[r * n + j] = &inv.data[r * n + j] - &(&f * &inv.data[col * n + j]);
                    }
                }
            }
        }
        Some(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_one())
    }

    /// The scalar `c` if this is `c·id`.
    pub fn as_scalar(&self) -> Option<Cyclotomic> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let c = self[(0, 0)].clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = &self[(i, j)];
                let ok = if i == j { *x == c } else { x.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(self.data[i * self.cols..(i + 1) * self.cols].iter().cloned().enumerate().collect());
        }
        e.rank()
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<Cyclotomic>> = Vec::deserialize(d)?;
        let conductor = rows.iter().flatten().fold(1u64, |acc, x| num_integer::lcm(acc, x.conductor()));
        Matrix::from_rows(conductor, rows).ok_or_else(|| serde::de::Error::custom("ragged matrix"))
    }
}

/// Row space of a growing set of sparse rows, kept in reduced form with
/// unit pivots.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    cols: usize,
    // pivot column -> reduced row (sorted sparse entries, pivot entry 1)
    pivots: std::collections::BTreeMap<usize, Vec<(usize, Cyclotomic)>>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon { cols, pivots: Default::default() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Adds a row given as `(column, value)` pairs; returns whether the rank grew.
    pub fn insert(&mut self, row: Vec<(usize, Cyclotomic)>) -> bool {
        let mut dense: std::collections::BTreeMap<usize, Cyclotomic> =
            row.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        // eliminate existing pivots in increasing column order
        loop {
            let next = dense.keys().copied().find(|c| self.pivots.contains_key(c));
            let Some(c) = next else { break };
            let f = dense[&c].clone();
            for (j, v) in &self.pivots[&c] {
                let entry = dense.entry(*j).or_insert_with(|| Cyclotomic::zero(v.conductor()));
                *entry = &*entry - &(&f * v);
                if entry.is_zero() {
                    dense.remove(j);
                }
            }
        }
        let Some((&p, lead)) = dense.iter().next() else { return false };
        let inv = lead.inv().expect("nonzero pivot is invertible");
        let row: Vec<(usize, Cyclotomic)> = dense.into_iter().map(|(j, v)| (j, &v * &inv)).collect();
        // keep older pivot rows reduced against the new pivot
        for other in self.pivots.values_mut() {
            if let Some(pos) = other.iter().position(|(j, _)| *j == p) {
                let f = other[pos].1.clone();
                let mut merged: std::collections::BTreeMap<usize, Cyclotomic> = other.drain(..).collect();
                for (j, v) in &row {
                    let entry = merged.entry(*j).or_insert_with(|| Cyclotomic::zero(v.conductor()));
                    *entry = &*entry - &(&f * v);
                }
                *other = merged.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            }
        }
        self.pivots.insert(p, row);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(conductor: u64, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            conductor,
            rows.iter().map(|r| r.iter().map(|&x| Cyclotomic::from_integer(conductor, x)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn inverse_and_rank() {
        let a = m(1, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(m(1, &[&[1, 2], &[2, 4]]).rank(), 1);
        assert!(m(1, &[&[1, 2], &[2, 4]]).inverse().is_none());
        let z = Cyclotomic::zeta_power(3, 1);
        let b = Matrix::from_rows(3, vec![vec![Cyclotomic::one(3), z.clone()], vec![z.clone(), &z * &z]]).unwrap();
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn kron_shape_and_values() {
        let a = m(1, &[&[1, 2], &[3, 4]]);
        let b = m(1, &[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert_eq!(k[(0, 1)], Cyclotomic::from_integer(1, 1));
        assert_eq!(k[(3, 2)], Cyclotomic::from_integer(1, 4));
        assert_eq!(k.trace(), Cyclotomic::zero(1));
    }

    #[test]
    fn echelon_tracks_rank() {
        let mut e = Echelon::new(3);
        let one = || Cyclotomic::one(1);
        assert!(e.insert(vec![(0, one()), (1, one())]));
        assert!(e.insert(vec![(1, one()), (2, one())]));
        assert!(!e.insert(vec![(0, one()), (2, -&one())]));
        assert_eq!(e.nullity(), 1);
    }
}
