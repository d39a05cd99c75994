//! Arithmetic and dense linear algebra over GF(3).
//!
//! [`Gf3Matrix`] stores one byte per entry and is the exchange type used by
//! every other module. The enumeration kernels work on [`PackedRow`], a
//! bit-sliced encoding holding up to 64 coordinates in two machine words, so
//! a vector addition is a handful of bitwise operations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// An element of GF(3).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf3(u8);

impl Gf3 {
    pub const ZERO: Gf3 = Gf3(0);
    pub const ONE: Gf3 = Gf3(1);
    pub const TWO: Gf3 = Gf3(2);

    /// Reduces an arbitrary integer mod 3.
    pub fn new(value: i64) -> Gf3 {
        Gf3(value.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse; every nonzero element is its own inverse.
    pub fn inv(self) -> Option<Gf3> {
        if self.0 == 0 {
            None
        } else {
            Some(self)
        }
    }
}

impl TryFrom<u8> for Gf3 {
    type Error = Error;

    fn try_from(v: u8) -> Result<Gf3> {
        if v < 3 {
            Ok(Gf3(v))
        } else {
            Err(Error::InvalidParameters(format!(
                "{v} is not a GF(3) digit"
            )))
        }
    }
}

impl Add for Gf3 {
    type Output = Gf3;
    fn add(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 + rhs.0) % 3)
    }
}

impl Sub for Gf3 {
    type Output = Gf3;
    fn sub(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 + 3 - rhs.0) % 3)
    }
}

impl Mul for Gf3 {
    type Output = Gf3;
    fn mul(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 * rhs.0) % 3)
    }
}

impl Neg for Gf3 {
    type Output = Gf3;
    fn neg(self) -> Gf3 {
        Gf3((3 - self.0) % 3)
    }
}

impl fmt::Display for Gf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Maximum vector length handled by [`PackedRow`].
pub const PACKED_MAX_LEN: usize = 64;

/// A GF(3) vector of length at most 64 in bit-sliced form.
///
/// Bit `j` of `ones` is set when coordinate `j` equals 1, bit `j` of `twos`
/// when it equals 2. The two masks are always disjoint.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PackedRow {
    pub ones: u64,
    pub twos: u64,
}

impl PackedRow {
    pub const ZERO: PackedRow = PackedRow { ones: 0, twos: 0 };

    pub fn from_slice(values: &[Gf3]) -> PackedRow {
        assert!(values.len() <= PACKED_MAX_LEN);
        let mut row = PackedRow::ZERO;
        for (j, v) in values.iter().enumerate() {
            row.set(j, *v);
        }
        row
    }

    pub fn unit(j: usize) -> PackedRow {
        PackedRow {
            ones: 1 << j,
            twos: 0,
        }
    }

    #[inline]
    pub fn get(self, j: usize) -> Gf3 {
        if self.ones >> j & 1 == 1 {
            Gf3::ONE
        } else if self.twos >> j & 1 == 1 {
            Gf3::TWO
        } else {
            Gf3::ZERO
        }
    }

    #[inline]
    pub fn set(&mut self, j: usize, v: Gf3) {
        let bit = 1u64 << j;
        self.ones &= !bit;
        self.twos &= !bit;
        match v.value() {
            1 => self.ones |= bit,
            2 => self.twos |= bit,
            _ => {}
        }
    }

    #[inline]
    pub fn support(self) -> u64 {
        self.ones | self.twos
    }

    #[inline]
    pub fn weight(self) -> u32 {
        self.support().count_ones()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.support() == 0
    }

    #[inline]
    pub fn scale(self, c: Gf3) -> PackedRow {
        match c.value() {
            0 => PackedRow::ZERO,
            1 => self,
            _ => -self,
        }
    }

    /// `self + c * rhs`.
    #[inline]
    pub fn add_scaled(self, rhs: PackedRow, c: Gf3) -> PackedRow {
        match c.value() {
            0 => self,
            1 => self + rhs,
            _ => self - rhs,
        }
    }

    /// Keeps only the coordinates whose bit is set in `mask`.
    #[inline]
    pub fn masked(self, mask: u64) -> PackedRow {
        PackedRow {
            ones: self.ones & mask,
            twos: self.twos & mask,
        }
    }

    pub fn to_vec(self, len: usize) -> Vec<Gf3> {
        (0..len).map(|j| self.get(j)).collect()
    }
}

impl Add for PackedRow {
    type Output = PackedRow;

    #[inline]
    fn add(self, rhs: PackedRow) -> PackedRow {
        let zx = !(self.ones | self.twos);
        let zy = !(rhs.ones | rhs.twos);
        PackedRow {
            ones: (zx & rhs.ones) | (self.ones & zy) | (self.twos & rhs.twos),
            twos: (zx & rhs.twos) | (self.twos & zy) | (self.ones & rhs.ones),
        }
    }
}

impl Neg for PackedRow {
    type Output = PackedRow;

    #[inline]
    fn neg(self) -> PackedRow {
        PackedRow {
            ones: self.twos,
            twos: self.ones,
        }
    }
}

impl Sub for PackedRow {
    type Output = PackedRow;

    #[inline]
    fn sub(self, rhs: PackedRow) -> PackedRow {
        self + -rhs
    }
}

/// Incrementally maintained echelon basis of packed vectors.
///
/// Each stored vector has value 1 at its pivot and 0 at the pivots of all
/// earlier vectors, so reducing against the list in order is exact.
#[derive(Clone, Debug, Default)]
pub struct PackedBasis {
    rows: Vec<(u32, PackedRow)>,
}

impl PackedBasis {
    pub fn new() -> PackedBasis {
        PackedBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: PackedRow) -> PackedRow {
        for &(p, b) in &self.rows {
            v = v.add_scaled(b, -v.get(p as usize));
        }
        v
    }

    pub fn contains(&self, v: PackedRow) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns false if it was already in it.
    pub fn insert(&mut self, v: PackedRow) -> bool {
        let r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        let p = r.support().trailing_zeros();
        let r = r.scale(r.get(p as usize));
        self.rows.push((p, r));
        true
    }
}

/// Dense matrix over GF(3), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf3Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf3>,
}

impl Gf3Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Gf3>) -> Result<Gf3Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Gf3Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Gf3Matrix {
        Gf3Matrix {
            rows,
            cols,
            data: vec![Gf3::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Gf3Matrix {
        let mut m = Gf3Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Gf3::ONE);
        }
        m
    }

    /// A single row of `len` ones.
    pub fn ones_row(len: usize) -> Gf3Matrix {
        Gf3Matrix {
            rows: 1,
            cols: len,
            data: vec![Gf3::ONE; len],
        }
    }

    /// Builds a matrix from rows of digits; every digit must be 0, 1 or 2.
    pub fn from_digits<R: AsRef<[u8]>>(rows: &[R]) -> Result<Gf3Matrix> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    r.len()
                )));
            }
            for &v in r {
                data.push(Gf3::try_from(v)?);
            }
        }
        Gf3Matrix::new(rows.len(), cols, data)
    }

    pub fn from_rows(rows: &[Vec<Gf3>], cols: usize) -> Result<Gf3Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Gf3Matrix::new(rows.len(), cols, data)
    }

    pub fn from_packed_rows(rows: &[PackedRow], cols: usize) -> Gf3Matrix {
        let mut m = Gf3Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for j in 0..cols {
                m.set(i, j, r.get(j));
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

    pub fn get(&self, i: usize, j: usize) -> Gf3 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gf3) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Gf3] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Gf3]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Gf3> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().filter(|v| !v.is_zero()).count()
    }

    /// 0-based coordinates where row `i` is nonzero.
    pub fn row_support(&self, i: usize) -> Vec<usize> {
        self.row(i)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, _)| j)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Gf3Matrix {
        let mut t = Gf3Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Gf3Matrix) -> Result<Gf3Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Gf3Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(t, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Stacks `self` on top of `below`.
    pub fn vstack(&self, below: &Gf3Matrix) -> Result<Gf3Matrix> {
        if self.rows > 0 && below.rows > 0 && self.cols != below.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns on {} columns",
                self.cols, below.cols
            )));
        }
        let cols = if self.rows > 0 { self.cols } else { below.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Gf3Matrix::new(self.rows + below.rows, cols, data)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Gf3Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Gf3Matrix {
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Gf3Matrix {
        let mut m = Gf3Matrix::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                m.set(i, jj, self.get(i, j));
            }
        }
        m
    }

    /// Drops the listed columns (0-based); duplicates are ignored.
    pub fn delete_columns(&self, idx: &[usize]) -> Gf3Matrix {
        let keep: Vec<usize> = (0..self.cols).filter(|j| !idx.contains(j)).collect();
        self.select_columns(&keep)
    }

    /// Multiplies column `j` by `c`.
    pub fn scale_column(&mut self, j: usize, c: Gf3) {
        for i in 0..self.rows {
            let v = self.get(i, j) * c;
            self.set(i, j, v);
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// Pivots are taken leftmost-first and scaled to 1; zero rows sink to the
    /// bottom so the shape is preserved.
    pub fn rref_with_pivots(&self) -> (Gf3Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(r, j) * inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c);
                if f.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = m.get(i, j) - f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> Gf3Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of `{x : self * x^T = 0}`, one basis vector per row.
    pub fn null_space(&self) -> Gf3Matrix {
        let (r, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Gf3Matrix::zeros(free.len(), self.cols);
        for (b, &f) in free.iter().enumerate() {
            out.set(b, f, Gf3::ONE);
            for (i, &p) in pivots.iter().enumerate() {
                out.set(b, p, -r.get(i, f));
            }
        }
        out
    }

    pub fn kronecker(&self, rhs: &Gf3Matrix) -> Gf3Matrix {
        let mut out = Gf3Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..rhs.rows {
                    for q in 0..rhs.cols {
                        out.set(i * rhs.rows + p, j * rhs.cols + q, a * rhs.get(p, q));
                    }
                }
            }
        }
        out
    }

    /// Indices of a maximal independent subset of rows, scanning top-down.
    pub fn independent_row_indices(&self) -> Vec<usize> {
        let mut kept = Vec::new();
        let mut current = Gf3Matrix::zeros(0, self.cols);
        for i in 0..self.rows {
            let candidate = current.vstack(&self.select_rows(&[i])).expect("same width");
            if candidate.rank() > current.rows {
                current = candidate;
                kept.push(i);
            }
        }
        kept
    }

    pub fn packed_rows(&self) -> Result<Vec<PackedRow>> {
        if self.cols > PACKED_MAX_LEN {
            return Err(Error::LengthTooLarge {
                len: self.cols,
                max: PACKED_MAX_LEN,
            });
        }
        Ok(self.row_iter().map(PackedRow::from_slice).collect())
    }

    pub fn packed_columns(&self) -> Result<Vec<PackedRow>> {
        self.transpose().packed_rows()
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

impl fmt::Debug for Gf3Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf3Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Gf3Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
