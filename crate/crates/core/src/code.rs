//! Ternary linear codes given by a parity-check matrix.
//!
//! Coordinates are 0-based throughout the library. Note on naming: deleting
//! columns of a parity-check matrix is *shortening* the code (keep the
//! codewords that vanish there, then drop those coordinates), while deleting
//! columns of a generator matrix is *puncturing*. Some literature calls the
//! former puncturing as well; here the two are kept apart.

use crate::combinatorics::for_each_combination;
use crate::error::{Error, Result};
use crate::gf3::{Gf3, Gf3Matrix, PackedBasis, PackedRow};

/// Largest dimension accepted for full codeword scans.
pub const ENUMERATION_CAP_K: usize = 20;
/// Largest dimension accepted for generalized Hamming weight enumeration.
pub const GHW_CAP_K: usize = 7;
/// Largest length accepted for generalized Hamming weight enumeration.
pub const GHW_CAP_N: usize = 14;

/// A ternary `[n, k]` linear code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    k: usize,
    parity_check: Gf3Matrix,
    generator: Gf3Matrix,
}

/// `A_0..A_n`, the number of codewords of each Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight that occurs, if any.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts
            .iter()
            .skip(1)
            .position(|&c| c > 0)
            .map(|p| p + 1)
    }
}

/// Generalized Hamming weights `d_1..d_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhwProfile {
    weights: Vec<usize>,
}

impl GhwProfile {
    pub fn weights(&self) -> &[usize] {
        &self.weights
    }
}

impl LinearCode {
    /// The code `{x : h x^T = 0}`. Dependent rows of `h` are dropped; the
    /// remaining rows are kept verbatim.
    pub fn from_parity_check(h: &Gf3Matrix) -> Result<LinearCode> {
        if h.cols() == 0 {
            return Err(Error::NoColumns);
        }
        let parity_check = h.select_rows(&h.independent_row_indices());
        let generator = parity_check.null_space();
        Ok(LinearCode {
            n: h.cols(),
            k: generator.rows(),
            parity_check,
            generator,
        })
    }

    /// The row space of `g`.
    pub fn from_generator(g: &Gf3Matrix) -> Result<LinearCode> {
        if g.cols() == 0 {
            return Err(Error::NoColumns);
        }
        let generator = g.select_rows(&g.independent_row_indices());
        let parity_check = generator.null_space();
        Ok(LinearCode {
            n: g.cols(),
            k: generator.rows(),
            parity_check,
            generator,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Redundancy `n - k`.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn parity_check(&self) -> &Gf3Matrix {
        &self.parity_check
    }

    pub fn generator(&self) -> &Gf3Matrix {
        &self.generator
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode {
            n: self.n,
            k: self.n - self.k,
            parity_check: self.generator.clone(),
            generator: self.parity_check.clone(),
        }
    }

    pub fn contains(&self, word: &[Gf3]) -> bool {
        word.len() == self.n
            && self.parity_check.row_iter().all(|h| {
                h.iter()
                    .zip(word)
                    .fold(Gf3::ZERO, |acc, (a, b)| acc + *a * *b)
                    .is_zero()
            })
    }

    /// Keeps codewords vanishing on `coords` and deletes those coordinates.
    pub fn shorten(&self, coords: &[usize]) -> Result<LinearCode> {
        let coords = self.check_coords(coords)?;
        LinearCode::from_parity_check(&self.parity_check.delete_columns(&coords))
    }

    /// Deletes `coords` from every codeword.
    pub fn puncture(&self, coords: &[usize]) -> Result<LinearCode> {
        let coords = self.check_coords(coords)?;
        let g = self.generator.delete_columns(&coords).rref();
        let nonzero: Vec<usize> = (0..g.rows()).filter(|&i| g.row_weight(i) > 0).collect();
        LinearCode::from_generator(&g.select_rows(&nonzero))
    }

    /// Image under `c'_j = scales[j] * c_{perm[j]}`.
    pub fn apply_monomial(&self, perm: &[usize], scales: &[Gf3]) -> Result<LinearCode> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.n).collect::<Vec<_>>() || scales.len() != self.n {
            return Err(Error::InvalidParameters(
                "monomial map needs a permutation of all coordinates".into(),
            ));
        }
        if scales.iter().any(|s| s.is_zero()) {
            return Err(Error::InvalidParameters(
                "monomial scale must be nonzero".into(),
            ));
        }
        let mut h = self.parity_check.select_columns(perm);
        for (j, s) in scales.iter().enumerate() {
            // nonzero elements of GF(3) are self-inverse
            h.scale_column(j, *s);
        }
        LinearCode::from_parity_check(&h)
    }

    /// Minimum distance, picking whichever exact strategy is cheaper.
    pub fn min_distance(&self) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::ZeroDimension);
        }
        if self.k <= 12 || self.k <= self.redundancy() {
            self.min_distance_by_enumeration()
        } else {
            self.min_distance_by_dependent_columns()
        }
    }

    /// Minimum weight over all nonzero codewords (one per scalar class).
    pub fn min_distance_by_enumeration(&self) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::ZeroDimension);
        }
        self.check_enumeration_cap(self.k)?;
        let rows = self.generator.packed_rows()?;
        let mut best = u32::MAX;
        for_each_projective(&rows, |c| {
            best = best.min(c.weight());
            best > 1
        });
        Ok(best as usize)
    }

    /// Size of the smallest linearly dependent set of parity-check columns.
    pub fn min_distance_by_dependent_columns(&self) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::ZeroDimension);
        }
        let cols = self.parity_check.packed_columns()?;
        for w in 1..=self.n {
            if has_dependent_subset(&cols, 0, w, &PackedBasis::new()) {
                return Ok(w);
            }
        }
        unreachable!("n columns of rank n - k < n are dependent")
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        self.weight_distribution_with_cap(ENUMERATION_CAP_K)
    }

    pub fn weight_distribution_with_cap(&self, max_k: usize) -> Result<WeightDistribution> {
        if self.k > max_k {
            return Err(Error::CapExceeded {
                what: "dimension for codeword enumeration",
                value: self.k as u64,
                cap: max_k as u64,
            });
        }
        let rows = self.generator.packed_rows()?;
        let mut counts = vec![0u64; self.n + 1];
        counts[0] = 1;
        for_each_projective(&rows, |c| {
            counts[c.weight() as usize] += 2;
            true
        });
        Ok(WeightDistribution { counts })
    }

    /// All codewords, for `k <= 12` only.
    pub fn codewords(&self) -> Result<Vec<Vec<Gf3>>> {
        if self.k > 12 {
            return Err(Error::CapExceeded {
                what: "dimension for codeword listing",
                value: self.k as u64,
                cap: 12,
            });
        }
        let rows = self.generator.packed_rows()?;
        let mut out = vec![vec![Gf3::ZERO; self.n]];
        for_each_projective(&rows, |c| {
            out.push(c.to_vec(self.n));
            out.push((-c).to_vec(self.n));
            true
        });
        Ok(out)
    }

    pub fn generalized_hamming_weights(&self) -> Result<GhwProfile> {
        if self.k > GHW_CAP_K || self.n > GHW_CAP_N {
            return Err(Error::CapExceeded {
                what: "code size for subspace enumeration",
                value: if self.k > GHW_CAP_K { self.k } else { self.n } as u64,
                cap: if self.k > GHW_CAP_K {
                    GHW_CAP_K
                } else {
                    GHW_CAP_N
                } as u64,
            });
        }
        let rows = self.generator.packed_rows()?;
        let weights = (1..=self.k)
            .map(|i| min_subspace_support(&rows, i, self.n))
            .collect();
        Ok(GhwProfile { weights })
    }

    /// `d_1 = n - k` and `d_i = n - k + i` for `2 <= i <= k`.
    pub fn is_near_mds(&self) -> Result<bool> {
        if self.k == 0 {
            return Ok(false);
        }
        let ghw = self.generalized_hamming_weights()?;
        let m = self.redundancy();
        Ok(ghw.weights[0] == m
            && ghw
                .weights
                .iter()
                .enumerate()
                .skip(1)
                .all(|(i, &d)| d == m + i + 1))
    }

    fn check_coords(&self, coords: &[usize]) -> Result<Vec<usize>> {
        let mut c = coords.to_vec();
        c.sort_unstable();
        c.dedup();
        if let Some(&bad) = c.iter().find(|&&j| j >= self.n) {
            return Err(Error::CoordinateOutOfRange {
                coord: bad,
                len: self.n,
            });
        }
        if c.len() == self.n {
            return Err(Error::InvalidParameters(
                "cannot remove every coordinate".into(),
            ));
        }
        Ok(c)
    }

    fn check_enumeration_cap(&self, k: usize) -> Result<()> {
        if k > ENUMERATION_CAP_K {
            return Err(Error::CapExceeded {
                what: "dimension for codeword enumeration",
                value: k as u64,
                cap: ENUMERATION_CAP_K as u64,
            });
        }
        Ok(())
    }
}

/// Visits one representative of every nonzero scalar class of the span of
/// `rows`: those combinations whose last nonzero coefficient is 1. Stops when
/// `f` returns false; returns false in that case.
pub(crate) fn for_each_projective<F: FnMut(PackedRow) -> bool>(
    rows: &[PackedRow],
    mut f: F,
) -> bool {
    let mut digits = vec![0u8; rows.len()];
    for t in 0..rows.len() {
        let mut v = rows[t];
        if !f(v) {
            return false;
        }
        loop {
            // base-3 counter over digits[..t]; every digit step, wrap
            // included, adds one copy of its row
            let mut j = 0;
            while j < t && digits[j] == 2 {
                digits[j] = 0;
                v = v + rows[j];
                j += 1;
            }
            if j == t {
                break;
            }
            digits[j] += 1;
            v = v + rows[j];
            if !f(v) {
                return false;
            }
        }
    }
    true
}

fn has_dependent_subset(
    cols: &[PackedRow],
    start: usize,
    size: usize,
    basis: &PackedBasis,
) -> bool {
    if size == 1 {
        return cols[start..].iter().any(|&c| basis.contains(c));
    }
    for i in start..cols.len() {
        if cols.len() - i < size {
            break;
        }
        let mut next = basis.clone();
        // a dependent prefix would already have been found at a smaller size
        if !next.insert(cols[i]) {
            continue;
        }
        if has_dependent_subset(cols, i + 1, size - 1, &next) {
            return true;
        }
    }
    false
}

/// Minimum support size over `dim`-dimensional subcodes of the span of `rows`
/// (assumed independent). Subspaces are visited through their reduced
/// echelon coefficient matrices.
fn min_subspace_support(rows: &[PackedRow], dim: usize, n: usize) -> usize {
    let k = rows.len();
    let mut best = n + 1;
    for_each_combination(k, dim, |pivots| {
        let free: Vec<Vec<usize>> = pivots
            .iter()
            .map(|&p| (p + 1..k).filter(|c| !pivots.contains(c)).collect())
            .collect();
        subspace_dfs(rows, pivots, &free, 0, 0, &mut best);
        true
    });
    best
}

fn subspace_dfs(
    rows: &[PackedRow],
    pivots: &[usize],
    free: &[Vec<usize>],
    r: usize,
    union: u64,
    best: &mut usize,
) {
    if union.count_ones() as usize >= *best {
        return;
    }
    if r == pivots.len() {
        *best = union.count_ones() as usize;
        return;
    }
    let cols = &free[r];
    let mut digits = vec![0u8; cols.len()];
    let mut v = rows[pivots[r]];
    loop {
        subspace_dfs(rows, pivots, free, r + 1, union | v.support(), best);
        let mut j = 0;
        while j < cols.len() && digits[j] == 2 {
            digits[j] = 0;
            v = v + rows[cols[j]];
            j += 1;
        }
        if j == cols.len() {
            break;
        }
        digits[j] += 1;
        v = v + rows[cols[j]];
    }
}
