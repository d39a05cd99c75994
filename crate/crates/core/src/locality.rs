//! Exact locality and the locality-row cover of a parity-check matrix.
//!
//! Symbol `i` has locality `r_i` when the lightest dual codeword whose
//! support contains `i` has weight `r_i + 1`. Two routes compute it:
//! a search over repair sets (is column `i` of the generator in the span of
//! `t` other columns?) and a scan of every dual codeword. They must agree.

use crate::code::{for_each_projective, LinearCode};
use crate::error::{Error, Result};
use crate::gf3::{Gf3, Gf3Matrix, PackedBasis, PackedRow};

/// Dual codeword scans are limited to `n - k` at most this.
pub const DUAL_ENUMERATION_CAP: usize = 12;

/// Subset checks the repair-set search may spend on one symbol before it
/// falls back to dual enumeration.
const SUPPORT_SEARCH_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalityProfile {
    per_symbol: Vec<usize>,
    code_locality: usize,
}

impl LocalityProfile {
    pub fn per_symbol(&self) -> &[usize] {
        &self.per_symbol
    }

    pub fn code_locality(&self) -> usize {
        self.code_locality
    }
}

/// Parity-check rows split into locality rows `h1` and the rest `h2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverMatrix {
    pub h1: Gf3Matrix,
    pub h2: Gf3Matrix,
    pub l: usize,
}

impl CoverMatrix {
    pub fn stacked(&self) -> Gf3Matrix {
        self.h1.vstack(&self.h2).expect("cover rows share a width")
    }

    pub fn u(&self) -> usize {
        self.h2.rows()
    }

    /// `ceil(k/r) <= ceil(n/(r+1)) <= l <= n - k`.
    pub fn satisfies_row_count_chain(&self, n: usize, k: usize, r: usize) -> bool {
        let a = k.div_ceil(r);
        let b = n.div_ceil(r + 1);
        a <= b && b <= self.l && self.l <= n - k
    }
}

/// Exact locality of coordinate `i` (0-based).
pub fn symbol_locality(code: &LinearCode, i: usize) -> Result<usize> {
    if i >= code.n() {
        return Err(Error::CoordinateOutOfRange {
            coord: i,
            len: code.n(),
        });
    }
    match symbol_locality_by_repair_search(code, i, SUPPORT_SEARCH_BUDGET) {
        Err(Error::CapExceeded { .. }) if code.redundancy() <= DUAL_ENUMERATION_CAP => {
            locality_by_dual_enumeration(code)?[i].ok_or(Error::NoLocality(i))
        }
        other => other,
    }
}

/// Smallest `t` such that generator column `i` lies in the span of `t`
/// other generator columns. Gives up with `CapExceeded` after `budget`
/// subset checks.
pub fn symbol_locality_by_repair_search(code: &LinearCode, i: usize, budget: u64) -> Result<usize> {
    if code.redundancy() == 0 {
        return Err(Error::NoLocality(i));
    }
    let cols = code.generator().packed_columns()?;
    let target = cols[i];
    let others: Vec<PackedRow> = cols
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, c)| *c)
        .collect();

    let mut all = PackedBasis::new();
    for c in &others {
        all.insert(*c);
    }
    if !all.contains(target) {
        return Err(Error::NoLocality(i));
    }

    let mut spent = 0u64;
    for t in 0..=others.len() {
        if repair_set_exists(
            &others,
            target,
            0,
            t,
            &PackedBasis::new(),
            &mut spent,
            budget,
        )? {
            return Ok(t);
        }
    }
    unreachable!("target lies in the span of all other columns")
}

fn repair_set_exists(
    cols: &[PackedRow],
    target: PackedRow,
    start: usize,
    remaining: usize,
    basis: &PackedBasis,
    spent: &mut u64,
    budget: u64,
) -> Result<bool> {
    *spent += 1;
    if *spent > budget {
        return Err(Error::CapExceeded {
            what: "repair-set search steps",
            value: *spent,
            cap: budget,
        });
    }
    if remaining == 0 {
        return Ok(basis.contains(target));
    }
    for j in start..cols.len() {
        if cols.len() - j < remaining {
            break;
        }
        let mut next = basis.clone();
        // minimal repair sets are independent
        if !next.insert(cols[j]) {
            continue;
        }
        if repair_set_exists(cols, target, j + 1, remaining - 1, &next, spent, budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Per-symbol locality from a scan of all dual codewords; `None` marks a
/// coordinate no dual codeword covers.
pub fn locality_by_dual_enumeration(code: &LinearCode) -> Result<Vec<Option<usize>>> {
    check_dual_cap(code)?;
    let rows = code.parity_check().packed_rows()?;
    let mut best: Vec<Option<usize>> = vec![None; code.n()];
    for_each_projective(&rows, |c| {
        let w = c.weight() as usize;
        let mut s = c.support();
        while s != 0 {
            let j = s.trailing_zeros() as usize;
            s &= s - 1;
            if best[j].is_none_or(|b| w - 1 < b) {
                best[j] = Some(w - 1);
            }
        }
        true
    });
    Ok(best)
}

/// Exact locality of every symbol and their maximum.
pub fn code_locality(code: &LinearCode) -> Result<LocalityProfile> {
    let per_symbol: Vec<usize> =
        if code.redundancy() <= DUAL_ENUMERATION_CAP && code.n() <= crate::gf3::PACKED_MAX_LEN {
            locality_by_dual_enumeration(code)?
                .into_iter()
                .enumerate()
                .map(|(i, r)| r.ok_or(Error::NoLocality(i)))
                .collect::<Result<_>>()?
        } else {
            (0..code.n())
                .map(|i| symbol_locality(code, i))
                .collect::<Result<_>>()?
        };
    let code_locality = per_symbol.iter().copied().max().unwrap_or(0);
    Ok(LocalityProfile {
        per_symbol,
        code_locality,
    })
}

/// Greedy locality-row cover: for the first uncovered coordinate take the
/// lightest dual codeword of weight at most `r + 1` covering it (ties go to
/// the lexicographically smallest support, then coefficient vector), until
/// every coordinate is covered. The remaining rank is filled from the
/// reduced parity-check rows in order.
pub fn build_cover_matrix(code: &LinearCode, r: usize) -> Result<CoverMatrix> {
    let profile = code_locality(code)?;
    if let Some((i, &ri)) = profile
        .per_symbol
        .iter()
        .enumerate()
        .find(|(_, &ri)| ri > r)
    {
        return Err(Error::LocalityExceeded {
            coord: i,
            locality: ri,
            target: r,
        });
    }
    check_dual_cap(code)?;
    let n = code.n();
    let rows = code.parity_check().packed_rows()?;

    // (weight, support, entries) for every light dual codeword, both scalings
    let mut light: Vec<(u32, Vec<usize>, Vec<Gf3>)> = Vec::new();
    for_each_projective(&rows, |c| {
        if c.weight() as usize <= r + 1 {
            let support: Vec<usize> = (0..n).filter(|&j| c.support() >> j & 1 == 1).collect();
            light.push((c.weight(), support.clone(), c.to_vec(n)));
            light.push((c.weight(), support, (-c).to_vec(n)));
        }
        true
    });
    light.sort();

    let mut covered = vec![false; n];
    let mut h1_rows: Vec<Vec<Gf3>> = Vec::new();
    while let Some(i) = covered.iter().position(|c| !c) {
        let (_, support, entries) = light
            .iter()
            .find(|(_, s, _)| s.contains(&i))
            .expect("locality <= r guarantees a covering row");
        for &j in support {
            covered[j] = true;
        }
        h1_rows.push(entries.clone());
    }
    let h1 = Gf3Matrix::from_rows(&h1_rows, n)?;

    let mut basis = PackedBasis::new();
    for row in h1.packed_rows()? {
        basis.insert(row);
    }
    let reduced = code.parity_check().rref();
    let mut h2_rows = Vec::new();
    for (row, packed) in reduced.row_iter().zip(reduced.packed_rows()?) {
        if basis.insert(packed) {
            h2_rows.push(row.to_vec());
        }
    }
    let h2 = Gf3Matrix::from_rows(&h2_rows, n)?;
    Ok(CoverMatrix {
        l: h1.rows(),
        h1,
        h2,
    })
}

/// Locality rows pairwise disjoint, each of weight exactly `r + 1`.
pub fn check_disjoint_uniform(cover: &CoverMatrix, r: usize) -> bool {
    let mut seen = vec![false; cover.h1.cols()];
    for i in 0..cover.h1.rows() {
        let support = cover.h1.row_support(i);
        if support.len() != r + 1 {
            return false;
        }
        for j in support {
            if std::mem::replace(&mut seen[j], true) {
                return false;
            }
        }
    }
    true
}

fn check_dual_cap(code: &LinearCode) -> Result<()> {
    if code.redundancy() > DUAL_ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "redundancy for dual enumeration",
            value: code.redundancy() as u64,
            cap: DUAL_ENUMERATION_CAP as u64,
        });
    }
    Ok(())
}
