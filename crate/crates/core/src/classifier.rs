//! Decides, for `(n, k, r)`, which class of optimal ternary LRC meets
//! `d = n - k - ceil(k/r) + 2`, or reports the bound that rules it out.
//!
//! The exclusion path mirrors the structural argument: delete `ceil(k/r) - 1`
//! locality rows and the columns they cover; the residual code must be a
//! ternary MDS code, i.e. `[n', n'-1, 2]`, `[4,2,3]` or `[d, 1, d]`, and
//! each of those branches is cut down by counting, Plotkin and packing
//! bounds.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::bounds::{
    big_rational_from, int, locality_row_packing_bound, plotkin_bound, shortening_chain_bound,
    singleton_like_d, BoundKind, BoundReport, ChainBound,
};
use crate::constructions::{OptimalClass, NEAR_MDS_PARAMS};
use crate::error::{Error, Result};

/// Fallback explanation when no single bound in the case analysis fires.
pub const ENUMERATION_EXCLUSION: &str = "excluded by the optimal-class enumeration";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassVerdict {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub target_d: i64,
    pub matches: BTreeSet<OptimalClass>,
    pub exists: bool,
    /// Violated bounds, in the order the case analysis meets them. Empty
    /// when `exists`.
    pub explanation: Vec<BoundReport>,
    pub note: Option<&'static str>,
}

impl ClassVerdict {
    pub fn class_ids(&self) -> Vec<u8> {
        self.matches.iter().map(|c| c.id()).collect()
    }
}

impl fmt::Display for ClassVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exists {
            let ids: Vec<String> = self.class_ids().iter().map(|c| c.to_string()).collect();
            write!(f, "class {}, d={}, exists", ids.join("+"), self.target_d)
        } else {
            write!(f, "no class, d_target={}, does not exist", self.target_d)
        }
    }
}

/// Classifies `(n, k, r)`; requires `1 <= r <= k - 1` and `k <= n - 1`.
pub fn classify(n: usize, k: usize, r: usize) -> Result<ClassVerdict> {
    if !(r >= 1 && r < k && k < n) {
        return Err(Error::InvalidParameters(format!(
            "classification needs 1 <= r <= k-1 and k <= n-1 (got n={n}, k={k}, r={r})"
        )));
    }
    let target_d = singleton_like_d(n, k, r);
    let matches = matching_classes(n, k, r);
    let exists = !matches.is_empty();
    let (explanation, note) = if exists {
        (Vec::new(), None)
    } else {
        let violated: Vec<BoundReport> = case_analysis(n, k, r, target_d)
            .into_iter()
            .filter(|b| !b.satisfied)
            .collect();
        let note = violated.is_empty().then_some(ENUMERATION_EXCLUSION);
        (violated, note)
    };
    Ok(ClassVerdict {
        n,
        k,
        r,
        target_d,
        matches,
        exists,
        explanation,
        note,
    })
}

/// Every class whose formula reproduces `(n, k, r)`.
pub fn matching_classes(n: usize, k: usize, r: usize) -> BTreeSet<OptimalClass> {
    let mut out = BTreeSet::new();
    if r >= 1 && k > r && n == k + k.div_ceil(r) {
        out.insert(OptimalClass::SingleParityBlocks { k, r });
    }
    if (9..=13).contains(&n) {
        let g = 13 - n;
        if k + g == 10 && r + g == 8 {
            out.insert(OptimalClass::ShortenedHamming { g });
        }
    }
    if r == 1 && k >= 2 && n == 2 * k + 2 {
        out.insert(OptimalClass::PairedRepetition { k });
    }
    if (n, k, r) == (8, 2, 1) {
        out.insert(OptimalClass::Length8Distance6);
    }
    if k >= 1 && r + 1 == k && NEAR_MDS_PARAMS.contains(&(n, k)) {
        out.insert(OptimalClass::NearMds { n, k });
    }
    if r == 3 && n.is_multiple_of(4) && n / 4 >= 3 && k + 2 == 3 * (n / 4) {
        out.insert(OptimalClass::WeightFourBlocks { l: n / 4 });
    }
    if r == 2 && n.is_multiple_of(3) && n / 3 >= 3 && k + 1 == 2 * (n / 3) {
        out.insert(OptimalClass::WeightThreeBlocks { l: n / 3 });
    }
    if (n, k, r) == (12, 5, 2) {
        out.insert(OptimalClass::Length12Distance6);
    }
    out
}

fn ii(v: usize) -> i64 {
    v as i64
}

/// Bound reports along the structural case analysis for `(n, k, r)`.
/// Satisfied reports are kept so callers can see how far a triple got.
pub fn case_analysis(n: usize, k: usize, r: usize, d: i64) -> Vec<BoundReport> {
    let mut out = Vec::new();
    let blocks = k.div_ceil(r);

    let row_count = BoundReport::lower(
        BoundKind::LocalityRowCount,
        vec![("n", ii(n)), ("k", ii(k)), ("r", ii(r))],
        int(ii(blocks)),
        int(ii(n - k)),
    );
    let enough_rows = row_count.satisfied;
    out.push(row_count);
    if !enough_rows || d <= 2 {
        return out;
    }

    // columns left after deleting ceil(k/r)-1 locality rows, minus what
    // the residual code needs
    let slack = ii(k) - ii(blocks * r) + ii(r);
    let inputs = || vec![("n", ii(n)), ("k", ii(k)), ("r", ii(r))];

    if d == 3 {
        let cols = BoundReport::upper(BoundKind::MdsResidualColumns, inputs(), int(2), int(slack));
        let loc = BoundReport::lower(BoundKind::MdsResidualLocality, inputs(), int(4), int(ii(r)));
        let go_on = cols.satisfied && loc.satisfied;
        out.push(cols);
        out.push(loc);
        if go_on {
            let single_row = BoundReport::condition(
                BoundKind::MdsResidualRemainder,
                inputs(),
                slack == 2 && blocks == 2,
            );
            let ok = single_row.satisfied;
            out.push(single_row);
            if ok {
                out.push(BoundReport::upper(
                    BoundKind::PairwiseIndependentColumns,
                    vec![("n", ii(n))],
                    int(13),
                    int(ii(n)),
                ));
            }
        }
    }

    let rep = BoundReport::upper(
        BoundKind::RepetitionResidualColumns,
        inputs(),
        int(1),
        int(slack),
    );
    let rep_ok = rep.satisfied;
    out.push(rep);
    if !rep_ok {
        return out;
    }

    if k.is_multiple_of(r) {
        // forces r = 1 and n = 2l
        let disjoint = BoundReport::condition(
            BoundKind::DisjointLocalityRows,
            inputs(),
            n.is_multiple_of(2),
        );
        let ok = disjoint.satisfied;
        out.push(disjoint);
        if !ok {
            return out;
        }
        let l = n / 2;
        if l <= k {
            return out;
        }
        let excess = l - k;
        let n_star = 2 * (excess + 2);
        out.push(BoundReport::upper(
            BoundKind::Plotkin,
            vec![("n", ii(n_star)), ("M", 9), ("d", d)],
            plotkin_bound(n_star as u64, &BigUint::from(9u32)).expect("M > 1"),
            int(d),
        ));
        if excess == 2 {
            out.push(packing_report(l, n - k - l, r));
        }
        return out;
    }

    let s = blocks - 1;
    if s == 1 {
        out.push(BoundReport::condition(
            BoundKind::NearMdsRange,
            vec![("n", ii(n)), ("k", ii(k))],
            (3..=6).contains(&k) && (3..=6).contains(&(n - k)) && n <= 12,
        ));
        return out;
    }

    let disjoint = BoundReport::condition(
        BoundKind::DisjointLocalityRows,
        inputs(),
        n.is_multiple_of(r + 1),
    );
    let ok = disjoint.satisfied;
    out.push(disjoint);
    if !ok {
        return out;
    }
    let l = n / (r + 1);
    if l <= s {
        return out;
    }
    let gap = l - s;
    let m = BigUint::from(3u32).pow(r as u32 + 1);
    let n_star = (gap + 1) * (r + 1);
    let plotkin = BoundReport::upper(
        BoundKind::Plotkin,
        vec![
            ("n", ii(n_star)),
            ("M", 3i64.saturating_pow(r as u32 + 1)),
            ("d", d),
        ],
        plotkin_bound(n_star as u64, &m).expect("M > 1"),
        int(d),
    );
    let ok = plotkin.satisfied;
    out.push(plotkin);
    if !ok || gap > 2 {
        return out;
    }

    // residual [gap(r+1)+..] code of dimension r+1 and distance gap(r+1)
    let d_star = (gap * (r + 1)) as u64;
    let len = if gap == 1 { 2 * d_star } else { 3 * d_star / 2 };
    let chain = shortening_chain_bound(len, d_star);
    if let ChainBound::AtMost(bound) = chain {
        let chain_report = BoundReport::upper(
            BoundKind::ShorteningChain,
            vec![("n", len as i64), ("d", d_star as i64)],
            big_rational_from(&bound),
            big_rational_from(&m),
        );
        let ok = chain_report.satisfied;
        out.push(chain_report);
        if !ok {
            return out;
        }
    }
    if d >= 5 {
        out.push(packing_report(l, n - k - l, r));
    }
    out
}

fn packing_report(l: usize, u: usize, r: usize) -> BoundReport {
    BoundReport::upper(
        BoundKind::LocalityRowPacking,
        vec![("q", 3), ("u", ii(u)), ("r", ii(r))],
        locality_row_packing_bound(3, u as u32, r as u64),
        int(ii(l)),
    )
}
