//! Exhaustive search over systematic generator matrices `[I_k | A]`.
//!
//! Every `[n, k]` code is monomially equivalent to a systematic one, and
//! distance and locality are monomial invariants, so scanning all `A` decides
//! existence without trusting any construction. Candidates are indexed by
//! reading the entries of `A` row-major as a base-3 number, most significant
//! digit first.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bounds::singleton_like_d;
use crate::classifier::{classify, ClassVerdict};
use crate::code::for_each_projective;
use crate::combinatorics::checked_pow;
use crate::error::{Error, Result};
use crate::gf3::{Gf3, Gf3Matrix, PackedRow, PACKED_MAX_LEN};

/// `3^16` candidates.
pub const DEFAULT_CAP: u64 = 43_046_721;

const CHUNK: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    FindFirst,
    /// Counts systematic representatives, not equivalence classes.
    CountAll,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchTask {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub target_d: i64,
    pub cap: u64,
    pub mode: SearchMode,
    /// 0 uses the global rayon pool.
    pub workers: usize,
}

impl SearchTask {
    /// Find-first task at the Singleton-like target with the default cap.
    pub fn optimal(n: usize, k: usize, r: usize) -> SearchTask {
        SearchTask {
            n,
            k,
            r,
            target_d: singleton_like_d(n, k, r),
            cap: DEFAULT_CAP,
            mode: SearchMode::FindFirst,
            workers: 0,
        }
    }

    /// `3^(k(n-k))`, the number of candidates, after checking it against the cap.
    pub fn candidate_count(&self) -> Result<u64> {
        if self.k == 0 || self.k >= self.n || self.r == 0 {
            return Err(Error::InvalidParameters(format!(
                "search needs 1 <= k <= n-1 and r >= 1 (got n={}, k={}, r={})",
                self.n, self.k, self.r
            )));
        }
        if self.n > PACKED_MAX_LEN {
            return Err(Error::LengthTooLarge {
                len: self.n,
                max: PACKED_MAX_LEN,
            });
        }
        let exp = (self.k * (self.n - self.k)) as u64;
        match checked_pow(3, exp) {
            Some(count) if count <= self.cap => Ok(count),
            other => Err(Error::CapExceeded {
                what: "systematic candidates",
                value: other.unwrap_or(u64::MAX),
                cap: self.cap,
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub found: bool,
    /// Lexicographically first `[I_k | A]` meeting the targets.
    pub witness: Option<Gf3Matrix>,
    /// Find-first: index of the witness plus one, or all candidates.
    pub examined: u64,
    /// Witnesses counted; at most 1 in find-first mode.
    pub witnesses: u64,
    pub elapsed: Duration,
}

/// Searches for an `[n, k]` code with `d >= target_d` and locality `<= r`.
pub fn exists_optimal_lrc(task: &SearchTask) -> Result<SearchResult> {
    let total = task.candidate_count()?;
    let start = Instant::now();
    let run = || match task.mode {
        SearchMode::FindFirst => find_first(task, total),
        SearchMode::CountAll => count_all(task, total),
    };
    let (first, witnesses) = if task.workers == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(task.workers)
            .build()
            .map_err(|e| Error::InvalidParameters(format!("worker pool: {e}")))?
            .install(run)
    };
    let examined = match (task.mode, first) {
        (SearchMode::FindFirst, Some(idx)) => idx + 1,
        _ => total,
    };
    Ok(SearchResult {
        found: first.is_some(),
        witness: first.map(|idx| systematic_generator(task.n, task.k, idx)),
        examined,
        witnesses,
        elapsed: start.elapsed(),
    })
}

fn find_first(task: &SearchTask, total: u64) -> (Option<u64>, u64) {
    let best = AtomicU64::new(u64::MAX);
    let chunks = total.div_ceil(CHUNK);
    (0..chunks).into_par_iter().for_each(|c| {
        let lo = c * CHUNK;
        if lo >= best.load(Ordering::Relaxed) {
            return;
        }
        let hi = (lo + CHUNK).min(total);
        let mut cand = Candidate::new(task.n, task.k, lo);
        for idx in lo..hi {
            if idx >= best.load(Ordering::Relaxed) {
                return;
            }
            if cand.accepts(task) {
                best.fetch_min(idx, Ordering::Relaxed);
                return;
            }
            cand.advance();
        }
    });
    match best.into_inner() {
        u64::MAX => (None, 0),
        idx => (Some(idx), 1),
    }
}

fn count_all(task: &SearchTask, total: u64) -> (Option<u64>, u64) {
    let chunks = total.div_ceil(CHUNK);
    let per_chunk: Vec<(Option<u64>, u64)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(total);
            let mut cand = Candidate::new(task.n, task.k, lo);
            let mut first = None;
            let mut count = 0;
            for idx in lo..hi {
                if cand.accepts(task) {
                    first.get_or_insert(idx);
                    count += 1;
                }
                cand.advance();
            }
            (first, count)
        })
        .collect();
    let first = per_chunk.iter().find_map(|(f, _)| *f);
    (first, per_chunk.iter().map(|(_, c)| c).sum())
}

/// `[I_k | A]` for the candidate with index `idx`.
pub fn systematic_generator(n: usize, k: usize, idx: u64) -> Gf3Matrix {
    let digits = index_digits(k * (n - k), idx);
    let mut g = Gf3Matrix::zeros(k, n);
    for i in 0..k {
        g.set(i, i, Gf3::ONE);
        for j in 0..n - k {
            g.set(i, k + j, Gf3::new(digits[i * (n - k) + j] as i64));
        }
    }
    g
}

fn index_digits(len: usize, mut idx: u64) -> Vec<u8> {
    let mut digits = vec![0u8; len];
    for d in digits.iter_mut().rev() {
        *d = (idx % 3) as u8;
        idx /= 3;
    }
    digits
}

/// Packed generator and dual generator of the current candidate, updated
/// digit by digit.
struct Candidate {
    n: usize,
    k: usize,
    digits: Vec<u8>,
    gen: Vec<PackedRow>,
    dual: Vec<PackedRow>,
}

impl Candidate {
    fn new(n: usize, k: usize, idx: u64) -> Candidate {
        let m = n - k;
        let digits = index_digits(k * m, idx);
        let mut gen: Vec<PackedRow> = (0..k).map(PackedRow::unit).collect();
        let mut dual: Vec<PackedRow> = (0..m).map(|j| PackedRow::unit(k + j)).collect();
        for i in 0..k {
            for j in 0..m {
                let a = Gf3::new(digits[i * m + j] as i64);
                gen[i].set(k + j, a);
                dual[j].set(i, -a);
            }
        }
        Candidate {
            n,
            k,
            digits,
            gen,
            dual,
        }
    }

    fn advance(&mut self) {
        let m = self.n - self.k;
        for pos in (0..self.digits.len()).rev() {
            let next = (self.digits[pos] + 1) % 3;
            self.digits[pos] = next;
            let (i, j) = (pos / m, pos % m);
            let a = Gf3::new(next as i64);
            self.gen[i].set(self.k + j, a);
            self.dual[j].set(i, -a);
            if next != 0 {
                return;
            }
        }
    }

    fn accepts(&self, task: &SearchTask) -> bool {
        self.distance_at_least(task.target_d) && self.locality_at_most(task.r)
    }

    fn distance_at_least(&self, d: i64) -> bool {
        if d <= 1 {
            return true;
        }
        for_each_projective(&self.gen, |c| i64::from(c.weight()) >= d)
    }

    fn locality_at_most(&self, r: usize) -> bool {
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut covered = 0u64;
        for_each_projective(&self.dual, |c| {
            if c.weight() as usize <= r + 1 {
                covered |= c.support();
            }
            covered != full
        });
        covered == full
    }
}

/// One triple of a grid scan.
#[derive(Clone, Debug)]
pub struct GridRow {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub target_d: i64,
    pub oracle: SearchResult,
    pub verdict: ClassVerdict,
}

impl GridRow {
    pub fn agrees(&self) -> bool {
        self.oracle.found == self.verdict.exists
    }
}

/// Oracle and classifier side by side for every `(n, k, r)` with
/// `1 <= r < k < n <= n_max` whose candidate count fits under `cap`.
pub fn scan_parameter_grid(n_max: usize, cap: u64) -> Result<Vec<GridRow>> {
    let mut rows = Vec::new();
    for n in 3..=n_max {
        for k in 2..n {
            for r in 1..k {
                let task = SearchTask {
                    cap,
                    ..SearchTask::optimal(n, k, r)
                };
                if task.candidate_count().is_err() {
                    continue;
                }
                rows.push(GridRow {
                    n,
                    k,
                    r,
                    target_d: task.target_d,
                    oracle: exists_optimal_lrc(&task)?,
                    verdict: classify(n, k, r)?,
                });
            }
        }
    }
    Ok(rows)
}
