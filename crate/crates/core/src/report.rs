//! Verification reports for a parity-check matrix and the table of the
//! eight optimal classes.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::bounds::{int, plotkin_bound, singleton_like_d, BoundKind, BoundReport};
use crate::classifier::{classify, ClassVerdict};
use crate::code::LinearCode;
use crate::constructions::{construct, table_instances, CodeParams, OptimalClass};
use crate::error::Result;
use crate::gf3::Gf3Matrix;
use crate::locality::code_locality;

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Per-symbol locality, coordinate `i + 1` at index `i`.
    pub locality: Vec<usize>,
    pub r_exact: usize,
    pub r_declared: Option<usize>,
    /// Singleton-like target at `r_exact`; `None` when `r_exact = 0`.
    pub target_d: Option<i64>,
    pub target_d_declared: Option<i64>,
    pub optimal: bool,
    /// `None` when `(n, k, r_exact)` is outside the classifier's domain.
    pub verdict: Option<ClassVerdict>,
    pub bounds: Vec<BoundReport>,
    pub elapsed: Duration,
}

/// Verifies the code with parity-check matrix `h`.
pub fn verify_parity_check(h: &Gf3Matrix, r_declared: Option<usize>) -> Result<VerificationReport> {
    let start = Instant::now();
    let code = LinearCode::from_parity_check(h)?;
    verify_code(&code, r_declared, start)
}

pub fn verify(code: &LinearCode, r_declared: Option<usize>) -> Result<VerificationReport> {
    verify_code(code, r_declared, Instant::now())
}

fn verify_code(
    code: &LinearCode,
    r_declared: Option<usize>,
    start: Instant,
) -> Result<VerificationReport> {
    let (n, k) = (code.n(), code.k());
    let d = code.min_distance()?;
    let profile = code_locality(code)?;
    let r_exact = profile.code_locality();
    let target = |r: usize| (r >= 1).then(|| singleton_like_d(n, k, r));
    let target_d = target(r_exact);
    let target_d_declared = r_declared.and_then(target);
    let optimal = target_d == Some(d as i64);
    let verdict = classify(n, k, r_exact).ok();

    let mut bounds = Vec::new();
    if let Some(t) = target_d {
        bounds.push(BoundReport::upper(
            BoundKind::SingletonLike,
            vec![("n", n as i64), ("k", k as i64), ("r", r_exact as i64)],
            int(t),
            int(d as i64),
        ));
    }
    let m = BigUint::from(3u32).pow(k as u32);
    if let Ok(p) = plotkin_bound(n as u64, &m) {
        bounds.push(BoundReport::upper(
            BoundKind::Plotkin,
            vec![("n", n as i64), ("k", k as i64)],
            p,
            int(d as i64),
        ));
    }

    Ok(VerificationReport {
        n,
        k,
        d,
        locality: profile.per_symbol().to_vec(),
        r_exact,
        r_declared,
        target_d,
        target_d_declared,
        optimal,
        verdict,
        bounds,
        elapsed: start.elapsed(),
    })
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "-".to_string(), |x| x.to_string())
}

impl VerificationReport {
    /// Class ids of the triple `(n, k, r_exact)`, `"none"` or `"-"`.
    pub fn class_label(&self) -> String {
        match &self.verdict {
            None => "-".into(),
            Some(v) if v.matches.is_empty() => "none".into(),
            Some(v) => v
                .class_ids()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join("+"),
        }
    }

    /// `key=value` lines in a fixed order, `elapsed_ms` last.
    pub fn to_kv(&self) -> String {
        let locality: Vec<String> = self.locality.iter().map(|r| r.to_string()).collect();
        let mut lines = vec![
            format!("n={}", self.n),
            format!("k={}", self.k),
            format!("d={}", self.d),
            format!("locality={}", locality.join(",")),
            format!("r={}", self.r_exact),
            format!("r_declared={}", opt(&self.r_declared)),
            format!("target_d={}", opt(&self.target_d)),
            format!("target_d_declared={}", opt(&self.target_d_declared)),
            format!("optimal={}", self.optimal),
            format!("class={}", self.class_label()),
        ];
        for b in &self.bounds {
            lines.push(format!("bound.{}={}", b.name(), b));
        }
        lines.push(format!("elapsed_ms={}", self.elapsed.as_millis()));
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "code: [{}, {}, {}]", self.n, self.k, self.d)?;
        let locality: Vec<String> = self.locality.iter().map(|r| r.to_string()).collect();
        writeln!(f, "locality per symbol: {}", locality.join(" "))?;
        writeln!(f, "code locality: {}", self.r_exact)?;
        if let Some(r) = self.r_declared {
            writeln!(
                f,
                "declared locality: {r} (target d = {})",
                opt(&self.target_d_declared)
            )?;
        }
        writeln!(f, "target d at exact locality: {}", opt(&self.target_d))?;
        writeln!(f, "optimal: {}", self.optimal)?;
        match &self.verdict {
            Some(v) => writeln!(f, "class: {} ({v})", self.class_label())?,
            None => writeln!(f, "class: - (outside 1 <= r <= k-1)")?,
        }
        for b in &self.bounds {
            writeln!(f, "bound: {b}")?;
        }
        write!(f, "elapsed: {} ms", self.elapsed.as_millis())
    }
}

/// One row of the class table: what the class promises and what was measured.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub class: OptimalClass,
    pub expected: CodeParams,
    pub measured: CodeParams,
    pub optimal: bool,
}

impl TableRow {
    pub fn verified(&self) -> bool {
        self.optimal && self.expected == self.measured
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.measured;
        write!(
            f,
            "{:<22} n={:<2} k={:<2} r={} d={}  optimal: {}",
            self.class.to_string(),
            m.n,
            m.k,
            m.r,
            m.d,
            self.optimal
        )
    }
}

/// Constructs and verifies every table instance.
pub fn class_table() -> Result<Vec<TableRow>> {
    table_instances()
        .into_iter()
        .map(|class| {
            let code = construct(&class)?;
            let rep = verify(&code, None)?;
            Ok(TableRow {
                class,
                expected: class.params(),
                measured: CodeParams {
                    n: rep.n,
                    k: rep.k,
                    d: rep.d,
                    r: rep.r_exact,
                },
                optimal: rep.optimal,
            })
        })
        .collect()
}
