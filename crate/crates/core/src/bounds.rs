//! Exact bounds on ternary code parameters.
//!
//! Every value is an exact rational so comparisons against integer
//! parameters never depend on rounding.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Which formula a [`BoundReport`] evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundKind {
    /// `d <= n - k - ceil(k/r) + 2`.
    SingletonLike,
    /// `ceil(k/r) <= l <= n - k`: enough redundancy for the locality rows.
    LocalityRowCount,
    /// `d <= 2nM / (3(M - 1))`.
    Plotkin,
    /// `l <= (q^u - 1) / ((q - 1) * C(r+1, 2))` for disjoint uniform rows
    /// when any 4 columns are independent.
    LocalityRowPacking,
    /// `M_3(n, d) <= 3^(n - seed) * M_3(seed, d)`.
    ShorteningChain,
    /// Residual code after deleting `ceil(k/r) - 1` locality rows must be a
    /// repetition code: `k - ceil(k/r) r + r <= 1`.
    RepetitionResidualColumns,
    /// Residual `[4,2,3]` code: `k - ceil(k/r) r + r <= 2`.
    MdsResidualColumns,
    /// Residual `[4,2,3]` code forces `r >= 4`.
    MdsResidualLocality,
    /// Pairwise independent columns of a 3-row parity-check matrix: `n <= 13`.
    PairwiseIndependentColumns,
    /// Locality rows must be disjoint: `(r + 1) | n`.
    DisjointLocalityRows,
    /// Near-MDS ternary codes: `3 <= k <= 6`, `3 <= n - k <= 6`, `n <= 12`.
    NearMdsRange,
    /// Residual `[4,2,3]` code with `t = 1` contradicts locality `r`.
    MdsResidualRemainder,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::SingletonLike => "singleton_like",
            BoundKind::LocalityRowCount => "locality_row_count",
            BoundKind::Plotkin => "plotkin",
            BoundKind::LocalityRowPacking => "locality_row_packing",
            BoundKind::ShorteningChain => "shortening_chain",
            BoundKind::RepetitionResidualColumns => "repetition_residual_columns",
            BoundKind::MdsResidualColumns => "mds_residual_columns",
            BoundKind::MdsResidualLocality => "mds_residual_locality",
            BoundKind::PairwiseIndependentColumns => "pairwise_independent_columns",
            BoundKind::DisjointLocalityRows => "disjoint_locality_rows",
            BoundKind::NearMdsRange => "near_mds_range",
            BoundKind::MdsResidualRemainder => "mds_residual_remainder",
        }
    }
}

/// One evaluated bound: `observed` is compared against the formula `value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub inputs: Vec<(&'static str, i64)>,
    pub value: BigRational,
    pub observed: BigRational,
    pub satisfied: bool,
}

impl BoundReport {
    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    /// `observed <= value`.
    pub fn upper(
        kind: BoundKind,
        inputs: Vec<(&'static str, i64)>,
        value: BigRational,
        observed: BigRational,
    ) -> BoundReport {
        let satisfied = observed <= value;
        BoundReport {
            kind,
            inputs,
            value,
            observed,
            satisfied,
        }
    }

    /// `observed >= value`.
    pub fn lower(
        kind: BoundKind,
        inputs: Vec<(&'static str, i64)>,
        value: BigRational,
        observed: BigRational,
    ) -> BoundReport {
        let satisfied = observed >= value;
        BoundReport {
            kind,
            inputs,
            value,
            observed,
            satisfied,
        }
    }

    /// A yes/no condition reported as 1/0 against the value 1.
    pub fn condition(
        kind: BoundKind,
        inputs: Vec<(&'static str, i64)>,
        holds: bool,
    ) -> BoundReport {
        BoundReport {
            kind,
            inputs,
            value: int(1),
            observed: int(holds as i64),
            satisfied: holds,
        }
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inputs: Vec<String> = self
            .inputs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(
            f,
            "{}({}) value={} observed={} {}",
            self.name(),
            inputs.join(","),
            self.value,
            self.observed,
            if self.satisfied {
                "satisfied"
            } else {
                "violated"
            }
        )
    }
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `n - k - ceil(k/r) + 2`.
///
/// # Panics
/// If `r == 0`.
pub fn singleton_like_d(n: usize, k: usize, r: usize) -> i64 {
    assert!(r >= 1, "locality must be positive");
    n as i64 - k as i64 - k.div_ceil(r) as i64 + 2
}

/// `2nM / (3(M - 1))`, the largest distance a ternary code of length `n`
/// with `M` codewords can have.
pub fn plotkin_bound(n: u64, m: &BigUint) -> Result<BigRational> {
    if *m <= BigUint::one() {
        return Err(Error::InvalidParameters(
            "Plotkin bound needs at least two codewords".into(),
        ));
    }
    let m = BigInt::from(m.clone());
    Ok(BigRational::new(
        BigInt::from(2 * n) * &m,
        BigInt::from(3) * (m - 1),
    ))
}

pub fn plotkin_feasible(n: u64, m: &BigUint, d: u64) -> Result<bool> {
    Ok(int(d as i64) <= plotkin_bound(n, m)?)
}

/// `(q^u - 1) / ((q - 1) * C(r+1, 2))`: with `l` disjoint weight-`(r+1)`
/// locality rows and `u` further rows, pairwise differences of columns inside
/// a locality row must stay pairwise independent when any 4 columns are.
pub fn locality_row_packing_bound(q: u64, u: u32, r: u64) -> BigRational {
    let num = BigInt::from(q).pow(u) - 1;
    let pairs = (r + 1) * r / 2;
    BigRational::new(num, BigInt::from((q - 1) * pairs))
}

/// Result of [`shortening_chain_bound`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainBound {
    NoBound,
    AtMost(BigUint),
}

/// Length at which the Plotkin seed of the chain sits, with its size bound:
/// `(3d/2, 9d/2)` for even `d`, `((3d-1)/2, 3d)` for odd `d`.
pub fn chain_seed(d: u64) -> (u64, u64) {
    if d.is_multiple_of(2) {
        (3 * d / 2, 9 * d / 2)
    } else {
        ((3 * d - 1) / 2, 3 * d)
    }
}

/// Upper bound on `M_3(n, d)` from `M_3(n, d) <= 3 M_3(n - 1, d)` iterated
/// down to the Plotkin seed.
pub fn shortening_chain_bound(n: u64, d: u64) -> ChainBound {
    let (seed_len, seed_size) = chain_seed(d);
    if n < seed_len || d == 0 {
        return ChainBound::NoBound;
    }
    let exp = u32::try_from(n - seed_len).expect("length fits in u32");
    ChainBound::AtMost(BigUint::from(3u32).pow(exp) * seed_size)
}

/// True iff a ternary MDS code with these parameters can exist:
/// `[n,1,n]`, `[n,n-1,2]` or `[4,2,3]`.
pub fn ternary_mds_admissible(n: usize, k: usize) -> bool {
    k == 1 || k + 1 == n || (n, k) == (4, 2)
}

pub fn big_rational_from(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

/// Approximate value for display.
pub fn approx(v: &BigRational) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}
