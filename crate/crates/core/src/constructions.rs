//! Parity-check matrices for one optimal ternary LRC per parameter point of
//! each of the eight classes meeting `d = n - k - ceil(k/r) + 2`.

use std::fmt;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf3::Gf3Matrix;
use crate::locality::code_locality;

/// The `[4,2,3]` ternary MDS code.
pub const MDS_4_2_3: [[u8; 4]; 2] = [[0, 1, 1, 1], [1, 0, 1, 2]];

/// Ternary Hamming code of redundancy 3, columns ordered so that deleting the
/// first `g` columns keeps it optimal at locality `8 - g`.
pub const HAMMING_13_10: [[u8; 13]; 3] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0],
    [1, 1, 2, 2, 2, 1, 0, 0, 0, 0, 1, 1, 1],
    [1, 2, 1, 2, 0, 0, 1, 2, 0, 1, 0, 1, 2],
];

/// The `(8,2,1)` code with `d = 6`.
pub const PAIRED_8_2: [[u8; 8]; 6] = [
    [1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [0, 1, 0, 1, 0, 1, 0, 0],
    [0, 2, 0, 1, 0, 0, 0, 1],
];

/// Extended ternary `[11,6,5]` quadratic residue code: `[12,6,6]`, locality 5.
pub const EXTENDED_QR_12_6: [[u8; 12]; 6] = [
    [1, 2, 2, 1, 2, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 1, 1],
    [0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 2, 1, 0, 0, 0, 0, 1, 2, 2],
    [0, 0, 0, 2, 0, 1, 0, 1, 0, 2, 1, 2],
    [0, 0, 0, 1, 2, 1, 0, 0, 1, 0, 2, 2],
];

/// The `(12,5,2)` code with `d = 6`.
pub const LENGTH12_DISTANCE6: [[u8; 12]; 7] = [
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
    [0, 2, 1, 0, 2, 1, 0, 2, 1, 0, 0, 0],
    [0, 0, 2, 0, 2, 2, 0, 2, 0, 0, 1, 0],
    [0, 1, 1, 0, 1, 0, 0, 2, 0, 0, 0, 1],
];

/// `[n, k]` of the sixteen ternary near-MDS codes that are optimal LRCs with
/// locality `k - 1`.
pub const NEAR_MDS_PARAMS: [(usize, usize); 16] = [
    (12, 6),
    (11, 6),
    (11, 5),
    (10, 6),
    (10, 5),
    (10, 4),
    (9, 6),
    (9, 5),
    (9, 4),
    (9, 3),
    (8, 5),
    (8, 4),
    (8, 3),
    (7, 4),
    (7, 3),
    (6, 3),
];

const NEAR_MDS_FIXTURE: &str = include_str!("../fixtures/near_mds_steps.txt");

/// `(n, k, d, r)` of a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub r: usize,
}

/// One parameter point of one of the eight classes of optimal ternary LRCs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OptimalClass {
    /// Class 1: `(k + ceil(k/r), k, r)`, `d = 2`.
    SingleParityBlocks { k: usize, r: usize },
    /// Class 2: `(13 - g, 10 - g, 8 - g)`, `d = 3`.
    ShortenedHamming { g: usize },
    /// Class 3: `(2k + 2, k, 1)`, `d = 4`.
    PairedRepetition { k: usize },
    /// Class 4: `(8, 2, 1)`, `d = 6`.
    Length8Distance6,
    /// Class 5: `(n, k, k - 1)`, `d = n - k`, `[n, k]` near-MDS.
    NearMds { n: usize, k: usize },
    /// Class 6: `(4l, 3l - 2, 3)`, `d = 4`.
    WeightFourBlocks { l: usize },
    /// Class 7: `(3l, 2l - 1, 2)`, `d = 3`.
    WeightThreeBlocks { l: usize },
    /// Class 8: `(12, 5, 2)`, `d = 6`.
    Length12Distance6,
}

impl OptimalClass {
    pub fn id(&self) -> u8 {
        match self {
            OptimalClass::SingleParityBlocks { .. } => 1,
            OptimalClass::ShortenedHamming { .. } => 2,
            OptimalClass::PairedRepetition { .. } => 3,
            OptimalClass::Length8Distance6 => 4,
            OptimalClass::NearMds { .. } => 5,
            OptimalClass::WeightFourBlocks { .. } => 6,
            OptimalClass::WeightThreeBlocks { .. } => 7,
            OptimalClass::Length12Distance6 => 8,
        }
    }

    /// Checks the class parameter ranges.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        match *self {
            OptimalClass::SingleParityBlocks { k, r } if !(r >= 1 && k > r) => {
                bad(format!("class 1 needs k > r >= 1 (got k={k}, r={r})"))
            }
            OptimalClass::ShortenedHamming { g } if g > 4 => {
                bad(format!("class 2 needs 0 <= g <= 4 (got g={g})"))
            }
            OptimalClass::PairedRepetition { k } if k < 2 => {
                bad(format!("class 3 needs k >= 2 (got k={k})"))
            }
            OptimalClass::NearMds { n, k } if !NEAR_MDS_PARAMS.contains(&(n, k)) => bad(format!(
                "class 5 needs [n,k] among the 16 near-MDS parameters (got [{n},{k}])"
            )),
            OptimalClass::WeightFourBlocks { l } if l < 3 => {
                bad(format!("class 6 needs l >= 3 (got l={l})"))
            }
            OptimalClass::WeightThreeBlocks { l } if l < 3 => {
                bad(format!("class 7 needs l >= 3 (got l={l})"))
            }
            _ => Ok(()),
        }
    }

    /// The `(n, k, d, r)` the class formula promises.
    pub fn params(&self) -> CodeParams {
        let p = |n, k, d, r| CodeParams { n, k, d, r };
        match *self {
            OptimalClass::SingleParityBlocks { k, r } => p(k + k.div_ceil(r), k, 2, r),
            OptimalClass::ShortenedHamming { g } => p(13 - g, 10 - g, 3, 8 - g),
            OptimalClass::PairedRepetition { k } => p(2 * k + 2, k, 4, 1),
            OptimalClass::Length8Distance6 => p(8, 2, 6, 1),
            OptimalClass::NearMds { n, k } => p(n, k, n - k, k - 1),
            OptimalClass::WeightFourBlocks { l } => p(4 * l, 3 * l - 2, 4, 3),
            OptimalClass::WeightThreeBlocks { l } => p(3 * l, 2 * l - 1, 3, 2),
            OptimalClass::Length12Distance6 => p(12, 5, 6, 2),
        }
    }
}

impl fmt::Display for OptimalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OptimalClass::SingleParityBlocks { k, r } => write!(f, "class 1 (k={k}, r={r})"),
            OptimalClass::ShortenedHamming { g } => write!(f, "class 2 (g={g})"),
            OptimalClass::PairedRepetition { k } => write!(f, "class 3 (k={k})"),
            OptimalClass::Length8Distance6 => write!(f, "class 4"),
            OptimalClass::NearMds { n, k } => write!(f, "class 5 ([{n},{k},{}])", n - k),
            OptimalClass::WeightFourBlocks { l } => write!(f, "class 6 (l={l})"),
            OptimalClass::WeightThreeBlocks { l } => write!(f, "class 7 (l={l})"),
            OptimalClass::Length12Distance6 => write!(f, "class 8"),
        }
    }
}

/// Builds the code for a class parameter point.
pub fn construct(class: &OptimalClass) -> Result<LinearCode> {
    class.validate()?;
    match *class {
        OptimalClass::SingleParityBlocks { k, r } => single_parity_blocks(k, r),
        OptimalClass::ShortenedHamming { g } => shortened_hamming(g),
        OptimalClass::PairedRepetition { k } => paired_repetition(k),
        OptimalClass::Length8Distance6 => length8_distance6(),
        OptimalClass::NearMds { n, k } => near_mds(n, k),
        OptimalClass::WeightFourBlocks { l } => weight_four_blocks(l),
        OptimalClass::WeightThreeBlocks { l } => weight_three_blocks(l),
        OptimalClass::Length12Distance6 => length12_distance6(),
    }
}

/// One instance per class at its smallest parameters, with every class-2
/// shortening and every near-MDS code: 27 in total.
pub fn table_instances() -> Vec<OptimalClass> {
    let mut out = vec![OptimalClass::SingleParityBlocks { k: 2, r: 1 }];
    out.extend((0..=4).map(|g| OptimalClass::ShortenedHamming { g }));
    out.push(OptimalClass::PairedRepetition { k: 2 });
    out.push(OptimalClass::Length8Distance6);
    out.extend(
        NEAR_MDS_PARAMS
            .iter()
            .map(|&(n, k)| OptimalClass::NearMds { n, k }),
    );
    out.push(OptimalClass::WeightFourBlocks { l: 3 });
    out.push(OptimalClass::WeightThreeBlocks { l: 3 });
    out.push(OptimalClass::Length12Distance6);
    out
}

fn fixed<const R: usize, const C: usize>(rows: &[[u8; C]; R]) -> Gf3Matrix {
    Gf3Matrix::from_digits(rows).expect("literal matrices hold GF(3) digits")
}

fn from_h(h: &Gf3Matrix) -> Result<LinearCode> {
    LinearCode::from_parity_check(h)
}

/// `I_{ceil(k/r)} ⊗ (1 ... 1)` with blocks of width `r + 1`; when `r ∤ k`
/// the last `r - (k mod r)` columns are dropped, leaving a short last block.
pub fn single_parity_blocks(k: usize, r: usize) -> Result<LinearCode> {
    OptimalClass::SingleParityBlocks { k, r }.validate()?;
    let blocks = k.div_ceil(r);
    let full = Gf3Matrix::identity(blocks).kronecker(&Gf3Matrix::ones_row(r + 1));
    let n = k + blocks;
    let dropped: Vec<usize> = (n..full.cols()).collect();
    from_h(&full.delete_columns(&dropped))
}

/// The Hamming matrix with its first `g` columns deleted (a shortening).
pub fn shortened_hamming(g: usize) -> Result<LinearCode> {
    OptimalClass::ShortenedHamming { g }.validate()?;
    let h = fixed(&HAMMING_13_10);
    from_h(&h.delete_columns(&(0..g).collect::<Vec<_>>()))
}

/// `[I_{k+1} ⊗ (1 1); (1 ... 1) ⊗ (0 1)]`.
pub fn paired_repetition(k: usize) -> Result<LinearCode> {
    OptimalClass::PairedRepetition { k }.validate()?;
    let top = Gf3Matrix::identity(k + 1).kronecker(&Gf3Matrix::ones_row(2));
    let bottom = Gf3Matrix::ones_row(k + 1).kronecker(&Gf3Matrix::from_digits(&[[0, 1]])?);
    from_h(&top.vstack(&bottom)?)
}

pub fn length8_distance6() -> Result<LinearCode> {
    from_h(&fixed(&PAIRED_8_2))
}

/// `[12,6]` is the extended QR code itself; the other fifteen come from it
/// by the puncture/shorten steps stored in the fixture file.
pub fn near_mds(n: usize, k: usize) -> Result<LinearCode> {
    OptimalClass::NearMds { n, k }.validate()?;
    let base = from_h(&fixed(&EXTENDED_QR_12_6))?;
    if (n, k) == (12, 6) {
        return Ok(base);
    }
    let fixtures = near_mds_fixtures()?;
    let steps = fixtures
        .iter()
        .find(|f| (f.n, f.k) == (n, k))
        .ok_or_else(|| Error::InvalidParameters(format!("no fixture for [{n},{k}]")))?;
    apply_steps(&base, &steps.steps)
}

/// `[I_l ⊗ (1 1 1 1); (1 ... 1) ⊗ (0 0 1 1; 0 1 0 1)]`.
pub fn weight_four_blocks(l: usize) -> Result<LinearCode> {
    OptimalClass::WeightFourBlocks { l }.validate()?;
    let top = Gf3Matrix::identity(l).kronecker(&Gf3Matrix::ones_row(4));
    let tail = Gf3Matrix::from_digits(&[[0, 0, 1, 1], [0, 1, 0, 1]])?;
    let bottom = Gf3Matrix::ones_row(l).kronecker(&tail);
    from_h(&top.vstack(&bottom)?)
}

/// `[I_l ⊗ (1 1 1); (1 ... 1) ⊗ (0 1 2)]`.
pub fn weight_three_blocks(l: usize) -> Result<LinearCode> {
    OptimalClass::WeightThreeBlocks { l }.validate()?;
    let top = Gf3Matrix::identity(l).kronecker(&Gf3Matrix::ones_row(3));
    let bottom = Gf3Matrix::ones_row(l).kronecker(&Gf3Matrix::from_digits(&[[0, 1, 2]])?);
    from_h(&top.vstack(&bottom)?)
}

pub fn length12_distance6() -> Result<LinearCode> {
    from_h(&fixed(&LENGTH12_DISTANCE6))
}

/// A coordinate operation; positions are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Puncture(usize),
    Shorten(usize),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Puncture(p) => write!(f, "puncture({p})"),
            Step::Shorten(p) => write!(f, "shorten({p})"),
        }
    }
}

/// Steps producing the `[n, k]` near-MDS code from the `[12,6]` one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFixture {
    pub n: usize,
    pub k: usize,
    pub steps: Vec<Step>,
}

impl fmt::Display for StepFixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} :", self.n, self.k)?;
        for s in &self.steps {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

pub fn apply_steps(code: &LinearCode, steps: &[Step]) -> Result<LinearCode> {
    steps.iter().try_fold(code.clone(), |c, step| match *step {
        Step::Puncture(p) if p >= 1 => c.puncture(&[p - 1]),
        Step::Shorten(p) if p >= 1 => c.shorten(&[p - 1]),
        _ => Err(Error::InvalidParameters("positions are 1-based".into())),
    })
}

/// Parses the `n k : op(pos) ...` fixture format; `#` starts a comment line.
pub fn parse_step_fixtures(text: &str) -> Result<Vec<StepFixture>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| err("missing ':'".into()))?;
        let nums: Vec<usize> = head
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err(format!("bad integer '{t}'"))))
            .collect::<Result<_>>()?;
        let [n, k] = nums[..] else {
            return Err(err("expected 'n k' before ':'".into()));
        };
        let steps = tail
            .split_whitespace()
            .map(|tok| {
                let (op, rest) = tok
                    .split_once('(')
                    .ok_or_else(|| err(format!("bad step '{tok}'")))?;
                let pos: usize = rest
                    .strip_suffix(')')
                    .and_then(|p| p.parse().ok())
                    .filter(|&p| p >= 1)
                    .ok_or_else(|| err(format!("bad position in '{tok}'")))?;
                match op {
                    "puncture" => Ok(Step::Puncture(pos)),
                    "shorten" => Ok(Step::Shorten(pos)),
                    _ => Err(err(format!("unknown operation '{op}'"))),
                }
            })
            .collect::<Result<_>>()?;
        out.push(StepFixture { n, k, steps });
    }
    Ok(out)
}

/// The stored near-MDS derivation steps.
pub fn near_mds_fixtures() -> Result<Vec<StepFixture>> {
    parse_step_fixtures(NEAR_MDS_FIXTURE)
}

/// True iff `code` is an `[n, k, n-k]` near-MDS code with locality exactly
/// `k - 1`.
pub fn is_near_mds_optimal(code: &LinearCode) -> Result<bool> {
    let (n, k) = (code.n(), code.k());
    if k < 2 || code.min_distance()? != n - k {
        return Ok(false);
    }
    if code_locality(code)?.code_locality() != k - 1 {
        return Ok(false);
    }
    code.is_near_mds()
}

/// First step sequence (lexicographic: all punctures by position, then all
/// shortenings by position) taking the `[12,6]` code to an `[n, k]` code
/// accepted by [`is_near_mds_optimal`]. Every sequence reaching `[n, k]` has
/// `12 - n` steps, `6 - k` of them shortenings, so depth-first search in
/// this order returns the breadth-first answer.
pub fn derive_near_mds_steps(n: usize, k: usize) -> Result<Option<Vec<Step>>> {
    OptimalClass::NearMds { n, k }.validate()?;
    let base = from_h(&fixed(&EXTENDED_QR_12_6))?;
    let shortens = 6 - k;
    let punctures = (12 - n) - shortens;
    let mut steps = Vec::new();
    derive_dfs(&base, punctures, shortens, &mut steps)
}

fn derive_dfs(
    code: &LinearCode,
    punctures: usize,
    shortens: usize,
    steps: &mut Vec<Step>,
) -> Result<Option<Vec<Step>>> {
    if punctures == 0 && shortens == 0 {
        return Ok(is_near_mds_optimal(code)?.then(|| steps.clone()));
    }
    let mut options = Vec::new();
    if punctures > 0 {
        options.extend((1..=code.n()).map(Step::Puncture));
    }
    if shortens > 0 {
        options.extend((1..=code.n()).map(Step::Shorten));
    }
    for step in options {
        let next = apply_steps(code, &[step])?;
        let (p, s) = match step {
            Step::Puncture(_) => (punctures - 1, shortens),
            Step::Shorten(_) => (punctures, shortens - 1),
        };
        // a puncture that loses dimension or a shortening that keeps it
        // cannot lead to the target
        let expected_k = code.k() - usize::from(matches!(step, Step::Shorten(_)));
        if next.k() != expected_k {
            continue;
        }
        steps.push(step);
        if let Some(found) = derive_dfs(&next, p, s, steps)? {
            return Ok(Some(found));
        }
        steps.pop();
    }
    Ok(None)
}
